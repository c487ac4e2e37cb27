//! The representation `B_n -> Aut F_{(d-1)(n-1)}`, `sigma_i -> beta_i`.
//!
//! `beta_i` has three independent constructions here: the closed-form
//! generator images, the same images written with the loops `y[i,j]`, and
//! the automorphism induced by the lifted half twist on the covering
//! groupoid. Inverses come from the groupoid side only.

use std::fmt;

use crate::error::{Error, Result};
use crate::groupoid::{dehn_twist, inverse_lift_beta, GroupoidFunctor};
use crate::matrix::IntMatrix;
use crate::params::Params;
use crate::pi1::functor_to_automorphism;
use crate::words::{FreeAutomorphism, Word};

/// `sigma_index` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn inv(self) -> Self {
        BraidLetter {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    params: Params,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(params: Params, letters: Vec<BraidLetter>) -> Result<Self> {
        for l in &letters {
            params.check_gap("i", l.index)?;
        }
        Ok(BraidWord { params, letters })
    }

    /// From signed indices: `[1, 2, -1]` is `sigma_1 sigma_2 sigma_1^-1`.
    pub fn from_signed(params: Params, signed: &[i64]) -> Result<Self> {
        let letters = signed
            .iter()
            .map(|&s| {
                if s == 0 {
                    return Err(Error::range("i", 0, 1, params.n() as i64 - 1));
                }
                Ok(BraidLetter {
                    index: s.unsigned_abs() as usize,
                    inverse: s < 0,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(params, letters)
    }

    /// Whitespace-separated signed generator indices, e.g. `"1 2 -1"`.
    pub fn parse(params: Params, text: &str) -> Result<Self> {
        let signed = text
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|e| Error::parse(text, format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_signed(params, &signed)
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reversed with every sign flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            params: self.params,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.params.ensure_same(&other.params)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            params: self.params,
            letters,
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("-{}", l.index)
                } else {
                    l.index.to_string()
                }
            })
            .collect();
        f.write_str(&tokens.join(" "))
    }
}

/// Product of `x[i, j]^±1` factors; sheets are read modulo `d`.
fn product(params: Params, factors: impl IntoIterator<Item = (usize, i64, bool)>) -> Result<Word> {
    factors
        .into_iter()
        .try_fold(Word::identity(params), |acc, (i, j, inv)| {
            acc.multiply(&Word::generator_pow(params, i, j, inv)?)
        })
}

/// The closed-form action of `beta_i`:
///
/// ```text
/// x[i-1,j] -> x[i-1,j-1]^-1 ... x[i-1,1]^-1 * x[i,j+1] * x[i-1,1] ... x[i-1,j]
/// x[i,j]   -> x[i,2] ... x[i,j] * x[i,j+1]^-1 ... x[i,2]^-1
/// x[i+1,j] -> x[i,j-1]^-1 ... x[i,1]^-1 * x[i+1,j] * x[i,1] ... x[i,j]
/// ```
///
/// Rows `i-1 = 0` and `i+1 = n` do not exist and are skipped; every other
/// generator is fixed.
pub fn beta_tilde_formula(params: Params, i: usize) -> Result<FreeAutomorphism> {
    params.check_gap("i", i)?;
    FreeAutomorphism::from_fn(params, |s| {
        let (k, j) = (s.i(), s.j() as i64);
        if k + 1 == i {
            product(
                params,
                (1..j)
                    .rev()
                    .map(|t| (k, t, true))
                    .chain([(i, j + 1, false)])
                    .chain((1..=j).map(|t| (k, t, false))),
            )
        } else if k == i {
            product(
                params,
                (2..=j)
                    .map(|t| (i, t, false))
                    .chain((2..=j + 1).rev().map(|t| (i, t, true))),
            )
        } else if k == i + 1 {
            product(
                params,
                (1..j)
                    .rev()
                    .map(|t| (i, t, true))
                    .chain([(k, j, false)])
                    .chain((1..=j).map(|t| (i, t, false))),
            )
        } else {
            Word::generator(params, k, j)
        }
    })
}

/// `y[k,j] = x[k,1] * ... * x[k,j-1]`, `j` read modulo `d`.
pub fn loop_y_word(params: Params, k: usize, j: i64) -> Result<Word> {
    let j = params.wrap_sheet(j) as i64;
    product(params, (1..j).map(|t| (k, t, false)))
}

fn conjugate_form_unchecked(params: Params, i: usize) -> Result<FreeAutomorphism> {
    params.check_gap("i", i)?;
    let y = |k, j| loop_y_word(params, k, j);
    let x = |k, j| Word::generator(params, k, j);
    FreeAutomorphism::from_fn(params, |s| {
        let (k, j) = (s.i(), s.j() as i64);
        if k + 1 == i {
            y(k, j)?.inverse().multiply(&x(i, j + 1)?)?.multiply(&y(k, j + 1)?)
        } else if k == i {
            let x1 = x(i, 1)?;
            x1.inverse()
                .multiply(&y(i, j + 1)?)?
                .multiply(&y(i, j + 2)?.inverse())?
                .multiply(&x1)
        } else if k == i + 1 {
            y(i, j)?.inverse().multiply(&x(k, j)?)?.multiply(&y(i, j + 1)?)
        } else {
            x(k, j)
        }
    })
}

/// The action of `beta_i` written with the loops `y`:
///
/// ```text
/// x[i-1,j] -> y[i-1,j]^-1 * x[i,j+1] * y[i-1,j+1]
/// x[i,j]   -> x[i,1]^-1 * y[i,j+1] * y[i,j+2]^-1 * x[i,1]
/// x[i+1,j] -> y[i,j]^-1 * x[i+1,j] * y[i,j+1]
/// ```
///
/// Fails with [`Error::FormMismatch`] if it disagrees with
/// [`beta_tilde_formula`].
pub fn beta_tilde_conjugate_form(params: Params, i: usize) -> Result<FreeAutomorphism> {
    let conj = conjugate_form_unchecked(params, i)?;
    let closed = beta_tilde_formula(params, i)?;
    match conj.first_difference(&closed) {
        None => Ok(conj),
        Some(s) => Err(Error::FormMismatch {
            i,
            generator: s.to_string(),
        }),
    }
}

pub(crate) fn conjugate_form_for_cross_check(params: Params, i: usize) -> Result<FreeAutomorphism> {
    conjugate_form_unchecked(params, i)
}

/// `beta_i^-1`, induced by the inverse lift on the groupoid.
pub fn beta_tilde_inverse(params: Params, i: usize) -> Result<FreeAutomorphism> {
    functor_to_automorphism(&inverse_lift_beta(params, i)?)
}

/// The Dehn twist product `D[x(i,2)] · D[x(i,3)] ··· D[x(i,d)]` on the
/// groupoid, with the product read as composition of maps: `D[x(i,d)]` acts
/// first and `D[x(i,2)]` last.
pub fn dehn_product_functor(params: Params, i: usize) -> Result<GroupoidFunctor> {
    params.check_gap("i", i)?;
    let d = params.d() as i64;
    let mut acc = dehn_twist(params, i, d)?;
    for j in (2..d).rev() {
        acc = acc.compose(&dehn_twist(params, i, j)?)?;
    }
    Ok(acc)
}

/// The automorphism induced by [`dehn_product_functor`].
pub fn dehn_product(params: Params, i: usize) -> Result<FreeAutomorphism> {
    functor_to_automorphism(&dehn_product_functor(params, i)?)
}

/// `beta_i` and `beta_i^-1` for every `i`, ready for repeated evaluation.
#[derive(Clone, Debug)]
pub struct Representation {
    params: Params,
    forward: Vec<FreeAutomorphism>,
    backward: Vec<FreeAutomorphism>,
}

impl Representation {
    pub fn new(params: Params) -> Result<Self> {
        let gaps = 1..params.n();
        let forward = gaps
            .clone()
            .map(|i| beta_tilde_formula(params, i))
            .collect::<Result<_>>()?;
        let backward = gaps.map(|i| beta_tilde_inverse(params, i)).collect::<Result<_>>()?;
        Ok(Representation {
            params,
            forward,
            backward,
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn generator(&self, letter: BraidLetter) -> &FreeAutomorphism {
        let table = if letter.inverse { &self.backward } else { &self.forward };
        &table[letter.index - 1]
    }

    /// Left-to-right product: `sigma_1 sigma_2` applies `beta_1` first.
    pub fn evaluate(&self, word: &BraidWord) -> Result<FreeAutomorphism> {
        self.params.ensure_same(word.params())?;
        word.letters()
            .iter()
            .try_fold(FreeAutomorphism::identity(self.params), |acc, &l| {
                acc.compose(self.generator(l))
            })
    }

    pub fn matrix(&self, word: &BraidWord) -> Result<IntMatrix> {
        Ok(self.evaluate(word)?.abelianize())
    }
}

pub fn evaluate(word: &BraidWord) -> Result<FreeAutomorphism> {
    Representation::new(*word.params())?.evaluate(word)
}

pub fn matrix(word: &BraidWord) -> Result<IntMatrix> {
    Ok(evaluate(word)?.abelianize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::GroupoidFunctor;
    use crate::words::GeneratorSymbol;

    fn p(d: usize, n: usize) -> Params {
        Params::new(d, n).unwrap()
    }

    fn sym(q: &Params, i: usize, j: usize) -> GeneratorSymbol {
        GeneratorSymbol::new(q, i, j).unwrap()
    }

    fn img(f: &FreeAutomorphism, i: usize, j: usize) -> String {
        f.image(sym(f.params(), i, j)).to_string()
    }

    #[test]
    fn formula_examples() {
        let q = p(3, 2);
        let b = beta_tilde_formula(q, 1).unwrap();
        assert_eq!(img(&b, 1, 1), "x[1,2]^-1");
        // x[1,2] * x[1,3]^-1 * x[1,2]^-1 with x[1,3]^-1 = x[1,1] * x[1,2]
        assert_eq!(img(&b, 1, 2), "x[1,2]*x[1,1]");
        let q = p(3, 3);
        let b = beta_tilde_formula(q, 1).unwrap();
        assert_eq!(img(&b, 2, 1), "x[2,1]*x[1,1]");
        assert!(beta_tilde_formula(q, 3).is_err());
    }

    #[test]
    fn conjugate_form_examples() {
        let q = p(3, 3);
        let c = beta_tilde_conjugate_form(q, 2).unwrap();
        assert_eq!(img(&c, 1, 1), "x[2,2]*x[1,1]");
        let q = p(4, 6);
        let c = beta_tilde_conjugate_form(q, 2).unwrap();
        for j in 1..4 {
            assert_eq!(img(&c, 5, j), format!("x[5,{j}]"));
            assert_eq!(img(&c, 4, j), format!("x[4,{j}]"));
        }
    }

    #[test]
    fn exponent_form_agrees() {
        // x[i-1,j] -> x[i,j+1]^{y[i-1,j]} * x[i-1,j], and so on, with u^v = v^-1 u v.
        for d in 2..6 {
            for n in 2..6 {
                let q = p(d, n);
                for i in 1..n {
                    let closed = beta_tilde_formula(q, i).unwrap();
                    for s in GeneratorSymbol::all(&q) {
                        let (k, j) = (s.i(), s.j() as i64);
                        let x = |a, b| Word::generator(q, a, b).unwrap();
                        let y = |a, b| loop_y_word(q, a, b).unwrap();
                        let expected = if k + 1 == i {
                            x(i, j + 1).conjugate(&y(k, j)).unwrap().multiply(&x(k, j)).unwrap()
                        } else if k == i {
                            let by = y(i, j + 1).inverse().multiply(&x(i, 1)).unwrap();
                            x(i, j + 1).inverse().conjugate(&by).unwrap()
                        } else if k == i + 1 {
                            x(k, j).conjugate(&y(i, j)).unwrap().multiply(&x(i, j)).unwrap()
                        } else {
                            x(k, j)
                        };
                        assert_eq!(closed.image(s), &expected, "d={d} n={n} i={i} {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        let q = p(3, 3);
        let rep = Representation::new(q).unwrap();
        let w = BraidWord::parse(q, "1 -1").unwrap();
        assert!(rep.evaluate(&w).unwrap().is_identity());
        assert!(rep.evaluate(&BraidWord::parse(q, "").unwrap()).unwrap().is_identity());
        let aba = rep.evaluate(&BraidWord::parse(q, "1 2 1").unwrap()).unwrap();
        let bab = rep.evaluate(&BraidWord::parse(q, "2 1 2").unwrap()).unwrap();
        assert_eq!(aba, bab);
        let q = p(3, 4);
        let rep = Representation::new(q).unwrap();
        let ac = rep.evaluate(&BraidWord::parse(q, "1 3").unwrap()).unwrap();
        let ca = rep.evaluate(&BraidWord::parse(q, "3 1").unwrap()).unwrap();
        assert_eq!(ac, ca);
    }

    #[test]
    fn braid_word_parsing() {
        let q = p(3, 4);
        let w = BraidWord::parse(q, " 1  2 -1 ").unwrap();
        assert_eq!(w.to_string(), "1 2 -1");
        assert_eq!(w.inverse().to_string(), "1 -2 -1");
        assert!(matches!(
            BraidWord::parse(q, "4"),
            Err(Error::OutOfRange { name: "i", .. })
        ));
        assert!(BraidWord::parse(q, "0").is_err());
        assert!(matches!(BraidWord::parse(q, "1 a"), Err(Error::Parse { .. })));
    }

    #[test]
    fn matrix_examples() {
        let q = p(3, 2);
        let m = matrix(&BraidWord::parse(q, "1").unwrap()).unwrap();
        assert_eq!(m.rows(), vec![vec![0, -1], vec![1, 1]]);
        assert_eq!(
            matrix(&BraidWord::parse(q, "").unwrap()).unwrap(),
            IntMatrix::identity(2)
        );
        let q = p(3, 3);
        let a = matrix(&BraidWord::parse(q, "1 2 1").unwrap()).unwrap();
        let b = matrix(&BraidWord::parse(q, "2 1 2").unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn two_fold_dehn_product_is_single_twist() {
        let q = p(2, 4);
        for i in 1..4 {
            assert_eq!(dehn_product_functor(q, i).unwrap(), dehn_twist(q, i, 2).unwrap());
            assert_eq!(dehn_product(q, i).unwrap(), beta_tilde_formula(q, i).unwrap());
        }
    }

    #[test]
    fn dehn_product_is_local() {
        let q = p(4, 6);
        let f = dehn_product(q, 2).unwrap();
        for k in [4, 5] {
            for j in 1..4 {
                assert_eq!(img(&f, k, j), format!("x[{k},{j}]"));
            }
        }
    }

    #[test]
    fn opposite_twist_order_differs_for_three_or_more_sheets() {
        // Composing the twists with D[x(i,2)] acting first gives a different
        // automorphism once d >= 3; the factorization needs D[x(i,d)] first.
        for d in 3..6 {
            let q = p(d, 3);
            for i in 1..3 {
                let mut acc = GroupoidFunctor::identity(q);
                for j in 2..=d as i64 {
                    acc = acc.compose(&dehn_twist(q, i, j).unwrap()).unwrap();
                }
                let wrong_order = functor_to_automorphism(&acc).unwrap();
                assert_ne!(wrong_order, beta_tilde_formula(q, i).unwrap());
                assert_eq!(dehn_product(q, i).unwrap(), beta_tilde_formula(q, i).unwrap());
            }
        }
    }

    #[test]
    fn inverse_matches_formula() {
        let q = p(4, 4);
        for i in 1..4 {
            let f = beta_tilde_formula(q, i).unwrap();
            let g = beta_tilde_inverse(q, i).unwrap();
            assert!(f.compose(&g).unwrap().is_identity());
            assert!(g.compose(&f).unwrap().is_identity());
            assert!(!f.is_identity());
        }
    }
}
