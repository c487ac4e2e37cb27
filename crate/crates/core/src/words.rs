//! Exact arithmetic in the free group on the basis `x[i,j]`
//! (`1 <= i <= n-1`, `1 <= j <= d-1`) and in its automorphism group.
//!
//! Words are always stored freely reduced. The redundant loop `x[i,d]` is
//! never stored: constructors expand it to `(x[i,1] * ... * x[i,d-1])^-1`, so
//! two words are equal in the free group iff they are equal as values.
//!
//! Products are read left to right with the left factor applied first:
//! [`FreeAutomorphism::compose`]`(f, g)` sends a generator `s` to
//! `g(f(s))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::params::Params;

/// Basis generator `x[i,j]` with `1 <= i <= n-1`, `1 <= j <= d-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSymbol {
    i: usize,
    j: usize,
}

impl GeneratorSymbol {
    pub fn new(params: &Params, i: usize, j: usize) -> Result<Self> {
        params.check_gap("i", i)?;
        if !(1..params.d()).contains(&j) {
            return Err(Error::range("j", j as i64, 1, params.d() as i64 - 1));
        }
        Ok(GeneratorSymbol { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// Position of this generator in `(i, j)` order.
    pub fn index(&self, params: &Params) -> usize {
        (self.i - 1) * (params.d() - 1) + (self.j - 1)
    }

    /// All basis generators in `(i, j)` order.
    pub fn all(params: &Params) -> impl Iterator<Item = GeneratorSymbol> {
        let (d, n) = (params.d(), params.n());
        (1..n).flat_map(move |i| (1..d).map(move |j| GeneratorSymbol { i, j }))
    }

    fn is_valid_for(&self, params: &Params) -> bool {
        (1..params.n()).contains(&self.i) && (1..params.d()).contains(&self.j)
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.i, self.j)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub symbol: GeneratorSymbol,
    pub inverse: bool,
}

impl Letter {
    pub fn new(symbol: GeneratorSymbol, inverse: bool) -> Self {
        Letter { symbol, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            symbol: self.symbol,
            inverse: !self.inverse,
        }
    }

    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn cancels(&self, other: &Letter) -> bool {
        self.symbol == other.symbol && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.symbol)
        } else {
            write!(f, "{}", self.symbol)
        }
    }
}

pub(crate) fn push_reduced(buf: &mut Vec<Letter>, letter: Letter) {
    if buf.last().is_some_and(|last| last.cancels(&letter)) {
        buf.pop();
    } else {
        buf.push(letter);
    }
}

/// A freely reduced element of `F_{(d-1)(n-1)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    params: Params,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(params: Params) -> Self {
        Word {
            params,
            letters: Vec::new(),
        }
    }

    /// The loop `x[i,j]` with `j` read modulo `d`; `j ≡ 0` expands to
    /// `(x[i,1] * ... * x[i,d-1])^-1`.
    pub fn generator(params: Params, i: usize, j: i64) -> Result<Self> {
        params.check_gap("i", i)?;
        let j = params.wrap_sheet(j);
        let letters = if j == params.d() {
            (1..params.d())
                .rev()
                .map(|t| Letter::new(GeneratorSymbol { i, j: t }, true))
                .collect()
        } else {
            vec![Letter::new(GeneratorSymbol { i, j }, false)]
        };
        Ok(Word { params, letters })
    }

    /// `x[i,j]^sign` for `sign` = ±1.
    pub fn generator_pow(params: Params, i: usize, j: i64, inverse: bool) -> Result<Self> {
        let w = Self::generator(params, i, j)?;
        Ok(if inverse { w.inverse() } else { w })
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce(params: Params, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut buf = Vec::new();
        for letter in letters {
            if !letter.symbol.is_valid_for(&params) {
                return Err(
                    GeneratorSymbol::new(&params, letter.symbol.i, letter.symbol.j).expect_err("invalid symbol")
                );
            }
            push_reduced(&mut buf, letter);
        }
        Ok(Word { params, letters: buf })
    }

    /// Caller guarantees every letter is valid for `params`.
    pub(crate) fn from_reduced_unchecked(params: Params, letters: Vec<Letter>) -> Self {
        Word { params, letters }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.params.ensure_same(&other.params)?;
        let mut buf = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut buf, l);
        }
        self.params.check_budget(buf.len())?;
        Ok(Word {
            params: self.params,
            letters: buf,
        })
    }

    pub fn inverse(&self) -> Word {
        Word {
            params: self.params,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `by^-1 * self * by`.
    pub fn conjugate(&self, by: &Word) -> Result<Word> {
        by.inverse().multiply(self)?.multiply(by)
    }

    /// Signed count of each generator, indexed in `(i, j)` order.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.params.rank()];
        for l in &self.letters {
            sums[l.symbol.index(&self.params)] += l.sign();
        }
        sums
    }

    /// Parses `x[i,j]` tokens (optionally `^-1`) joined by `*`; `1` is the
    /// empty word. Second indices are read modulo `d`.
    pub fn parse(params: Params, text: &str) -> Result<Word> {
        let trimmed = text.trim();
        if trimmed == "1" || trimmed.is_empty() {
            return Ok(Word::identity(params));
        }
        let mut buf = Vec::new();
        for token in trimmed.split('*') {
            let (i, j, inverse) = parse_indexed_token(token, "x", text)?;
            let i = usize::try_from(i).map_err(|_| Error::range("i", i, 1, params.n() as i64 - 1))?;
            let w = Word::generator_pow(params, i, j, inverse)?;
            for &l in w.letters() {
                push_reduced(&mut buf, l);
            }
        }
        params.check_budget(buf.len())?;
        Ok(Word { params, letters: buf })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `<prefix>[a,b]` with an optional `^-1` suffix.
pub(crate) fn parse_indexed_token(token: &str, prefix: &str, input: &str) -> Result<(i64, i64, bool)> {
    let token = token.trim();
    let (body, inverse) = match token.strip_suffix("^-1") {
        Some(rest) => (rest.trim_end(), true),
        None => (token, false),
    };
    let inner = body
        .strip_prefix(prefix)
        .and_then(|s| s.strip_prefix('['))
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::parse(input, format!("malformed token {token:?}")))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| Error::parse(input, format!("expected two indices in {token:?}")))?;
    let a = i64::from_str(a.trim()).map_err(|e| Error::parse(input, e.to_string()))?;
    let b = i64::from_str(b.trim()).map_err(|e| Error::parse(input, e.to_string()))?;
    Ok((a, b, inverse))
}

/// An endomorphism of the free group given by the image of every basis
/// generator. Equality is literal equality of reduced images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAutomorphism {
    params: Params,
    images: Vec<Word>,
}

impl FreeAutomorphism {
    pub fn identity(params: Params) -> Self {
        let images = GeneratorSymbol::all(&params)
            .map(|s| Word::from_reduced_unchecked(params, vec![Letter::new(s, false)]))
            .collect();
        FreeAutomorphism { params, images }
    }

    /// Images listed in `(i, j)` generator order.
    pub fn from_images(params: Params, images: Vec<Word>) -> Result<Self> {
        if images.len() != params.rank() {
            return Err(Error::ImageCount {
                expected: params.rank(),
                found: images.len(),
            });
        }
        for w in &images {
            params.ensure_same(w.params())?;
        }
        Ok(FreeAutomorphism { params, images })
    }

    pub fn from_fn(params: Params, mut image: impl FnMut(GeneratorSymbol) -> Result<Word>) -> Result<Self> {
        let images = GeneratorSymbol::all(&params)
            .map(&mut image)
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(params, images)
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn image(&self, s: GeneratorSymbol) -> &Word {
        &self.images[s.index(&self.params)]
    }

    /// `(generator, image)` pairs in `(i, j)` order.
    pub fn images(&self) -> impl Iterator<Item = (GeneratorSymbol, &Word)> {
        GeneratorSymbol::all(&self.params).zip(self.images.iter())
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.params.ensure_same(w.params())?;
        self.apply_letters(w.letters())
    }

    fn apply_letters(&self, letters: &[Letter]) -> Result<Word> {
        let mut buf = Vec::new();
        for l in letters {
            let img = &self.images[l.symbol.index(&self.params)].letters;
            if l.inverse {
                for &m in img.iter().rev() {
                    push_reduced(&mut buf, m.inv());
                }
            } else {
                for &m in img {
                    push_reduced(&mut buf, m);
                }
            }
            self.params.check_budget(buf.len())?;
        }
        Ok(Word::from_reduced_unchecked(self.params, buf))
    }

    /// `self` first, then `then`.
    pub fn compose(&self, then: &FreeAutomorphism) -> Result<FreeAutomorphism> {
        self.params.ensure_same(&then.params)?;
        let images = self
            .images
            .iter()
            .map(|w| then.apply_letters(w.letters()))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeAutomorphism {
            params: self.params,
            images,
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == FreeAutomorphism::identity(self.params)
    }

    /// First generator, in `(i, j)` order, whose images differ.
    pub fn first_difference(&self, other: &FreeAutomorphism) -> Option<GeneratorSymbol> {
        if self.params != other.params {
            return GeneratorSymbol::all(&self.params).next();
        }
        GeneratorSymbol::all(&self.params)
            .zip(self.images.iter().zip(&other.images))
            .find(|(_, (a, b))| a != b)
            .map(|(s, _)| s)
    }

    /// Row `s` holds the exponent sums of the image of generator `s`, so
    /// `compose(f, g)` abelianizes to `abelianize(f) * abelianize(g)`.
    pub fn abelianize(&self) -> IntMatrix {
        let rank = self.params.rank();
        let mut m = IntMatrix::zeros(rank);
        for (row, w) in self.images.iter().enumerate() {
            for (col, v) in w.exponent_sums().into_iter().enumerate() {
                m.set(row, col, v);
            }
        }
        m
    }
}

impl fmt::Display for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, w) in self.images() {
            writeln!(f, "{s} -> {w}")?;
        }
        Ok(())
    }
}
