//! Verification sweeps over every gap index `i` for fixed `(d, n)`.
//!
//! A sweep never fails as a whole: construction errors and mismatches both
//! surface as failed [`Check`]s carrying a description of the first
//! difference.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::braid::{beta_tilde_formula, conjugate_form_for_cross_check, dehn_product, BraidWord, Representation};
use crate::error::{Error, Result};
use crate::groupoid::{inverse_lift_beta, lift_beta, verify_lift, GroupoidFunctor};
use crate::params::Params;
use crate::pi1::functor_to_automorphism;
use crate::words::FreeAutomorphism;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Dehn,
    Lift,
    Cross,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Dehn => "dehn",
            Suite::Lift => "lift",
            Suite::Cross => "cross",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relations" => Ok(Suite::Relations),
            "dehn" => Ok(Suite::Dehn),
            "lift" => Ok(Suite::Lift),
            "cross" => Ok(Suite::Cross),
            "all" => Ok(Suite::All),
            _ => Err(Error::parse(s, "expected one of relations, dehn, lift, cross, all")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub i: usize,
    /// Second gap index for two-generator identities.
    pub k: Option<usize>,
    pub identity: String,
    pub passed: bool,
    pub first_difference: Option<String>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} i={}", self.suite, self.i)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        write!(f, " {}", self.identity)?;
        if let Some(diff) = &self.first_difference {
            write!(f, " (first difference at {diff})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub d: usize,
    pub n: usize,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(params: &Params) -> Self {
        Report {
            d: params.d(),
            n: params.n(),
            checks: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn record(&mut self, suite: Suite, i: usize, k: Option<usize>, identity: &str, outcome: Result<Option<String>>) {
        let first_difference = match outcome {
            Ok(diff) => diff,
            Err(e) => Some(format!("error: {e}")),
        };
        self.checks.push(Check {
            suite,
            i,
            k,
            identity: identity.to_string(),
            passed: first_difference.is_none(),
            first_difference,
        });
    }

    fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        writeln!(
            f,
            "d={} n={}: {passed}/{} checks passed",
            self.d,
            self.n,
            self.checks.len()
        )
    }
}

fn aut_diff(a: &FreeAutomorphism, b: &FreeAutomorphism) -> Option<String> {
    a.first_difference(b)
        .map(|s| format!("{s}: {} vs {}", a.image(s), b.image(s)))
}

fn functor_diff(a: &GroupoidFunctor, b: &GroupoidFunctor) -> Option<String> {
    a.first_difference(b)
}

fn product(fs: &[&GroupoidFunctor]) -> Result<GroupoidFunctor> {
    let mut acc = fs[0].clone();
    for f in &fs[1..] {
        acc = acc.compose(f)?;
    }
    Ok(acc)
}

/// Adjacent braid relations and far commutations, at the groupoid level and
/// for the induced automorphisms, plus nontriviality of each `beta_i`.
pub fn check_braid_relations(params: Params) -> Report {
    let mut report = Report::new(&params);
    let suite = Suite::Relations;
    let n = params.n();
    let lifts: Vec<Result<GroupoidFunctor>> = (1..n).map(|i| lift_beta(params, i)).collect();
    let rep = Representation::new(params);
    let word = |signed: &[i64]| BraidWord::from_signed(params, signed);

    for i in 1..n {
        report.record(
            suite,
            i,
            None,
            "beta_i is not the identity",
            (|| {
                let b = beta_tilde_formula(params, i)?;
                Ok(b.is_identity().then(|| "beta_i acts trivially".to_string()))
            })(),
        );

        if i + 1 < n {
            report.record(
                suite,
                i,
                Some(i + 1),
                "functor braid relation",
                (|| {
                    let a = lifts[i - 1].as_ref().map_err(Clone::clone)?;
                    let b = lifts[i].as_ref().map_err(Clone::clone)?;
                    Ok(functor_diff(&product(&[a, b, a])?, &product(&[b, a, b])?))
                })(),
            );
            report.record(
                suite,
                i,
                Some(i + 1),
                "automorphism braid relation",
                (|| {
                    let rep = rep.as_ref().map_err(Clone::clone)?;
                    let (a, b) = (i as i64, i as i64 + 1);
                    let lhs = rep.evaluate(&word(&[a, b, a])?)?;
                    let rhs = rep.evaluate(&word(&[b, a, b])?)?;
                    Ok(aut_diff(&lhs, &rhs))
                })(),
            );
        }

        for k in i + 2..n {
            report.record(
                suite,
                i,
                Some(k),
                "functor far commutation",
                (|| {
                    let a = lifts[i - 1].as_ref().map_err(Clone::clone)?;
                    let b = lifts[k - 1].as_ref().map_err(Clone::clone)?;
                    Ok(functor_diff(&product(&[a, b])?, &product(&[b, a])?))
                })(),
            );
            report.record(
                suite,
                i,
                Some(k),
                "automorphism far commutation",
                (|| {
                    let rep = rep.as_ref().map_err(Clone::clone)?;
                    let lhs = rep.evaluate(&word(&[i as i64, k as i64])?)?;
                    let rhs = rep.evaluate(&word(&[k as i64, i as i64])?)?;
                    Ok(aut_diff(&lhs, &rhs))
                })(),
            );
        }
    }
    report
}

/// `beta_i` against the induced action of `D[x(i,2)] ··· D[x(i,d)]`.
pub fn check_thm_dehn(params: Params) -> Report {
    let mut report = Report::new(&params);
    for i in 1..params.n() {
        report.record(
            Suite::Dehn,
            i,
            None,
            "beta_i equals the Dehn twist product",
            (|| Ok(aut_diff(&dehn_product(params, i)?, &beta_tilde_formula(params, i)?)))(),
        );
    }
    report
}

/// Projection compatibility of each lift, and the inverse lift check.
pub fn check_lift(params: Params) -> Report {
    let mut report = Report::new(&params);
    for i in 1..params.n() {
        report.record(
            Suite::Lift,
            i,
            None,
            "lift covers the half twist",
            (|| Ok((!verify_lift(params, i)?).then(|| "projection does not commute".to_string())))(),
        );
        report.record(
            Suite::Lift,
            i,
            None,
            "inverse lift composes to the identity",
            inverse_lift_beta(params, i).map(|_| None),
        );
    }
    report
}

/// Closed form vs conjugate form vs groupoid-induced automorphism.
pub fn cross_validate(params: Params) -> Report {
    let mut report = Report::new(&params);
    for i in 1..params.n() {
        let closed = beta_tilde_formula(params, i);
        report.record(
            Suite::Cross,
            i,
            None,
            "closed form equals conjugate form",
            (|| {
                let closed = closed.as_ref().map_err(Clone::clone)?;
                Ok(aut_diff(closed, &conjugate_form_for_cross_check(params, i)?))
            })(),
        );
        report.record(
            Suite::Cross,
            i,
            None,
            "closed form equals groupoid action",
            (|| {
                let closed = closed.as_ref().map_err(Clone::clone)?;
                Ok(aut_diff(closed, &functor_to_automorphism(&lift_beta(params, i)?)?))
            })(),
        );
    }
    report
}

pub fn run_suite(params: Params, suite: Suite) -> Report {
    match suite {
        Suite::Relations => check_braid_relations(params),
        Suite::Dehn => check_thm_dehn(params),
        Suite::Lift => check_lift(params),
        Suite::Cross => cross_validate(params),
        Suite::All => {
            let mut report = check_braid_relations(params);
            report.extend(check_lift(params));
            report.extend(cross_validate(params));
            report.extend(check_thm_dehn(params));
            report
        }
    }
}
