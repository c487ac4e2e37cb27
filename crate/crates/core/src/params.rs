use crate::error::{Error, Result};

/// Cover degree `d` and number of branch points `n`.
///
/// Also carries the letter budget that bounds every word and path produced
/// under these parameters. Equality compares `(d, n)` only.
#[derive(Clone, Copy, Debug)]
pub struct Params {
    d: usize,
    n: usize,
    letter_budget: usize,
}

impl Params {
    pub const DEFAULT_LETTER_BUDGET: usize = 1_000_000;

    /// Requires `d >= 2` and `n >= 2`.
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::range("d", d as i64, 2, i64::MAX));
        }
        if n < 2 {
            return Err(Error::range("n", n as i64, 2, i64::MAX));
        }
        Ok(Params {
            d,
            n,
            letter_budget: Self::DEFAULT_LETTER_BUDGET,
        })
    }

    pub fn with_letter_budget(mut self, budget: usize) -> Self {
        self.letter_budget = budget;
        self
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letter_budget(&self) -> usize {
        self.letter_budget
    }

    /// Rank of the free group, `(d-1)(n-1)`.
    pub fn rank(&self) -> usize {
        (self.d - 1) * (self.n - 1)
    }

    /// Validates a strand-gap index `1 <= i <= n-1`.
    pub fn check_gap(&self, name: &'static str, i: usize) -> Result<()> {
        if (1..self.n).contains(&i) {
            Ok(())
        } else {
            Err(Error::range(name, i as i64, 1, self.n as i64 - 1))
        }
    }

    /// Reduces a sheet index modulo `d` into `1..=d`.
    pub fn wrap_sheet(&self, j: i64) -> usize {
        (j - 1).rem_euclid(self.d as i64) as usize + 1
    }

    pub(crate) fn ensure_same(&self, other: &Params) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ParamMismatch {
                left: (self.d, self.n),
                right: (other.d, other.n),
            })
        }
    }

    pub(crate) fn check_budget(&self, len: usize) -> Result<()> {
        if len > self.letter_budget {
            Err(Error::BudgetExceeded {
                len,
                budget: self.letter_budget,
            })
        } else {
            Ok(())
        }
    }
}

impl PartialEq for Params {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.n == other.n
    }
}

impl Eq for Params {}
