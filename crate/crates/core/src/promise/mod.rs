//! Promise problems as three-valued total deciders, their difference
//! operators and marked union, and Karp / Cook reductions with
//! promise-respecting oracles.

mod decider;
mod oracle;
mod ops;
pub mod registry;
mod reduction;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::ratio;
use crate::word::Word;
use crate::{FieldElem, Rational};

pub use decider::{DeciderFn, Realization, TotalDecider};
pub use oracle::{cook_run, karp_to_cook, OracleMachine};
pub use ops::{differences, marked_union, Differences};
pub use reduction::{karp_check, KarpReport, KarpViolation, ReductionFn};

/// Three-valued verdict of a total decider.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Yes,
    No,
    OutsidePromise,
}

impl Verdict {
    /// Machine output token: `1`, `0` or `10`.
    pub fn output(self) -> Word {
        Word::from(match self {
            Verdict::Yes => "1",
            Verdict::No => "0",
            Verdict::OutsidePromise => "10",
        })
    }

    pub fn from_output(w: &Word) -> Option<Verdict> {
        match w.bits() {
            [true] => Some(Verdict::Yes),
            [false] => Some(Verdict::No),
            [true, false] => Some(Verdict::OutsidePromise),
            _ => None,
        }
    }

    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_promised(self) -> bool {
        self != Verdict::OutsidePromise
    }

    pub fn token(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::OutsidePromise => "outside-promise",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "yes" => Ok(Verdict::Yes),
            "no" => Ok(Verdict::No),
            "outside-promise" => Ok(Verdict::OutsidePromise),
            _ => Err(Error::Parse(format!("unknown verdict {s:?}"))),
        }
    }
}

/// Completeness and soundness cut-offs `(c, s)` with `c ≥ s`.
///
/// Comparisons are non-strict: `p ≥ c` is a yes, `p ≤ s` a no.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thresholds {
    c: Rational,
    s: Rational,
}

impl Thresholds {
    pub fn new(c: Rational, s: Rational) -> Result<Self> {
        if c < s {
            return Err(Error::InvalidThresholds {
                c: c.to_string(),
                s: s.to_string(),
            });
        }
        Ok(Thresholds { c, s })
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn classify(&self, p: &Rational) -> Verdict {
        if *p >= self.c {
            Verdict::Yes
        } else if *p <= self.s {
            Verdict::No
        } else {
            Verdict::OutsidePromise
        }
    }

    /// Exact trichotomy for a real field element.
    pub fn classify_field(&self, p: &FieldElem) -> Result<Verdict> {
        if (p - &FieldElem::from_rational(self.c.clone())).real_sign()? >= 0 {
            Ok(Verdict::Yes)
        } else if (p - &FieldElem::from_rational(self.s.clone())).real_sign()? <= 0 {
            Ok(Verdict::No)
        } else {
            Ok(Verdict::OutsidePromise)
        }
    }
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            c: ratio(2, 3),
            s: ratio(1, 3),
        }
    }
}
