//! Membership in gap languages `G[r]`: words whose length lies in an
//! interval `[r^n(0), r^(n+1)(0))` with `n` even.

use super::costed::{CostedFunction, Meter};
use crate::error::{Error, Result};
use crate::word::Word;

/// Index `n` of the interval containing `len`, or `None` if an iterate
/// evaluation was aborted by its budget of `len + 1` units.
///
/// Each iterate `r(v)` is evaluated with a fresh budget of `len + 1` units.
/// Because evaluating `r(v)` costs at most `r(v)` units, an abort proves
/// `r(v) > len`, so aborted and completed evaluations decide the same.
pub fn interval_index(r: &dyn CostedFunction, len: u64) -> Result<u64> {
    let mut v = 0u64;
    let mut n = 0u64;
    loop {
        let next = match r.eval_metered(v, &mut Meter::with_budget(len.saturating_add(1))) {
            Ok(next) => next,
            Err(Error::BudgetExceeded { .. }) => return Ok(n),
            Err(e) => return Err(e),
        };
        if next <= v {
            return Err(Error::NotGapAdmissible { m: v, value: next });
        }
        if next > len {
            return Ok(n);
        }
        v = next;
        n += 1;
    }
}

/// `x ∈ G[r]`.
pub fn gap_member(r: &dyn CostedFunction, x: &Word) -> Result<bool> {
    Ok(interval_index(r, x.len() as u64)? % 2 == 0)
}

/// Unbudgeted iteration: the interval `(n, r^n(0), r^(n+1)(0))` containing `len`.
pub fn interval_reference(r: &dyn CostedFunction, len: u64) -> Result<(u64, u64, u64)> {
    let (mut lo, mut n) = (0u64, 0u64);
    loop {
        let hi = r.eval(lo)?.value;
        if hi <= lo {
            return Err(Error::NotGapAdmissible { m: lo, value: hi });
        }
        if len < hi {
            return Ok((n, lo, hi));
        }
        lo = hi;
        n += 1;
    }
}

/// Interval boundaries `r^0(0) < r^1(0) < …` up to the first one above `max_len`.
pub fn interval_limits(r: &dyn CostedFunction, max_len: u64) -> Result<Vec<u64>> {
    let mut limits = vec![0u64];
    while *limits.last().expect("non-empty") <= max_len {
        let lo = *limits.last().expect("non-empty");
        let hi = r.eval(lo)?.value;
        if hi <= lo {
            return Err(Error::NotGapAdmissible { m: lo, value: hi });
        }
        limits.push(hi);
    }
    Ok(limits)
}
