//! Cantor pairing N₀² ↔ N₀ and its nested triple variant.

use num_integer::Roots;

use crate::error::{Error, Result};

/// `pair(j, k) = (j + k)(j + k + 1)/2 + k`.
pub fn pair(j: u64, k: u64) -> Result<u64> {
    let s = j as u128 + k as u128;
    let v = s
        .checked_mul(s + 1)
        .map(|t| t / 2 + k as u128)
        .and_then(|v| u64::try_from(v).ok());
    v.ok_or(Error::Overflow("pair index"))
}

pub fn unpair(i: u64) -> (u64, u64) {
    let i = i as u128;
    let w = ((8 * i + 1).sqrt() - 1) / 2;
    let t = w * (w + 1) / 2;
    let k = i - t;
    ((w - k) as u64, k as u64)
}

/// `triple(j, k, l) = pair(j, pair(k, l))`.
pub fn triple(j: u64, k: u64, l: u64) -> Result<u64> {
    pair(j, pair(k, l)?)
}

pub fn untriple(i: u64) -> (u64, u64, u64) {
    let (j, rest) = unpair(i);
    let (k, l) = unpair(rest);
    (j, k, l)
}
