//! Named builtin problems for toy instances and the command line.

use super::{TotalDecider, Verdict};
use crate::enumeration::Polynomial;
use crate::error::{Error, Result};
use crate::tm::library;

pub const NAMES: &[&str] = &[
    "const-yes",
    "const-no",
    "const-outside",
    "parity",
    "parity-machine",
    "even-length",
    "unary",
];

/// Looks up a builtin problem by name.
///
/// * `parity`: yes iff the word holds an odd number of ones.
/// * `parity-machine`: the same problem decided by a Turing machine.
/// * `even-length`: yes iff `|x|` is even.
/// * `unary`: yes on `1^n`, no on `0^n` (`n ≥ 1`), everything else is
///   outside the promise.
pub fn builtin(name: &str) -> Result<TotalDecider> {
    let d = match name {
        "const-yes" => TotalDecider::constant(Verdict::Yes),
        "const-no" => TotalDecider::constant(Verdict::No),
        "const-outside" => TotalDecider::constant(Verdict::OutsidePromise),
        "parity" => parity(),
        "parity-machine" => TotalDecider::machine(name, library::parity(), Polynomial::linear(1, 1)),
        "even-length" => TotalDecider::from_fn(name, |x| Verdict::from_bool(x.len() % 2 == 0)),
        "unary" => TotalDecider::from_fn(name, |x| {
            if x.is_empty() {
                Verdict::OutsidePromise
            } else if x.count_ones() == x.len() {
                Verdict::Yes
            } else if x.count_ones() == 0 {
                Verdict::No
            } else {
                Verdict::OutsidePromise
            }
        }),
        _ => return Err(Error::UnknownProblem(name.to_string())),
    };
    Ok(d)
}

pub fn parity() -> TotalDecider {
    TotalDecider::from_fn("parity", |x| Verdict::from_bool(x.count_ones() % 2 == 1))
}
