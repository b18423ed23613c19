use super::diag::{diagonalize, DiagInstance, DiagResult, Mode, Side};
use crate::enumeration::Enumeration;
use crate::error::{Error, Result};
use crate::promise::{TotalDecider, Verdict};
use crate::word::Word;

/// Longest word scanned for a no-instance of A.
pub const NO_INSTANCE_CAP: usize = 12;

/// Smallest word A answers `No` on.
pub fn no_instance(a: &TotalDecider) -> Result<Word> {
    for z in Word::all_up_to(NO_INSTANCE_CAP) {
        if a.classify(&z)? == Verdict::No {
            return Ok(z);
        }
    }
    Err(Error::NoInstanceOfA { cap: NO_INSTANCE_CAP })
}

/// Diagonalizes against `C` and against the problems A reduces to
/// (`harder`), with `A′ = (∅, Σ*)`. The marking reduction is composed with
/// `0x ↦ x`, `1w ↦ ` a fixed no-instance of A, so it reduces B to A.
pub fn ladner(a: &TotalDecider, c: Enumeration, mode: Mode, harder: Enumeration, search_cap: usize) -> Result<DiagResult> {
    let no = no_instance(a)?;
    let mut inst = DiagInstance::new(
        Side {
            problem: a.clone(),
            presentation: c,
            mode,
        },
        Side {
            problem: TotalDecider::constant(Verdict::No),
            presentation: harder,
            mode: Mode::Presentable,
        },
    );
    inst.search_cap = search_cap;
    let mut res = diagonalize(&inst)?;
    res.reduction = res.reduction.then("ladner-reduction", move |w| {
        Ok(match w.split_first() {
            Some((false, x)) => x,
            _ => no.clone(),
        })
    });
    Ok(res)
}
