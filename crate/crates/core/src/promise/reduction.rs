use std::fmt;
use std::sync::Arc;

use super::{TotalDecider, Verdict};
use crate::enumeration::Polynomial;
use crate::error::{Error, Result};
use crate::tm::{library, run, MachineDesc, RunResult};
use crate::word::Word;

type WordFn = Arc<dyn Fn(&Word) -> Result<Word> + Send + Sync>;

/// A total word function, either a closure or a clocked machine.
#[derive(Clone)]
pub enum ReductionFn {
    Builtin { name: String, f: WordFn },
    Machine { machine: MachineDesc, runtime: Polynomial },
}

impl ReductionFn {
    pub fn builtin(name: impl Into<String>, f: impl Fn(&Word) -> Result<Word> + Send + Sync + 'static) -> Self {
        ReductionFn::Builtin {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn machine(machine: MachineDesc, runtime: Polynomial) -> Self {
        ReductionFn::Machine { machine, runtime }
    }

    pub fn identity() -> Self {
        Self::machine(library::identity(), Polynomial::zero())
    }

    /// `x ↦ bit ++ x`, realized by a two-step machine.
    pub fn prepend(bit: bool) -> Self {
        Self::machine(library::prepend(bit), Polynomial::constant(2))
    }

    pub fn constant(w: Word) -> Self {
        let steps = w.len() as u64 + 2;
        Self::machine(library::write_constant(&w), Polynomial::constant(steps))
    }

    /// `g ∘ self`.
    pub fn then(&self, name: impl Into<String>, g: impl Fn(&Word) -> Result<Word> + Send + Sync + 'static) -> Self {
        let inner = self.clone();
        Self::builtin(name, move |x| g(&inner.apply(x)?))
    }

    pub fn apply(&self, x: &Word) -> Result<Word> {
        match self {
            ReductionFn::Builtin { f, .. } => f(x),
            ReductionFn::Machine { machine, runtime } => {
                let fuel = runtime.eval(x.len() as u64);
                match run(machine, std::slice::from_ref(x), fuel) {
                    RunResult::Halted { output, .. } => Ok(output),
                    RunResult::FuelExhausted { .. } => Err(Error::ReductionFuelExhausted { input: x.clone(), fuel }),
                }
            }
        }
    }
}

impl fmt::Debug for ReductionFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionFn::Builtin { name, .. } => write!(f, "ReductionFn(builtin:{name})"),
            ReductionFn::Machine { runtime, .. } => write!(f, "ReductionFn(machine, runtime {runtime})"),
        }
    }
}

/// A word whose image breaks one of the Karp implications.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KarpViolation {
    pub x: Word,
    pub a: Verdict,
    pub image: Word,
    pub b: Verdict,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KarpReport {
    pub checked: usize,
    pub violations: Vec<KarpViolation>,
}

impl KarpReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `x ∈ A_yes ⇒ f(x) ∈ B_yes` and `x ∈ A_no ⇒ f(x) ∈ B_no` on
/// `Σ^{≤bound}`.
pub fn karp_check(f: &ReductionFn, a: &TotalDecider, b: &TotalDecider, bound: usize) -> Result<KarpReport> {
    if bound > super::ops::DIFF_BOUND_CAP {
        return Err(Error::DimensionCap {
            what: "karp bound",
            requested: bound,
            cap: super::ops::DIFF_BOUND_CAP,
        });
    }
    let mut report = KarpReport::default();
    for x in Word::all_up_to(bound) {
        report.checked += 1;
        let va = a.classify(&x)?;
        if !va.is_promised() {
            continue;
        }
        let image = f.apply(&x)?;
        let vb = b.classify(&image)?;
        if va != vb {
            report.violations.push(KarpViolation { x, a: va, image, b: vb });
        }
    }
    Ok(report)
}
