use std::fmt;
use std::sync::Arc;

use super::Verdict;
use crate::enumeration::Polynomial;
use crate::error::{Error, Result};
use crate::tm::{run, MachineDesc, RunResult};
use crate::word::Word;

/// A classification closure.
pub type DeciderFn = Arc<dyn Fn(&Word) -> Result<Verdict> + Send + Sync>;

/// How a decider computes its verdicts.
#[derive(Clone)]
pub enum Realization {
    Builtin(DeciderFn),
    /// A machine emitting `1`, `0` or `10`, run with fuel `clock(|x|)`.
    Machine { machine: MachineDesc, clock: Polynomial },
}

/// A named total decider: a map from words to three-valued verdicts.
#[derive(Clone)]
pub struct TotalDecider {
    name: String,
    realization: Realization,
}

impl TotalDecider {
    pub fn builtin(name: impl Into<String>, f: impl Fn(&Word) -> Result<Verdict> + Send + Sync + 'static) -> Self {
        TotalDecider {
            name: name.into(),
            realization: Realization::Builtin(Arc::new(f)),
        }
    }

    /// Infallible builtin.
    pub fn from_fn(name: impl Into<String>, f: impl Fn(&Word) -> Verdict + Send + Sync + 'static) -> Self {
        Self::builtin(name, move |x| Ok(f(x)))
    }

    pub fn machine(name: impl Into<String>, machine: MachineDesc, clock: Polynomial) -> Self {
        TotalDecider {
            name: name.into(),
            realization: Realization::Machine { machine, clock },
        }
    }

    pub fn constant(v: Verdict) -> Self {
        let name = match v {
            Verdict::Yes => "const-yes",
            Verdict::No => "const-no",
            Verdict::OutsidePromise => "const-outside",
        };
        Self::from_fn(name, move |_| v)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn classify(&self, x: &Word) -> Result<Verdict> {
        match &self.realization {
            Realization::Builtin(f) => f(x),
            Realization::Machine { machine, clock } => {
                let fuel = clock.eval(x.len() as u64);
                match run(machine, std::slice::from_ref(x), fuel) {
                    RunResult::Halted { output, .. } => {
                        Verdict::from_output(&output).ok_or_else(|| Error::NotTotalDecider {
                            input: x.clone(),
                            output: output.to_string(),
                        })
                    }
                    RunResult::FuelExhausted { .. } => Err(Error::DeciderFuelExhausted { input: x.clone(), fuel }),
                }
            }
        }
    }
}

impl fmt::Debug for TotalDecider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.realization {
            Realization::Builtin(_) => "builtin",
            Realization::Machine { .. } => "machine",
        };
        write!(f, "TotalDecider({kind}:{})", self.name)
    }
}
