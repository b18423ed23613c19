//! Functions `N₀ → N₀` with an abstract step-cost accounting.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::tm::{run, MachineDesc, RunResult};
use crate::word::Word;

/// Accounting units consumed so far, with an optional budget.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Meter {
    used: u64,
    budget: Option<u64>,
}

impl Meter {
    pub fn unlimited() -> Self {
        Meter::default()
    }

    pub fn with_budget(budget: u64) -> Self {
        Meter {
            used: 0,
            budget: Some(budget),
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    /// Consumes `units`; fails once the budget is overdrawn.
    pub fn charge(&mut self, units: u64) -> Result<()> {
        self.used = self.used.saturating_add(units);
        match self.budget {
            Some(budget) if self.used > budget => Err(Error::BudgetExceeded { budget }),
            _ => Ok(()),
        }
    }
}

/// A value together with the units spent computing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Costed {
    pub value: u64,
    pub cost: u64,
}

pub trait CostedFunction: Send + Sync {
    /// Evaluates at `n`, charging every unit of work to `meter` as it is
    /// spent so that a budgeted meter aborts the evaluation midway.
    fn eval_metered(&self, n: u64, meter: &mut Meter) -> Result<u64>;

    fn describe(&self) -> String;

    fn eval(&self, n: u64) -> Result<Costed> {
        let mut meter = Meter::unlimited();
        let value = self.eval_metered(n, &mut meter)?;
        Ok(Costed {
            value,
            cost: meter.used(),
        })
    }
}

pub type SharedCosted = Arc<dyn CostedFunction>;

impl fmt::Debug for dyn CostedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CostedFunction({})", self.describe())
    }
}

/// `a·n + b`, costing its own value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Affine {
    pub a: u64,
    pub b: u64,
}

impl Affine {
    pub fn succ() -> Self {
        Affine { a: 1, b: 1 }
    }

    /// `2n + 2`.
    pub fn double() -> Self {
        Affine { a: 2, b: 2 }
    }
}

impl CostedFunction for Affine {
    fn eval_metered(&self, n: u64, meter: &mut Meter) -> Result<u64> {
        let v = self
            .a
            .checked_mul(n)
            .and_then(|v| v.checked_add(self.b))
            .ok_or(Error::Overflow("affine value"))?;
        meter.charge(v)?;
        Ok(v)
    }

    fn describe(&self) -> String {
        format!("{}n + {}", self.a, self.b)
    }
}

/// Step count of a time constructor: the machine must halt within `cap`
/// steps and use the same number of steps on `0^n` and `1^n`.
pub fn eval_counted(tc: &MachineDesc, n: u64, cap: u64) -> Result<u64> {
    let len = usize::try_from(n).map_err(|_| Error::Overflow("input length"))?;
    let steps = |w: Word| match run(tc, &[w], cap) {
        RunResult::Halted { steps, .. } => Ok(steps),
        RunResult::FuelExhausted { .. } => Err(Error::FuelCap { n, cap }),
    };
    let first = steps(Word::zeros(len))?;
    let second = steps(Word::ones(len))?;
    if first != second {
        return Err(Error::NotTimeConstructible { n, first, second });
    }
    Ok(first)
}

/// The function time-constructed by a machine; evaluation costs its value.
#[derive(Clone, Debug)]
pub struct TimeConstructed {
    pub machine: MachineDesc,
    pub cap: u64,
}

impl CostedFunction for TimeConstructed {
    fn eval_metered(&self, n: u64, meter: &mut Meter) -> Result<u64> {
        let v = eval_counted(&self.machine, n, self.cap)?;
        meter.charge(v)?;
        Ok(v)
    }

    fn describe(&self) -> String {
        "time-constructed".to_string()
    }
}

/// `n ↦ max(f(n), g(n))`, paying for both.
pub struct MaxOf(pub SharedCosted, pub SharedCosted);

impl CostedFunction for MaxOf {
    fn eval_metered(&self, n: u64, meter: &mut Meter) -> Result<u64> {
        let a = self.0.eval_metered(n, meter)?;
        let b = self.1.eval_metered(n, meter)?;
        Ok(a.max(b))
    }

    fn describe(&self) -> String {
        format!("max({}, {})", self.0.describe(), self.1.describe())
    }
}

struct Wrapped {
    inner: SharedCosted,
    memo: Mutex<HashMap<u64, u64>>,
}

impl CostedFunction for Wrapped {
    fn eval_metered(&self, n: u64, meter: &mut Meter) -> Result<u64> {
        let cached = self.memo.lock().expect("memo lock").get(&n).copied();
        if let Some(v) = cached {
            meter.charge(v)?;
            return Ok(v);
        }
        let start = meter.used();
        let v = self.inner.eval_metered(n, meter)?;
        let spent = meter.used() - start;
        let value = v
            .checked_add(spent)
            .and_then(|s| s.checked_add(n))
            .and_then(|s| s.checked_add(1))
            .ok_or(Error::Overflow("wrapped value"))?;
        // pad so that the total cost equals the value
        meter.charge(value - spent)?;
        self.memo.lock().expect("memo lock").insert(n, value);
        Ok(value)
    }

    fn describe(&self) -> String {
        format!("wrap({})", self.inner.describe())
    }
}

/// `f′(n) = f(n) + cost_f(n) + n + 1`, padded so that computing `f′(n)`
/// costs exactly `f′(n)` units. Hence `f′(n) ≥ f(n)`, `f′(n) > n`, and a
/// budgeted evaluation aborts exactly when the value exceeds the budget.
/// Values are memoized; a cached value is charged in full again.
pub fn time_construct_wrap(f: SharedCosted) -> SharedCosted {
    Arc::new(Wrapped {
        inner: f,
        memo: Mutex::new(HashMap::new()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tm::library;

    struct Zero;

    impl CostedFunction for Zero {
        fn eval_metered(&self, _n: u64, _meter: &mut Meter) -> Result<u64> {
            Ok(0)
        }

        fn describe(&self) -> String {
            "0".into()
        }
    }

    struct Ident(u64);

    impl CostedFunction for Ident {
        fn eval_metered(&self, n: u64, meter: &mut Meter) -> Result<u64> {
            meter.charge(self.0 * n)?;
            Ok(n)
        }

        fn describe(&self) -> String {
            "n".into()
        }
    }

    #[test]
    fn counted_constructors() {
        assert_eq!(eval_counted(&library::identity(), 5, 10).unwrap(), 0);
        assert_eq!(eval_counted(&MachineDesc::Trivial, 5, 10).unwrap(), 1);
        for n in 0..8 {
            assert_eq!(eval_counted(&library::sweep(), n, 100).unwrap(), n + 1);
        }
        assert_eq!(
            eval_counted(&library::first_one(), 3, 100),
            Err(Error::NotTimeConstructible { n: 3, first: 4, second: 1 })
        );
        assert_eq!(eval_counted(&library::loop_forever(), 2, 50), Err(Error::FuelCap { n: 2, cap: 50 }));
    }

    #[test]
    fn wrap_floor_and_dominance() {
        let w = time_construct_wrap(Arc::new(Zero));
        for n in 0..12 {
            assert_eq!(w.eval(n).unwrap(), Costed { value: n + 1, cost: n + 1 });
        }
        let w = time_construct_wrap(Arc::new(Ident(3)));
        for n in 0..12 {
            let c = w.eval(n).unwrap();
            assert_eq!(c.value, 2 * n + 3 * n + 1);
            assert!(c.cost <= c.value && c.value > n);
        }
    }

    #[test]
    fn budget_aborts_exactly_above_value() {
        let w = time_construct_wrap(Arc::new(Affine::double()));
        let v = w.eval(4).unwrap().value;
        assert!(w.eval_metered(4, &mut Meter::with_budget(v)).is_ok());
        assert_eq!(
            w.eval_metered(4, &mut Meter::with_budget(v - 1)),
            Err(Error::BudgetExceeded { budget: v - 1 })
        );
        // a fresh wrapper aborts midway as well
        let fresh = time_construct_wrap(Arc::new(Affine::double()));
        assert!(fresh.eval_metered(4, &mut Meter::with_budget(3)).is_err());
        assert_eq!(fresh.eval(4).unwrap().value, v);
    }

    #[test]
    fn time_constructed_costs_its_value() {
        let f = TimeConstructed {
            machine: library::sweep(),
            cap: 1000,
        };
        assert_eq!(f.eval(7).unwrap(), Costed { value: 8, cost: 8 });
    }
}
