//! The uniform diagonalization construction.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::costed::{time_construct_wrap, CostedFunction, MaxOf, Meter, SharedCosted};
use super::gaplang::{gap_member, interval_limits};
use crate::enumeration::Enumeration;
use crate::error::{Error, Result};
use crate::promise::{ReductionFn, TotalDecider, Verdict};
use crate::word::Word;

/// Which difference witnesses that a presented problem is not A.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `A \ P(M)`: A commits and M does not give A's answer.
    Representable,
    /// `A △ P(M)`: additionally M commits and A does not give M's answer.
    Presentable,
}

impl Mode {
    pub fn contradicts(self, a: Verdict, m: Verdict) -> bool {
        let a_minus = a.is_promised() && a != m;
        match self {
            Mode::Representable => a_minus,
            Mode::Presentable => a_minus || (m.is_promised() && m != a),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Representable => "representable",
            Mode::Presentable => "presentable",
        })
    }
}

/// Smallest word `z` in shortlex order with `n < |z| ≤ cap` on which `M`
/// fails to be A, charging one unit per word and one per classification.
pub fn find_contradiction_metered(
    a: &TotalDecider,
    m: &TotalDecider,
    n: usize,
    mode: Mode,
    cap: usize,
    meter: &mut Meter,
) -> Result<Word> {
    for len in n + 1..=cap {
        for z in Word::all_of_len(len) {
            meter.charge(1)?;
            let va = a.classify(&z)?;
            meter.charge(1)?;
            let vm = m.classify(&z)?;
            meter.charge(1)?;
            if mode.contradicts(va, vm) {
                return Ok(z);
            }
        }
    }
    Err(Error::NoContradictionFound {
        from: n + 1,
        cap,
        context: String::new(),
    })
}

pub fn find_contradiction(a: &TotalDecider, m: &TotalDecider, n: usize, mode: Mode, cap: usize) -> Result<Word> {
    find_contradiction_metered(a, m, n, mode, cap, &mut Meter::unlimited())
}

/// One side of a diagonalization instance: the problem to keep out of the
/// class and the class presentation.
#[derive(Clone, Debug)]
pub struct Side {
    pub problem: TotalDecider,
    pub presentation: Enumeration,
    pub mode: Mode,
}

/// Hypotheses `A ∉ C` and `A′ ∉ C′`, witnessed by contradictions of length
/// at most `search_cap`.
#[derive(Clone, Debug)]
pub struct DiagInstance {
    pub c: Side,
    pub c_prime: Side,
    pub search_cap: usize,
    /// Number of presented machines per side covered by the witness log.
    pub verify_machines: u64,
}

impl DiagInstance {
    pub fn new(c: Side, c_prime: Side) -> Self {
        DiagInstance {
            c,
            c_prime,
            search_cap: 256,
            verify_machines: 3,
        }
    }
}

/// `q(n) = max_{i ≤ n} |z_{i,n}| + 1` for one side. Presented deciders are
/// cached so their internal memo tables survive across evaluations.
struct LongestContradiction {
    side: Side,
    cap: usize,
    label: &'static str,
    deciders: Mutex<HashMap<u64, TotalDecider>>,
}

impl LongestContradiction {
    fn new(side: Side, cap: usize, label: &'static str) -> Self {
        LongestContradiction {
            side,
            cap,
            label,
            deciders: Mutex::new(HashMap::new()),
        }
    }

    fn decider(&self, i: u64) -> Result<TotalDecider> {
        let mut cache = self.deciders.lock().expect("decider cache lock");
        if let Some(d) = cache.get(&i) {
            return Ok(d.clone());
        }
        let d = self.side.presentation.get(i)?;
        cache.insert(i, d.clone());
        Ok(d)
    }

    fn contradiction(&self, i: u64, n: u64, meter: &mut Meter) -> Result<Word> {
        let m = self.decider(i)?;
        let n = usize::try_from(n).map_err(|_| Error::Overflow("interval start"))?;
        find_contradiction_metered(&self.side.problem, &m, n, self.side.mode, self.cap, meter).map_err(|e| match e {
            Error::NoContradictionFound { from, cap, .. } => Error::NoContradictionFound {
                from,
                cap,
                context: format!(" for {} machine {i} ({}) at n = {n}", self.label, m.name()),
            },
            e => e,
        })
    }
}

impl CostedFunction for LongestContradiction {
    fn eval_metered(&self, n: u64, meter: &mut Meter) -> Result<u64> {
        let mut longest = 0u64;
        for i in 0..=n {
            let z = self.contradiction(i, n, meter)?;
            longest = longest.max(z.len() as u64);
        }
        Ok(longest + 1)
    }

    fn describe(&self) -> String {
        format!("{}(n)", self.label)
    }
}

/// The interval function `r = wrap(max(q, q′))` with its two components.
#[derive(Clone)]
pub struct BuiltR {
    pub r: SharedCosted,
    pub q: SharedCosted,
    pub q_prime: SharedCosted,
}

/// One row of the r-table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RRow {
    pub n: u64,
    pub q: u64,
    pub q_prime: u64,
    pub r: u64,
    pub r_cost: u64,
}

impl BuiltR {
    pub fn row(&self, n: u64) -> Result<RRow> {
        let r = self.r.eval(n)?;
        Ok(RRow {
            n,
            q: self.q.eval(n)?.value,
            q_prime: self.q_prime.eval(n)?.value,
            r: r.value,
            r_cost: r.cost,
        })
    }
}

/// Builds `r` and evaluates `r(0)` so that a missing contradiction is
/// reported up front.
pub fn build_r(inst: &DiagInstance) -> Result<BuiltR> {
    let q: SharedCosted = Arc::new(LongestContradiction::new(inst.c.clone(), inst.search_cap, "q"));
    let q_prime: SharedCosted = Arc::new(LongestContradiction::new(inst.c_prime.clone(), inst.search_cap, "q′"));
    let r = time_construct_wrap(Arc::new(MaxOf(q.clone(), q_prime.clone())));
    r.eval(0)?;
    Ok(BuiltR { r, q, q_prime })
}

/// Which presentation a witness refutes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessSide {
    C,
    CPrime,
}

impl fmt::Display for WitnessSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessSide::C => "C",
            WitnessSide::CPrime => "C′",
        })
    }
}

/// A word separating `B` from one presented machine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub side: WitnessSide,
    pub machine: u64,
    pub machine_name: String,
    /// Interval index: `n = r^m(0)`, even for `C`, odd for `C′`.
    pub interval: u64,
    pub n: u64,
    pub r_n: u64,
    pub z: Word,
    pub b: Verdict,
    pub presented: Verdict,
    /// `n < |z| < r(n)`, `z` lies in an interval of the right parity, B
    /// agrees with the side's problem on `z`, and `z` contradicts the machine.
    pub verified: bool,
}

/// Output of the construction.
#[derive(Clone)]
pub struct DiagResult {
    pub b: TotalDecider,
    pub r: BuiltR,
    pub reduction: ReductionFn,
    pub witnesses: Vec<Witness>,
}

fn mixer(r: &SharedCosted, a: &TotalDecider, a_prime: &TotalDecider) -> TotalDecider {
    let (r, a, a_prime) = (r.clone(), a.clone(), a_prime.clone());
    let name = format!("B({}|{})", a.name(), a_prime.name());
    TotalDecider::builtin(name, move |x| {
        if gap_member(r.as_ref(), x)? {
            a.classify(x)
        } else {
            a_prime.classify(x)
        }
    })
}

fn marker(r: &SharedCosted) -> ReductionFn {
    let r = r.clone();
    ReductionFn::builtin("gap-marker", move |x| Ok(x.prefixed(!gap_member(r.as_ref(), x)?)))
}

fn witness(inst: &DiagInstance, built: &BuiltR, b: &TotalDecider, side: WitnessSide, i: u64) -> Result<Witness> {
    let (s, parity) = match side {
        WitnessSide::C => (&inst.c, 0),
        WitnessSide::CPrime => (&inst.c_prime, 1),
    };
    // smallest interval of the right parity starting at or beyond i
    let (mut interval, mut n) = (0u64, 0u64);
    while interval % 2 != parity || n < i {
        n = built.r.eval(n)?.value;
        interval += 1;
    }
    let r_n = built.r.eval(n)?.value;
    let m = s.presentation.get(i)?;
    let z = find_contradiction(&s.problem, &m, n as usize, s.mode, inst.search_cap)?;
    let (vb, vm, vs) = (b.classify(&z)?, m.classify(&z)?, s.problem.classify(&z)?);
    let len = z.len() as u64;
    let in_gap = gap_member(built.r.as_ref(), &z)?;
    let verified = n < len && len < r_n && in_gap == (parity == 0) && vb == vs && s.mode.contradicts(vb, vm);
    Ok(Witness {
        side,
        machine: i,
        machine_name: m.name().to_string(),
        interval,
        n,
        r_n,
        z,
        b: vb,
        presented: vm,
        verified,
    })
}

/// Mixes A on even intervals of `G[r]` with A′ on odd ones, returns the
/// marking reduction `x ↦ 0x / 1x` into `A ⊕ A′`, and logs a re-verified
/// contradiction for the first `verify_machines` machines of each side.
pub fn diagonalize(inst: &DiagInstance) -> Result<DiagResult> {
    let built = build_r(inst)?;
    let b = mixer(&built.r, &inst.c.problem, &inst.c_prime.problem);
    let mut witnesses = Vec::new();
    for side in [WitnessSide::C, WitnessSide::CPrime] {
        for i in 0..inst.verify_machines {
            witnesses.push(witness(inst, &built, &b, side, i)?);
        }
    }
    Ok(DiagResult {
        reduction: marker(&built.r),
        b,
        r: built,
        witnesses,
    })
}

/// Interval limits of `r` covering lengths up to `max_len`.
pub fn limits(res: &DiagResult, max_len: u64) -> Result<Vec<u64>> {
    interval_limits(res.r.r.as_ref(), max_len)
}
