use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use super::{pair, poly_series, unpair, untriple, Polynomial};
use crate::error::{Error, Result};
use crate::gap::{CostedFunction, Meter};
use crate::promise::{cook_run, OracleMachine, ReductionFn, Thresholds, TotalDecider, Verdict};
use crate::ptm::{enumerate_branches_clocked, ma_verdict, PtmDesc};
use crate::qcircuit::{circuit_bqp, circuit_qcma, circuit_qma, parse_circuit, Circuit};
use crate::tm::{decode_godel, run, MachineDesc, RunResult};
use crate::word::Word;

/// Largest index accepted by [`Enumeration::get`].
pub const INDEX_CAP: u64 = 1_000_000;
/// Largest word length re-verified by [`harder_set`].
pub const HARDER_CHECK_CAP: usize = 12;
/// Largest witness length tried by [`np_machine`].
pub const NP_WITNESS_CAP: u64 = 16;

/// The machine whose Gödel word is the `j`-th word in shortlex order.
pub fn machine_at(j: u64) -> MachineDesc {
    decode_godel(&Word::from_index(j))
}

fn clocked_output(m: &MachineDesc, inputs: &[Word], fuel: u64) -> Option<Word> {
    match run(m, inputs, fuel) {
        RunResult::Halted { output, .. } => Some(output),
        RunResult::FuelExhausted { .. } => None,
    }
}

/// Machine `j` clocked by `p_k`, `(j, k) = unpair(i)`; output `1` is yes and
/// everything else, including running out of time, is no.
pub fn p_machine(i: u64) -> TotalDecider {
    let (j, k) = unpair(i);
    let (m, clock) = (machine_at(j), poly_series(k));
    TotalDecider::from_fn(format!("P[{i}]"), move |x| {
        let out = clocked_output(&m, std::slice::from_ref(x), clock.eval(x.len() as u64));
        Verdict::from_bool(out.is_some_and(|o| o.bits() == [true]))
    })
}

/// Machine `j` clocked by `p_k` as a word function; `ε` when out of time.
pub fn polyfunc_series(i: u64) -> ReductionFn {
    let (j, k) = unpair(i);
    let (m, clock) = (machine_at(j), poly_series(k));
    ReductionFn::builtin(format!("polyfunc[{i}]"), move |x| {
        Ok(clocked_output(&m, std::slice::from_ref(x), clock.eval(x.len() as u64)).unwrap_or_default())
    })
}

/// `n ↦ min(M_j(1^n) read in binary, p_l(n))` with `M_j` clocked by `p_k`;
/// each simulated step costs one unit.
#[derive(Clone, Debug)]
pub struct PolySet {
    pub machine: MachineDesc,
    pub clock: Polynomial,
    pub bound: Polynomial,
}

impl CostedFunction for PolySet {
    fn eval_metered(&self, n: u64, meter: &mut Meter) -> Result<u64> {
        let len = usize::try_from(n).map_err(|_| Error::Overflow("input length"))?;
        let r = run(&self.machine, &[Word::ones(len)], self.clock.eval(n));
        meter.charge(r.steps())?;
        let v = r.output().map_or(0, Word::to_number);
        Ok(v.min(self.bound.eval(n)))
    }

    fn describe(&self) -> String {
        format!("polyset(clock {}, bound {})", self.clock, self.bound)
    }
}

pub fn polyset_series(i: u64) -> PolySet {
    let (j, k, l) = untriple(i);
    PolySet {
        machine: machine_at(j),
        clock: poly_series(k),
        bound: poly_series(l),
    }
}

/// `(j, k, l) = untriple(i)`: yes iff some witness of length
/// `polyset_series(l)(|x|)` makes machine `j`, clocked by `p_k`, output `1`
/// on `(x, y)`.
pub fn np_machine(i: u64) -> TotalDecider {
    let (j, k, l) = untriple(i);
    let (m, clock, wit) = (machine_at(j), poly_series(k), polyset_series(l));
    TotalDecider::builtin(format!("NP[{i}]"), move |x| {
        let len = wit.eval(x.len() as u64)?.value;
        np_verdict(&m, &clock, len, x)
    })
}

pub(crate) fn np_verdict(m: &MachineDesc, clock: &Polynomial, len: u64, x: &Word) -> Result<Verdict> {
    if len > NP_WITNESS_CAP {
        return Err(Error::WitnessSpaceTooLarge {
            bits: len.min(usize::MAX as u64) as usize,
            cap: NP_WITNESS_CAP as usize,
        });
    }
    let fuel = clock.eval(x.len() as u64);
    let found = Word::all_of_len(len as usize)
        .any(|y| clocked_output(m, &[x.clone(), y], fuel).is_some_and(|o| o.bits() == [true]));
    Ok(Verdict::from_bool(found))
}

/// Families with a machine-indexed presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    P,
    Np,
    PromiseBpp,
    PromiseMa,
    Bqp,
    Qcma,
    Qma,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::P,
        Family::Np,
        Family::PromiseBpp,
        Family::PromiseMa,
        Family::Bqp,
        Family::Qcma,
        Family::Qma,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Family::P => "p",
            Family::Np => "np",
            Family::PromiseBpp => "promise-bpp",
            Family::PromiseMa => "promise-ma",
            Family::Bqp => "bqp",
            Family::Qcma => "qcma",
            Family::Qma => "qma",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.token() == s)
            .ok_or_else(|| Error::UnknownProblem(format!("family {s:?}")))
    }
}

fn clocked_circuit(gen: &MachineDesc, clock: &Polynomial, x: &Word, header: bool) -> Circuit {
    match clocked_output(gen, std::slice::from_ref(x), clock.eval(x.len() as u64)) {
        Some(out) => parse_circuit(&out, header),
        None => Circuit::trivial(0),
    }
}

/// Total decider for the extremal problem of the `i`-th machine of a
/// probabilistic or quantum family.
///
/// Index layout: `(machine, clock) = unpair(i)` for PromiseBPP and the
/// circuit families, `(machine, clock, witness length) = untriple(i)` for
/// PromiseMA. Machines are clocked: cut-off branches reject and a generator
/// that runs out of time produces the trivial circuit. `P` and `NP` are
/// answered by [`p_machine`] and [`np_machine`].
pub fn class_presentation(family: Family, i: u64, th: &Thresholds) -> TotalDecider {
    let name = format!("{family}[{i}]");
    let th = th.clone();
    match family {
        Family::P => p_machine(i),
        Family::Np => np_machine(i),
        Family::PromiseBpp => {
            let (j, k) = unpair(i);
            let (m, clock) = (PtmDesc::decode(&Word::from_index(j)), poly_series(k));
            TotalDecider::builtin(name, move |x| {
                let s = enumerate_branches_clocked(&m, std::slice::from_ref(x), clock.eval(x.len() as u64))?;
                Ok(th.classify(&s.p_acc))
            })
        }
        Family::PromiseMa => {
            let (j, k, l) = untriple(i);
            let (m, clock, wit) = (PtmDesc::decode(&Word::from_index(j)), poly_series(k), polyset_series(l));
            TotalDecider::builtin(name, move |x| {
                let fuel = clock.eval(x.len() as u64);
                let len = wit.eval(x.len() as u64)?.value;
                ma_verdict(len, &th, |y| {
                    enumerate_branches_clocked(&m, &[x.clone(), y.clone()], fuel).map(|s| s.p_acc)
                })
            })
        }
        Family::Bqp | Family::Qcma | Family::Qma => {
            let (j, k) = unpair(i);
            let (gen, clock) = (machine_at(j), poly_series(k));
            TotalDecider::builtin(name, move |x| match family {
                Family::Bqp => circuit_bqp(&clocked_circuit(&gen, &clock, x, false), &th),
                Family::Qcma => circuit_qcma(&clocked_circuit(&gen, &clock, x, true), &th),
                _ => circuit_qma(&clocked_circuit(&gen, &clock, x, true), &th),
            })
        }
    }
}

/// `x ↦ classify(A, polyfunc_series(i)(x))`.
pub fn reduction_closure(a: &TotalDecider, i: u64) -> TotalDecider {
    let (a, f) = (a.clone(), polyfunc_series(i));
    TotalDecider::builtin(format!("{}≥m[{i}]", a.name()), move |x| a.classify(&f.apply(x)?))
}

/// Source of the `j`-th many-one reduction.
#[derive(Clone, Debug)]
pub enum ReductionSeries {
    /// [`polyfunc_series`].
    Indexed,
    /// Cycles through the list.
    Explicit(Vec<ReductionFn>),
}

/// Source of the `j`-th oracle machine.
#[derive(Clone, Debug)]
pub enum OracleSeries {
    /// `(g, k) = unpair(j)`: Gödel word `g` in the oracle-machine encoding,
    /// runtime `p_k`.
    Indexed,
    /// Cycles through the list.
    Explicit(Vec<OracleMachine>),
}

/// How [`harder_set`] tests a candidate reduction.
#[derive(Clone, Debug)]
pub enum HarderMode {
    /// Many-one: `f_j` must map A's yes / no words to yes / no words.
    M(ReductionSeries),
    /// Turing: oracle machine `j` must stay promise-respecting and agree
    /// with A.
    T(OracleSeries),
}

fn cycle<T: Clone>(list: &[T], j: u64) -> Result<T> {
    if list.is_empty() {
        return Err(Error::UnknownProblem("empty series".into()));
    }
    Ok(list[(j % list.len() as u64) as usize].clone())
}

/// A computable series of total deciders.
#[derive(Clone, Debug)]
pub enum Enumeration {
    Family(Family, Thresholds),
    /// Cycles through the list, so every index is valid.
    Explicit(Vec<TotalDecider>),
    ReductionClosure(TotalDecider),
    HarderSet {
        a: TotalDecider,
        base: Box<Enumeration>,
        mode: HarderMode,
    },
}

impl Enumeration {
    pub fn family(f: Family) -> Self {
        Enumeration::Family(f, Thresholds::default())
    }

    pub fn get(&self, i: u64) -> Result<TotalDecider> {
        if i > INDEX_CAP {
            return Err(Error::DimensionCap {
                what: "enumeration index",
                requested: i.min(usize::MAX as u64) as usize,
                cap: INDEX_CAP as usize,
            });
        }
        match self {
            Enumeration::Family(f, th) => Ok(class_presentation(*f, i, th)),
            Enumeration::Explicit(list) => cycle(list, i),
            Enumeration::ReductionClosure(a) => Ok(reduction_closure(a, i)),
            Enumeration::HarderSet { a, base, mode } => harder_set(a, base, mode, i),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Enumeration::Family(f, _) => f.to_string(),
            Enumeration::Explicit(list) => {
                let names: Vec<&str> = list.iter().map(TotalDecider::name).collect();
                format!("{{{}}}", names.join(", "))
            }
            Enumeration::ReductionClosure(a) => format!("closure({})", a.name()),
            Enumeration::HarderSet { a, base, mode } => {
                let m = match mode {
                    HarderMode::M(_) => "m",
                    HarderMode::T(_) => "T",
                };
                format!("harder_{m}({}, {})", a.name(), base.describe())
            }
        }
    }
}

#[derive(Default)]
struct CheckState {
    verified: Option<usize>,
    failed_at: Option<usize>,
}

fn soft_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::NonPromisedQuery(_)
            | Error::FuelExhausted { .. }
            | Error::ReductionFuelExhausted { .. }
            | Error::DeciderFuelExhausted { .. }
            | Error::NotTotalDecider { .. }
    )
}

enum Check {
    M(ReductionFn),
    T(OracleMachine),
}

impl Check {
    /// Whether the candidate handles every promised `y` of length `len`.
    fn length_ok(&self, a: &TotalDecider, target: &TotalDecider, len: usize) -> Result<bool> {
        for y in Word::all_of_len(len) {
            let want = a.classify(&y)?;
            if !want.is_promised() {
                continue;
            }
            let got = match self {
                Check::M(f) => f.apply(&y).and_then(|fy| target.classify(&fy)),
                Check::T(o) => cook_run(o, target, &y).map(Verdict::from_bool),
            };
            match got {
                Ok(v) if v == want => {}
                Ok(_) => return Ok(false),
                Err(e) if soft_failure(&e) => return Ok(false),
                Err(e) => return Err(e),
            }
        }
        Ok(true)
    }
}

/// `N_i` with `(j, k) = unpair(i)`: on `x`, check for every promised `y`
/// with `|y| ≤ min(|x|, 12)` that reduction `j` correctly reduces A to
/// `M_k`; answer like `M_k` if all checks pass and like A otherwise.
///
/// Check outcomes are memoized per length; they depend only on the length,
/// so the cache does not change verdicts.
pub fn harder_set(a: &TotalDecider, base: &Enumeration, mode: &HarderMode, i: u64) -> Result<TotalDecider> {
    let (j, k) = unpair(i);
    let target = base.get(k)?;
    let check = match mode {
        HarderMode::M(ReductionSeries::Indexed) => Check::M(polyfunc_series(j)),
        HarderMode::M(ReductionSeries::Explicit(list)) => Check::M(cycle(list, j)?),
        HarderMode::T(OracleSeries::Indexed) => {
            let (g, kk) = unpair(j);
            Check::T(OracleMachine::decode(&Word::from_index(g), poly_series(kk)))
        }
        HarderMode::T(OracleSeries::Explicit(list)) => Check::T(cycle(list, j)?),
    };
    let a = a.clone();
    let state = Mutex::new(CheckState::default());
    let name = format!("N[{i}]({}→{})", a.name(), target.name());
    let check = Arc::new(check);
    Ok(TotalDecider::builtin(name, move |x| {
        let bound = x.len().min(HARDER_CHECK_CAP);
        let passed = {
            let mut st = state.lock().expect("check state lock");
            let start = st.verified.map_or(0, |v| v + 1);
            for len in start..=bound {
                if st.failed_at.is_some() {
                    break;
                }
                if check.length_ok(&a, &target, len)? {
                    st.verified = Some(len);
                } else {
                    st.failed_at = Some(len);
                }
            }
            st.failed_at.is_none_or(|f| f > bound)
        };
        if passed {
            target.classify(x)
        } else {
            a.classify(x)
        }
    }))
}

/// Index of `(j, k)` in a harder-set presentation.
pub fn harder_index(j: u64, k: u64) -> Result<u64> {
    pair(j, k)
}
