//! Probabilistic Turing machines evaluated by exhaustive branch enumeration.
//!
//! Every computation path is a leaf and leaves are weighted uniformly, so
//! `p_acc = accepting leaves / all leaves`. A leaf accepts when the branch
//! halts with output `1` and rejects with output `0`; any other output is
//! counted as rejecting.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::enumeration::Polynomial;
use crate::error::{Error, Result};
use crate::promise::{Thresholds, Verdict};
use crate::tm::library::add_constant_writer;
use crate::tm::{encode_table, parse_table, Action, Configuration, MachineDesc, Move, Symbol, TransitionTable};
use crate::word::Word;
use crate::Rational;

/// Maximum number of leaves enumerated for one input.
pub const LEAF_CAP: u64 = 1 << 22;
/// Maximum witness length for the MA witness loop.
pub const MA_WITNESS_CAP: usize = 16;

/// A probabilistic machine; the trivial form behaves like the trivial
/// deterministic machine (one leaf, output `0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PtmDesc {
    Trivial,
    Table(TransitionTable),
}

impl PtmDesc {
    pub fn from_table(table: TransitionTable) -> Self {
        if table.is_well_formed() {
            PtmDesc::Table(table)
        } else {
            PtmDesc::Trivial
        }
    }

    /// Decodes the shared Gödel grammar; repeated `(state, symbol)` keys
    /// form branch sets.
    pub fn decode(bits: &Word) -> Self {
        parse_table(bits).map_or(PtmDesc::Trivial, PtmDesc::from_table)
    }

    pub fn encode(&self) -> Word {
        match self {
            PtmDesc::Trivial => Word::empty(),
            PtmDesc::Table(t) => encode_table(t),
        }
    }

    pub fn max_branching(&self) -> usize {
        match self {
            PtmDesc::Trivial => 1,
            PtmDesc::Table(t) => t.max_branching(),
        }
    }
}

impl From<MachineDesc> for PtmDesc {
    fn from(m: MachineDesc) -> Self {
        match m {
            MachineDesc::Trivial => PtmDesc::Trivial,
            MachineDesc::Table(t) => PtmDesc::Table(t),
        }
    }
}

/// Leaf counts and exact acceptance / rejection fractions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchStats {
    pub accepting: u64,
    pub rejecting: u64,
    pub total: u64,
    pub p_acc: Rational,
    pub p_rej: Rational,
}

impl BranchStats {
    fn from_counts(accepting: u64, rejecting: u64, total: u64) -> Self {
        let frac = |k: u64| Rational::new(BigInt::from(k), BigInt::from(total.max(1)));
        BranchStats {
            accepting,
            rejecting,
            total,
            p_acc: frac(accepting),
            p_rej: frac(rejecting),
        }
    }
}

enum Leaf {
    Output(Word),
    Exhausted(Vec<usize>),
}

fn walk(m: &PtmDesc, inputs: &[Word], fuel: u64, mut visit: impl FnMut(Leaf) -> Result<()>) -> Result<()> {
    let table = match m {
        PtmDesc::Trivial => {
            let leaf = if fuel >= 1 {
                Leaf::Output(Word::from("0"))
            } else {
                Leaf::Exhausted(Vec::new())
            };
            return visit(leaf);
        }
        PtmDesc::Table(t) => t,
    };
    let mut leaves = 0u64;
    let mut stack = vec![(Configuration::initial(inputs), Vec::new())];
    while let Some((mut cfg, mut path)) = stack.pop() {
        loop {
            if table.is_final(cfg.state) {
                visit(Leaf::Output(cfg.tape.output()))?;
                break;
            }
            if cfg.steps >= fuel {
                visit(Leaf::Exhausted(path))?;
                break;
            }
            let acts = &table.rules[&(cfg.state, cfg.tape.read())];
            // later alternatives are pushed in reverse so the walk stays depth-first, left to right
            for (k, &a) in acts.iter().enumerate().skip(1).rev() {
                let mut c = cfg.clone();
                c.apply(a);
                let mut p = path.clone();
                p.push(k);
                stack.push((c, p));
            }
            if acts.len() > 1 {
                path.push(0);
            }
            cfg.apply(acts[0]);
        }
        leaves += 1;
        if leaves > LEAF_CAP {
            return Err(Error::DimensionCap {
                what: "branch leaves",
                requested: leaves as usize,
                cap: LEAF_CAP as usize,
            });
        }
    }
    Ok(())
}

/// Enumerates every computation path depth-first. Fails with the choice
/// path of the first branch that does not halt within `fuel` steps.
pub fn enumerate_branches(m: &PtmDesc, inputs: &[Word], fuel: u64) -> Result<BranchStats> {
    let (mut acc, mut rej, mut total) = (0, 0, 0);
    walk(m, inputs, fuel, |leaf| match leaf {
        Leaf::Output(o) => {
            total += 1;
            if o.bits() == [true] {
                acc += 1;
            } else if o.bits() == [false] {
                rej += 1;
            }
            Ok(())
        }
        Leaf::Exhausted(path) => Err(Error::BranchFuelExhausted { path, fuel }),
    })?;
    Ok(BranchStats::from_counts(acc, rej, total))
}

/// Clocked variant used by recursive presentations: branches that exceed
/// `fuel` are cut off and count as rejecting leaves.
pub fn enumerate_branches_clocked(m: &PtmDesc, inputs: &[Word], fuel: u64) -> Result<BranchStats> {
    let (mut acc, mut rej, mut total) = (0, 0, 0);
    walk(m, inputs, fuel, |leaf| {
        total += 1;
        match leaf {
            Leaf::Output(o) if o.bits() == [true] => acc += 1,
            _ => rej += 1,
        }
        Ok(())
    })?;
    Ok(BranchStats::from_counts(acc, rej, total))
}

fn fuel_for(runtime: &Polynomial, x: &Word) -> u64 {
    runtime.eval(x.len() as u64)
}

/// Extremal PromiseBPP verdict of `m` on `x` with fuel `runtime(|x|)`.
pub fn classify_bpp(m: &PtmDesc, runtime: &Polynomial, x: &Word, th: &Thresholds) -> Result<Verdict> {
    let stats = enumerate_branches(m, std::slice::from_ref(x), fuel_for(runtime, x))?;
    Ok(th.classify(&stats.p_acc))
}

/// Extremal PromiseMA verdict: the witness `y` of length `wit_len(|x|)` is
/// the second input.
pub fn classify_ma(
    m: &PtmDesc,
    runtime: &Polynomial,
    wit_len: &Polynomial,
    x: &Word,
    th: &Thresholds,
) -> Result<Verdict> {
    let len = wit_len.eval(x.len() as u64);
    ma_verdict(len, th, |y| {
        enumerate_branches(m, &[x.clone(), y.clone()], fuel_for(runtime, x)).map(|s| s.p_acc)
    })
}

/// Witness loop shared by MA-style deciders: `Yes` as soon as one witness
/// reaches `c`, `No` if every witness stays at or below `s`.
pub fn ma_verdict(
    len: u64,
    th: &Thresholds,
    mut p_acc: impl FnMut(&Word) -> Result<Rational>,
) -> Result<Verdict> {
    if len > MA_WITNESS_CAP as u64 {
        return Err(Error::WitnessSpaceTooLarge {
            bits: len.min(usize::MAX as u64) as usize,
            cap: MA_WITNESS_CAP,
        });
    }
    let mut best = Rational::zero();
    for y in Word::all_of_len(len as usize) {
        let p = p_acc(&y)?;
        if th.classify(&p) == Verdict::Yes {
            return Ok(Verdict::Yes);
        }
        if p > best {
            best = p;
        }
    }
    Ok(th.classify(&best))
}

/// A finite branching shape: leaves carry the output word of their path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchTree {
    Leaf(Word),
    Node(Vec<BranchTree>),
}

impl BranchTree {
    pub fn accept() -> Self {
        BranchTree::Leaf(Word::from("1"))
    }

    pub fn reject() -> Self {
        BranchTree::Leaf(Word::from("0"))
    }

    /// One node whose children are accepting / rejecting leaves.
    pub fn fan(outcomes: &[bool]) -> Self {
        BranchTree::Node(
            outcomes
                .iter()
                .map(|&b| if b { Self::accept() } else { Self::reject() })
                .collect(),
        )
    }

    /// Number of accepting leaves and of all leaves.
    pub fn count(&self) -> (u64, u64) {
        match self {
            BranchTree::Leaf(w) => (u64::from(w.bits() == [true]), 1),
            BranchTree::Node(ch) => ch
                .iter()
                .map(BranchTree::count)
                .fold((0, 0), |(a, t), (b, u)| (a + b, t + u)),
        }
    }

    /// Machine that branches along the tree (one step per inner node,
    /// leaving the tape untouched) and then writes the leaf's word.
    pub fn to_ptm(&self) -> PtmDesc {
        let mut t = TransitionTable::new(1);
        t.finals.insert(0);
        let entry = build(&mut t, self);
        // the initial state must be 0: swap the roles of states 0 and `entry`
        let swap = |s: usize| if s == 0 { entry } else if s == entry { 0 } else { s };
        let mut out = TransitionTable::new(t.states);
        out.finals = t.finals.iter().map(|&f| swap(f)).collect();
        for (&(q, read), acts) in &t.rules {
            for a in acts {
                out.add_rule(swap(q), read, Action::new(swap(a.next), a.write, a.mv));
            }
        }
        PtmDesc::from_table(out)
    }
}

fn build(t: &mut TransitionTable, tree: &BranchTree) -> usize {
    match tree {
        BranchTree::Leaf(w) => add_constant_writer(t, w, 0),
        BranchTree::Node(children) => {
            let me = t.states;
            t.states += 1;
            let entries: Vec<usize> = children.iter().map(|c| build(t, c)).collect();
            for e in entries {
                for s in Symbol::ALL {
                    t.add_rule(me, s, Action::new(e, s, Move::N));
                }
            }
            me
        }
    }
}

/// Deterministic verifier accepting `(x, y)` iff `y = w`.
pub fn witness_equals(w: &Word) -> MachineDesc {
    let k = w.len();
    // 0: skip x; 1..=k+1: compare y; k+2: seek end then reject; k+3: final
    let (seek, fin) = (k + 2, k + 3);
    let mut t = TransitionTable::new(k + 4)
        .with_final(fin)
        .rule(0, Symbol::Zero, 0, Symbol::Zero, Move::R)
        .rule(0, Symbol::One, 0, Symbol::One, Move::R)
        .rule(0, Symbol::Blank, 1, Symbol::Blank, Move::R)
        .rule(seek, Symbol::Zero, seek, Symbol::Zero, Move::R)
        .rule(seek, Symbol::One, seek, Symbol::One, Move::R)
        .rule(seek, Symbol::Blank, fin, Symbol::Zero, Move::N);
    for (j, &b) in w.bits().iter().enumerate() {
        let q = j + 1;
        let want = Symbol::from_bit(b);
        t.add_rule(q, want, Action::new(q + 1, want, Move::R));
        for s in Symbol::ALL.into_iter().filter(|&s| s != want) {
            t.add_rule(q, s, Action::new(seek, s, Move::N));
        }
    }
    let last = k + 1;
    t.add_rule(last, Symbol::Blank, Action::new(fin, Symbol::One, Move::N));
    t.add_rule(last, Symbol::Zero, Action::new(seek, Symbol::Zero, Move::N));
    t.add_rule(last, Symbol::One, Action::new(seek, Symbol::One, Move::N));
    MachineDesc::from_table(t)
}
