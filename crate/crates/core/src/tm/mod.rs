//! Deterministic Turing machines: transition tables, Gödel encoding and
//! fuel-bounded execution.
//!
//! Tape alphabet is `{0, 1, □}`. A run starts in state 0 with the inputs
//! written blank-separated from cell 0 and the head on cell 0. Each applied
//! transition is one step; entering the initial configuration is free. On
//! entering a final state the machine halts and outputs the word between the
//! head and the next blank (empty when the head reads a blank).

mod godel;
pub mod library;
mod tape;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::word::Word;

pub use godel::{decode_godel, encode_godel, encode_table, parse_table, render_table};
pub use tape::Tape;

/// Tape symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    One,
    Blank,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Zero, Symbol::One, Symbol::Blank];

    pub fn from_bit(b: bool) -> Self {
        if b {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    pub fn bit(self) -> Option<bool> {
        match self {
            Symbol::Zero => Some(false),
            Symbol::One => Some(true),
            Symbol::Blank => None,
        }
    }
}

/// Head movement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    L,
    R,
    N,
}

/// Right-hand side of a transition: next state, written symbol, movement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Action {
    pub next: usize,
    pub write: Symbol,
    pub mv: Move,
}

impl Action {
    pub fn new(next: usize, write: Symbol, mv: Move) -> Self {
        Action { next, write, mv }
    }
}

/// States, final states and a (possibly branching) transition relation.
///
/// State 0 is the initial state. Each `(state, symbol)` key maps to a
/// sorted, duplicate-free list of actions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransitionTable {
    pub states: usize,
    pub finals: BTreeSet<usize>,
    pub rules: BTreeMap<(usize, Symbol), Vec<Action>>,
}

impl TransitionTable {
    pub fn new(states: usize) -> Self {
        TransitionTable {
            states,
            finals: BTreeSet::new(),
            rules: BTreeMap::new(),
        }
    }

    pub fn with_final(mut self, state: usize) -> Self {
        self.finals.insert(state);
        self
    }

    /// Adds `δ(state, read) ∋ (next, write, mv)`.
    pub fn rule(mut self, state: usize, read: Symbol, next: usize, write: Symbol, mv: Move) -> Self {
        self.add_rule(state, read, Action::new(next, write, mv));
        self
    }

    /// Adds the same action for every read symbol, writing back what was read.
    pub fn rule_any(mut self, state: usize, next: usize, mv: Move) -> Self {
        self.add_rule_any(state, next, mv);
        self
    }

    pub fn add_rule_any(&mut self, state: usize, next: usize, mv: Move) {
        for s in Symbol::ALL {
            self.add_rule(state, s, Action::new(next, s, mv));
        }
    }

    pub fn add_rule(&mut self, state: usize, read: Symbol, action: Action) {
        let acts = self.rules.entry((state, read)).or_default();
        if let Err(pos) = acts.binary_search(&action) {
            acts.insert(pos, action);
        }
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals.contains(&state)
    }

    /// Structural well-formedness shared by deterministic and probabilistic
    /// machines: indices in range, no rules out of final states, at least
    /// one rule for every non-final `(state, symbol)`.
    pub fn is_well_formed(&self) -> bool {
        if self.states == 0 || self.finals.iter().any(|&f| f >= self.states) {
            return false;
        }
        let in_range = self.rules.iter().all(|(&(s, _), acts)| {
            s < self.states && !acts.is_empty() && acts.iter().all(|a| a.next < self.states)
        });
        let no_final_rules = self.rules.keys().all(|(s, _)| !self.is_final(*s));
        let complete = (0..self.states)
            .filter(|s| !self.is_final(*s))
            .all(|s| Symbol::ALL.iter().all(|&y| self.rules.contains_key(&(s, y))));
        in_range && no_final_rules && complete
    }

    pub fn is_deterministic(&self) -> bool {
        self.rules.values().all(|acts| acts.len() == 1)
    }

    /// Maximum number of branches offered by any rule.
    pub fn max_branching(&self) -> usize {
        self.rules.values().map(Vec::len).max().unwrap_or(1)
    }
}

/// A deterministic Turing machine, or the designated trivial machine that
/// outputs `0` after exactly one step on every input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MachineDesc {
    Trivial,
    Table(TransitionTable),
}

impl MachineDesc {
    /// Wraps a table; tables that are not complete deterministic machines
    /// become the trivial machine, mirroring the decoding convention.
    pub fn from_table(table: TransitionTable) -> Self {
        if table.is_well_formed() && table.is_deterministic() {
            MachineDesc::Table(table)
        } else {
            MachineDesc::Trivial
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, MachineDesc::Trivial)
    }
}

/// Outcome of a fuel-bounded run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunResult {
    Halted { output: Word, steps: u64 },
    FuelExhausted { steps: u64 },
}

impl RunResult {
    pub fn output(&self) -> Option<&Word> {
        match self {
            RunResult::Halted { output, .. } => Some(output),
            RunResult::FuelExhausted { .. } => None,
        }
    }

    pub fn steps(&self) -> u64 {
        match self {
            RunResult::Halted { steps, .. } | RunResult::FuelExhausted { steps } => *steps,
        }
    }
}

/// A machine configuration: tape, control state and elapsed steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub tape: Tape,
    pub state: usize,
    pub steps: u64,
}

impl Configuration {
    pub fn initial(inputs: &[Word]) -> Self {
        Configuration {
            tape: Tape::with_inputs(inputs),
            state: 0,
            steps: 0,
        }
    }

    pub fn apply(&mut self, action: Action) {
        self.tape.write(action.write);
        self.tape.shift(action.mv);
        self.state = action.next;
        self.steps += 1;
    }
}

/// Runs `m` on the blank-separated `inputs` for at most `fuel` steps.
pub fn run(m: &MachineDesc, inputs: &[Word], fuel: u64) -> RunResult {
    let table = match m {
        MachineDesc::Trivial => {
            return if fuel >= 1 {
                RunResult::Halted {
                    output: Word::from("0"),
                    steps: 1,
                }
            } else {
                RunResult::FuelExhausted { steps: 0 }
            };
        }
        MachineDesc::Table(t) => t,
    };
    let mut cfg = Configuration::initial(inputs);
    loop {
        if table.is_final(cfg.state) {
            return RunResult::Halted {
                output: cfg.tape.output(),
                steps: cfg.steps,
            };
        }
        if cfg.steps >= fuel {
            return RunResult::FuelExhausted { steps: cfg.steps };
        }
        let action = table.rules[&(cfg.state, cfg.tape.read())][0];
        cfg.apply(action);
    }
}

impl fmt::Display for MachineDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MachineDesc::Trivial => f.write_str("trivial machine (outputs 0 after one step)"),
            MachineDesc::Table(t) => f.write_str(&render_table(t)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::library;
    use super::*;

    #[test]
    fn trivial_machine_outputs_zero_in_one_step() {
        let r = run(&MachineDesc::Trivial, &[Word::from("1101")], 10);
        assert_eq!(r, RunResult::Halted { output: Word::from("0"), steps: 1 });
        assert_eq!(run(&MachineDesc::Trivial, &[Word::from("1")], 0), RunResult::FuelExhausted { steps: 0 });
    }

    #[test]
    fn fig1_single_step() {
        let m = library::fig1();
        let r = run(&m, &[Word::from("1")], 100);
        assert_eq!(r, RunResult::Halted { output: Word::empty(), steps: 1 });
        // 110…1: first step writes 0, moves right, enters the final state
        let r = run(&m, &[Word::from("1101")], 100);
        assert_eq!(r, RunResult::Halted { output: Word::from("101"), steps: 1 });
    }

    #[test]
    fn zero_fuel_exhausts() {
        let r = run(&library::parity(), &[Word::from("11")], 0);
        assert_eq!(r, RunResult::FuelExhausted { steps: 0 });
    }

    #[test]
    fn identity_halts_instantly() {
        let r = run(&library::identity(), &[Word::from("0110")], 0);
        assert_eq!(r, RunResult::Halted { output: Word::from("0110"), steps: 0 });
    }

    #[test]
    fn parity_machine() {
        for w in Word::all_up_to(6) {
            let r = run(&library::parity(), std::slice::from_ref(&w), 100);
            let expect = if w.count_ones() % 2 == 1 { "1" } else { "0" };
            assert_eq!(r.output(), Some(&Word::from(expect)), "{w}");
            assert_eq!(r.steps(), w.len() as u64 + 1);
        }
    }

    #[test]
    fn constant_writer() {
        for w in ["", "0", "1", "10", "0110"] {
            let m = library::write_constant(&Word::from(w));
            let r = run(&m, &[Word::from("1011")], 100);
            assert_eq!(r, RunResult::Halted { output: Word::from(w), steps: w.len() as u64 + if w.is_empty() { 1 } else { 2 } });
        }
    }

    #[test]
    fn multi_input_layout() {
        // skip the first input and echo the second
        let m = MachineDesc::from_table(
            TransitionTable::new(2)
                .with_final(1)
                .rule(0, Symbol::Zero, 0, Symbol::Zero, Move::R)
                .rule(0, Symbol::One, 0, Symbol::One, Move::R)
                .rule(0, Symbol::Blank, 1, Symbol::Blank, Move::R),
        );
        let r = run(&m, &[Word::from("10"), Word::from("011")], 10);
        assert_eq!(r, RunResult::Halted { output: Word::from("011"), steps: 3 });
    }

    #[test]
    fn fuel_monotonicity() {
        let m = library::sweep();
        let x = [Word::from("10110")];
        let full = run(&m, &x, 6);
        assert_eq!(full.steps(), 6);
        for f in 6..20 {
            assert_eq!(run(&m, &x, f), full);
        }
        assert!(matches!(run(&m, &x, 5), RunResult::FuelExhausted { steps: 5 }));
    }

    #[test]
    fn incomplete_table_is_trivial() {
        let t = TransitionTable::new(2).with_final(1).rule(0, Symbol::One, 1, Symbol::Zero, Move::R);
        assert!(MachineDesc::from_table(t).is_trivial());
    }
}
