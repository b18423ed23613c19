//! Small hand-built machines used as toy instances and generators.

use super::{Action, MachineDesc, Move, Symbol, TransitionTable};
use crate::word::Word;

/// δ(z0,1) = (z1,0,R) with z1 final, completed by a right-moving loop on 0
/// and a stationary loop on blank.
pub fn fig1() -> MachineDesc {
    MachineDesc::from_table(
        TransitionTable::new(2)
            .with_final(1)
            .rule(0, Symbol::One, 1, Symbol::Zero, Move::R)
            .rule(0, Symbol::Zero, 0, Symbol::Zero, Move::R)
            .rule(0, Symbol::Blank, 0, Symbol::Blank, Move::N),
    )
}

/// Halts immediately; outputs its (first) input.
pub fn identity() -> MachineDesc {
    MachineDesc::from_table(TransitionTable::new(1).with_final(0))
}

/// Never halts.
pub fn loop_forever() -> MachineDesc {
    MachineDesc::from_table(TransitionTable::new(1).rule_any(0, 0, Move::N))
}

/// Runs right to the first blank and halts there: `n + 1` steps on length `n`.
pub fn sweep() -> MachineDesc {
    MachineDesc::from_table(
        TransitionTable::new(2)
            .with_final(1)
            .rule(0, Symbol::Zero, 0, Symbol::Zero, Move::R)
            .rule(0, Symbol::One, 0, Symbol::One, Move::R)
            .rule(0, Symbol::Blank, 1, Symbol::Blank, Move::N),
    )
}

/// Halts on the first `1` (or blank); runtime depends on the input content.
pub fn first_one() -> MachineDesc {
    MachineDesc::from_table(
        TransitionTable::new(2)
            .with_final(1)
            .rule(0, Symbol::Zero, 0, Symbol::Zero, Move::R)
            .rule(0, Symbol::One, 1, Symbol::One, Move::N)
            .rule(0, Symbol::Blank, 1, Symbol::Blank, Move::N),
    )
}

/// Outputs `1` iff the input holds an odd number of ones; `n + 1` steps.
pub fn parity() -> MachineDesc {
    MachineDesc::from_table(
        TransitionTable::new(3)
            .with_final(2)
            .rule(0, Symbol::Zero, 0, Symbol::Zero, Move::R)
            .rule(0, Symbol::One, 1, Symbol::One, Move::R)
            .rule(0, Symbol::Blank, 2, Symbol::Zero, Move::N)
            .rule(1, Symbol::Zero, 1, Symbol::Zero, Move::R)
            .rule(1, Symbol::One, 0, Symbol::One, Move::R)
            .rule(1, Symbol::Blank, 2, Symbol::One, Move::N),
    )
}

/// Outputs `bit ++ x`.
pub fn prepend(bit: bool) -> MachineDesc {
    MachineDesc::from_table(
        TransitionTable::new(3)
            .with_final(2)
            .rule_any(0, 1, Move::L)
            .rule(1, Symbol::Zero, 2, Symbol::from_bit(bit), Move::N)
            .rule(1, Symbol::One, 2, Symbol::from_bit(bit), Move::N)
            .rule(1, Symbol::Blank, 2, Symbol::from_bit(bit), Move::N),
    )
}

/// Appends a chain of states that writes `w` to the left of cell −1 and
/// halts on its first symbol. The chain assumes the head is on cell 0.
/// Returns the entry state; `fin` is the state entered after writing.
pub fn add_constant_writer(t: &mut TransitionTable, w: &Word, fin: usize) -> usize {
    let entry = t.states;
    let k = w.len();
    if k == 0 {
        t.states += 1;
        t.add_rule_any(entry, fin, Move::L);
        return entry;
    }
    // entry steps to cell −1, entry+1 to cell −2, then w is written right to left
    t.states += 2 + k;
    t.add_rule_any(entry, entry + 1, Move::L);
    t.add_rule_any(entry + 1, entry + 2, Move::L);
    for j in 0..k {
        let state = entry + 2 + j;
        let sym = Symbol::from_bit(w.bits()[k - 1 - j]);
        let (next, mv) = if j + 1 == k { (fin, Move::N) } else { (state + 1, Move::L) };
        for read in Symbol::ALL {
            t.add_rule(state, read, Action::new(next, sym, mv));
        }
    }
    entry
}

/// Outputs the constant word `w` on every input: `|w| + 2` steps
/// (one step when `w` is empty).
pub fn write_constant(w: &Word) -> MachineDesc {
    // state 0 is the writer entry, the final state is appended last
    let mut t = TransitionTable::new(0);
    let fin_placeholder = usize::MAX;
    add_constant_writer(&mut t, w, fin_placeholder);
    let fin = t.states;
    t.states += 1;
    t.finals.insert(fin);
    let rules = std::mem::take(&mut t.rules);
    for (key, acts) in rules {
        for mut a in acts {
            if a.next == fin_placeholder {
                a.next = fin;
            }
            t.add_rule(key.0, key.1, a);
        }
    }
    MachineDesc::from_table(t)
}

pub fn always_accept() -> MachineDesc {
    write_constant(&Word::from("1"))
}

pub fn always_reject() -> MachineDesc {
    write_constant(&Word::from("0"))
}

/// Outputs `10`, the total-decider token for non-promised inputs.
pub fn always_outside() -> MachineDesc {
    write_constant(&Word::from("10"))
}
