//! Self-delimiting binary Gödel encoding of transition tables.
//!
//! ```text
//! machine    = 1^s "0" final* "00" quintuple*
//! final      = 1^(f+1) "0"
//! quintuple  = 1^(q+1) "0" sym "0" 1^(q'+1) "0" sym "0" move "00"
//! sym        = "1" (0) | "10" (1) | "11" (blank)
//! move       = "1" (L) | "10" (R) | "11" (N)
//! ```
//!
//! Probabilistic machines repeat the key `(q, sym)` once per branch. Any
//! parse failure, repeated quintuple or final index, or (for deterministic
//! machines) missing/ambiguous transition decodes to the trivial machine,
//! whose canonical encoding is the empty word.

use std::collections::BTreeSet;

use super::{Action, MachineDesc, Move, Symbol, TransitionTable};
use crate::word::Word;

struct Reader<'a> {
    bits: &'a [bool],
    pos: usize,
}

impl Reader<'_> {
    fn peek(&self, k: usize) -> Option<bool> {
        self.bits.get(self.pos + k).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bits.len()
    }

    fn expect(&mut self, bit: bool) -> Option<()> {
        (self.peek(0)? == bit).then(|| self.pos += 1)
    }

    /// A non-empty run of ones; returns its length.
    fn unary(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek(0) == Some(true) {
            self.pos += 1;
        }
        (self.pos > start).then_some(self.pos - start)
    }

    /// One of the codes "1", "10", "11" followed by `zeros` separator zeros.
    /// The item after the separator always starts with a one (or ends the
    /// input), which disambiguates "1"+"0…" from "10"+"0…".
    fn code(&mut self, zeros: usize) -> Option<u8> {
        self.expect(true)?;
        let code = match self.peek(0)? {
            true => {
                self.pos += 1;
                2
            }
            false => {
                let long = (0..=zeros).all(|k| self.peek(k) == Some(false));
                if long {
                    self.pos += 1;
                    1
                } else {
                    0
                }
            }
        };
        for _ in 0..zeros {
            self.expect(false)?;
        }
        Some(code)
    }
}

fn sym_of(code: u8) -> Symbol {
    [Symbol::Zero, Symbol::One, Symbol::Blank][code as usize]
}

fn move_of(code: u8) -> Move {
    [Move::L, Move::R, Move::N][code as usize]
}

fn sym_code(s: Symbol) -> &'static str {
    match s {
        Symbol::Zero => "1",
        Symbol::One => "10",
        Symbol::Blank => "11",
    }
}

fn move_code(m: Move) -> &'static str {
    match m {
        Move::L => "1",
        Move::R => "10",
        Move::N => "11",
    }
}

/// Parses the grammar without checking completeness or determinism.
pub fn parse_table(bits: &Word) -> Option<TransitionTable> {
    let mut r = Reader {
        bits: bits.bits(),
        pos: 0,
    };
    let states = r.unary()?;
    r.expect(false)?;
    let mut finals = BTreeSet::new();
    loop {
        match r.peek(0)? {
            true => {
                let f = r.unary()? - 1;
                r.expect(false)?;
                if !finals.insert(f) {
                    return None;
                }
            }
            false => {
                r.expect(false)?;
                r.expect(false)?;
                break;
            }
        }
    }
    let mut table = TransitionTable::new(states);
    table.finals = finals;
    let mut seen = BTreeSet::new();
    while !r.at_end() {
        let q = r.unary()? - 1;
        r.expect(false)?;
        let read = sym_of(r.code(1)?);
        let next = r.unary()? - 1;
        r.expect(false)?;
        let write = sym_of(r.code(1)?);
        let mv = move_of(r.code(2)?);
        let action = Action::new(next, write, mv);
        if !seen.insert((q, read, action)) {
            return None;
        }
        table.add_rule(q, read, action);
    }
    Some(table)
}

pub fn encode_table(t: &TransitionTable) -> Word {
    let mut s = String::new();
    s.push_str(&"1".repeat(t.states));
    s.push('0');
    for &f in &t.finals {
        s.push_str(&"1".repeat(f + 1));
        s.push('0');
    }
    s.push_str("00");
    for (&(q, read), acts) in &t.rules {
        for a in acts {
            s.push_str(&"1".repeat(q + 1));
            s.push('0');
            s.push_str(sym_code(read));
            s.push('0');
            s.push_str(&"1".repeat(a.next + 1));
            s.push('0');
            s.push_str(sym_code(a.write));
            s.push('0');
            s.push_str(move_code(a.mv));
            s.push_str("00");
        }
    }
    Word::from(s.as_str())
}

/// Decodes a deterministic machine; anything else is the trivial machine.
pub fn decode_godel(bits: &Word) -> MachineDesc {
    parse_table(bits).map_or(MachineDesc::Trivial, MachineDesc::from_table)
}

/// Canonical encoding; the trivial machine encodes as the empty word.
pub fn encode_godel(m: &MachineDesc) -> Word {
    match m {
        MachineDesc::Trivial => Word::empty(),
        MachineDesc::Table(t) => encode_table(t),
    }
}

/// Human-readable transition listing.
pub fn render_table(t: &TransitionTable) -> String {
    let sym = |s: Symbol| match s {
        Symbol::Zero => "0",
        Symbol::One => "1",
        Symbol::Blank => "□",
    };
    let finals: Vec<String> = t.finals.iter().map(|f| format!("z{f}")).collect();
    let mut out = format!("states: {}, initial: z0, finals: {{{}}}\n", t.states, finals.join(", "));
    for (&(q, read), acts) in &t.rules {
        let rhs: Vec<String> = acts
            .iter()
            .map(|a| format!("(z{},{},{:?})", a.next, sym(a.write), a.mv))
            .collect();
        out.push_str(&format!("δ(z{q},{}) = {}\n", sym(read), rhs.join(" | ")));
    }
    out
}
