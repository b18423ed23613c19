use super::{Move, Symbol};
use crate::word::Word;

/// Two-way infinite tape; cells outside the stored window are blank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tape {
    cells: Vec<Symbol>,
    /// Index in `cells` of tape position 0.
    origin: usize,
    head: i64,
}

impl Tape {
    pub fn blank() -> Self {
        Tape {
            cells: Vec::new(),
            origin: 0,
            head: 0,
        }
    }

    /// Inputs written from cell 0, separated by single blanks; head on cell 0.
    pub fn with_inputs(inputs: &[Word]) -> Self {
        let mut cells = Vec::new();
        for (k, w) in inputs.iter().enumerate() {
            if k > 0 {
                cells.push(Symbol::Blank);
            }
            cells.extend(w.bits().iter().map(|&b| Symbol::from_bit(b)));
        }
        Tape {
            cells,
            origin: 0,
            head: 0,
        }
    }

    pub fn head(&self) -> i64 {
        self.head
    }

    pub fn get(&self, pos: i64) -> Symbol {
        let idx = pos + self.origin as i64;
        if idx < 0 {
            return Symbol::Blank;
        }
        self.cells.get(idx as usize).copied().unwrap_or(Symbol::Blank)
    }

    pub fn set(&mut self, pos: i64, s: Symbol) {
        let mut idx = pos + self.origin as i64;
        if idx < 0 {
            if s == Symbol::Blank {
                return;
            }
            let grow = (-idx) as usize;
            self.cells.splice(0..0, std::iter::repeat_n(Symbol::Blank, grow));
            self.origin += grow;
            idx = 0;
        }
        let idx = idx as usize;
        if idx >= self.cells.len() {
            if s == Symbol::Blank {
                return;
            }
            self.cells.resize(idx + 1, Symbol::Blank);
        }
        self.cells[idx] = s;
    }

    pub fn read(&self) -> Symbol {
        self.get(self.head)
    }

    pub fn write(&mut self, s: Symbol) {
        self.set(self.head, s);
    }

    pub fn shift(&mut self, mv: Move) {
        match mv {
            Move::L => self.head -= 1,
            Move::R => self.head += 1,
            Move::N => {}
        }
    }

    /// The word from the head up to (excluding) the next blank.
    pub fn output(&self) -> Word {
        self.word_at(self.head)
    }

    pub fn word_at(&self, start: i64) -> Word {
        let mut bits = Vec::new();
        let mut pos = start;
        while let Some(b) = self.get(pos).bit() {
            bits.push(b);
            pos += 1;
        }
        Word::from_bits(bits)
    }

    /// Number of non-blank cells.
    pub fn non_blank(&self) -> usize {
        self.cells.iter().filter(|&&s| s != Symbol::Blank).count()
    }
}
