use super::{Circuit, Gate};
use crate::word::Word;

struct Reader<'a> {
    bits: &'a [bool],
    pos: usize,
}

impl Reader<'_> {
    fn bit(&mut self) -> Option<bool> {
        let b = *self.bits.get(self.pos)?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, b: bool) -> Option<()> {
        (self.bit()? == b).then_some(())
    }

    /// A maximal run of ones, at least one long.
    fn unary(&mut self) -> Option<usize> {
        let n = self.bits[self.pos..].iter().take_while(|&&b| b).count();
        self.pos += n;
        (n >= 1).then_some(n)
    }

    fn at_end(&self) -> bool {
        self.pos == self.bits.len()
    }

    fn gate(&mut self) -> Option<Gate> {
        let op = (self.bit()?, self.bit()?);
        self.expect(false)?;
        let q = self.unary()?;
        match op {
            (false, true) => Some(Gate::H(q)),
            (true, false) => Some(Gate::T(q)),
            (true, true) => {
                self.expect(false)?;
                Some(Gate::Cnot {
                    control: q,
                    target: self.unary()?,
                })
            }
            (false, false) => None,
        }
    }
}

fn parse_inner(bits: &[bool], expect_witness_header: bool) -> Result<Circuit, usize> {
    let mut r = Reader { bits, pos: 0 };
    let mut m = 0;
    if expect_witness_header {
        m = bits.iter().take_while(|&&b| b).count();
        r.pos = m;
        if r.expect(false).and_then(|_| r.expect(false)).is_none() {
            return Err(0);
        }
    }
    let mut gates = Vec::new();
    if !r.at_end() {
        loop {
            gates.push(r.gate().ok_or(m)?);
            if r.at_end() {
                break;
            }
            r.expect(false).ok_or(m)?;
        }
    }
    Circuit::new(gates, m).ok_or(m)
}

/// Parses `[1^m 00] gate (0 gate)*`. Malformed input yields the trivial
/// circuit; it keeps `m` when the witness header itself was readable.
pub fn parse_circuit(bits: &Word, expect_witness_header: bool) -> Circuit {
    parse_inner(bits.bits(), expect_witness_header).unwrap_or_else(Circuit::trivial)
}

fn push(s: &mut String, g: &Gate) {
    let unary = |n: usize| "1".repeat(n);
    match *g {
        Gate::H(q) => s.push_str(&format!("010{}", unary(q))),
        Gate::T(q) => s.push_str(&format!("100{}", unary(q))),
        Gate::Cnot { control, target } => s.push_str(&format!("110{}0{}", unary(control), unary(target))),
    }
}

fn gatestream(c: &Circuit) -> String {
    if c.trivial {
        // "0" is not a gate, so this never parses
        return "0".to_string();
    }
    let mut s = String::new();
    for (k, g) in c.gates.iter().enumerate() {
        if k > 0 {
            s.push('0');
        }
        push(&mut s, g);
    }
    s
}

/// Canonical encoding; the witness header is emitted iff `m > 0`.
/// The trivial circuit's gatestream is `0`.
pub fn encode_circuit(c: &Circuit) -> Word {
    if c.witness_qubits > 0 {
        encode_with_header(c)
    } else {
        Word::from(gatestream(c).as_str())
    }
}

/// Canonical encoding with the `1^m 00` header, also for `m = 0`.
pub fn encode_with_header(c: &Circuit) -> Word {
    let s = format!("{}00{}", "1".repeat(c.witness_qubits), gatestream(c));
    Word::from(s.as_str())
}
