use super::{ReductionFn, TotalDecider, Verdict};
use crate::enumeration::Polynomial;
use crate::error::{Error, Result};
use crate::tm::{encode_godel, library, run, Action, Configuration, MachineDesc, Move, Symbol, TransitionTable};
use crate::word::Word;

/// A deterministic machine with a distinguished oracle state.
///
/// Whenever a transition enters the oracle state, the word from the head to
/// the next blank is replaced by the oracle's answer (`1` or `0`, written at
/// the head) at the cost of one extra step; the machine then continues with
/// the oracle state's own transitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleMachine {
    pub base: MachineDesc,
    pub oracle_state: Option<usize>,
    pub runtime: Polynomial,
}

impl OracleMachine {
    /// A plain machine that never queries.
    pub fn without_queries(base: MachineDesc, runtime: Polynomial) -> Self {
        OracleMachine {
            base,
            oracle_state: None,
            runtime,
        }
    }

    /// Encoding `1^(q+1) 0 ++ ⟨base⟩`, or `0 ++ ⟨base⟩` without oracle state.
    pub fn encode(&self) -> Word {
        let head = match self.oracle_state {
            Some(q) => format!("{}0", "1".repeat(q + 1)),
            None => "0".to_string(),
        };
        let mut bits: Vec<bool> = head.chars().map(|c| c == '1').collect();
        bits.extend_from_slice(encode_godel(&self.base).bits());
        Word::from_bits(bits)
    }

    /// Inverse of [`encode`](Self::encode); an oracle state that is out of
    /// range or final yields the trivial machine without queries.
    pub fn decode(bits: &Word, runtime: Polynomial) -> Self {
        let b = bits.bits();
        let ones = b.iter().take_while(|&&x| x).count();
        let trivial = Self::without_queries(MachineDesc::Trivial, runtime.clone());
        if b.get(ones) != Some(&false) {
            return trivial;
        }
        let base = crate::tm::decode_godel(&Word::from_bits(b[ones + 1..].to_vec()));
        if ones == 0 {
            return Self::without_queries(base, runtime);
        }
        let q = ones - 1;
        match &base {
            MachineDesc::Table(t) if q < t.states && !t.is_final(q) => OracleMachine {
                base,
                oracle_state: Some(q),
                runtime,
            },
            _ => trivial,
        }
    }
}

/// Runs `o` on `x` against a promise-respecting oracle. Returns whether the
/// machine halts with output `1`.
pub fn cook_run(o: &OracleMachine, oracle: &TotalDecider, x: &Word) -> Result<bool> {
    let fuel = o.runtime.eval(x.len() as u64);
    let table = match (&o.base, o.oracle_state) {
        (MachineDesc::Table(t), Some(q)) => (t, q),
        (m, _) => {
            return match run(m, std::slice::from_ref(x), fuel).output() {
                Some(out) => Ok(out.bits() == [true]),
                None => Err(Error::FuelExhausted { fuel }),
            };
        }
    };
    let (t, q) = table;
    let mut cfg = Configuration::initial(std::slice::from_ref(x));
    loop {
        if t.is_final(cfg.state) {
            return Ok(cfg.tape.output().bits() == [true]);
        }
        if cfg.steps >= fuel {
            return Err(Error::FuelExhausted { fuel });
        }
        let action = t.rules[&(cfg.state, cfg.tape.read())][0];
        cfg.apply(action);
        if cfg.state == q {
            if cfg.steps >= fuel {
                return Err(Error::FuelExhausted { fuel });
            }
            let head = cfg.tape.head();
            let w = cfg.tape.word_at(head);
            let answer = match oracle.classify(&w)? {
                Verdict::Yes => true,
                Verdict::No => false,
                Verdict::OutsidePromise => return Err(Error::NonPromisedQuery(w)),
            };
            for k in 1..w.len() as i64 {
                cfg.tape.set(head + k, Symbol::Blank);
            }
            cfg.tape.set(head, Symbol::from_bit(answer));
            cfg.steps += 1;
        }
    }
}

/// The one-query oracle machine of a machine-backed Karp reduction: compute
/// `f(x)`, query it, echo the answer. Returns `None` for builtin reductions.
pub fn karp_to_cook(f: &ReductionFn) -> Option<OracleMachine> {
    let ReductionFn::Machine { machine, runtime } = f else {
        return None;
    };
    let inner = match machine {
        MachineDesc::Table(t) => t.clone(),
        MachineDesc::Trivial => match library::write_constant(&Word::from("0")) {
            MachineDesc::Table(t) => t,
            MachineDesc::Trivial => unreachable!("constant writer is well-formed"),
        },
    };
    // state 0: fresh no-op start; 1..=n: f's states; then query, erase, halt
    let n = inner.states;
    let (q, erase, fin) = (n + 1, n + 2, n + 3);
    let shift = |s: usize| if inner.is_final(s) { q } else { s + 1 };
    let mut t = TransitionTable::new(n + 4);
    for &f in &inner.finals {
        t.finals.insert(f + 1);
    }
    t.finals.insert(fin);
    t.add_rule_any(0, shift(0), Move::N);
    for (&(s, read), acts) in &inner.rules {
        for a in acts {
            t.add_rule(s + 1, read, Action::new(shift(a.next), a.write, a.mv));
        }
    }
    t.add_rule_any(q, erase, Move::R);
    for read in Symbol::ALL {
        t.add_rule(erase, read, Action::new(fin, Symbol::Blank, Move::L));
    }
    let base = MachineDesc::from_table(t);
    debug_assert!(!base.is_trivial());
    let mut coeffs = runtime.coeffs().to_vec();
    if coeffs.is_empty() {
        coeffs.push(0);
    }
    coeffs[0] += 4;
    Some(OracleMachine {
        base,
        oracle_state: Some(q),
        runtime: Polynomial::new(coeffs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::promise::registry::{builtin, parity};

    #[test]
    fn echo_machine_queries_its_input() {
        let o = karp_to_cook(&ReductionFn::identity()).unwrap();
        assert!(cook_run(&o, &parity(), &Word::from("1")).unwrap());
        assert!(!cook_run(&o, &parity(), &Word::from("11")).unwrap());
        let unary = builtin("unary").unwrap();
        assert_eq!(
            cook_run(&o, &unary, &Word::from("10")),
            Err(Error::NonPromisedQuery(Word::from("10")))
        );
    }

    #[test]
    fn prefix_reduction_queries_marked_word() {
        let o = karp_to_cook(&ReductionFn::prepend(false)).unwrap();
        let seen = TotalDecider::from_fn("starts-with-0", |w| Verdict::from_bool(w.bits().first() == Some(&false)));
        for x in Word::all_up_to(4) {
            assert!(cook_run(&o, &seen, &x).unwrap());
        }
    }

    #[test]
    fn no_queries_is_plain_run() {
        let o = OracleMachine::without_queries(library::parity(), Polynomial::linear(1, 1));
        assert!(cook_run(&o, &TotalDecider::constant(Verdict::OutsidePromise), &Word::from("01")).unwrap());
        let slow = OracleMachine::without_queries(library::loop_forever(), Polynomial::constant(5));
        assert_eq!(cook_run(&slow, &parity(), &Word::empty()), Err(Error::FuelExhausted { fuel: 5 }));
    }

    #[test]
    fn parity_self_reduction_agrees() {
        let o = karp_to_cook(&ReductionFn::identity()).unwrap();
        for x in Word::all_up_to(6) {
            let want = parity().classify(&x).unwrap() == Verdict::Yes;
            assert_eq!(cook_run(&o, &parity(), &x).unwrap(), want);
        }
    }

    #[test]
    fn encoding_roundtrip() {
        let o = karp_to_cook(&ReductionFn::prepend(true)).unwrap();
        assert_eq!(OracleMachine::decode(&o.encode(), o.runtime.clone()), o);
        let plain = OracleMachine::without_queries(library::parity(), Polynomial::zero());
        assert_eq!(OracleMachine::decode(&plain.encode(), Polynomial::zero()), plain);
        assert!(OracleMachine::decode(&Word::from("111"), Polynomial::zero()).base.is_trivial());
    }

    #[test]
    fn tight_runtime_suffices() {
        // prepend takes 2 steps; the wrapper adds start, query, erase and halt
        let o = karp_to_cook(&ReductionFn::prepend(false)).unwrap();
        assert_eq!(o.runtime, Polynomial::constant(6));
        let starved = OracleMachine {
            runtime: Polynomial::constant(5),
            ..o
        };
        assert_eq!(cook_run(&starved, &parity(), &Word::from("1")), Err(Error::FuelExhausted { fuel: 5 }));
    }
}
