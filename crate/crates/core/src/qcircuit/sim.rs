use num_traits::Zero;

use super::{Circuit, Gate, QUBIT_CAP, WITNESS_CAP};
use crate::error::{Error, Result};
use crate::field::{Cyclo8, Matrix};
use crate::scalar::Scalar;
use crate::word::Word;

/// Amplitudes of an `n`-qubit register; index bit `n − q` belongs to qubit `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<S> {
    num_qubits: usize,
    amps: Vec<Cyclo8<S>>,
}

impl<S: Scalar> StateVector<S> {
    /// The computational basis state `|bits⟩`, qubit 1 first.
    pub fn basis(bits: &Word) -> Result<Self> {
        let n = bits.len();
        if n > QUBIT_CAP {
            return Err(Error::DimensionCap {
                what: "qubits",
                requested: n,
                cap: QUBIT_CAP,
            });
        }
        let idx = bits.bits().iter().fold(0usize, |acc, &b| acc << 1 | usize::from(b));
        let mut amps = vec![Cyclo8::zero(); 1 << n];
        amps[idx] = Cyclo8::from_scalar(S::one());
        Ok(StateVector { num_qubits: n, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Cyclo8<S>] {
        &self.amps
    }

    fn mask(&self, q: usize) -> usize {
        1 << (self.num_qubits - q)
    }

    pub fn apply(&mut self, g: &Gate) {
        match *g {
            Gate::H(q) => {
                let m = self.mask(q);
                let r = Cyclo8::<S>::inv_sqrt2();
                for i in (0..self.amps.len()).filter(|i| i & m == 0) {
                    let (a, b) = (&self.amps[i], &self.amps[i | m]);
                    let (s, d) = (a + b, a - b);
                    self.amps[i] = &r * &s;
                    self.amps[i | m] = &r * &d;
                }
            }
            Gate::T(q) => {
                let m = self.mask(q);
                let w = Cyclo8::<S>::omega();
                for i in (0..self.amps.len()).filter(|i| i & m != 0) {
                    self.amps[i] = &self.amps[i] * &w;
                }
            }
            Gate::Cnot { control, target } => {
                let (c, t) = (self.mask(control), self.mask(target));
                for i in (0..self.amps.len()).filter(|i| i & c != 0 && i & t == 0) {
                    self.amps.swap(i, i | t);
                }
            }
        }
    }

    /// Σ |amp|².
    pub fn norm_sqr(&self) -> Cyclo8<S> {
        self.amps.iter().fold(Cyclo8::zero(), |acc, a| &acc + &a.norm_sqr())
    }

    /// Probability of measuring qubit 1 as `1`.
    pub fn output_probability(&self) -> Cyclo8<S> {
        let m = self.mask(1);
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & m != 0)
            .fold(Cyclo8::zero(), |acc, (_, a)| &acc + &a.norm_sqr())
    }
}

/// Applies the gates of `c` in order to `|basis_input⟩`.
pub fn simulate<S: Scalar>(c: &Circuit, basis_input: &Word) -> Result<StateVector<S>> {
    if basis_input.len() != c.total_qubits {
        return Err(Error::InputLength {
            expected: c.total_qubits,
            got: basis_input.len(),
        });
    }
    let mut psi = StateVector::basis(basis_input)?;
    for g in &c.gates {
        psi.apply(g);
    }
    Ok(psi)
}

/// Acceptance probability `‖Π_acc U|input⟩‖²`; zero for the trivial circuit.
pub fn p_acc<S: Scalar>(c: &Circuit, basis_input: &Word) -> Result<Cyclo8<S>> {
    if c.trivial {
        return Ok(Cyclo8::zero());
    }
    Ok(simulate::<S>(c, basis_input)?.output_probability())
}

/// Register contents for witness `y`: workspace zeros, then `y`.
pub fn basis_input(c: &Circuit, y: &Word) -> Word {
    let mut bits = vec![false; c.total_qubits - c.witness_qubits];
    bits.extend_from_slice(y.bits());
    Word::from_bits(bits)
}

/// The `2^m × 2^m` operator `Q[y′][y] = ⟨y′,0|U† Π_acc U|y,0⟩`, built from
/// one simulation per witness basis state. For `m = 0` it is the `1 × 1`
/// matrix holding the acceptance probability.
pub fn acceptance_operator<S: Scalar>(c: &Circuit) -> Result<Matrix<S>> {
    let m = c.witness_qubits;
    if m > WITNESS_CAP {
        return Err(Error::DimensionCap {
            what: "witness qubits",
            requested: m,
            cap: WITNESS_CAP,
        });
    }
    let dim = 1 << m;
    if c.trivial {
        return Ok(Matrix::zeros(dim));
    }
    let out = 1 << (c.total_qubits - 1);
    let states = (0..dim)
        .map(|y| {
            let w = Word::from_bits((0..m).map(|k| y >> (m - 1 - k) & 1 == 1).collect());
            simulate::<S>(c, &basis_input(c, &w))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut q = Matrix::zeros(dim);
    for (r, left) in states.iter().enumerate() {
        for (col, right) in states.iter().enumerate().skip(r) {
            let entry = left
                .amps
                .iter()
                .zip(&right.amps)
                .enumerate()
                .filter(|(i, _)| i & out != 0)
                .fold(Cyclo8::zero(), |acc, (_, (a, b))| &acc + &(&a.conj() * b));
            q.set(col, r, entry.conj());
            q.set(r, col, entry);
        }
    }
    if S::EXACT && !q.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::{FieldElem, Rational};

    fn exact(c: &Circuit, input: &str) -> StateVector<Rational> {
        simulate(c, &Word::from(input)).unwrap()
    }

    #[test]
    fn hadamard_column() {
        let c = Circuit::new(vec![Gate::H(1)], 0).unwrap();
        let psi = exact(&c, "0");
        assert_eq!(psi.amplitudes(), &[FieldElem::inv_sqrt2(), FieldElem::inv_sqrt2()]);
        let psi = exact(&c, "1");
        assert_eq!(psi.amplitudes(), &[FieldElem::inv_sqrt2(), -FieldElem::inv_sqrt2()]);
        let hh = Circuit::new(vec![Gate::H(1), Gate::H(1)], 0).unwrap();
        assert_eq!(exact(&hh, "0").amplitudes(), &[FieldElem::from_ints(1, 0, 0, 0), FieldElem::zero()]);
    }

    #[test]
    fn acceptance_probabilities() {
        let h = Circuit::new(vec![Gate::H(1)], 0).unwrap();
        assert_eq!(p_acc::<Rational>(&h, &Word::from("0")).unwrap(), FieldElem::from_rational(ratio(1, 2)));
        let t = Circuit::new(vec![Gate::T(1)], 0).unwrap();
        assert!(p_acc::<Rational>(&t, &Word::from("0")).unwrap().is_zero());
        assert!(p_acc::<Rational>(&Circuit::trivial(0), &Word::from("0")).unwrap().is_zero());
    }

    #[test]
    fn qubit_one_is_most_significant() {
        let c = Circuit::new(vec![Gate::Cnot { control: 1, target: 2 }], 0).unwrap();
        let psi = exact(&c, "10");
        assert_eq!(psi.amplitudes()[0b11], FieldElem::from_ints(1, 0, 0, 0));
    }

    #[test]
    fn input_length_and_cap() {
        let c = Circuit::new(vec![Gate::H(2)], 0).unwrap();
        assert_eq!(
            simulate::<Rational>(&c, &Word::from("0")),
            Err(Error::InputLength { expected: 2, got: 1 })
        );
        let big = Circuit::new(vec![Gate::H(21)], 0).unwrap();
        assert!(matches!(
            simulate::<f64>(&big, &Word::zeros(21)),
            Err(Error::DimensionCap { what: "qubits", .. })
        ));
    }

    #[test]
    fn witness_copy_operator() {
        let c = Circuit::new(vec![Gate::Cnot { control: 2, target: 1 }], 1).unwrap();
        let q = acceptance_operator::<Rational>(&c).unwrap();
        let want = Matrix::diagonal(vec![FieldElem::zero(), FieldElem::from_ints(1, 0, 0, 0)]);
        assert_eq!(q, want);
    }

    #[test]
    fn witness_independent_operator_is_scalar() {
        // H on the workspace qubit, only a phase on the witness qubit 2
        let c = Circuit::new(vec![Gate::H(1), Gate::T(2)], 1).unwrap();
        let q = acceptance_operator::<Rational>(&c).unwrap();
        assert_eq!(q, Matrix::scalar(2, FieldElem::from_rational(ratio(1, 2))));
    }

    #[test]
    fn zero_witness_operator_is_p_acc() {
        let c = Circuit::new(vec![Gate::H(1)], 0).unwrap();
        let q = acceptance_operator::<Rational>(&c).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(*q.get(0, 0), FieldElem::from_rational(ratio(1, 2)));
    }
}
