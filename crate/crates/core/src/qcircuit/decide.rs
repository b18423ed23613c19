use super::sim::{acceptance_operator, basis_input, p_acc};
use super::{encoding::parse_circuit, Circuit, WITNESS_CAP};
use crate::enumeration::Polynomial;
use crate::error::{Error, Result};
use crate::field::Matrix;
use crate::promise::{Thresholds, Verdict};
use crate::tm::{run, MachineDesc, RunResult};
use crate::word::Word;
use crate::{ExactMatrix, FieldElem, Rational};

/// Runs a circuit generator on `x` with fuel `runtime(|x|)`.
pub fn run_generator(gen: &MachineDesc, runtime: &Polynomial, x: &Word) -> Result<Word> {
    let fuel = runtime.eval(x.len() as u64);
    match run(gen, std::slice::from_ref(x), fuel) {
        RunResult::Halted { output, .. } => Ok(output),
        RunResult::FuelExhausted { .. } => Err(Error::GeneratorFuelExhausted { fuel }),
    }
}

pub fn circuit_bqp(c: &Circuit, th: &Thresholds) -> Result<Verdict> {
    let p = p_acc::<Rational>(c, &Word::zeros(c.total_qubits()))?;
    th.classify_field(&p)
}

/// Basis-witness loop: `Yes` if some `y` reaches `c`, `No` if all stay at
/// or below `s`.
pub fn circuit_qcma(c: &Circuit, th: &Thresholds) -> Result<Verdict> {
    let m = c.witness_qubits();
    if m > WITNESS_CAP {
        return Err(Error::WitnessSpaceTooLarge { bits: m, cap: WITNESS_CAP });
    }
    let mut all_no = true;
    for y in Word::all_of_len(m) {
        match th.classify_field(&p_acc::<Rational>(c, &basis_input(c, &y))?)? {
            Verdict::Yes => return Ok(Verdict::Yes),
            Verdict::No => {}
            Verdict::OutsidePromise => all_no = false,
        }
    }
    Ok(if all_no { Verdict::No } else { Verdict::OutsidePromise })
}

/// Trichotomy on the largest eigenvalue of a Hermitian `q` without
/// computing it: `λ_max ≥ c` iff `cI − Q` is not positive definite, and
/// `λ_max ≤ s` iff `sI − Q` is positive semi-definite.
pub fn operator_verdict(q: &ExactMatrix, th: &Thresholds) -> Result<Verdict> {
    let scaled = |t: &Rational| Matrix::scalar(q.dim(), FieldElem::from_rational(t.clone())).sub(q);
    if !scaled(th.c()).sylvester_pd()? {
        Ok(Verdict::Yes)
    } else if scaled(th.s()).sylvester_psd()? {
        Ok(Verdict::No)
    } else {
        Ok(Verdict::OutsidePromise)
    }
}

pub fn circuit_qma(c: &Circuit, th: &Thresholds) -> Result<Verdict> {
    if c.witness_qubits() > WITNESS_CAP {
        return Err(Error::DimensionCap {
            what: "witness qubits",
            requested: c.witness_qubits(),
            cap: WITNESS_CAP,
        });
    }
    operator_verdict(&acceptance_operator::<Rational>(c)?, th)
}

/// Extremal BQP verdict of a generator: the output is parsed without a
/// witness header and started on `|0…0⟩`.
pub fn classify_bqp(gen: &MachineDesc, runtime: &Polynomial, x: &Word, th: &Thresholds) -> Result<Verdict> {
    circuit_bqp(&parse_circuit(&run_generator(gen, runtime, x)?, false), th)
}

pub fn classify_qcma(gen: &MachineDesc, runtime: &Polynomial, x: &Word, th: &Thresholds) -> Result<Verdict> {
    circuit_qcma(&parse_circuit(&run_generator(gen, runtime, x)?, true), th)
}

pub fn classify_qma(gen: &MachineDesc, runtime: &Polynomial, x: &Word, th: &Thresholds) -> Result<Verdict> {
    circuit_qma(&parse_circuit(&run_generator(gen, runtime, x)?, true), th)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcircuit::{encode_circuit, Gate};
    use crate::scalar::ratio;
    use crate::tm::library;

    fn generator(c: &Circuit) -> (MachineDesc, Polynomial) {
        let w = encode_circuit(c);
        let steps = w.len() as u64 + 2;
        (library::write_constant(&w), Polynomial::constant(steps))
    }

    fn r(n: i64, d: i64) -> FieldElem {
        FieldElem::from_rational(ratio(n, d))
    }

    #[test]
    fn bqp_generators() {
        let th = Thresholds::default();
        let x = Word::from("101");
        let (g, t) = generator(&Circuit::trivial(0));
        assert_eq!(classify_bqp(&g, &t, &x, &th).unwrap(), Verdict::No);
        let (g, t) = generator(&Circuit::new(vec![Gate::H(1)], 0).unwrap());
        assert_eq!(classify_bqp(&g, &t, &x, &th).unwrap(), Verdict::OutsidePromise);
        let (g, _) = generator(&Circuit::new(vec![Gate::H(1)], 0).unwrap());
        assert_eq!(
            classify_bqp(&g, &Polynomial::constant(2), &x, &th),
            Err(Error::GeneratorFuelExhausted { fuel: 2 })
        );
        // the trivial machine emits "0": the trivial circuit
        assert_eq!(classify_bqp(&MachineDesc::Trivial, &Polynomial::constant(1), &x, &th).unwrap(), Verdict::No);
    }

    #[test]
    fn bqp_boundary_is_inclusive() {
        let half = Thresholds::new(ratio(1, 2), ratio(1, 3)).unwrap();
        let h = Circuit::new(vec![Gate::H(1)], 0).unwrap();
        assert_eq!(circuit_bqp(&h, &half).unwrap(), Verdict::Yes);
        let low = Thresholds::new(ratio(2, 3), ratio(1, 2)).unwrap();
        assert_eq!(circuit_bqp(&h, &low).unwrap(), Verdict::No);
    }

    #[test]
    fn qcma_and_qma_on_witness_copy() {
        let th = Thresholds::default();
        let copy = Circuit::new(vec![Gate::Cnot { control: 2, target: 1 }], 1).unwrap();
        let (g, t) = generator(&copy);
        let x = Word::from("0");
        assert_eq!(classify_qcma(&g, &t, &x, &th).unwrap(), Verdict::Yes);
        assert_eq!(classify_qma(&g, &t, &x, &th).unwrap(), Verdict::Yes);
        let (g, t) = generator(&Circuit::trivial(1));
        assert_eq!(classify_qcma(&g, &t, &x, &th).unwrap(), Verdict::No);
        assert_eq!(classify_qma(&g, &t, &x, &th).unwrap(), Verdict::No);
        let coin = Circuit::new(vec![Gate::H(1), Gate::T(2)], 1).unwrap();
        assert_eq!(circuit_qcma(&coin, &th).unwrap(), Verdict::OutsidePromise);
        assert_eq!(circuit_qma(&coin, &th).unwrap(), Verdict::OutsidePromise);
    }

    #[test]
    fn operator_trichotomy() {
        let th = Thresholds::default();
        let diag = Matrix::diagonal(vec![r(0, 1), r(1, 1)]);
        assert_eq!(operator_verdict(&diag, &th).unwrap(), Verdict::Yes);
        assert_eq!(operator_verdict(&Matrix::zeros(2), &th).unwrap(), Verdict::No);
        assert_eq!(operator_verdict(&Matrix::scalar(2, r(1, 2)), &th).unwrap(), Verdict::OutsidePromise);
        assert_eq!(operator_verdict(&Matrix::scalar(3, r(2, 3)), &th).unwrap(), Verdict::Yes);
        assert_eq!(operator_verdict(&Matrix::scalar(3, r(1, 3)), &th).unwrap(), Verdict::No);
    }

    #[test]
    fn witness_caps() {
        let th = Thresholds::default();
        let c = Circuit::new(vec![Gate::H(1)], 5).unwrap();
        assert!(matches!(circuit_qcma(&c, &th), Err(Error::WitnessSpaceTooLarge { bits: 5, .. })));
        assert!(matches!(circuit_qma(&c, &th), Err(Error::DimensionCap { .. })));
    }
}
