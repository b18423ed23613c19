mod common;

use common::*;
use num_traits::One;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use promisekit::enumeration::Polynomial;
use promisekit::promise::{Thresholds, Verdict};
use promisekit::qcircuit::{
    acceptance_operator, basis_input, circuit_qcma, circuit_qma, classify_bqp, classify_qma, encode_circuit,
    encode_with_header, p_acc, parse_circuit, simulate, Circuit, Gate,
};
use promisekit::tm::library::write_constant;
use promisekit::{FieldElem, Rational, Word};

fn float_verdict(lambda: f64) -> Verdict {
    if lambda >= 2.0 / 3.0 {
        Verdict::Yes
    } else if lambda <= 1.0 / 3.0 {
        Verdict::No
    } else {
        Verdict::OutsidePromise
    }
}

fn gate() -> impl Strategy<Value = Gate> {
    (0u8..3, 1usize..=7, 1usize..=7).prop_filter_map("distinct cnot", |(k, a, b)| match k {
        0 => Some(Gate::H(a)),
        1 => Some(Gate::T(a)),
        _ if a != b => Some(Gate::Cnot { control: a, target: b }),
        _ => None,
    })
}

proptest! {
    #[test]
    fn encoding_roundtrips(gates in prop::collection::vec(gate(), 1..30), m in 0usize..=3) {
        let c = Circuit::new(gates, m).unwrap();
        let with = encode_with_header(&c);
        prop_assert_eq!(parse_circuit(&with, true), c.clone());
        if m == 0 {
            prop_assert_eq!(parse_circuit(&encode_circuit(&c), false), c);
        }
    }

    #[test]
    fn parse_is_total(bits in prop::collection::vec(any::<bool>(), 0..60), header in any::<bool>()) {
        let c = parse_circuit(&Word::from_bits(bits), header);
        prop_assert!(c.total_qubits() >= 1);
    }
}

#[test]
fn exact_state_matches_float_simulator() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(1..=5);
        let g = rng.gen_range(0..=30);
        let c = random_circuit(&mut rng, n, g, 0);
        let input = Word::from_bits((0..n).map(|_| rng.gen()).collect());
        let exact = simulate::<Rational>(&c, &input).unwrap();
        let float = float_state(&c, input.bits());
        assert_eq!(exact.norm_sqr(), FieldElem::one());
        for (e, f) in exact.amplitudes().iter().zip(&float) {
            let (re, im) = e.to_complex_f64();
            assert!((re - f.re).abs() < 1e-9 && (im - f.im).abs() < 1e-9, "{c}");
        }
        let p = p_acc::<Rational>(&c, &input).unwrap();
        assert!((p.to_complex_f64().0 - float_p_acc(&c, input.bits())).abs() < 1e-9);
        let pf = p_acc::<f64>(&c, &input).unwrap();
        assert!((pf.to_complex_f64().0 - p.to_complex_f64().0).abs() < 1e-9);
    }
}

#[test]
fn operator_matches_float_and_is_hermitian() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..25 {
        let m = rng.gen_range(1..=2);
        let n = rng.gen_range(m..=4);
        let g = rng.gen_range(0..=20);
        let c = random_circuit(&mut rng, n, g, m);
        let q = acceptance_operator::<Rational>(&c).unwrap();
        assert!(q.is_hermitian());
        let fq = float_operator(&c);
        for r in 0..q.dim() {
            for col in 0..q.dim() {
                let (re, im) = q.get(r, col).to_complex_f64();
                assert!((fq[(r, col)].re - re).abs() < 1e-9 && (fq[(r, col)].im - im).abs() < 1e-9);
            }
            let p = p_acc::<Rational>(&c, &basis_input(&c, &Word::from_bits((0..m).map(|k| r >> (m - 1 - k) & 1 == 1).collect()))).unwrap();
            assert_eq!(q.get(r, r), &p);
        }
        let lmax = lambda_max(&fq);
        assert!((-1e-9..=1.0 + 1e-9).contains(&lmax));
    }
}

#[test]
fn qma_verdict_agrees_with_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let th = Thresholds::default();
    let mut seen = std::collections::BTreeSet::new();
    let mut checked = 0;
    while checked < 30 {
        let m = rng.gen_range(1..=2);
        let n = rng.gen_range(m..=4);
        let g = rng.gen_range(0..=16);
        let c = random_circuit(&mut rng, n, g, m);
        let lmax = lambda_max(&float_operator(&c));
        if (lmax - 1.0 / 3.0).abs() < 1e-6 || (lmax - 2.0 / 3.0).abs() < 1e-6 {
            continue;
        }
        let v = circuit_qma(&c, &th).unwrap();
        assert_eq!(v, float_verdict(lmax), "{c}: λ_max = {lmax}");
        seen.insert(v.token());
        checked += 1;
    }
    assert!(seen.len() >= 2);
}

#[test]
fn qcma_equals_qma_on_witness_diagonal_circuits() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let th = Thresholds::default();
    for _ in 0..30 {
        let m = rng.gen_range(1..=2);
        let work = rng.gen_range(1..=3);
        let g = rng.gen_range(0..=16);
        let c = witness_diagonal_circuit(&mut rng, work, m, g);
        let q = float_operator(&c);
        for r in 0..q.nrows() {
            for col in 0..q.ncols() {
                if r != col {
                    assert!(q[(r, col)].norm() < 1e-12);
                }
            }
        }
        assert_eq!(circuit_qcma(&c, &th).unwrap(), circuit_qma(&c, &th).unwrap(), "{c}");
    }
}

#[test]
fn qcma_never_exceeds_qma() {
    // A basis witness is one candidate state, so a QCMA yes is a QMA yes.
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let th = Thresholds::default();
    for _ in 0..30 {
        let m = rng.gen_range(1..=2);
        let n = rng.gen_range(m..=4);
        let g = rng.gen_range(0..=16);
        let c = random_circuit(&mut rng, n, g, m);
        let (a, b) = (circuit_qcma(&c, &th).unwrap(), circuit_qma(&c, &th).unwrap());
        if a == Verdict::Yes {
            assert_eq!(b, Verdict::Yes);
        }
        if b == Verdict::No {
            assert_eq!(a, Verdict::No);
        }
    }
}

#[test]
fn generator_path_matches_direct_classification() {
    let th = Thresholds::default();
    let c = Circuit::new(vec![Gate::H(1), Gate::T(1), Gate::H(1)], 0).unwrap();
    let bits = encode_circuit(&c);
    let gen = write_constant(&bits);
    let rt = Polynomial::constant(bits.len() as u64 + 2);
    // p = |(1 − ω)/2|² = (2 − √2)/4 ≈ 0.146
    assert_eq!(classify_bqp(&gen, &rt, &Word::empty(), &th).unwrap(), Verdict::No);
    let lam = float_p_acc(&c, &[false]);
    assert!((lam - (2.0 - 2f64.sqrt()) / 4.0).abs() < 1e-12);

    let qc = Circuit::new(vec![Gate::Cnot { control: 2, target: 1 }], 1).unwrap();
    let bits = encode_with_header(&qc);
    let gen = write_constant(&bits);
    let rt = Polynomial::constant(bits.len() as u64 + 2);
    assert_eq!(classify_qma(&gen, &rt, &Word::from("0110"), &th).unwrap(), Verdict::Yes);
    assert!(classify_qma(&gen, &Polynomial::constant(1), &Word::empty(), &th).is_err());
}
