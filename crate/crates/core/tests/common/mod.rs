#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use promisekit::ptm::BranchTree;
use promisekit::qcircuit::{Circuit, Gate};
use promisekit::tm::{Action, MachineDesc, Move, Symbol, TransitionTable};
use promisekit::Word;

/// Plain complex128 state-vector simulator, written against the textbook
/// gate matrices and independent of the exact field code.
pub fn float_state(c: &Circuit, input: &[bool]) -> Vec<Complex64> {
    let n = c.total_qubits();
    let mut psi = vec![Complex64::new(0.0, 0.0); 1 << n];
    let idx = input.iter().fold(0usize, |acc, &b| acc * 2 + b as usize);
    psi[idx] = Complex64::new(1.0, 0.0);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let phase = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
    let bit = |q: usize| 1usize << (n - q);
    for g in c.gates() {
        let mut next = psi.clone();
        for (i, amp) in next.iter_mut().enumerate() {
            match *g {
                Gate::H(q) => {
                    let m = bit(q);
                    let (i0, i1) = (i & !m, i | m);
                    let sign = if i & m == 0 { 1.0 } else { -1.0 };
                    *amp = s * psi[i0] + sign * s * psi[i1];
                }
                Gate::T(q) => {
                    if i & bit(q) != 0 {
                        *amp = psi[i] * phase;
                    }
                }
                Gate::Cnot { control, target } => {
                    if i & bit(control) != 0 {
                        *amp = psi[i ^ bit(target)];
                    }
                }
            }
        }
        psi = next;
    }
    psi
}

pub fn float_p_acc(c: &Circuit, input: &[bool]) -> f64 {
    if c.is_trivial() {
        return 0.0;
    }
    let psi = float_state(c, input);
    let out = 1 << (c.total_qubits() - 1);
    psi.iter().enumerate().filter(|(i, _)| i & out != 0).map(|(_, a)| a.norm_sqr()).sum()
}

/// Acceptance operator built from the float simulator.
pub fn float_operator(c: &Circuit) -> DMatrix<Complex64> {
    let (n, m) = (c.total_qubits(), c.witness_qubits());
    let dim = 1 << m;
    let out = 1 << (n - 1);
    let states: Vec<Vec<Complex64>> = (0..dim)
        .map(|y| {
            let mut input = vec![false; n - m];
            input.extend((0..m).map(|k| y >> (m - 1 - k) & 1 == 1));
            float_state(c, &input)
        })
        .collect();
    DMatrix::from_fn(dim, dim, |r, col| {
        states[r]
            .iter()
            .zip(&states[col])
            .enumerate()
            .filter(|(i, _)| i & out != 0)
            .map(|(_, (a, b))| a.conj() * b)
            .sum()
    })
}

pub fn lambda_max(q: &DMatrix<Complex64>) -> f64 {
    q.clone().symmetric_eigenvalues().iter().cloned().fold(f64::NEG_INFINITY, f64::max)
}

pub fn lambda_min(q: &DMatrix<Complex64>) -> f64 {
    q.clone().symmetric_eigenvalues().iter().cloned().fold(f64::INFINITY, f64::min)
}

pub fn random_gate(rng: &mut impl Rng, n: usize) -> Gate {
    let q = rng.gen_range(1..=n);
    match rng.gen_range(0..3) {
        0 => Gate::H(q),
        1 => Gate::T(q),
        _ if n == 1 => Gate::H(q),
        _ => {
            let mut t = rng.gen_range(1..=n);
            while t == q {
                t = rng.gen_range(1..=n);
            }
            Gate::Cnot { control: q, target: t }
        }
    }
}

/// A circuit on exactly `n` qubits (the last gate pins the register size).
pub fn random_circuit(rng: &mut impl Rng, n: usize, gates: usize, m: usize) -> Circuit {
    let mut gs: Vec<Gate> = (0..gates).map(|_| random_gate(rng, n)).collect();
    gs.push(Gate::T(n));
    Circuit::new(gs, m).unwrap()
}

/// Witness qubits are only read (CNOT controls) or phased (T), so the
/// acceptance operator is diagonal in the witness basis.
pub fn witness_diagonal_circuit(rng: &mut impl Rng, work: usize, m: usize, gates: usize) -> Circuit {
    let n = work + m;
    let mut gs = Vec::new();
    for _ in 0..gates {
        let g = match rng.gen_range(0..4) {
            0 => Gate::H(rng.gen_range(1..=work)),
            1 => Gate::T(rng.gen_range(1..=n)),
            _ => {
                let control = rng.gen_range(1..=n);
                let mut target = rng.gen_range(1..=work);
                if target == control {
                    if work == 1 {
                        gs.push(Gate::H(1));
                        continue;
                    }
                    target = if target == 1 { 2 } else { 1 };
                }
                Gate::Cnot { control, target }
            }
        };
        gs.push(g);
    }
    gs.push(Gate::T(n));
    Circuit::new(gs, m).unwrap()
}

/// A random complete deterministic table with `states` states, the last
/// one final.
pub fn random_machine(rng: &mut impl Rng, states: usize) -> MachineDesc {
    let fin = states - 1;
    let mut t = TransitionTable::new(states).with_final(fin);
    for q in 0..fin {
        for read in Symbol::ALL {
            let write = Symbol::ALL[rng.gen_range(0..3)];
            let mv = [Move::L, Move::R, Move::N][rng.gen_range(0..3)];
            t.add_rule(q, read, Action::new(rng.gen_range(0..states), write, mv));
        }
    }
    MachineDesc::from_table(t)
}

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_bits((0..len).map(|_| rng.gen()).collect())
}

pub fn random_tree(rng: &mut impl Rng, depth: usize) -> BranchTree {
    if depth == 0 || rng.gen_bool(0.35) {
        return match rng.gen_range(0..5) {
            0 | 1 => BranchTree::accept(),
            2 | 3 => BranchTree::reject(),
            _ => BranchTree::Leaf(Word::from("10")),
        };
    }
    let width = rng.gen_range(1..=3);
    BranchTree::Node((0..width).map(|_| random_tree(rng, depth - 1)).collect())
}
