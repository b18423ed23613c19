//! Polynomials over N₀ with non-negative coefficients and their
//! enumeration.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `c0 + c1·n + … + cd·n^d`, stored without trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    coeffs: Vec<u64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: u64) -> Self {
        Polynomial::new(vec![c])
    }

    /// `a·n + b`.
    pub fn linear(a: u64, b: u64) -> Self {
        Polynomial::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff_sum(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Enumeration weight: coefficient sum plus degree.
    pub fn weight(&self) -> u64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.coeff_sum() + self.degree() as u64
        }
    }

    /// Horner evaluation, saturating at `u64::MAX`.
    pub fn eval(&self, n: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc.saturating_mul(n).saturating_add(c))
    }

    /// Position of this polynomial in [`poly_series`].
    pub fn series_index(&self) -> u64 {
        let w = self.weight();
        if w == 0 {
            return 0;
        }
        // levels 0..w hold 1 + 1 + 2 + … + 2^(w−2) = 2^(w−1) polynomials
        let mut idx: u128 = 1u128 << (w - 1);
        let d = self.degree() as u64;
        for dd in 0..d {
            idx += binom(w - 1, dd);
        }
        // lex rank of (c0, …, c_{d−1}) among compositions of w−d−1 into d+1 parts
        let mut remaining = w - d - 1;
        let parts = d + 1;
        for p in 0..d {
            let c = self.coeffs[p as usize];
            for v in 0..c {
                idx += binom(remaining - v + parts - p - 2, parts - p - 2);
            }
            remaining -= c;
        }
        idx as u64
    }
}

fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// The `i`-th polynomial of a fixed surjective, injective enumeration.
///
/// Polynomials are grouped by weight `coefficient sum + degree`; each weight
/// class is finite (weight `w ≥ 1` holds `2^(w−1)` polynomials). Within a
/// class the order is by degree, then lexicographic in `(c0, c1, …)`.
pub fn poly_series(i: u64) -> Polynomial {
    if i == 0 {
        return Polynomial::zero();
    }
    let w = 64 - i.leading_zeros() as u64; // 2^(w−1) ≤ i < 2^w
    let mut rank = (i as u128) - (1u128 << (w - 1));
    let mut d = 0u64;
    loop {
        let size = binom(w - 1, d);
        if rank < size {
            break;
        }
        rank -= size;
        d += 1;
    }
    let parts = d + 1;
    let mut remaining = w - d - 1;
    let mut coeffs = Vec::with_capacity(parts as usize);
    for p in 0..d {
        let mut v = 0;
        loop {
            let count = binom(remaining - v + parts - p - 2, parts - p - 2);
            if rank < count {
                break;
            }
            rank -= count;
            v += 1;
        }
        coeffs.push(v);
        remaining -= v;
    }
    coeffs.push(remaining + 1);
    Polynomial::new(coeffs)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "n".to_string(),
                (1, c) => format!("{c}n"),
                (k, 1) => format!("n^{k}"),
                (k, c) => format!("{c}n^{k}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Comma-separated coefficients, constant term first: `3,2` is `2n + 3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Polynomial::zero());
        }
        s.split(',')
            .map(|c| {
                c.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("invalid coefficient {c:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Polynomial::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_entries() {
        assert_eq!(poly_series(0), Polynomial::zero());
        assert_eq!(poly_series(1), Polynomial::constant(1));
        assert_eq!(poly_series(2), Polynomial::constant(2));
        assert_eq!(poly_series(3), Polynomial::new(vec![0, 1]));
    }

    #[test]
    fn targets_appear_early() {
        assert_eq!(Polynomial::new(vec![0, 0, 1]).series_index(), 7);
        assert_eq!(Polynomial::linear(2, 3).series_index(), 36);
        assert_eq!(poly_series(36), Polynomial::linear(2, 3));
    }

    #[test]
    fn index_roundtrip() {
        for i in 0..20_000u64 {
            let p = poly_series(i);
            assert_eq!(p.series_index(), i, "{p}");
        }
    }

    #[test]
    fn eval_saturates() {
        let p = Polynomial::new(vec![1, 0, 3]);
        assert_eq!(p.eval(2), 13);
        assert_eq!(Polynomial::new(vec![0, 0, 0, 0, 1]).eval(u64::MAX), u64::MAX);
    }

    #[test]
    fn display_and_parse() {
        let p: Polynomial = "3,2".parse().unwrap();
        assert_eq!(p, Polynomial::linear(2, 3));
        assert_eq!(p.to_string(), "2n + 3");
        assert_eq!("0,0,1".parse::<Polynomial>().unwrap().to_string(), "n^2");
        assert!("x".parse::<Polynomial>().is_err());
    }
}
