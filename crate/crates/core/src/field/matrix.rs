use num_traits::{One, Zero};

use super::Cyclo8;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest dimension for which all principal minors are enumerated.
pub const PSD_DIM_CAP: usize = 16;

/// Dense square matrix over Q(1/√2, i), row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    dim: usize,
    entries: Vec<Cyclo8<S>>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Matrix {
            dim,
            entries: vec![Cyclo8::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Cyclo8::one())
    }

    /// `s·I`.
    pub fn scalar(dim: usize, s: Cyclo8<S>) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.set(k, k, s.clone());
        }
        m
    }

    pub fn diagonal(diag: Vec<Cyclo8<S>>) -> Self {
        let mut m = Self::zeros(diag.len());
        for (k, v) in diag.into_iter().enumerate() {
            m.set(k, k, v);
        }
        m
    }

    /// Builds a matrix from rows; panics if the rows are not square.
    pub fn from_rows(rows: Vec<Vec<Cyclo8<S>>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Cyclo8<S> {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Cyclo8<S>) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn conj_transpose(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m.set(c, r, self.get(r, c).conj());
            }
        }
        m
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.dim).all(|r| (r..self.dim).all(|c| *self.get(r, c) == self.get(c, r).conj()))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let mut m = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                let mut acc = Cyclo8::zero();
                for k in 0..self.dim {
                    acc = &acc + &(self.get(r, k) * rhs.get(k, c));
                }
                m.set(r, c, acc);
            }
        }
        m
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(x, y)| x - y).collect(),
        }
    }

    /// The submatrix keeping the given rows and columns (indices ascending).
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        Matrix {
            dim: idx.len(),
            entries: idx
                .iter()
                .flat_map(|&r| idx.iter().map(move |&c| (r, c)))
                .map(|(r, c)| self.get(r, c).clone())
                .collect(),
        }
    }

    /// Determinant by Gaussian elimination, pivoting on the first non-zero
    /// entry of each column (lowest row index).
    pub fn det(&self) -> Cyclo8<S> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = Cyclo8::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Cyclo8::zero();
            };
            if p != col {
                for c in 0..n {
                    a.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            let pivot_inv = pivot.inv().expect("pivot is non-zero");
            det = &det * &pivot;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] * &pivot_inv;
                for c in col..n {
                    let delta = &factor * &a[col * n + c];
                    a[r * n + c] = &a[r * n + c] - &delta;
                }
            }
        }
        det
    }

    fn require_hermitian(&self) -> Result<()> {
        if self.is_hermitian() {
            Ok(())
        } else {
            Err(Error::NotHermitian)
        }
    }

    /// Positive definiteness: every leading principal minor is positive.
    pub fn sylvester_pd(&self) -> Result<bool> {
        self.require_hermitian()?;
        for k in 1..=self.dim {
            let idx: Vec<usize> = (0..k).collect();
            if self.principal_submatrix(&idx).det().real_sign()? <= 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Positive semi-definiteness: all `2^dim − 1` principal minors are
    /// non-negative. Dimensions above [`PSD_DIM_CAP`] are refused.
    pub fn sylvester_psd(&self) -> Result<bool> {
        self.require_hermitian()?;
        if self.dim > PSD_DIM_CAP {
            return Err(Error::DimensionCap {
                what: "principal-minor dimension",
                requested: self.dim,
                cap: PSD_DIM_CAP,
            });
        }
        for mask in 1u32..(1u32 << self.dim) {
            let idx: Vec<usize> = (0..self.dim).filter(|&k| mask >> k & 1 == 1).collect();
            if self.principal_submatrix(&idx).det().real_sign()? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
