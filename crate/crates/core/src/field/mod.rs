//! Exact arithmetic in Q(1/√2, i), the eighth cyclotomic field.
//!
//! An element is stored as four coordinates over the basis
//! `1, r, i, i·r` with `r = 1/√2`. Multiplication uses `r·r = 1/2` and
//! `i·i = −1`; the T-gate phase e^{iπ/4} is `r + i·r`.

mod bounds;
mod matrix;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use bounds::{decimal, sqrt2_bounds};
pub use matrix::Matrix;

/// `a + b·r + c·i + d·i·r` with `r = 1/√2`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cyclo8<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> Cyclo8<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Cyclo8 { a, b, c, d }
    }

    pub fn from_scalar(a: S) -> Self {
        Cyclo8::new(a, S::zero(), S::zero(), S::zero())
    }

    /// The element `1/√2`.
    pub fn inv_sqrt2() -> Self {
        Cyclo8::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Cyclo8::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    /// e^{iπ/4} = 1/√2 + i/√2.
    pub fn omega() -> Self {
        Cyclo8::new(S::zero(), S::one(), S::zero(), S::one())
    }

    pub fn conj(&self) -> Self {
        Cyclo8::new(self.a.clone(), self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    pub fn is_real(&self) -> bool {
        self.c.is_zero() && self.d.is_zero()
    }

    /// |x|² = x·conj(x), an element of the real subfield Q(1/√2).
    pub fn norm_sqr(&self) -> Self {
        self * &self.conj()
    }

    /// Exact sign of a real element `a + b/√2`.
    ///
    /// Zero cases and equal signs are immediate; otherwise the side with
    /// the larger magnitude wins, decided by comparing `2a²` with `b²`.
    pub fn real_sign(&self) -> Result<i8> {
        if !self.is_real() {
            return Err(Error::NonRealInput);
        }
        Ok(real_sign_parts(&self.a, &self.b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // x·conj(x) = α + β·r is real; (α + β r)(α − β r) = α² − β²/2 is rational
        let n = self.norm_sqr();
        let denom = n.a.clone() * n.a.clone() - n.b.clone() * n.b.clone() * S::half();
        if denom.is_zero() {
            return None;
        }
        let real_inv = Cyclo8::new(n.a.clone() / denom.clone(), -(n.b / denom), S::zero(), S::zero());
        Some(&self.conj() * &real_inv)
    }

    /// Floating-point value as `(re, im)`.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        (
            self.a.to_f64() + self.b.to_f64() * r,
            self.c.to_f64() + self.d.to_f64() * r,
        )
    }

    /// Coordinate-wise conversion into another scalar.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Cyclo8<T> {
        Cyclo8::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

fn real_sign_parts<S: Scalar>(a: &S, b: &S) -> i8 {
    let sa = sign_of(a);
    let sb = sign_of(b);
    if sa == 0 {
        return sb;
    }
    if sb == 0 || sa == sb {
        return sa;
    }
    let two_a2 = a.clone() * a.clone() * (S::one() + S::one());
    let b2 = b.clone() * b.clone();
    if two_a2 > b2 {
        sa
    } else if two_a2 < b2 {
        sb
    } else {
        0
    }
}

fn sign_of<S: Scalar>(x: &S) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl<S: Scalar> Zero for Cyclo8<S> {
    fn zero() -> Self {
        Cyclo8::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl<S: Scalar> One for Cyclo8<S> {
    fn one() -> Self {
        Cyclo8::from_scalar(S::one())
    }
}

impl<S: Scalar> Add for &Cyclo8<S> {
    type Output = Cyclo8<S>;

    fn add(self, rhs: &Cyclo8<S>) -> Cyclo8<S> {
        Cyclo8::new(
            self.a.clone() + rhs.a.clone(),
            self.b.clone() + rhs.b.clone(),
            self.c.clone() + rhs.c.clone(),
            self.d.clone() + rhs.d.clone(),
        )
    }
}

impl<S: Scalar> Sub for &Cyclo8<S> {
    type Output = Cyclo8<S>;

    fn sub(self, rhs: &Cyclo8<S>) -> Cyclo8<S> {
        Cyclo8::new(
            self.a.clone() - rhs.a.clone(),
            self.b.clone() - rhs.b.clone(),
            self.c.clone() - rhs.c.clone(),
            self.d.clone() - rhs.d.clone(),
        )
    }
}

impl<S: Scalar> Mul for &Cyclo8<S> {
    type Output = Cyclo8<S>;

    fn mul(self, rhs: &Cyclo8<S>) -> Cyclo8<S> {
        // (P + iQ)(P' + iQ') with P = a + b r, Q = c + d r in Q(r)
        let mul_real = |a: &S, b: &S, a2: &S, b2: &S| -> (S, S) {
            (
                a.clone() * a2.clone() + b.clone() * b2.clone() * S::half(),
                a.clone() * b2.clone() + b.clone() * a2.clone(),
            )
        };
        let (pp_a, pp_b) = mul_real(&self.a, &self.b, &rhs.a, &rhs.b);
        let (qq_a, qq_b) = mul_real(&self.c, &self.d, &rhs.c, &rhs.d);
        let (pq_a, pq_b) = mul_real(&self.a, &self.b, &rhs.c, &rhs.d);
        let (qp_a, qp_b) = mul_real(&self.c, &self.d, &rhs.a, &rhs.b);
        Cyclo8::new(pp_a - qq_a, pp_b - qq_b, pq_a + qp_a, pq_b + qp_b)
    }
}

impl<S: Scalar> Neg for &Cyclo8<S> {
    type Output = Cyclo8<S>;

    fn neg(self) -> Cyclo8<S> {
        Cyclo8::new(-self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }
}

impl<S: Scalar> Div for &Cyclo8<S> {
    type Output = Cyclo8<S>;

    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Cyclo8<S>) -> Cyclo8<S> {
        self * &rhs.inv().expect("division by zero in Cyclo8")
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<S: Scalar> $tr for Cyclo8<S> {
            type Output = Cyclo8<S>;
            fn $m(self, rhs: Cyclo8<S>) -> Cyclo8<S> {
                (&self).$m(&rhs)
            }
        }
        impl<S: Scalar> $tr<&Cyclo8<S>> for Cyclo8<S> {
            type Output = Cyclo8<S>;
            fn $m(self, rhs: &Cyclo8<S>) -> Cyclo8<S> {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl<S: Scalar> Neg for Cyclo8<S> {
    type Output = Cyclo8<S>;

    fn neg(self) -> Cyclo8<S> {
        -&self
    }
}

impl Cyclo8<BigRational> {
    pub fn from_rational(r: BigRational) -> Self {
        Cyclo8::from_scalar(r)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        Cyclo8::new(q(a), q(b), q(c), q(d))
    }
}

fn fmt_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for Cyclo8<BigRational> {
    /// Renders as `a + b*r + c*i + d*i*r`, each coefficient as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*r + {}*i + {}*i*r",
            fmt_rational(&self.a),
            fmt_rational(&self.b),
            fmt_rational(&self.c),
            fmt_rational(&self.d)
        )
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (p, q) = s.split_once('/').ok_or_else(bad)?;
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if !q.is_positive() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

impl FromStr for Cyclo8<BigRational> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid field element {s:?}"));
        let parts: Vec<&str> = s.trim().split(" + ").collect();
        let [a, b, c, d] = parts.as_slice() else {
            return Err(bad());
        };
        let b = b.strip_suffix("*r").ok_or_else(bad)?;
        let c = c.strip_suffix("*i").ok_or_else(bad)?;
        let d = d.strip_suffix("*i*r").ok_or_else(bad)?;
        Ok(Cyclo8::new(
            parse_rational(a)?,
            parse_rational(b)?,
            parse_rational(c)?,
            parse_rational(d)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::FieldElem;

    fn q(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> FieldElem {
        Cyclo8::new(ratio(a.0, a.1), ratio(b.0, b.1), ratio(c.0, c.1), ratio(d.0, d.1))
    }

    #[test]
    fn inv_sqrt2_squared_is_half() {
        let r = FieldElem::inv_sqrt2();
        assert_eq!(&r * &r, FieldElem::from_rational(ratio(1, 2)));
    }

    #[test]
    fn omega_is_eighth_root_of_unity() {
        let w = FieldElem::omega();
        let mut p = FieldElem::one();
        for k in 1..=8 {
            p = &p * &w;
            assert_eq!(p == FieldElem::one(), k == 8, "omega^{k}");
        }
        assert_eq!(&w * &w, FieldElem::i());
    }

    #[test]
    fn conj_negates_imaginary_coordinates() {
        let x = q((1, 1), (1, 2), (3, 1), (-2, 1));
        assert_eq!(x.conj(), q((1, 1), (1, 2), (-3, 1), (2, 1)));
    }

    #[test]
    fn real_sign_cases() {
        assert_eq!(FieldElem::zero().real_sign(), Ok(0));
        assert_eq!(FieldElem::from_ints(1, -1, 0, 0).real_sign(), Ok(1));
        assert_eq!(FieldElem::from_ints(2, -3, 0, 0).real_sign(), Ok(-1));
        assert_eq!(FieldElem::from_ints(-2, 3, 0, 0).real_sign(), Ok(1));
        assert_eq!(FieldElem::from_ints(0, -5, 0, 0).real_sign(), Ok(-1));
        assert_eq!(FieldElem::from_ints(0, 0, 1, 0).real_sign(), Err(Error::NonRealInput));
    }

    #[test]
    fn inverse_of_omega_is_conjugate() {
        let w = FieldElem::omega();
        assert_eq!(w.inv().unwrap(), w.conj());
        assert!(FieldElem::zero().inv().is_none());
    }

    #[test]
    fn text_roundtrip() {
        let x = q((1, 1), (-1, 2), (0, 1), (7, 3));
        let s = x.to_string();
        assert_eq!(s, "1/1 + -1/2*r + 0/1*i + 7/3*i*r");
        assert_eq!(s.parse::<FieldElem>().unwrap(), x);
        assert!("1/1 + 2".parse::<FieldElem>().is_err());
        assert!("1/0 + 0/1*r + 0/1*i + 0/1*i*r".parse::<FieldElem>().is_err());
    }
}
