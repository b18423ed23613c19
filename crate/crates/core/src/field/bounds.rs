use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Cyclo8;
use crate::error::{Error, Result};

/// Rational bracket `lo ≤ 1/√2 ≤ hi` with `hi − lo ≤ 2^(−precision)`.
///
/// Runs Heron's iteration `x ← (x + 2/x)/2` for √2 from `x = 2`; the
/// brackets `[1/x, x/2]` shrink monotonically, so larger precisions return
/// nested intervals.
pub fn sqrt2_bounds(precision: u32) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    let tol = BigRational::new(BigInt::one(), BigInt::one() << precision as usize);
    let mut x = two.clone();
    loop {
        let lo = x.recip();
        let hi = &x / &two;
        if &hi - &lo <= tol {
            return (lo, hi);
        }
        x = (&x + &two / &x) / &two;
    }
}

fn round_scaled(v: &BigRational, scale: &BigInt) -> BigInt {
    // floor(v·10^digits + 1/2)
    let scaled = v * BigRational::from_integer(scale.clone()) + BigRational::new(BigInt::one(), BigInt::from(2));
    scaled.numer().div_floor(scaled.denom())
}

fn render_scaled(n: &BigInt, digits: usize) -> String {
    let sign = if n.is_negative() { "-" } else { "" };
    let s = n.abs().to_string();
    let s = format!("{s:0>width$}", width = digits + 1);
    let (int, frac) = s.split_at(s.len() - digits);
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Decimal rendering of a real field element rounded to `digits` places.
///
/// The rational part is exact; the `1/√2` part is bracketed with
/// [`sqrt2_bounds`] until both interval ends round to the same digits.
pub fn decimal(x: &Cyclo8<BigRational>, digits: usize) -> Result<String> {
    if !x.is_real() {
        return Err(Error::NonRealInput);
    }
    let scale = num_traits::pow(BigInt::from(10), digits);
    if x.b.is_zero() {
        return Ok(render_scaled(&round_scaled(&x.a, &scale), digits));
    }
    let mut precision = (digits as u32 + 2) * 4;
    loop {
        let (lo, hi) = sqrt2_bounds(precision);
        let (v1, v2) = (&x.a + &x.b * &lo, &x.a + &x.b * &hi);
        let (r1, r2) = (round_scaled(&v1, &scale), round_scaled(&v2, &scale));
        if r1 == r2 {
            return Ok(render_scaled(&r1, digits));
        }
        precision *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::FieldElem;

    fn bracket_holds(lo: &BigRational, hi: &BigRational) -> bool {
        let two = ratio(2, 1);
        let one = BigRational::one();
        &two * lo * lo <= one && one <= &two * hi * hi
    }

    #[test]
    fn precision_zero_bracket() {
        let (lo, hi) = sqrt2_bounds(0);
        assert_eq!((lo.clone(), hi.clone()), (ratio(1, 2), ratio(1, 1)));
        assert!(bracket_holds(&lo, &hi));
    }

    #[test]
    fn brackets_are_valid_and_nested() {
        let mut prev: Option<(BigRational, BigRational)> = None;
        for p in 0..40 {
            let (lo, hi) = sqrt2_bounds(p);
            assert!(bracket_holds(&lo, &hi), "precision {p}");
            assert!(&hi - &lo <= ratio(1, 1) / BigRational::from_integer(BigInt::one() << p as usize));
            if let Some((plo, phi)) = &prev {
                assert!(plo <= &lo && &hi <= phi);
            }
            prev = Some((lo, hi));
        }
        let (lo, hi) = sqrt2_bounds(10);
        assert!(&hi - &lo <= ratio(1, 1024));
    }

    #[test]
    fn decimal_renderings() {
        assert_eq!(decimal(&FieldElem::inv_sqrt2(), 12).unwrap(), "0.707106781187");
        assert_eq!(decimal(&FieldElem::from_rational(ratio(2, 3)), 12).unwrap(), "0.666666666667");
        assert_eq!(decimal(&FieldElem::from_ints(1, -1, 0, 0), 12).unwrap(), "0.292893218813");
        assert_eq!(decimal(&FieldElem::from_ints(-1, 0, 0, 0), 3).unwrap(), "-1.000");
        assert!(decimal(&FieldElem::i(), 3).is_err());
    }
}
