//! Exact arithmetic: arbitrary-precision integers and rationals, dense
//! integer-coefficient polynomials, and truncated power-series division.
//!
//! Everything downstream (characteristic polynomials, distribution
//! polynomials, torsion sums) is built on these values. No floating point
//! appears anywhere on a computation path.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;
/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Dense univariate polynomial with `Int` coefficients, indexed by exponent.
///
/// Trailing zeros are trimmed, so the degree is the index of the last stored
/// coefficient and the leading coefficient of a nonzero polynomial is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        let mut p = IntPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Int>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    /// `c * t^k`.
    pub fn monomial(c: Int, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of `t^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> Int {
        self.coeffs.get(k).cloned().unwrap_or_else(Int::zero)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at `t = 1`.
    pub fn eval_one(&self) -> Int {
        self.coeffs.iter().sum()
    }

    /// Substitute `t -> t^d`.
    pub fn inflate(&self, d: usize) -> IntPoly {
        assert!(d >= 1, "inflate requires d >= 1");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); (self.coeffs.len() - 1) * d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[k * d] = c.clone();
            }
        }
        IntPoly { coeffs }
    }

    /// Exact quotient `self / q` in the integer-coefficient polynomial ring.
    ///
    /// Errors with [`Error::DivisionError`] when `q` is zero, when some
    /// quotient coefficient is not an exact integer, or when a nonzero
    /// remainder is left.
    pub fn exact_div(&self, q: &IntPoly) -> Result<IntPoly> {
        if q.is_zero() {
            return Err(Error::DivisionError("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dq = q.degree().unwrap();
        let dp = self.degree().unwrap();
        if dp < dq {
            return Err(Error::DivisionError(format!(
                "degree {dp} dividend under degree {dq} divisor"
            )));
        }
        let lead = q.coeffs[dq].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let top = rem[k + dq].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % &lead) != Int::zero() {
                return Err(Error::DivisionError(format!(
                    "coefficient {top} not divisible by leading coefficient {lead}"
                )));
            }
            let c = top / &lead;
            for (j, qc) in q.coeffs.iter().enumerate() {
                let prod = qc * &c;
                rem[k + j] -= prod;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisionError("nonzero remainder".into()));
        }
        Ok(IntPoly::from_coeffs(quot))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn fmt_poly(coeffs: &[Int], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let a = c.abs();
        match (k, a.is_one()) {
            (0, _) => write!(f, "{a}")?,
            (1, true) => write!(f, "t")?,
            (1, false) => write!(f, "{a}*t")?,
            (_, true) => write!(f, "t^{k}")?,
            (_, false) => write!(f, "{a}*t^{k}")?,
        }
    }
    Ok(())
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

/// Coefficients `0..=upto` of the power-series quotient `num / den`.
///
/// Requires `den(0)` to be `1` or `-1` so the quotient stays integral.
pub fn series_quotient_coeffs(num: &IntPoly, den: &IntPoly, upto: usize) -> Result<Vec<Int>> {
    let d0 = den.coeff(0);
    if !d0.is_one() && d0 != -Int::one() {
        return Err(Error::SeriesError(format!(
            "denominator constant term {d0} is not a unit in Z[[t]]"
        )));
    }
    let mut out = Vec::with_capacity(upto + 1);
    for k in 0..=upto {
        let mut acc = num.coeff(k);
        for j in 1..=k {
            let dj = den.coeff(j);
            if dj.is_zero() {
                continue;
            }
            acc -= dj * &out[k - j];
        }
        // d0 = ±1, so this division is exact.
        out.push(acc / &d0);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn cyclotomic_identity() {
        // (1 - t + t^2) * (1 + t) = 1 + t^3
        let lhs = &p(&[1, -1, 1]) * &p(&[1, 1]);
        assert_eq!(lhs, p(&[1, 0, 0, 1]));
    }

    #[test]
    fn additive_inverse() {
        let q = p(&[3, 0, -2, 7]);
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn exact_div_example() {
        // (-t^5 + t^10) / (1 - t^5) = -t^5, by hand long division
        let num = &IntPoly::monomial(int(1), 10) - &IntPoly::monomial(int(1), 5);
        let den = &IntPoly::one() - &IntPoly::monomial(int(1), 5);
        let quot = num.exact_div(&den).unwrap();
        assert_eq!(quot, IntPoly::monomial(int(-1), 5));
    }

    #[test]
    fn exact_div_rejects_remainder() {
        let num = p(&[1, 1, 1]);
        let den = p(&[1, 1]);
        assert!(matches!(num.exact_div(&den), Err(Error::DivisionError(_))));
    }

    #[test]
    fn series_one_over_one_minus_t_squared() {
        // 1/(1-t)^2 = sum (k+1) t^k
        let den = &p(&[1, -1]) * &p(&[1, -1]);
        let cs = series_quotient_coeffs(&IntPoly::one(), &den, 3).unwrap();
        assert_eq!(cs, vec![int(1), int(2), int(3), int(4)]);
    }

    #[test]
    fn series_ordinary_cusp_numerator() {
        // (1 - t + t^2)/(1-t)^2: multiply the (k+1) pattern by the (2,3)
        // characteristic polynomial by hand -> 1,1,2,3,4
        let den = &p(&[1, -1]) * &p(&[1, -1]);
        let cs = series_quotient_coeffs(&p(&[1, -1, 1]), &den, 4).unwrap();
        assert_eq!(cs, vec![int(1), int(1), int(2), int(3), int(4)]);
    }

    #[test]
    fn series_zero_numerator() {
        let den = p(&[1, -1]);
        let cs = series_quotient_coeffs(&IntPoly::zero(), &den, 5).unwrap();
        assert!(cs.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn series_rejects_non_unit() {
        let den = p(&[2, -1]);
        assert!(matches!(
            series_quotient_coeffs(&IntPoly::one(), &den, 3),
            Err(Error::SeriesError(_))
        ));
    }

    #[test]
    fn inflate_substitutes_power() {
        assert_eq!(p(&[1, -1, 2]).inflate(3), p(&[1, 0, 0, -1, 0, 0, 2]));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-6i64..=6, 0..8).prop_map(|cs| IntPoly::from_i64(&cs))
    }

    proptest! {
        #[test]
        fn exact_div_inverts_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn series_quotient_recovers_numerator(a in small_poly(), b in small_poly()) {
            let mut den = b;
            // force a unit constant term
            let mut cs: Vec<Int> = den.coeffs().to_vec();
            if cs.is_empty() { cs.push(Int::one()); } else { cs[0] = Int::one(); }
            den = IntPoly::from_coeffs(cs);
            let prod = &a * &den;
            let upto = prod.degree().unwrap_or(0) + 4;
            let cs = series_quotient_coeffs(&prod, &den, upto).unwrap();
            for (k, c) in cs.iter().enumerate() {
                prop_assert_eq!(c.clone(), a.coeff(k));
            }
        }

        #[test]
        fn rat_ring_laws(an in -40i64..40, ad in 1i64..20,
                         bn in -40i64..40, bd in 1i64..20,
                         cn in -40i64..40, cd in 1i64..20) {
            let a = rat(an, ad);
            let b = rat(bn, bd);
            let c = rat(cn, cd);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            // normalization is idempotent
            let renorm = Rat::new(a.numer().clone(), a.denom().clone());
            prop_assert_eq!(renorm, a);
        }
    }
}
