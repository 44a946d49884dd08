//! Laurent polynomials in one variable with arbitrary-precision integer
//! coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum c_e t^e` with `c_e` in ℤ and `e` in ℤ.
///
/// Coefficients are stored sparsely, keyed by exponent; zero coefficients
/// are never kept, so the zero polynomial has an empty map.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

/// Exact division failed: the divisor is zero, its leading coefficient is
/// not a unit, or a nonzero remainder was left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotDivisible;

impl fmt::Display for NotDivisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial division left a nonzero remainder")
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut coeffs = BTreeMap::new();
        let c = coeff.into();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    /// Sums duplicate exponents; drops zero totals.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
            *entry += c.into();
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Number of nonzero terms.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Multiplication by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `p(1)`, the sum of all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// `p'(1) = sum e * c_e`.
    pub fn derivative_at_one(&self) -> BigInt {
        self.coeffs.iter().map(|(&e, c)| BigInt::from(e) * c).sum()
    }

    /// Whether `p(t) = p(1/t)`, i.e. the coefficients are mirror-symmetric
    /// about exponent zero.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&e, c)| self.coeff(-e) == *c)
    }

    /// Exact quotient `self / divisor`; fails unless the remainder is zero.
    ///
    /// Long division over ℤ from the top exponent down: every step's
    /// leading-coefficient division must be exact. If `self` is a multiple
    /// of `divisor` this always holds, so the quotient is found exactly.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, NotDivisible> {
        if divisor.is_zero() {
            return Err(NotDivisible);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_hi = divisor.max_exp().expect("divisor nonzero");
        let d_lead = divisor.coeff(d_hi);
        // If self = q * divisor, the lowest exponent of q is exactly this;
        // reaching below it means the division cannot be exact.
        let min_q_exp = self.min_exp().unwrap() - divisor.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_hi) = rem.max_exp() {
            let q_exp = r_hi - d_hi;
            if q_exp < min_q_exp {
                return Err(NotDivisible);
            }
            let r_lead = rem.coeff(r_hi);
            if !(&r_lead % &d_lead).is_zero() {
                return Err(NotDivisible);
            }
            let q = Self::monomial(q_exp, r_lead / &d_lead);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        Ok(quot)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms()
                .map(|(e, c)| (e, c.clone()))
                .chain(rhs.terms().map(|(e, c)| (e, c.clone()))),
        )
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms()
                .map(|(e, c)| (e, c.clone()))
                .chain(rhs.terms().map(|(e, c)| (e, -c.clone()))),
        )
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e, -c.clone())))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                let entry = coeffs.entry(ea + eb).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

/// Product of a sequence of polynomials; empty input gives 1.
pub fn product<'a, I: IntoIterator<Item = &'a LaurentPoly>>(factors: I) -> LaurentPoly {
    factors
        .into_iter()
        .fold(LaurentPoly::one(), |acc, f| &acc * f)
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents with explicit signs, e.g.
    /// `t^3 - t^2 + 1 - t^-2 + t^-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(i64, &BigInt)> = self.coeffs.iter().map(|(&e, c)| (e, c)).rev().collect();
        for (i, (e, c)) in terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn from_terms_merges_and_drops_zeros() {
        let q = p(&[(2, 1), (2, -1), (0, 3), (1, 2)]);
        assert_eq!(q.coeff(2), BigInt::zero());
        assert_eq!(q.support_len(), 2);
        assert_eq!(q, p(&[(0, 3), (1, 2)]));
    }

    #[test]
    fn ring_ops() {
        let a = p(&[(0, 1), (1, -1)]); // 1 - t
        let b = p(&[(0, 1), (1, 1)]); // 1 + t
        assert_eq!(&a * &b, p(&[(0, 1), (2, -1)]));
        assert_eq!(&a + &b, p(&[(0, 2)]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(&(-&a) + &a, LaurentPoly::zero());
    }

    #[test]
    fn shift_and_symmetry() {
        let q = p(&[(-3, 1), (-2, -1), (0, 1), (2, -1), (3, 1)]);
        assert!(q.is_symmetric());
        assert!(!q.shifted(1).is_symmetric());
        assert_eq!(q.shifted(3).min_exp(), Some(0));
        assert_eq!(q.eval_one(), BigInt::one());
    }

    #[test]
    fn eval_one_and_derivative() {
        // 1 + (t-1)(t + t^2 + t^5) has p(1) = 1, p'(1) = 3
        let gaps = p(&[(1, 1), (2, 1), (5, 1)]);
        let q = &LaurentPoly::one() + &(&p(&[(1, 1), (0, -1)]) * &gaps);
        assert_eq!(q.eval_one(), BigInt::one());
        assert_eq!(q.derivative_at_one(), BigInt::from(3));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p(&[(0, 1), (1, -1), (3, 1), (5, -1), (6, 1)]);
        let b = p(&[(0, 1), (1, 2), (2, 1)]); // (1 + t)^2
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
    }

    #[test]
    fn inexact_division_is_reported() {
        let a = p(&[(0, 1), (1, 1)]);
        let b = p(&[(0, -1), (1, 1)]);
        assert_eq!(a.div_exact(&b), Err(NotDivisible));
        assert_eq!(a.div_exact(&LaurentPoly::zero()), Err(NotDivisible));
        // non-unit leading coefficient
        assert_eq!(p(&[(2, 2)]).div_exact(&p(&[(1, 2)])), Ok(p(&[(1, 1)])));
        assert_eq!(p(&[(2, 1)]).div_exact(&p(&[(1, 2)])), Err(NotDivisible));
    }

    #[test]
    fn division_with_laurent_tails() {
        let a = p(&[(-3, 1), (-2, -1), (0, 1), (2, -1), (3, 1)]);
        let b = p(&[(-1, 1), (1, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn display_matches_paper_convention() {
        let q = p(&[(-3, 1), (-2, -1), (0, 1), (2, -1), (3, 1)]);
        assert_eq!(format!("{q}"), "t^3 - t^2 + 1 - t^-2 + t^-3");
        assert_eq!(format!("{}", LaurentPoly::zero()), "0");
        assert_eq!(format!("{}", p(&[(0, -2), (1, 3)])), "3t - 2");
        assert_eq!(format!("{}", p(&[(1, -1)])), "-t");
        assert_eq!(format!("{}", p(&[(-1, 2), (2, -3)])), "-3t^2 + 2t^-1");
    }

    #[test]
    fn product_of_factors() {
        let fs = vec![p(&[(0, 1), (1, 1)]), p(&[(0, 1), (1, -1)]), p(&[(0, 2)])];
        assert_eq!(product(&fs), p(&[(0, 2), (2, -2)]));
        assert_eq!(product([]), LaurentPoly::one());
    }
}
