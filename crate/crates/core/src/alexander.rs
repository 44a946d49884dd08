//! Alexander polynomials of algebraic knots, in three guises: normalized
//! (lowest exponent 0, constant term 1), symmetric (`p(t) = p(1/t)`), and
//! the L-space normal form `t^{n_0} - t^{n_1} + ... + t^{n_2k}` given by
//! its strictly decreasing exponent sequence.

use alloc::vec::Vec;
use core::fmt;

use num_integer::gcd;

use crate::laurent::LaurentPoly;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlexanderError {
    /// The semigroup is not symmetric, so it is not the semigroup of an
    /// irreducible plane-curve singularity.
    NotSymmetric,
    /// Symmetrizing needs an even exponent span.
    OddDegree,
    /// The polynomial is not an alternating sum of ±1 monomials symmetric
    /// about exponent 0, so it is not the Alexander polynomial of an
    /// L-space knot.
    NotLSpaceForm,
    /// Torus knot parameters must be coprime.
    NotCoprime(i64),
    /// Torus knot parameters must be positive.
    NonPositive(i64),
}

impl fmt::Display for AlexanderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotSymmetric => write!(f, "semigroup is not symmetric"),
            Self::OddDegree => write!(f, "polynomial has odd exponent span"),
            Self::NotLSpaceForm => write!(f, "polynomial is not in L-space normal form"),
            Self::NotCoprime(d) => write!(f, "torus knot parameters have gcd {d}"),
            Self::NonPositive(v) => write!(f, "torus knot parameter {v} is not positive"),
        }
    }
}

/// Normalized Alexander polynomial `1 + (t - 1) * sum_{r in G} t^r` of the
/// knot of a singularity with symmetric gap set `G`.
///
/// Has constant term 1 and degree `2g`; for the trivial semigroup (a smooth
/// point) it is the unknot's polynomial, 1.
pub fn alexander_from_semigroup(s: &NumericalSemigroup) -> Result<LaurentPoly, AlexanderError> {
    if !s.is_symmetric() {
        return Err(AlexanderError::NotSymmetric);
    }
    let gap_sum = LaurentPoly::from_terms(s.gaps().iter().map(|&r| (r, 1)));
    let t_minus_1 = LaurentPoly::from_terms([(1i64, 1i64), (0, -1)]);
    Ok(&LaurentPoly::one() + &(&t_minus_1 * &gap_sum))
}

/// Recenters a polynomial so that `p(t) = p(1/t)` can hold: divides by
/// `t^g` where `2g` is the exponent span. Fails on odd span.
pub fn symmetrize(p: &LaurentPoly) -> Result<LaurentPoly, AlexanderError> {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return Ok(LaurentPoly::zero());
    };
    if (hi - lo) % 2 != 0 {
        return Err(AlexanderError::OddDegree);
    }
    Ok(p.shifted(-(lo + hi) / 2))
}

/// Exponents `n_0 > n_1 > ... > n_{2k}` of a symmetric Alexander polynomial
/// in L-space normal form `sum_i (-1)^i t^{n_i}`.
///
/// Checks that the coefficients strictly alternate +1, -1 starting and
/// ending with +1 (odd term count) and that the exponents are symmetric
/// (`n_i = -n_{2k-i}`, so `n_0 = g`).
pub fn lspace_normal_form(p: &LaurentPoly) -> Result<Vec<i64>, AlexanderError> {
    let terms: Vec<(i64, _)> = p.terms().collect();
    if terms.is_empty() || terms.len() % 2 == 0 {
        return Err(AlexanderError::NotLSpaceForm);
    }
    let mut exps = Vec::with_capacity(terms.len());
    for (i, &(e, c)) in terms.iter().rev().enumerate() {
        let want = if i % 2 == 0 { 1 } else { -1 };
        if *c != want.into() {
            return Err(AlexanderError::NotLSpaceForm);
        }
        // mirror of the i-th largest exponent is the i-th smallest
        if e != -terms[i].0 {
            return Err(AlexanderError::NotLSpaceForm);
        }
        exps.push(e);
    }
    Ok(exps)
}

/// Alexander polynomial of the `(p, q)` torus knot via the closed form
/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, computed as the exact
/// quotient `(sum_{i<q} t^{ip}) / (sum_{i<q} t^i)`.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly, AlexanderError> {
    if p < 1 {
        return Err(AlexanderError::NonPositive(p));
    }
    if q < 1 {
        return Err(AlexanderError::NonPositive(q));
    }
    let d = gcd(p, q);
    if d != 1 {
        return Err(AlexanderError::NotCoprime(d));
    }
    let num = LaurentPoly::from_terms((0..q).map(|i| (i * p, 1)));
    let den = LaurentPoly::from_terms((0..q).map(|i| (i, 1)));
    Ok(num
        .div_exact(&den)
        .expect("(t^pq - 1)(t - 1) is divisible by (t^p - 1)(t^q - 1)"))
}
