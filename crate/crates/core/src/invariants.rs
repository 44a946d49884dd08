//! The `V_m` invariants of L-space knots and their connected sums, and the
//! `d`-invariants of large surgeries.
//!
//! For a staircase complex, `V_m` is the minimum over grading-0 cycles `x`
//! of `max(i(x), j(x) - m)`. For the algebraic knot of a semigroup `S` with
//! genus `g` and gap set `G`, equivalently `V_m = |G ∩ [m + g, ∞)|` for
//! `m >= -g`. Outside the window `(-g, g)` the closed forms `V_m = 0`
//! (`m >= g`) and `V_m = -m` (`m <= -g`) apply. Connected sums obey the
//! min-plus convolution `V_m(K # K') = min_k (V_k(K) + V_{m-k}(K'))`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::semigroup::NumericalSemigroup;
use crate::staircase::StaircaseComplex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantError {
    /// Gap-set evaluation of `V` needs a symmetric semigroup.
    NotSymmetric,
    /// A spin-c structure on `q`-surgery is indexed by `-q/2 <= m < q/2`.
    SpinCOutOfRange { q: i64, m: i64 },
    /// The large-surgery formula needs `q >= 2g - 1`.
    SurgeryTooSmall { q: i64, genus: i64 },
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotSymmetric => write!(f, "semigroup is not symmetric"),
            Self::SpinCOutOfRange { q, m } => {
                write!(f, "spin-c index {m} outside [-{q}/2, {q}/2)")
            }
            Self::SurgeryTooSmall { q, genus } => {
                write!(f, "surgery coefficient {q} below 2g - 1 = {}", 2 * genus - 1)
            }
        }
    }
}

/// `V_m` read off a staircase: minimum over the grading-0 vertices `(i, j)`
/// of `max(i, j - m)`.
pub fn v_from_staircase(st: &StaircaseComplex, m: i64) -> i64 {
    st.x
        .iter()
        .map(|&(i, j)| i.max(j - m))
        .min()
        .expect("staircase has at least one x vertex")
}

/// `V_m` from the gap set: `|G ∩ [m + g, ∞)|` for `m >= -g`, extended by
/// `V_m = -m` below.
pub fn v_from_gaps(s: &NumericalSemigroup, m: i64) -> Result<i64, InvariantError> {
    if !s.is_symmetric() {
        return Err(InvariantError::NotSymmetric);
    }
    Ok(v_from_gaps_unchecked(s, m))
}

fn v_from_gaps_unchecked(s: &NumericalSemigroup, m: i64) -> i64 {
    let g = s.genus();
    if m < -g {
        return -m;
    }
    let cut = m + g;
    (s.genus() as usize - s.gaps().partition_point(|&r| r < cut)) as i64
}

/// The whole function `m -> V_m` of an L-space knot or a connected sum of
/// L-space knots, evaluable at every integer.
///
/// Values are tabulated once on the finite nontrivial window `[-g, g]`;
/// outside it the closed forms apply, so evaluation is total and exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VFunction {
    genus: i64,
    conductor: i64,
    /// `V_m` for `m` in `[-genus, genus]`, indexed by `m + genus`.
    values: Vec<i64>,
}

impl VFunction {
    /// The unknot: `V_m = max(0, -m)`, the identity for convolution.
    pub fn unknot() -> Self {
        Self {
            genus: 0,
            conductor: 0,
            values: alloc::vec![0],
        }
    }

    pub fn from_staircase(st: &StaircaseComplex) -> Self {
        let g = st.genus;
        Self {
            genus: g,
            conductor: 2 * g,
            values: (-g..=g).map(|m| v_from_staircase(st, m)).collect(),
        }
    }

    pub fn from_semigroup(s: &NumericalSemigroup) -> Result<Self, InvariantError> {
        if !s.is_symmetric() {
            return Err(InvariantError::NotSymmetric);
        }
        let g = s.genus();
        Ok(Self {
            genus: g,
            conductor: s.conductor(),
            values: (-g..=g).map(|m| v_from_gaps_unchecked(s, m)).collect(),
        })
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Sum of the component conductors; `[-conductor, genus]` is a safe
    /// window for serialization and search.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn eval(&self, m: i64) -> i64 {
        if m >= self.genus {
            0
        } else if m <= -self.genus {
            -m
        } else {
            self.values[(m + self.genus) as usize]
        }
    }

    /// Min-plus convolution, the `V` function of the connected sum.
    ///
    /// Restricting `k` to `[-g_a, g_a]` loses nothing: for `k` beyond
    /// either end, one operand is in its closed-form regime and the sum is
    /// monotone in `k`, so the boundary value already dominates.
    pub fn convolve(&self, other: &Self) -> Self {
        let g = self.genus + other.genus;
        let values = (-g..=g)
            .map(|m| {
                (-self.genus..=self.genus)
                    .map(|k| self.eval(k) + other.eval(m - k))
                    .min()
                    .expect("window is never empty")
            })
            .collect();
        Self {
            genus: g,
            conductor: self.conductor + other.conductor,
            values,
        }
    }

    /// Convolution of any number of operands; empty input gives the unknot.
    pub fn convolve_all<'a, I: IntoIterator<Item = &'a VFunction>>(vs: I) -> Self {
        vs.into_iter()
            .fold(Self::unknot(), |acc, v| acc.convolve(v))
    }
}

/// A spin-c structure on `q`-surgery, indexed by `m` with `-q/2 <= m < q/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinCIndex {
    q: i64,
    m: i64,
}

impl SpinCIndex {
    pub fn new(q: i64, m: i64) -> Result<Self, InvariantError> {
        if q < 1 || 2 * m < -q || 2 * m >= q {
            return Err(InvariantError::SpinCOutOfRange { q, m });
        }
        Ok(Self { q, m })
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn m(&self) -> i64 {
        self.m
    }
}

/// Correction term of the large surgery `S^3_q(K)` in the spin-c structure
/// `m`: `d = ((q - 2m)^2 - q) / (4q) - 2 V_m`, exact; requires
/// `q >= 2g - 1`.
pub fn d_large_surgery(spinc: SpinCIndex, v: &VFunction) -> Result<BigRational, InvariantError> {
    let (q, m) = (spinc.q, spinc.m);
    if q < 2 * v.genus() - 1 {
        return Err(InvariantError::SurgeryTooSmall {
            q,
            genus: v.genus(),
        });
    }
    let delta = i128::from(q - 2 * m);
    let numer = BigInt::from(delta * delta - i128::from(q));
    let term = BigRational::new(numer, BigInt::from(4 * i128::from(q)));
    Ok(term - BigRational::from(BigInt::from(2 * v.eval(m))))
}
