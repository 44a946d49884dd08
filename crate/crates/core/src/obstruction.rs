//! Obstructions to realizing a collection of cusps on a rational plane
//! curve of degree `d`.
//!
//! Three checks run on a candidate configuration:
//!
//! 1. **Genus.** A rational cuspidal curve satisfies
//!    `sum_i δ_i = (d-1)(d-2)/2`; the residual must vanish.
//! 2. **Semigroup distribution.** With `S_1, ..., S_n` the cusp
//!    semigroups, the min-plus convolved counting function must hit
//!    `(j+1)(j+2)/2` at `k = jd + 1` for every `j` in `[0, d-2]`. This is
//!    equivalent to the vanishing of the `d`-invariants of `S^3_{d^2}`
//!    surgery in the extendable spin-c structures, which
//!    [`d_invariant_crosscheck`] recomputes independently via staircase
//!    `V` functions.
//! 3. **Coefficient bound (conjecture check).** Writing
//!    `Δ(t) = 1 + (t-1)δ + (t-1)^2 Q(t)`, the coefficient `c_j` of `Q` at
//!    `t^{d(d-3-j)}` is compared against `(j+1)(j+2)/2`. This inequality
//!    is a conjecture with known multi-cusp counterexamples, so failures
//!    are advisory, never verdicts.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::alexander::alexander_from_semigroup;
use crate::invariants::{d_large_surgery, InvariantError, SpinCIndex, VFunction};
use crate::laurent::{product, LaurentPoly};
use crate::semigroup::{CharacteristicSequence, NumericalSemigroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionError {
    /// Degree must be at least 3 for a cuspidal curve.
    InvalidDegree(i64),
    NoCusps,
    /// The genus formula `sum δ_i = (d-1)(d-2)/2` fails with this residual,
    /// so the distribution checks do not apply.
    GenusFormulaViolated { residual: i64 },
    /// A cusp semigroup is not symmetric.
    NotSymmetric,
    /// Internal: `Δ - 1 - (t-1)δ` was not divisible by `(t-1)^2`. This
    /// cannot happen when the genus residual vanishes.
    NotDivisible,
}

impl fmt::Display for ObstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidDegree(d) => write!(f, "degree {d} is below 3"),
            Self::NoCusps => write!(f, "configuration has no cusps"),
            Self::GenusFormulaViolated { residual } => {
                write!(f, "genus formula fails with residual {residual}")
            }
            Self::NotSymmetric => write!(f, "cusp semigroup is not symmetric"),
            Self::NotDivisible => write!(f, "Alexander polynomial quotient is not exact"),
        }
    }
}

/// A candidate rational cuspidal curve: a degree and one characteristic
/// sequence per cusp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveConfiguration {
    degree: i64,
    cusps: Vec<CharacteristicSequence>,
}

impl CurveConfiguration {
    pub fn new(
        degree: i64,
        cusps: Vec<CharacteristicSequence>,
    ) -> Result<Self, ObstructionError> {
        if degree < 3 {
            return Err(ObstructionError::InvalidDegree(degree));
        }
        if cusps.is_empty() {
            return Err(ObstructionError::NoCusps);
        }
        Ok(Self { degree, cusps })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn cusps(&self) -> &[CharacteristicSequence] {
        &self.cusps
    }

    pub fn semigroups(&self) -> Vec<NumericalSemigroup> {
        self.cusps
            .iter()
            .map(NumericalSemigroup::from_char_sequence)
            .collect()
    }

    /// `(d-1)(d-2)/2`, the genus a degree-`d` rational curve must absorb
    /// in its singular points.
    pub fn expected_genus(&self) -> i64 {
        (self.degree - 1) * (self.degree - 2) / 2
    }
}

/// `(d-1)(d-2)/2 - sum_i δ_i`; zero is necessary for existence. Negative
/// residuals are impossible outright (the cusps carry more genus than any
/// degree-`d` curve has).
pub fn genus_formula_residual(cfg: &CurveConfiguration) -> i64 {
    let total: i64 = cfg.semigroups().iter().map(|s| s.genus()).sum();
    cfg.expected_genus() - total
}

/// Min-plus convolution of the counting functions on `[0, kmax]`:
/// entry `k` is `min { sum_i |S_i ∩ [0, k_i)| : k_1 + ... + k_n = k }`.
pub fn minplus_counting_table(
    semis: &[NumericalSemigroup],
    kmax: i64,
) -> Result<Vec<i64>, ObstructionError> {
    if semis.is_empty() {
        return Err(ObstructionError::NoCusps);
    }
    if semis.iter().any(|s| !s.is_symmetric()) {
        return Err(ObstructionError::NotSymmetric);
    }
    let kmax = kmax.max(0) as usize;
    let count = |s: &NumericalSemigroup| -> Vec<i64> {
        (0..=kmax as i64).map(|k| s.count_below(k)).collect()
    };
    let mut acc = count(&semis[0]);
    for s in &semis[1..] {
        let nxt = count(s);
        acc = (0..=kmax)
            .map(|k| (0..=k).map(|a| acc[a] + nxt[k - a]).min().unwrap())
            .collect();
    }
    Ok(acc)
}

/// The min-plus convolved count at a single `k` (0 for `k <= 0`).
pub fn minplus_counting(semis: &[NumericalSemigroup], k: i64) -> Result<i64, ObstructionError> {
    if k <= 0 {
        // still validate the input
        return minplus_counting_table(semis, 0).map(|_| 0);
    }
    Ok(minplus_counting_table(semis, k)?[k as usize])
}

/// One row of the distribution check at level `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlRecord {
    pub j: i64,
    /// `(j+1)(j+2)/2`.
    pub required: i64,
    /// Min-plus convolved count at `k = jd + 1`.
    pub computed: i64,
}

impl BlRecord {
    pub fn pass(&self) -> bool {
        self.computed == self.required
    }
}

/// The semigroup-distribution criterion: for `j` in `[0, d-2]` the
/// convolved count at `jd + 1` must equal `(j+1)(j+2)/2` exactly.
/// Requires a vanishing genus residual.
pub fn bl_check(cfg: &CurveConfiguration) -> Result<Vec<BlRecord>, ObstructionError> {
    let residual = genus_formula_residual(cfg);
    if residual != 0 {
        return Err(ObstructionError::GenusFormulaViolated { residual });
    }
    let d = cfg.degree();
    let table = minplus_counting_table(&cfg.semigroups(), (d - 2) * d + 1)?;
    Ok((0..=d - 2)
        .map(|j| BlRecord {
            j,
            required: (j + 1) * (j + 2) / 2,
            computed: table[(j * d + 1) as usize],
        })
        .collect())
}

/// Spin-c structures on `S^3_{d^2}` that extend over the complement of the
/// curve: index `m = d(d - 2j - 1)/2` for `j` in `[0, d-1]`, paired with
/// `j`. The criterion and the cross-check use only `j <= d-2`; the last
/// index is informational.
pub fn extendable_spinc(d: i64) -> Vec<(i64, SpinCIndex)> {
    assert!(d >= 1);
    (0..=d - 1)
        .map(|j| {
            let m = d * (d - 2 * j - 1) / 2;
            (
                j,
                SpinCIndex::new(d * d, m).expect("extendable index is always in range"),
            )
        })
        .collect()
}

/// A `d`-invariant of `S^3_{d^2}(K)` at the extendable spin-c structure
/// of level `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DInvariantRecord {
    pub j: i64,
    pub m: i64,
    pub value: BigRational,
}

impl DInvariantRecord {
    /// Vanishing is the pass condition for the cross-check.
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

/// Correction terms of `d^2`-surgery on the connected sum of the cusp
/// knots, at the extendable spin-c structures with `j` in `[0, d-2]`.
///
/// All of them vanish exactly when [`bl_check`] passes; this route goes
/// through staircases, `V` functions and their min-plus convolution
/// instead of gap counting, so the two provide independent evidence.
pub fn d_invariant_crosscheck(
    cfg: &CurveConfiguration,
) -> Result<Vec<DInvariantRecord>, ObstructionError> {
    let residual = genus_formula_residual(cfg);
    if residual != 0 {
        return Err(ObstructionError::GenusFormulaViolated { residual });
    }
    let semis = cfg.semigroups();
    let mut vs = Vec::with_capacity(semis.len());
    for s in &semis {
        match VFunction::from_semigroup(s) {
            Ok(v) => vs.push(v),
            Err(InvariantError::NotSymmetric) => return Err(ObstructionError::NotSymmetric),
            Err(_) => unreachable!("from_semigroup only reports asymmetry"),
        }
    }
    let v = VFunction::convolve_all(vs.iter());
    let d = cfg.degree();
    Ok(extendable_spinc(d)
        .into_iter()
        .take((d - 1) as usize)
        .map(|(j, spinc)| DInvariantRecord {
            j,
            m: spinc.m(),
            value: d_large_surgery(spinc, &v)
                .expect("q = d^2 exceeds 2g - 1 whenever the genus residual vanishes"),
        })
        .collect())
}

/// One row of the coefficient conjecture check at level `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlmnRecord {
    pub j: i64,
    /// `(j+1)(j+2)/2`.
    pub bound: i64,
    /// Coefficient of `Q` at `t^{d(d-3-j)}`.
    pub c: BigInt,
}

impl FlmnRecord {
    pub fn pass(&self) -> bool {
        self.c <= BigInt::from(self.bound)
    }
}

/// Coefficients `c_0, ..., c_{d-3}` of the quotient `Q` in
/// `Δ(t) = 1 + (t-1)δ + (t-1)^2 Q(t)`, where `Δ` is the product of the
/// normalized cusp Alexander polynomials and `δ = (d-1)(d-2)/2`; `c_j` is
/// read off at `t^{d(d-3-j)}`.
pub fn flmn_coefficients(cfg: &CurveConfiguration) -> Result<Vec<BigInt>, ObstructionError> {
    let residual = genus_formula_residual(cfg);
    if residual != 0 {
        return Err(ObstructionError::GenusFormulaViolated { residual });
    }
    let mut factors = Vec::new();
    for s in cfg.semigroups() {
        factors.push(alexander_from_semigroup(&s).map_err(|_| ObstructionError::NotSymmetric)?);
    }
    let delta_poly = product(factors.iter());
    let d = cfg.degree();
    let delta = cfg.expected_genus();
    let t_minus_1 = LaurentPoly::from_terms([(1i64, 1i64), (0, -1)]);
    let p = &(&delta_poly - &LaurentPoly::one()) - &(&t_minus_1 * &LaurentPoly::monomial(0, delta));
    let q = p
        .div_exact(&(&t_minus_1 * &t_minus_1))
        .map_err(|_| ObstructionError::NotDivisible)?;
    Ok((0..=d - 3).map(|j| q.coeff(d * (d - 3 - j))).collect())
}

/// The conjecture check `c_j <= (j+1)(j+2)/2` for `j` in `[0, d-3]`.
pub fn flmn_check(cfg: &CurveConfiguration) -> Result<Vec<FlmnRecord>, ObstructionError> {
    let cs = flmn_coefficients(cfg)?;
    Ok(cs
        .into_iter()
        .enumerate()
        .map(|(j, c)| {
            let j = j as i64;
            FlmnRecord {
                j,
                bound: (j + 1) * (j + 2) / 2,
                c,
            }
        })
        .collect())
}

/// Overall verdict of one check within a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Negative genus residual: no curve of this degree can carry the cusps.
    Impossible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pass => write!(f, "pass"),
            Self::Fail => write!(f, "fail"),
            Self::Impossible => write!(f, "impossible"),
        }
    }
}

/// Everything the obstruction pipeline can say about one configuration.
///
/// The distribution rows, `d`-invariants and coefficient rows are present
/// exactly when the genus residual vanishes. The report is a pure function
/// of the configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub degree: i64,
    pub cusps: Vec<CharacteristicSequence>,
    pub genus_residual: i64,
    pub bl: Option<Vec<BlRecord>>,
    pub d_invariants: Option<Vec<DInvariantRecord>>,
    pub flmn: Option<Vec<FlmnRecord>>,
}

impl ObstructionReport {
    pub fn compute(cfg: &CurveConfiguration) -> Self {
        let genus_residual = genus_formula_residual(cfg);
        let runnable = genus_residual == 0;
        Self {
            degree: cfg.degree(),
            cusps: cfg.cusps().to_vec(),
            genus_residual,
            bl: runnable.then(|| bl_check(cfg).expect("residual is zero")),
            d_invariants: runnable.then(|| d_invariant_crosscheck(cfg).expect("residual is zero")),
            flmn: runnable.then(|| flmn_check(cfg).expect("residual is zero")),
        }
    }

    pub fn genus_verdict(&self) -> Verdict {
        match self.genus_residual {
            0 => Verdict::Pass,
            r if r < 0 => Verdict::Impossible,
            _ => Verdict::Fail,
        }
    }

    /// The binding verdict: the genus gate when it fails, otherwise the
    /// distribution criterion.
    pub fn verdict(&self) -> Verdict {
        self.bl_verdict().unwrap_or_else(|| self.genus_verdict())
    }

    /// Verdict of the distribution criterion; `None` when it could not run.
    pub fn bl_verdict(&self) -> Option<Verdict> {
        self.bl.as_ref().map(|rows| {
            if rows.iter().all(BlRecord::pass) {
                Verdict::Pass
            } else {
                Verdict::Fail
            }
        })
    }

    /// First failing `j` of the distribution criterion, if any.
    pub fn bl_first_fail(&self) -> Option<&BlRecord> {
        self.bl.as_ref()?.iter().find(|r| !r.pass())
    }

    /// Whether every cross-checked `d`-invariant vanishes.
    pub fn d_all_zero(&self) -> Option<bool> {
        self.d_invariants
            .as_ref()
            .map(|rows| rows.iter().all(|r| r.value.is_zero()))
    }

    /// Whether the coefficient conjecture holds here; advisory only.
    pub fn flmn_satisfied(&self) -> Option<bool> {
        self.flmn
            .as_ref()
            .map(|rows| rows.iter().all(FlmnRecord::pass))
    }
}
