//! Numerical semigroups of plane-curve singularities.
//!
//! A numerical semigroup is a subset of ℤ≥0 containing 0, closed under
//! addition, with finite complement (the *gap set*). Semigroups arise here
//! either from an explicit generating set or from the Puiseux
//! characteristic sequence `(p; q_1, ..., q_m)` of a cusp.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::gcd;

/// Errors from building a semigroup out of a generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupError {
    EmptyGenerators,
    /// Generators must be strictly positive.
    NonPositiveGenerator(i64),
    /// The generators' gcd is not 1, so the complement is infinite.
    GcdNotOne(i64),
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyGenerators => write!(f, "generating set is empty"),
            Self::NonPositiveGenerator(g) => write!(f, "generator {g} is not positive"),
            Self::GcdNotOne(d) => write!(f, "generators have gcd {d}, expected 1"),
        }
    }
}

/// An invalid Puiseux characteristic sequence, with the failed condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidCharSequence(pub &'static str);

impl fmt::Display for InvalidCharSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid characteristic sequence: {}", self.0)
    }
}

/// Puiseux characteristic sequence `(p; q_1, ..., q_m)` of a cusp.
///
/// Requires `2 <= p < q_1 < ... < q_m` and that the gcds
/// `r_0 = p, r_i = gcd(r_{i-1}, q_i)` strictly decrease down to `r_m = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicSequence {
    p: i64,
    qs: Vec<i64>,
}

impl CharacteristicSequence {
    pub fn new(p: i64, qs: impl Into<Vec<i64>>) -> Result<Self, InvalidCharSequence> {
        let qs = qs.into();
        if p < 2 {
            return Err(InvalidCharSequence("p must be at least 2"));
        }
        if qs.is_empty() {
            return Err(InvalidCharSequence("at least one exponent q_1 is required"));
        }
        if qs[0] <= p {
            return Err(InvalidCharSequence("q_1 must exceed p"));
        }
        if qs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(InvalidCharSequence("exponents must strictly increase"));
        }
        let mut r = p;
        for &q in &qs {
            let next = gcd(r, q);
            if next >= r {
                return Err(InvalidCharSequence("gcd sequence must strictly decrease"));
            }
            r = next;
        }
        if r != 1 {
            return Err(InvalidCharSequence("gcd sequence must end at 1"));
        }
        let seq = Self { p, qs };
        if seq.checked_generators().is_none() {
            return Err(InvalidCharSequence("semigroup generators overflow i64"));
        }
        Ok(seq)
    }

    /// A single Puiseux pair `(p; q)`.
    pub fn pair(p: i64, q: i64) -> Result<Self, InvalidCharSequence> {
        Self::new(p, vec![q])
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn qs(&self) -> &[i64] {
        &self.qs
    }

    /// The gcd chain `r_0 = p >= r_1 >= ... >= r_m = 1`.
    pub fn gcd_chain(&self) -> Vec<i64> {
        let mut rs = vec![self.p];
        for &q in &self.qs {
            rs.push(gcd(*rs.last().unwrap(), q));
        }
        rs
    }

    fn checked_generators(&self) -> Option<Vec<i64>> {
        let rs = self.gcd_chain();
        let mut betas: Vec<i128> = vec![self.p as i128, self.qs[0] as i128];
        for i in 1..self.qs.len() {
            let scale = (rs[i - 1] / rs[i]) as i128;
            let next = scale
                .checked_mul(betas[i])?
                .checked_add((self.qs[i] - self.qs[i - 1]) as i128)?;
            betas.push(next);
        }
        betas
            .into_iter()
            .map(|b| i64::try_from(b).ok())
            .collect()
    }

    /// Semigroup generators `β̄_0 = p`, `β̄_1 = q_1`,
    /// `β̄_{i+1} = (r_{i-1}/r_i) β̄_i + q_{i+1} - q_i`.
    pub fn generators(&self) -> Vec<i64> {
        self.checked_generators()
            .expect("overflow ruled out at construction")
    }

    /// Milnor number `μ = sum (r_{i-1} - r_i) q_i - p + 1`; equals twice
    /// the genus of the semigroup.
    pub fn milnor_number(&self) -> i64 {
        let rs = self.gcd_chain();
        let sum: i64 = self
            .qs
            .iter()
            .enumerate()
            .map(|(i, &q)| (rs[i] - rs[i + 1]) * q)
            .sum();
        sum - self.p + 1
    }
}

impl fmt::Display for CharacteristicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.p)?;
        for (i, q) in self.qs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, ")")
    }
}

/// A numerical semigroup, stored by its finite gap set.
#[derive(Clone, Debug, Eq)]
pub struct NumericalSemigroup {
    /// Strictly increasing positive integers not in the semigroup.
    gaps: Vec<i64>,
    /// Least element from which every integer belongs to the semigroup;
    /// `max gap + 1`, or 0 when there are no gaps.
    conductor: i64,
    /// The generating set the semigroup was built from (sorted, deduplicated),
    /// kept for reporting; not necessarily minimal.
    generators: Option<Vec<i64>>,
}

impl PartialEq for NumericalSemigroup {
    /// Semigroups are equal when they contain the same integers; the
    /// remembered generating set is presentation data only.
    fn eq(&self, other: &Self) -> bool {
        self.gaps == other.gaps
    }
}

impl NumericalSemigroup {
    /// `ℤ≥0` itself: the semigroup of a smooth point.
    pub fn trivial() -> Self {
        Self {
            gaps: Vec::new(),
            conductor: 0,
            generators: Some(vec![1]),
        }
    }

    /// Builds the semigroup generated by the given positive integers.
    ///
    /// Membership is sieved upward until a run of `min(gens)` consecutive
    /// members appears; past such a run every integer is a member (add
    /// multiples of the smallest generator), so the gap set is complete.
    pub fn from_generators(gens: &[i64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(SemigroupError::NonPositiveGenerator(bad));
        }
        let mut gens: Vec<i64> = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(SemigroupError::GcdNotOne(d));
        }

        let mult = gens[0] as usize;
        let mut member = vec![false; 2 * (*gens.last().unwrap() as usize) + 2];
        member[0] = true;
        let mut run = 0usize;
        let mut x = 1usize;
        loop {
            if x == member.len() {
                member.resize(2 * member.len(), false);
            }
            member[x] = gens.iter().any(|&g| {
                let g = g as usize;
                g <= x && member[x - g]
            });
            if member[x] {
                run += 1;
                if run == mult {
                    break;
                }
            } else {
                run = 0;
            }
            x += 1;
        }
        let gaps: Vec<i64> = (1..x).filter(|&y| !member[y]).map(|y| y as i64).collect();
        let conductor = gaps.last().map_or(0, |&g| g + 1);
        Ok(Self {
            gaps,
            conductor,
            generators: Some(gens),
        })
    }

    /// The value semigroup of a cusp with the given characteristic sequence.
    pub fn from_char_sequence(seq: &CharacteristicSequence) -> Self {
        let s = Self::from_generators(&seq.generators())
            .expect("characteristic-sequence generators are coprime");
        debug_assert!(s.is_symmetric());
        debug_assert_eq!(2 * s.genus(), seq.milnor_number());
        s
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    /// Number of gaps; the δ-invariant of the singular point.
    pub fn genus(&self) -> i64 {
        self.gaps.len() as i64
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Largest integer not in the semigroup, if any.
    pub fn frobenius(&self) -> Option<i64> {
        self.gaps.last().copied()
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> i64 {
        (1..).find(|&x| self.contains(x)).unwrap()
    }

    pub fn generators(&self) -> Option<&[i64]> {
        self.generators.as_deref()
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        if x >= self.conductor {
            return true;
        }
        self.gaps.binary_search(&x).is_err()
    }

    /// `|S ∩ [0, k)|`, exact for every `k` (0 for `k <= 0`).
    pub fn count_below(&self, k: i64) -> i64 {
        if k <= 0 {
            return 0;
        }
        k - self.gaps.partition_point(|&r| r < k) as i64
    }

    /// Whether `x ∈ S  ⟺  2g - 1 - x ∉ S` for all `x`; for gap sets of
    /// cuspidal points this always holds.
    pub fn is_symmetric(&self) -> bool {
        let g = self.genus();
        if g == 0 {
            return true;
        }
        if self.conductor != 2 * g {
            return false;
        }
        (0..2 * g).all(|x| self.contains(x) != self.contains(2 * g - 1 - x))
    }

    /// The minimal generating set, computed from the gap set: the nonzero
    /// members that are not a sum of two nonzero members.
    pub fn minimal_generators(&self) -> Vec<i64> {
        if self.gaps.is_empty() {
            return vec![1];
        }
        let bound = self.conductor + self.multiplicity();
        (1..=bound)
            .filter(|&x| {
                self.contains(x)
                    && !(1..x).any(|a| self.contains(a) && self.contains(x - a))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    fn pair(p: i64, q: i64) -> NumericalSemigroup {
        NumericalSemigroup::from_char_sequence(&CharacteristicSequence::pair(p, q).unwrap())
    }

    #[test]
    fn generators_3_4() {
        let s = NumericalSemigroup::from_generators(&[3, 4]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 5]);
        assert_eq!(s.genus(), 3);
        assert_eq!(s.conductor(), 6);
        assert_eq!(s.frobenius(), Some(5));
        assert_eq!(s.multiplicity(), 3);
        assert!(s.is_symmetric());
    }

    #[test]
    fn generators_4_6_13() {
        let s = NumericalSemigroup::from_generators(&[4, 6, 13]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 3, 5, 7, 9, 11, 15]);
        assert_eq!(s.genus(), 8);
        assert_eq!(s.conductor(), 16);
        assert!(s.is_symmetric());
    }

    #[test]
    fn generators_without_coprime_pair() {
        // pairwise gcds are 2, 3, 5 but the triple generates a semigroup;
        // it is even symmetric (a complete intersection), though it is not
        // the semigroup of any characteristic sequence
        let s = NumericalSemigroup::from_generators(&[6, 10, 15]).unwrap();
        assert_eq!(
            s.gaps(),
            &[1, 2, 3, 4, 5, 7, 8, 9, 11, 13, 14, 17, 19, 23, 29]
        );
        assert_eq!(s.frobenius(), Some(29));
        assert!(s.is_symmetric());
    }

    #[test]
    fn non_symmetric_semigroup() {
        let s = NumericalSemigroup::from_generators(&[3, 5, 7]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 4]);
        assert_eq!(s.conductor(), 5); // != 2 * genus
        assert!(!s.is_symmetric());
    }

    #[test]
    fn trivial_semigroup() {
        let s = NumericalSemigroup::trivial();
        assert_eq!(s.gaps(), &[] as &[i64]);
        assert_eq!(s.genus(), 0);
        assert_eq!(s.conductor(), 0);
        assert_eq!(s.frobenius(), None);
        assert_eq!(s.multiplicity(), 1);
        assert!(s.is_symmetric());
        assert_eq!(s, NumericalSemigroup::from_generators(&[1]).unwrap());
        assert_eq!(s.count_below(5), 5);
    }

    #[test]
    fn bad_generator_sets() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(SemigroupError::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[2, 4]),
            Err(SemigroupError::GcdNotOne(2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(SemigroupError::NonPositiveGenerator(0))
        );
    }

    #[test]
    fn char_sequence_generator_recursion() {
        let seq = CharacteristicSequence::new(4, [6, 7]).unwrap();
        assert_eq!(seq.generators(), vec![4, 6, 13]);
        assert_eq!(seq.gcd_chain(), vec![4, 2, 1]);
        assert_eq!(seq.milnor_number(), 16);

        let s = NumericalSemigroup::from_char_sequence(&seq);
        assert_eq!(s, NumericalSemigroup::from_generators(&[4, 6, 13]).unwrap());
        assert_eq!(s.genus(), 8);

        let seq = CharacteristicSequence::new(8, [12, 14, 15]).unwrap();
        assert_eq!(seq.generators(), vec![8, 12, 26, 53]);
        assert_eq!(seq.milnor_number(), 84);
        let s = NumericalSemigroup::from_char_sequence(&seq);
        assert_eq!(s.genus(), 42);
        assert!(s.is_symmetric());
    }

    #[test]
    fn char_sequence_validation() {
        assert!(CharacteristicSequence::pair(2, 3).is_ok());
        assert!(CharacteristicSequence::pair(1, 3).is_err());
        assert!(CharacteristicSequence::pair(3, 2).is_err());
        assert!(CharacteristicSequence::pair(2, 4).is_err()); // gcd stalls at 2
        assert!(CharacteristicSequence::new(4, []).is_err());
        assert!(CharacteristicSequence::new(4, [6, 8]).is_err()); // r stalls at 2
        assert!(CharacteristicSequence::new(4, [6, 6]).is_err()); // not increasing
        assert!(CharacteristicSequence::new(4, [6, 9]).is_ok());
    }

    #[test]
    fn display_forms() {
        use alloc::format;
        let seq = CharacteristicSequence::new(4, [6, 7]).unwrap();
        assert_eq!(format!("{seq}"), "(4;6,7)");
    }

    #[test]
    fn count_below_examples() {
        let s = pair(2, 3);
        assert_eq!(s.count_below(1), 1);
        assert_eq!(s.count_below(4), 3);
        assert_eq!(s.count_below(0), 0);
        assert_eq!(s.count_below(-3), 0);
        assert_eq!(s.count_below(100), 99);
    }

    #[test]
    fn minimal_generating_sets() {
        let s = NumericalSemigroup::from_generators(&[4, 6, 13]).unwrap();
        assert_eq!(s.minimal_generators(), vec![4, 6, 13]);
        let s = NumericalSemigroup::from_generators(&[2, 3, 4]).unwrap();
        assert_eq!(s.minimal_generators(), vec![2, 3]);
        assert_eq!(NumericalSemigroup::trivial().minimal_generators(), vec![1]);
    }

    /// The semigroup of (4;6,7) is the set of vanishing orders of curves
    /// against the branch x = t^4, y = t^6 + t^7: check each claimed member
    /// below the conductor is realized by an explicit polynomial in x, y.
    #[test]
    fn orders_realized_for_4_6_7() {
        let x = LaurentPoly::t_pow(4);
        let y = &LaurentPoly::t_pow(6) + &LaurentPoly::t_pow(7);
        let ord = |p: &LaurentPoly| p.min_exp().expect("nonzero");

        let x3 = &(&x * &x) * &x;
        let cusp = &(&y * &y) - &x3; // y^2 - x^3 = 2t^13 + t^14
        assert_eq!(ord(&cusp), 13);

        let s = NumericalSemigroup::from_char_sequence(
            &CharacteristicSequence::new(4, [6, 7]).unwrap(),
        );
        let mut realized = alloc::collections::BTreeSet::new();
        for a in 0..5i64 {
            for b in 0..3i64 {
                for c in [false, true] {
                    let mut p = LaurentPoly::one();
                    for _ in 0..a {
                        p = &p * &x;
                    }
                    for _ in 0..b {
                        p = &p * &y;
                    }
                    if c {
                        p = &p * &cusp;
                    }
                    realized.insert(ord(&p));
                }
            }
        }
        for v in 0..s.conductor() {
            assert_eq!(s.contains(v), realized.contains(&v), "order {v}");
        }
        for &v in &realized {
            assert!(s.contains(v));
        }
    }

    #[test]
    fn closure_under_addition_window() {
        let s = pair(3, 7);
        let c = s.conductor();
        for a in 0..=2 * c {
            for b in a..=2 * c {
                if s.contains(a) && s.contains(b) {
                    assert!(s.contains(a + b));
                }
            }
        }
    }
}
