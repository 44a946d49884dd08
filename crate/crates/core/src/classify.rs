//! Candidate enumeration for the search mode, and membership tests for
//! the known families of unicuspidal rational curves whose cusp has one
//! Puiseux pair.

use alloc::vec::Vec;
use core::fmt;

use num_integer::gcd;

/// Coprime pairs `2 <= p < q` with `(p-1)(q-1) = (d-1)(d-2)`: the possible
/// one-Puiseux-pair cusps of a unicuspidal rational curve of degree `d`,
/// ascending in `p`.
pub fn enumerate_single_pair(d: i64) -> Vec<(i64, i64)> {
    assert!(d >= 3);
    pairs_with_double_genus((d - 1) * (d - 2))
}

/// Coprime pairs `2 <= p < q` with `(p-1)(q-1) = n` (`n = 2 * genus`).
fn pairs_with_double_genus(n: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut a = 1;
    while a * a < n {
        if n % a == 0 {
            let (p, q) = (a + 1, n / a + 1);
            if gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
        a += 1;
    }
    out
}

/// Coprime pairs whose cusp has the given δ-invariant (genus).
pub fn pairs_with_genus(genus: i64) -> Vec<(i64, i64)> {
    if genus < 1 {
        return Vec::new();
    }
    pairs_with_double_genus(2 * genus)
}

/// Unordered pairs of one-Puiseux-pair cusps whose δ-invariants sum to
/// `(d-1)(d-2)/2`: the two-cusp candidates of degree `d`. Deterministic
/// order: by first-cusp genus, then lexicographically.
pub fn enumerate_two_cusp(d: i64) -> Vec<[(i64, i64); 2]> {
    assert!(d >= 3);
    let total = (d - 1) * (d - 2) / 2;
    let mut out = Vec::new();
    for g1 in 1..=total / 2 {
        let g2 = total - g1;
        for &a in &pairs_with_genus(g1) {
            for &b in &pairs_with_genus(g2) {
                if g1 == g2 && a > b {
                    continue;
                }
                out.push([a, b]);
            }
        }
    }
    out
}

/// The six known families of one-Puiseux-pair unicuspidal rational plane
/// curves; everything outside them is unexpected and worth a manual look.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `(p, q) = (d-1, d)`.
    A,
    /// `(p, q) = (d/2, 2d-1)`, `d` even.
    B,
    /// `(p, q) = (φ_{j-2}^2, φ_j^2)`, `d = φ_{j-1}^2 + 1`, odd `j >= 5`
    /// (Fibonacci numbers `φ_1 = φ_2 = 1`).
    C,
    /// `(p, q) = (φ_{j-2}, φ_{j+2})`, `d = φ_j`, odd `j >= 5`.
    D,
    /// `(p, q) = (3, 22)` at `d = 8`.
    E,
    /// `(p, q) = (6, 43)` at `d = 16`.
    F,
}

impl Family {
    pub fn label(&self) -> char {
        match self {
            Self::A => 'a',
            Self::B => 'b',
            Self::C => 'c',
            Self::D => 'd',
            Self::E => 'e',
            Self::F => 'f',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Which classification family, if any, the cusp `(p; q)` at degree `d`
/// belongs to.
pub fn family_of(d: i64, p: i64, q: i64) -> Option<Family> {
    if p == d - 1 && q == d {
        return Some(Family::A);
    }
    if d % 2 == 0 && p == d / 2 && q == 2 * d - 1 {
        return Some(Family::B);
    }
    if (d, p, q) == (8, 3, 22) {
        return Some(Family::E);
    }
    if (d, p, q) == (16, 6, 43) {
        return Some(Family::F);
    }
    // Fibonacci families: φ_{j-2}, ..., φ_{j+2} around odd j >= 5
    let mut fibs = alloc::vec![1i64, 1];
    while *fibs.last().unwrap() <= q.max(d) {
        let n = fibs.len();
        fibs.push(fibs[n - 1] + fibs[n - 2]);
    }
    let phi = |j: usize| fibs.get(j - 1).copied();
    for j in (5..fibs.len()).step_by(2) {
        let (Some(lo), Some(mid), Some(hi)) = (phi(j - 2), phi(j - 1), phi(j)) else {
            break;
        };
        if p == lo * lo && q == hi * hi && d == mid * mid + 1 {
            return Some(Family::C);
        }
        if let Some(top) = phi(j + 2) {
            if p == lo && q == top && d == phi(j).unwrap() {
                return Some(Family::D);
            }
        }
    }
    None
}
