//! Staircase complexes of L-space knots.
//!
//! From the L-space normal form `Δ = sum_i (-1)^i t^{n_i}` the knot Floer
//! complex `CFK^∞` is a staircase: generators `x_0, ..., x_k` in Maslov
//! grading 0 with `∂x_i = 0`, and `y_0, ..., y_{k-1}` in grading 1 with
//! `∂y_i = x_i + x_{i+1}`. Each generator is recorded by its (algebraic,
//! Alexander) filtration pair `(i, j)`; the `U`-action translates a vertex
//! to `(i-1, j-1)` and drops the Maslov grading by 2.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::alexander::{
    alexander_from_semigroup, lspace_normal_form, symmetrize, AlexanderError,
};
use crate::laurent::LaurentPoly;
use crate::semigroup::NumericalSemigroup;

/// A staircase complex; fields are raw model data, see [`StaircaseComplex::diagnostics`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseComplex {
    /// Step sequence `m_0, ..., m_{2k}`.
    pub m: Vec<i64>,
    /// Grading-0 cycle vertices `x_i = (m_{2k-2i}, m_{2i})`.
    pub x: Vec<(i64, i64)>,
    /// Grading-1 vertices `y_i = (m_{2k-2i-1}, m_{2i+1})`.
    pub y: Vec<(i64, i64)>,
    /// Seifert genus; equals the top Alexander exponent `n_0`.
    pub genus: i64,
}

/// A violated staircase invariant, by index where applicable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StaircaseDefect {
    /// Lengths are not `(2k+1, k+1, k)` for any `k >= 0`.
    CountMismatch,
    /// `m_0 != 0` or `m_{2k} != genus`.
    EndpointWrong,
    /// The step sequence decreases somewhere.
    NotMonotone,
    /// `x_i` is not at `(m_{2k-2i}, m_{2i})`.
    XPlacement(usize),
    /// `y_i` is not at `(m_{2k-2i-1}, m_{2i+1})`.
    YPlacement(usize),
    /// `y_i` does not dominate `x_i` and `x_{i+1}` in both coordinates,
    /// so `∂y_i = x_i + x_{i+1}` would not respect the filtration.
    DominationFailure(usize),
    /// The vertex sets are not closed under swapping coordinates.
    NotSymmetric,
}

impl fmt::Display for StaircaseDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::CountMismatch => write!(f, "vertex counts are not (2k+1, k+1, k)"),
            Self::EndpointWrong => write!(f, "step sequence does not run from 0 to the genus"),
            Self::NotMonotone => write!(f, "step sequence is not nondecreasing"),
            Self::XPlacement(i) => write!(f, "x_{i} is misplaced"),
            Self::YPlacement(i) => write!(f, "y_{i} is misplaced"),
            Self::DominationFailure(i) => write!(f, "y_{i} does not dominate its neighbors"),
            Self::NotSymmetric => write!(f, "vertex sets are not symmetric under coordinate swap"),
        }
    }
}

impl StaircaseComplex {
    /// Builds the staircase from the strictly decreasing exponent sequence
    /// `n_0 > ... > n_{2k}` of an L-space normal form:
    /// `m_0 = 0`, `m_{2i+1} = m_{2i} + (n_{2i} - n_{2i+1})`, `m_{2i} = m_{2i-1}`.
    pub fn from_exponents(exps: &[i64]) -> Self {
        debug_assert!(exps.len() % 2 == 1 && !exps.is_empty());
        debug_assert!(exps.windows(2).all(|w| w[0] > w[1]));
        let len = exps.len();
        let k = (len - 1) / 2;
        let mut m = vec![0i64; len];
        for j in 1..len {
            m[j] = if j % 2 == 1 {
                m[j - 1] + exps[j - 1] - exps[j]
            } else {
                m[j - 1]
            };
        }
        let x = (0..=k).map(|i| (m[2 * k - 2 * i], m[2 * i])).collect();
        let y = (0..k).map(|i| (m[2 * k - 2 * i - 1], m[2 * i + 1])).collect();
        Self {
            m,
            x,
            y,
            genus: exps[0],
        }
    }

    /// Staircase of the L-space knot with the given symmetric Alexander
    /// polynomial.
    pub fn from_alexander(p: &LaurentPoly) -> Result<Self, AlexanderError> {
        Ok(Self::from_exponents(&lspace_normal_form(p)?))
    }

    /// Staircase of the algebraic knot with the given semigroup.
    pub fn from_semigroup(s: &NumericalSemigroup) -> Result<Self, AlexanderError> {
        Self::from_alexander(&symmetrize(&alexander_from_semigroup(s)?)?)
    }

    pub fn k(&self) -> usize {
        self.y.len()
    }

    pub fn is_valid(&self) -> bool {
        self.diagnostics().is_empty()
    }

    /// Every violated invariant; empty exactly when the data is a genuine
    /// staircase.
    pub fn diagnostics(&self) -> Vec<StaircaseDefect> {
        let mut out = Vec::new();
        let len = self.m.len();
        if len.is_multiple_of(2) {
            out.push(StaircaseDefect::CountMismatch);
            return out;
        }
        let k = (len - 1) / 2;
        if self.x.len() != k + 1 || self.y.len() != k {
            out.push(StaircaseDefect::CountMismatch);
            return out;
        }
        if self.m[0] != 0 || self.m[2 * k] != self.genus {
            out.push(StaircaseDefect::EndpointWrong);
        }
        if self.m.windows(2).any(|w| w[0] > w[1]) {
            out.push(StaircaseDefect::NotMonotone);
        }
        for i in 0..=k {
            if self.x[i] != (self.m[2 * k - 2 * i], self.m[2 * i]) {
                out.push(StaircaseDefect::XPlacement(i));
            }
        }
        for i in 0..k {
            if self.y[i] != (self.m[2 * k - 2 * i - 1], self.m[2 * i + 1]) {
                out.push(StaircaseDefect::YPlacement(i));
            }
            let (a, b) = (self.x[i], self.x[i + 1]);
            let yi = self.y[i];
            if !(yi.0 >= a.0 && yi.1 >= a.1 && yi.0 >= b.0 && yi.1 >= b.1) {
                out.push(StaircaseDefect::DominationFailure(i));
            }
        }
        let swapped_closed = |vs: &[(i64, i64)]| {
            vs.iter().all(|&(a, b)| vs.contains(&(b, a)))
        };
        if !swapped_closed(&self.x) || !swapped_closed(&self.y) {
            out.push(StaircaseDefect::NotSymmetric);
        }
        out
    }
}
