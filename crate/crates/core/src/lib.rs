//! Exact invariants of cuspidal plane-curve singularities.
//!
//! The crate computes, in exact integer/rational arithmetic:
//!
//! * numerical semigroups of singular points, from generators or from a
//!   Puiseux characteristic sequence ([`semigroup`]);
//! * Alexander polynomials of algebraic knots and their L-space normal
//!   form ([`laurent`], [`alexander`]);
//! * staircase complexes of L-space knots ([`staircase`]);
//! * the `V_m` invariants and large-surgery `d`-invariants, with min-plus
//!   convolution for connected sums ([`invariants`]);
//! * the semigroup-distribution obstruction for rational cuspidal curves,
//!   the matching `d`-invariant cross-check, and the coefficient
//!   inequality on the quotient `Q` of the Alexander polynomial
//!   ([`obstruction`]);
//! * candidate enumeration and the known classification families for
//!   unicuspidal curves with one Puiseux pair ([`classify`]).
//!
//! Everything is `no_std` + `alloc`; IO, serialization and the command
//! line front end live in the companion `cuspidal-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alexander;
pub mod classify;
pub mod invariants;
pub mod laurent;
pub mod obstruction;
pub mod semigroup;
pub mod staircase;

pub use alexander::{alexander_from_semigroup, lspace_normal_form, symmetrize, torus_alexander};
pub use classify::{enumerate_single_pair, enumerate_two_cusp, family_of, pairs_with_genus, Family};
pub use invariants::{
    d_large_surgery, v_from_gaps, v_from_staircase, SpinCIndex, VFunction,
};
pub use laurent::LaurentPoly;
pub use obstruction::{
    bl_check, d_invariant_crosscheck, extendable_spinc, flmn_check, flmn_coefficients,
    genus_formula_residual, minplus_counting, CurveConfiguration, ObstructionReport, Verdict,
};
pub use semigroup::{CharacteristicSequence, NumericalSemigroup};
pub use staircase::StaircaseComplex;
