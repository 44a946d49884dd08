//! Candidate enumeration and parallel evaluation for the `search`
//! subcommand. Enumeration order is deterministic; evaluation is pure per
//! candidate; rayon's indexed collect keeps the output in enumeration
//! order, so sharding a degree range and concatenating the shard results
//! reproduces the single-range run byte for byte.

use cuspidal::classify::{enumerate_single_pair, enumerate_two_cusp, family_of, Family};
use cuspidal::obstruction::{bl_check, flmn_check, BlRecord};
use cuspidal::{CharacteristicSequence, CurveConfiguration};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub degree: i64,
    pub pairs: Vec<(i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub candidate: Candidate,
    pub bl_pass: bool,
    pub first_fail: Option<BlRecord>,
    /// Known-family membership; meaningful for single-cusp candidates only.
    pub family: Option<Family>,
    /// Present when the run was asked to evaluate the conjecture rows.
    pub flmn_satisfied: Option<bool>,
}

impl SearchResult {
    /// A pass that the classification does not predict; worth a manual look.
    pub fn needs_review(&self) -> bool {
        self.bl_pass && self.candidate.pairs.len() == 1 && self.family.is_none()
    }
}

/// All candidates of the degree range, grouped by degree, in ascending
/// lexicographic order within each degree.
pub fn enumerate(degrees: impl IntoIterator<Item = i64>, cusps: u8) -> Vec<Candidate> {
    let mut out = Vec::new();
    for d in degrees {
        match cusps {
            1 => out.extend(enumerate_single_pair(d).into_iter().map(|pq| Candidate {
                degree: d,
                pairs: vec![pq],
            })),
            2 => out.extend(enumerate_two_cusp(d).into_iter().map(|pqs| Candidate {
                degree: d,
                pairs: pqs.to_vec(),
            })),
            _ => unreachable!("validated by the caller"),
        }
    }
    out
}

pub fn evaluate(c: &Candidate, with_flmn: bool) -> SearchResult {
    let cusps = c
        .pairs
        .iter()
        .map(|&(p, q)| CharacteristicSequence::pair(p, q).expect("enumerated pairs are coprime"))
        .collect();
    let cfg = CurveConfiguration::new(c.degree, cusps).expect("enumerated candidates are valid");
    let bl = bl_check(&cfg).expect("enumerated candidates satisfy the genus formula");
    let first_fail = bl.iter().find(|r| !r.pass()).cloned();
    let family = match c.pairs[..] {
        [(p, q)] => family_of(c.degree, p, q),
        _ => None,
    };
    SearchResult {
        candidate: c.clone(),
        bl_pass: first_fail.is_none(),
        first_fail,
        family,
        flmn_satisfied: with_flmn.then(|| {
            flmn_check(&cfg)
                .expect("enumerated candidates satisfy the genus formula")
                .iter()
                .all(|r| r.pass())
        }),
    }
}

pub fn run(
    degrees: impl IntoIterator<Item = i64>,
    cusps: u8,
    with_flmn: bool,
) -> Vec<SearchResult> {
    enumerate(degrees, cusps)
        .into_par_iter()
        .map(|c| evaluate(&c, with_flmn))
        .collect()
}
