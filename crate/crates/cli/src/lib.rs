//! Dispatcher behind the `cuspidal` binary.
//!
//! Split from `main.rs` so integration tests can drive the exact code path
//! the binary runs, capture output in memory, and check determinism.
//!
//! Error policy: anything traceable to user input maps to [`CliError::User`]
//! (exit code 2); violations of internal cross-checks — the two V-routes or
//! the bl/d-invariant equivalence disagreeing — map to [`CliError::Internal`]
//! (exit code 1), since they can only mean a bug in this program. Obstruction
//! verdicts are data, never exit codes.

use std::fmt;
use std::io::Write;
use std::path::Path;

pub mod args;
pub mod render;
pub mod search;

use args::{Cli, Cmd, ConfigArgs, FormatArgs, KnotArg, KnotArgs};
use cuspidal::staircase::StaircaseComplex;
use cuspidal::{
    alexander_from_semigroup, flmn_check, symmetrize, v_from_staircase, CharacteristicSequence,
    CurveConfiguration, NumericalSemigroup, ObstructionReport, SpinCIndex, VFunction, Verdict,
};
use serde_json::Value;

#[derive(Debug)]
pub enum CliError {
    /// Invalid flags, values, or input files; exit code 2.
    User(String),
    /// A violated internal invariant — a bug, not bad input; exit code 1.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::User(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::User(msg) => write!(f, "{msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

fn user(msg: impl fmt::Display) -> CliError {
    CliError::User(msg.to_string())
}

fn parse_int_list(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| user(format!("'{x}' is not an integer in '{s}'")))
        })
        .collect()
}

fn parse_cusp(s: &str) -> Result<CharacteristicSequence, CliError> {
    let nums = parse_int_list(s)?;
    let [p, qs @ ..] = &nums[..] else {
        return Err(user(format!("cusp '{s}' is empty")));
    };
    if qs.is_empty() {
        return Err(user(format!(
            "cusp '{s}' needs at least two entries p,q1"
        )));
    }
    CharacteristicSequence::new(*p, qs).map_err(|e| user(format!("invalid cusp '{s}': {e}")))
}

fn parse_generators(s: &str) -> Result<NumericalSemigroup, CliError> {
    let nums = parse_int_list(s)?;
    NumericalSemigroup::from_generators(&nums)
        .map_err(|e| user(format!("invalid generators '{s}': {e}")))
}

fn knot_semigroup(knot: &KnotArg) -> Result<NumericalSemigroup, CliError> {
    match (&knot.cusp, &knot.generators) {
        (Some(c), None) => Ok(NumericalSemigroup::from_char_sequence(&parse_cusp(c)?)),
        (None, Some(g)) => parse_generators(g),
        _ => unreachable!("clap group enforces exactly one"),
    }
}

/// All components in flag order: cusps first, then generator lists. The
/// consumers (V and d) are symmetric in the components, so the order is
/// cosmetic.
fn knots_semigroups(knots: &KnotArgs) -> Result<Vec<NumericalSemigroup>, CliError> {
    let mut out = Vec::new();
    for c in &knots.cusps {
        out.push(NumericalSemigroup::from_char_sequence(&parse_cusp(c)?));
    }
    for g in &knots.generators {
        out.push(parse_generators(g)?);
    }
    Ok(out)
}

fn load_config_file(path: &Path) -> Result<CurveConfiguration, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| user(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| user(format!("{} is not valid JSON: {e}", path.display())))?;
    let degree = value
        .get("degree")
        .and_then(Value::as_i64)
        .ok_or_else(|| user("config file needs an integer \"degree\""))?;
    let cusp_arrays = value
        .get("cusps")
        .and_then(Value::as_array)
        .ok_or_else(|| user("config file needs a \"cusps\" array"))?;
    let mut cusps = Vec::new();
    for entry in cusp_arrays {
        let nums: Vec<i64> = entry
            .as_array()
            .map(|xs| xs.iter().filter_map(Value::as_i64).collect())
            .ok_or_else(|| user("each cusp must be an integer array [p, q1, ...]"))?;
        let [p, qs @ ..] = &nums[..] else {
            return Err(user("each cusp must be an integer array [p, q1, ...]"));
        };
        if qs.is_empty() || nums.len() != entry.as_array().map_or(0, Vec::len) {
            return Err(user("each cusp must be an integer array [p, q1, ...]"));
        }
        cusps.push(
            CharacteristicSequence::new(*p, qs)
                .map_err(|e| user(format!("invalid cusp {entry}: {e}")))?,
        );
    }
    CurveConfiguration::new(degree, cusps).map_err(user)
}

fn build_config(cfg: &ConfigArgs) -> Result<CurveConfiguration, CliError> {
    if let Some(path) = &cfg.config {
        return load_config_file(path);
    }
    let degree = cfg
        .degree
        .ok_or_else(|| user("provide --config, or --degree together with --cusp"))?;
    if cfg.cusps.is_empty() {
        return Err(user("provide at least one --cusp"));
    }
    let cusps = cfg
        .cusps
        .iter()
        .map(|s| parse_cusp(s))
        .collect::<Result<Vec<_>, _>>()?;
    CurveConfiguration::new(degree, cusps).map_err(user)
}

fn emit(out: &mut impl Write, fmt: FormatArgs, value: Value, text: String) -> Result<(), CliError> {
    let payload = if fmt.is_json() {
        let mut s = serde_json::to_string(&value).expect("value contains no non-string keys");
        s.push('\n');
        s
    } else {
        text
    };
    out.write_all(payload.as_bytes())
        .map_err(|e| CliError::Internal(format!("cannot write output: {e}")))
}

pub fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Semigroup { knot, fmt } => {
            let s = knot_semigroup(&knot)?;
            emit(
                out,
                fmt,
                render::semigroup_value(&s),
                render::semigroup_text(&s),
            )
        }
        Cmd::Alexander {
            knot,
            symmetric,
            fmt,
        } => {
            let s = knot_semigroup(&knot)?;
            let mut poly = alexander_from_semigroup(&s).map_err(user)?;
            if symmetric {
                poly = symmetrize(&poly).map_err(|e| {
                    CliError::Internal(format!(
                        "normalized Alexander polynomial failed to symmetrize: {e}"
                    ))
                })?;
            }
            emit(out, fmt, render::poly_value(&poly), format!("{poly}\n"))
        }
        Cmd::Staircase { knot, fmt } => {
            let s = knot_semigroup(&knot)?;
            let st = StaircaseComplex::from_semigroup(&s).map_err(user)?;
            if !st.is_valid() {
                return Err(CliError::Internal(format!(
                    "constructed staircase violates its invariants: {:?}",
                    st.diagnostics()
                )));
            }
            emit(
                out,
                fmt,
                render::staircase_value(&st),
                render::staircase_text(&st),
            )
        }
        Cmd::V { knots, m, fmt } => {
            let semis = knots_semigroups(&knots)?;
            let components = semis
                .iter()
                .map(|s| VFunction::from_semigroup(s).map_err(user))
                .collect::<Result<Vec<_>, _>>()?;
            let v = VFunction::convolve_all(&components);
            match m {
                Some(m) => {
                    let val = v.eval(m);
                    if let [only] = &semis[..] {
                        // the staircase route must agree with the gap route
                        let st = StaircaseComplex::from_semigroup(only)
                            .expect("the component was accepted as symmetric");
                        if v_from_staircase(&st, m) != val {
                            return Err(CliError::Internal(format!(
                                "V_{m} differs between the gap and staircase routes"
                            )));
                        }
                    }
                    emit(out, fmt, Value::from(val), format!("{val}\n"))
                }
                None => emit(
                    out,
                    fmt,
                    render::vfunction_value(&v),
                    render::vfunction_text(&v),
                ),
            }
        }
        Cmd::D { knots, q, m, fmt } => {
            let semis = knots_semigroups(&knots)?;
            let components = semis
                .iter()
                .map(|s| VFunction::from_semigroup(s).map_err(user))
                .collect::<Result<Vec<_>, _>>()?;
            let v = VFunction::convolve_all(&components);
            let spinc = SpinCIndex::new(q, m).map_err(user)?;
            let d = cuspidal::d_large_surgery(spinc, &v).map_err(user)?;
            emit(out, fmt, Value::from(d.to_string()), format!("{d}\n"))
        }
        Cmd::Obstruct { cfg, fmt } => {
            let config = build_config(&cfg)?;
            let report = ObstructionReport::compute(&config);
            if let (Some(bl), Some(d_zero)) = (report.bl_verdict(), report.d_all_zero()) {
                if (bl == Verdict::Pass) != d_zero {
                    return Err(CliError::Internal(
                        "distribution criterion and d-invariant cross-check disagree".into(),
                    ));
                }
            }
            emit(
                out,
                fmt,
                render::report_value(&report),
                render::report_text(&report),
            )
        }
        Cmd::Flmn { cfg, fmt } => {
            let config = build_config(&cfg)?;
            let rows = flmn_check(&config).map_err(user)?;
            emit(out, fmt, render::flmn_value(&rows), render::flmn_text(&rows))
        }
        Cmd::Search {
            degree,
            max_degree,
            cusps,
            flmn,
            fmt,
        } => {
            if !(1..=2).contains(&cusps) {
                return Err(user(format!(
                    "unsupported cusp shape: {cusps} cusps (searchable: 1 or 2, \
                     one Puiseux pair each)"
                )));
            }
            if degree < 3 {
                return Err(user("search needs --degree >= 3"));
            }
            let hi = max_degree.unwrap_or(degree);
            if hi < degree {
                return Err(user("--max-degree must be >= --degree"));
            }
            let results = search::run(degree..=hi, cusps, flmn);
            emit(
                out,
                fmt,
                render::search_value(&results, cusps),
                render::search_text(&results),
            )
        }
    }
}
