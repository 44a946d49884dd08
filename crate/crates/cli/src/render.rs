//! Text and JSON rendering. JSON objects go through `serde_json::Value`,
//! whose map is a BTreeMap, so keys always serialize sorted and identical
//! invocations are byte-identical. Exact rationals and big integers are
//! rendered as canonical decimal strings ("0", "10/9") rather than JSON
//! numbers, which cannot hold them.

use std::fmt::Write as _;

use cuspidal::obstruction::{BlRecord, DInvariantRecord, FlmnRecord};
use cuspidal::{
    CharacteristicSequence, LaurentPoly, NumericalSemigroup, ObstructionReport, StaircaseComplex,
    VFunction, Verdict,
};
use serde_json::{json, Value};

use crate::search::SearchResult;

pub fn seq_value(seq: &CharacteristicSequence) -> Value {
    let mut arr = vec![seq.p()];
    arr.extend_from_slice(seq.qs());
    json!(arr)
}

pub fn semigroup_value(s: &NumericalSemigroup) -> Value {
    json!({
        "gaps": s.gaps(),
        "genus": s.genus(),
        "conductor": s.conductor(),
    })
}

pub fn semigroup_text(s: &NumericalSemigroup) -> String {
    format!(
        "gaps: {}\ngenus: {}\nconductor: {}\n",
        join(s.gaps()),
        s.genus(),
        s.conductor()
    )
}

pub fn poly_value(p: &LaurentPoly) -> Value {
    // [exponent, coefficient] pairs, ascending in the exponent
    Value::Array(
        p.terms()
            .map(|(e, c)| {
                let coeff = match i64::try_from(c) {
                    Ok(n) => json!(n),
                    Err(_) => json!(c.to_string()),
                };
                json!([e, coeff])
            })
            .collect(),
    )
}

pub fn staircase_value(st: &StaircaseComplex) -> Value {
    json!({
        "m": st.m,
        "x": st.x.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
        "y": st.y.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
        "genus": st.genus,
    })
}

pub fn staircase_text(st: &StaircaseComplex) -> String {
    let fmt_pts = |pts: &[(i64, i64)]| {
        pts.iter()
            .map(|&(i, j)| format!("({i},{j})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!(
        "m: {}\nx: {}\ny: {}\ngenus: {}\n",
        join(&st.m),
        fmt_pts(&st.x),
        fmt_pts(&st.y),
        st.genus
    )
}

/// The serialized window runs from -conductor to genus; outside it the
/// closed forms V_m = -m (left) and V_m = 0 (right) take over.
pub fn vfunction_value(v: &VFunction) -> Value {
    let window: Vec<i64> = (-v.conductor()..=v.genus()).map(|m| v.eval(m)).collect();
    json!({
        "genus": v.genus(),
        "window_start": -v.conductor(),
        "values": window,
    })
}

pub fn vfunction_text(v: &VFunction) -> String {
    let window: Vec<i64> = (-v.conductor()..=v.genus()).map(|m| v.eval(m)).collect();
    format!(
        "genus: {}\nwindow_start: {}\nvalues: {}\n",
        v.genus(),
        -v.conductor(),
        join(&window)
    )
}

fn bl_row_value(r: &BlRecord) -> Value {
    json!({
        "j": r.j,
        "required": r.required,
        "computed": r.computed,
        "pass": r.pass(),
    })
}

fn d_row_value(r: &DInvariantRecord) -> Value {
    json!({
        "j": r.j,
        "m": r.m,
        "d": r.value.to_string(),
    })
}

fn flmn_row_value(r: &FlmnRecord) -> Value {
    json!({
        "j": r.j,
        "c": r.c.to_string(),
        "bound": r.bound,
        "pass": r.pass(),
    })
}

pub fn report_value(r: &ObstructionReport) -> Value {
    json!({
        "degree": r.degree,
        "cusps": r.cusps.iter().map(seq_value).collect::<Vec<_>>(),
        "genus_residual": r.genus_residual,
        "bl": r.bl.as_ref().map(|rows| json!({
            "verdict": r.bl_verdict().expect("rows are present").to_string(),
            "rows": rows.iter().map(bl_row_value).collect::<Vec<_>>(),
        })),
        "d_invariants": r.d_invariants.as_ref().map(|rows| json!({
            "all_zero": r.d_all_zero().expect("rows are present"),
            "rows": rows.iter().map(d_row_value).collect::<Vec<_>>(),
        })),
        "flmn": r.flmn.as_ref().map(|rows| json!({
            "satisfied": r.flmn_satisfied().expect("rows are present"),
            "rows": rows.iter().map(flmn_row_value).collect::<Vec<_>>(),
        })),
        "verdict": r.verdict().to_string(),
    })
}

pub fn report_text(r: &ObstructionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "degree: {}", r.degree);
    let cusps = r
        .cusps
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let _ = writeln!(out, "cusps: {cusps}");
    let _ = writeln!(out, "genus residual: {}", r.genus_residual);
    match (&r.bl, r.bl_verdict()) {
        (Some(rows), Some(v)) => {
            let _ = writeln!(out, "bl check: {v}");
            for row in rows {
                let _ = writeln!(
                    out,
                    "  j={} required={} computed={} {}",
                    row.j,
                    row.required,
                    row.computed,
                    if row.pass() { "ok" } else { "FAIL" }
                );
            }
        }
        _ => {
            let _ = writeln!(out, "bl check: skipped (genus formula violated)");
        }
    }
    match (&r.d_invariants, r.d_all_zero()) {
        (Some(rows), Some(all_zero)) => {
            let _ = writeln!(
                out,
                "d-invariant cross-check: {}",
                if all_zero { "all zero" } else { "NONZERO" }
            );
            for row in rows {
                let _ = writeln!(out, "  j={} m={} d={}", row.j, row.m, row.value);
            }
        }
        _ => {
            let _ = writeln!(out, "d-invariant cross-check: skipped (genus formula violated)");
        }
    }
    match (&r.flmn, r.flmn_satisfied()) {
        (Some(rows), Some(ok)) => {
            let _ = writeln!(out, "flmn coefficients: {}", if ok { "ok" } else { "VIOLATED" });
            for row in rows {
                let _ = writeln!(
                    out,
                    "  j={} c={} bound={} {}",
                    row.j,
                    row.c,
                    row.bound,
                    if row.pass() { "ok" } else { "VIOLATED" }
                );
            }
        }
        _ => {
            let _ = writeln!(out, "flmn coefficients: skipped (genus formula violated)");
        }
    }
    let _ = writeln!(out, "verdict: {}", r.verdict());
    out
}

pub fn flmn_value(rows: &[FlmnRecord]) -> Value {
    json!({
        "rows": rows.iter().map(flmn_row_value).collect::<Vec<_>>(),
        "satisfied": rows.iter().all(FlmnRecord::pass),
    })
}

pub fn flmn_text(rows: &[FlmnRecord]) -> String {
    let mut out = String::new();
    for row in rows {
        let _ = writeln!(
            out,
            "j={} c={} bound={} {}",
            row.j,
            row.c,
            row.bound,
            if row.pass() { "ok" } else { "VIOLATED" }
        );
    }
    let _ = writeln!(out, "satisfied: {}", rows.iter().all(FlmnRecord::pass));
    out
}

fn search_row_value(r: &SearchResult) -> Value {
    json!({
        "degree": r.candidate.degree,
        "cusps": r.candidate.pairs.iter().map(|&(p, q)| json!([p, q])).collect::<Vec<_>>(),
        "verdict": if r.bl_pass { Verdict::Pass } else { Verdict::Fail }.to_string(),
        "family": r.family.map(|f| f.to_string()),
        "first_fail": r.first_fail.as_ref().map(bl_row_value),
        "flmn_satisfied": r.flmn_satisfied,
    })
}

pub fn search_value(results: &[SearchResult], cusps: u8) -> Value {
    let pass = results.iter().filter(|r| r.bl_pass).count();
    json!({
        "cusps_per_candidate": cusps,
        "candidates": results.iter().map(search_row_value).collect::<Vec<_>>(),
        "review": results
            .iter()
            .filter(|r| r.needs_review())
            .map(search_row_value)
            .collect::<Vec<_>>(),
        "summary": {
            "candidates": results.len(),
            "pass": pass,
            "fail": results.len() - pass,
        },
    })
}

pub fn search_text(results: &[SearchResult]) -> String {
    let mut out = String::new();
    for r in results {
        let cusps = r
            .candidate
            .pairs
            .iter()
            .map(|&(p, q)| format!("({p},{q})"))
            .collect::<Vec<_>>()
            .join("+");
        let _ = write!(out, "degree {} {}: ", r.candidate.degree, cusps);
        if r.bl_pass {
            let _ = write!(out, "pass");
            match (r.candidate.pairs.len(), r.family) {
                (1, Some(f)) => {
                    let _ = write!(out, " [family {f}]");
                }
                (1, None) => {
                    let _ = write!(out, " [NOT IN KNOWN FAMILIES - review]");
                }
                _ => {}
            }
        } else {
            let f = r.first_fail.as_ref().expect("failing run has a first fail");
            let _ = write!(
                out,
                "FAIL at j={} (computed {}, required {})",
                f.j, f.computed, f.required
            );
        }
        match r.flmn_satisfied {
            Some(true) => {
                let _ = write!(out, " flmn=ok");
            }
            Some(false) => {
                let _ = write!(out, " flmn=VIOLATED");
            }
            None => {}
        }
        out.push('\n');
    }
    let pass = results.iter().filter(|r| r.bl_pass).count();
    let review = results.iter().filter(|r| r.needs_review()).count();
    let _ = write!(
        out,
        "summary: {} candidates, {} pass, {} fail",
        results.len(),
        pass,
        results.len() - pass
    );
    if review > 0 {
        let _ = write!(out, ", {review} passes outside known families");
    }
    out.push('\n');
    out
}

fn join(xs: &[i64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
