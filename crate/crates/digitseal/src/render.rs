//! Output formats: text, JSON, CSV and DOT. Every polynomial is printed in
//! the canonical human form and as a lowest-degree-first coefficient list;
//! both re-parse to the same coefficients.

use std::fmt::Write as _;

use serde_json::{json, Value};

use digitseal_core::classify::{ClassRecord, Decision, Membership};
use digitseal_core::poly::format_coeff_list;
use digitseal_core::search::{DigitSet, GraphDocument, Verdict};
use digitseal_core::IntPoly;

use crate::input::digit_string;
use crate::sweep::{Listing, TableReport};
use crate::CliError;

/// Coefficients lowest degree first; numbers when they fit in 64 bits.
pub fn coeffs_json(p: &IntPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| match i64::try_from(c) {
                Ok(v) => json!(v),
                Err(_) => json!(c.to_string()),
            })
            .collect(),
    )
}

pub fn poly_json(p: &IntPoly) -> Value {
    json!({ "poly": p.to_string(), "coeffs": coeffs_json(p), "degree": p.deg() })
}

pub fn verdict_label(v: &Verdict) -> &'static str {
    match v {
        Verdict::Found { .. } => "found",
        Verdict::NoMultiple { .. } => "no_multiple",
        Verdict::Inconclusive { .. } => "inconclusive",
    }
}

pub fn verdict_json(p: &IntPoly, digits: &DigitSet, negated: bool, v: &Verdict) -> Value {
    let mut out = json!({
        "poly": p.to_string(),
        "coeffs": coeffs_json(p),
        "digits": digits.digits(),
        "negated_input": negated,
        "verdict": verdict_label(v),
        "exit_code": v.exit_code(),
        "nodes_explored": v.nodes_explored(),
    });
    let obj = out.as_object_mut().expect("object");
    match v {
        Verdict::Found { witness, leading_digit, degree, delta, .. } => {
            obj.insert(
                "witness".into(),
                json!({
                    "poly": witness.to_string(),
                    "coeffs": coeffs_json(witness),
                    "digit_string": digit_string(witness),
                    "degree": degree,
                    "leading_digit": leading_digit,
                    "delta": delta,
                }),
            );
        }
        Verdict::NoMultiple { max_depth, .. } => {
            obj.insert("max_depth".into(), json!(max_depth));
        }
        Verdict::Inconclusive { reason, .. } => {
            obj.insert("reason".into(), json!(reason.as_str()));
        }
    }
    out
}

pub fn verdict_text(p: &IntPoly, digits: &DigitSet, negated: bool, v: &Verdict) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polynomial: {p}");
    if negated {
        let _ = writeln!(s, "note: input negated to make it monic");
    }
    let _ = writeln!(s, "digits: {:?}", digits.digits());
    let _ = writeln!(s, "verdict: {}", verdict_label(v));
    match v {
        Verdict::Found { witness, leading_digit, degree, nodes_explored, delta } => {
            let _ = writeln!(s, "witness: {witness}");
            let _ = writeln!(s, "witness coefficients: {}", format_coeff_list(witness));
            let _ = writeln!(s, "digit string: {}", digit_string(witness));
            let _ = writeln!(s, "degree: {degree}, leading digit: {leading_digit}, delta: {delta:.2}");
            let _ = writeln!(s, "nodes explored: {nodes_explored}");
        }
        Verdict::NoMultiple { nodes_explored, max_depth } => {
            let _ = writeln!(s, "nodes explored: {nodes_explored}, max depth: {max_depth}");
        }
        Verdict::Inconclusive { reason, nodes_explored } => {
            let _ = writeln!(s, "reason: {}", reason.as_str());
            let _ = writeln!(s, "nodes explored: {nodes_explored}");
        }
    }
    s
}

fn vertex_label(r: &IntPoly) -> String {
    format_coeff_list(r)
}

pub fn graph_json(g: &GraphDocument, digits: &DigitSet) -> Value {
    json!({
        "modulus": g.modulus.to_string(),
        "digits": digits.digits(),
        "vertices": g.vertices.iter().map(vertex_label).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| json!({"from": e.from, "to": e.to, "digit": e.digit})).collect::<Vec<_>>(),
        "truncated": g.truncated,
        "precision_tainted": g.precision_tainted,
        "reaches_zero": g.reaches_zero(),
        "stats": { "nodes": g.vertices.len(), "edges": g.edges.len(), "max_depth": g.max_depth },
    })
}

pub fn graph_dot(g: &GraphDocument) -> String {
    let mut s = String::from("digraph remainders {\n");
    let _ = writeln!(s, "  // modulus {}; truncated: {}", g.modulus, g.truncated);
    for (i, v) in g.vertices.iter().enumerate() {
        let _ = writeln!(s, "  n{i} [label=\"{}\"];", vertex_label(v));
    }
    for e in &g.edges {
        let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.digit);
    }
    s.push_str("}\n");
    s
}

fn decision_json(d: &Option<Decision>) -> Value {
    match d {
        None => Value::Null,
        Some(d) => {
            let mut v = json!({
                "answer": d.membership.as_str(),
                "nodes": d.nodes,
                "note": d.note.as_ref().map(|n| n.label()),
            });
            let obj = v.as_object_mut().expect("object");
            if let Membership::Unknown(r) = d.membership {
                obj.insert("reason".into(), json!(r.as_str()));
            }
            if let Some(digitseal_core::classify::Note::Factor(f)) = &d.note {
                obj.insert("factor".into(), json!(f.to_string()));
            }
            if let Some(w) = &d.witness {
                obj.insert("witness".into(), json!({"poly": w.to_string(), "degree": w.deg()}));
            }
            v
        }
    }
}

pub fn record_json(r: &ClassRecord) -> Value {
    json!({
        "poly": r.poly.to_string(),
        "coeffs": coeffs_json(&r.poly),
        "noncyclotomic": r.noncyclo.to_string(),
        "cyclotomic": r.cyclotomic.iter().map(|(n, e)| json!({"n": n, "multiplicity": e})).collect::<Vec<_>>(),
        "factors": r.factors.iter().map(|(f, e)| json!({"poly": f.to_string(), "multiplicity": e})).collect::<Vec<_>>(),
        "structure": r.structure.map(|s| s.as_str()),
        "littlewood": decision_json(&r.in_l),
        "newman": decision_json(&r.in_n),
        "mahler": r.mahler,
    })
}

fn answer(d: &Option<Decision>) -> &'static str {
    d.as_ref().map_or("-", |d| d.membership.as_str())
}

pub fn record_text(r: &ClassRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polynomial: {}", r.poly);
    let _ = writeln!(s, "noncyclotomic part: {}", r.noncyclo);
    if !r.cyclotomic.is_empty() {
        let parts: Vec<String> = r
            .cyclotomic
            .iter()
            .map(|(n, e)| if *e == 1 { format!("Phi_{n}") } else { format!("Phi_{n}^{e}") })
            .collect();
        let _ = writeln!(s, "cyclotomic factors: {}", parts.join(" "));
    }
    let _ = writeln!(s, "structure: {}", r.structure.map_or("other", |x| x.as_str()));
    for (name, d) in [("littlewood multiple", &r.in_l), ("newman multiple", &r.in_n)] {
        if let Some(dd) = d {
            let mut line = format!("{name}: {}", answer(d));
            if let Some(n) = &dd.note {
                line.push_str(&format!(" ({})", n.label()));
            }
            if let Some(w) = &dd.witness {
                line.push_str(&format!(", witness of degree {}", w.deg()));
            }
            let _ = writeln!(s, "{line}");
        }
    }
    if let Some(m) = r.mahler {
        let _ = writeln!(s, "mahler measure: {m:.9}");
    }
    s
}

pub fn records_csv(records: &[ClassRecord]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["poly", "coeffs", "noncyclotomic", "structure", "littlewood", "newman", "mahler"])?;
    for r in records {
        w.write_record([
            r.poly.to_string(),
            format_coeff_list(&r.poly),
            r.noncyclo.to_string(),
            r.structure.map_or("other", |x| x.as_str()).to_string(),
            answer(&r.in_l).to_string(),
            answer(&r.in_n).to_string(),
            r.mahler.map_or(String::new(), |m| format!("{m:.9}")),
        ])?;
    }
    finish_csv(w)
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn listing_json(l: &Listing) -> Value {
    json!({
        "name": l.name,
        "description": l.description,
        "count": l.entries.len(),
        "entries": l.entries.iter().map(|e| json!({
            "poly": e.poly.to_string(),
            "coeffs": coeffs_json(&e.poly),
            "reciprocal_of": e.reciprocal_of.as_ref().map(|r| r.to_string()),
            "mahler": e.mahler,
        })).collect::<Vec<_>>(),
    })
}

pub fn tables_json(t: &TableReport) -> Value {
    json!({
        "family": t.family.name(),
        "exact": t.is_exact(),
        "undecided": t.undecided.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "counts": t.counts.iter().map(|r| json!({
            "degree": r.degree,
            "total": r.total,
            "l_not_n": r.l_not_n,
            "n_not_l": r.n_not_l,
            "l_and_n": r.l_and_n,
            "not_l": r.not_l(),
            "not_n": r.not_n(),
            "not_l_or_n": r.not_l_or_n(),
            "neither": r.neither,
            "undecided": r.undecided,
        })).collect::<Vec<_>>(),
        "partition": t.partition.iter().map(|r| json!({
            "degree": r.degree, "total": r.total, "c": r.c, "f1": r.f1, "f2": r.f2, "m": r.m, "other": r.other,
        })).collect::<Vec<_>>(),
        "littlewood": t.littlewood.iter().map(|r| json!({
            "degree": r.degree, "total": r.total, "in_l": r.in_l, "not_l": r.not_l, "undecided": r.undecided,
        })).collect::<Vec<_>>(),
        "listings": t.listings.iter().map(listing_json).collect::<Vec<_>>(),
    })
}

/// Count tables as CSV (one file's worth): the decomposition counts and the
/// derived difference columns side by side, or the Newman-family summary.
pub fn counts_csv(t: &TableReport) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if t.counts.is_empty() {
        w.write_record(["degree", "total", "in_l", "not_l", "undecided"])?;
        for r in &t.littlewood {
            w.write_record([r.degree, r.total, r.in_l, r.not_l, r.undecided].map(|x| x.to_string()))?;
        }
    } else {
        w.write_record([
            "degree", "total", "l_not_n", "n_not_l", "l_and_n", "not_l", "not_n", "not_l_or_n", "undecided",
        ])?;
        for r in &t.counts {
            w.write_record(
                [r.degree, r.total, r.l_not_n, r.n_not_l, r.l_and_n, r.not_l(), r.not_n(), r.not_l_or_n(), r.undecided]
                    .map(|x| x.to_string()),
            )?;
        }
    }
    finish_csv(w)
}

pub fn partition_csv(t: &TableReport) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["degree", "total", "c", "f1", "f2", "m", "other"])?;
    for r in &t.partition {
        w.write_record([r.degree, r.total, r.c, r.f1, r.f2, r.m, r.other].map(|x| x.to_string()))?;
    }
    finish_csv(w)
}

pub fn listing_csv(l: &Listing) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["poly", "coeffs", "reciprocal_of", "mahler"])?;
    for e in &l.entries {
        w.write_record([
            e.poly.to_string(),
            format_coeff_list(&e.poly),
            e.reciprocal_of.as_ref().map_or(String::new(), |r| r.to_string()),
            e.mahler.map_or(String::new(), |m| format!("{m:.9}")),
        ])?;
    }
    finish_csv(w)
}

pub fn tables_text(t: &TableReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "family: {}", t.family.name());
    if !t.counts.is_empty() {
        let _ = writeln!(s, "\n{:>3} {:>8} {:>8} {:>8} {:>8}", "d", "L\\N", "N\\L", "L&N", "undec");
        for r in &t.counts {
            let _ = writeln!(s, "{:>3} {:>8} {:>8} {:>8} {:>8}", r.degree, r.l_not_n, r.n_not_l, r.l_and_n, r.undecided);
        }
        let _ = writeln!(s, "\n{:>3} {:>8} {:>8} {:>8}", "d", "B\\L", "B\\N", "B\\(LuN)");
        for r in &t.counts {
            let _ = writeln!(s, "{:>3} {:>8} {:>8} {:>8}", r.degree, r.not_l(), r.not_n(), r.not_l_or_n());
        }
    }
    if !t.partition.is_empty() {
        let _ = writeln!(s, "\n{:>3} {:>8} {:>6} {:>8} {:>6} {:>4}", "d", "#B", "#C", "#F1", "#F2", "#M");
        for r in &t.partition {
            let _ = writeln!(s, "{:>3} {:>8} {:>6} {:>8} {:>6} {:>4}", r.degree, r.total, r.c, r.f1, r.f2, r.m);
        }
    }
    if !t.littlewood.is_empty() {
        let _ = writeln!(s, "\n{:>3} {:>8} {:>8} {:>8} {:>8}", "d", "total", "in L", "not L", "undec");
        for r in &t.littlewood {
            let _ = writeln!(s, "{:>3} {:>8} {:>8} {:>8} {:>8}", r.degree, r.total, r.in_l, r.not_l, r.undecided);
        }
    }
    for l in &t.listings {
        let _ = writeln!(s, "\n{} ({}): {}", l.name, l.description, l.entries.len());
        for e in &l.entries {
            let mut line = format!("  {}", e.poly);
            if let Some(m) = e.mahler {
                line.push_str(&format!("  M = {m:.9}"));
            }
            if let Some(r) = &e.reciprocal_of {
                line.push_str(&format!("  (reciprocal of {r})"));
            }
            let _ = writeln!(s, "{line}");
        }
    }
    if !t.is_exact() {
        let _ = writeln!(s, "\nINCONCLUSIVE members ({}): counts above are not exact", t.undecided.len());
        for p in &t.undecided {
            let _ = writeln!(s, "  {p}");
        }
    }
    s
}
