//! Deterministic report serialization: JSON objects with fixed field
//! order and CSV tables, every float printed with 12 significant digits
//! so identical inputs produce byte-identical files.

use crate::sizdc::SizdcReport;
use crate::verify::{BoundCheckReport, DecompositionReport, LittlewoodScan};
use std::fmt::Write as _;

/// 12 significant digits, normalized scientific notation.  Negative zero
/// collapses to zero; non-finite values print as inf/-inf/nan (quoted
/// when embedded in JSON).
pub fn fmt_sig12(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

enum Json {
    Num(f64),
    Int(i64),
    Str(String),
    Bool(bool),
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
}

impl Json {
    fn write(&self, out: &mut String) {
        match self {
            Json::Num(x) => {
                if x.is_finite() {
                    out.push_str(&fmt_sig12(*x));
                } else {
                    let _ = write!(out, "\"{}\"", fmt_sig12(*x));
                }
            }
            Json::Int(i) => {
                let _ = write!(out, "{i}");
            }
            Json::Str(s) => {
                out.push('"');
                for ch in s.chars() {
                    match ch {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        c if (c as u32) < 0x20 => {
                            let _ = write!(out, "\\u{:04x}", c as u32);
                        }
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    let _ = write!(out, "\"{key}\":");
                    value.write(out);
                }
                out.push('}');
            }
        }
    }

    fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out.push('\n');
        out
    }
}

fn complex(re: f64, im: f64) -> Json {
    Json::Obj(vec![("re", Json::Num(re)), ("im", Json::Num(im))])
}

fn named_terms(terms: &[(&'static str, f64)]) -> Json {
    Json::Arr(
        terms
            .iter()
            .map(|(name, value)| {
                Json::Obj(vec![
                    ("term", Json::Str((*name).into())),
                    ("value", Json::Num(*value)),
                ])
            })
            .collect(),
    )
}

pub fn decomposition_json(r: &DecompositionReport) -> String {
    Json::Obj(vec![
        ("kind", Json::Str("decomposition".into())),
        ("sigma", Json::Num(r.sigma)),
        ("t", Json::Num(r.t)),
        ("x", Json::Num(r.x)),
        ("a", Json::Num(r.a)),
        ("sigma_1", Json::Num(r.sigma_1)),
        ("case", Json::Str(r.case.name().into())),
        (
            "lhs_log_zeta",
            complex(r.lhs_log_zeta.re, r.lhs_log_zeta.im),
        ),
        ("near_zero_log_sum", Json::Num(r.near_zero_log_sum)),
        ("shifted_zero_terms", Json::Num(r.shifted_zero_terms)),
        (
            "dirichlet_term",
            complex(r.dirichlet_term.re, r.dirichlet_term.im),
        ),
        ("residual", complex(r.residual.re, r.residual.im)),
        ("y_bound", Json::Num(r.y_bound)),
        ("ratio", Json::Num(r.ratio)),
        ("eval_error", Json::Num(r.eval_error)),
        ("tau", Json::Int(r.quantities.tau as i64)),
        ("f_a", Json::Num(r.quantities.f_a)),
        ("g_a", Json::Num(r.quantities.g_a)),
        ("y_a", Json::Num(r.quantities.y_a)),
        ("e_a", Json::Num(r.quantities.e_a)),
        ("dirichlet_s1_abs", Json::Num(r.quantities.dirichlet_s1_abs)),
        ("y_terms", named_terms(&r.quantities.y_components)),
        ("e_terms", named_terms(&r.quantities.e_components)),
        ("empty_a_sentinel", Json::Bool(r.empty_a)),
        ("hypothesis_mode", Json::Bool(r.hypothesis_mode)),
        ("provenance_mix", Json::Bool(r.provenance_mix)),
        (
            "notes",
            Json::Str("lower-case y_bound evaluates Y at sigma_1 per the theorem statement".into()),
        ),
    ])
    .render()
}

pub fn bound_check_json(r: &BoundCheckReport) -> String {
    Json::Obj(vec![
        ("kind", Json::Str("bound_check".into())),
        ("lemma", Json::Str(r.lemma_id.name().into())),
        ("lhs_value", Json::Num(r.lhs_value)),
        ("bound_value", Json::Num(r.bound_value)),
        ("ratio", Json::Num(r.ratio)),
        ("t", Json::Num(r.t)),
        ("x", Json::Num(r.x)),
        ("a", Json::Num(r.a)),
        ("sigma", Json::Num(r.sigma)),
        ("branches", named_terms(&r.branches)),
    ])
    .render()
}

pub fn lemma1_json(c: &crate::verify::Lemma1Check, t: f64, sigma: f64, x: f64) -> String {
    Json::Obj(vec![
        ("kind", Json::Str("lemma1".into())),
        ("sigma", Json::Num(sigma)),
        ("t", Json::Num(t)),
        ("x", Json::Num(x)),
        ("lhs", complex(c.lhs.re, c.lhs.im)),
        ("rhs", complex(c.rhs.re, c.rhs.im)),
        ("residual", Json::Num(c.residual)),
        ("tail_bound", Json::Num(c.tail_bound)),
        ("passes", Json::Bool(c.passes)),
    ])
    .render()
}

/// CSV for the Littlewood scan with the five standard columns.
pub fn littlewood_csv(scan: &LittlewoodScan) -> String {
    let mut out = String::from("t,log_abs_zeta,s_t,littlewood_ratio,s_ratio\n");
    for row in &scan.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            fmt_sig12(row.t),
            fmt_sig12(row.log_abs_zeta),
            fmt_sig12(row.s_t),
            fmt_sig12(row.littlewood_ratio),
            fmt_sig12(row.s_ratio)
        );
    }
    out
}

/// CSV for a grid condition report.
pub fn sizdc_csv(report: &SizdcReport) -> String {
    let mut out = String::from("T,sigma,domain_floor,lhs_count,rhs_bound,ratio,satisfied\n");
    for row in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fmt_sig12(row.t),
            fmt_sig12(row.sigma),
            fmt_sig12(row.domain_floor),
            row.lhs_count,
            fmt_sig12(row.rhs_bound),
            fmt_sig12(row.ratio),
            row.satisfied
        );
    }
    out
}
