//! Report rendering: canonical JSON and human-readable tables.
//!
//! The JSON layout is fixed: field order, compact separators, and the
//! number encoding are all deterministic, so identical analyses produce
//! byte-identical documents regardless of worker count. Integer values
//! that exceed `2^53 - 1` (the largest integer every JSON consumer can
//! hold exactly) are serialized as decimal strings.

use std::fmt::Write as _;

use z4codes_core::analysis::CodeReport;
use z4codes_core::graph::SrgVerdict;
use z4codes_core::identities::{CheckStatus, IdentityReport};

use crate::config::RunConfig;

/// Largest integer serialized as a bare JSON number.
const MAX_JSON_SAFE: u128 = (1 << 53) - 1;

/// Unsigned integer per the number-or-decimal-string rule.
fn json_uint(value: u128) -> String {
    if value <= MAX_JSON_SAFE {
        value.to_string()
    } else {
        format!("\"{value}\"")
    }
}

/// Signed integer per the number-or-decimal-string rule.
fn json_int(value: i128) -> String {
    if value.unsigned_abs() <= MAX_JSON_SAFE {
        value.to_string()
    } else {
        format!("\"{value}\"")
    }
}

/// JSON string literal with the mandatory escapes.
fn json_string(value: &str) -> String {
    let mut out = String::with_capacity(value.len() + 2);
    out.push('"');
    for ch in value.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// The canonical JSON document for a code report.
pub fn report_json(report: &CodeReport) -> String {
    let mut out = String::from("{");
    let _ = write!(out, "\"n\":{}", report.n);
    let _ = write!(out, ",\"k1\":{}", report.k1);
    let _ = write!(out, ",\"k2\":{}", report.k2);
    let _ = write!(out, ",\"size\":{}", json_uint(report.size));
    let _ = write!(out, ",\"dL\":{}", json_uint(report.min_distance as u128));
    out.push_str(",\"distribution\":{");
    for (i, (weight, count)) in report.distribution.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "\"{weight}\":{}", json_uint(count));
    }
    out.push('}');
    let _ = write!(
        out,
        ",\"plotkinBound\":{}",
        json_uint(report.plotkin_bound as u128)
    );
    let _ = write!(out, ",\"plotkinOptimal\":{}", report.plotkin_optimal);
    let _ = write!(out, ",\"projective\":{}", report.projective);
    let _ = write!(
        out,
        ",\"projectiveMethod\":{}",
        json_string(report.projective_method.as_str())
    );
    let _ = write!(
        out,
        ",\"weightClass\":{}",
        json_string(report.weight_class.as_str())
    );
    out.push_str(",\"weights\":[");
    for (i, w) in report.weights.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&json_uint(*w as u128));
    }
    out.push(']');
    match &report.family {
        Some(f) => {
            let _ = write!(
                out,
                ",\"family\":{{\"t\":{},\"w1\":{},\"w2\":{},\"Aw1\":{},\"Aw2\":{}}}",
                f.t,
                json_uint(f.w1),
                json_uint(f.w2),
                json_uint(f.count_w1),
                json_uint(f.count_w2)
            );
        }
        None => out.push_str(",\"family\":null"),
    }
    match &report.su1 {
        Some(s) => {
            let _ = write!(
                out,
                ",\"su1\":{{\"q\":{},\"l\":{},\"m\":{}}}",
                s.q, s.l, s.m
            );
        }
        None => out.push_str(",\"su1\":null"),
    }
    match report.gray_linear {
        Some(b) => {
            let _ = write!(out, ",\"grayLinear\":{b}");
        }
        None => out.push_str(",\"grayLinear\":null"),
    }
    out.push('}');
    out
}

/// The human-readable table for a code report. Embeds the caps that were
/// in force (but nothing parallelism- or seed-dependent, so the text is
/// identical across worker counts).
pub fn report_human(report: &CodeReport, config: &RunConfig) -> String {
    let mut out = String::new();
    let mut line = |label: &str, value: String| {
        let _ = writeln!(out, "{label:<22} {value}");
    };
    line("length n:", report.n.to_string());
    line(
        "type:",
        format!("4^{} 2^{}  (k1={}, k2={})", report.k1, report.k2, report.k1, report.k2),
    );
    line("size |C|:", report.size.to_string());
    line("min Lee distance:", report.min_distance.to_string());
    let distribution: Vec<String> = report
        .distribution
        .iter()
        .map(|(w, c)| format!("{w}:{c}"))
        .collect();
    line("weight distribution:", distribution.join("  "));
    line("Plotkin-type bound:", report.plotkin_bound.to_string());
    line(
        "Plotkin-optimal:",
        if report.plotkin_optimal { "yes" } else { "no" }.to_string(),
    );
    line(
        "projective:",
        format!(
            "{} (method: {}{})",
            if report.projective { "yes" } else { "no" },
            report.projective_method.as_str(),
            if report.dual_is_trivial {
                "; dual is trivial"
            } else {
                ""
            }
        ),
    );
    line("weight class:", report.weight_class.as_str().to_string());
    match &report.family {
        Some(f) => line(
            "optimal family:",
            format!(
                "t={}  w1={} w2={}  A_w1={} A_w2={}",
                f.t, f.w1, f.w2, f.count_w1, f.count_w2
            ),
        ),
        None => line("optimal family:", "not a member".to_string()),
    }
    match &report.su1 {
        Some(s) => line(
            "binary image family:",
            format!("(q,l,m) = ({}, {}, {})", s.q, s.l, s.m),
        ),
        None => line("binary image family:", "none".to_string()),
    }
    match report.gray_linear {
        Some(b) => line("Gray image linear:", if b { "yes" } else { "no" }.to_string()),
        None => line("Gray image linear:", "not checked".to_string()),
    }
    line(
        "caps:",
        format!(
            "enumeration {} dual {} vertex {}",
            config.enumeration_cap, config.dual_cap, config.vertex_cap
        ),
    );
    out
}

/// One line per identity check: pass, skip (with reason) or FAIL (with
/// witness).
pub fn identity_report_human(report: &IdentityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "identity suite on a {} x {} matrix:",
        report.k, report.n
    );
    for check in &report.checks {
        let status = match &check.status {
            CheckStatus::Passed => "pass".to_string(),
            CheckStatus::Skipped { reason } => format!("skip ({reason})"),
            CheckStatus::Failed { witness } => format!("FAIL ({witness})"),
        };
        let _ = writeln!(out, "  {:<28} {status}", check.id.name());
    }
    let _ = writeln!(
        out,
        "result: {}",
        if report.passed() { "all ok" } else { "FAILED" }
    );
    out
}

/// The canonical JSON document for a strong-regularity verdict.
pub fn srg_verdict_json(verdict: &SrgVerdict) -> String {
    let mut out = String::from("{");
    let _ = write!(out, "\"isSrg\":{}", verdict.is_srg);
    match &verdict.params {
        Some(p) => {
            let _ = write!(
                out,
                ",\"params\":{{\"v\":{},\"k\":{},\"lambda\":{},\"mu\":{}}}",
                json_uint(p.v),
                json_uint(p.k),
                json_uint(p.lambda),
                json_uint(p.mu)
            );
        }
        None => out.push_str(",\"params\":null"),
    }
    match &verdict.spectrum {
        Some(spectrum) => {
            out.push_str(",\"eigenvalues\":[");
            for (i, (value, multiplicity)) in spectrum.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(
                    out,
                    "{{\"value\":{},\"multiplicity\":{}}}",
                    json_int(*value),
                    json_uint(*multiplicity)
                );
            }
            out.push(']');
        }
        None => out.push_str(",\"eigenvalues\":null"),
    }
    match verdict.multipartite {
        Some((a, m)) => {
            let _ = write!(out, ",\"multipartite\":{{\"a\":{},\"m\":{}}}", json_uint(a), json_uint(m));
        }
        None => out.push_str(",\"multipartite\":null"),
    }
    match &verdict.failure {
        Some(why) => {
            let _ = write!(out, ",\"failure\":{}", json_string(why));
        }
        None => out.push_str(",\"failure\":null"),
    }
    out.push('}');
    out
}

/// Human-readable strong-regularity verdict.
pub fn srg_verdict_human(verdict: &SrgVerdict) -> String {
    let mut out = String::new();
    if verdict.is_srg {
        let p = verdict.params.as_ref().expect("SRG has parameters");
        let _ = writeln!(
            out,
            "strongly regular: yes  SRG({}, {}, {}, {})",
            p.v, p.k, p.lambda, p.mu
        );
    } else {
        let _ = writeln!(out, "strongly regular: no");
    }
    match &verdict.spectrum {
        Some(spectrum) => {
            let parts: Vec<String> = spectrum
                .iter()
                .map(|(v, m)| format!("{v} (x{m})"))
                .collect();
            let _ = writeln!(out, "spectrum: {}", parts.join(", "));
        }
        None => {
            let _ = writeln!(out, "spectrum: not integral or not applicable");
        }
    }
    match verdict.multipartite {
        Some((a, m)) => {
            let _ = writeln!(out, "complete multipartite: K_{{{a} x {m}}}");
        }
        None => {
            let _ = writeln!(out, "complete multipartite: no");
        }
    }
    if let Some(why) = &verdict.failure {
        let _ = writeln!(out, "failure: {why}");
    }
    out
}
