//! The result model shared by all output formats. JSON is the reference
//! encoding; the plain and LaTeX renderers read the same typed values.

use std::str::FromStr;

use confcohom::repstab::{format_core, BfConstancy, StabilityReport};
use confcohom::{BiPoly, LaurentPoly};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

#[derive(Debug, Clone)]
pub enum Payload {
    Poly(LaurentPoly),
    /// Entries keyed by the text form of a cycle type.
    Series(Vec<(String, LaurentPoly)>),
    Bi(BiPoly),
    Stability(StabilityReport),
    Bf(BfConstancy),
    Empty,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Document {
    pub command: &'static str,
    pub inputs: Vec<(&'static str, Value)>,
    pub result: Payload,
    pub checks: Vec<Check>,
}

impl Document {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        let mut inputs = Map::new();
        for (k, v) in &self.inputs {
            inputs.insert((*k).to_string(), v.clone());
        }
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut o = Map::new();
                o.insert("name".into(), json!(c.name));
                o.insert("passed".into(), json!(c.passed));
                if let Some(d) = &c.detail {
                    o.insert("detail".into(), json!(d));
                }
                Value::Object(o)
            })
            .collect();
        json!({
            "command": self.command,
            "inputs": Value::Object(inputs),
            "result": payload_json(&self.result),
            "checks": checks,
        })
    }
}

pub fn big(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

/// `{"exponent": coefficient}` in increasing exponent order.
pub fn poly_json(p: &LaurentPoly) -> Value {
    let mut o = Map::new();
    for (e, c) in p.terms() {
        o.insert(e.to_string(), big(c));
    }
    Value::Object(o)
}

/// `{"p,t": coefficient}` with the highest power of `P` first.
pub fn bipoly_json(q: &BiPoly) -> Value {
    let mut o = Map::new();
    for ((p, t), c) in q.terms().rev() {
        o.insert(format!("{p},{t}"), big(c));
    }
    Value::Object(o)
}

fn payload_json(p: &Payload) -> Value {
    match p {
        Payload::Poly(f) => poly_json(f),
        Payload::Series(entries) => {
            let mut o = Map::new();
            for (k, f) in entries {
                o.insert(k.clone(), poly_json(f));
            }
            Value::Object(o)
        }
        Payload::Bi(q) => bipoly_json(q),
        Payload::Stability(r) => stability_json(r),
        Payload::Bf(r) => json!({
            "degree": r.degree,
            "values": r.values.iter().map(|(m, v)| json!({"m": m, "betti": big(v)})).collect::<Vec<_>>(),
            "claimed_from": r.claimed_from,
            "constant_from_claim": r.constant_from_claim,
            "observed_onset": r.observed_onset,
            "stable_value": big(&r.stable_value),
        }),
        Payload::Empty => Value::Null,
    }
}

fn stability_json(r: &StabilityReport) -> Value {
    let mut rows = Map::new();
    for (core, row) in &r.table.rows {
        rows.insert(format_core(core), json!(row));
    }
    let (m0, m1) = range_of(r);
    json!({
        "degree": r.degree,
        "a": r.a,
        "ms": r.table.ms,
        "multiplicities": Value::Object(rows),
        "betti": r.table.betti.iter().map(big).collect::<Vec<_>>(),
        "monotone_bound": r.monotone_bound,
        "stable_bound": r.stable_bound,
        "monotone_beyond_bound": r.monotone_beyond_bound,
        "constant_beyond_bound": r.constant_beyond_bound,
        "observed_monotone_onset": r.observed_monotone_onset,
        "observed_constant_onset": r.observed_constant_onset,
        "betti_polynomial": r.betti_polynomial.map(|p| json!({"start": p.start, "degree": p.degree})),
        "verdict": verdict(r, m0, m1),
    })
}

fn range_of(r: &StabilityReport) -> (usize, usize) {
    (
        r.table.ms.first().copied().unwrap_or(0),
        r.table.ms.last().copied().unwrap_or(0),
    )
}

fn verdict(r: &StabilityReport, m0: usize, m1: usize) -> String {
    let mut s = if r.consistent() {
        format!("consistent with the stability bounds on [{m0}, {m1}]")
    } else {
        format!("not consistent with the stability bounds on [{m0}, {m1}]")
    };
    if m1 <= r.stable_bound {
        s.push_str(&format!(" (constancy untested: range ends at or below {})", r.stable_bound));
    }
    s
}

pub fn render_plain(doc: &Document) -> String {
    let mut out = format!("{}\n", doc.command);
    for (k, v) in &doc.inputs {
        out.push_str(&format!("  {k}: {}\n", compact(v)));
    }
    match &doc.result {
        Payload::Poly(f) => out.push_str(&format!("result: {f}\n")),
        Payload::Series(entries) => {
            out.push_str("result:\n");
            for (k, f) in entries {
                out.push_str(&format!("  {k}: {f}\n"));
            }
        }
        Payload::Bi(q) => out.push_str(&format!("result: {q}\n")),
        Payload::Stability(r) => {
            out.push_str(&format!("degree {} of stratum a = {}\n", r.degree, r.a));
            out.push_str(&format!("  {:<10}", "m"));
            for m in &r.table.ms {
                out.push_str(&format!("{m:>6}"));
            }
            out.push('\n');
            for (core, row) in &r.table.rows {
                out.push_str(&format!("  {:<10}", format_core(core)));
                for n in row {
                    out.push_str(&format!("{n:>6}"));
                }
                out.push('\n');
            }
            out.push_str(&format!("  {:<10}", "betti"));
            for b in &r.table.betti {
                out.push_str(&format!("{b:>6}"));
            }
            out.push('\n');
            let (m0, m1) = range_of(r);
            out.push_str(&format!(
                "monotone from {} (bound {}), constant from {} (bound {})\n{}\n",
                opt(r.observed_monotone_onset),
                r.monotone_bound,
                opt(r.observed_constant_onset),
                r.stable_bound,
                verdict(r, m0, m1)
            ));
        }
        Payload::Bf(r) => {
            out.push_str(&format!("degree {}\n", r.degree));
            for (m, v) in &r.values {
                out.push_str(&format!("  m = {m}: {v}\n"));
            }
            out.push_str(&format!(
                "constant from m = {} with value {}; constant from m = {}: {}\n",
                r.observed_onset, r.stable_value, r.claimed_from, r.constant_from_claim
            ));
        }
        Payload::Empty => {}
    }
    for c in &doc.checks {
        let mark = if c.passed { "pass" } else { "FAIL" };
        match &c.detail {
            Some(d) => out.push_str(&format!("[{mark}] {} ({d})\n", c.name)),
            None => out.push_str(&format!("[{mark}] {}\n", c.name)),
        }
    }
    out
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |m| m.to_string())
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Braces every exponent: `T^10` becomes `T^{10}`.
fn latex_math(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 8);
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            out.push('{');
            if chars.peek() == Some(&'-') {
                out.push(chars.next().expect("peeked"));
            }
            while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                out.push(d);
                chars.next();
            }
            out.push('}');
        }
    }
    out
}

fn latex_text(s: &str) -> String {
    s.replace('\\', "\\textbackslash{}")
        .replace('_', "\\_")
        .replace('^', "\\^{}")
        .replace('&', "\\&")
        .replace('#', "\\#")
        .replace('%', "\\%")
}

pub fn render_latex(doc: &Document) -> String {
    let mut out = format!("% {}\n", doc.command);
    for (k, v) in &doc.inputs {
        out.push_str(&format!("% {k}: {}\n", compact(v)));
    }
    match &doc.result {
        Payload::Poly(f) => out.push_str(&format!("\\[ {} \\]\n", latex_math(&f.to_string()))),
        Payload::Bi(q) => out.push_str(&format!("\\[ {} \\]\n", latex_math(&q.to_string()))),
        Payload::Series(entries) => {
            out.push_str("\\begin{tabular}{ll}\n");
            for (k, f) in entries {
                out.push_str(&format!("${}$ & ${}$ \\\\\n", latex_math(k), latex_math(&f.to_string())));
            }
            out.push_str("\\end{tabular}\n");
        }
        Payload::Stability(r) => {
            let cols = "r".repeat(r.table.ms.len());
            out.push_str(&format!("\\begin{{tabular}}{{l{cols}}}\n$\\lambda \\backslash m$"));
            for m in &r.table.ms {
                out.push_str(&format!(" & {m}"));
            }
            out.push_str(" \\\\\n\\hline\n");
            for (core, row) in &r.table.rows {
                out.push_str(&format!("${}$", format_core(core)));
                for n in row {
                    out.push_str(&format!(" & {n}"));
                }
                out.push_str(" \\\\\n");
            }
            out.push_str("\\hline\nBetti");
            for b in &r.table.betti {
                out.push_str(&format!(" & {b}"));
            }
            out.push_str(" \\\\\n\\end{tabular}\n");
            let (m0, m1) = range_of(r);
            out.push_str(&format!("% {}\n", verdict(r, m0, m1)));
        }
        Payload::Bf(r) => {
            out.push_str("\\begin{tabular}{rr}\n$m$ & Betti \\\\\n\\hline\n");
            for (m, v) in &r.values {
                out.push_str(&format!("{m} & {v} \\\\\n"));
            }
            out.push_str("\\end{tabular}\n");
        }
        Payload::Empty => {}
    }
    if !doc.checks.is_empty() {
        out.push_str("\\begin{itemize}\n");
        for c in &doc.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("\\item[{mark}] \\texttt{{{}}}\n", latex_text(&c.name)));
        }
        out.push_str("\\end{itemize}\n");
    }
    out
}
