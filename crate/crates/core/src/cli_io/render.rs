//! Text, LaTeX and JSON renderers.
//!
//! Text output is accepted back by [`super::parse`]. Terms come in the
//! order of the underlying maps: PBW order for `U`, degree then exponents
//! for `Z`.

use std::fmt::Write as _;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::coeff::{Polynomial, QuadExt, Rational, RationalFunction};
use crate::projector::{kappa, phi};
use crate::rep::Matrix;
use crate::uea::{UeaElement, UeaMonomial};
use crate::zalg::{ZElement, ZMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Latex,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (text, latex, json)")),
        }
    }
}

fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// `(negative, magnitude text)` of a coefficient; an empty magnitude means
/// one.
fn text_coeff(f: &RationalFunction) -> (bool, String) {
    match f.constant_value() {
        Some(c) => {
            let neg = c < Rational::from_integer(0.into());
            let a = if neg { -c } else { c };
            (neg, if a == Rational::from_integer(1.into()) { String::new() } else { a.to_string() })
        }
        None => (false, format!("({f})")),
    }
}

fn text_term(f: &RationalFunction, mono: String, is_one: bool) -> (bool, String) {
    let (neg, c) = text_coeff(f);
    let body = match (c.is_empty(), is_one) {
        (true, true) => "1".to_string(),
        (true, false) => mono,
        (false, true) => c,
        (false, false) => format!("{c} * {mono}"),
    };
    (neg, body)
}

pub fn uea_text(e: &UeaElement) -> String {
    join_terms(e.iter().map(|(m, f)| text_term(f, m.to_string(), m.is_one())).collect())
}

pub fn z_text(e: &ZElement) -> String {
    join_terms(e.iter().map(|(m, f)| text_term(f, m.to_string(), m.is_one())).collect())
}

fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_string();
    }
    let sign = if r.numer() < &0.into() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
}

fn poly_latex(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for (deg, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::from_integer(0.into());
        let a = if neg { -c.clone() } else { c.clone() };
        match (first, neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        first = false;
        let var = match deg {
            0 => String::new(),
            1 => "H".into(),
            d => format!("H^{{{d}}}"),
        };
        if deg == 0 || a != Rational::from_integer(1.into()) {
            out.push_str(&rational_latex(&a));
        }
        out.push_str(&var);
    }
    out
}

fn strip_wrap(s: &str) -> &str {
    let b = s.as_bytes();
    if b.first() != Some(&b'(') || b.last() != Some(&b')') {
        return s;
    }
    let mut depth = 0;
    for (i, &c) in b.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 && i + 1 < b.len() {
                    return s;
                }
            }
            _ => {}
        }
    }
    &s[1..s.len() - 1]
}

fn product_latex(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '*' => {}
            '^' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                let _ = write!(out, "^{{{digits}}}");
            }
            c => out.push(c),
        }
    }
    out
}

/// `\frac{H - 3}{H - 1}` style LaTeX for a coefficient.
pub fn ratfunc_latex(f: &RationalFunction) -> String {
    if f.den().is_one() {
        return poly_latex(f.num());
    }
    let s = f.to_string();
    let (num, den) = s.split_once('/').expect("fraction display");
    let (sign, num) = match num.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", num),
    };
    format!(
        "{sign}\\frac{{{}}}{{{}}}",
        product_latex(strip_wrap(num)),
        product_latex(strip_wrap(den))
    )
}

fn latex_term(f: &RationalFunction, mono: String, is_one: bool) -> (bool, String) {
    let (neg, c) = match f.constant_value() {
        Some(c) => {
            let neg = c < Rational::from_integer(0.into());
            let a = if neg { -c } else { c };
            let s = if a == Rational::from_integer(1.into()) { String::new() } else { rational_latex(&a) };
            (neg, s)
        }
        None => (false, format!("\\left({}\\right)", ratfunc_latex(f))),
    };
    let body = match (c.is_empty(), is_one) {
        (true, true) => "1".to_string(),
        (true, false) => mono,
        (false, true) => c,
        (false, false) => format!("{c} {mono}"),
    };
    (neg, body)
}

fn power_latex(base: String, e: u16) -> String {
    if e == 1 {
        base
    } else {
        format!("{base}^{{{e}}}")
    }
}

pub fn uea_monomial_latex(m: &UeaMonomial) -> String {
    let parts: Vec<String> = m.powers().map(|(g, e)| power_latex(g.latex(), e)).collect();
    parts.join(" ")
}

pub fn z_monomial_latex(m: &ZMonomial) -> String {
    let parts: Vec<String> = m.powers().map(|(g, e)| power_latex(g.latex(), e)).collect();
    parts.join(" \\diamond ")
}

pub fn uea_latex(e: &UeaElement) -> String {
    join_terms(
        e.iter()
            .map(|(m, f)| latex_term(f, uea_monomial_latex(m), m.is_one()))
            .collect(),
    )
}

pub fn z_latex(e: &ZElement) -> String {
    join_terms(
        e.iter()
            .map(|(m, f)| latex_term(f, z_monomial_latex(m), m.is_one()))
            .collect(),
    )
}

pub fn uea_json(e: &UeaElement) -> Value {
    let terms: Vec<Value> = e
        .iter()
        .map(|(m, f)| json!({ "coeff": f.to_string(), "monomial": m.to_string(), "exponents": m.exponents() }))
        .collect();
    json!({ "algebra": "u", "text": uea_text(e), "terms": terms })
}

pub fn z_json(e: &ZElement) -> Value {
    let terms: Vec<Value> = e
        .iter()
        .map(|(m, f)| json!({ "coeff": f.to_string(), "monomial": m.to_string(), "exponents": m.exponents() }))
        .collect();
    json!({ "algebra": "z", "text": z_text(e), "terms": terms })
}

pub fn render_uea(e: &UeaElement, format: Format) -> String {
    match format {
        Format::Text => uea_text(e),
        Format::Latex => uea_latex(e),
        Format::Json => serde_json::to_string_pretty(&uea_json(e)).expect("json"),
    }
}

pub fn render_z(e: &ZElement, format: Format) -> String {
    match format {
        Format::Text => z_text(e),
        Format::Latex => z_latex(e),
        Format::Json => serde_json::to_string_pretty(&z_json(e)).expect("json"),
    }
}

/// Rows `n, kappa_n, phi_n` for `n <= bound`: text lines, a LaTeX `align`
/// body, or JSON rows.
pub fn render_phi_table(bound: usize, format: Format) -> String {
    let rows: Vec<(usize, RationalFunction, RationalFunction)> = (0..=bound)
        .map(|n| (n, RationalFunction::from(kappa(n)), phi(n)))
        .collect();
    match format {
        Format::Text => rows
            .iter()
            .map(|(n, k, f)| format!("n = {n}: kappa = {k}, phi = {f}\n"))
            .collect(),
        Format::Latex => {
            let lines: Vec<String> = rows
                .iter()
                .map(|(n, k, f)| {
                    format!(
                        "\\kappa_{{{n}}}(H) &= {}, & \\varphi_{{{n}}}(H) &= {}",
                        ratfunc_latex(k),
                        ratfunc_latex(f)
                    )
                })
                .collect();
            lines.join(" \\\\\n") + "\n"
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(n, k, f)| json!({ "n": n, "kappa": k.to_string(), "phi": f.to_string() }))
                .collect();
            serde_json::to_string_pretty(&rows).expect("json") + "\n"
        }
    }
}

fn quad_latex(x: &QuadExt) -> String {
    let rt = |b: &Rational| {
        let one = Rational::from_integer(1.into());
        if *b == one {
            "\\sqrt{2}".to_string()
        } else if *b == -one {
            "-\\sqrt{2}".to_string()
        } else {
            format!("{}\\sqrt{{2}}", rational_latex(b))
        }
    };
    match (x.a.is_zero(), x.b.is_zero()) {
        (_, true) => rational_latex(&x.a),
        (true, false) => rt(&x.b),
        (false, false) if x.b < Rational::zero() => format!("{} - {}", rational_latex(&x.a), rt(&-x.b.clone())),
        (false, false) => format!("{} + {}", rational_latex(&x.a), rt(&x.b)),
    }
}

/// `\begin{pmatrix} .. \end{pmatrix}`.
pub fn matrix_latex(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| quad_latex(m.get(i, j))).collect::<Vec<_>>().join(" & "))
        .collect();
    format!("\\begin{{pmatrix}} {} \\end{{pmatrix}}", rows.join(" \\\\ "))
}

/// Rows of entry strings.
pub fn matrix_json(m: &Matrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
        .collect();
    json!(rows)
}
