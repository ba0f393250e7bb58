//! Text, LaTeX and JSON renderings of identity documents.
//!
//! Both human formats print the `l = 0` term as a coefficient of plain
//! `zeta(2k)` (or `B_{2k}/(2k)!`) and skip vanishing terms.

use clap::ValueEnum;
use num_traits::{One, Signed};

use evenzeta::polynomials::latex_rational;
use evenzeta::{parse_poly, MultiPoly, Rational, UniPoly};

use crate::document::{IdentityDocument, IdentityKindArg, WeightInput};
use crate::CliResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

pub fn render(doc: &IdentityDocument, format: Format) -> CliResult<String> {
    match format {
        Format::Text => render_text(doc),
        Format::Latex => render_latex(doc),
        Format::Json => Ok(doc.to_json() + "\n"),
    }
}

fn weight_poly(doc: &IdentityDocument) -> CliResult<MultiPoly> {
    Ok(match &doc.weight {
        WeightInput::Mvec(m) => MultiPoly::monomial(doc.n, Rational::one(), m.clone())?,
        WeightInput::Poly(text) => parse_poly(text, doc.n)?,
    })
}

fn is_unit_weight(f: &MultiPoly) -> bool {
    *f == MultiPoly::one(f.arity())
}

/// Splits a coefficient polynomial into a sign and a part with positive
/// leading coefficient.
fn split_sign(p: &UniPoly) -> (bool, UniPoly) {
    match p.leading() {
        Ok(c) if c.is_negative() => (true, -p.clone()),
        _ => (false, p.clone()),
    }
}

struct Style {
    minus: &'static str,
    plus: &'static str,
    lead_minus: &'static str,
}

fn join_terms(pieces: Vec<(bool, String)>, style: &Style) -> String {
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (negative, body)) in pieces.into_iter().enumerate() {
        match (i, negative) {
            (0, true) => out.push_str(style.lead_minus),
            (0, false) => {}
            (_, true) => out.push_str(style.minus),
            (_, false) => out.push_str(style.plus),
        }
        out.push_str(&body);
    }
    out
}

fn text_basis(kind: IdentityKindArg, l: usize) -> String {
    match (kind, l) {
        (IdentityKindArg::Bernoulli, 0) => "B_{2k}/(2k)!".to_string(),
        (IdentityKindArg::Bernoulli, l) => format!("B_{{2k−{0}}}/(2k−{0})!", 2 * l),
        (_, 0) => "ζ(2k)".to_string(),
        (_, l) => format!("ζ({0})ζ(2k−{0})", 2 * l),
    }
}

fn latex_basis(kind: IdentityKindArg, l: usize) -> String {
    match (kind, l) {
        (IdentityKindArg::Bernoulli, 0) => "\\frac{B_{2k}}{(2k)!}".to_string(),
        (IdentityKindArg::Bernoulli, l) => format!("\\frac{{B_{{2k-{0}}}}}{{(2k-{0})!}}", 2 * l),
        (_, 0) => "\\zeta(2k)".to_string(),
        (_, l) => format!("\\zeta({0})\\zeta(2k-{0})", 2 * l),
    }
}

/// The right-hand side alone, e.g. `35/64 ζ(2k) − 5/16 ζ(2)ζ(2k−2)`.
pub fn text_rhs(kind: IdentityKindArg, terms: &[UniPoly]) -> String {
    let pieces = terms
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(l, p)| {
            let (negative, abs) = split_sign(p);
            let basis = text_basis(kind, l);
            let body = match abs.degree() {
                Some(0) if abs.coefficient(0).is_one() => basis,
                Some(0) => format!("{} {basis}", abs.coefficient(0)),
                _ => format!("({}) {basis}", abs.render("k")),
            };
            (negative, body)
        })
        .collect();
    join_terms(
        pieces,
        &Style {
            minus: " − ",
            plus: " + ",
            lead_minus: "−",
        },
    )
}

/// The right-hand side in LaTeX, e.g.
/// `\frac{35}{64}\zeta(2k)-\frac{5}{16}\zeta(2)\zeta(2k-2)`.
pub fn latex_rhs(kind: IdentityKindArg, terms: &[UniPoly]) -> String {
    let pieces = terms
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(l, p)| {
            let (negative, abs) = split_sign(p);
            let basis = latex_basis(kind, l);
            let body = match abs.degree() {
                Some(0) if abs.coefficient(0).is_one() => basis,
                Some(0) => format!("{}{basis}", latex_rational(&abs.coefficient(0))),
                _ => format!("\\left({}\\right){basis}", abs.render_latex("k")),
            };
            (negative, body)
        })
        .collect();
    join_terms(
        pieces,
        &Style {
            minus: "-",
            plus: "+",
            lead_minus: "-",
        },
    )
}

fn indices(n: usize, f: impl Fn(usize) -> String, sep: &str) -> String {
    (1..=n).map(f).collect::<Vec<_>>().join(sep)
}

fn text_lhs(kind: IdentityKindArg, n: usize, unit: bool) -> String {
    let ks = indices(n, |j| format!("k{j}"), ",");
    let weight = if unit { String::new() } else { format!("F({ks}) ") };
    let summand = match kind {
        IdentityKindArg::Bernoulli => indices(n, |j| format!("B_{{2k{j}}}/(2k{j})!"), " "),
        IdentityKindArg::Zeta => indices(n, |j| format!("ζ(2k{j})"), ""),
        IdentityKindArg::Mzv => format!("ζ({})", indices(n, |j| format!("2k{j}"), ",")),
        IdentityKindArg::Mzsv => format!("ζ⋆({})", indices(n, |j| format!("2k{j}"), ",")),
    };
    format!("Σ_{{{}=k}} {weight}{summand}", indices(n, |j| format!("k{j}"), "+"))
}

fn latex_lhs(kind: IdentityKindArg, n: usize, unit: bool) -> String {
    let ks = indices(n, |j| format!("k_{{{j}}}"), ",");
    let weight = if unit { String::new() } else { format!("F({ks})") };
    let args = indices(n, |j| format!("2k_{{{j}}}"), ",");
    let summand = match kind {
        IdentityKindArg::Bernoulli => indices(n, |j| format!("\\frac{{B_{{2k_{{{j}}}}}}}{{(2k_{{{j}}})!}}"), ""),
        IdentityKindArg::Zeta => indices(n, |j| format!("\\zeta(2k_{{{j}}})"), ""),
        IdentityKindArg::Mzv => format!("\\zeta({args})"),
        IdentityKindArg::Mzsv => format!("\\zeta^{{\\star}}({args})"),
    };
    format!(
        "\\sum_{{{}=k}}{weight}{summand}",
        indices(n, |j| format!("k_{{{j}}}"), "+")
    )
}

/// LaTeX for a multivariate polynomial in `x_1..x_n`.
pub fn latex_multi(f: &MultiPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (e, c) in f.terms().collect::<Vec<_>>().into_iter().rev() {
        let negative = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        let vars: String = e
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .map(|(i, &p)| {
                if p == 1 {
                    format!("x_{{{}}}", i + 1)
                } else {
                    format!("x_{{{}}}^{{{p}}}", i + 1)
                }
            })
            .collect();
        if vars.is_empty() || !abs.is_one() {
            out.push_str(&latex_rational(&abs));
        }
        out.push_str(&vars);
    }
    out
}

pub fn render_text(doc: &IdentityDocument) -> CliResult<String> {
    let f = weight_poly(doc)?;
    let unit = is_unit_weight(&f);
    let terms = doc.term_polys()?;
    let mut out = String::new();
    if !unit {
        out.push_str(&format!("F = {}\n", f.render()));
    }
    out.push_str(&text_lhs(doc.kind, doc.n, unit));
    out.push('\n');
    out.push_str(&format!("  = {}\n", text_rhs(doc.kind, &terms)));
    out.push_str(&format!("for k >= {}, T = {}\n", doc.n, doc.t));
    Ok(out)
}

pub fn render_latex(doc: &IdentityDocument) -> CliResult<String> {
    let f = weight_poly(doc)?;
    let unit = is_unit_weight(&f);
    let terms = doc.term_polys()?;
    let mut out = String::new();
    if !unit {
        let xs = indices(doc.n, |j| format!("x_{{{j}}}"), ",");
        out.push_str(&format!("F({xs})={}\n", latex_multi(&f)));
    }
    out.push_str(&latex_lhs(doc.kind, doc.n, unit));
    out.push('=');
    out.push_str(&latex_rhs(doc.kind, &terms));
    out.push('\n');
    Ok(out)
}
