//! Published four-fold identities, hard-coded in factored form, compared
//! against freshly generated ones.

use clap::ValueEnum;
use num_traits::Zero;

use evenzeta::{parse_poly, UniPoly};

use crate::document::{build_identity, IdentityKindArg, IdentityRequest, WeightInput};
use crate::render::text_rhs;
use crate::CliResult;

/// Which group of reference identities to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExampleSet {
    /// Bernoulli numbers
    #[value(name = "2")]
    Bernoulli,
    /// Products of zeta values
    #[value(name = "3")]
    Zeta,
    /// Multiple zeta and zeta-star values
    #[value(name = "4")]
    MultipleZeta,
}

pub struct Reference {
    pub request: IdentityRequest,
    /// Expected coefficient polynomials in `k`, one per `l`, in the same
    /// notation as `--poly` with `k` for the variable.
    pub expected: &'static [&'static str],
}

fn mvec(kind: IdentityKindArg, m: &[u32]) -> IdentityRequest {
    IdentityRequest {
        kind,
        n: m.len(),
        weight: WeightInput::Mvec(m.to_vec()),
    }
}

fn poly(kind: IdentityKindArg, text: &str) -> IdentityRequest {
    IdentityRequest {
        kind,
        n: 4,
        weight: WeightInput::Poly(text.to_string()),
    }
}

const SQUARES: &str = "x1^2 + x2^2 + x3^2 + x4^2";
const CUBES: &str = "x1^3 + x2^3 + x3^3 + x4^3";

pub fn references(set: ExampleSet) -> Vec<Reference> {
    use IdentityKindArg::*;
    match set {
        ExampleSet::Bernoulli => vec![
            Reference {
                request: mvec(Bernoulli, &[0, 0, 0, 0]),
                expected: &["-1/3*(k+1)*(2*k+1)*(2*k+3)", "-2/3*k"],
            },
            Reference {
                request: mvec(Bernoulli, &[2, 0, 0, 0]),
                expected: &[
                    "-1/120*k*(k+1)*(2*k+1)*(2*k+3)*(4*k+3)",
                    "-1/24*k*(4*k^2-6*k+3)",
                    "-1/160*(2*k-5)",
                ],
            },
            Reference {
                request: mvec(Bernoulli, &[3, 0, 0, 0]),
                expected: &[
                    "-1/240*k*(k+1)*(2*k+1)*(2*k+3)*(4*k^2+6*k+1)",
                    "-1/96*k*(12*k^3-12*k^2-11*k+9)",
                    "-1/960*(2*k-5)*(13*k-9)",
                ],
            },
        ],
        ExampleSet::Zeta => vec![
            Reference {
                request: mvec(Zeta, &[0, 0, 0, 0]),
                expected: &["1/24*(k+1)*(2*k+1)*(2*k+3)", "-2*k"],
            },
            Reference {
                request: mvec(Zeta, &[2, 0, 0, 0]),
                expected: &[
                    "1/960*k*(k+1)*(2*k+1)*(2*k+3)*(4*k+3)",
                    "-1/8*k*(4*k^2-6*k+3)",
                    "9/8*(2*k-5)",
                ],
            },
            Reference {
                request: mvec(Zeta, &[3, 0, 0, 0]),
                expected: &[
                    "1/1920*k*(k+1)*(2*k+1)*(2*k+3)*(4*k^2+6*k+1)",
                    "-1/32*k*(12*k^3-12*k^2-11*k+9)",
                    "3/16*(2*k-5)*(13*k-9)",
                ],
            },
        ],
        ExampleSet::MultipleZeta => vec![
            Reference {
                request: poly(Mzv, "1"),
                expected: &["35/64", "-5/16"],
            },
            Reference {
                request: poly(Mzv, SQUARES),
                expected: &["7/128*k*(10*k-3)", "-1/32*(10*k^2+9*k-30)", "3/16*(2*k-5)"],
            },
            Reference {
                request: poly(Mzv, CUBES),
                expected: &[
                    "7/512*k*(40*k^2-18*k+3)",
                    "-1/128*(40*k^3+54*k^2-174*k+15)",
                    "3/32*(2*k-5)*(3*k+2)",
                ],
            },
            Reference {
                request: poly(Mzsv, "1"),
                expected: &["1/192*(4*k-5)*(8*k^2-20*k+3)", "-1/16*(4*k-7)"],
            },
            Reference {
                request: poly(Mzsv, SQUARES),
                expected: &[
                    "1/1920*k*(128*k^4-600*k^3+920*k^2-600*k+227)",
                    "-1/96*(2*k-3)*(16*k^2-63*k+68)",
                    "-1/16*(2*k-5)",
                ],
            },
            Reference {
                request: poly(Mzsv, CUBES),
                expected: &[
                    "1/7680*k*(256*k^5-1440*k^4+2760*k^3-2400*k^2+1664*k-435)",
                    "-1/128*(32*k^4-184*k^3+318*k^2-136*k-51)",
                    "15/32*(k-4)*(2*k-5)",
                ],
            },
        ],
    }
}

/// Parses a polynomial in `k` written with the `--poly` grammar.
pub fn parse_in_k(text: &str) -> CliResult<UniPoly> {
    let f = parse_poly(&text.replace('k', "x1"), 1)?;
    let top = f.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![evenzeta::Rational::zero(); top + 1];
    for (e, c) in f.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

pub struct Comparison {
    pub label: String,
    pub expected: Vec<UniPoly>,
    pub generated: Vec<UniPoly>,
    pub kind: IdentityKindArg,
}

impl Comparison {
    pub fn matches(&self) -> bool {
        let len = self.expected.len().max(self.generated.len());
        (0..len).all(|l| {
            let e = self.expected.get(l).cloned().unwrap_or_else(UniPoly::zero);
            let g = self.generated.get(l).cloned().unwrap_or_else(UniPoly::zero);
            e == g
        })
    }
}

fn label(req: &IdentityRequest) -> String {
    let weight = match &req.weight {
        WeightInput::Mvec(m) => format!("m={m:?}"),
        WeightInput::Poly(p) => format!("F={p}"),
    };
    format!("{} n={} {weight}", req.kind.as_str(), req.n)
}

pub fn compare(set: ExampleSet) -> CliResult<Vec<Comparison>> {
    references(set)
        .into_iter()
        .map(|r| {
            let expected = r
                .expected
                .iter()
                .map(|t| parse_in_k(t))
                .collect::<CliResult<Vec<_>>>()?;
            let generated = build_identity(&r.request)?.term_polys()?;
            Ok(Comparison {
                label: label(&r.request),
                expected,
                generated,
                kind: r.request.kind,
            })
        })
        .collect()
}

/// Human-readable side-by-side report; the flag is true when every
/// identity matches.
pub fn report(set: ExampleSet) -> CliResult<(String, bool)> {
    let comparisons = compare(set)?;
    let mut out = String::new();
    let mut matched = 0;
    for c in &comparisons {
        let ok = c.matches();
        matched += usize::from(ok);
        out.push_str(&format!("{:<9} {}\n", if ok { "MATCH" } else { "MISMATCH" }, c.label));
        out.push_str(&format!("  expected:  {}\n", text_rhs(c.kind, &c.expected)));
        out.push_str(&format!("  generated: {}\n", text_rhs(c.kind, &c.generated)));
    }
    out.push_str(&format!("{matched}/{} identities match\n", comparisons.len()));
    Ok((out, matched == comparisons.len()))
}
