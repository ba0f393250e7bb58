//! The serializable form of a generated identity.
//!
//! Coefficient polynomials are stored as lists of exact `"p/q"` strings in
//! ascending powers of `k`; see `docs/identity-schema.md` for the layout.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use evenzeta::bernoulli_sums::{bernoulli_identity, BernoulliIdentity, MVector};
use evenzeta::mzv::{mzsv_identity, mzv_identity};
use evenzeta::rationals::{parse_fraction, to_fraction_string};
use evenzeta::zeta::{
    zeta_identity_monomial, zeta_identity_poly, IdentityKind, WeightSpec, WeightedSumIdentity,
};
use evenzeta::{parse_poly, UniPoly};

use crate::{CliError, CliResult, PROVENANCE};

pub const SCHEMA_VERSION: u32 = 1;

/// Which sum an identity document describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum IdentityKindArg {
    /// Products of Bernoulli numbers `B_{2k_j}/(2k_j)!`
    Bernoulli,
    /// Products of single zeta values
    Zeta,
    /// Multiple zeta values
    Mzv,
    /// Multiple zeta-star values
    Mzsv,
}

impl IdentityKindArg {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityKindArg::Bernoulli => "bernoulli",
            IdentityKindArg::Zeta => "zeta",
            IdentityKindArg::Mzv => "mzv",
            IdentityKindArg::Mzsv => "mzsv",
        }
    }
}

impl From<IdentityKind> for IdentityKindArg {
    fn from(k: IdentityKind) -> Self {
        match k {
            IdentityKind::Zeta => IdentityKindArg::Zeta,
            IdentityKind::Mzv => IdentityKindArg::Mzv,
            IdentityKind::Mzsv => IdentityKindArg::Mzsv,
        }
    }
}

/// The weight `F`, either as an exponent vector (`F = x1^m1 .. xn^mn`) or
/// as polynomial text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightInput {
    Mvec(Vec<u32>),
    Poly(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub l: usize,
    /// Coefficients of `1, k, k^2, ...` as `"p/q"` strings.
    pub coefficients: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityDocument {
    pub schema_version: u32,
    pub kind: IdentityKindArg,
    pub n: usize,
    pub weight: WeightInput,
    #[serde(rename = "T")]
    pub t: usize,
    pub terms: Vec<TermEntry>,
    pub provenance: String,
}

fn term_entries(polys: &[UniPoly]) -> Vec<TermEntry> {
    polys
        .iter()
        .enumerate()
        .map(|(l, p)| TermEntry {
            l,
            coefficients: p.coeffs().iter().map(to_fraction_string).collect(),
        })
        .collect()
}

impl IdentityDocument {
    pub fn from_bernoulli(id: &BernoulliIdentity) -> Self {
        IdentityDocument {
            schema_version: SCHEMA_VERSION,
            kind: IdentityKindArg::Bernoulli,
            n: id.mvec.n(),
            weight: WeightInput::Mvec(id.mvec.entries().to_vec()),
            t: id.t,
            terms: term_entries(&id.rhs),
            provenance: PROVENANCE.to_string(),
        }
    }

    pub fn from_weighted(id: &WeightedSumIdentity) -> Self {
        let weight = match &id.weight {
            WeightSpec::Monomial(m) => WeightInput::Mvec(m.entries().to_vec()),
            WeightSpec::Poly(p) => WeightInput::Poly(p.render()),
        };
        IdentityDocument {
            schema_version: SCHEMA_VERSION,
            kind: id.kind.into(),
            n: id.n,
            weight,
            t: id.t,
            terms: term_entries(&id.terms),
            provenance: PROVENANCE.to_string(),
        }
    }

    /// Coefficient polynomials indexed by `l`.
    pub fn term_polys(&self) -> CliResult<Vec<UniPoly>> {
        self.terms
            .iter()
            .map(|t| {
                let coeffs = t
                    .coefficients
                    .iter()
                    .map(|c| parse_fraction(c))
                    .collect::<evenzeta::Result<Vec<_>>>()?;
                Ok(UniPoly::from_coeffs(coeffs))
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// What the `identity` command was asked to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRequest {
    pub kind: IdentityKindArg,
    pub n: usize,
    pub weight: WeightInput,
}

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

fn mvector(n: usize, m: &[u32]) -> CliResult<MVector> {
    if m.len() != n {
        return usage(format!("--m has {} entries but --n is {n}", m.len()));
    }
    Ok(MVector::new(m.to_vec())?)
}

/// Generates the identity described by `req`.
pub fn build_identity(req: &IdentityRequest) -> CliResult<IdentityDocument> {
    if req.n == 0 {
        return usage("--n must be at least 1");
    }
    match (req.kind, &req.weight) {
        (IdentityKindArg::Bernoulli, WeightInput::Mvec(m)) => Ok(IdentityDocument::from_bernoulli(
            &bernoulli_identity(&mvector(req.n, m)?)?,
        )),
        (IdentityKindArg::Bernoulli, WeightInput::Poly(_)) => {
            usage("bernoulli identities take an exponent vector (--m)")
        }
        (IdentityKindArg::Zeta, WeightInput::Mvec(m)) => Ok(IdentityDocument::from_weighted(
            &zeta_identity_monomial(&mvector(req.n, m)?)?,
        )),
        (IdentityKindArg::Zeta, WeightInput::Poly(text)) => {
            let f = parse_poly(text, req.n)?;
            Ok(IdentityDocument::from_weighted(&zeta_identity_poly(&f, req.n)?))
        }
        (IdentityKindArg::Mzv | IdentityKindArg::Mzsv, WeightInput::Poly(text)) => {
            let f = parse_poly(text, req.n)?;
            let id = if req.kind == IdentityKindArg::Mzv {
                mzv_identity(&f, req.n)?
            } else {
                mzsv_identity(&f, req.n)?
            };
            Ok(IdentityDocument::from_weighted(&id))
        }
        (IdentityKindArg::Mzv | IdentityKindArg::Mzsv, WeightInput::Mvec(_)) => {
            usage("mzv and mzsv identities take a symmetric polynomial (--poly)")
        }
    }
}
