//! Verification grids behind `evenzeta verify`.
//!
//! Every case compares two independently computed exact values. Cases run in
//! parallel but are reported in a fixed order, so the summary is identical
//! from run to run.

use clap::ValueEnum;
use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use evenzeta::bernoulli_sums::{bernoulli_identity, verify_bernoulli_identity, MVector};
use evenzeta::mzv::{mzsv_identity, mzv_identity, verify_mzv_identity};
use evenzeta::quasi_shuffle::verify_symmetric_sums;
use evenzeta::tables::check_invariants;
use evenzeta::zeta::{zeta_identity_monomial, zeta_identity_poly, verify_zeta_identity};
use evenzeta::MultiPoly;

use crate::{CliError, CliResult};

pub const MAX_N: usize = 6;
pub const MAX_K: u64 = 40;
/// Rows of the derivative tables checked by the `tables` suite.
pub const TABLE_DEPTH: usize = 12;
/// Largest `m_1 + .. + m_n` in the monomial grids.
pub const MAX_MONOMIAL_DEGREE: u32 = 3;
/// Largest letter in the word sweep.
pub const MAX_LETTER: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Bernoulli,
    Zeta,
    Mzv,
    Words,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Bernoulli => "bernoulli",
            Suite::Zeta => "zeta",
            Suite::Mzv => "mzv",
            Suite::Words => "words",
            Suite::All => "all",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Tables, Suite::Bernoulli, Suite::Zeta, Suite::Mzv, Suite::Words],
            s => vec![s],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    pub max_k: u64,
}

impl Bounds {
    pub fn new(max_n: usize, max_k: u64) -> CliResult<Self> {
        if !(1..=MAX_N).contains(&max_n) {
            return Err(CliError::Usage(format!("--max-n must be in 1..={MAX_N}")));
        }
        if !(1..=MAX_K).contains(&max_k) {
            return Err(CliError::Usage(format!("--max-k must be in 1..={MAX_K}")));
        }
        Ok(Bounds { max_n, max_k })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub max_n: usize,
    pub max_k: u64,
    pub suites: Vec<SuiteSummary>,
}

enum Outcome {
    Pass,
    Fail(String),
    Skip,
}

/// One grid point: a label and a closure deciding it.
struct Case {
    label: String,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Case {
    fn new(label: String, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Case {
            label,
            run: Box::new(run),
        }
    }
}

fn outcome(result: evenzeta::Result<bool>, detail: impl FnOnce() -> String) -> Outcome {
    match result {
        Ok(true) => Outcome::Pass,
        Ok(false) => Outcome::Fail(detail()),
        Err(e) => Outcome::Fail(format!("{}: {e}", detail())),
    }
}

fn summarize(suite: Suite, cases: Vec<Case>) -> SuiteSummary {
    let results: Vec<(String, Outcome)> = cases
        .into_par_iter()
        .map(|c| {
            let o = (c.run)();
            (c.label, o)
        })
        .collect();
    let mut summary = SuiteSummary {
        suite: suite.name(),
        passed: 0,
        failed: 0,
        skipped: 0,
        first_failure: None,
    };
    for (label, o) in results {
        match o {
            Outcome::Pass => summary.passed += 1,
            Outcome::Skip => summary.skipped += 1,
            Outcome::Fail(msg) => {
                summary.failed += 1;
                if summary.first_failure.is_none() {
                    summary.first_failure = Some(format!("{label}: {msg}"));
                }
            }
        }
    }
    summary
}

/// Exponent vectors with `n` entries summing to at most `max_degree`.
fn monomial_grid(n: usize, max_degree: u32) -> Vec<Vec<u32>> {
    (0..n)
        .map(|_| 0..=max_degree)
        .multi_cartesian_product()
        .filter(|v| v.iter().sum::<u32>() <= max_degree)
        .collect()
}

/// `1`, `p_1`, `p_2`, `p_3` and `e_2` in `n` variables.
fn symmetric_family(n: usize) -> Vec<(&'static str, MultiPoly)> {
    vec![
        ("1", MultiPoly::one(n)),
        ("sum x_i", MultiPoly::power_sum(n, 1)),
        ("sum x_i^2", MultiPoly::power_sum(n, 2)),
        ("sum x_i^3", MultiPoly::power_sum(n, 3)),
        ("e_2", MultiPoly::elementary(n, 2)),
    ]
}

fn k_range(n: usize, bounds: Bounds) -> impl Iterator<Item = (u64, bool)> {
    (1..=bounds.max_k).map(move |k| (k, k >= n as u64))
}

fn table_cases() -> Vec<Case> {
    check_invariants(TABLE_DEPTH)
        .into_iter()
        .map(|check| {
            let label = format!("{} (m <= {TABLE_DEPTH}, {} cases)", check.name, check.cases);
            Case::new(label, move || match &check.failure {
                None => Outcome::Pass,
                Some(f) => Outcome::Fail(f.clone()),
            })
        })
        .collect()
}

fn bernoulli_cases(bounds: Bounds) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=bounds.max_n {
        for m in monomial_grid(n, MAX_MONOMIAL_DEGREE) {
            let mvec = MVector::new(m.clone()).expect("n >= 1");
            let id = match bernoulli_identity(&mvec) {
                Ok(id) => std::sync::Arc::new(id),
                Err(e) => {
                    let msg = e.to_string();
                    cases.push(Case::new(format!("m={m:?}"), move || Outcome::Fail(msg.clone())));
                    continue;
                }
            };
            let bounds_ok = id.degree_bounds_hold();
            cases.push(Case::new(format!("m={m:?} degree bounds"), move || {
                if bounds_ok {
                    Outcome::Pass
                } else {
                    Outcome::Fail("coefficient degree exceeds |m|+n-2l-1".into())
                }
            }));
            for (k, applicable) in k_range(n, bounds) {
                let id = id.clone();
                cases.push(Case::new(format!("m={m:?} k={k}"), move || {
                    if !applicable {
                        return Outcome::Skip;
                    }
                    outcome(verify_bernoulli_identity(&id, k).map(|c| c.holds()), || {
                        "lhs != rhs".into()
                    })
                }));
            }
        }
    }
    cases
}

fn weighted_cases(
    ids: Vec<(String, evenzeta::Result<evenzeta::zeta::WeightedSumIdentity>)>,
    n: usize,
    bounds: Bounds,
    cases: &mut Vec<Case>,
) {
    for (label, id) in ids {
        let id = match id {
            Ok(id) => std::sync::Arc::new(id),
            Err(e) => {
                let msg = e.to_string();
                cases.push(Case::new(label, move || Outcome::Fail(msg.clone())));
                continue;
            }
        };
        let bounds_ok = id.degree_bounds_hold();
        cases.push(Case::new(format!("{label} degree bounds"), move || {
            if bounds_ok {
                Outcome::Pass
            } else {
                Outcome::Fail("coefficient degree exceeds r+n-2l-1".into())
            }
        }));
        for (k, applicable) in k_range(n, bounds) {
            let id = id.clone();
            cases.push(Case::new(format!("{label} k={k}"), move || {
                if !applicable {
                    return Outcome::Skip;
                }
                let check = match id.kind {
                    evenzeta::zeta::IdentityKind::Zeta => verify_zeta_identity(&id, k),
                    _ => verify_mzv_identity(&id, k),
                };
                outcome(check.map(|c| c.holds()), || "lhs != rhs".into())
            }));
        }
    }
}

fn zeta_cases(bounds: Bounds) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=bounds.max_n {
        let mut ids = Vec::new();
        for m in monomial_grid(n, MAX_MONOMIAL_DEGREE) {
            let mvec = MVector::new(m.clone()).expect("n >= 1");
            ids.push((format!("zeta m={m:?}"), zeta_identity_monomial(&mvec)));
        }
        for (name, f) in symmetric_family(n) {
            ids.push((format!("zeta n={n} F={name}"), zeta_identity_poly(&f, n)));
        }
        weighted_cases(ids, n, bounds, &mut cases);
    }
    cases
}

fn mzv_cases(bounds: Bounds) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=bounds.max_n {
        let mut ids = Vec::new();
        for (name, f) in symmetric_family(n) {
            ids.push((format!("mzv n={n} F={name}"), mzv_identity(&f, n)));
            ids.push((format!("mzsv n={n} F={name}"), mzsv_identity(&f, n)));
        }
        weighted_cases(ids, n, bounds, &mut cases);
    }
    cases
}

fn word_cases(bounds: Bounds) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=bounds.max_n {
        for kvec in (1..=MAX_LETTER).combinations_with_replacement(n) {
            cases.push(Case::new(format!("words {kvec:?}"), move || {
                outcome(verify_symmetric_sums(&kvec).map(|r| r.holds()), || {
                    "symmetric sum != partition sum".into()
                })
            }));
        }
    }
    cases
}

fn cases_for(suite: Suite, bounds: Bounds) -> Vec<Case> {
    match suite {
        Suite::Tables => table_cases(),
        Suite::Bernoulli => bernoulli_cases(bounds),
        Suite::Zeta => zeta_cases(bounds),
        Suite::Mzv => mzv_cases(bounds),
        Suite::Words => word_cases(bounds),
        Suite::All => unreachable!("expanded by members()"),
    }
}

/// Runs `suite` (or every suite for [`Suite::All`]) within `bounds`.
pub fn run(suite: Suite, bounds: Bounds) -> VerifyReport {
    let suites: Vec<SuiteSummary> = suite
        .members()
        .into_iter()
        .map(|s| summarize(s, cases_for(s, bounds)))
        .collect();
    let passed = suites.iter().map(|s| s.passed).sum();
    let failed = suites.iter().map(|s| s.failed).sum();
    let skipped = suites.iter().map(|s| s.skipped).sum();
    VerifyReport {
        ok: failed == 0,
        passed,
        failed,
        skipped,
        max_n: bounds.max_n,
        max_k: bounds.max_k,
        suites,
    }
}
