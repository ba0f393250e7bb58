use std::process::{Command, Output};

use evenzeta::MultiPoly;
use evenzeta_cli::{build_identity, IdentityDocument, IdentityKindArg, IdentityRequest, WeightInput};

fn evenzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_evenzeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn mzv_identity_latex() {
    let out = evenzeta(&["identity", "--kind", "mzv", "--n", "4", "--poly", "1", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\\frac{35}{64}\\zeta(2k)-\\frac{5}{16}\\zeta(2)\\zeta(2k-2)"));
    let out = evenzeta(&["identity", "--kind", "mzv", "--n", "4", "--poly", "1"]);
    assert!(stdout(&out).contains("35/64 ζ(2k) − 5/16 ζ(2)ζ(2k−2)"));
}

#[test]
fn bernoulli_depth_one() {
    let out = evenzeta(&["identity", "--kind", "bernoulli", "--n", "1", "--m", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = IdentityDocument::from_json(&stdout(&out)).unwrap();
    assert_eq!(doc.terms.len(), 1);
    assert_eq!(doc.terms[0].coefficients, vec!["1/1"]);
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["identity", "--kind", "mzv", "--n", "2", "--poly", "x1^2*x2"],
        &["identity", "--kind", "zeta", "--n", "2", "--poly", "x1 x2"],
        &["identity", "--kind", "zeta", "--n", "2", "--m", "1,0", "--poly", "1"],
        &["identity", "--kind", "zeta", "--n", "2"],
        &["identity", "--kind", "bernoulli", "--n", "2", "--poly", "1"],
        &["identity", "--kind", "mzsv", "--n", "2", "--m", "0,0"],
        &["identity", "--kind", "zeta", "--n", "3", "--m", "1,0"],
        &["verify", "--max-n", "9"],
        &["verify", "--suite", "nope"],
        &["examples", "--section", "5"],
    ];
    for args in cases {
        let out = evenzeta(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_all_passes() {
    let out = evenzeta(&["verify", "--suite", "all", "--max-n", "4", "--max-k", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["ok"], true);
    assert_eq!(report["failed"], 0);
    assert_eq!(report["suites"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_words_and_skips() {
    let out = evenzeta(&["verify", "--suite", "words", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let out = evenzeta(&["verify", "--suite", "zeta", "--max-k", "3", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["skipped"].as_u64().unwrap() > 0);
    assert!(report["suites"][0]["first_failure"].is_null());
}

#[test]
fn examples_all_match() {
    for (section, count) in [("2", 3), ("3", 3), ("4", 6)] {
        let out = evenzeta(&["examples", "--section", section]);
        assert_eq!(out.status.code(), Some(0), "section {section}");
        let text = stdout(&out);
        assert_eq!(text.matches("\nMATCH").count() + usize::from(text.starts_with("MATCH")), count);
        assert!(!text.contains("MISMATCH"));
        assert!(text.ends_with(&format!("{count}/{count} identities match\n")));
    }
}

#[test]
fn output_is_deterministic() {
    let runs: &[&[&str]] = &[
        &["identity", "--kind", "mzsv", "--n", "3", "--poly", "x1*x2 + x1*x3 + x2*x3", "--format", "json"],
        &["verify", "--suite", "all", "--max-n", "3", "--max-k", "8"],
        &["examples", "--section", "4"],
    ];
    for args in runs {
        assert_eq!(evenzeta(args).stdout, evenzeta(args).stdout, "{args:?}");
    }
}

#[test]
fn out_file_round_trips() {
    let dir = std::env::temp_dir().join(format!("evenzeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("identity.json");
    let out = evenzeta(&[
        "identity", "--kind", "zeta", "--n", "3", "--poly", "x1^2*x2 - 3*x3", "--format", "json",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = IdentityDocument::from_json(&text).unwrap();
    assert_eq!(doc.to_json() + "\n", text);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_round_trip_over_suite_identities() {
    for n in 1..=4usize {
        let mut weights = vec![MultiPoly::one(n), MultiPoly::elementary(n, 2)];
        weights.extend((1..=3).map(|p| MultiPoly::power_sum(n, p)));
        let mut requests = vec![IdentityRequest {
            kind: IdentityKindArg::Bernoulli,
            n,
            weight: WeightInput::Mvec(vec![1; n]),
        }];
        for kind in [IdentityKindArg::Zeta, IdentityKindArg::Mzv, IdentityKindArg::Mzsv] {
            for f in &weights {
                requests.push(IdentityRequest {
                    kind,
                    n,
                    weight: WeightInput::Poly(f.render()),
                });
            }
        }
        for req in requests {
            let doc = build_identity(&req).unwrap();
            assert_eq!(IdentityDocument::from_json(&doc.to_json()).unwrap(), doc, "{req:?}");
        }
    }
}
