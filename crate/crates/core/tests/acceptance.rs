//! Acceptance suite: one PASS/FAIL line per criterion, each with its time
//! budget. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_traits::Zero;

use evenzeta::bernoulli_sums::{bernoulli_identity, verify_bernoulli_identity, MVector};
use evenzeta::mzv::{
    mzsv_identity, mzv_identity, mzv_lhs_exact, mzv_numeric, power_sum_2, verify_mzv_identity,
};
use evenzeta::quasi_shuffle::{sbar, star, verify_symmetric_sums, NCPoly, Word};
use evenzeta::rationals::{factorial, int, rat};
use evenzeta::tables::check_invariants;
use evenzeta::zeta::{
    eval_identity_rhs, zeta_even, zeta_identity_monomial, PiValue, WeightedSumIdentity,
};
use evenzeta::{parse_poly, MultiPoly, Rational, UniPoly};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: evenzeta::Error) -> String {
    e.to_string()
}

/// A polynomial in `k` written with the `x1` variable replaced by `k`.
fn k_poly(text: &str) -> UniPoly {
    let f = parse_poly(&text.replace('k', "x1"), 1).expect("reference polynomial parses");
    let top = f.total_degree().unwrap_or(0) as usize;
    let mut c = vec![Rational::zero(); top + 1];
    for (e, v) in f.terms() {
        c[e[0] as usize] = v.clone();
    }
    UniPoly::from_coeffs(c)
}

fn same_terms(got: &[UniPoly], expected: &[&str]) -> bool {
    let want: Vec<UniPoly> = expected.iter().map(|t| k_poly(t)).collect();
    let len = got.len().max(want.len());
    (0..len).all(|l| {
        got.get(l).cloned().unwrap_or_else(UniPoly::zero)
            == want.get(l).cloned().unwrap_or_else(UniPoly::zero)
    })
}

fn mv(v: &[u32]) -> MVector {
    MVector::new(v.to_vec()).unwrap()
}

const FOUR_FOLD: [[u32; 4]; 3] = [[0, 0, 0, 0], [2, 0, 0, 0], [3, 0, 0, 0]];

fn bernoulli_examples() -> Outcome {
    let expected: [&[&str]; 3] = [
        &["-1/3*(k+1)*(2*k+1)*(2*k+3)", "-2/3*k"],
        &[
            "-1/120*k*(k+1)*(2*k+1)*(2*k+3)*(4*k+3)",
            "-1/24*k*(4*k^2-6*k+3)",
            "-1/160*(2*k-5)",
        ],
        &[
            "-1/240*k*(k+1)*(2*k+1)*(2*k+3)*(4*k^2+6*k+1)",
            "-1/96*k*(12*k^3-12*k^2-11*k+9)",
            "-1/960*(2*k-5)*(13*k-9)",
        ],
    ];
    for (m, want) in FOUR_FOLD.iter().zip(expected) {
        let id = bernoulli_identity(&mv(m)).map_err(err)?;
        ensure(same_terms(&id.rhs, want), || format!("m={m:?} differs"))?;
    }
    Ok("3/3 displays equal".into())
}

fn zeta_examples() -> Outcome {
    let expected: [&[&str]; 3] = [
        &["1/24*(k+1)*(2*k+1)*(2*k+3)", "-2*k"],
        &[
            "1/960*k*(k+1)*(2*k+1)*(2*k+3)*(4*k+3)",
            "-1/8*k*(4*k^2-6*k+3)",
            "9/8*(2*k-5)",
        ],
        &[
            "1/1920*k*(k+1)*(2*k+1)*(2*k+3)*(4*k^2+6*k+1)",
            "-1/32*k*(12*k^3-12*k^2-11*k+9)",
            "3/16*(2*k-5)*(13*k-9)",
        ],
    ];
    for (m, want) in FOUR_FOLD.iter().zip(expected) {
        let id = zeta_identity_monomial(&mv(m)).map_err(err)?;
        ensure(same_terms(&id.terms, want), || format!("m={m:?} differs"))?;
    }
    Ok("3/3 displays equal".into())
}

fn four_fold_weights() -> [MultiPoly; 3] {
    [
        MultiPoly::one(4),
        MultiPoly::power_sum(4, 2),
        MultiPoly::power_sum(4, 3),
    ]
}

fn mzv_examples() -> Outcome {
    let mzv: [&[&str]; 3] = [
        &["35/64", "-5/16"],
        &["7/128*k*(10*k-3)", "-1/32*(10*k^2+9*k-30)", "3/16*(2*k-5)"],
        &[
            "7/512*k*(40*k^2-18*k+3)",
            "-1/128*(40*k^3+54*k^2-174*k+15)",
            "3/32*(2*k-5)*(3*k+2)",
        ],
    ];
    let mzsv: [&[&str]; 3] = [
        &["1/192*(4*k-5)*(8*k^2-20*k+3)", "-1/16*(4*k-7)"],
        &[
            "1/1920*k*(128*k^4-600*k^3+920*k^2-600*k+227)",
            "-1/96*(2*k-3)*(16*k^2-63*k+68)",
            "-1/16*(2*k-5)",
        ],
        &[
            "1/7680*k*(256*k^5-1440*k^4+2760*k^3-2400*k^2+1664*k-435)",
            "-1/128*(32*k^4-184*k^3+318*k^2-136*k-51)",
            "15/32*(k-4)*(2*k-5)",
        ],
    ];
    for (f, want) in four_fold_weights().iter().zip(mzv) {
        let id = mzv_identity(f, 4).map_err(err)?;
        ensure(same_terms(&id.terms, want), || format!("mzv F={f} differs"))?;
    }
    for (f, want) in four_fold_weights().iter().zip(mzsv) {
        let id = mzsv_identity(f, 4).map_err(err)?;
        ensure(same_terms(&id.terms, want), || format!("mzsv F={f} differs"))?;
    }
    Ok("6/6 displays equal".into())
}

fn monomial_grid() -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        for v in (0..n).map(|_| 0..=3u32).multi_cartesian_product() {
            if v.iter().sum::<u32>() <= 3 {
                out.push(v);
            }
        }
    }
    out
}

fn bernoulli_brute_force() -> Outcome {
    let mut checked = 0;
    for m in monomial_grid() {
        let id = bernoulli_identity(&mv(&m)).map_err(err)?;
        for k in m.len() as u64..=12 {
            let check = verify_bernoulli_identity(&id, k).map_err(err)?;
            ensure(check.holds(), || format!("m={m:?} k={k}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (m, k) pairs exact"))
}

fn symmetric_family(n: usize) -> Vec<MultiPoly> {
    vec![
        MultiPoly::one(n),
        MultiPoly::power_sum(n, 1),
        MultiPoly::power_sum(n, 2),
        MultiPoly::power_sum(n, 3),
        MultiPoly::elementary(n, 2),
    ]
}

fn mzv_cross_path() -> Outcome {
    let mut checked = 0;
    for n in 1..=4usize {
        for f in symmetric_family(n) {
            for id in [mzv_identity(&f, n), mzsv_identity(&f, n)] {
                let id = id.map_err(err)?;
                for k in n as u64..=10 {
                    let check = verify_mzv_identity(&id, k).map_err(err)?;
                    ensure(check.holds(), || format!("{:?} n={n} F={f} k={k}", id.kind))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (F, n, kind, k) cases exact"))
}

fn two_fold_baseline() -> Outcome {
    let one = MultiPoly::one(2);
    let id = mzv_identity(&one, 2).map_err(err)?;
    ensure(id.terms == vec![UniPoly::constant(rat(3, 4))], || {
        format!("terms are {:?}", id.terms)
    })?;
    for k in 2..=10u64 {
        let lhs = mzv_lhs_exact(&one, 2, k, false).map_err(err)?;
        let expected = zeta_even(k as u32).scale(&rat(3, 4));
        ensure(lhs == expected, || format!("lhs at k={k}"))?;
        ensure(eval_identity_rhs(&id, k).map_err(err)? == expected, || {
            format!("rhs at k={k}")
        })?;
    }
    Ok("sum zeta(2i,2k-2i) = 3/4 zeta(2k) for k = 2..10".into())
}

fn word(letters: &[u32]) -> NCPoly {
    NCPoly::word(Word::new(letters.to_vec()).unwrap())
}

fn word_sweep() -> Outcome {
    let mut multisets = 0;
    for n in 1..=4usize {
        for kvec in (1..=3u32).combinations_with_replacement(n) {
            let report = verify_symmetric_sums(&kvec).map_err(err)?;
            ensure(report.star.holds(), || format!("star form fails for {kvec:?}"))?;
            ensure(report.sbar.holds(), || format!("sbar form fails for {kvec:?}"))?;
            multisets += 1;
        }
    }
    // every word of length <= 2 over {1,2,3}; a few longer ones for commutativity
    let mut words: Vec<NCPoly> = vec![NCPoly::one()];
    for len in 1..=2usize {
        for w in (0..len).map(|_| 1..=3u32).multi_cartesian_product() {
            words.push(word(&w));
        }
    }
    let mut longer = words.clone();
    longer.extend([word(&[2, 1, 3]), word(&[4, 4, 1, 2]), word(&[1, 1, 1])]);
    for u in &longer {
        for v in &longer {
            ensure(star(u, v) == star(v, u), || format!("star not commutative on {u}, {v}"))?;
            ensure(sbar(u, v) == sbar(v, u), || format!("sbar not commutative on {u}, {v}"))?;
        }
    }
    let mut products = 0;
    for u in &words {
        for v in &words {
            for w in &words {
                ensure(star(&star(u, v), w) == star(u, &star(v, w)), || {
                    format!("star not associative on {u}, {v}, {w}")
                })?;
                ensure(sbar(&sbar(u, v), w) == sbar(u, &sbar(v, w)), || {
                    format!("sbar not associative on {u}, {v}, {w}")
                })?;
                products += 1;
            }
        }
    }
    Ok(format!("{multisets} multisets, {products} associativity triples"))
}

fn power_sum_lemma() -> Outcome {
    for p1 in 0..=5u32 {
        for p2 in 0..=5u32 {
            let p = power_sum_2(p1, p2);
            ensure(p.degree() == Some((p1 + p2 + 1) as usize), || {
                format!("degree of ({p1},{p2})")
            })?;
            let lead = Rational::new(
                factorial(p1 as u64) * factorial(p2 as u64),
                factorial((p1 + p2 + 1) as u64),
            );
            ensure(p.leading().map_err(err)? == lead, || format!("leading coefficient of ({p1},{p2})"))?;
            for k in 2..=30i64 {
                let brute = (1..k).fold(Rational::zero(), |acc, i| {
                    acc + int(i.pow(p1)) * int((k - i).pow(p2))
                });
                ensure(p.eval_int(k) == brute, || format!("({p1},{p2}) at k={k}"))?;
            }
        }
    }
    Ok("36 exponent pairs, k = 2..30".into())
}

fn weighted_identities_of_criteria() -> Result<Vec<WeightedSumIdentity>, String> {
    let mut ids = Vec::new();
    for m in monomial_grid() {
        ids.push(zeta_identity_monomial(&mv(&m)).map_err(err)?);
    }
    for n in 1..=4usize {
        for f in symmetric_family(n) {
            ids.push(mzv_identity(&f, n).map_err(err)?);
            ids.push(mzsv_identity(&f, n).map_err(err)?);
        }
    }
    Ok(ids)
}

fn structural_invariants() -> Outcome {
    let checks = check_invariants(12);
    for c in &checks {
        ensure(c.holds(), || format!("{}: {}", c.name, c.failure.clone().unwrap_or_default()))?;
    }
    let mut count = 0;
    for m in monomial_grid() {
        let id = bernoulli_identity(&mv(&m)).map_err(err)?;
        ensure(id.degree_bounds_hold(), || format!("bernoulli m={m:?}"))?;
        count += 1;
    }
    for id in weighted_identities_of_criteria()? {
        ensure(id.degree_bounds_hold(), || format!("{:?} n={} F={:?}", id.kind, id.n, id.weight))?;
        count += 1;
    }
    Ok(format!("{} table properties to m = 12, {count} identities within degree bounds", checks.len()))
}

fn numeric_sanity() -> Outcome {
    use std::f64::consts::PI;
    let z22 = mzv_numeric(&[2, 2], 10_000).map_err(err)?;
    let exact22 = PiValue::new(2, rat(1, 120)).to_f64();
    let rel = ((z22.value() - exact22) / exact22).abs();
    ensure(rel < 1e-3, || format!("zeta(2,2) relative error {rel:e}"))?;
    let z4 = mzv_numeric(&[4], 1_000).map_err(err)?;
    let abs = (z4.value() - PI.powi(4) / 90.0).abs();
    ensure(abs < 1e-8, || format!("zeta(4) error {abs:e}"))?;
    Ok(format!("zeta(2,2) rel err {rel:.2e}, zeta(4) abs err {abs:.2e}"))
}

struct Criterion {
    number: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { number: 1, title: "Bernoulli four-fold displays", budget: Duration::from_secs(1), run: bernoulli_examples },
        Criterion { number: 2, title: "zeta four-fold displays", budget: Duration::from_secs(1), run: zeta_examples },
        Criterion { number: 3, title: "MZV and MZSV four-fold displays", budget: Duration::from_secs(5), run: mzv_examples },
        Criterion { number: 4, title: "Bernoulli sums by brute force, n <= 4, |m| <= 3, k <= 12", budget: Duration::from_secs(30), run: bernoulli_brute_force },
        Criterion { number: 5, title: "MZV/MZSV symbolic vs partition expansion, n <= 4, k <= 10", budget: Duration::from_secs(60), run: mzv_cross_path },
        Criterion { number: 6, title: "two-fold constant weight gives 3/4 zeta(2k)", budget: Duration::from_secs(10), run: two_fold_baseline },
        Criterion { number: 7, title: "word-level symmetric sums and product laws", budget: Duration::from_secs(10), run: word_sweep },
        Criterion { number: 8, title: "two-term power sum closed form", budget: Duration::from_secs(5), run: power_sum_lemma },
        Criterion { number: 9, title: "table invariants and coefficient degree bounds", budget: Duration::from_secs(30), run: structural_invariants },
        Criterion { number: 10, title: "numeric partial sums", budget: Duration::from_secs(10), run: numeric_sanity },
    ];
    let mut failures = 0;
    for c in criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(_) if elapsed > c.budget => ("FAIL", format!("over budget of {:?}", c.budget)),
            Ok(msg) => ("PASS", msg),
            Err(msg) => ("FAIL", msg),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{status} criterion {:>2}: {} [{:.2}s] {detail}",
            c.number,
            c.title,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of 10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
