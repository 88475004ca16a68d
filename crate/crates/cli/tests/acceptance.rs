//! Acceptance criteria 1 to 9, run in order inside one test so the timed
//! ones do not compete for cores. Each criterion prints a PASS or FAIL line
//! on stderr (written directly, so it shows even when output is captured).

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use jointex_core::cointoss::simulate_with_workers;
use jointex_core::construction::general_recipe;
use jointex_core::random::random_dnf;
use jointex_core::verify::Coverage;
use jointex_core::{
    check_observations, count_sat, exact_probs, family, k_way_report, parse, render, simulate,
    truth_table, verify_theorem, witness, Dnf, Mode, RowCap, VerifyOptions,
};
use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    check(elapsed < limit, || {
        format!("took {elapsed:.2?}, limit {limit:?}")
    })
}

fn fixture(name: &str) -> Vec<u8> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read(path).expect("fixture")
}

fn table_matches(n: &str, name: &str) -> Outcome {
    let start = Instant::now();
    let o = Command::new(env!("CARGO_BIN_EXE_jointex"))
        .args(["table", "--n", n, "--conjunctions", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    check(o.status.success(), || format!("exit {:?}", o.status.code()))?;
    let expected = fixture(name);
    check(o.stdout == expected, || {
        format!("output differs from {name}")
    })?;
    within(elapsed, Duration::from_millis(100))?;
    let rows = expected.iter().filter(|&&b| b == b'\n').count() - 1;
    Ok(format!("{rows} rows byte-equal to {name} in {elapsed:.2?}"))
}

fn table_n3() -> Outcome {
    table_matches("3", "table3_all.csv")
}

fn table_n4() -> Outcome {
    let text = String::from_utf8(fixture("table4_all.csv")).unwrap();
    let last_column_zero = text.lines().skip(1).all(|l| l.ends_with(",0"));
    check(last_column_zero, || {
        "joint column of fixture not all zero".into()
    })?;
    table_matches("4", "table4_all.csv")
}

fn exhaustive() -> Outcome {
    let start = Instant::now();
    for n in 2..=16 {
        let opts = VerifyOptions {
            full_scan: n <= 12,
            cap: RowCap::default(),
        };
        let r = verify_theorem(n, Mode::Exhaustive, &opts).map_err(|e| e.to_string())?;
        check(r.verified(), || format!("n={n} not verified"))?;
        if n <= 12 {
            let ks: Vec<usize> = r.scan.iter().map(|c| c.k).collect();
            check(ks == (2..=n).collect::<Vec<_>>(), || {
                format!("n={n} scan sizes {ks:?}")
            })?;
            for c in &r.scan {
                let want = if c.k < n { c.subsets } else { 0 };
                check(c.nonzero == want, || {
                    format!("n={n} k={} {}/{}", c.k, c.nonzero, c.subsets)
                })?;
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("n=2..=16 verified, full scan n<=12, {elapsed:.2?}"))
}

fn symbolic() -> Outcome {
    let start = Instant::now();
    for n in 4..=512 {
        let r = verify_theorem(n, Mode::Symbolic, &VerifyOptions::default())
            .map_err(|e| e.to_string())?;
        check(r.verified(), || format!("n={n} not verified"))?;
        check(
            r.details.iter().all(|d| d.symbolic_ok == Some(true)),
            || format!("n={n} leave-one-out cube mismatch"),
        )?;
    }
    for n in 4..=12 {
        let r =
            verify_theorem(n, Mode::Both, &VerifyOptions::default()).map_err(|e| e.to_string())?;
        check(r.verified(), || format!("n={n} (both) not verified"))?;
        check(
            r.details.len() == n && r.details.iter().all(|d| d.agrees == Some(true)),
            || format!("n={n} symbolic cube and table product disagree"),
        )?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!(
        "n=4..=512 verified, n=4..=12 cube equals table product, {elapsed:.2?}"
    ))
}

fn observations() -> Outcome {
    let mut checked = 0;
    for n in 4..=10usize {
        let r = check_observations(n).map_err(|e| e.to_string())?;
        check(r.ok() && r.failures.is_empty(), || {
            format!("n={n}: {:?}", r.failure_counts)
        })?;
        check(r.coverage == Coverage::AllTuples, || {
            format!("n={n} partial coverage")
        })?;
        check(r.obs1_pairs == n * (n - 1) * (n - 2), || {
            format!("n={n} same-column count")
        })?;
        check(r.obs3_pairs == n * (n - 1) / 2, || {
            format!("n={n} mirrored count")
        })?;
        checked += r.obs1_pairs + r.obs1_columns + r.obs2_pairs + r.obs3_pairs + r.obs3_extensions;
    }
    Ok(format!(
        "n=4..=10, all tuples, {checked} products, 0 failures"
    ))
}

fn probabilities() -> Outcome {
    let r = |a, b| Ratio::new(a, b);
    let cap = RowCap::default();
    for (n, single, pair) in [(3, r(1, 2), r(1, 4)), (4, r(3, 8), r(3, 16))] {
        let p = exact_probs(n, cap).map_err(|e| e.to_string())?;
        check(p.singles.iter().all(|s| s.ratio() == single), || {
            format!("n={n} singles")
        })?;
        check(p.pairs.len() == n * (n - 1) / 2, || {
            format!("n={n} pair count")
        })?;
        check(p.pairs.iter().all(|q| q.p.ratio() == pair), || {
            format!("n={n} pairs")
        })?;
        check(p.joint.ratio() == r(0, 1) && p.joint.count == 0, || {
            format!("n={n} joint")
        })?;
    }
    for n in 3..=12usize {
        let formula = Ratio::new(n as u64 - 1, 1u64 << (n - 1));
        let fam = family(n).map_err(|e| e.to_string())?;
        for (j, prop) in fam.propositions.iter().enumerate() {
            let sat = count_sat(prop, n).map_err(|e| e.to_string())?;
            check(Ratio::new(sat, 1u64 << n) == formula, || {
                format!("n={n} P_{} has {sat} rows", j + 1)
            })?;
        }
        let p = exact_probs(n, cap).map_err(|e| e.to_string())?;
        check(p.singles.iter().all(|s| s.ratio() == formula), || {
            format!("n={n} exact_probs")
        })?;
    }
    Ok("n=3: 1/2, 1/4, 0; n=4: 3/8, 3/16, 0; (n-1)/2^(n-1) for n=3..=12".into())
}

fn monte_carlo() -> Outcome {
    let (n, samples, seed) = (3, 100_000, 20_240_601);
    let exact = exact_probs(n, RowCap::default()).map_err(|e| e.to_string())?;
    let sim = simulate(n, samples, seed).map_err(|e| e.to_string())?;
    check(sim.joint_occurrences == 0, || {
        format!("joint seen {} times", sim.joint_occurrences)
    })?;
    let mut worst: f64 = 0.0;
    for j in 1..=n {
        worst = worst.max((sim.single_freq(j) - exact.singles[j - 1].as_f64()).abs());
    }
    for pp in &exact.pairs {
        let f = sim.pair_freq(pp.i, pp.j).ok_or("missing pair")?;
        worst = worst.max((f - pp.p.as_f64()).abs());
    }
    worst = worst.max((sim.joint_freq() - exact.joint.as_f64()).abs());
    check(worst <= 0.01, || format!("max deviation {worst:.4}"))?;
    check(
        simulate(n, samples, seed).map_err(|e| e.to_string())? == sim,
        || "repeat run differs".into(),
    )?;
    for workers in [1, 2, 4, 7] {
        let other = simulate_with_workers(n, samples, seed, workers).map_err(|e| e.to_string())?;
        check(other == sim, || format!("{workers} workers differ"))?;
    }
    Ok(format!(
        "joint 0/{samples}, max deviation {worst:.4}, identical for 1, 2, 4, 7 workers"
    ))
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let tt = |x: &Dnf, n| truth_table(x, n).map_err(|e| e.to_string());

    // (a) conjunction against row-wise AND
    for i in 0..1000 {
        let n = 1 + i % 8;
        let x = random_dnf(&mut rng, n, 6);
        let y = random_dnf(&mut rng, n, 6);
        let lhs = tt(&x.and(&y), n)?;
        check(lhs == tt(&x, n)?.and(&tt(&y, n)?), || {
            format!("case {i}: {x} * {y}")
        })?;
    }

    // (b) a zero pair forces a zero product; only draws with a zero pair
    // between two non-empty formulas count
    let (mut cases, mut draws) = (0, 0u64);
    while cases < 500 {
        draws += 1;
        check(draws < 2_000_000, || format!("only {cases} cases found"))?;
        let n = 3 + cases % 3;
        let size = 3 + cases % 2;
        let xs: Vec<Dnf> = (0..size).map(|_| random_dnf(&mut rng, n, 3)).collect();
        let zero_pair = (0..size).any(|a| {
            (a + 1..size)
                .any(|b| !xs[a].is_zero() && !xs[b].is_zero() && xs[a].and(&xs[b]).is_zero())
        });
        if !zero_pair {
            continue;
        }
        cases += 1;
        let prod = Dnf::and_all(&xs);
        check(prod.is_zero(), || {
            format!("product {prod} of {xs:?} not zero")
        })?;
        check(tt(&prod, n)?.is_all_zero(), || {
            format!("table of {xs:?} not zero")
        })?;
        check(
            witness(&xs, n).map_err(|e| e.to_string())?.is_none(),
            || "witness found".into(),
        )?;
    }

    // (c) render then parse
    let mut round_trips = 0;
    for n in 2..=10 {
        for p in family(n).map_err(|e| e.to_string())?.propositions {
            let back = parse(&render(&p)).map_err(|e| e.to_string())?;
            check(back.dnf == p && !back.has_warnings(), || {
                format!("n={n}: {p}")
            })?;
            round_trips += 1;
        }
    }
    for i in 0..1000 {
        let n = 1 + i % 12;
        let x = random_dnf(&mut rng, n, 8);
        let back = parse(&render(&x)).map_err(|e| e.to_string())?;
        check(back.dnf == x, || format!("random {i}: {x}"))?;
        round_trips += 1;
    }
    Ok(format!(
        "1000 conjunctions, 500 zero-pair tuples ({draws} draws), {round_trips} round trips"
    ))
}

fn negative_control() -> Outcome {
    let cap = RowCap::default();
    let naive = general_recipe(2).map_err(|e| e.to_string())?;
    check(
        render(&naive.propositions[0]) == "A2'" && render(&naive.propositions[1]) == "A1'",
        || format!("naive recipe gave {:?}", naive.propositions),
    )?;
    let report = k_way_report(&naive.propositions, 2, 2, cap).map_err(|e| e.to_string())?;
    let w = report.entries[0].witness.as_ref();
    check(!report.entries[0].zero && w.is_some(), || {
        "naive P_1P_2 reported zero".into()
    })?;

    let fam = family(2).map_err(|e| e.to_string())?;
    check(
        render(&fam.propositions[0]) == "A1' A2" && render(&fam.propositions[1]) == "A1 A2'",
        || format!("family(2) gave {:?}", fam.propositions),
    )?;
    let report = k_way_report(&fam.propositions, 2, 2, cap).map_err(|e| e.to_string())?;
    check(report.all_zero(), || "family(2) pair nonzero".into())?;
    let r = verify_theorem(2, Mode::Exhaustive, &VerifyOptions::default())
        .map_err(|e| e.to_string())?;
    check(r.verified(), || "family(2) not verified".into())?;
    Ok(format!(
        "naive A2' * A1' satisfied at {}, family(2) verified",
        w.unwrap()
    ))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("n = 3 table", table_n3),
        ("n = 4 table", table_n4),
        ("exhaustive theorem check", exhaustive),
        ("symbolic theorem check", symbolic),
        ("observation suite", observations),
        ("exact probabilities", probabilities),
        ("Monte Carlo", monte_carlo),
        ("property suites", properties),
        ("negative control", negative_control),
    ];
    let mut failed = Vec::new();
    let mut stderr = std::io::stderr();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let line = match f() {
            Ok(detail) => format!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("criterion {}: FAIL {name}: {why}", i + 1)
            }
        };
        let _ = writeln!(stderr, "{line}");
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
