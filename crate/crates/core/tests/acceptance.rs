//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Run with `cargo test -p pairenum --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use pairenum::detmat::det_ratio_literal;
use pairenum::genfunc::{
    fixed_subset_count, multigraph_series, simple_genfunc_det, simple_genfunc_elementwise, simple_genfunc_harary,
    trace_genfunc_of_element, ELEMENT_LIMIT,
};
use pairenum::invariants::{component_dimension, is_group_fixed, reproduce_n4_generators, reynolds, Monomial};
use pairenum::oracle::{brute_multigraph_counts, brute_simple_counts};
use pairenum::perm::{enumerate_permutations, factorial, induce_pair_perm, num_edge_slots, EdgeIndexing, Permutation};
use pairenum::poly::binomial_power;

const CLI_TIME_LIMIT: Duration = Duration::from_secs(1);
const CROSS_PIPELINE_TIME_LIMIT: Duration = Duration::from_secs(120);
const DET_RATIO_TIME_LIMIT: Duration = Duration::from_secs(60);
const SCALE_TIME_LIMIT: Duration = Duration::from_secs(60);
const RANDOM_TRIPLES: usize = 200;
const RNG_SEED: u64 = 0x5eed_2024;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ints(cs: &[i64]) -> Vec<BigInt> {
    cs.iter().map(|&c| BigInt::from(c)).collect()
}

fn run_cli(args: &[&str]) -> Result<(String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_pairenum"))
        .args(args)
        .output()
        .map_err(|e| format!("cannot spawn binary: {e}"))?;
    let elapsed = start.elapsed();
    if !out.status.success() {
        return Err(format!(
            "`pairenum {}` exited with {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok((String::from_utf8_lossy(&out.stdout).into_owned(), elapsed))
}

fn parse_line(s: &str) -> Result<Vec<BigInt>, String> {
    pairenum::cli::parse_coeff_list(s.trim_end()).map_err(|e| e.to_string())
}

fn check_time(what: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn small_graph_vectors() -> Outcome {
    let expected = [
        ints(&[1]),
        ints(&[1, 1]),
        ints(&[1, 1, 1, 1]),
        ints(&[1, 1, 2, 3, 2, 1, 1]),
    ];
    let mut slowest = Duration::ZERO;
    for (k, want) in (1..=4).zip(&expected) {
        for method in ["det", "harary", "element", "brute"] {
            let n = k.to_string();
            let (stdout, elapsed) = run_cli(&["simple", "--n", &n, "--method", method])?;
            check_time(&format!("simple --n {k} --method {method}"), elapsed, CLI_TIME_LIMIT)?;
            slowest = slowest.max(elapsed);
            let got = parse_line(&stdout)?;
            if &got != want {
                return Err(format!("n = {k}, method {method}: got {got:?}, want {want:?}"));
            }
        }
    }
    Ok(format!("16 invocations, slowest {slowest:.2?}"))
}

fn cross_pipeline() -> Outcome {
    let start = Instant::now();
    for n in 1..=6 {
        let det = simple_genfunc_det(n).map_err(|e| e.to_string())?;
        let harary = simple_genfunc_harary(n).map_err(|e| e.to_string())?;
        let element = simple_genfunc_elementwise(n, ELEMENT_LIMIT).map_err(|e| e.to_string())?;
        let brute = brute_simple_counts(n).map_err(|e| e.to_string())?;
        for (name, other) in [("harary", &harary), ("element", &element), ("brute", &brute)] {
            if other.counts() != det.counts() {
                return Err(format!(
                    "n = {n}: det {:?} != {name} {:?}",
                    det.counts(),
                    other.counts()
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    check_time("cross-pipeline", elapsed, CROSS_PIPELINE_TIME_LIMIT)?;
    Ok(format!("n = 1..6, four methods agree, {elapsed:.2?}"))
}

fn det_ratio_identity() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 2..=5 {
        let idx = EdgeIndexing::new(n);
        for sigma in enumerate_permutations(n).map_err(|e| e.to_string())? {
            let p = induce_pair_perm(&sigma, &idx).map_err(|e| e.to_string())?;
            let ratio = det_ratio_literal(&p).map_err(|e| format!("{sigma}: {e}"))?;
            let factors: Vec<(usize, usize)> = p.cycle_type().nonzero().collect();
            let want = binomial_power(&factors);
            if ratio != want {
                return Err(format!("n = {n}, sigma = {sigma}: ratio {ratio}, product {want}"));
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    check_time("determinant ratios", elapsed, DET_RATIO_TIME_LIMIT)?;
    Ok(format!("{checked} permutations, exact division, {elapsed:.2?}"))
}

fn dimensions_match() -> Outcome {
    for n in 1..=6 {
        let g = simple_genfunc_det(n).map_err(|e| e.to_string())?;
        let mut sum = BigInt::zero();
        for (i, a) in g.counts().iter().enumerate() {
            let d = component_dimension(n, i).map_err(|e| e.to_string())?;
            if &d != a {
                return Err(format!("n = {n}, i = {i}: dimension {d}, coefficient {a}"));
            }
            sum += d;
        }
        if sum != g.total() {
            return Err(format!("n = {n}: dimensions sum to {sum}, g_n(1) = {}", g.total()));
        }
    }
    Ok("n = 1..6, every degree".into())
}

fn multigraph_oracle() -> Outcome {
    const CUTOFF: usize = 8;
    for n in 1..=5 {
        let series = multigraph_series(n, CUTOFF).map_err(|e| e.to_string())?;
        let brute = brute_multigraph_counts(n, CUTOFF).map_err(|e| e.to_string())?;
        if series.counts() != brute.counts() {
            return Err(format!(
                "n = {n}: series {:?}, brute {:?}",
                series.counts(),
                brute.counts()
            ));
        }
        if !series.counts()[0].is_one() {
            return Err(format!("n = {n}: constant term {}", series.counts()[0]));
        }
        if n == 2 && series.counts().iter().any(|c| !c.is_one()) {
            return Err(format!("n = 2 is not all ones: {:?}", series.counts()));
        }
    }
    Ok(format!("n = 1..5, degrees 0..={CUTOFF}"))
}

fn n4_example() -> Outcome {
    let report = reproduce_n4_generators().map_err(|e| e.to_string())?;
    if report.passed() {
        Ok(format!("{} checks", report.checks.len()))
    } else {
        Err(report.to_string())
    }
}

fn scale_n20() -> Outcome {
    let (stdout, elapsed) = run_cli(&["simple", "--n", "20", "--method", "det"])?;
    check_time("simple --n 20", elapsed, SCALE_TIME_LIMIT)?;
    let a = parse_line(&stdout)?;
    let m = num_edge_slots(20);
    if m != 190 || a.len() != m + 1 {
        return Err(format!("expected {} coefficients, got {}", m + 1, a.len()));
    }
    if !a[0].is_one() || !a[m].is_one() {
        return Err(format!("end coefficients {} and {}", a[0], a[m]));
    }
    if let Some(i) = (0..=m).find(|&i| a[i] != a[m - i]) {
        return Err(format!("a[{i}] = {} but a[{}] = {}", a[i], m - i, a[m - i]));
    }
    Ok(format!("m = {m}, symmetric, {elapsed:.2?}"))
}

fn monomials_up_to(m: usize, max_degree: u32) -> Vec<Monomial> {
    fn go(m: usize, pos: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == m {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=rest {
            cur.push(e);
            go(m, pos + 1, rest - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, 0, max_degree, &mut Vec::with_capacity(m), &mut out);
    out
}

fn property_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(RNG_SEED);
    for _ in 0..RANDOM_TRIPLES {
        let n = rng.random_range(1..=6usize);
        let order: u64 = factorial(n).try_into().expect("6! fits in u64");
        let sigma = Permutation::nth_lexicographic(n, rng.random_range(0..order));
        let m = num_edge_slots(n);
        let i = rng.random_range(0..=m);
        let p = induce_pair_perm(&sigma, &EdgeIndexing::new(n)).map_err(|e| e.to_string())?;
        let ct = p.cycle_type();
        let by_sum = fixed_subset_count(&ct, i);
        let by_poly = trace_genfunc_of_element(&ct).coeff(i);
        if by_sum != by_poly {
            return Err(format!(
                "n = {n}, sigma = {sigma}, i = {i}: sum {by_sum}, polynomial {by_poly}"
            ));
        }
    }

    let monomials = monomials_up_to(num_edge_slots(4), 3);
    for mono in &monomials {
        let r = reynolds(mono, 4).map_err(|e| e.to_string())?;
        if !is_group_fixed(&r, 4).map_err(|e| e.to_string())? {
            return Err(format!("R({mono}) is not group-fixed"));
        }
    }
    Ok(format!(
        "{RANDOM_TRIPLES} random triples (seed {RNG_SEED:#x}), {} monomials at n = 4",
        monomials.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 small graph vectors from the CLI, every method", small_graph_vectors),
        ("2 det = harary = element = brute for n <= 6", cross_pipeline),
        (
            "3 literal determinant ratio equals the binomial product",
            det_ratio_identity,
        ),
        ("4 invariant dimensions equal graph counts", dimensions_match),
        ("5 multigraph series equals the brute-force oracle", multigraph_oracle),
        ("6 n = 4 generator expansions", n4_example),
        ("7 n = 20 by class summation", scale_n20),
        ("8 fixed-subset counts and Reynolds invariance", property_suite),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
