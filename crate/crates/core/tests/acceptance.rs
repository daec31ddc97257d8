//! Acceptance criteria, one line of output each. Runs as a plain binary so
//! the lines are visible under `cargo test`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hoeffspecht::algebra::{indicator, integer, rank_of_span, ModuleVector};
use hoeffspecht::characters::{character_table, dimension, two_row_character};
use hoeffspecht::combinatorics::{enumerate_permutations, enumerate_subsets, factorial, standard_tableau_count, Subset, Tableau};
use hoeffspecht::hoeffding::{character_projection_oracle, decompose, project, IsotypicProjector, DEFAULT_ORACLE_CEILING};
use hoeffspecht::specht::{lift_to_hoeffding, polytabloid, specht_basis};
use hoeffspecht::verify::{bench, random_module_vector, verify_decomposition, verify_shift_orthogonality, RunConfig};
use hoeffspecht::Error;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn worked_example() -> Outcome {
    let t = Tableau::new(vec![1, 2, 3, 4], vec![5, 6]).unwrap();
    let start = Instant::now();
    let p = polytabloid(&t);
    let elapsed = start.elapsed();
    let mut expect = ModuleVector::zero(6, 2).unwrap();
    for (s, v) in [(&[5, 6], 1), (&[1, 6], -1), (&[5, 2], -1), (&[1, 2], 1)] {
        expect.set(&Subset::new(6, s).unwrap(), integer(v));
    }
    ensure(p == expect, || format!("got {p:?}"))?;
    within(elapsed, Duration::from_millis(1), "polytabloid")?;
    Ok(format!("1_56 - 1_16 - 1_25 + 1_12 reproduced in {elapsed:?}"))
}

fn theorem_equivalence() -> Outcome {
    let mut cases = 0;
    let mut n7_time = Duration::ZERO;
    for n in 4..=7 {
        let start = Instant::now();
        for m in 1..=n / 2 {
            let projectors = IsotypicProjector::all(n, m, DEFAULT_ORACLE_CEILING).map_err(|e| e.to_string())?;
            for t in 0..20u64 {
                let f = random_module_vector(n, m, 1000 * n as u64 + 100 * m as u64 + t).unwrap();
                for p in &projectors {
                    let l = p.order();
                    let oracle = p.apply(&f).unwrap();
                    ensure(oracle == project(&f, l).unwrap(), || format!("mismatch at n={n} m={m} l={l} trial {t}"))?;
                    cases += 1;
                }
            }
        }
        if n == 7 {
            n7_time = start.elapsed();
        }
    }
    within(n7_time, Duration::from_secs(300), "n = 7")?;
    Ok(format!("{cases} (vector, l) projections identical; n = 7 in {n7_time:?}"))
}

fn dimension_identities() -> Outcome {
    let mut checked = 0;
    for n in 2..=8 {
        for m in 1..=n / 2 {
            let indicators: Vec<_> = enumerate_subsets(n, m).unwrap().iter().map(indicator).collect();
            for l in 0..=m {
                let image: Vec<_> = indicators.iter().map(|e| project(e, l).unwrap()).collect();
                let rank = rank_of_span(&image).unwrap() as u64;
                let dim = dimension(n, l).unwrap();
                let tableaux = standard_tableau_count(n, l).unwrap();
                ensure(rank == dim && dim == tableaux, || {
                    format!("n={n} m={m} l={l}: rank {rank}, dimension {dim}, tableaux {tableaux}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n, m, l) ranks equal C(n,l) - C(n,l-1)"))
}

fn decomposition_suite() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for n in 2..=10 {
        for m in 1..=(n / 2).min(5) {
            let cfg = RunConfig::new(n, m, 20_240 + n as u64, 20).unwrap();
            let r = verify_decomposition(&cfg).map_err(|e| e.to_string())?;
            ensure(r.passed(), || r.render())?;
            checks += r.checks.len();
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(120), "decomposition suite")?;
    Ok(format!("{checks} checks passed in {elapsed:?}"))
}

fn character_sanity() -> Outcome {
    let mut perms = 0;
    for n in 2..=7 {
        for x in enumerate_permutations(n, 9).unwrap() {
            let chi = two_row_character(&x, 1).unwrap();
            ensure(chi == x.fixed_points() as i64 - 1, || format!("chi^(n-1,1)({x}) = {chi}"))?;
            perms += 1;
        }
    }
    for n in 1..=8 {
        let table = character_table(n, n / 2).unwrap();
        for l in 0..=n / 2 {
            let s = table.column_pairing(l, l);
            ensure(s == factorial(n) as i128, || format!("n={n} l={l}: sum {s}"))?;
        }
    }
    Ok(format!("fix - 1 on {perms} permutations; first orthogonality for n <= 8"))
}

fn shifted_orthogonality() -> Outcome {
    let start = Instant::now();
    let cfg = RunConfig::new(6, 2, 77, 20).unwrap();
    let r = verify_shift_orthogonality(&cfg).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r.passed(), || r.render())?;
    for overlap in 0..=2 {
        let name = format!("E[f(X) h(X')] = 0, (j, l) = (1, 2), r = {overlap}");
        let count = r.checks.iter().filter(|c| c.name == name).count();
        ensure(count == 20, || format!("{name}: {count} checks"))?;
    }
    ensure(r.checks.iter().all(|c| !c.name.contains("(1, 1)") && !c.name.contains("(2, 2)")), || {
        "j = l must not be asserted".to_string()
    })?;
    within(elapsed, Duration::from_secs(10), "shift suite")?;
    Ok(format!("{} zero averages over S_6, r = 0..2, in {elapsed:?}", r.checks.len()))
}

fn specht_span() -> Outcome {
    let mut checked = 0;
    for n in 2..=7 {
        for m in 1..=n / 2 {
            let indicators: Vec<_> = enumerate_subsets(n, m).unwrap().iter().map(indicator).collect();
            for l in 1..=m {
                let lifted: Vec<_> = specht_basis(n, l).unwrap().iter().map(|v| lift_to_hoeffding(v, m).unwrap()).collect();
                let image: Vec<_> = indicators.iter().map(|e| project(e, l).unwrap()).collect();
                let union: Vec<_> = lifted.iter().chain(&image).cloned().collect();
                let (a, b, c) = (
                    rank_of_span(&lifted).unwrap(),
                    rank_of_span(&image).unwrap(),
                    rank_of_span(&union).unwrap(),
                );
                ensure(a == b && b == c, || format!("n={n} m={m} l={l}: ranks {a}, {b}, {c}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n, m, l) spans coincide"))
}

fn performance() -> Outcome {
    let h = random_module_vector(12, 6, 12).unwrap();
    let start = Instant::now();
    let d = decompose(&h).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(d.reconstruct() == h && d.kernels.len() == 6 && d.components.len() == 7, || {
        "incomplete decomposition".to_string()
    })?;
    within(elapsed, Duration::from_secs(60), "n = 12, m = 6 decomposition")?;
    ensure(
        matches!(
            character_projection_oracle(&h, 1, DEFAULT_ORACLE_CEILING),
            Err(Error::Ceiling { n: 12, .. })
        ),
        || "oracle should refuse n = 12".to_string(),
    )?;
    let mut lines = vec![format!("n=12,m=6 decomposition {elapsed:?}; oracle refused (12! terms)")];
    for (n, m) in [(7, 2), (7, 3), (8, 2)] {
        let b = bench(n, m, 5, DEFAULT_ORACLE_CEILING).map_err(|e| e.to_string())?;
        ensure(b.agree == Some(true), || format!("routes disagree at n={n} m={m}"))?;
        ensure(b.kernel_faster() == Some(true), || format!("n={n} m={m}: kernel {:?} vs oracle {:?}", b.kernel, b.oracle))?;
        lines.push(format!("n={n},m={m} kernel {:?} < oracle {:?}", b.kernel, b.oracle.unwrap()));
    }
    Ok(lines.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 worked polytabloid example", worked_example),
        ("2 character projection = Hoeffding projection", theorem_equivalence),
        ("3 dimension identities", dimension_identities),
        ("4 decomposition suite", decomposition_suite),
        ("5 character sanity", character_sanity),
        ("6 shifted orthogonality", shifted_orthogonality),
        ("7 Specht span identity", specht_span),
        ("8 kernel route performance", performance),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(msg) => println!("PASS [{name}] {msg} ({:.2?})", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{name}] {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
