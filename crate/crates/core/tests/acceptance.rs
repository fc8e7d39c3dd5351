//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pathenergy::closed_form::{min_unicyclic_spectral_radius, unicyclic_energy_closed, unicyclic_rho12};
use pathenergy::graph::{generate, random_connected, AttachmentShape, GraphFamily};
use pathenergy::verify::{exhaustive_small_graphs, run_suite, CheckId, Corpus, Status, SuiteOptions, VerificationReport};
use pathenergy::{eigenvalues, path_energy, path_matrix, path_matrix_with, path_spectrum, PathMatrixOptions, Spectrum, SymmetricMatrix};
use rand::Rng;

const TOL: f64 = 1e-7;
const SHAPE_SEED: u64 = 42;
const RANDOM_SEED: u64 = 7;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Corpora {
    exhaustive: Corpus,
    random7: Corpus,
    sweep25: Corpus,
    sweep60: Corpus,
}

fn suite(corpus: &Corpus, checks: &[CheckId], workers: usize) -> Result<VerificationReport, String> {
    run_suite(corpus, checks, &SuiteOptions { tolerance: TOL, workers }).map_err(|e| e.to_string())
}

/// Every record of `check` passed and every graph of the corpus produced one.
fn all_pass(report: &VerificationReport, check: CheckId, expected_records: usize) -> Outcome {
    let records: Vec<_> = report.records_for(check).collect();
    if records.len() != expected_records {
        return Err(format!("{check}: {} records, expected {expected_records}", records.len()));
    }
    match records.iter().find(|r| r.status != Status::Pass) {
        Some(r) => Err(format!("{check} {} {}: {}", r.subject, r.status, r.witness.clone().unwrap_or_default())),
        None => Ok(format!("{check}: {} records pass", records.len())),
    }
}

fn criterion_1(c: &Corpora) -> Outcome {
    let a = suite(&c.exhaustive, &[CheckId::Oracle], 0)?;
    let b = suite(&c.random7, &[CheckId::Oracle], 0)?;
    let first = all_pass(&a, CheckId::Oracle, c.exhaustive.len())?;
    all_pass(&b, CheckId::Oracle, c.random7.len())?;
    Ok(format!("{first} on n <= 6; {} random n = 7 graphs equal", c.random7.len()))
}

fn criterion_2(c: &Corpora) -> Outcome {
    let report = suite(&c.exhaustive, &[CheckId::T1, CheckId::T3], 0)?;
    all_pass(&report, CheckId::T1, c.exhaustive.len())?;
    all_pass(&report, CheckId::T3, c.exhaustive.len())?;
    let trees = c.exhaustive.graphs.iter().filter(|g| g.graph.is_tree()).count();
    let complete = c.exhaustive.graphs.iter().filter(|g| g.graph.is_complete()).count();
    Ok(format!("{} graphs ({trees} trees, {complete} complete), equality both ways", c.exhaustive.len()))
}

fn criterion_3(c: &Corpora) -> Outcome {
    let mut total = 0;
    for corpus in [&c.exhaustive, &c.random7, &c.sweep25] {
        let report = suite(corpus, &[CheckId::T2], 0)?;
        all_pass(&report, CheckId::T2, corpus.len())?;
        total += corpus.len();
    }
    Ok(format!("degree bound holds on all pairs of {total} graphs"))
}

fn close_multiset(got: &Spectrum, want: &[f64], tol: f64) -> bool {
    let want = Spectrum::from_values(want.to_vec());
    got.max_abs_diff(&want).is_some_and(|d| d <= tol)
}

fn criterion_4(c: &Corpora) -> Outcome {
    let report = suite(&c.sweep25, &[CheckId::T4], 0)?;
    let pairs: usize = (3..=25).map(|n| n - 2).sum();
    all_pass(&report, CheckId::T4, c.sweep25.len() + pairs)?;

    let s33 = 33f64.sqrt();
    for shape in AttachmentShape::all(SHAPE_SEED) {
        let g = generate(GraphFamily::Unicyclic { n: 5, k: 3, shape }).map_err(|e| e.to_string())?;
        let spec = path_spectrum(&path_matrix(&g)).map_err(|e| e.to_string())?;
        if !close_multiset(&spec, &[-2.0, -2.0, -1.0, (5.0 + s33) / 2.0, (5.0 - s33) / 2.0], TOL) {
            return Err(format!("U(5,3) {shape}: {spec:?}"));
        }
    }
    let c4 = path_spectrum(&path_matrix(&generate(GraphFamily::Cycle { n: 4 }).unwrap())).unwrap();
    if !close_multiset(&c4, &[-2.0, -2.0, -2.0, 6.0], TOL) {
        return Err(format!("C4: {c4:?}"));
    }
    Ok(format!("{} graphs match, shapes agree, U(5,3) and C4 spot values", c.sweep25.len()))
}

fn criterion_5(c: &Corpora) -> Outcome {
    let report = suite(&c.sweep25, &[CheckId::T7], 0)?;
    all_pass(&report, CheckId::T7, c.sweep25.len())?;
    let g = generate(GraphFamily::Unicyclic { n: 10, k: 3, shape: AttachmentShape::PendantPath }).unwrap();
    let pe = path_energy(&path_spectrum(&path_matrix(&g)).unwrap());
    if (pe - 20.0).abs() > TOL {
        return Err(format!("PE(U(10,3)) = {pe}"));
    }
    Ok(format!("{} graphs match, PE(U(10,3)) = {pe:.9}", c.sweep25.len()))
}

fn criterion_6(c: &Corpora) -> Outcome {
    let report = suite(&c.sweep60, &[CheckId::C2], 1)?;
    all_pass(&report, CheckId::C2, 60 - 3)?;
    Ok("strictly increasing in k for 4 <= n <= 60, margin > 1e-9".into())
}

fn criterion_7(c: &Corpora) -> Outcome {
    let report = suite(&c.sweep60, &[CheckId::T8], 1)?;
    let max: Vec<_> = report.records_for(CheckId::T8).filter(|r| r.subject.ends_with("max")).collect();
    if max.len() != 58 {
        return Err(format!("{} max records", max.len()));
    }
    if let Some(r) = max.iter().find(|r| r.status != Status::Pass) {
        return Err(format!("{}: {}", r.subject, r.computed));
    }
    Ok("max PE = 4(n-1) only at k = n for 3 <= n <= 60".into())
}

fn criterion_8(c: &Corpora) -> Outcome {
    for k in [3, 4] {
        let rho2 = unicyclic_rho12(7, k).unwrap().1;
        if rho2.abs() >= 1e-9 {
            return Err(format!("rho2(7,{k}) = {rho2}"));
        }
        let g = generate(GraphFamily::Unicyclic { n: 7, k, shape: AttachmentShape::PendantStar }).unwrap();
        let spec = path_spectrum(&path_matrix(&g)).unwrap();
        if spec.values()[1].abs() > TOL {
            return Err(format!("computed rho2(7,{k}) = {}", spec.values()[1]));
        }
    }
    for n in 8..=60usize {
        let min = (3..=n).map(|k| unicyclic_energy_closed(n, k).unwrap()).fold(f64::INFINITY, f64::min);
        let stated = 2.0 * min_unicyclic_spectral_radius(n);
        if min != 2.0 * n as f64 || min - stated <= 1e-6 {
            return Err(format!("n = {n}: min {min}, stated {stated}"));
        }
    }

    let report = suite(&c.sweep60, &[CheckId::L5, CheckId::T8], 1)?;
    let l5: Vec<&str> = report
        .records_for(CheckId::L5)
        .filter(|r| r.status != Status::Pass)
        .map(|r| r.subject.as_str())
        .collect();
    if l5 != ["(7,3)", "(7,4)"] || report.records_for(CheckId::L5).any(|r| r.status == Status::Fail) {
        return Err(format!("L5 non-pass subjects {l5:?}"));
    }
    let t8: Vec<String> = report
        .records_for(CheckId::T8)
        .filter(|r| r.status == Status::Discrepancy)
        .map(|r| r.subject.clone())
        .collect();
    let expected: Vec<String> = (8..=60).map(|n| format!("n={n} min")).collect();
    if t8 != expected {
        return Err(format!("T8 discrepancies {t8:?}"));
    }
    if report.exit_code() != 0 {
        return Err("suite exit code nonzero".into());
    }
    Ok(format!(
        "L5 discrepancies exactly at (7,3), (7,4); T8 min discrepancies for 8 <= n <= 60; exit {}",
        report.exit_code()
    ))
}

fn criterion_9(c: &Corpora) -> Outcome {
    let mut rng = common::rng(9);
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let n = rng.gen_range(1..=20);
        let a = common::random_symmetric(&mut rng, n, 10);
        let jacobi = eigenvalues(&SymmetricMatrix::new(n, a.clone()).unwrap(), 1e-10).map_err(|e| e.to_string())?;
        let oracle = common::sturm_eigenvalues(n, &a);
        let diff = jacobi.values().iter().zip(&oracle).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        if diff >= TOL {
            return Err(format!("matrix {i} (n = {n}): deviation {diff:e}"));
        }
        worst = worst.max(diff);
    }

    let mut spectra = 0;
    for corpus in [&c.exhaustive, &c.random7, &c.sweep25] {
        for cg in &corpus.graphs {
            let p = path_matrix(&cg.graph);
            let spec = path_spectrum(&p).map_err(|e| e.to_string())?;
            let n = p.order() as f64;
            let fro = p.frobenius_sq();
            let trace_ok = spec.trace().abs() < 1e-8 * n;
            let frobenius_ok = if fro == 0.0 {
                spec.sum_of_squares() == 0.0
            } else {
                (spec.sum_of_squares() - fro).abs() < 1e-6 * fro
            };
            if !(trace_ok && frobenius_ok) {
                return Err(format!("identity violated on {}", cg.id));
            }
            spectra += 1;
        }
    }
    Ok(format!("100 matrices within {worst:.1e} of Sturm bisection; identities hold on {spectra} spectra"))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn criterion_10() -> Outcome {
    let g = random_connected(200, 2000, RANDOM_SEED).map_err(|e| e.to_string())?;
    let single = PathMatrixOptions { use_blocks: true, workers: 1 };
    let (_, big) = timed(|| path_matrix_with(&g, &single));
    if big >= Duration::from_secs(60) {
        return Err(format!("n = 200, |E| = 2000 took {big:?}"));
    }

    let chain = common::triangle_chain(50);
    let naive = PathMatrixOptions { use_blocks: false, workers: 1 };
    let (with_blocks, fast) = timed(|| path_matrix_with(&chain, &single));
    let (without, slow) = timed(|| path_matrix_with(&chain, &naive));
    if with_blocks != without {
        return Err("block preprocessing changed the triangle-chain matrix".into());
    }
    if fast >= slow {
        return Err(format!("blocks {fast:?} not faster than naive {slow:?}"));
    }
    Ok(format!("n = 200: {big:.2?}; triangle chain: blocks {fast:.2?} vs naive {slow:.2?}, identical"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpora = Corpora {
        exhaustive: exhaustive_small_graphs(6).expect("n <= 6 corpus"),
        random7: Corpus::random_connected(7, 500, RANDOM_SEED).expect("random corpus"),
        sweep25: Corpus::unicyclic_sweep(3, 25, SHAPE_SEED).expect("sweep"),
        sweep60: Corpus::unicyclic_sweep(3, 60, SHAPE_SEED).expect("sweep"),
    };

    let criteria: [Criterion; 10] = [
        ("oracle equivalence", Box::new(|| criterion_1(&corpora))),
        ("radius and energy bounds with equality cases", Box::new(|| criterion_2(&corpora))),
        ("entrywise degree bound", Box::new(|| criterion_3(&corpora))),
        ("unicyclic closed-form spectrum", Box::new(|| criterion_4(&corpora))),
        ("piecewise unicyclic energy", Box::new(|| criterion_5(&corpora))),
        ("energy monotone in cycle length", Box::new(|| criterion_6(&corpora))),
        ("maximum unicyclic energy at the cycle", Box::new(|| criterion_7(&corpora))),
        ("documented boundary discrepancies", Box::new(|| criterion_8(&corpora))),
        ("eigensolver validation and spectral identities", Box::new(|| criterion_9(&corpora))),
        ("performance and block preprocessing", Box::new(criterion_10)),
    ];

    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (outcome, took) = timed(run);
        match outcome {
            Ok(detail) => println!("PASS  {:>2}  {name}: {detail} [{took:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}: {detail} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.2?}", criteria.len() - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
