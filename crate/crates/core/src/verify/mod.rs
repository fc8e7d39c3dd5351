//! Ground-truth checks of the path-energy results over graph corpora.

mod corpus;
mod oracle;
mod report;

pub use corpus::{exhaustive_small_graphs, Corpus, CorpusGraph, CorpusSource, EXHAUSTIVE_MAX_ORDER};
pub use oracle::{oracle_disjoint_paths, ORACLE_MAX_ORDER, ORACLE_MAX_PATHS};
pub use report::{CheckRecord, CheckSummary, Counts, Status, VerificationReport};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::closed_form::{
    general_energy_bounds, general_radius_bounds, rho2_positive, rho2_positive_stated, unicyclic_energy_closed,
    unicyclic_energy_range, unicyclic_extremes, unicyclic_g, unicyclic_rho12, unicyclic_spectrum_closed,
};
use crate::connectivity::{path_matrix_with, PathMatrix, PathMatrixOptions};
use crate::error::{Error, Result};
use crate::graph::{write_graph6, Graph, GraphFamily};
use crate::parallel::ordered_map;
use crate::spectral::{path_energy, path_spectrum, spectral_radius, Spectrum};

/// Largest order the oracle comparison is run on.
pub const ORACLE_CHECK_MAX_ORDER: usize = 7;
/// Minimum gap between consecutive energies for strict monotonicity.
pub const MONOTONE_MARGIN: f64 = 1e-9;
pub const DEFAULT_TOLERANCE: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CheckId {
    /// Spectral radius bounds with equality at trees and complete graphs.
    T1,
    /// Entrywise degree bound.
    T2,
    /// Path-energy bounds with equality at trees and complete graphs.
    T3,
    /// Closed-form unicyclic spectrum, and shape independence of the matrix.
    T4,
    /// Sign of the second unicyclic eigenvalue against its stated range.
    L5,
    /// Piecewise unicyclic energy.
    T7,
    /// Unicyclic energy extremes.
    T8,
    /// Strict monotonicity of unicyclic energy in the cycle length.
    C2,
    /// Flow-based matrix against the exhaustive path oracle.
    #[serde(rename = "ORACLE")]
    Oracle,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::T1,
        CheckId::T2,
        CheckId::T3,
        CheckId::T4,
        CheckId::L5,
        CheckId::T7,
        CheckId::T8,
        CheckId::C2,
        CheckId::Oracle,
    ];

    fn needs_matrices(self) -> bool {
        !matches!(self, CheckId::L5 | CheckId::T8 | CheckId::C2)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckId::Oracle => f.write_str("ORACLE"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        CheckId::ALL
            .into_iter()
            .find(|c| c.to_string() == upper)
            .ok_or_else(|| Error::UnknownCheck(s.trim().to_string()))
    }
}

/// Parses a comma-separated check list; `all` selects every check.
pub fn parse_checks(list: &str) -> Result<Vec<CheckId>> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(CheckId::ALL.to_vec());
    }
    list.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
}

impl fmt::Display for CorpusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSource::Graph6Stream => f.write_str("graph6 stream"),
            CorpusSource::Exhaustive { max_n } => write!(f, "exhaustive connected graphs, n <= {max_n}"),
            CorpusSource::RandomConnected { n, count, seed } => {
                write!(f, "{count} random connected graphs, n = {n}, seed {seed}")
            }
            CorpusSource::UnicyclicSweep { n_min, n_max, seed } => {
                write!(f, "unicyclic sweep {n_min} <= n <= {n_max}, shape seed {seed}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOptions {
    /// Absolute tolerance for real-valued comparisons.
    pub tolerance: f64,
    pub workers: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { tolerance: DEFAULT_TOLERANCE, workers: 1 }
    }
}

struct Analysis {
    matrix: PathMatrix,
    spectrum: Spectrum,
    energy: f64,
    radius: f64,
}

fn analyse(g: &Graph) -> Result<Analysis> {
    let matrix = path_matrix_with(g, &PathMatrixOptions::default());
    let spectrum = path_spectrum(&matrix)?;
    let energy = path_energy(&spectrum);
    let radius = if spectrum.is_empty() { 0.0 } else { spectral_radius(&spectrum)? };
    Ok(Analysis { matrix, spectrum, energy, radius })
}

fn real(x: f64) -> String {
    format!("{x:.9}")
}

struct Ctx<'a> {
    corpus: &'a Corpus,
    analyses: &'a [Analysis],
    tol: f64,
    workers: usize,
}

impl Ctx<'_> {
    fn record(
        &self,
        check: CheckId,
        subject: impl Into<String>,
        status: Status,
        expected: String,
        computed: String,
        witness: impl FnOnce() -> String,
    ) -> CheckRecord {
        CheckRecord {
            check,
            subject: subject.into(),
            status,
            expected,
            computed,
            tolerance: self.tol,
            witness: (status != Status::Pass).then(witness),
        }
    }
}

/// Runs the selected checks. Records come out grouped by check in the
/// canonical check order, then in corpus order, so the report depends only
/// on the corpus, the checks and the tolerance.
pub fn run_suite(corpus: &Corpus, checks: &[CheckId], opts: &SuiteOptions) -> Result<VerificationReport> {
    if corpus.is_empty() {
        return Err(Error::param("empty corpus"));
    }
    if opts.tolerance.is_nan() || opts.tolerance <= 0.0 {
        return Err(Error::param(format!("tolerance must be positive, got {}", opts.tolerance)));
    }
    let mut checks = checks.to_vec();
    checks.sort_unstable();
    checks.dedup();

    let analyses: Vec<Analysis> = if checks.iter().any(|c| c.needs_matrices()) {
        ordered_map(&corpus.graphs, opts.workers, |cg| analyse(&cg.graph))
            .into_iter()
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    let ctx = Ctx { corpus, analyses: &analyses, tol: opts.tolerance, workers: opts.workers };

    let mut records = Vec::new();
    for &check in &checks {
        match check {
            CheckId::T1 => check_radius_bounds(&ctx, &mut records),
            CheckId::T2 => check_degree_bound(&ctx, &mut records),
            CheckId::T3 => check_energy_bounds(&ctx, &mut records),
            CheckId::T4 => check_unicyclic_spectrum(&ctx, &mut records)?,
            CheckId::L5 => check_rho2_sign(&ctx, &mut records)?,
            CheckId::T7 => check_unicyclic_energy(&ctx, &mut records)?,
            CheckId::T8 => check_unicyclic_extremes(&ctx, &mut records)?,
            CheckId::C2 => check_monotone_in_k(&ctx, &mut records)?,
            CheckId::Oracle => check_oracle(&ctx, &mut records)?,
        }
    }
    Ok(VerificationReport::new(corpus.source.to_string(), corpus.len(), &checks, records))
}

/// Shared shape of the T1 and T3 checks: `value` in `[lo, hi]`, equal to `lo`
/// exactly for trees and to `hi` exactly for complete graphs.
fn bounded_with_equality(
    ctx: &Ctx,
    check: CheckId,
    name: &str,
    bounds: fn(usize) -> (f64, f64),
    value: fn(&Analysis) -> f64,
    records: &mut Vec<CheckRecord>,
) {
    for (cg, a) in ctx.corpus.graphs.iter().zip(ctx.analyses) {
        let g = &cg.graph;
        if !g.is_connected() {
            continue;
        }
        let (lo, hi) = bounds(g.order());
        let x = value(a);
        let (tree, complete) = (g.is_tree(), g.is_complete());
        let at_lo = (x - lo).abs() <= ctx.tol;
        let at_hi = (x - hi).abs() <= ctx.tol;
        let ok = x >= lo - ctx.tol && x <= hi + ctx.tol && at_lo == tree && at_hi == complete;
        let status = if ok { Status::Pass } else { Status::Fail };
        records.push(ctx.record(
            check,
            cg.id.clone(),
            status,
            format!("{name} in [{}, {}], = lower iff tree, = upper iff complete", real(lo), real(hi)),
            format!("{name} = {}, tree = {tree}, complete = {complete}", real(x)),
            || format!("{} {name} = {}", write_graph6(g), real(x)),
        ));
    }
}

fn check_radius_bounds(ctx: &Ctx, records: &mut Vec<CheckRecord>) {
    bounded_with_equality(ctx, CheckId::T1, "rho", general_radius_bounds, |a| a.radius, records);
}

fn check_energy_bounds(ctx: &Ctx, records: &mut Vec<CheckRecord>) {
    bounded_with_equality(ctx, CheckId::T3, "PE", general_energy_bounds, |a| a.energy, records);
}

fn check_degree_bound(ctx: &Ctx, records: &mut Vec<CheckRecord>) {
    for (cg, a) in ctx.corpus.graphs.iter().zip(ctx.analyses) {
        let g = &cg.graph;
        let n = g.order();
        let offender = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| a.matrix.get(u, v) as usize > g.degree(u).min(g.degree(v)));
        let status = if offender.is_none() { Status::Pass } else { Status::Fail };
        records.push(ctx.record(
            CheckId::T2,
            cg.id.clone(),
            status,
            "p_uv <= min(deg u, deg v) for all pairs".to_string(),
            match offender {
                None => "holds".to_string(),
                Some((u, v)) => format!("p_{u}{v} = {}", a.matrix.get(u, v)),
            },
            || {
                let (u, v) = offender.unwrap_or_default();
                format!(
                    "{} pair ({u}, {v}) p = {} deg = ({}, {})",
                    write_graph6(g),
                    a.matrix.get(u, v),
                    g.degree(u),
                    g.degree(v)
                )
            },
        ));
    }
}

fn unicyclic_members<'a>(ctx: &'a Ctx) -> impl Iterator<Item = (usize, usize, &'a CorpusGraph, &'a Analysis)> {
    ctx.corpus.graphs.iter().zip(ctx.analyses).filter_map(|(cg, a)| match cg.family {
        Some(GraphFamily::Unicyclic { n, k, .. }) => Some((n, k, cg, a)),
        _ => None,
    })
}

/// The canonical path matrix of `U(n, k)`: 2 between cycle vertices `0..k`,
/// 1 for every other pair.
fn unicyclic_block_matrix(n: usize, k: usize) -> PathMatrix {
    let entries = (0..n * n)
        .map(|x| {
            let (i, j) = (x / n, x % n);
            if i == j {
                0
            } else if i < k && j < k {
                2
            } else {
                1
            }
        })
        .collect();
    PathMatrix::from_rows(n, entries).expect("block matrix is symmetric")
}

fn check_unicyclic_spectrum(ctx: &Ctx, records: &mut Vec<CheckRecord>) -> Result<()> {
    let mut by_params: BTreeMap<(usize, usize), Vec<(&CorpusGraph, &Analysis)>> = BTreeMap::new();
    for (n, k, cg, a) in unicyclic_members(ctx) {
        let closed = unicyclic_spectrum_closed(n, k)?;
        let diff = a.spectrum.max_abs_diff(&closed).unwrap_or(f64::INFINITY);
        let status = if diff <= ctx.tol { Status::Pass } else { Status::Fail };
        records.push(ctx.record(
            CheckId::T4,
            cg.id.clone(),
            status,
            format!("closed-form spectrum of U({n},{k})"),
            format!("max |delta| = {diff:.3e}"),
            || {
                let worst = a
                    .spectrum
                    .values()
                    .iter()
                    .zip(closed.values())
                    .enumerate()
                    .max_by(|x, y| (x.1 .0 - x.1 .1).abs().total_cmp(&(y.1 .0 - y.1 .1).abs()));
                match worst {
                    Some((i, (got, want))) => {
                        format!("{} eigenvalue #{i}: {} vs {}", write_graph6(&cg.graph), real(*got), real(*want))
                    }
                    None => write_graph6(&cg.graph),
                }
            },
        ));
        by_params.entry((n, k)).or_default().push((cg, a));
    }

    for ((n, k), members) in by_params {
        let block = unicyclic_block_matrix(n, k);
        let offender = members.iter().find(|(_, a)| a.matrix != block);
        let status = if offender.is_none() { Status::Pass } else { Status::Fail };
        records.push(ctx.record(
            CheckId::T4,
            format!("U({n},{k}) block form"),
            status,
            format!("all {} shapes give [[2J_{k}, 1], [1, J_{}]]", members.len(), n - k),
            match offender {
                None => "identical".to_string(),
                Some((cg, _)) => format!("{} differs", cg.id),
            },
            || {
                let (cg, a) = offender.expect("set on failure");
                let pair = (0..n * n).find(|&x| a.matrix.entries()[x] != block.entries()[x]).unwrap_or(0);
                let (i, j) = (pair / n, pair % n);
                format!("{} pair ({i}, {j}) p = {}", write_graph6(&cg.graph), a.matrix.get(i, j))
            },
        ));
    }
    Ok(())
}

fn check_unicyclic_energy(ctx: &Ctx, records: &mut Vec<CheckRecord>) -> Result<()> {
    for (n, k, cg, a) in unicyclic_members(ctx) {
        let closed = unicyclic_energy_closed(n, k)?;
        let status = if (a.energy - closed).abs() <= ctx.tol { Status::Pass } else { Status::Fail };
        records.push(ctx.record(
            CheckId::T7,
            cg.id.clone(),
            status,
            real(closed),
            real(a.energy),
            || format!("{} PE = {}", write_graph6(&cg.graph), real(a.energy)),
        ));
    }
    Ok(())
}

fn sweep_orders(ctx: &Ctx) -> std::ops::RangeInclusive<usize> {
    match ctx.corpus.sweep_range() {
        Some((lo, hi)) => lo..=hi,
        #[allow(clippy::reversed_empty_ranges)]
        None => 1..=0,
    }
}

fn check_rho2_sign(ctx: &Ctx, records: &mut Vec<CheckRecord>) -> Result<()> {
    for n in sweep_orders(ctx) {
        for k in 3..n {
            let direct = rho2_positive(n, k)?;
            let stated = rho2_positive_stated(n, k)?;
            let rho2 = unicyclic_rho12(n, k)?.1;
            let status = if direct == stated { Status::Pass } else { Status::Discrepancy };
            records.push(ctx.record(
                CheckId::L5,
                format!("({n},{k})"),
                status,
                format!("stated: rho2 > 0 is {stated}"),
                format!("rho2 = {}, g(k) = {}, rho2 > 0 is {direct}", real(rho2), unicyclic_g(n, k)),
                || format!("n = {n}, k = {k}: rho2 = {rho2:e}"),
            ));
        }
    }
    Ok(())
}

fn check_unicyclic_extremes(ctx: &Ctx, records: &mut Vec<CheckRecord>) -> Result<()> {
    for n in sweep_orders(ctx) {
        let stated = unicyclic_extremes(n)?;
        let ((min, argmin), (max, argmax)) = unicyclic_energy_range(n)?;
        let runner_up = (3..n).map(|k| unicyclic_energy_closed(n, k)).collect::<Result<Vec<_>>>()?;
        let unique = runner_up.iter().all(|&e| e < stated.max - ctx.tol);
        let ok = (max - stated.max).abs() <= ctx.tol && argmax == n && unique;
        records.push(ctx.record(
            CheckId::T8,
            format!("n={n} max"),
            if ok { Status::Pass } else { Status::Fail },
            format!("max PE = {} only at the cycle", real(stated.max)),
            format!("max PE = {} at k = {argmax}", real(max)),
            || format!("n = {n}: max {} at k = {argmax}", real(max)),
        ));

        let status = if min < stated.stated_min - ctx.tol || argmin != stated.argmin_k {
            Status::Fail
        } else if min - stated.stated_min > ctx.tol {
            Status::Discrepancy
        } else {
            Status::Pass
        };
        records.push(ctx.record(
            CheckId::T8,
            format!("n={n} min"),
            status,
            format!("min PE = {} at k = {}", real(stated.stated_min), stated.argmin_k),
            format!("min PE = {} at k = {argmin}", real(min)),
            || format!("n = {n}: gap {:.3e}", min - stated.stated_min),
        ));
    }
    Ok(())
}

fn check_monotone_in_k(ctx: &Ctx, records: &mut Vec<CheckRecord>) -> Result<()> {
    for n in sweep_orders(ctx).filter(|&n| n >= 4) {
        let energies = (3..=n).map(|k| unicyclic_energy_closed(n, k)).collect::<Result<Vec<_>>>()?;
        let (k_at, gap) = energies
            .windows(2)
            .enumerate()
            .map(|(i, w)| (i + 3, w[1] - w[0]))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("n >= 4 gives two energies");
        let status = if gap > MONOTONE_MARGIN { Status::Pass } else { Status::Fail };
        records.push(ctx.record(
            CheckId::C2,
            format!("n={n}"),
            status,
            format!("PE strictly increasing in k, margin > {MONOTONE_MARGIN:e}"),
            format!("smallest step {gap:.3e} at k = {k_at}"),
            || format!("n = {n}: PE(k = {k_at}) -> PE(k = {}) step {gap:e}", k_at + 1),
        ));
    }
    Ok(())
}

fn check_oracle(ctx: &Ctx, records: &mut Vec<CheckRecord>) -> Result<()> {
    let targets: Vec<usize> = (0..ctx.corpus.len())
        .filter(|&i| ctx.corpus.graphs[i].graph.order() <= ORACLE_CHECK_MAX_ORDER)
        .collect();
    let outcomes = ordered_map(&targets, ctx.workers, |&i| -> Result<Option<(usize, usize, usize)>> {
        let g = &ctx.corpus.graphs[i].graph;
        let p = &ctx.analyses[i].matrix;
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let truth = oracle_disjoint_paths(g, u, v)?;
                if truth != p.get(u, v) as usize {
                    return Ok(Some((u, v, truth)));
                }
            }
        }
        Ok(None)
    });
    for (&i, outcome) in targets.iter().zip(outcomes) {
        let cg = &ctx.corpus.graphs[i];
        let offender = outcome?;
        let status = if offender.is_none() { Status::Pass } else { Status::Fail };
        let p = &ctx.analyses[i].matrix;
        records.push(ctx.record(
            CheckId::Oracle,
            cg.id.clone(),
            status,
            "flow matrix equals exhaustive path count on all pairs".to_string(),
            match offender {
                None => "equal".to_string(),
                Some((u, v, truth)) => format!("p_{u}{v} = {} but oracle = {truth}", p.get(u, v)),
            },
            || {
                let (u, v, truth) = offender.unwrap_or_default();
                format!("{} pair ({u}, {v}) flow {} oracle {truth}", write_graph6(&cg.graph), p.get(u, v))
            },
        ));
    }
    Ok(())
}
