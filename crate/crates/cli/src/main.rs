mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pathenergy::closed_form::{
    energy_bounds, unicyclic_energy_closed, unicyclic_energy_range, unicyclic_spectrum_parts,
};
use pathenergy::graph::{generate, write_edge_list, write_graph6, AttachmentShape, GraphFamily};
use pathenergy::verify::{exhaustive_small_graphs, parse_checks, run_suite, CheckId, Corpus, SuiteOptions};
use pathenergy::{path_energy, path_matrix_with, path_spectrum, spectral_radius, Graph, PathMatrixOptions};

/// Seed used whenever `--seed` is not given.
const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(name = "pathenergy", version, about = "Path matrix, path spectrum and path energy of simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the path matrix of one graph.
    Matrix {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Tsv)]
        format: MatrixFormat,
        /// Shorthand for `--format json`.
        #[arg(long)]
        json: bool,
    },
    /// Print the path spectrum, nonincreasing, as a JSON array.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Print the path energy and path spectral radius.
    Energy {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Generate a graph and print it.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Cycle length, unicyclic family only.
        #[arg(long)]
        k: Option<usize>,
        /// pendant-path, pendant-star or random-tree.
        #[arg(long, default_value = "pendant-path")]
        shape: String,
        /// Seed for the random-tree shape.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Closed-form spectrum and energy of U(n, k); without --k, a table over k.
    ClosedForm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suite over a corpus.
    Verify {
        /// exhaustive:MAX_N | random:N:COUNT | unicyclic:NMIN..NMAX | file:PATH | -
        #[arg(long)]
        corpus: String,
        /// Comma-separated check ids (T1,T2,T3,T4,L5,T7,T8,C2,ORACLE) or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = pathenergy::verify::DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// List passing records in the text report too.
        #[arg(long)]
        all_records: bool,
    },
}

#[derive(Args)]
struct GraphInput {
    /// graph6 or edge-list file; standard input when absent or `-`.
    input: Option<PathBuf>,
    /// Worker threads for the all-pairs loop; 0 uses one per core.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Run a flow for every pair instead of only inside blocks.
    #[arg(long)]
    no_blocks: bool,
}

impl GraphInput {
    fn options(&self) -> PathMatrixOptions {
        PathMatrixOptions { use_blocks: !self.no_blocks, workers: self.workers }
    }

    fn graph(&self) -> Result<Graph, String> {
        input::parse_single_graph(&input::read_source(self.input.as_deref())?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Unicyclic,
}

fn real(x: f64) -> String {
    format!("{x:.9}")
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Matrix { input, format, json } => {
            let p = path_matrix_with(&input.graph()?, &input.options());
            match (format, json) {
                (MatrixFormat::Json, _) | (_, true) => println!("{}", p.to_json()),
                (MatrixFormat::Tsv, false) => print!("{}", p.to_tsv()),
            }
        }
        Command::Spectrum { input } => {
            let p = path_matrix_with(&input.graph()?, &input.options());
            let spec = path_spectrum(&p).map_err(|e| e.to_string())?;
            println!("{}", spec.to_json());
        }
        Command::Energy { input, json } => {
            let p = path_matrix_with(&input.graph()?, &input.options());
            let spec = path_spectrum(&p).map_err(|e| e.to_string())?;
            let energy = path_energy(&spec);
            let rho = if spec.is_empty() { 0.0 } else { spectral_radius(&spec).map_err(|e| e.to_string())? };
            if json {
                println!("{}", serde_json::json!({ "n": p.order(), "energy": energy, "spectral_radius": rho }));
            } else {
                println!("PE = {}", real(energy));
                println!("rho = {}", real(rho));
            }
        }
        Command::Gen { family, n, k, shape, seed, format } => {
            let family = match family {
                Family::Path => GraphFamily::Path { n },
                Family::Cycle => GraphFamily::Cycle { n },
                Family::Complete => GraphFamily::Complete { n },
                Family::Star => GraphFamily::Star { n },
                Family::Unicyclic => {
                    let k = k.ok_or("--family unicyclic requires --k")?;
                    let shape = match shape.parse::<AttachmentShape>().map_err(|e| e.to_string())? {
                        AttachmentShape::RandomTree(_) if !shape.contains('(') => AttachmentShape::RandomTree(seed),
                        other => other,
                    };
                    GraphFamily::Unicyclic { n, k, shape }
                }
            };
            let g = generate(family).map_err(|e| e.to_string())?;
            match format {
                GraphFormat::Graph6 => println!("{}", write_graph6(&g)),
                GraphFormat::Edges => print!("{}", write_edge_list(&g)),
            }
        }
        Command::ClosedForm { n, k, json } => closed_form(n, k, json)?,
        Command::Verify { corpus, checks, tol, seed, workers, format, all_records } => {
            let checks: Vec<CheckId> = parse_checks(&checks).map_err(|e| e.to_string())?;
            let corpus = load_corpus(&corpus, seed)?;
            let report = run_suite(&corpus, &checks, &SuiteOptions { tolerance: tol, workers })
                .map_err(|e| e.to_string())?;
            match format {
                ReportFormat::Text => print!("{}", report.to_text(all_records)),
                ReportFormat::Json => println!("{}", report.to_json()),
            }
            return Ok(report.exit_code() as u8);
        }
    }
    Ok(0)
}

fn closed_form(n: usize, k: Option<usize>, json: bool) -> Result<(), String> {
    let Some(k) = k else {
        let ((min, argmin), (max, argmax)) = unicyclic_energy_range(n).map_err(|e| e.to_string())?;
        let bounds = energy_bounds(n);
        let rows = (3..=n)
            .map(|k| {
                let parts = unicyclic_spectrum_parts(n, k)?;
                Ok((k, parts.rho1, parts.rho2, unicyclic_energy_closed(n, k)?))
            })
            .collect::<pathenergy::Result<Vec<_>>>()
            .map_err(|e| e.to_string())?;
        if json {
            let table: Vec<_> = rows
                .iter()
                .map(|&(k, rho1, rho2, pe)| serde_json::json!({ "k": k, "rho1": rho1, "rho2": rho2, "energy": pe }))
                .collect();
            let out = serde_json::json!({
                "n": n,
                "rows": table,
                "min": { "energy": min, "k": argmin },
                "max": { "energy": max, "k": argmax },
                "bounds": bounds,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        } else {
            println!("k\trho1\trho2\tPE");
            for (k, rho1, rho2, pe) in rows {
                println!("{k}\t{}\t{}\t{}", real(rho1), rho2.map_or("-".into(), real), real(pe));
            }
            println!("min PE = {} at k = {argmin}", real(min));
            println!("max PE = {} at k = {argmax}", real(max));
            println!("stated unicyclic lower bound = {}", real(bounds.unicyclic_stated_lower));
        }
        return Ok(());
    };

    let parts = unicyclic_spectrum_parts(n, k).map_err(|e| e.to_string())?;
    let energy = unicyclic_energy_closed(n, k).map_err(|e| e.to_string())?;
    let spectrum = parts.spectrum();
    if json {
        let out = serde_json::json!({
            "n": n,
            "k": k,
            "rho1": parts.rho1,
            "rho2": parts.rho2,
            "spectrum": spectrum,
            "energy": energy,
        });
        println!("{out}");
    } else {
        println!("rho1 = {}", real(parts.rho1));
        println!("rho2 = {}", parts.rho2.map_or("-".into(), real));
        println!("spectrum = {}", spectrum.to_json());
        println!("PE = {}", real(energy));
    }
    Ok(())
}

fn load_corpus(spec: &str, seed: u64) -> Result<Corpus, String> {
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("`{s}` is not a count in corpus `{spec}`"));
    let corpus = match spec.split_once(':') {
        Some(("exhaustive", max_n)) => exhaustive_small_graphs(number(max_n)?),
        Some(("random", rest)) => {
            let (n, count) = rest.split_once(':').ok_or("random corpus is random:N:COUNT")?;
            Corpus::random_connected(number(n)?, number(count)?, seed)
        }
        Some(("unicyclic", range)) => {
            let (lo, hi) = match range.split_once("..") {
                Some((lo, hi)) => (number(lo)?, number(hi.trim_start_matches('='))?),
                None => (number(range)?, number(range)?),
            };
            Corpus::unicyclic_sweep(lo, hi, seed)
        }
        Some(("file", path)) => {
            let text = input::read_source(Some(path.as_ref()))?;
            Corpus::from_graph6(&text, true)
        }
        None if spec == "-" => Corpus::from_graph6(&input::read_source(None)?, true),
        _ => return Err(format!("unrecognized corpus `{spec}`")),
    };
    corpus.map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
