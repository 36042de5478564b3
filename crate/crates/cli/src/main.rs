//! Command-line entry point: generate models, validate axioms, run identity
//! suites, reconstruct genus-1 potentials, and emit reports.
//!
//! Exit codes: 0 all checks pass, 1 identity or agreement failure,
//! 2 usage or load error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gwv_core::model::FrobeniusModel;
use gwv_core::registry::{run_suite, RunOptions, Suite};
use gwv_core::series::Monomial;
use gwv_core::solver::{self, Method};
use gwv_core::{models, rat};

#[derive(Parser)]
#[command(
    name = "gwv",
    version,
    about = "Exact verification of quantum-cohomology identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Getzler,
    L1,
    Both,
}

#[derive(Args)]
struct ModelArgs {
    /// `builtin:NAME` (point, p1, p2, p1-classical, p2-classical) or a path
    /// to a model file.
    model: String,
    /// Override the t-degree truncation.
    #[arg(long)]
    t_degree: Option<i64>,
    /// Override the maximal Novikov degree.
    #[arg(long)]
    novikov: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Write a builtin model to the model file format.
    Gen {
        #[command(flatten)]
        model: ModelArgs,
        /// Output path (stdout when omitted).
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Run an identity suite and report one record per instance.
    Check {
        #[command(flatten)]
        model: ModelArgs,
        /// axioms, core, derivations, applications, appendix, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Euler-power cap for identity parameters.
        #[arg(long, default_value_t = 3)]
        k_max: i64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        report: ReportFormat,
        /// Worker threads (defaults to the rayon heuristic).
        #[arg(long)]
        jobs: Option<usize>,
        /// Inject +1 into the named F1 slot (default slot: q) before
        /// checking; used for negative testing.
        #[arg(long, num_args = 0..=1, default_missing_value = "q")]
        mutate_f1: Option<String>,
        /// Write the report to this file as well.
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Reconstruct the genus-1 potential from genus-0 data.
    Solve {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Solve Novikov degrees up to this bound.
        #[arg(long, default_value_t = 3)]
        max_q: i64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        report: ReportFormat,
        /// Write the solved model (F1 populated) to this path.
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Print the genus-0 function Φ_k.
    Phi {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        k: i64,
    },
    /// Print invariant tables (genus 0: rational counts; genus 1: elliptic
    /// counts from the solver).
    Invariants {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 0)]
        genus: u8,
        #[arg(long, default_value_t = 3)]
        max_d: i64,
    },
}

fn load_model(
    args: &ModelArgs,
    default_trunc: i64,
    default_q: i64,
) -> Result<FrobeniusModel, String> {
    let trunc = args.t_degree.unwrap_or(default_trunc);
    let d_max = args.novikov.unwrap_or(default_q);
    if let Some(name) = args.model.strip_prefix("builtin:") {
        return models::builtin(name, trunc, d_max).map_err(|e| e.to_string());
    }
    let m = FrobeniusModel::load(Path::new(&args.model)).map_err(|e| e.to_string())?;
    if args.t_degree.is_some() || args.novikov.is_some() {
        let t = args.t_degree.unwrap_or(m.shape.trunc_t);
        let q = args.novikov.unwrap_or(m.shape.max_q);
        return Ok(m.with_truncation(t, q));
    }
    Ok(m)
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { model, out } => {
            let m = match load_model(&model, 8, 3) {
                Ok(m) => m,
                Err(e) => return usage_error(&e),
            };
            let doc = m.to_doc();
            let text = match serde_json::to_string_pretty(&doc) {
                Ok(t) => t,
                Err(e) => return usage_error(&e.to_string()),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        return usage_error(&e.to_string());
                    }
                    println!("wrote {}", path.display());
                }
                None => println!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Command::Check {
            model,
            suite,
            k_max,
            report,
            jobs,
            mutate_f1,
            out,
        } => {
            let Some(suite) = Suite::parse(&suite) else {
                return usage_error(&format!("unknown suite {suite:?}"));
            };
            let m = match load_model(&model, 8, 3) {
                Ok(m) => m,
                Err(e) => return usage_error(&e),
            };
            let mutate = match mutate_f1 {
                Some(slot) => match Monomial::parse(&slot, m.n, m.shape.n_q) {
                    Ok(mono) => Some(mono),
                    Err(e) => return usage_error(&e),
                },
                None => None,
            };
            let opts = RunOptions {
                suite,
                k_max,
                mutate_f1: mutate,
                autosolve: true,
                jobs,
            };
            let suite_report = run_suite(&m, &opts);
            let rendered = match report {
                ReportFormat::Table => suite_report.to_table(),
                ReportFormat::Json => serde_json::to_string_pretty(&suite_report).unwrap(),
            };
            println!("{rendered}");
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, &rendered) {
                    return usage_error(&e.to_string());
                }
            }
            if suite_report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Solve {
            model,
            method,
            max_q,
            report,
            out,
        } => {
            let methods: Vec<Method> = match method {
                MethodArg::Getzler => vec![Method::Getzler],
                MethodArg::L1 => vec![Method::L1],
                MethodArg::Both => vec![Method::Getzler, Method::L1],
            };
            let mut results = Vec::new();
            for meth in &methods {
                let trunc = meth
                    .required_trunc_t(max_q)
                    .max(model.t_degree.unwrap_or(0));
                let args = ModelArgs {
                    model: model.model.clone(),
                    t_degree: Some(trunc),
                    novikov: Some(max_q),
                };
                let m = match load_model(&args, trunc, max_q) {
                    Ok(m) => m,
                    Err(e) => return usage_error(&e),
                };
                match solver::solve_f1(&m, *meth) {
                    Ok(r) => results.push((m, r)),
                    Err(e) => {
                        eprintln!("solve failed ({}): {e}", meth.name());
                        return ExitCode::from(1);
                    }
                }
            }
            let tables: Vec<Vec<(i64, rat::Rat)>> = results
                .iter()
                .map(|(m, r)| solver::elliptic_invariants(m, r, max_q))
                .collect();
            match report {
                ReportFormat::Json => {
                    let payload: Vec<_> = results.iter().map(|(_, r)| r).collect();
                    println!("{}", serde_json::to_string_pretty(&payload).unwrap());
                }
                ReportFormat::Table => {
                    for ((_, r), table) in results.iter().zip(&tables) {
                        println!(
                            "method {}: rank {} over {} rows{}",
                            r.method,
                            r.rank,
                            r.rows,
                            if r.used_fallback_tuples {
                                " (after widening to all basis tuples)"
                            } else {
                                ""
                            }
                        );
                        for (d, v) in table {
                            println!("  d = {d}: {}", rat::render(v));
                        }
                        if !r.unconstrained.is_empty() {
                            println!("  unconstrained slots: {}", r.unconstrained.join(", "));
                        }
                        if let Some(f1) = &r.f1 {
                            println!("  F1 = {f1}");
                        }
                    }
                }
            }
            if results.iter().any(|(_, r)| !r.unconstrained.is_empty()) {
                eprintln!("solve left unconstrained slots");
                return ExitCode::from(1);
            }
            if methods.len() == 2 {
                if tables[0] == tables[1] {
                    println!("agreement OK: both methods give the same invariants");
                } else {
                    eprintln!("methods disagree: {:?} vs {:?}", tables[0], tables[1]);
                    return ExitCode::from(1);
                }
            }
            if let Some(path) = out {
                let (m, r) = results.last().unwrap();
                let solved = m.with_f1(r.f1.clone().expect("complete solution"));
                if let Err(e) = solved.save(&path) {
                    return usage_error(&e.to_string());
                }
                println!("wrote {}", path.display());
            }
            ExitCode::SUCCESS
        }
        Command::Phi { model, k } => {
            let m = match load_model(&model, 8, 3) {
                Ok(m) => m,
                Err(e) => return usage_error(&e),
            };
            if k < 0 {
                return usage_error("k must be ≥ 0");
            }
            let engine = gwv_core::Engine::new(m);
            println!("{}", engine.phi(k));
            ExitCode::SUCCESS
        }
        Command::Invariants {
            model,
            genus,
            max_d,
        } => {
            let name = model.model.strip_prefix("builtin:").unwrap_or("");
            match genus {
                0 => {
                    let counts: Vec<String> =
                        match name {
                            "p2" | "p2-classical" => (1..=max_d)
                                .map(|d| rat::render(&models::kontsevich_n(d)))
                                .collect(),
                            "p1" | "p1-classical" => (1..=max_d)
                                .map(|d| if d == 1 { "1".into() } else { "0".into() })
                                .collect(),
                            "point" => vec![],
                            _ => return usage_error(
                                "genus-0 invariant tables are available for builtin models only",
                            ),
                        };
                    for (d, v) in counts.iter().enumerate() {
                        println!("d = {}: {}", d + 1, v);
                    }
                    ExitCode::SUCCESS
                }
                1 => {
                    let meth = Method::L1;
                    let trunc = meth
                        .required_trunc_t(max_d)
                        .max(model.t_degree.unwrap_or(0));
                    let args = ModelArgs {
                        model: model.model.clone(),
                        t_degree: Some(trunc),
                        novikov: Some(max_d),
                    };
                    let m = match load_model(&args, trunc, max_d) {
                        Ok(m) => m,
                        Err(e) => return usage_error(&e),
                    };
                    match solver::solve_f1(&m, meth) {
                        Ok(r) => {
                            for (d, v) in solver::elliptic_invariants(&m, &r, max_d) {
                                println!("d = {d}: {}", rat::render(&v));
                            }
                            ExitCode::SUCCESS
                        }
                        Err(e) => {
                            eprintln!("solve failed: {e}");
                            ExitCode::from(1)
                        }
                    }
                }
                _ => usage_error("genus must be 0 or 1"),
            }
        }
    }
}
