//! Command-line driver: graph exports, codeword construction, correctability
//! checks, code search, the CSS map, and the minimal-qudit bound.
//!
//! Exit status: 0 on success / all checks passing, 1 on a failing verdict or
//! an unsuccessful search, 2 on any error. All outputs are byte-identical
//! across repeated runs on identical inputs; `REFLEXQEC_THREADS` caps
//! internal parallelism without affecting results.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use reflexqec::graph::{build_avoidance_graph, build_luc_graph};
use reflexqec::io;
use reflexqec::pauli::ErrorSet;
use reflexqec::reflexive::{build_codewords, ReflexiveStabilizer};
use reflexqec::search::{
    heuristic_search, minimal_physical_qudits, RequireRule, SearchConfig, Strategy,
};
use reflexqec::verify::{
    check_corollary, check_general_theorem, check_knill_symbolic, check_main_theorem, kl_numeric,
    Verdict,
};
use reflexqec::{Error, FieldSpec};

/// Default `d^n` bound for dense codeword and Knill-Laflamme work.
const DEFAULT_CAP_DIM: u64 = 1 << 14;

#[derive(Parser)]
#[command(name = "reflexqec", version)]
#[command(about = "Reflexive stabilizer codes: graphs, search, and Knill-Laflamme verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    Corollary,
    Main,
    General,
    Symbolic,
    Numeric,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum RequireArg {
    Corollary,
    Main,
    General,
}

impl From<RequireArg> for RequireRule {
    fn from(r: RequireArg) -> RequireRule {
        match r {
            RequireArg::Corollary => RequireRule::Corollary,
            RequireArg::Main => RequireRule::MainTheorem,
            RequireArg::General => RequireRule::GeneralTheorem,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Greedy,
    Exhaustive,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the error avoidance graph of an error-set file as DOT.
    AvoidGraph {
        /// Error-set file.
        #[arg(long)]
        errors: PathBuf,
        /// Output path (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the LUC graph of a code file as DOT, optionally highlighting
    /// edges shared with an error set's avoidance graph.
    LucGraph {
        /// Code description file.
        #[arg(long)]
        code: PathBuf,
        /// Optional error-set file used for highlighting.
        #[arg(long)]
        errors: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the codewords of a code file and emit their amplitudes.
    Codewords {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run correctability checks of a code against an error set.
    Check {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        errors: PathBuf,
        /// Which rule to run; `all` runs every symbolic rule plus the
        /// numeric check when within the dimension cap.
        #[arg(long, value_enum, default_value = "all")]
        rule: RuleArg,
        /// Maximum d^n for dense (numeric) work.
        #[arg(long, default_value_t = DEFAULT_CAP_DIM)]
        cap_dim: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a code correcting the given error set.
    Search {
        #[arg(long)]
        errors: PathBuf,
        /// Certification rule the result must satisfy.
        #[arg(long, value_enum, default_value = "general")]
        rule: RequireArg,
        #[arg(long, value_enum, default_value = "greedy")]
        strategy: StrategyArg,
        /// Seed generator (vector literal), repeatable.
        #[arg(long)]
        seed: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a qubit code's stabilizer generators to CSS form.
    CssMap {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the least n admitting a perfect single-qudit code for level d.
    MinimalN {
        #[arg(long)]
        d: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Box<dyn std::error::Error>> {
    Ok(std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Box<dyn std::error::Error>> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn check_files_consistent(code: &io::CodeFile, errors: &io::ErrorSetFile) -> Result<(), Error> {
    if code.field != errors.field {
        return Err(Error::ConsistencyError(
            "code and error files declare different fields".into(),
        ));
    }
    if code.n != errors.n {
        return Err(Error::ConsistencyError(format!(
            "code file has n={}, error file has n={}",
            code.n, errors.n
        )));
    }
    Ok(())
}

fn surface_warnings(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

fn run(cli: Cli) -> Result<u8, Box<dyn std::error::Error>> {
    match cli.command {
        Command::AvoidGraph { errors, out } => {
            let parsed = io::parse_error_set_file(&read(&errors)?)?;
            surface_warnings(&parsed.warnings);
            let graph = build_avoidance_graph(&parsed.field, &parsed.errors)?;
            emit(&out, &graph.export_dot(None)?)?;
            Ok(0)
        }
        Command::LucGraph { code, errors, out } => {
            let parsed = io::parse_code_file(&read(&code)?)?;
            let graph = build_luc_graph(&parsed.field, &parsed.luc)?;
            let highlight = match errors {
                Some(path) => {
                    let ef = io::parse_error_set_file(&read(&path)?)?;
                    surface_warnings(&ef.warnings);
                    check_files_consistent(&parsed, &ef)?;
                    Some(build_avoidance_graph(&ef.field, &ef.errors)?)
                }
                None => None,
            };
            emit(&out, &graph.export_dot(highlight.as_ref())?)?;
            Ok(0)
        }
        Command::Codewords { code, out } => {
            let parsed = io::parse_code_file(&read(&code)?)?;
            let built = build_codewords(&parsed.field, &parsed.luc)?;
            emit(&out, &io::format_codewords(&built))?;
            Ok(0)
        }
        Command::Check {
            code,
            errors,
            rule,
            cap_dim,
            out,
        } => {
            let code_file = io::parse_code_file(&read(&code)?)?;
            let error_file = io::parse_error_set_file(&read(&errors)?)?;
            surface_warnings(&error_file.warnings);
            check_files_consistent(&code_file, &error_file)?;
            let verdicts = run_checks(&code_file.field, &code_file, &error_file, rule, cap_dim)?;
            emit(&out, &io::format_report(&verdicts))?;
            Ok(if verdicts.iter().all(|v| v.correctable) {
                0
            } else {
                1
            })
        }
        Command::Search {
            errors,
            rule,
            strategy,
            seed,
            out,
        } => {
            let parsed = io::parse_error_set_file(&read(&errors)?)?;
            surface_warnings(&parsed.warnings);
            let mut cfg = SearchConfig::greedy(rule.into());
            cfg.strategy = match strategy {
                StrategyArg::Greedy => Strategy::Greedy,
                StrategyArg::Exhaustive => Strategy::Exhaustive,
            };
            for s in &seed {
                cfg.seed_generators
                    .push(io::parse_vector_literal(&parsed.field, s, parsed.n, 0)?);
            }
            match heuristic_search(&parsed.field, &parsed.errors, &cfg) {
                Ok(result) => {
                    let mut comments = vec![format!(
                        "search result: k={} rule={}",
                        result.k,
                        cfg.require.name()
                    )];
                    comments.extend(result.trace.iter().cloned());
                    emit(
                        &out,
                        &io::format_code_file(&parsed.field, &result.luc, &comments),
                    )?;
                    Ok(0)
                }
                Err(Error::NotFound) => {
                    eprintln!("no certified code found within the search budget");
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::CssMap { code, out } => {
            let parsed = io::parse_code_file(&read(&code)?)?;
            let stab = ReflexiveStabilizer::new(&parsed.field, parsed.luc.clone())?;
            let pairs = reflexqec::css::phi_on_stabilizer(&parsed.field, &stab)?;
            emit(
                &out,
                &io::format_param_pairs(&parsed.field, parsed.n, &pairs),
            )?;
            Ok(0)
        }
        Command::MinimalN { d } => {
            if d < 2 {
                return Err(Error::DomainError("d must be at least 2".into()).into());
            }
            if d != 4 {
                eprintln!(
                    "note: the counting bound is exact for d=4; d={d} extrapolates the same argument"
                );
            }
            println!("{}", minimal_physical_qudits(d));
            Ok(0)
        }
    }
}

fn run_checks(
    f: &FieldSpec,
    code_file: &io::CodeFile,
    error_file: &io::ErrorSetFile,
    rule: RuleArg,
    cap_dim: u64,
) -> Result<Vec<Verdict>, Box<dyn std::error::Error>> {
    let luc = &code_file.luc;
    let errors: &ErrorSet = &error_file.errors;
    let dim = (f.order() as u128).pow(code_file.n as u32);
    let numeric_in_cap = dim <= cap_dim as u128;

    let mut verdicts = Vec::new();
    let want = |r: RuleArg| rule == RuleArg::All || rule == r;
    if want(RuleArg::Corollary) {
        verdicts.push(check_corollary(f, luc, errors)?);
    }
    if want(RuleArg::Main) {
        verdicts.push(check_main_theorem(f, luc, errors)?);
    }
    if want(RuleArg::General) {
        verdicts.push(check_general_theorem(f, luc, errors)?);
    }
    if want(RuleArg::Symbolic) {
        verdicts.push(check_knill_symbolic(f, luc, errors)?);
    }
    if want(RuleArg::Numeric) {
        if numeric_in_cap {
            let built = build_codewords(f, luc)?;
            verdicts.push(kl_numeric(f, &built, errors, None)?);
        } else if rule == RuleArg::Numeric {
            return Err(Error::DimensionCap {
                what: "numeric check d^n",
                needed: dim.min(u64::MAX as u128) as u64,
                cap: cap_dim,
            }
            .into());
        } else {
            eprintln!("note: numeric check skipped, d^n = {dim} exceeds --cap-dim {cap_dim}");
        }
    }
    Ok(verdicts)
}
