use clap::{Parser, Subcommand, ValueEnum};
use corrpade::corpus::{self, Problem};
use corrpade::num;
use corrpade::report::{self, Format, RunConfig, SchemeChoice};
use corrpade::verify;
use serde_json::json;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "corrpade", version, about = "Padé amplitude extrapolation with and without control functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in problems and any loaded from a problem file.
    List {
        #[arg(long)]
        problem_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Compute amplitude sequences and write one record per order.
    Run {
        /// Problem id; repeat for several, or pass `all`.
        #[arg(long, short = 'p', required = true)]
        problem: Vec<String>,
        #[arg(long, value_enum, default_value_t = SchemeArg::Both)]
        scheme: SchemeArg,
        /// Highest order; defaults to min(20, supported order).
        #[arg(long)]
        max_order: Option<usize>,
        /// Working precision in decimal digits.
        #[arg(long, env = num::PRECISION_ENV, default_value_t = num::DEFAULT_DIGITS)]
        precision: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON file with additional problems.
        #[arg(long)]
        problem_file: Option<PathBuf>,
    },
    /// Run the acceptance fixtures; exit status is nonzero on any failure.
    Verify {
        /// Criterion number, key, or problem id.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Standard,
    Corrected,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(kind: &'static str, message: impl ToString) -> Self {
        Failure { kind, message: message.to_string() }
    }
}

/// Writes to stdout; a closed pipe ends output quietly.
fn emit(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::new("io", e)),
        _ => Ok(()),
    }
}

fn load_problems(file: Option<&Path>) -> Result<Vec<Problem>, Failure> {
    let mut all = corpus::builtin();
    if let Some(path) = file {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::new("io", format!("{}: {e}", path.display())))?;
        let extra = corpus::from_json(&text).map_err(|e| Failure::new("problem_file", e))?;
        for p in extra {
            all.retain(|q| q.id != p.id);
            all.push(p);
        }
    }
    Ok(all)
}

fn resolve(ids: &[String], pool: &[Problem]) -> Result<Vec<Problem>, Failure> {
    if ids.iter().any(|i| i == "all") {
        return Ok(pool.to_vec());
    }
    ids.iter()
        .map(|id| {
            let id = corpus::ALIASES.iter().find(|a| a.0 == id).map_or(id.as_str(), |a| a.1);
            pool.iter()
                .find(|p| p.id == id)
                .cloned()
                .ok_or_else(|| Failure::new("unknown_problem", format!("unknown problem {id:?}")))
        })
        .collect()
}

fn list(file: Option<&Path>, format: ListFormat) -> Result<(), Failure> {
    let problems = load_problems(file)?;
    match format {
        ListFormat::Json => {
            let rows: Vec<_> = problems
                .iter()
                .map(|p| {
                    json!({
                        "id": p.id,
                        "description": p.description,
                        "alpha": p.alpha,
                        "s": p.s,
                        "exact": p.exact.as_ref().map(|c| c.describe()),
                        "max_supported_order": p.max_supported_order,
                    })
                })
                .collect();
            emit(&(serde_json::to_string_pretty(&rows).expect("plain data") + "\n"))?;
        }
        ListFormat::Text => {
            let mut text = String::new();
            for p in &problems {
                let exact = p.exact.as_ref().map_or_else(|| "-".to_string(), |c| c.describe());
                let max = p.max_supported_order.map_or_else(|| "-".to_string(), |m| m.to_string());
                text.push_str(&format!(
                    "{:<20} s={:<5} alpha={} exact={:<12} max_order={:<4} {}\n",
                    p.id, p.s, p.alpha, exact, max, p.description
                ));
            }
            emit(&text)?;
        }
    }
    Ok(())
}

fn run(
    ids: &[String],
    scheme: SchemeArg,
    max_order: Option<usize>,
    precision: u32,
    format: FormatArg,
    out: Option<&Path>,
    file: Option<&Path>,
) -> Result<(), Failure> {
    let pool = load_problems(file)?;
    let config = RunConfig {
        problems: resolve(ids, &pool)?,
        scheme: match scheme {
            SchemeArg::Standard => SchemeChoice::Standard,
            SchemeArg::Corrected => SchemeChoice::Corrected,
            SchemeArg::Both => SchemeChoice::Both,
        },
        max_order,
        precision_digits: precision,
    };
    let rep = report::run(&config).map_err(|e| {
        let kind = match e {
            corrpade::SchemeError::InsufficientCoefficients { .. } => "insufficient_coefficients",
            corrpade::SchemeError::Unsupported(_) => "invalid_config",
            _ => "scheme",
        };
        Failure::new(kind, e)
    })?;
    let text = rep.render(match format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    });
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::new("io", format!("{}: {e}", path.display()))),
        None => emit(&text),
    }
}

fn verify(only: Option<&str>) -> Result<bool, Failure> {
    if let Some(f) = only {
        if verify::select(f).is_empty() {
            return Err(Failure::new("unknown_criterion", format!("no criterion matches {f:?}")));
        }
    }
    let results = verify::run_all(only);
    let mut text = String::new();
    for r in &results {
        text.push_str(&r.line());
        text.push('\n');
        for c in r.failures() {
            text.push_str(&format!("    {}: {}\n", c.name, c.detail));
        }
    }
    emit(&text)?;
    Ok(results.iter().all(|r| r.passed()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::List { problem_file, format } => list(problem_file.as_deref(), *format).map(|_| true),
        Command::Run { problem, scheme, max_order, precision, format, out, problem_file } => run(
            problem,
            *scheme,
            *max_order,
            *precision,
            *format,
            out.as_deref(),
            problem_file.as_deref(),
        )
        .map(|_| true),
        Command::Verify { only } => verify(only.as_deref()),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("{}", json!({ "error": f.kind, "message": f.message }));
            ExitCode::from(2)
        }
    }
}
