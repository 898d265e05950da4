use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kfermion::expr::{evaluate, parse, Evaluated};
use kfermion::render::{self, Format};
use kfermion::representatives::{to_representative, Convention};
use kfermion::verify::{verify_range, Status, VerificationReport, SUITES};
use kfermion::{AlgebraError, QContext, RadicalScalar};

const MAX_K_VAR: &str = "KFERMION_MAX_K";
const DEFAULT_MAX_K: u32 = 12;

#[derive(Parser)]
#[command(
    name = "kfermion",
    version,
    about = "Exact k-fermionic coherent-state algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    #[value(name = "M")]
    M,
    #[value(name = "D")]
    D,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity suites over a range of k
    Verify {
        /// Single value or inclusive range `a..b`
        #[arg(long, default_value = "2..10")]
        k: String,
        /// Restrict to these suites (repeatable or comma separated)
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Reorder an expression into canonical mixed form
    NormalOrder {
        #[arg(long)]
        k: u32,
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        numeric: bool,
    },
    /// Berezin-integrate an expression (implicitly under dxibar dxi without explicit differentials)
    Integrate {
        #[arg(long)]
        k: u32,
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        numeric: bool,
    },
    /// Evaluate an expression: integrated if it has differentials, normal-ordered otherwise
    Eval {
        #[arg(long)]
        k: u32,
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        numeric: bool,
    },
    /// Grassmann representative of a Fock state
    Repr {
        #[arg(long)]
        k: u32,
        /// Comma separated Fock coefficients, each an expression
        #[arg(long)]
        state: String,
        #[arg(long, value_enum, default_value = "M")]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        numeric: bool,
    },
}

enum Failure {
    Usage(String),
    Algebra(AlgebraError),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Algebra(e)
    }
}

fn max_k() -> Result<u32, Failure> {
    match std::env::var(MAX_K_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_K_VAR}={v} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_MAX_K),
    }
}

fn check_k(k: u32, max: u32) -> Result<u32, Failure> {
    if k < 2 {
        Err(Failure::Usage(format!("k must be at least 2, got {k}")))
    } else if k > max {
        Err(Failure::Usage(format!(
            "k = {k} exceeds the maximum {max} (set {MAX_K_VAR} to raise it)"
        )))
    } else {
        Ok(k)
    }
}

fn parse_k_range(s: &str) -> Result<Vec<u32>, Failure> {
    let max = max_k()?;
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| Failure::Usage(format!("invalid k value `{t}`")))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let k = num(s)?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(Failure::Usage(format!("empty k range {s}")));
    }
    (lo..=hi).map(|k| check_k(k, max)).collect()
}

fn context(k: u32) -> Result<QContext, Failure> {
    check_k(k, max_k()?)?;
    Ok(QContext::new(k)?)
}

fn parse_expr(src: &str, ctx: &QContext) -> Result<Evaluated, Failure> {
    let e = parse(src).map_err(|e| Failure::Usage(format!("parse error: {e}")))?;
    Ok(evaluate(&e, ctx)?)
}

fn format_of(f: OutputFormat) -> Format {
    match f {
        OutputFormat::Latex => Format::Latex,
        _ => Format::Text,
    }
}

fn status_label(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::SkippedDegenerate => "SKIP",
    }
}

fn print_text(r: &VerificationReport) {
    let state = if r.passed() { "pass" } else { "FAIL" };
    let degenerate = if r.degenerate {
        " (degenerate: [k/2]_q = 0)"
    } else {
        ""
    };
    println!("k = {}{degenerate}: {state}", r.k);
    for s in &r.suites {
        println!("  {} ({} ms)", s.name, s.millis);
        for i in &s.identities {
            println!("    {}  {}: {}", status_label(i.status), i.name, i.detail);
        }
    }
}

fn latex_escape(s: &str) -> String {
    s.replace('\\', r"\textbackslash{}")
        .replace('_', r"\_")
        .replace('^', r"\^{}")
        .replace('&', r"\&")
        .replace('#', r"\#")
        .replace('{', r"\{")
        .replace('}', r"\}")
}

fn print_latex(r: &VerificationReport) {
    println!(r"\begin{{tabular}}{{lll}}");
    println!(r"\multicolumn{{3}}{{l}}{{$k = {}$}} \\", r.k);
    for s in &r.suites {
        for i in &s.identities {
            println!(
                r"{} & {} & {} \\",
                latex_escape(&s.name),
                latex_escape(&i.name),
                status_label(i.status)
            );
        }
    }
    println!(r"\end{{tabular}}");
}

fn cmd_verify(k: &str, suite: &[String], format: OutputFormat) -> Result<bool, Failure> {
    let ks = parse_k_range(k)?;
    if let Some(bad) = suite.iter().find(|s| !SUITES.contains(&s.as_str())) {
        return Err(Failure::Usage(format!(
            "unknown suite `{bad}`; expected one of {}",
            SUITES.join(", ")
        )));
    }
    let reports = verify_range(&ks, suite)?;
    for r in &reports {
        match format {
            OutputFormat::Json => {
                println!("{}", serde_json::to_string(r).expect("report serializes"))
            }
            OutputFormat::Text => print_text(r),
            OutputFormat::Latex => print_latex(r),
        }
    }
    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.failures()
                .map(move |(s, i)| format!("k = {}: {}/{}: {}", r.k, s.name, i.name, i.detail))
        })
        .collect();
    if !failures.is_empty() {
        eprintln!("{} failing identities:", failures.len());
        for f in &failures {
            eprintln!("  {f}");
        }
    }
    Ok(failures.is_empty())
}

fn emit(text: String, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", serde_json::json!({ "result": text })),
        _ => println!("{text}"),
    }
}

fn cmd_normal_order(k: u32, src: &str, format: OutputFormat, numeric: bool) -> Result<(), Failure> {
    let ctx = context(k)?;
    let p = parse_expr(src, &ctx)?.normal_order()?;
    let text = if numeric {
        render::mixed_numeric(&p)
    } else {
        render::mixed(&p, format_of(format))
    };
    emit(text, format);
    Ok(())
}

fn cmd_integrate(k: u32, src: &str, format: OutputFormat, numeric: bool) -> Result<(), Failure> {
    let ctx = context(k)?;
    let p = parse_expr(src, &ctx)?.integrate()?;
    let text = if numeric {
        render::grassmann_numeric(&p)
    } else {
        render::grassmann(&p, format_of(format))
    };
    emit(text, format);
    Ok(())
}

fn cmd_eval(k: u32, src: &str, format: OutputFormat, numeric: bool) -> Result<(), Failure> {
    let ctx = context(k)?;
    if parse_expr(src, &ctx)?.has_differentials() {
        cmd_integrate(k, src, format, numeric)
    } else {
        cmd_normal_order(k, src, format, numeric)
    }
}

fn scalar_of(src: &str, ctx: &QContext) -> Result<RadicalScalar, Failure> {
    let p = parse_expr(src, ctx)?.normal_order()?;
    match p.terms().collect::<Vec<_>>().as_slice() {
        [] => Ok(RadicalScalar::zero(ctx)),
        [(g, o, c)] if g.is_one() && o.is_one() => Ok((*c).clone()),
        _ => Err(Failure::Usage(format!(
            "state entry `{src}` is not a scalar"
        ))),
    }
}

fn cmd_repr(
    k: u32,
    state: &str,
    convention: ConventionArg,
    format: OutputFormat,
    numeric: bool,
) -> Result<(), Failure> {
    let ctx = context(k)?;
    let entries: Vec<&str> = state.split(',').map(str::trim).collect();
    if entries.len() != k as usize {
        return Err(Failure::Usage(format!(
            "state has {} entries, expected k = {k}",
            entries.len()
        )));
    }
    let coeffs = entries
        .iter()
        .map(|s| scalar_of(s, &ctx))
        .collect::<Result<Vec<_>, _>>()?;
    let conv = match convention {
        ConventionArg::M => Convention::M,
        ConventionArg::D => Convention::D,
    };
    let rep = to_representative(&coeffs, &ctx, conv)?;
    let text = if numeric {
        render::grassmann_numeric(&rep.to_grassmann(&ctx))
    } else {
        render::representative(&rep, format_of(format))
    };
    emit(text, format);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify { k, suite, format } => cmd_verify(k, suite, *format),
        Command::NormalOrder {
            k,
            expr,
            format,
            numeric,
        } => cmd_normal_order(*k, expr, *format, *numeric).map(|_| true),
        Command::Integrate {
            k,
            expr,
            format,
            numeric,
        } => cmd_integrate(*k, expr, *format, *numeric).map(|_| true),
        Command::Eval {
            k,
            expr,
            format,
            numeric,
        } => cmd_eval(*k, expr, *format, *numeric).map(|_| true),
        Command::Repr {
            k,
            state,
            convention,
            format,
            numeric,
        } => cmd_repr(*k, state, *convention, *format, *numeric).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Algebra(e @ AlgebraError::DegenerateParameter { .. })) => {
            eprintln!("error: {e}");
            eprintln!("the construction divides by [n]_q! and [k/2]_q = 0 for even k >= 4; use odd k or k = 2");
            ExitCode::from(1)
        }
        Err(Failure::Algebra(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
