//! Command-line front end for exact reduced power algebra computations.
//!
//! Runs a script file (one command per line, `#` comments) or a REPL on
//! stdin. Exit codes: 0 success, 2 parse error, 3 domain error, 4 fuzz
//! counterexample found.

use std::io::{BufRead, IsTerminal, Write};
use std::path::PathBuf;

use clap::Parser as ClapParser;

use rpa_core::{FilterSpec, IndexSet};

use rpa_cli::errors::CliError;
use rpa_cli::parser;
use rpa_cli::render::{self, Format};
use rpa_cli::session::{Output, Session};

#[derive(ClapParser)]
#[command(
    name = "rpa",
    about = "Exact arithmetic in reduced power algebras: scalars, step waves, grid operators",
    long_about = None
)]
struct Args {
    /// Filter: `frechet`, `principal:K`, or `superset:M:R1,R2,...`
    #[arg(long, default_value = "frechet")]
    filter: String,

    /// Truncation order for sqrt and uncertainty display
    #[arg(long, default_value_t = 4)]
    trunc: u32,

    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Default seed for fuzz commands
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Script file; omit for a REPL on stdin
    script: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let args = Args::parse();
    let filter = match parse_filter(&args.filter) {
        Ok(f) => f,
        Err(msg) => {
            eprintln!("error[E_FILTER]: {msg}");
            return 2;
        }
    };
    let mut session = Session::new(filter, args.trunc, args.seed);
    let format = args.format.into();
    match &args.script {
        Some(path) => run_script(path, &mut session, format),
        None => run_repl(&mut session, format),
    }
}

/// `frechet` | `principal:K` | `superset:M:R1,R2,...`
fn parse_filter(spec: &str) -> Result<FilterSpec, String> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("frechet") {
        return Ok(FilterSpec::Frechet);
    }
    if let Some(rest) = spec.strip_prefix("principal:") {
        let k: u64 = rest
            .trim()
            .parse()
            .map_err(|e| format!("bad principal index `{rest}`: {e}"))?;
        return Ok(FilterSpec::PrincipalAt(k));
    }
    if let Some(rest) = spec.strip_prefix("superset:") {
        let (modulus, residues) = rest
            .split_once(':')
            .ok_or_else(|| "expected `superset:M:R1,R2,...`".to_string())?;
        let modulus: u64 = modulus
            .trim()
            .parse()
            .map_err(|e| format!("bad modulus `{modulus}`: {e}"))?;
        if modulus == 0 || modulus > parser::MAX_MODULUS {
            return Err(format!(
                "modulus must be between 1 and {}",
                parser::MAX_MODULUS
            ));
        }
        let residues = residues
            .split(',')
            .map(|r| {
                r.trim()
                    .parse::<u64>()
                    .map_err(|e| format!("bad residue `{r}`: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let base = IndexSet::new(modulus, residues, [], []);
        return FilterSpec::superset_of(base);
    }
    Err(format!(
        "unknown filter `{spec}`; use frechet, principal:K, or superset:M:R1,R2,..."
    ))
}

enum LineOutcome {
    Quiet,
    Printed { fuzz_failed: bool },
}

fn process_line(
    line: &str,
    session: &mut Session,
    format: Format,
) -> Result<LineOutcome, CliError> {
    let stripped = line.split('#').next().unwrap_or("").trim();
    if stripped.is_empty() {
        return Ok(LineOutcome::Quiet);
    }
    let cmd = parser::parse_command(stripped)?;
    let output = session.execute(&cmd)?;
    let fuzz_failed = matches!(&output, Output::Fuzz(r) if r.failed > 0);
    match render::render(&output, format) {
        Some(text) => {
            println!("{text}");
            Ok(LineOutcome::Printed { fuzz_failed })
        }
        None => Ok(LineOutcome::Quiet),
    }
}

fn run_script(path: &PathBuf, session: &mut Session, format: Format) -> i32 {
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error[E_IO]: cannot read {}: {e}", path.display());
            return 1;
        }
    };
    for (lineno, line) in content.lines().enumerate() {
        match process_line(line, session, format) {
            Ok(LineOutcome::Printed { fuzz_failed: true }) => return 4,
            Ok(_) => {}
            Err(e) => {
                eprintln!("line {}: error[{}]: {e}", lineno + 1, e.code());
                return e.exit_code();
            }
        }
    }
    0
}

fn run_repl(session: &mut Session, format: Format) -> i32 {
    let stdin = std::io::stdin();
    let interactive = stdin.is_terminal();
    loop {
        if interactive {
            eprint!("rpa> ");
            let _ = std::io::stderr().flush();
        }
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) => return 0,
            Ok(_) => {}
            Err(e) => {
                eprintln!("error[E_IO]: {e}");
                return 1;
            }
        }
        match process_line(&line, session, format) {
            Ok(_) => {}
            Err(e) => eprintln!("error[{}]: {e}", e.code()),
        }
    }
}
