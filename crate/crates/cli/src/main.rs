use std::io::{self, BufRead, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vecq_core::expr::{eval_str, ErrorClass, ExprError, Value};
use vecq_core::oracle::{run_suite, Expectation, SuiteReport};
use vecq_core::scalar::Mode;

#[derive(Parser)]
#[command(
    name = "vecq",
    version,
    about = "Exact vector division and multiplication in 2D and 3D"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate one expression per input line.
    Repl {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check every registered algebraic law on seeded random inputs.
    Laws {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..=1_000_000))]
        trials: u64,
    },
}

#[derive(Args, Clone, Copy)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Print results as JSON.
    #[arg(long)]
    json: bool,
    /// Decimal digits for float results.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
}

#[derive(ValueEnum, Clone, Copy)]
enum ModeArg {
    Exact,
    Float,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Approx,
        }
    }
}

fn format_value(value: &Value, out: OutputArgs) -> String {
    let precision = usize::from(out.precision);
    if out.json {
        serde_json::to_string(&value.to_json(precision)).expect("JSON values serialize")
    } else {
        value.render(precision)
    }
}

/// Error line, the source, and a caret under the offending character.
fn diagnostic(source: &str, err: &ExprError) -> String {
    format!("{err}\n  {source}\n  {}^", " ".repeat(err.position()))
}

fn exit_code(err: &ExprError) -> u8 {
    match err.class() {
        ErrorClass::Lex | ErrorClass::Parse => 2,
        ErrorClass::Type => 3,
        ErrorClass::Math => 4,
    }
}

fn eval_command(source: &str, out: OutputArgs) -> ExitCode {
    match eval_str(source, out.mode.into()) {
        Ok(value) => {
            println!("{}", format_value(&value, out));
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{}", diagnostic(source, &err));
            ExitCode::from(exit_code(&err))
        }
    }
}

fn repl_command(out: OutputArgs) -> ExitCode {
    let stdin = io::stdin();
    let interactive = stdin.is_terminal();
    let mut stdout = io::stdout();
    let mut lines = stdin.lock().lines();
    loop {
        if interactive {
            print!("> ");
            let _ = stdout.flush();
        }
        let line = match lines.next() {
            Some(Ok(line)) => line,
            Some(Err(err)) => {
                eprintln!("error: {err}");
                return ExitCode::FAILURE;
            }
            None => return ExitCode::SUCCESS,
        };
        let source = line.trim_end_matches('\r');
        if source.trim().is_empty() {
            continue;
        }
        match eval_str(source, out.mode.into()) {
            Ok(value) => println!("{}", format_value(&value, out)),
            Err(err) => eprintln!("{}", diagnostic(source, &err)),
        }
    }
}

fn laws_command(seed: u64, trials: u64) -> ExitCode {
    let suite = run_suite(seed, trials as usize);
    for (spec, report) in &suite.entries {
        let expected = match spec.expectation {
            Expectation::Holds => "holds",
            Expectation::Fails => "fails",
        };
        let status = if SuiteReport::status_ok(spec, report) {
            "ok"
        } else {
            "MISMATCH"
        };
        println!("{report}\n  expected={expected} status={status}");
    }
    let mismatches = suite.mismatches();
    println!(
        "laws={} mismatches={} seed={seed} trials={trials}",
        suite.entries.len(),
        mismatches.len()
    );
    if mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval { expr, output } => eval_command(&expr, output),
        Command::Repl { output } => repl_command(output),
        Command::Laws { seed, trials } => laws_command(seed, trials),
    }
}
