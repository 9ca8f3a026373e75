use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};
use heap_lambda::cli::{run, Input, RunConfig};
use heap_lambda::EvalLimits;

/// Evaluate lambda terms to normal form on the heap lambda machine.
#[derive(Debug, Parser)]
#[command(name = "hlm", version)]
#[command(group(ArgGroup::new("input").required(true).args(["expr", "file", "dump_in"])))]
struct Args {
    /// Term to evaluate, e.g. "(\x.x) (\y.y)".
    #[arg(long)]
    expr: Option<String>,
    /// Read the term from a file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Load a memory dump (with an expr= header) instead of a term.
    #[arg(long)]
    dump_in: Option<PathBuf>,
    /// Machine memory in blocks [default: 65536, or the dump's extent].
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    mem_size: Option<u64>,
    /// Maximum number of beta reductions.
    #[arg(long, default_value_t = EvalLimits::DEFAULT_MAX_STEPS,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_steps: u64,
    /// Run until a normal form is reached, however long that takes.
    #[arg(long, conflicts_with = "max_steps")]
    no_step_limit: bool,
    /// Write the memory after evaluation to this file.
    #[arg(long)]
    dump_out: Option<PathBuf>,
    /// Print one line per reduction.
    #[arg(long)]
    trace: bool,
    /// Print every walker step over the loaded expression.
    #[arg(long)]
    trace_walk: bool,
    /// Validate memory and block accounting before evaluating.
    #[arg(long)]
    check: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let input = match (args.expr, args.file, args.dump_in) {
        (Some(e), _, _) => Input::Expr(e),
        (_, Some(f), _) => Input::File(f),
        (_, _, Some(d)) => Input::Dump(d),
        _ => unreachable!("clap enforces one input"),
    };
    let mem_size = match args.mem_size.map(usize::try_from) {
        Some(Ok(n)) => Some(n),
        Some(Err(_)) => {
            eprintln!("error: --mem-size too large for this host");
            return ExitCode::from(2);
        }
        None => None,
    };
    let config = RunConfig {
        input,
        mem_size,
        limits: if args.no_step_limit {
            EvalLimits::unlimited()
        } else {
            EvalLimits::steps(args.max_steps)
        },
        dump_out: args.dump_out,
        trace: args.trace,
        trace_walk: args.trace_walk,
        check: args.check,
    };
    let code = run(&config, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
