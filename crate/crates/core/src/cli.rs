//! The command-line driver, kept free of argument parsing so it can be
//! exercised directly.
//!
//! Exit codes: 0 normal form, 1 I/O failure, 2 parse or encoding error,
//! 3 out of memory, 4 step limit, 5 malformed dump or memory.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use crate::error::MachineError;
use crate::evaluator::{EvalLimits, EvalOutcome};
use crate::frontend::{decode, encode, parse_term, print_term, TermError};
use crate::memory::{Addr, DumpFile, Machine};
use crate::walker::{StepKind, WalkState};
use crate::word::Word;

pub const DEFAULT_MEM_SIZE: usize = 65536;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_OUT_OF_MEMORY: i32 = 3;
pub const EXIT_STEP_LIMIT: i32 = 4;
pub const EXIT_MALFORMED: i32 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Expr(String),
    File(PathBuf),
    Dump(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input: Input,
    /// Block count. Defaults to [`DEFAULT_MEM_SIZE`] for expressions and to
    /// the extent of the image for dumps.
    pub mem_size: Option<usize>,
    pub limits: EvalLimits,
    pub dump_out: Option<PathBuf>,
    /// One line per reduction.
    pub trace: bool,
    /// One line per walker step over the loaded expression, before evaluation.
    pub trace_walk: bool,
    /// Validate the loaded memory and free-list accounting before evaluating.
    pub check: bool,
}

impl RunConfig {
    pub fn new(input: Input) -> Self {
        RunConfig {
            input,
            mem_size: None,
            limits: EvalLimits::default(),
            dump_out: None,
            trace: false,
            trace_walk: false,
            check: false,
        }
    }
}

struct Failure {
    code: i32,
    msg: String,
}

fn fail(code: i32, msg: impl Into<String>) -> Failure {
    Failure {
        code,
        msg: msg.into(),
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        fail(EXIT_IO, e.to_string())
    }
}

impl From<MachineError> for Failure {
    fn from(e: MachineError) -> Self {
        match e {
            MachineError::OutOfMemory => fail(EXIT_OUT_OF_MEMORY, e.to_string()),
            MachineError::EmptyMemory | MachineError::MemoryTooLarge(_) => {
                fail(EXIT_PARSE, e.to_string())
            }
            _ => fail(EXIT_MALFORMED, e.to_string()),
        }
    }
}

impl From<TermError> for Failure {
    fn from(e: TermError) -> Self {
        match e {
            TermError::FreeVariable(_) => fail(EXIT_PARSE, e.to_string()),
            TermError::Machine(m) => m.into(),
            TermError::Malformed(_) => fail(EXIT_MALFORMED, e.to_string()),
        }
    }
}

/// Runs one evaluation, writing results to `out` and diagnostics to `err`,
/// and returns the process exit code.
pub fn run(config: &RunConfig, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let wide = config
        .mem_size
        .is_some_and(|n| u32::from_index(n).is_none());
    let result = if wide {
        run_with::<u64>(config, out)
    } else {
        run_with::<u32>(config, out)
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn run_with<W: Word>(config: &RunConfig, out: &mut impl Write) -> Result<(), Failure> {
    let mut m = load::<W>(config)?;
    let outcome = evaluate(&mut m, config, out);
    if let Some(path) = &config.dump_out {
        fs::write(path, DumpFile::render(&m))?;
    }
    let (root, steps) = match outcome? {
        EvalOutcome::NormalForm { root, steps } => (root, steps),
        EvalOutcome::StepLimit { steps } => {
            return Err(fail(
                EXIT_STEP_LIMIT,
                format!("step limit reached after {steps} reductions"),
            ))
        }
        EvalOutcome::OutOfMemory { steps } => {
            return Err(fail(
                EXIT_OUT_OF_MEMORY,
                format!("out of memory after {steps} reductions"),
            ))
        }
    };
    check_normal_form(&m, root)?;
    let term = decode(&m, root)?;
    writeln!(out, "{}", print_term(&term))?;
    writeln!(out, "steps={steps}")?;
    Ok(())
}

fn load<W: Word>(config: &RunConfig) -> Result<Machine<W>, Failure> {
    let source = match &config.input {
        Input::Expr(text) => text.clone(),
        Input::File(path) => fs::read_to_string(path)?,
        Input::Dump(path) => {
            let text = fs::read_to_string(path)?;
            let image = DumpFile::<W>::parse(&text).map_err(|e| fail(EXIT_MALFORMED, e.to_string()))?;
            let m = image
                .load(config.mem_size)
                .map_err(|e| fail(EXIT_MALFORMED, e.to_string()))?;
            if m.expr().is_null() {
                return Err(fail(EXIT_MALFORMED, "dump has no expression (expr=0)"));
            }
            return Ok(m);
        }
    };
    let term = parse_term(&source).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    let mut m = Machine::new(config.mem_size.unwrap_or(DEFAULT_MEM_SIZE))?;
    m.reset();
    encode(&mut m, &term)?;
    Ok(m)
}

fn evaluate<W: Word>(
    m: &mut Machine<W>,
    config: &RunConfig,
    out: &mut impl Write,
) -> Result<EvalOutcome<W>, Failure> {
    if config.check {
        m.validate(m.expr())
            .map_err(|d| fail(EXIT_MALFORMED, format!("malformed memory: {d}")))?;
        check_conservation(m, m.expr())?;
    }
    if config.trace_walk {
        m.validate(m.expr())
            .map_err(|d| fail(EXIT_MALFORMED, format!("malformed memory: {d}")))?;
        let mut s = WalkState::init(m.expr(), Addr::null())?;
        for call in 1.. {
            let kind = m.walk(&mut s);
            writeln!(out, "walk={call} kind={} cur={}", kind.name(), s.cur)?;
            if kind == StepKind::Finish {
                break;
            }
        }
    }
    let mut io_result = Ok(());
    let outcome = m.normal_traced(config.limits, |r| {
        if config.trace && io_result.is_ok() {
            io_result = writeln!(
                out,
                "step={} redex={} result={}",
                r.step, r.redex, r.contractum
            );
        }
    });
    io_result?;
    Ok(outcome)
}

fn check_conservation<W: Word>(m: &Machine<W>, root: Addr<W>) -> Result<(), Failure> {
    let free = m.free_count()?;
    let live = m.subtree_nodes(root).len();
    if free + live != m.size() {
        return Err(fail(
            EXIT_MALFORMED,
            format!(
                "block accounting broken: {free} free + {live} in use != {}",
                m.size()
            ),
        ));
    }
    Ok(())
}

/// The evaluator's postconditions: a well-formed tree with no redex left and
/// every other block free.
fn check_normal_form<W: Word>(m: &Machine<W>, root: Addr<W>) -> Result<(), Failure> {
    m.validate(root)
        .map_err(|d| fail(EXIT_MALFORMED, format!("malformed result: {d}")))?;
    if let Some(a) = m.subtree_nodes(root).into_iter().find(|&a| m.is_reducible(a)) {
        return Err(fail(EXIT_MALFORMED, format!("redex left at {a}")));
    }
    check_conservation(m, root)
}
