//! Normal-order reduction to full normal form.
//!
//! The evaluator walks the expression with the ordinary walker, testing each
//! node on the way down. A redex is contracted in place and the contractum
//! is tested again. When the contractum sits in operator position its parent
//! application may just have become a redex, so the evaluator steps up to it
//! before continuing; that is the only place a redex can appear above the
//! walker, so the leftmost-outermost redex is always the next one found.

use crate::error::MachineError;
use crate::memory::{Addr, Machine};
use crate::walker::{Direction, StepKind, WalkState};
use crate::word::Word;

/// Bounds on a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalLimits {
    /// Maximum beta reductions, `None` for no limit.
    pub max_steps: Option<u64>,
}

impl EvalLimits {
    pub const DEFAULT_MAX_STEPS: u64 = 100_000;

    pub fn steps(max_steps: u64) -> Self {
        assert!(max_steps >= 1, "step limit must be at least 1");
        EvalLimits {
            max_steps: Some(max_steps),
        }
    }

    pub fn unlimited() -> Self {
        EvalLimits { max_steps: None }
    }
}

impl Default for EvalLimits {
    fn default() -> Self {
        EvalLimits::steps(Self::DEFAULT_MAX_STEPS)
    }
}

/// How a run ended. Step counts are reductions made during that run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalOutcome<W: Word = u32> {
    NormalForm { root: Addr<W>, steps: u64 },
    StepLimit { steps: u64 },
    OutOfMemory { steps: u64 },
}

impl<W: Word> EvalOutcome<W> {
    pub fn steps(&self) -> u64 {
        match *self {
            EvalOutcome::NormalForm { steps, .. }
            | EvalOutcome::StepLimit { steps }
            | EvalOutcome::OutOfMemory { steps } => steps,
        }
    }

    pub fn is_normal_form(&self) -> bool {
        matches!(self, EvalOutcome::NormalForm { .. })
    }
}

/// One contraction, as reported to a trace hook.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reduction<W: Word = u32> {
    /// 1-based within the run.
    pub step: u64,
    /// The application that was contracted. Its block has been freed.
    pub redex: Addr<W>,
    pub contractum: Addr<W>,
}

impl<W: Word> Machine<W> {
    /// Contracts the redex at `a` and returns the contractum, which takes
    /// `a`'s place in the tree (and in `expr` if `a` was the root). The
    /// application, the abstraction and the operand are all freed.
    pub fn beta_step(&mut self, a: Addr<W>) -> Result<Addr<W>, MachineError> {
        self.check(a)?;
        if !self.is_reducible(a) {
            return Err(MachineError::NotRedex(a.index()));
        }
        let lam = self[a].func;
        let operand = self[a].arg;
        let body = self[lam].func;
        let contractum = self.replace(body, lam, operand)?;

        let parent = self[a].par;
        self[contractum].par = parent;
        if parent.is_null() {
            if self.expr == a {
                self.expr = contractum;
            }
        } else {
            self.relink(parent, a, contractum);
        }

        // With its body cut off the abstraction is a leaf, so clearing from
        // the application frees exactly the application, the abstraction and
        // the operand.
        self[lam].func = Addr::null();
        self.clear(a)?;
        self.steps_taken += 1;
        Ok(contractum)
    }

    /// Reduces the expression in the `expr` register to normal form.
    pub fn normal(&mut self, limits: EvalLimits) -> EvalOutcome<W> {
        self.normal_traced(limits, |_| {})
    }

    /// [`Machine::normal`], calling `on_reduce` after every contraction.
    pub fn normal_traced(
        &mut self,
        limits: EvalLimits,
        mut on_reduce: impl FnMut(Reduction<W>),
    ) -> EvalOutcome<W> {
        let mut steps = 0;
        match self.run_normal(limits, &mut steps, &mut on_reduce) {
            Ok(Some(root)) => EvalOutcome::NormalForm { root, steps },
            Ok(None) => EvalOutcome::StepLimit { steps },
            Err(MachineError::OutOfMemory) => EvalOutcome::OutOfMemory { steps },
            Err(e) => panic!("evaluator hit {e} on a well-formed expression"),
        }
    }

    fn run_normal(
        &mut self,
        limits: EvalLimits,
        steps: &mut u64,
        on_reduce: &mut impl FnMut(Reduction<W>),
    ) -> Result<Option<Addr<W>>, MachineError> {
        let root = self.expr;
        self.check(root)?;
        let mut s = WalkState::init(root, Addr::null())?;
        loop {
            if s.dir == Direction::Forth {
                while self.is_reducible(s.cur) {
                    if limits.max_steps.is_some_and(|max| *steps >= max) {
                        return Ok(None);
                    }
                    let redex = s.cur;
                    let contractum = self.beta_step(redex)?;
                    *steps += 1;
                    on_reduce(Reduction {
                        step: *steps,
                        redex,
                        contractum,
                    });
                    s.cur = contractum;
                    if self.is_operator(contractum) {
                        s.cur = self[contractum].par;
                    }
                }
            }
            if self.walk(&mut s) == StepKind::Finish {
                return Ok(Some(self.expr));
            }
        }
    }
}
