//! Non-recursive normal-order traversal.
//!
//! The walker needs no stack: every node knows its parent, so going back up
//! is a single cell read. A traversal is driven one transition at a time by
//! [`Machine::walk`], which lets callers mutate memory between steps.

use crate::error::MachineError;
use crate::memory::{Addr, Machine};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Towards the children.
    Forth,
    /// Towards the parent.
    Back,
}

/// The transition a call to [`Machine::walk`] made.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// Reached a leaf; direction flipped to back, current node unchanged.
    Variable,
    /// Moved down into the operator of an application or body of an abstraction.
    FunctionPart,
    /// Moved across from an operator to its sibling operand.
    ArgumentPart,
    /// Moved up to the parent.
    Back,
    /// Back at the traversal root; nothing changed.
    Finish,
}

impl StepKind {
    pub fn name(self) -> &'static str {
        match self {
            StepKind::Variable => "Variable",
            StepKind::FunctionPart => "FunctionPart",
            StepKind::ArgumentPart => "ArgumentPart",
            StepKind::Back => "Back",
            StepKind::Finish => "Finish",
        }
    }
}

/// Where a traversal is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkState<W: Word = u32> {
    pub cur: Addr<W>,
    stop: Addr<W>,
    pub dir: Direction,
}

impl<W: Word> WalkState<W> {
    /// Starts a traversal of the tree at `sub`, whose parent is `parent`
    /// (null for a whole expression).
    ///
    /// The parent is passed explicitly rather than read from `sub` so that a
    /// tree already unhooked from its parent can still be walked.
    pub fn init(sub: Addr<W>, parent: Addr<W>) -> Result<Self, MachineError> {
        if sub.is_null() {
            return Err(MachineError::Address { addr: 0, size: 0 });
        }
        Ok(WalkState {
            cur: sub,
            stop: parent,
            dir: Direction::Forth,
        })
    }

    /// The parent address the traversal stops at.
    pub fn stop(&self) -> Addr<W> {
        self.stop
    }
}

impl<W: Word> Machine<W> {
    /// Makes one traversal step and reports which.
    ///
    /// Leaves are visited twice (arrival, then the flip to back); inner
    /// nodes are current once on the way down and once more on the way up.
    /// A tree of `n` nodes therefore finishes on call `2n`. The variable
    /// binder cell is never followed.
    pub fn walk(&self, s: &mut WalkState<W>) -> StepKind {
        match s.dir {
            Direction::Forth => {
                let n = &self[s.cur];
                if n.kind().is_leaf() {
                    s.dir = Direction::Back;
                    StepKind::Variable
                } else {
                    s.cur = n.func;
                    StepKind::FunctionPart
                }
            }
            Direction::Back => {
                let p = self[s.cur].par;
                if p == s.stop {
                    return StepKind::Finish;
                }
                let parent = &self[p];
                debug_assert!(
                    parent.func == s.cur || parent.arg == s.cur,
                    "{:?} is not a child of its par {:?}",
                    s.cur,
                    p
                );
                if parent.func == s.cur && !parent.arg.is_null() {
                    s.cur = parent.arg;
                    s.dir = Direction::Forth;
                    StepKind::ArgumentPart
                } else {
                    s.cur = p;
                    StepKind::Back
                }
            }
        }
    }
}
