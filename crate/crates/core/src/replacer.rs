use crate::error::MachineError;
use crate::memory::{Addr, Machine, NodeKind};
use crate::walker::{Direction, StepKind, WalkState};
use crate::word::Word;

impl<W: Word> Machine<W> {
    /// An application whose operator is an abstraction.
    pub fn is_reducible(&self, a: Addr<W>) -> bool {
        let n = &self[a];
        n.kind() == NodeKind::Application && self[n.func].kind() == NodeKind::Abstraction
    }

    /// Substitutes a fresh copy of `argument` for every variable in `body`
    /// bound by `binder`, freeing the variable blocks. Returns the root of
    /// the rewritten body, which differs from `body` only when `body` was
    /// itself an occurrence.
    ///
    /// `argument` must lie outside the scope of `binder`, so the inserted
    /// copies never need to be searched.
    pub fn replace(
        &mut self,
        body: Addr<W>,
        binder: Addr<W>,
        argument: Addr<W>,
    ) -> Result<Addr<W>, MachineError> {
        self.check(body)?;
        let mut root = body;
        let mut s = WalkState::init(body, self[body].par)?;
        loop {
            match self.walk(&mut s) {
                StepKind::Variable => {
                    let v = s.cur;
                    let node = self[v];
                    if node.kind() != NodeKind::Variable || node.arg != binder {
                        continue;
                    }
                    let copy = self.copy(argument, node.par)?;
                    self.relink(node.par, v, copy);
                    self.put(v)?;
                    if v == root {
                        root = copy;
                    }
                    // Resume as if the copy had just been walked.
                    s.cur = copy;
                    s.dir = Direction::Back;
                }
                StepKind::Finish => return Ok(root),
                StepKind::FunctionPart | StepKind::ArgumentPart | StepKind::Back => {}
            }
        }
    }
}
