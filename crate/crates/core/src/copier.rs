//! Deep copy of a subexpression.
//!
//! While the source is walked, each source node that gains a child in the
//! copy records its counterpart in its `copy` cell. A copied variable looks
//! its binder up the source par chain: a non-zero copy cell there means the
//! binder was copied too and the new variable must point at the new binder;
//! a zero cell means the binder is outside the copied region and is kept.

use crate::error::MachineError;
use crate::memory::{Addr, Machine, NodeKind};
use crate::walker::{StepKind, WalkState};
use crate::word::Word;

impl<W: Word> Machine<W> {
    /// Copies the tree at `src`, hanging the copy under `new_parent`, and
    /// returns the copy's root.
    ///
    /// Takes exactly one block per source node and frees none. On
    /// `OutOfMemory` the partial copy is abandoned along with the run.
    pub fn copy(&mut self, src: Addr<W>, new_parent: Addr<W>) -> Result<Addr<W>, MachineError> {
        self.check(src)?;
        let root = self.get()?;
        self[root].par = new_parent;

        let mut s = WalkState::init(src, self[src].par)?;
        let mut target = root;
        loop {
            match self.walk(&mut s) {
                StepKind::FunctionPart => {
                    let source_parent = self[s.cur].par;
                    self[source_parent].copy = target;
                    let child = self.get()?;
                    self[child].par = target;
                    self[target].func = child;
                    target = child;
                }
                StepKind::ArgumentPart => {
                    target = self[target].par;
                    let child = self.get()?;
                    self[child].par = target;
                    self[target].arg = child;
                    target = child;
                }
                StepKind::Variable => {
                    if self[s.cur].kind() == NodeKind::Variable {
                        self[target].arg = self.binder_image(s.cur);
                    }
                }
                StepKind::Back => target = self[target].par,
                StepKind::Finish => break,
            }
        }

        let mut s = WalkState::init(src, self[src].par)?;
        self[src].copy = Addr::null();
        while self.walk(&mut s) != StepKind::Finish {
            self[s.cur].copy = Addr::null();
        }
        Ok(root)
    }

    /// Where a copy of variable `var` must point: the copy of its binder if
    /// one is being made, otherwise the original binder. The binder is found
    /// by climbing from the variable towards the expression root.
    fn binder_image(&self, var: Addr<W>) -> Addr<W> {
        let binder = self[var].arg;
        let mut a = self[var].par;
        while !a.is_null() {
            if a == binder {
                let image = self[a].copy;
                return if image.is_null() { binder } else { image };
            }
            a = self[a].par;
        }
        binder
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::memory::{fixtures, Node};

    fn cells(m: &Machine<u32>, a: u32) -> (u32, u32, u32, u32) {
        let n = m.node(Addr(a)).unwrap();
        (n.par.0, n.copy.0, n.func.0, n.arg.0)
    }

    #[test]
    fn copy_inner_abstraction_of_the_figure() {
        let mut m = fixtures::apply_combinator();
        m.rebuild_free_list(&m.subtree_nodes(Addr(1)));
        assert_eq!(m.freehead(), Addr(6));

        let r = m.copy(Addr(2), Addr(0)).unwrap();
        assert_eq!(r, Addr(6));
        assert_eq!(cells(&m, 6), (0, 0, 7, 0));
        assert_eq!(cells(&m, 7), (6, 0, 8, 9));
        assert_eq!(cells(&m, 8), (7, 0, 0, 1), "external binder kept");
        assert_eq!(cells(&m, 9), (7, 0, 0, 6), "internal binder remapped");
        for a in 1..=5 {
            assert_eq!(cells(&m, a).1, 0, "copy cell of {a} restored");
        }
        assert_eq!(m.free_count(), Ok(0));
        assert_eq!(m.validate(Addr(1)), Ok(()));
    }

    #[test]
    fn copy_single_variable_keeps_binder() {
        let mut m = fixtures::apply_combinator();
        m.rebuild_free_list(&m.subtree_nodes(Addr(1)));
        let r = m.copy(Addr(4), Addr(3)).unwrap();
        assert_eq!(cells(&m, r.0), (3, 0, 0, 1));
        assert_eq!(m.free_count(), Ok(3));
    }

    #[test]
    fn copy_whole_expression() {
        let mut m = fixtures::apply_combinator();
        m.rebuild_free_list(&m.subtree_nodes(Addr(1)));
        let mut big = Machine::<u32>::new(10).unwrap();
        for a in 1..=5u32 {
            *big.node_mut(Addr(a)).unwrap() = *m.node(Addr(a)).unwrap();
        }
        big.rebuild_free_list(&big.subtree_nodes(Addr(1)));
        let r = big.copy(Addr(1), Addr(0)).unwrap();
        assert_eq!(big.validate(r), Ok(()));
        let shape = |m: &Machine<u32>, root| {
            m.subtree_nodes(root)
                .into_iter()
                .map(|a| m[a].kind())
                .collect::<Vec<_>>()
        };
        assert_eq!(shape(&big, r), shape(&big, Addr(1)));
        // every variable in the copy points inside the copy
        for a in big.subtree_nodes(r) {
            let n: Node<u32> = big[a];
            if n.kind() == NodeKind::Variable {
                assert!(n.arg.0 > 5);
            }
        }
    }

    #[test]
    fn copy_out_of_memory() {
        let mut m = fixtures::apply_combinator();
        m.rebuild_free_list(&m.subtree_nodes(Addr(1)));
        m.get().unwrap();
        assert_eq!(m.copy(Addr(1), Addr(0)), Err(MachineError::OutOfMemory));
    }
}
