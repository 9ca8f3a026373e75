use super::{Addr, Machine, NodeKind};
use crate::error::Diagnostic;
use crate::word::Word;

impl<W: Word> Machine<W> {
    /// Checks the tree under `root` for structural soundness.
    ///
    /// Nodes are visited in preorder (operator before operand) and the first
    /// violation wins. Every child must point back at its parent, no block
    /// may be reached twice, copy cells must be clear, and each variable must
    /// name an abstraction on its own ancestor chain. The chain may run above
    /// `root`.
    ///
    /// Reads raw memory only, so it is safe on arbitrary (corrupt) contents.
    pub fn validate(&self, root: Addr<W>) -> Result<(), Diagnostic> {
        let size = self.size();
        let in_range = |a: Addr<W>| (1..=size).contains(&a.index());
        if !in_range(root) {
            return Err(Diagnostic::OutOfRange(root.index()));
        }
        let mut seen = vec![false; size];
        let mut stack = vec![(root, None)];
        while let Some((a, parent)) = stack.pop() {
            let i = a.index() - 1;
            if seen[i] {
                return Err(Diagnostic::Shared(a.index()));
            }
            seen[i] = true;
            let node = self.mem[i];
            if let Some(p) = parent {
                if node.par != p {
                    return Err(Diagnostic::ParMismatch(a.index()));
                }
            }
            if !node.copy.is_null() {
                return Err(Diagnostic::DirtyCopy(a.index()));
            }
            match node.kind() {
                NodeKind::FreeLeaf => {}
                NodeKind::Variable => {
                    let binder = node.arg;
                    if !in_range(binder) || self.mem[binder.index() - 1].kind() != NodeKind::Abstraction
                    {
                        return Err(Diagnostic::BinderNotAbstraction(a.index()));
                    }
                    if !self.has_ancestor(a, binder) {
                        return Err(Diagnostic::BinderOutOfScope(a.index()));
                    }
                }
                NodeKind::Abstraction | NodeKind::Application => {
                    for child in [node.arg, node.func] {
                        if child.is_null() {
                            continue;
                        }
                        if !in_range(child) {
                            return Err(Diagnostic::OutOfRange(child.index()));
                        }
                        stack.push((child, Some(a)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether `target` lies on the par chain strictly above `a`. Gives up
    /// after `size` hops so corrupt cycles cannot hang it.
    fn has_ancestor(&self, a: Addr<W>, target: Addr<W>) -> bool {
        let mut cur = self.mem[a.index() - 1].par;
        for _ in 0..self.size() {
            if cur.is_null() || cur.index() > self.size() {
                return false;
            }
            if cur == target {
                return true;
            }
            cur = self.mem[cur.index() - 1].par;
        }
        false
    }

    /// Blocks of the tree under `root` in preorder. Assumes the tree is
    /// well formed.
    pub fn subtree_nodes(&self, root: Addr<W>) -> Vec<Addr<W>> {
        let mut out = Vec::new();
        let mut stack = vec![root];
        while let Some(a) = stack.pop() {
            out.push(a);
            let n = self.mem[a.index() - 1];
            if !n.func.is_null() {
                if !n.arg.is_null() {
                    stack.push(n.arg);
                }
                stack.push(n.func);
            }
        }
        out
    }
}
