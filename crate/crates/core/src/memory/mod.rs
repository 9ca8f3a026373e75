//! Blocks, node kinds and the machine container.
//!
//! Memory is a flat array of identical blocks, each holding four address
//! cells. Addresses are 1-based; 0 is the null address and never names a
//! block. Block addresses double as variable names: a variable node points at
//! the abstraction that binds it.

mod dump;
mod validate;

pub use dump::{format_dump, parse_dump, DumpFile, Overlay};

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::MachineError;
use crate::word::Word;

/// A block address. The null address is zero.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Addr<W = u32>(pub W);

impl<W: Word> Addr<W> {
    pub const fn new(word: W) -> Self {
        Addr(word)
    }

    pub fn null() -> Self {
        Addr(W::zero())
    }

    pub fn is_null(self) -> bool {
        self.0.is_zero()
    }

    pub fn from_index(index: usize) -> Option<Self> {
        W::from_index(index).map(Addr)
    }

    /// The address as a host integer (0 for null).
    pub fn index(self) -> usize {
        self.0.index()
    }
}

impl<W: Word> fmt::Debug for Addr<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.0)
    }
}

impl<W: Word> fmt::Display for Addr<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// One block of machine memory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Node<W: Word = u32> {
    /// Parent node.
    pub par: Addr<W>,
    /// Copy mapping while a copy is in progress; next free block when free.
    pub copy: Addr<W>,
    /// Operator of an application, body of an abstraction.
    pub func: Addr<W>,
    /// Operand of an application, binder of a variable.
    pub arg: Addr<W>,
}

impl<W: Word> Node<W> {
    pub fn zero() -> Self {
        Node {
            par: Addr::null(),
            copy: Addr::null(),
            func: Addr::null(),
            arg: Addr::null(),
        }
    }

    pub fn kind(&self) -> NodeKind {
        NodeKind::classify(self.func.is_null(), self.arg.is_null())
    }
}

/// What a block represents, decided entirely by its `func` and `arg` cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    /// `func` and `arg` both set.
    Application,
    /// `func` set, `arg` zero.
    Abstraction,
    /// `func` zero, `arg` names the binding abstraction.
    Variable,
    /// Both zero: a free variable, or a block on the free list.
    FreeLeaf,
}

impl NodeKind {
    fn classify(func_null: bool, arg_null: bool) -> Self {
        match (func_null, arg_null) {
            (false, false) => NodeKind::Application,
            (false, true) => NodeKind::Abstraction,
            (true, false) => NodeKind::Variable,
            (true, true) => NodeKind::FreeLeaf,
        }
    }

    /// Variables and free leaves have no children.
    pub fn is_leaf(self) -> bool {
        matches!(self, NodeKind::Variable | NodeKind::FreeLeaf)
    }
}

/// The machine: block memory plus the `freehead` and `expr` registers.
///
/// A fresh machine is all zeros; call [`Machine::reset`] before use.
#[derive(Clone, PartialEq, Eq)]
pub struct Machine<W: Word = u32> {
    pub(crate) mem: Vec<Node<W>>,
    pub(crate) freehead: Addr<W>,
    pub(crate) expr: Addr<W>,
    pub(crate) steps_taken: u64,
    // Shadow of free-list membership, used to catch reads of freed blocks.
    #[cfg(debug_assertions)]
    pub(crate) freed: Vec<bool>,
}

impl<W: Word> Machine<W> {
    /// A zeroed machine of `blocks` blocks.
    pub fn new(blocks: usize) -> Result<Self, MachineError> {
        if blocks == 0 {
            return Err(MachineError::EmptyMemory);
        }
        if W::from_index(blocks).is_none() {
            return Err(MachineError::MemoryTooLarge(blocks));
        }
        Ok(Machine {
            mem: vec![Node::zero(); blocks],
            freehead: Addr::null(),
            expr: Addr::null(),
            steps_taken: 0,
            #[cfg(debug_assertions)]
            freed: vec![false; blocks],
        })
    }

    /// Number of blocks, `N`.
    pub fn size(&self) -> usize {
        self.mem.len()
    }

    pub fn freehead(&self) -> Addr<W> {
        self.freehead
    }

    /// Overwrites the `freehead` register. Only meaningful when restoring a
    /// saved memory image.
    pub fn set_freehead(&mut self, head: Addr<W>) {
        self.freehead = head;
        self.resync_free_shadow();
    }

    pub fn expr(&self) -> Addr<W> {
        self.expr
    }

    pub fn set_expr(&mut self, root: Addr<W>) {
        self.expr = root;
    }

    /// Beta reductions performed since the last reset.
    pub fn steps_taken(&self) -> u64 {
        self.steps_taken
    }

    pub(crate) fn check(&self, a: Addr<W>) -> Result<usize, MachineError> {
        let i = a.index();
        if i == 0 || i > self.mem.len() {
            Err(MachineError::Address {
                addr: i,
                size: self.mem.len(),
            })
        } else {
            Ok(i - 1)
        }
    }

    pub fn node(&self, a: Addr<W>) -> Result<&Node<W>, MachineError> {
        let i = self.check(a)?;
        Ok(&self.mem[i])
    }

    /// Raw write access to a block, bypassing every machine invariant.
    pub fn node_mut(&mut self, a: Addr<W>) -> Result<&mut Node<W>, MachineError> {
        let i = self.check(a)?;
        Ok(&mut self.mem[i])
    }

    pub fn kind(&self, a: Addr<W>) -> Result<NodeKind, MachineError> {
        self.node(a).map(Node::kind)
    }

    /// Address of block `index` (1-based). Panics if it is out of range.
    pub fn addr(&self, index: usize) -> Addr<W> {
        assert!(index >= 1 && index <= self.mem.len(), "block {index} out of range");
        Addr::from_index(index).expect("memory size fits the word")
    }

    /// `true` when `child` hangs off the `func` cell of its parent and that
    /// parent also has an operand, i.e. `child` is an operator.
    pub(crate) fn is_operator(&self, child: Addr<W>) -> bool {
        let p = self[child].par;
        !p.is_null() && self[p].func == child && !self[p].arg.is_null()
    }

    /// Points whichever child cell of `parent` held `old` at `new`.
    pub(crate) fn relink(&mut self, parent: Addr<W>, old: Addr<W>, new: Addr<W>) {
        let p = &mut self[parent];
        if p.func == old {
            p.func = new;
        } else {
            debug_assert_eq!(p.arg, old, "{old:?} is not a child of {parent:?}");
            p.arg = new;
        }
    }

    #[cfg(debug_assertions)]
    pub(crate) fn resync_free_shadow(&mut self) {
        self.freed.iter_mut().for_each(|f| *f = false);
        let mut a = self.freehead;
        let mut n = 0;
        while !a.is_null() && n <= self.mem.len() {
            let Ok(i) = self.check(a) else { break };
            self.freed[i] = true;
            a = self.mem[i].copy;
            n += 1;
        }
    }

    #[cfg(not(debug_assertions))]
    pub(crate) fn resync_free_shadow(&mut self) {}
}

impl<W: Word> Index<Addr<W>> for Machine<W> {
    type Output = Node<W>;

    fn index(&self, a: Addr<W>) -> &Node<W> {
        let i = a.index();
        assert!(i != 0, "null address dereferenced");
        #[cfg(debug_assertions)]
        debug_assert!(!self.freed[i - 1], "read of freed block {i}");
        &self.mem[i - 1]
    }
}

impl<W: Word> IndexMut<Addr<W>> for Machine<W> {
    fn index_mut(&mut self, a: Addr<W>) -> &mut Node<W> {
        let i = a.index();
        assert!(i != 0, "null address dereferenced");
        #[cfg(debug_assertions)]
        debug_assert!(!self.freed[i - 1], "write to freed block {i}");
        &mut self.mem[i - 1]
    }
}

impl<W: Word> fmt::Debug for Machine<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Machine")
            .field("size", &self.mem.len())
            .field("freehead", &self.freehead)
            .field("expr", &self.expr)
            .field("steps_taken", &self.steps_taken)
            .finish()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The apply combinator `\x.\y.x y` laid out at blocks 1..=5, written
    /// cell by cell rather than through the encoder.
    pub fn apply_combinator() -> Machine<u32> {
        let mut m = Machine::new(9).unwrap();
        let rows = [(1, 0, 2, 0), (2, 1, 3, 0), (3, 2, 4, 5), (4, 3, 0, 1), (5, 3, 0, 2)];
        for (a, par, func, arg) in rows {
            *m.node_mut(Addr(a)).unwrap() = Node {
                par: Addr(par),
                copy: Addr(0),
                func: Addr(func),
                arg: Addr(arg),
            };
        }
        m.set_expr(Addr(1));
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_machine_is_zeroed() {
        let m = Machine::<u32>::new(5).unwrap();
        assert_eq!(m.size(), 5);
        assert!(m.freehead().is_null());
        assert!(m.expr().is_null());
        for i in 1..=5 {
            assert_eq!(*m.node(Addr(i)).unwrap(), Node::zero());
        }
        assert_eq!(Machine::<u32>::new(1).unwrap().size(), 1);
    }

    #[test]
    fn new_machine_rejects_bad_sizes() {
        assert_eq!(Machine::<u32>::new(0).unwrap_err(), MachineError::EmptyMemory);
        assert_eq!(
            Machine::<u8>::new(256).unwrap_err(),
            MachineError::MemoryTooLarge(256)
        );
        assert!(Machine::<u8>::new(255).is_ok());
    }

    #[test]
    fn kinds_of_the_apply_combinator() {
        let m = fixtures::apply_combinator();
        assert_eq!(m.kind(Addr(1)).unwrap(), NodeKind::Abstraction);
        assert_eq!(m.kind(Addr(2)).unwrap(), NodeKind::Abstraction);
        assert_eq!(m.kind(Addr(3)).unwrap(), NodeKind::Application);
        assert_eq!(m.kind(Addr(4)).unwrap(), NodeKind::Variable);
        assert_eq!(m.kind(Addr(5)).unwrap(), NodeKind::Variable);
        assert_eq!(m.kind(Addr(6)).unwrap(), NodeKind::FreeLeaf);
    }

    #[test]
    fn kind_rejects_out_of_range() {
        let m = fixtures::apply_combinator();
        assert!(matches!(m.kind(Addr(0)), Err(MachineError::Address { addr: 0, .. })));
        assert!(matches!(m.kind(Addr(10)), Err(MachineError::Address { addr: 10, size: 9 })));
    }

    #[test]
    fn kind_is_total() {
        for func in 0u32..3 {
            for arg in 0u32..3 {
                let n = Node {
                    func: Addr(func),
                    arg: Addr(arg),
                    ..Node::zero()
                };
                let expected = match (func != 0, arg != 0) {
                    (true, true) => NodeKind::Application,
                    (true, false) => NodeKind::Abstraction,
                    (false, true) => NodeKind::Variable,
                    (false, false) => NodeKind::FreeLeaf,
                };
                assert_eq!(n.kind(), expected);
            }
        }
    }
}
