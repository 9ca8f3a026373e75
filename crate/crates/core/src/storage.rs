//! Free-list memory management.
//!
//! Free blocks form a singly linked list threaded through their `copy`
//! cells, headed by the `freehead` register. There is no collector: blocks
//! come back only through explicit `put`s, most of them issued by `clear`.

use crate::error::MachineError;
use crate::memory::{Addr, Machine, Node};
use crate::walker::{StepKind, WalkState};
use crate::word::Word;

impl<W: Word> Machine<W> {
    /// Puts every block on the free list, in address order, and zeroes the
    /// registers.
    pub fn reset(&mut self) {
        let n = self.mem.len();
        for i in (0..n).rev() {
            let next = if i + 1 < n {
                Addr::from_index(i + 2).expect("size fits the word")
            } else {
                Addr::null()
            };
            self.mem[i] = Node {
                copy: next,
                ..Node::zero()
            };
        }
        self.freehead = Addr::from_index(1).expect("1 fits any word");
        self.expr = Addr::null();
        self.steps_taken = 0;
        #[cfg(debug_assertions)]
        self.freed.iter_mut().for_each(|f| *f = true);
    }

    /// Pops a zeroed block off the free list.
    pub fn get(&mut self) -> Result<Addr<W>, MachineError> {
        if self.freehead.is_null() {
            return Err(MachineError::OutOfMemory);
        }
        let a = self.freehead;
        let i = a.index() - 1;
        self.freehead = self.mem[i].copy;
        self.mem[i] = Node::zero();
        #[cfg(debug_assertions)]
        {
            self.freed[i] = false;
        }
        Ok(a)
    }

    /// Pushes `a` onto the free list. Its other cells are zeroed so a free
    /// block always reads as a free leaf.
    pub fn put(&mut self, a: Addr<W>) -> Result<(), MachineError> {
        let i = self.check(a)?;
        #[cfg(debug_assertions)]
        {
            debug_assert!(!self.freed[i], "block {} freed twice", a);
            self.freed[i] = true;
        }
        self.mem[i] = Node {
            copy: self.freehead,
            ..Node::zero()
        };
        self.freehead = a;
        Ok(())
    }

    /// Length of the free list.
    pub fn free_count(&self) -> Result<usize, MachineError> {
        let mut count = 0;
        let mut a = self.freehead;
        while !a.is_null() {
            count += 1;
            if count > self.mem.len() {
                return Err(MachineError::FreeListCorrupt(self.mem.len()));
            }
            a = self.node(a)?.copy;
        }
        Ok(count)
    }

    /// Frees the whole tree under `root`.
    ///
    /// The tree must already be detached from anything live. `root`'s par
    /// cell may still name its former parent; the walk stops there.
    pub fn clear(&mut self, root: Addr<W>) -> Result<(), MachineError> {
        self.clear_traced(root, |_, _| {})
    }

    /// [`Machine::clear`], reporting each freed block together with the
    /// number of the walk call that freed it.
    pub fn clear_traced(
        &mut self,
        root: Addr<W>,
        mut on_put: impl FnMut(usize, Addr<W>),
    ) -> Result<(), MachineError> {
        self.check(root)?;
        let mut s = WalkState::init(root, self[root].par)?;
        let mut call = 0;
        loop {
            call += 1;
            match self.walk(&mut s) {
                StepKind::Back => {
                    // Both children are finished with once the walker has
                    // come up from them.
                    let Node { func, arg, .. } = self[s.cur];
                    self.put(func)?;
                    on_put(call, func);
                    if !arg.is_null() {
                        self.put(arg)?;
                        on_put(call, arg);
                    }
                }
                StepKind::Finish => {
                    self.put(root)?;
                    on_put(call, root);
                    return Ok(());
                }
                StepKind::Variable | StepKind::FunctionPart | StepKind::ArgumentPart => {}
            }
        }
    }

    /// Makes every block not in `live` free, zeroing it, and links the free
    /// blocks in ascending address order.
    pub fn rebuild_free_list(&mut self, live: &[Addr<W>]) {
        let mut keep = vec![false; self.mem.len()];
        for a in live {
            keep[a.index() - 1] = true;
        }
        let mut head = Addr::null();
        for i in (0..self.mem.len()).rev() {
            if !keep[i] {
                self.mem[i] = Node {
                    copy: head,
                    ..Node::zero()
                };
                head = Addr::from_index(i + 1).expect("size fits the word");
            }
        }
        self.set_freehead(head);
    }
}
