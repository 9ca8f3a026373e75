use thiserror::Error;

/// Errors raised by machine commands.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MachineError {
    #[error("machine memory must hold at least one block")]
    EmptyMemory,
    #[error("memory size {0} does not fit the address word")]
    MemoryTooLarge(usize),
    #[error("address {addr} out of range 1..={size}")]
    Address { addr: usize, size: usize },
    /// The free list is empty. The run that hit this is dead; its memory is
    /// only good for inspection.
    #[error("out of memory: free list exhausted")]
    OutOfMemory,
    #[error("free list corrupted: chain longer than {0} blocks")]
    FreeListCorrupt(usize),
    #[error("node {0} is not a beta-redex")]
    NotRedex(usize),
}

/// A well-formedness violation found by [`crate::Machine::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Diagnostic {
    #[error("address out of range at {0}")]
    OutOfRange(usize),
    #[error("par mismatch at {0}")]
    ParMismatch(usize),
    #[error("binder not an abstraction at {0}")]
    BinderNotAbstraction(usize),
    #[error("binder not in scope at {0}")]
    BinderOutOfScope(usize),
    #[error("node visited twice at {0}")]
    Shared(usize),
    #[error("copy cell not zero at {0}")]
    DirtyCopy(usize),
}

impl Diagnostic {
    /// The offending block.
    pub fn addr(&self) -> usize {
        match *self {
            Diagnostic::OutOfRange(a)
            | Diagnostic::ParMismatch(a)
            | Diagnostic::BinderNotAbstraction(a)
            | Diagnostic::BinderOutOfScope(a)
            | Diagnostic::Shared(a)
            | Diagnostic::DirtyCopy(a) => a,
        }
    }
}

/// Errors reading the textual memory dump.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DumpError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: duplicate address {addr}")]
    Duplicate { line: usize, addr: usize },
    #[error("line {line}: address {addr} out of range")]
    OutOfRange { line: usize, addr: usize },
    #[error("dump has no expr= header")]
    MissingExpr,
}
