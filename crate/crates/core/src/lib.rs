//! A lambda-calculus evaluator built as an abstract machine whose entire
//! memory is one heap of identical four-cell blocks.
//!
//! Expressions live in machine memory as trees with parent links. The
//! machine reduces them to normal form in normal order using only
//! non-recursive traversals, allocating and freeing blocks through a single
//! free list. There is no garbage collector: every block a reduction makes
//! useless is returned explicitly.
//!
//! ```
//! use heap_lambda::{encode, decode, parse_term, print_term, EvalLimits, Machine32};
//!
//! let mut m = Machine32::new(1024).unwrap();
//! m.reset();
//! encode(&mut m, &parse_term(r"(\x.\y.x y) (\a.a)").unwrap()).unwrap();
//! let outcome = m.normal(EvalLimits::default());
//! assert!(outcome.is_normal_form());
//! assert_eq!(print_term(&decode(&m, m.expr()).unwrap()), r"\v1.v1");
//! ```
//!
//! Every machine type is generic over the address [`Word`]; the aliases
//! below fix the common widths.

pub mod cli;
mod copier;
mod error;
pub mod evaluator;
pub mod frontend;
pub mod memory;
pub mod oracle;
mod replacer;
mod storage;
pub mod walker;
mod word;

pub use error::{Diagnostic, DumpError, MachineError};
pub use evaluator::{EvalLimits, EvalOutcome, Reduction};
pub use frontend::{
    alpha_eq, decode, encode, parse_term, print_term, to_index, IndexTerm, ParseError, Term,
    TermError,
};
pub use memory::{format_dump, parse_dump, Addr, DumpFile, Machine, Node, NodeKind, Overlay};
pub use oracle::{contract_leftmost, reference_normalize, OracleOutcome};
pub use walker::{Direction, StepKind, WalkState};
pub use word::Word;

pub type Machine16 = Machine<u16>;
pub type Machine32 = Machine<u32>;
pub type Machine64 = Machine<u64>;

pub type Addr16 = Addr<u16>;
pub type Addr32 = Addr<u32>;
pub type Addr64 = Addr<u64>;
