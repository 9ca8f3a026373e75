//! Named lambda terms: concrete syntax, conversion to and from machine
//! memory, and alpha-equivalence via nameless terms.

mod encode;
mod index;
mod parse;
mod print;

pub use encode::{decode, encode};
pub use index::{alpha_eq, to_index, IndexTerm};
pub use parse::{parse_term, ParseError};
pub use print::print_term;

use std::fmt;

use thiserror::Error;

use crate::error::{Diagnostic, MachineError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Lam(String, Box<Term>),
    App(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn lam(name: impl Into<String>, body: Term) -> Term {
        Term::Lam(name.into(), Box::new(body))
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    /// Node count; equals the number of machine blocks the term occupies.
    pub fn size(&self) -> usize {
        let mut n = 0;
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            n += 1;
            match t {
                Term::Var(_) => {}
                Term::Lam(_, b) => stack.push(b),
                Term::App(f, a) => {
                    stack.push(f);
                    stack.push(a);
                }
            }
        }
        n
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_term(self))
    }
}

/// Failure moving a term into or out of the machine, or naming it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("free variable {0}")]
    FreeVariable(String),
    #[error(transparent)]
    Machine(#[from] MachineError),
    #[error("malformed memory: {0}")]
    Malformed(#[from] Diagnostic),
}
