//! Reference normalizer over nameless terms.
//!
//! Textbook normal-order reduction by structural recursion with
//! shift/substitute. It shares nothing with the machine beyond the term
//! types, which is what makes it useful for differential testing.

use crate::frontend::IndexTerm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    NormalForm { term: IndexTerm, steps: u64 },
    /// `fuel` contractions were made and another redex remained.
    FuelExhausted,
}

/// Contracts leftmost-outermost redexes until none remain or `fuel`
/// contractions have been made.
pub fn reference_normalize(t: &IndexTerm, fuel: u64) -> OracleOutcome {
    let mut t = t.clone();
    let mut steps = 0;
    while let Some(next) = contract_leftmost(&t) {
        if steps == fuel {
            return OracleOutcome::FuelExhausted;
        }
        t = next;
        steps += 1;
    }
    OracleOutcome::NormalForm { term: t, steps }
}

/// One normal-order step, or `None` for a normal form.
pub fn contract_leftmost(t: &IndexTerm) -> Option<IndexTerm> {
    match t {
        IndexTerm::Var(_) => None,
        IndexTerm::Lam(b) => contract_leftmost(b).map(IndexTerm::lam),
        IndexTerm::App(f, a) => {
            if let IndexTerm::Lam(body) = &**f {
                return Some(substitute(body, 0, a));
            }
            if let Some(f2) = contract_leftmost(f) {
                return Some(IndexTerm::App(Box::new(f2), a.clone()));
            }
            contract_leftmost(a).map(|a2| IndexTerm::App(f.clone(), Box::new(a2)))
        }
    }
}

/// `body` with the variable bound just outside it (index `depth + 1` at
/// `depth` binders down) replaced by `arg`, and the binder removed.
fn substitute(body: &IndexTerm, depth: usize, arg: &IndexTerm) -> IndexTerm {
    match body {
        IndexTerm::Var(i) if *i == depth + 1 => shift(arg, depth, 0),
        IndexTerm::Var(i) if *i > depth + 1 => IndexTerm::Var(i - 1),
        IndexTerm::Var(i) => IndexTerm::Var(*i),
        IndexTerm::Lam(b) => IndexTerm::lam(substitute(b, depth + 1, arg)),
        IndexTerm::App(f, a) => IndexTerm::app(substitute(f, depth, arg), substitute(a, depth, arg)),
    }
}

/// Adds `by` to every variable pointing above `cutoff` binders.
fn shift(t: &IndexTerm, by: usize, cutoff: usize) -> IndexTerm {
    if by == 0 {
        return t.clone();
    }
    match t {
        IndexTerm::Var(i) if *i > cutoff => IndexTerm::Var(i + by),
        IndexTerm::Var(i) => IndexTerm::Var(*i),
        IndexTerm::Lam(b) => IndexTerm::lam(shift(b, by, cutoff + 1)),
        IndexTerm::App(f, a) => IndexTerm::app(shift(f, by, cutoff), shift(a, by, cutoff)),
    }
}
