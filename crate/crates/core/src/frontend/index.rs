use super::{Term, TermError};

/// A nameless term: each variable is its distance to its binder, counting
/// the nearest enclosing abstraction as 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IndexTerm {
    Var(usize),
    Lam(Box<IndexTerm>),
    App(Box<IndexTerm>, Box<IndexTerm>),
}

impl IndexTerm {
    pub fn lam(body: IndexTerm) -> IndexTerm {
        IndexTerm::Lam(Box::new(body))
    }

    pub fn app(f: IndexTerm, a: IndexTerm) -> IndexTerm {
        IndexTerm::App(Box::new(f), Box::new(a))
    }

    /// Converts back to a named term with binders `x1`, `x2`, ... by depth.
    pub fn to_named(&self) -> Term {
        fn go(t: &IndexTerm, depth: usize) -> Term {
            match t {
                IndexTerm::Var(i) => Term::Var(format!("x{}", depth + 1 - i)),
                IndexTerm::Lam(b) => Term::lam(format!("x{}", depth + 1), go(b, depth + 1)),
                IndexTerm::App(f, a) => Term::app(go(f, depth), go(a, depth)),
            }
        }
        go(self, 0)
    }
}

/// Nameless form of a closed term.
pub fn to_index(t: &Term) -> Result<IndexTerm, TermError> {
    fn go<'t>(t: &'t Term, scope: &mut Vec<&'t str>) -> Result<IndexTerm, TermError> {
        Ok(match t {
            Term::Var(x) => {
                let pos = scope
                    .iter()
                    .rposition(|n| n == x)
                    .ok_or_else(|| TermError::FreeVariable(x.clone()))?;
                IndexTerm::Var(scope.len() - pos)
            }
            Term::Lam(x, body) => {
                scope.push(x);
                let b = go(body, scope);
                scope.pop();
                IndexTerm::lam(b?)
            }
            Term::App(f, a) => IndexTerm::app(go(f, scope)?, go(a, scope)?),
        })
    }
    go(t, &mut Vec::new())
}

/// Equality up to renaming of bound variables. Both terms must be closed.
pub fn alpha_eq(a: &Term, b: &Term) -> Result<bool, TermError> {
    Ok(to_index(a)? == to_index(b)?)
}
