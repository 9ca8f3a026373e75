use std::collections::HashMap;

use super::{to_index, Term, TermError};
use crate::memory::{Addr, Machine, NodeKind};
use crate::walker::{StepKind, WalkState};
use crate::word::Word;

enum Task<'t, W> {
    Build {
        term: &'t Term,
        parent: Addr<W>,
        as_operand: bool,
    },
    EndScope,
}

/// Lays a closed term out in memory and points `expr` at it.
///
/// Blocks are taken from the free list in preorder, operator (or body)
/// before operand, so on a freshly reset machine the root lands at block 1.
pub fn encode<W: Word>(m: &mut Machine<W>, t: &Term) -> Result<Addr<W>, TermError> {
    // Reject open terms before touching memory.
    to_index(t)?;

    let mut scope: Vec<(&str, Addr<W>)> = Vec::new();
    let mut root = Addr::null();
    let mut tasks = vec![Task::Build {
        term: t,
        parent: Addr::null(),
        as_operand: false,
    }];
    while let Some(task) = tasks.pop() {
        let (term, parent, as_operand) = match task {
            Task::Build {
                term,
                parent,
                as_operand,
            } => (term, parent, as_operand),
            Task::EndScope => {
                scope.pop();
                continue;
            }
        };
        let a = m.get()?;
        m[a].par = parent;
        if parent.is_null() {
            root = a;
        } else if as_operand {
            m[parent].arg = a;
        } else {
            m[parent].func = a;
        }
        match term {
            Term::Var(x) => {
                let (_, binder) = scope
                    .iter()
                    .rev()
                    .find(|(name, _)| name == x)
                    .expect("closedness checked above");
                m[a].arg = *binder;
            }
            Term::Lam(x, body) => {
                scope.push((x, a));
                tasks.push(Task::EndScope);
                tasks.push(Task::Build {
                    term: body,
                    parent: a,
                    as_operand: false,
                });
            }
            Term::App(f, x) => {
                tasks.push(Task::Build {
                    term: x,
                    parent: a,
                    as_operand: true,
                });
                tasks.push(Task::Build {
                    term: f,
                    parent: a,
                    as_operand: false,
                });
            }
        }
    }
    m.set_expr(root);
    Ok(root)
}

/// Reads the tree at `root` back as a term.
///
/// Abstractions are named `v1`, `v2`, ... in preorder. Variables bound
/// outside the tree, and free leaves, come back as `_`.
pub fn decode<W: Word>(m: &Machine<W>, root: Addr<W>) -> Result<Term, TermError> {
    m.validate(root)?;
    let mut names: HashMap<Addr<W>, String> = HashMap::new();
    let name = |a: Addr<W>, names: &mut HashMap<Addr<W>, String>| {
        if m[a].kind() == NodeKind::Abstraction {
            let n = names.len() + 1;
            names.insert(a, format!("v{n}"));
        }
    };
    name(root, &mut names);

    let mut built: Vec<Term> = Vec::new();
    let mut s = WalkState::init(root, m[root].par)?;
    loop {
        match m.walk(&mut s) {
            StepKind::FunctionPart | StepKind::ArgumentPart => name(s.cur, &mut names),
            StepKind::Variable => {
                let n = m[s.cur];
                let x = match n.kind() {
                    NodeKind::Variable => names.get(&n.arg).cloned(),
                    _ => None,
                };
                built.push(Term::Var(x.unwrap_or_else(|| "_".to_string())));
            }
            StepKind::Back => {
                let n = m[s.cur];
                let t = if n.kind() == NodeKind::Application {
                    let x = built.pop().expect("operand built");
                    let f = built.pop().expect("operator built");
                    Term::app(f, x)
                } else {
                    let body = built.pop().expect("body built");
                    Term::Lam(names[&s.cur].clone(), Box::new(body))
                };
                built.push(t);
            }
            StepKind::Finish => break,
        }
    }
    debug_assert_eq!(built.len(), 1);
    Ok(built.pop().expect("root built"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::{alpha_eq, parse_term, print_term};
    use crate::memory::{fixtures, format_dump};
    use crate::MachineError;

    fn fresh(n: usize) -> Machine<u32> {
        let mut m = Machine::new(n).unwrap();
        m.reset();
        m
    }

    #[test]
    fn apply_combinator_matches_the_figure() {
        let mut m = fresh(5);
        let root = encode(&mut m, &parse_term(r"\x.\y.x y").unwrap()).unwrap();
        assert_eq!(root, Addr(1));
        assert_eq!(m.expr(), Addr(1));
        assert_eq!(
            format_dump(&m, 5).unwrap(),
            "1 0 0 2 0\n2 1 0 3 0\n3 2 0 4 5\n4 3 0 0 1\n5 3 0 0 2\n"
        );
    }

    #[test]
    fn omega_layout_is_preorder() {
        let mut m = fresh(9);
        encode(&mut m, &parse_term(r"(\s.s s) (\s.s s)").unwrap()).unwrap();
        assert_eq!(
            format_dump(&m, 9).unwrap(),
            "1 0 0 2 6\n2 1 0 3 0\n3 2 0 4 5\n4 3 0 0 2\n5 3 0 0 2\n\
             6 1 0 7 0\n7 6 0 8 9\n8 7 0 0 6\n9 7 0 0 6\n"
        );
    }

    #[test]
    fn shadowing_binds_innermost() {
        let mut m = fresh(8);
        encode(&mut m, &parse_term(r"\x.\x.x").unwrap()).unwrap();
        assert_eq!(m.node(Addr(3)).unwrap().arg, Addr(2));
    }

    #[test]
    fn encode_errors() {
        let mut m = fresh(8);
        let err = encode(&mut m, &Term::var("x")).unwrap_err();
        assert_eq!(err.to_string(), "free variable x");
        assert_eq!(m.free_count(), Ok(8), "nothing allocated");
        let mut small = fresh(2);
        assert_eq!(
            encode(&mut small, &parse_term(r"\x.x x").unwrap()),
            Err(TermError::Machine(MachineError::OutOfMemory))
        );
    }

    #[test]
    fn decode_names_binders_in_preorder() {
        let m = fixtures::apply_combinator();
        assert_eq!(print_term(&decode(&m, Addr(1)).unwrap()), r"\v1.\v2.v1 v2");
        assert_eq!(print_term(&decode(&m, Addr(2)).unwrap()), r"\v1._ v1");
    }

    #[test]
    fn decode_leaves() {
        let mut m = fresh(4);
        let id = encode(&mut m, &parse_term(r"\a.a").unwrap()).unwrap();
        assert_eq!(print_term(&decode(&m, id).unwrap()), r"\v1.v1");
        let leaf = m.get().unwrap();
        assert_eq!(decode(&m, leaf).unwrap(), Term::var("_"));
    }

    #[test]
    fn decode_rejects_malformed_memory() {
        let mut m = fixtures::apply_combinator();
        m.node_mut(Addr(5)).unwrap().par = Addr(2);
        assert!(matches!(decode(&m, Addr(1)), Err(TermError::Malformed(_))));
    }

    #[test]
    fn round_trip_is_alpha_equivalent() {
        let t = parse_term(r"\f.\x.f (f x) (\y.y x)").unwrap();
        let mut m = fresh(32);
        let root = encode(&mut m, &t).unwrap();
        assert!(alpha_eq(&decode(&m, root).unwrap(), &t).unwrap());
        assert_eq!(m.validate(root), Ok(()));
    }
}
