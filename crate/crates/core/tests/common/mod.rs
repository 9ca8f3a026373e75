#![allow(dead_code)]

use heap_lambda::{parse_term, Term};
use rand::Rng;

const NAMES: [&str; 5] = ["x", "y", "z", "f", "g"];

/// A random closed term of exactly `size` nodes (`size >= 2`). Binder names
/// come from a small pool, so shadowing is common.
pub fn closed_term(rng: &mut impl Rng, size: usize) -> Term {
    assert!(size >= 2);
    let mut scope = Vec::new();
    build(rng, size, &mut scope)
}

fn build(rng: &mut impl Rng, size: usize, scope: &mut Vec<String>) -> Term {
    if size == 1 {
        let mut visible: Vec<&String> = scope.iter().collect();
        visible.sort();
        visible.dedup();
        let name = visible[rng.gen_range(0..visible.len())].clone();
        return Term::Var(name);
    }
    // An application needs both halves buildable: with nothing in scope a
    // single node cannot be a closed term.
    let min_part = if scope.is_empty() { 2 } else { 1 };
    let can_apply = size > 2 * min_part;
    if can_apply && rng.gen_bool(0.5) {
        let left = rng.gen_range(min_part..=size - 1 - min_part);
        let f = build(rng, left, scope);
        let a = build(rng, size - 1 - left, scope);
        Term::app(f, a)
    } else {
        let name = NAMES[rng.gen_range(0..NAMES.len())].to_string();
        scope.push(name.clone());
        let body = build(rng, size - 1, scope);
        scope.pop();
        Term::lam(name, body)
    }
}

pub fn term(src: &str) -> Term {
    parse_term(src).unwrap_or_else(|e| panic!("{src}: {e}"))
}

pub fn church(n: usize) -> Term {
    let mut body = Term::var("x");
    for _ in 0..n {
        body = Term::app(Term::var("f"), body);
    }
    Term::lam("f", Term::lam("x", body))
}

pub const OMEGA: &str = r"(\s.s s) (\s.s s)";
pub const PLUS: &str = r"\m.\n.\f.\x.m f (n f x)";
pub const TIMES: &str = r"\m.\n.\f.m (n f)";
pub const PRED: &str = r"\n.\f.\x.n (\g.\h.h (g f)) (\u.x) (\u.u)";
pub const TRUE: &str = r"\t.\f.t";
pub const FALSE: &str = r"\t.\f.f";

/// `f a b ...` with every piece given as source text.
pub fn apply(parts: &[&str]) -> Term {
    let mut it = parts.iter().map(|s| term(s));
    let first = it.next().expect("at least one part");
    it.fold(first, Term::app)
}
