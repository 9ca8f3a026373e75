use super::Term;

/// Renders `t` with as few parentheses as the grammar allows, using `\` for
/// lambda. An abstraction is parenthesised whenever something follows it or
/// it is an operand, so the output never depends on the trailing-abstraction
/// rule.
pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    write_term(t, &mut out);
    out
}

fn write_term(t: &Term, out: &mut String) {
    match t {
        Term::Var(x) => out.push_str(x),
        Term::Lam(x, body) => {
            out.push('\\');
            out.push_str(x);
            out.push('.');
            write_term(body, out);
        }
        Term::App(f, a) => {
            match **f {
                Term::Lam(..) => parenthesised(f, out),
                _ => write_term(f, out),
            }
            out.push(' ');
            match **a {
                Term::Var(_) => write_term(a, out),
                _ => parenthesised(a, out),
            }
        }
    }
}

fn parenthesised(t: &Term, out: &mut String) {
    out.push('(');
    write_term(t, out);
    out.push(')');
}
