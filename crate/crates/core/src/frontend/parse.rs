use std::iter::Peekable;
use std::str::Chars;

use thiserror::Error;

use super::Term;

/// A syntax error at a 1-based character column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {column}: {msg}")]
pub struct ParseError {
    pub column: usize,
    pub msg: String,
}

/// Parses a term.
///
/// ```text
/// term  := abs | app
/// abs   := ('\' | 'λ') IDENT '.' term
/// app   := atom { atom } [ abs ]
/// atom  := IDENT | '(' term ')'
/// ```
///
/// Application associates to the left and an abstraction body extends as
/// far right as possible, so a trailing abstraction may close an
/// application without parentheses. Identifiers start with a letter or
/// underscore and continue with letters, digits, underscores or primes.
pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser {
        chars: src.chars().peekable(),
        column: 1,
    };
    let t = p.term()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(t),
        Some(c) => Err(p.error(format!("unexpected `{c}`"))),
    }
}

struct Parser<'a> {
    chars: Peekable<Chars<'a>>,
    // column of the next unread character
    column: usize,
}

fn ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn is_lambda(c: char) -> bool {
    c == '\\' || c == 'λ'
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        self.column += 1;
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, msg: String) -> ParseError {
        ParseError {
            column: self.column,
            msg,
        }
    }

    fn unexpected(&mut self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(c) => self.error(format!("expected {wanted}, found `{c}`")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if ident_start(c) => {
                let mut name = String::new();
                while let Some(c) = self.peek().filter(|&c| ident_continue(c)) {
                    name.push(c);
                    self.bump();
                }
                Ok(name)
            }
            _ => Err(self.unexpected("identifier")),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        self.skip_ws();
        if self.peek().is_some_and(is_lambda) {
            return self.abs();
        }
        let mut t = self.atom()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if is_lambda(c) => return Ok(Term::app(t, self.abs()?)),
                Some(c) if ident_start(c) || c == '(' => t = Term::app(t, self.atom()?),
                _ => return Ok(t),
            }
        }
    }

    fn abs(&mut self) -> Result<Term, ParseError> {
        self.bump();
        let name = self.ident()?;
        self.expect('.')?;
        Ok(Term::lam(name, self.term()?))
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        self.skip_ws();
        if self.peek() == Some('(') {
            self.bump();
            let t = self.term()?;
            self.expect(')')?;
            Ok(t)
        } else if self.peek().is_some_and(ident_start) {
            Ok(Term::Var(self.ident()?))
        } else {
            Err(self.unexpected("term"))
        }
    }
}
