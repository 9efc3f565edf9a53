//! A minimal s-expression reader used for formula and interpretation-spec files.
//!
//! Atoms are maximal runs of characters other than whitespace and parentheses; `;` starts a
//! comment running to the end of the line.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

impl Sexp {
    pub fn atom(s: impl Into<String>) -> Self {
        Sexp::Atom(s.into())
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom(a) => Some(a),
            Sexp::List(_) => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List(items) => Some(items),
            Sexp::Atom(_) => None,
        }
    }

    /// The head atom of a non-empty list.
    pub fn head(&self) -> Option<&str> {
        self.as_list()?.first()?.as_atom()
    }
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Atom(a) => f.write_str(a),
            Sexp::List(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

enum Token {
    Open(usize),
    Close(usize),
    Atom(String),
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '\n' => {
                line += 1;
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            ';' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    chars.next();
                }
            }
            '(' => {
                out.push(Token::Open(line));
                chars.next();
            }
            ')' => {
                out.push(Token::Close(line));
                chars.next();
            }
            _ => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                        break;
                    }
                    s.push(c);
                    chars.next();
                }
                out.push(Token::Atom(s));
            }
        }
    }
    out
}

/// Parses every top-level expression in `text`.
pub fn parse_all(text: &str) -> Result<Vec<Sexp>> {
    let mut stack: Vec<(usize, Vec<Sexp>)> = Vec::new();
    let mut top = Vec::new();
    for tok in tokenize(text) {
        match tok {
            Token::Open(line) => stack.push((line, Vec::new())),
            Token::Close(line) => {
                let (_, items) = stack
                    .pop()
                    .ok_or_else(|| Error::parse(format!("line {line}: unbalanced `)`")))?;
                let e = Sexp::List(items);
                match stack.last_mut() {
                    Some((_, parent)) => parent.push(e),
                    None => top.push(e),
                }
            }
            Token::Atom(a) => match stack.last_mut() {
                Some((_, parent)) => parent.push(Sexp::Atom(a)),
                None => top.push(Sexp::Atom(a)),
            },
        }
    }
    if let Some((line, _)) = stack.last() {
        return Err(Error::parse(format!("line {line}: unclosed `(`")));
    }
    Ok(top)
}

/// Parses exactly one expression.
pub fn parse(text: &str) -> Result<Sexp> {
    let mut all = parse_all(text)?;
    match all.len() {
        1 => Ok(all.pop().expect("one element")),
        0 => Err(Error::parse("empty input")),
        n => Err(Error::parse(format!("expected one expression, found {n}"))),
    }
}
