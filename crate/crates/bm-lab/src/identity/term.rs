//! Terms over the variables x, y, z and their parser/printer.
//!
//! Grammar: juxtaposition (adjacency) binds tighter than the explicit `.`
//! operator; parentheses override; neither level is associative, so within
//! one level adjacency groups left-to-right. `xy.zx` is `(xy)·(zx)` and
//! `xyz` is `(xy)z`.

use std::fmt;

use super::IdentityError;

/// A variable: one of the three letters x, y, z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    /// The three variables in canonical order.
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    /// The letter this variable is written as.
    pub fn letter(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }

    /// Index 0..3, used by assignments and compiled evaluators.
    pub fn index(self) -> usize {
        self as usize
    }

    fn from_letter(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

/// A binary-tree expression: a variable or a product of two terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    Product(Box<Term>, Box<Term>),
}

impl Term {
    /// Convenience product constructor.
    pub fn product(left: Term, right: Term) -> Term {
        Term::Product(Box::new(left), Box::new(right))
    }

    /// The leaf sequence, left to right.
    pub fn leaves(&self) -> Vec<Var> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Var>) {
        match self {
            Term::Var(v) => out.push(*v),
            Term::Product(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Number of leaves.
    pub fn leaf_count(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Product(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Number of product nodes.
    pub fn product_count(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Product(l, r) => 1 + l.product_count() + r.product_count(),
        }
    }

    /// Recursively swaps the children of every product; the syntactic image
    /// of replacing the operation by `x ∗ y = y · x`.
    pub fn mirror(&self) -> Term {
        match self {
            Term::Var(v) => Term::Var(*v),
            Term::Product(l, r) => Term::product(r.mirror(), l.mirror()),
        }
    }

    /// Applies a variable renaming.
    pub(crate) fn rename(&self, map: &[Var; 3]) -> Term {
        match self {
            Term::Var(v) => Term::Var(map[v.index()]),
            Term::Product(l, r) => Term::product(l.rename(map), r.rename(map)),
        }
    }
}

/// Renders terms the way the catalog writes them: adjacent letters for a
/// product of two variables, one `.` between the halves of a larger product,
/// and parentheses around a three-leaf factor next to a single letter.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{}", v.letter()),
            Term::Product(l, r) => match (&**l, &**r) {
                (Term::Var(a), Term::Var(b)) => write!(f, "{}{}", a.letter(), b.letter()),
                _ => match (l.leaf_count(), r.leaf_count()) {
                    (2, 1) | (1, 2) | (2, 2) => write!(f, "{l}.{r}"),
                    (3, 1) => write!(f, "({l}){r}"),
                    (1, 3) => write!(f, "{l}({r})"),
                    _ => write!(f, "({l}).({r})"),
                },
            },
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term({self})")
    }
}

/// Parses a single term (any shape the grammar admits; Bol-Moufang shape is
/// enforced separately by [`super::Identity`]).
pub fn parse_term(text: &str) -> Result<Term, IdentityError> {
    let mut p = Parser::new(text, 0);
    let t = p.dotexpr()?;
    p.expect_end()?;
    Ok(t)
}

/// Parses `lhs = rhs` into a pair of terms.
pub(crate) fn parse_equation(text: &str) -> Result<(Term, Term), IdentityError> {
    let eq = text.find('=').ok_or_else(|| IdentityError::Syntax {
        position: text.len(),
        message: "expected `=` between the two sides".into(),
    })?;
    let mut left = Parser::new(&text[..eq], 0);
    let lhs = left.dotexpr()?;
    left.expect_end()?;
    let mut right = Parser::new(&text[eq + 1..], eq + 1);
    let rhs = right.dotexpr()?;
    right.expect_end()?;
    Ok((lhs, rhs))
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, base: usize) -> Parser<'a> {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            base,
        }
    }

    fn peek(&mut self) -> Option<u8> {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                return Some(b);
            }
        }
        None
    }

    fn error(&self, message: impl Into<String>) -> IdentityError {
        IdentityError::Syntax {
            position: self.base + self.pos,
            message: message.into(),
        }
    }

    fn dotexpr(&mut self) -> Result<Term, IdentityError> {
        let mut t = self.juxt()?;
        while self.peek() == Some(b'.') {
            self.pos += 1;
            t = Term::product(t, self.juxt()?);
        }
        Ok(t)
    }

    fn juxt(&mut self) -> Result<Term, IdentityError> {
        let mut t = self.primary()?;
        while matches!(self.peek(), Some(b'x' | b'y' | b'z' | b'(')) {
            t = Term::product(t, self.primary()?);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term, IdentityError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let t = self.dotexpr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(t)
            }
            Some(b) => {
                if let Some(v) = Var::from_letter(b as char) {
                    self.pos += 1;
                    Ok(Term::Var(v))
                } else {
                    Err(self.error(format!(
                        "expected a variable (x, y, z) or `(`, found `{}`",
                        b as char
                    )))
                }
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn expect_end(&mut self) -> Result<(), IdentityError> {
        match self.peek() {
            None => Ok(()),
            Some(b) => Err(self.error(format!("unexpected `{}` after the term", b as char))),
        }
    }
}
