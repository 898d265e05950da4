//! Surface syntax for single-mode oscillator–Grassmann expressions.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' int)?
//! atom   := 'a' | 'ad' | 'xi' | 'xibar' | 'dxi' | 'dxibar' | 'q' | 'qN'
//!         | 'br(' int ')' | 'rad(' int ')' | int ('/' int)? | '(' expr ')'
//! ```
//!
//! `q^m` is ζ^m, `qN^s` is the operator `q^{sN}`, `br(n)` is `[n]_q` and
//! `rad(n)` is `sqrt([n]_q)`. Negative exponents are accepted on scalar atoms
//! and on `qN`.

mod eval;
mod parser;
mod printer;

pub use eval::{evaluate, EvalTerm, Evaluated};
pub use parser::{parse, ParseError};
pub use printer::print;

use crate::scalars::Rational;

/// Exponents beyond this magnitude are rejected.
pub const MAX_EXPONENT: i64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    A,
    Ad,
    Xi,
    Xibar,
    Dxi,
    Dxibar,
    /// `q^m`
    QPow(i64),
    /// `q^{sN}`
    QN(i64),
    /// `[n]_q`
    Bracket(u32),
    /// `sqrt([n]_q)`
    Rad(u32),
    /// Nonnegative literal.
    Rational(Rational),
}

impl Atom {
    /// Atoms that may carry a negative exponent.
    pub fn invertible(&self) -> bool {
        matches!(
            self,
            Atom::QPow(_) | Atom::QN(_) | Atom::Bracket(_) | Atom::Rad(_) | Atom::Rational(_)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Sum(Vec<(Sign, Expr)>),
    /// Ordered; never reordered.
    Product(Vec<Expr>),
    Power(Box<Expr>, i64),
    Atom(Atom),
}

impl Expr {
    pub fn atom(a: Atom) -> Self {
        Expr::Atom(a)
    }

    /// Flatten nested sums and products and unwrap one-element nodes.
    pub fn normalize(self) -> Expr {
        match self {
            Expr::Atom(a) => Expr::Atom(a),
            Expr::Power(b, e) => Expr::Power(Box::new(b.normalize()), e),
            Expr::Product(fs) => {
                let mut out = Vec::new();
                for f in fs {
                    match f.normalize() {
                        Expr::Product(inner) => out.extend(inner),
                        other => out.push(other),
                    }
                }
                if out.len() == 1 {
                    out.pop().expect("one factor")
                } else {
                    Expr::Product(out)
                }
            }
            Expr::Sum(ts) => {
                let mut out = Vec::new();
                for (s, t) in ts {
                    match t.normalize() {
                        Expr::Sum(inner) => {
                            out.extend(inner.into_iter().map(|(s2, t2)| (s.flip(s2), t2)))
                        }
                        other => out.push((s, other)),
                    }
                }
                if out.len() == 1 && out[0].0 == Sign::Plus {
                    out.pop().expect("one term").1
                } else {
                    Expr::Sum(out)
                }
            }
        }
    }

    /// Built from invertible atoms only.
    pub fn invertible_form(&self) -> bool {
        match self {
            Expr::Atom(a) => a.invertible(),
            Expr::Power(b, _) => b.invertible_form(),
            Expr::Product(fs) => fs.iter().all(Expr::invertible_form),
            Expr::Sum(ts) => ts.iter().all(|(_, t)| t.invertible_form()),
        }
    }

    /// Whether the expression mentions a differential.
    pub fn has_differential(&self) -> bool {
        match self {
            Expr::Atom(a) => matches!(a, Atom::Dxi | Atom::Dxibar),
            Expr::Power(b, _) => b.has_differential(),
            Expr::Product(fs) => fs.iter().any(Expr::has_differential),
            Expr::Sum(ts) => ts.iter().any(|(_, t)| t.has_differential()),
        }
    }
}
