use super::{Atom, Expr, Sign};
use crate::berezin::integrate_word;
use crate::error::{AlgebraError, Result};
use crate::grassmann::{Generator, GrassmannPolynomial};
use crate::oscillator::{mixed_normal_order, Letter, MixedPolynomial, MixedWord};
use crate::scalars::{q_number, QContext, RadicalScalar};

/// Longest word the expander will build.
pub const MAX_WORD_LEN: usize = 512;
/// Largest number of words the expander will build.
pub const MAX_TERMS: usize = 1 << 16;

/// One expanded word with its coefficient.
#[derive(Clone, Debug)]
pub struct EvalTerm {
    pub coefficient: RadicalScalar,
    pub letters: Vec<Letter>,
}

/// An expression expanded into a sum of ordered words.
#[derive(Clone, Debug)]
pub struct Evaluated {
    ctx: QContext,
    pub terms: Vec<EvalTerm>,
}

fn count(letters: &[Letter], l: Letter) -> usize {
    letters.iter().filter(|&&x| x == l).count()
}

impl Evaluated {
    fn scalar(ctx: &QContext, c: RadicalScalar) -> Self {
        Evaluated {
            ctx: ctx.clone(),
            terms: vec![EvalTerm {
                coefficient: c,
                letters: vec![],
            }],
        }
    }

    fn letter(ctx: &QContext, l: Letter) -> Self {
        Evaluated {
            ctx: ctx.clone(),
            terms: vec![EvalTerm {
                coefficient: RadicalScalar::one(ctx),
                letters: vec![l],
            }],
        }
    }

    /// Add a word, merging with an equal word when the radicals allow it.
    fn push(&mut self, t: EvalTerm) {
        if t.coefficient.is_zero() {
            return;
        }
        // one mode: k equal variables in a word vanish whatever their order
        let k = self.ctx.k() as usize;
        if count(&t.letters, Letter::Xi) >= k || count(&t.letters, Letter::Xibar) >= k {
            return;
        }
        if let Some(pos) = self.terms.iter().position(|s| s.letters == t.letters) {
            if let Ok(sum) = self.terms[pos].coefficient.checked_add(&t.coefficient) {
                if sum.is_zero() {
                    self.terms.remove(pos);
                } else {
                    self.terms[pos].coefficient = sum;
                }
                return;
            }
        }
        self.terms.push(t);
    }

    fn product(&self, other: &Self) -> Result<Self> {
        let mut out = Evaluated {
            ctx: self.ctx.clone(),
            terms: vec![],
        };
        for x in &self.terms {
            for y in &other.terms {
                if x.letters.len() + y.letters.len() > MAX_WORD_LEN {
                    return Err(AlgebraError::InvalidArgument(format!(
                        "expansion produced a word longer than {MAX_WORD_LEN} letters"
                    )));
                }
                let mut letters = x.letters.clone();
                letters.extend_from_slice(&y.letters);
                out.push(EvalTerm {
                    coefficient: x.coefficient.mul(&y.coefficient),
                    letters,
                });
                if out.terms.len() > MAX_TERMS {
                    return Err(AlgebraError::InvalidArgument(format!(
                        "expansion produced more than {MAX_TERMS} words"
                    )));
                }
            }
        }
        Ok(out)
    }

    fn power(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inverse()?.power(-e);
        }
        if let [t] = self.terms.as_slice() {
            if t.letters.is_empty() {
                return Ok(Self::scalar(&self.ctx, t.coefficient.pow(e as u32)));
            }
        }
        let mut acc = Self::scalar(&self.ctx, RadicalScalar::one(&self.ctx));
        for _ in 0..e {
            if acc.terms.is_empty() {
                break;
            }
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    fn inverse(&self) -> Result<Self> {
        let [t] = self.terms.as_slice() else {
            return Err(AlgebraError::InvalidArgument(
                "only a single scalar or qN term can be inverted".into(),
            ));
        };
        let mut letters = Vec::with_capacity(t.letters.len());
        for l in t.letters.iter().rev() {
            match l {
                Letter::QN(s) => letters.push(Letter::QN(-s)),
                _ => {
                    return Err(AlgebraError::InvalidArgument(
                        "only a single scalar or qN term can be inverted".into(),
                    ))
                }
            }
        }
        Ok(Evaluated {
            ctx: self.ctx.clone(),
            terms: vec![EvalTerm {
                coefficient: t.coefficient.invert()?,
                letters,
            }],
        })
    }

    pub fn has_differentials(&self) -> bool {
        self.terms.iter().any(|t| {
            t.letters
                .iter()
                .any(|l| matches!(l, Letter::Dxi | Letter::Dxibar))
        })
    }

    /// Reorder every word into canonical mixed form and sum.
    pub fn normal_order(&self) -> Result<MixedPolynomial> {
        let mut out = MixedPolynomial::zero(&self.ctx);
        for t in &self.terms {
            let w = MixedWord::new(t.coefficient.clone(), t.letters.clone());
            out = out.add(&mixed_normal_order(&w, &self.ctx)?)?;
        }
        Ok(out)
    }

    /// Integrate; without explicit differentials the whole expression is
    /// placed under `∫∫dξ̄dξ`.
    pub fn integrate(&self) -> Result<GrassmannPolynomial> {
        let implicit = !self.has_differentials();
        let mut out = GrassmannPolynomial::zero(&self.ctx, 1);
        for t in &self.terms {
            let mut word = Vec::with_capacity(t.letters.len() + 2);
            if implicit {
                word.push(Generator::dxibar(1));
                word.push(Generator::dxi(1));
            }
            for l in &t.letters {
                match l.generator() {
                    Some(g) => word.push(g),
                    None => {
                        return Err(AlgebraError::InvalidArgument(
                            "oscillator letters cannot appear under an integral".into(),
                        ))
                    }
                }
            }
            out = out.add(&integrate_word(&self.ctx, &word, t.coefficient.clone())?)?;
        }
        Ok(out)
    }
}

/// Expand an expression into words at the given `k`.
pub fn evaluate(e: &Expr, ctx: &QContext) -> Result<Evaluated> {
    match e {
        Expr::Atom(a) => Ok(match a {
            Atom::A => Evaluated::letter(ctx, Letter::A),
            Atom::Ad => Evaluated::letter(ctx, Letter::Ad),
            Atom::Xi => Evaluated::letter(ctx, Letter::Xi),
            Atom::Xibar => Evaluated::letter(ctx, Letter::Xibar),
            Atom::Dxi => Evaluated::letter(ctx, Letter::Dxi),
            Atom::Dxibar => Evaluated::letter(ctx, Letter::Dxibar),
            Atom::QN(s) => Evaluated::letter(ctx, Letter::QN(*s)),
            Atom::QPow(m) => Evaluated::scalar(ctx, RadicalScalar::root(ctx, *m)),
            Atom::Bracket(n) => Evaluated::scalar(ctx, RadicalScalar::from_body(q_number(ctx, *n))),
            Atom::Rad(n) => {
                if *n > ctx.k() {
                    return Err(AlgebraError::InvalidArgument(format!(
                        "rad({n}) needs n <= k = {}",
                        ctx.k()
                    )));
                }
                Evaluated::scalar(ctx, RadicalScalar::radical(ctx, *n))
            }
            Atom::Rational(r) => {
                Evaluated::scalar(ctx, RadicalScalar::from_rational(ctx, r.clone()))
            }
        }),
        Expr::Power(b, n) => evaluate(b, ctx)?.power(*n),
        Expr::Product(fs) => {
            let mut acc = Evaluated::scalar(ctx, RadicalScalar::one(ctx));
            for f in fs {
                acc = acc.product(&evaluate(f, ctx)?)?;
            }
            Ok(acc)
        }
        Expr::Sum(ts) => {
            let mut out = Evaluated {
                ctx: ctx.clone(),
                terms: vec![],
            };
            for (s, t) in ts {
                for mut term in evaluate(t, ctx)?.terms {
                    if *s == Sign::Minus {
                        term.coefficient = term.coefficient.neg();
                    }
                    out.push(term);
                }
            }
            Ok(out)
        }
    }
}
