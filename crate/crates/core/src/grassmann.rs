//! The Z_k-graded Grassmann algebra on d modes.
//!
//! Generators `ξ_i` (grade 1) and `ξ̄_i` (grade k-1) satisfy `ξ_i^k = ξ̄_i^k = 0`
//! and, for `i < j`, `α_i β_j = q^{ab} β_j α_i` where `a`, `b` are the grades.
//! Within one mode `ξ ξ̄ = q̄ ξ̄ ξ`. Every relation is a phase swap, so a word
//! normal-orders to at most one canonical monomial
//! `ξ_1^{i_1}⋯ξ_d^{i_d} ξ̄_1^{j_1}⋯ξ̄_d^{j_d}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::scalars::{QContext, RadicalScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    Xi,
    Xibar,
    Dxi,
    Dxibar,
}

impl GeneratorKind {
    pub fn is_differential(self) -> bool {
        matches!(self, GeneratorKind::Dxi | GeneratorKind::Dxibar)
    }

    /// Grade mod k; a differential carries the grade of its variable.
    pub fn grade(self, k: u32) -> i64 {
        match self {
            GeneratorKind::Xi | GeneratorKind::Dxi => 1,
            GeneratorKind::Xibar | GeneratorKind::Dxibar => k as i64 - 1,
        }
    }

    /// ξ ↔ ξ̄ (and dξ ↔ dξ̄).
    pub fn conjugate(self) -> Self {
        match self {
            GeneratorKind::Xi => GeneratorKind::Xibar,
            GeneratorKind::Xibar => GeneratorKind::Xi,
            GeneratorKind::Dxi => GeneratorKind::Dxibar,
            GeneratorKind::Dxibar => GeneratorKind::Dxi,
        }
    }
}

/// One generator letter; modes are numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub mode: u8,
}

impl Generator {
    pub fn xi(mode: u8) -> Self {
        Generator {
            kind: GeneratorKind::Xi,
            mode,
        }
    }

    pub fn xibar(mode: u8) -> Self {
        Generator {
            kind: GeneratorKind::Xibar,
            mode,
        }
    }

    pub fn dxi(mode: u8) -> Self {
        Generator {
            kind: GeneratorKind::Dxi,
            mode,
        }
    }

    pub fn dxibar(mode: u8) -> Self {
        Generator {
            kind: GeneratorKind::Dxibar,
            mode,
        }
    }

    /// Position in the canonical word: all ξ by mode, then all ξ̄ by mode.
    fn canonical_key(self) -> (u8, u8) {
        let rank = match self.kind {
            GeneratorKind::Xi => 0,
            _ => 1,
        };
        (rank, self.mode)
    }
}

/// Exponent `e` in `x y = q^e y x` for two variable generators.
pub fn swap_phase(x: Generator, y: Generator, k: u32) -> i64 {
    debug_assert!(!x.kind.is_differential() && !y.kind.is_differential());
    let (gx, gy) = (x.kind.grade(k), y.kind.grade(k));
    let e = match x.mode.cmp(&y.mode) {
        Ordering::Less => gx * gy,
        Ordering::Greater => -gx * gy,
        Ordering::Equal => match (x.kind, y.kind) {
            (a, b) if a == b => 0,
            // ξ ξ̄ = q̄ ξ̄ ξ
            (GeneratorKind::Xi, _) => -1,
            _ => 1,
        },
    };
    e.rem_euclid(k as i64)
}

/// Canonical monomial: per-mode exponents of ξ and ξ̄, each `< k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GrassmannMonomial {
    xi: Vec<u8>,
    xibar: Vec<u8>,
}

impl GrassmannMonomial {
    pub fn one(modes: usize) -> Self {
        GrassmannMonomial {
            xi: vec![0; modes],
            xibar: vec![0; modes],
        }
    }

    /// Single-mode `ξ^i ξ̄^j`.
    pub fn single(i: u8, j: u8) -> Self {
        GrassmannMonomial {
            xi: vec![i],
            xibar: vec![j],
        }
    }

    pub fn new(xi: Vec<u8>, xibar: Vec<u8>) -> Self {
        assert_eq!(xi.len(), xibar.len(), "exponent vectors must agree on d");
        GrassmannMonomial { xi, xibar }
    }

    pub fn modes(&self) -> usize {
        self.xi.len()
    }

    pub fn xi_exponents(&self) -> &[u8] {
        &self.xi
    }

    pub fn xibar_exponents(&self) -> &[u8] {
        &self.xibar
    }

    /// Exponent of ξ in mode 1.
    pub fn xi_power(&self) -> u8 {
        self.xi[0]
    }

    /// Exponent of ξ̄ in mode 1.
    pub fn xibar_power(&self) -> u8 {
        self.xibar[0]
    }

    pub fn total_degree(&self) -> u32 {
        self.xi.iter().chain(&self.xibar).map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.total_degree() == 0
    }

    /// The canonical word spelled out letter by letter.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::new();
        for (m, &e) in self.xi.iter().enumerate() {
            w.extend(std::iter::repeat_n(Generator::xi(m as u8 + 1), e as usize));
        }
        for (m, &e) in self.xibar.iter().enumerate() {
            w.extend(std::iter::repeat_n(
                Generator::xibar(m as u8 + 1),
                e as usize,
            ));
        }
        w
    }

    /// `Σ i_m + (k-1) Σ j_m mod k`.
    pub fn grade(&self, k: u32) -> u32 {
        let k = k as i64;
        let s: i64 = self.xi.iter().map(|&e| e as i64).sum::<i64>()
            + (k - 1) * self.xibar.iter().map(|&e| e as i64).sum::<i64>();
        s.rem_euclid(k) as u32
    }

    fn generators(&self) -> impl Iterator<Item = (Generator, i64)> + '_ {
        let xs = self
            .xi
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(m, &e)| (Generator::xi(m as u8 + 1), e as i64));
        let ys = self
            .xibar
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(m, &e)| (Generator::xibar(m as u8 + 1), e as i64));
        xs.chain(ys)
    }
}

impl Ord for GrassmannMonomial {
    /// Graded: total degree first, then more ξ before more ξ̄.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.xi.cmp(&self.xi))
            .then_with(|| self.xibar.cmp(&other.xibar))
    }
}

impl PartialOrd for GrassmannMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GrassmannMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .generators()
            .map(|(g, e)| {
                let name = match g.kind {
                    GeneratorKind::Xi => "ξ",
                    _ => "ξ̄",
                };
                format!("{name}{}^{e}", g.mode)
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Finite sum of canonical monomials with exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct GrassmannPolynomial {
    ctx: QContext,
    modes: usize,
    terms: BTreeMap<GrassmannMonomial, RadicalScalar>,
}

impl GrassmannPolynomial {
    pub fn zero(ctx: &QContext, modes: usize) -> Self {
        GrassmannPolynomial {
            ctx: ctx.clone(),
            modes,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &QContext, modes: usize) -> Self {
        Self::constant(ctx, modes, RadicalScalar::one(ctx))
    }

    pub fn constant(ctx: &QContext, modes: usize, c: RadicalScalar) -> Self {
        Self::monomial(ctx, GrassmannMonomial::one(modes), c)
    }

    /// `c · m`; exponents `>= k` give zero.
    pub fn monomial(ctx: &QContext, m: GrassmannMonomial, c: RadicalScalar) -> Self {
        let mut p = Self::zero(ctx, m.modes());
        let k = ctx.k() as u8;
        if !c.is_zero() && m.xi.iter().chain(&m.xibar).all(|&e| e < k) {
            p.terms.insert(m, c);
        }
        p
    }

    /// Single-mode `c ξ^i ξ̄^j`.
    pub fn single(ctx: &QContext, i: u32, j: u32, c: RadicalScalar) -> Self {
        let k = ctx.k();
        if i >= k || j >= k {
            return Self::zero(ctx, 1);
        }
        Self::monomial(ctx, GrassmannMonomial::single(i as u8, j as u8), c)
    }

    /// Rewrite `coefficient · word` into canonical form.
    ///
    /// Returns zero or a single monomial whose coefficient is the input
    /// coefficient times a power of q.
    pub fn normal_order(
        ctx: &QContext,
        modes: usize,
        word: &[Generator],
        coefficient: RadicalScalar,
    ) -> Result<Self> {
        match normal_order_word(ctx.k(), modes, word)? {
            None => Ok(Self::zero(ctx, modes)),
            Some((m, phase)) => Ok(Self::monomial(ctx, m, coefficient.mul_root(phase))),
        }
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GrassmannMonomial, &RadicalScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &GrassmannMonomial) -> RadicalScalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| RadicalScalar::zero(&self.ctx))
    }

    /// Constant term.
    pub fn scalar_part(&self) -> RadicalScalar {
        self.coefficient(&GrassmannMonomial::one(self.modes))
    }

    /// `Some(c)` when the polynomial is a constant.
    pub fn as_scalar(&self) -> Option<RadicalScalar> {
        match self.terms.len() {
            0 => Some(RadicalScalar::zero(&self.ctx)),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, m: GrassmannMonomial, c: RadicalScalar) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.get(&m) {
            Some(old) => old.checked_add(&c)?,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.modes, other.modes, "mode count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(RadicalScalar::neg)
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        let mut out = self.map_coefficients(|x| x.mul(c));
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    fn map_coefficients(&self, f: impl Fn(&RadicalScalar) -> RadicalScalar) -> Self {
        GrassmannPolynomial {
            ctx: self.ctx.clone(),
            modes: self.modes,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        }
    }

    /// Ordered product; each cross term is normal-ordered.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.modes, other.modes, "mode count mismatch");
        let k = self.ctx.k();
        let mut out = Self::zero(&self.ctx, self.modes);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, phase)) = multiply_monomials(k, m1, m2) {
                    out.add_term(m, c1.mul(c2).mul_root(phase))?;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ctx, self.modes);
        for _ in 0..e {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Antilinear conjugation `ξ ↔ ξ̄` with word reversal, re-normal-ordered.
    pub fn dagger(&self) -> Self {
        let k = self.ctx.k();
        let mut out = Self::zero(&self.ctx, self.modes);
        for (m, c) in &self.terms {
            let word: Vec<Generator> = m
                .word()
                .into_iter()
                .rev()
                .map(|g| Generator {
                    kind: g.kind.conjugate(),
                    mode: g.mode,
                })
                .collect();
            let (m2, phase) = normal_order_word(k, self.modes, &word)
                .expect("conjugated canonical word is well formed")
                .expect("conjugation preserves nilpotency bounds");
            // conjugation is a bijection on canonical monomials
            out.terms.insert(m2, c.dagger().mul_root(phase));
        }
        out
    }

    /// `f(ξ, ξ̄) ↦ f(ξ, q^m ξ̄)`.
    pub fn scale_substitute(&self, m: i64) -> Self {
        GrassmannPolynomial {
            ctx: self.ctx.clone(),
            modes: self.modes,
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| {
                    let n: i64 = mono.xibar.iter().map(|&e| e as i64).sum();
                    (mono.clone(), c.mul_root(m * n))
                })
                .collect(),
        }
    }

    /// Re-embed into an algebra with `modes` modes, sending mode `i` to `target[i-1]`.
    ///
    /// Monomials are re-normal-ordered in the target algebra.
    pub fn relabel(&self, modes: usize, target: &[u8]) -> Result<Self> {
        assert_eq!(target.len(), self.modes);
        let mut out = Self::zero(&self.ctx, modes);
        for (m, c) in &self.terms {
            let word: Vec<Generator> = m
                .word()
                .into_iter()
                .map(|g| Generator {
                    kind: g.kind,
                    mode: target[g.mode as usize - 1],
                })
                .collect();
            let p = Self::normal_order(&self.ctx, modes, &word, c.clone())?;
            out = out.add(&p)?;
        }
        Ok(out)
    }
}

impl fmt::Debug for GrassmannPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{c:?} {m:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Canonical monomial and phase exponent of a variable word, or `None` if nilpotent.
pub(crate) fn normal_order_word(
    k: u32,
    modes: usize,
    word: &[Generator],
) -> Result<Option<(GrassmannMonomial, i64)>> {
    let mut mono = GrassmannMonomial::one(modes);
    for g in word {
        if g.kind.is_differential() {
            return Err(AlgebraError::InvalidArgument(
                "differentials cannot be normal-ordered as Grassmann variables".into(),
            ));
        }
        if g.mode == 0 || g.mode as usize > modes {
            return Err(AlgebraError::InvalidArgument(format!(
                "mode {} outside 1..={modes}",
                g.mode
            )));
        }
        let slot = match g.kind {
            GeneratorKind::Xi => &mut mono.xi[g.mode as usize - 1],
            _ => &mut mono.xibar[g.mode as usize - 1],
        };
        *slot += 1;
        if *slot as u32 >= k {
            return Ok(None);
        }
    }
    let mut phase = 0i64;
    for (p, &x) in word.iter().enumerate() {
        for &y in &word[p + 1..] {
            if x.canonical_key() > y.canonical_key() {
                phase += swap_phase(x, y, k);
            }
        }
    }
    Ok(Some((mono, phase.rem_euclid(k as i64))))
}

/// Product of two canonical monomials, or `None` if it vanishes.
pub(crate) fn multiply_monomials(
    k: u32,
    m1: &GrassmannMonomial,
    m2: &GrassmannMonomial,
) -> Option<(GrassmannMonomial, i64)> {
    let add = |a: &[u8], b: &[u8]| -> Option<Vec<u8>> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| {
                let s = x as u32 + y as u32;
                (s < k).then_some(s as u8)
            })
            .collect()
    };
    let xi = add(&m1.xi, &m2.xi)?;
    let xibar = add(&m1.xibar, &m2.xibar)?;
    let mut phase = 0i64;
    for (x, ex) in m1.generators() {
        for (y, ey) in m2.generators() {
            if x.canonical_key() > y.canonical_key() {
                phase += ex * ey * swap_phase(x, y, k);
            }
        }
    }
    Some((GrassmannMonomial { xi, xibar }, phase.rem_euclid(k as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn xi(m: u8) -> Generator {
        Generator::xi(m)
    }
    fn xb(m: u8) -> Generator {
        Generator::xibar(m)
    }

    #[test]
    fn two_mode_xi_swap() {
        let ctx = QContext::new(5).unwrap();
        let one = RadicalScalar::one(&ctx);
        let p = GrassmannPolynomial::normal_order(&ctx, 2, &[xi(2), xi(1)], one.clone()).unwrap();
        let m = GrassmannMonomial::new(vec![1, 1], vec![0, 0]);
        assert_eq!(p.coefficient(&m), RadicalScalar::root(&ctx, -1));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn same_mode_square_lemma_example() {
        for k in 3..=9 {
            let ctx = QContext::new(k).unwrap();
            let one = RadicalScalar::one(&ctx);
            let p = GrassmannPolynomial::normal_order(&ctx, 1, &[xb(1), xi(1), xb(1), xi(1)], one)
                .unwrap();
            assert_eq!(
                p.coefficient(&GrassmannMonomial::single(2, 2)),
                RadicalScalar::root(&ctx, 3),
                "k={k}"
            );
        }
    }

    #[test]
    fn nilpotent_word_vanishes() {
        for k in 2..=7u32 {
            let ctx = QContext::new(k).unwrap();
            let w = vec![xi(1); k as usize];
            let p =
                GrassmannPolynomial::normal_order(&ctx, 1, &w, RadicalScalar::one(&ctx)).unwrap();
            assert!(p.is_zero());
        }
    }

    #[test]
    fn differentials_are_rejected() {
        let ctx = QContext::new(3).unwrap();
        assert!(GrassmannPolynomial::normal_order(
            &ctx,
            1,
            &[Generator::dxi(1)],
            RadicalScalar::one(&ctx)
        )
        .is_err());
    }

    #[test]
    fn grades() {
        let k = 5;
        assert_eq!(GrassmannMonomial::single(1, 0).grade(k), 1);
        assert_eq!(GrassmannMonomial::single(1, 1).grade(k), 0);
        assert_eq!(GrassmannMonomial::one(1).grade(k), 0);
        assert_eq!(GrassmannMonomial::single(0, 2).grade(k), 3);
    }

    #[test]
    fn dagger_examples() {
        let ctx = QContext::new(7).unwrap();
        let one = RadicalScalar::one(&ctx);
        for n in 0..7 {
            let p = GrassmannPolynomial::single(&ctx, n, 0, one.clone());
            assert_eq!(
                p.dagger(),
                GrassmannPolynomial::single(&ctx, 0, n, one.clone())
            );
        }
        let p = GrassmannPolynomial::normal_order(&ctx, 2, &[xi(1), xi(2)], one.clone()).unwrap();
        let m = GrassmannMonomial::new(vec![0, 0], vec![1, 1]);
        assert_eq!(p.dagger().coefficient(&m), RadicalScalar::root(&ctx, -1));
    }

    #[test]
    fn product_examples() {
        let ctx = QContext::new(5).unwrap();
        let one = RadicalScalar::one(&ctx);
        let a = GrassmannPolynomial::one(&ctx, 1)
            .add(&GrassmannPolynomial::single(&ctx, 1, 0, one.clone()))
            .unwrap();
        let b = GrassmannPolynomial::one(&ctx, 1)
            .add(&GrassmannPolynomial::single(&ctx, 0, 1, one.clone()))
            .unwrap();
        let ab = a.multiply(&b).unwrap();
        assert_eq!(ab.len(), 4);
        for (i, j) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            assert!(ab.coefficient(&GrassmannMonomial::single(i, j)).is_one());
        }
        let xbx = GrassmannPolynomial::single(&ctx, 0, 1, one.clone())
            .multiply(&GrassmannPolynomial::single(&ctx, 1, 0, one.clone()))
            .unwrap();
        assert_eq!(
            xbx,
            GrassmannPolynomial::single(&ctx, 1, 1, RadicalScalar::root(&ctx, 1))
        );
        let s = GrassmannPolynomial::single(&ctx, 0, 2, one.clone()).scale_substitute(1);
        assert_eq!(
            s,
            GrassmannPolynomial::single(&ctx, 0, 2, RadicalScalar::root(&ctx, 2))
        );
    }

    fn random_word(rng: &mut ChaCha8Rng, modes: u8) -> Vec<Generator> {
        let len = rng.gen_range(0..8);
        (0..len)
            .map(|_| {
                let mode = rng.gen_range(1..=modes);
                if rng.gen_bool(0.5) {
                    xi(mode)
                } else {
                    xb(mode)
                }
            })
            .collect()
    }

    #[test]
    fn confluence_under_single_swaps() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in [2u32, 3, 5, 7] {
            let ctx = QContext::new(k).unwrap();
            for _ in 0..1000 {
                let w = random_word(&mut rng, 3);
                if w.len() < 2 {
                    continue;
                }
                let p = rng.gen_range(0..w.len() - 1);
                let e = swap_phase(w[p], w[p + 1], k);
                let mut w2 = w.clone();
                w2.swap(p, p + 1);
                let one = RadicalScalar::one(&ctx);
                let a = GrassmannPolynomial::normal_order(&ctx, 3, &w, one.clone()).unwrap();
                let b = GrassmannPolynomial::normal_order(&ctx, 3, &w2, one.mul_root(e)).unwrap();
                assert_eq!(a, b, "k={k} word={w:?}");
            }
        }
    }

    #[test]
    fn word_product_matches_concatenation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for k in [2u32, 3, 5, 7] {
            let ctx = QContext::new(k).unwrap();
            for _ in 0..300 {
                let w1 = random_word(&mut rng, 2);
                let w2 = random_word(&mut rng, 2);
                let one = RadicalScalar::one(&ctx);
                let p1 = GrassmannPolynomial::normal_order(&ctx, 2, &w1, one.clone()).unwrap();
                let p2 = GrassmannPolynomial::normal_order(&ctx, 2, &w2, one.clone()).unwrap();
                let cat: Vec<_> = w1.iter().chain(&w2).copied().collect();
                let p = GrassmannPolynomial::normal_order(&ctx, 2, &cat, one).unwrap();
                assert_eq!(p1.multiply(&p2).unwrap(), p);
                if let Some((m, _)) = p.terms().next() {
                    let g1 = p1.terms().next().unwrap().0.grade(k);
                    let g2 = p2.terms().next().unwrap().0.grade(k);
                    assert_eq!(m.grade(k), (g1 + g2) % k);
                };
            }
        }
    }

    #[test]
    fn xibar_xi_power_lemma() {
        for k in 2..=11u32 {
            let ctx = QContext::new(k).unwrap();
            for n in 1..k {
                let w: Vec<_> = (0..n).flat_map(|_| [xb(1), xi(1)]).collect();
                let lhs = GrassmannPolynomial::normal_order(&ctx, 1, &w, RadicalScalar::one(&ctx))
                    .unwrap();
                let mut rhs_word = vec![xb(1); n as usize];
                rhs_word.extend(vec![xi(1); n as usize]);
                let coeff = RadicalScalar::root(&ctx, -((n * (n - 1) / 2) as i64));
                let rhs = GrassmannPolynomial::normal_order(&ctx, 1, &rhs_word, coeff).unwrap();
                assert_eq!(lhs, rhs, "k={k} n={n}");
            }
        }
    }
}
