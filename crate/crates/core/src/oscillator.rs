//! The nilpotent Fock representation of the q-oscillator, mixed
//! Grassmann–oscillator reordering, coherent states and their overlaps.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::grassmann::{Generator, GeneratorKind, GrassmannMonomial, GrassmannPolynomial};
use crate::matrix::SquareMatrix;
use crate::scalars::{
    box_factorial, inv_q_factorial, inv_sqrt_q_factorial, CyclotomicNumber, QContext, RadicalScalar,
};

/// Fock-space operators as k×k matrices.
pub type FockOperator = SquareMatrix;

/// `a`, `a⁺`, `N`, `q^N`, `q^{-N}` on the basis `|0⟩, …, |k-1⟩`.
#[derive(Clone, Debug)]
pub struct FockMatrices {
    pub a: FockOperator,
    pub ad: FockOperator,
    pub number: FockOperator,
    pub q_pow_n: FockOperator,
    pub q_pow_neg_n: FockOperator,
}

impl FockMatrices {
    /// `q^{sN}`.
    pub fn q_pow(&self, ctx: &QContext, s: i64) -> FockOperator {
        let k = ctx.k() as usize;
        SquareMatrix::diagonal(
            (0..k)
                .map(|n| RadicalScalar::root(ctx, s * n as i64))
                .collect(),
        )
    }
}

/// `a|n⟩ = r_n|n-1⟩`, `a⁺|n⟩ = r_{n+1}|n+1⟩`, `N|n⟩ = n|n⟩`, `q^{±N}|n⟩ = q^{±n}|n⟩`.
pub fn fock_matrices(ctx: &QContext) -> FockMatrices {
    let k = ctx.k() as usize;
    let zero = RadicalScalar::zero(ctx);
    let a = SquareMatrix::from_fn(k, |i, j| {
        if j == i + 1 {
            RadicalScalar::radical(ctx, j as u32)
        } else {
            zero.clone()
        }
    });
    let ad = SquareMatrix::from_fn(k, |i, j| {
        if i == j + 1 {
            RadicalScalar::radical(ctx, i as u32)
        } else {
            zero.clone()
        }
    });
    let number = SquareMatrix::diagonal(
        (0..k)
            .map(|n| RadicalScalar::from_int(ctx, n as i64))
            .collect(),
    );
    let diag = |s: i64| {
        SquareMatrix::diagonal(
            (0..k)
                .map(|n| RadicalScalar::root(ctx, s * n as i64))
                .collect(),
        )
    };
    FockMatrices {
        a,
        ad,
        number,
        q_pow_n: diag(1),
        q_pow_neg_n: diag(-1),
    }
}

/// One named identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        IdentityCheck {
            name: name.into(),
            holds,
            detail: detail.into(),
        }
    }
}

fn matrix_check(name: &str, lhs: Result<SquareMatrix>, rhs: &SquareMatrix) -> IdentityCheck {
    match lhs {
        Ok(l) if &l == rhs => IdentityCheck::new(name, true, "exact matrix equality"),
        Ok(l) => {
            let bad: Vec<String> = l
                .entries()
                .filter(|(i, j, e)| *e != rhs.get(*i, *j))
                .map(|(i, j, e)| format!("({i},{j}): lhs {e:?}, rhs {:?}", rhs.get(i, j)))
                .collect();
            IdentityCheck::new(name, false, format!("entries differ at {}", bad.join("; ")))
        }
        Err(e) => IdentityCheck::new(name, false, format!("evaluation failed: {e}")),
    }
}

/// Both BM relations, both N-commutators and `a^k = (a⁺)^k = 0`, as exact matrix identities.
///
/// At k = 2 the top diagonal entry of both BM relations reads `1 = -1`:
/// truncation forces `a a⁺|1⟩ = 0` while `[2]_{-1} = -2`. The checks report
/// that mismatch, and the anticommutator `a a⁺ + a⁺ a = 1` is added.
pub fn verify_bm(ctx: &QContext) -> Vec<IdentityCheck> {
    let f = fock_matrices(ctx);
    bm_checks(ctx, &f.a, &f.ad, &f.number, &f.q_pow_n, &f.q_pow_neg_n)
}

/// The checks of [`verify_bm`] for any triple of matrices.
pub fn bm_checks(
    ctx: &QContext,
    a: &SquareMatrix,
    ad: &SquareMatrix,
    number: &SquareMatrix,
    q_pow_n: &SquareMatrix,
    q_pow_neg_n: &SquareMatrix,
) -> Vec<IdentityCheck> {
    let k = ctx.k();
    let q = RadicalScalar::root(ctx, 1);
    let qbar = RadicalScalar::root(ctx, -1);
    let zero = SquareMatrix::zero(ctx, k as usize);
    let aad = a.mul(ad);
    let ada = ad.mul(a);
    let bm =
        |c: &RadicalScalar| -> Result<SquareMatrix> { aad.clone()?.sub(&ada.clone()?.scale(c)) };
    let mut checks = vec![
        matrix_check("bm_minus: a a+ - q a+ a = q^-N", bm(&q), q_pow_neg_n),
        matrix_check("bm_plus: a a+ - q^-1 a+ a = q^N", bm(&qbar), q_pow_n),
        matrix_check(
            "n_commutator_a: [N, a] = -a",
            number.commutator(a),
            &a.scale(&RadicalScalar::from_int(ctx, -1)),
        ),
        matrix_check("n_commutator_ad: [N, a+] = a+", number.commutator(ad), ad),
        matrix_check("nilpotent_a: a^k = 0", a.pow(k), &zero),
        matrix_check("nilpotent_ad: (a+)^k = 0", ad.pow(k), &zero),
    ];
    if k == 2 {
        let anti = aad.and_then(|x| x.add(&ada?));
        checks.push(matrix_check(
            "fermionic_anticommutator: a a+ + a+ a = 1",
            anti,
            &SquareMatrix::identity(ctx, 2),
        ));
    }
    checks
}

/// Letters of a single-mode mixed word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    Ad,
    /// `q^{sN}`
    QN(i64),
    Xi,
    Xibar,
    Dxi,
    Dxibar,
}

impl Letter {
    pub fn generator(self) -> Option<Generator> {
        match self {
            Letter::Xi => Some(Generator::xi(1)),
            Letter::Xibar => Some(Generator::xibar(1)),
            Letter::Dxi => Some(Generator::dxi(1)),
            Letter::Dxibar => Some(Generator::dxibar(1)),
            _ => None,
        }
    }

    pub fn is_oscillator(self) -> bool {
        matches!(self, Letter::A | Letter::Ad | Letter::QN(_))
    }
}

/// Exponent `e` in `O G = q^e G O` for an oscillator letter `O` and a Grassmann letter `G`.
///
/// `ξ a⁺ = q a⁺ ξ`, `ξ a = q̄ a ξ`, `ξ̄ a⁺ = q̄ a⁺ ξ̄`, `ξ̄ a = q a ξ̄`;
/// `q^{sN}` commutes with both variables.
pub fn oscillator_crossing_phase(o: Letter, g: GeneratorKind) -> i64 {
    match (o, g) {
        (Letter::Ad, GeneratorKind::Xi) => -1,
        (Letter::A, GeneratorKind::Xi) => 1,
        (Letter::Ad, GeneratorKind::Xibar) => 1,
        (Letter::A, GeneratorKind::Xibar) => -1,
        (Letter::QN(_), GeneratorKind::Xi | GeneratorKind::Xibar) => 0,
        _ => panic!("no crossing rule for {o:?} and {g:?}"),
    }
}

/// A coefficient times an ordered sequence of letters.
#[derive(Clone, Debug)]
pub struct MixedWord {
    pub coefficient: RadicalScalar,
    pub letters: Vec<Letter>,
}

impl MixedWord {
    pub fn new(coefficient: RadicalScalar, letters: Vec<Letter>) -> Self {
        MixedWord {
            coefficient,
            letters,
        }
    }
}

/// Normal-ordered oscillator monomial `(a⁺)^raise q^{qn·N} a^lower`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OscMonomial {
    pub raise: u32,
    pub qn: u32,
    pub lower: u32,
}

impl OscMonomial {
    pub fn is_one(&self) -> bool {
        self.raise == 0 && self.qn == 0 && self.lower == 0
    }

    pub fn matrix(&self, ctx: &QContext, f: &FockMatrices) -> Result<FockOperator> {
        f.ad.pow(self.raise)?
            .mul(&f.q_pow(ctx, self.qn as i64))?
            .mul(&f.a.pow(self.lower)?)
    }
}

/// Sum of `coefficient · (Grassmann monomial) ⊗ (oscillator monomial)` with
/// all Grassmann letters to the left.
#[derive(Clone, PartialEq, Eq)]
pub struct MixedPolynomial {
    ctx: QContext,
    terms: BTreeMap<(GrassmannMonomial, OscMonomial), RadicalScalar>,
}

impl MixedPolynomial {
    pub fn zero(ctx: &QContext) -> Self {
        MixedPolynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn term(
        ctx: &QContext,
        g: GrassmannMonomial,
        o: OscMonomial,
        c: RadicalScalar,
    ) -> Result<Self> {
        let mut p = Self::zero(ctx);
        p.add_term(g, o, c)?;
        Ok(p)
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    pub fn terms(
        &self,
    ) -> impl Iterator<Item = (&GrassmannMonomial, &OscMonomial, &RadicalScalar)> {
        self.terms.iter().map(|((g, o), c)| (g, o, c))
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

    fn add_term(&mut self, g: GrassmannMonomial, o: OscMonomial, c: RadicalScalar) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        let key = (g, o);
        let sum = match self.terms.get(&key) {
            Some(old) => old.checked_add(&c)?,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for ((g, o), c) in &other.terms {
            out.add_term(g.clone(), *o, c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        MixedPolynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(key, v)| (key.clone(), v.mul(c)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// `Some(p)` when no oscillator letters remain.
    pub fn as_grassmann(&self) -> Option<GrassmannPolynomial> {
        let mut p = GrassmannPolynomial::zero(&self.ctx, 1);
        for ((g, o), c) in &self.terms {
            if !o.is_one() {
                return None;
            }
            p.add_term(g.clone(), c.clone()).ok()?;
        }
        Some(p)
    }

    /// Act on `|n⟩`, giving a ket with Grassmann coefficients.
    pub fn apply_to_basis(&self, n: usize) -> Result<GradedState> {
        let k = self.ctx.k() as usize;
        let f = fock_matrices(&self.ctx);
        let mut coeffs = vec![GrassmannPolynomial::zero(&self.ctx, 1); k];
        for ((g, o), c) in &self.terms {
            let m = o.matrix(&self.ctx, &f)?;
            for (row, slot) in coeffs.iter_mut().enumerate() {
                let amp = m.get(row, n);
                if amp.is_zero() {
                    continue;
                }
                slot.add_term(g.clone(), c.mul(amp))?;
            }
        }
        Ok(GradedState::ket(coeffs))
    }
}

impl fmt::Debug for MixedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((g, o), c)| format!("{c:?} {g:?} {o:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum OscLetter {
    A,
    Ad,
    QN(i64),
}

/// Commute every Grassmann letter to the left (collecting phases), normal-order
/// the Grassmann part, and normal-order the oscillator part into
/// `(a⁺)^r q^{sN} a^t` using `a a⁺ → q a⁺ a + q^{-N}`.
pub fn mixed_normal_order(word: &MixedWord, ctx: &QContext) -> Result<MixedPolynomial> {
    let k = ctx.k();
    let mut phase = 0i64;
    let mut grass = Vec::new();
    let mut osc = Vec::new();
    let mut seen_osc: Vec<Letter> = Vec::new();
    for &l in &word.letters {
        match l {
            Letter::Dxi | Letter::Dxibar => {
                return Err(AlgebraError::InvalidArgument(
                    "differentials are only meaningful inside an integral".into(),
                ))
            }
            Letter::Xi | Letter::Xibar => {
                let g = l.generator().expect("variable letter");
                phase += seen_osc
                    .iter()
                    .map(|&o| oscillator_crossing_phase(o, g.kind))
                    .sum::<i64>();
                grass.push(g);
            }
            Letter::A => {
                seen_osc.push(l);
                osc.push(OscLetter::A);
            }
            Letter::Ad => {
                seen_osc.push(l);
                osc.push(OscLetter::Ad);
            }
            Letter::QN(s) => {
                seen_osc.push(l);
                osc.push(OscLetter::QN(s));
            }
        }
    }
    let gpoly =
        GrassmannPolynomial::normal_order(ctx, 1, &grass, word.coefficient.mul_root(phase))?;
    let mut out = MixedPolynomial::zero(ctx);
    let Some((gmono, gcoeff)) = gpoly.terms().next() else {
        return Ok(out);
    };
    for (c, o) in normal_order_oscillator(ctx, osc) {
        if o.raise >= k || o.lower >= k {
            continue;
        }
        out.add_term(gmono.clone(), o, gcoeff.mul_body(&c))?;
    }
    Ok(out)
}

/// Directed rewriting of a pure oscillator word.
fn normal_order_oscillator(
    ctx: &QContext,
    word: Vec<OscLetter>,
) -> Vec<(CyclotomicNumber, OscMonomial)> {
    let k = ctx.k() as i64;
    let mut done: BTreeMap<OscMonomial, CyclotomicNumber> = BTreeMap::new();
    let mut work = vec![(ctx.one(), word)];
    while let Some((c, w)) = work.pop() {
        let bad = w.windows(2).position(|p| {
            matches!(
                (p[0], p[1]),
                (OscLetter::A, OscLetter::Ad)
                    | (OscLetter::A, OscLetter::QN(_))
                    | (OscLetter::QN(_), OscLetter::Ad)
                    | (OscLetter::QN(_), OscLetter::QN(_))
            )
        });
        let Some(i) = bad else {
            let mono = OscMonomial {
                raise: w.iter().filter(|l| **l == OscLetter::Ad).count() as u32,
                qn: w
                    .iter()
                    .map(|l| if let OscLetter::QN(s) = l { *s } else { 0 })
                    .sum::<i64>()
                    .rem_euclid(k) as u32,
                lower: w.iter().filter(|l| **l == OscLetter::A).count() as u32,
            };
            let entry = done.entry(mono).or_insert_with(|| ctx.zero());
            *entry = &*entry + &c;
            continue;
        };
        let splice = |mid: &[OscLetter]| {
            let mut v = w[..i].to_vec();
            v.extend_from_slice(mid);
            v.extend_from_slice(&w[i + 2..]);
            v
        };
        match (w[i], w[i + 1]) {
            (OscLetter::A, OscLetter::Ad) => {
                work.push((c.mul_root(1), splice(&[OscLetter::Ad, OscLetter::A])));
                work.push((c, splice(&[OscLetter::QN(-1)])));
            }
            (OscLetter::A, OscLetter::QN(s)) => {
                work.push((c.mul_root(s), splice(&[OscLetter::QN(s), OscLetter::A])));
            }
            (OscLetter::QN(s), OscLetter::Ad) => {
                work.push((c.mul_root(s), splice(&[OscLetter::Ad, OscLetter::QN(s)])));
            }
            (OscLetter::QN(s), OscLetter::QN(t)) => {
                work.push((c, splice(&[OscLetter::QN(s + t)])));
            }
            _ => unreachable!(),
        }
    }
    done.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(o, c)| (c, o))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateKind {
    Ket,
    Bra,
}

/// A vector over the Fock basis with Grassmann coefficients.
///
/// Ket coefficients stand to the left of `|n⟩`; bra coefficients stand to the
/// right of `⟨n|`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedState {
    pub kind: StateKind,
    pub coeffs: Vec<GrassmannPolynomial>,
}

impl GradedState {
    pub fn ket(coeffs: Vec<GrassmannPolynomial>) -> Self {
        GradedState {
            kind: StateKind::Ket,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GrassmannPolynomial::is_zero)
    }

    /// Bra obtained componentwise: scalar dagger and ξ → ξ̄.
    pub fn bra(&self) -> GradedState {
        GradedState {
            kind: StateKind::Bra,
            coeffs: self
                .coeffs
                .iter()
                .map(GrassmannPolynomial::dagger)
                .collect(),
        }
    }
}

impl fmt::Debug for GradedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r) = match self.kind {
            StateKind::Ket => ("|", "⟩"),
            StateKind::Bra => ("⟨", "|"),
        };
        for (n, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, "[{c:?}]{l}{n}{r} ")?;
            }
        }
        Ok(())
    }
}

/// `|ξ⟩ = Σ_n q̄^{n(n+1)/2} ξ^n / sqrt([n]_q!) |n⟩`.
pub fn coherent_state(ctx: &QContext) -> Result<GradedState> {
    ctx.require_nondegenerate("the coherent state")?;
    let k = ctx.k();
    let coeffs = (0..k)
        .map(|n| {
            let n64 = n as i64;
            let c = inv_sqrt_q_factorial(ctx, n)?.mul_root(-(n64 * (n64 + 1) / 2));
            Ok(GrassmannPolynomial::single(ctx, n, 0, c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedState::ket(coeffs))
}

/// `|ξ⟩ = Σ_n (a⁺ ξ)^n / [n]_q! |0⟩`, expanded through [`mixed_normal_order`].
pub fn coherent_state_by_expansion(ctx: &QContext) -> Result<GradedState> {
    ctx.require_nondegenerate("the coherent state")?;
    let k = ctx.k();
    let mut total = MixedPolynomial::zero(ctx);
    for n in 0..k {
        let letters: Vec<Letter> = (0..n).flat_map(|_| [Letter::Ad, Letter::Xi]).collect();
        let c = RadicalScalar::from_body(inv_q_factorial(ctx, n)?);
        total = total.add(&mixed_normal_order(&MixedWord::new(c, letters), ctx)?)?;
    }
    total.apply_to_basis(0)
}

/// `a` acting on a ket: `a ξ^i ξ̄^j = q^{i-j} ξ^i ξ̄^j a`, then `a|n⟩ = r_n |n-1⟩`.
pub fn annihilate(state: &GradedState, ctx: &QContext) -> Result<GradedState> {
    if state.kind != StateKind::Ket {
        return Err(AlgebraError::InvalidArgument(
            "annihilate acts on kets".into(),
        ));
    }
    let k = state.coeffs.len();
    let mut out = vec![GrassmannPolynomial::zero(ctx, 1); k];
    for n in 1..k {
        let rn = RadicalScalar::radical(ctx, n as u32);
        for (m, c) in state.coeffs[n].terms() {
            let phase = m.xi_power() as i64
                * oscillator_crossing_phase(Letter::A, GeneratorKind::Xi)
                + m.xibar_power() as i64
                    * oscillator_crossing_phase(Letter::A, GeneratorKind::Xibar);
            out[n - 1].add_term(m.clone(), c.mul_root(phase).mul(&rn))?;
        }
    }
    Ok(GradedState::ket(out))
}

/// `g · Σ c_n |n⟩ = Σ (g c_n) |n⟩`.
pub fn left_multiply(g: &GrassmannPolynomial, state: &GradedState) -> Result<GradedState> {
    let coeffs = state
        .coeffs
        .iter()
        .map(|c| g.multiply(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedState {
        kind: state.kind,
        coeffs,
    })
}

/// The three computations of `⟨ξ_2|ξ_1⟩` over the two-mode algebra.
#[derive(Clone, Debug)]
pub struct OverlapForms {
    /// Bra coefficients times ket coefficients, contracted with `⟨m|n⟩ = δ_{mn}`.
    pub direct: GrassmannPolynomial,
    /// `Σ q^{n(n-1)/2} (ξ̄_2 ξ_1)^n / [n]_q!`.
    pub reordered: GrassmannPolynomial,
    /// `E_{q̄²}(ξ̄_2 ξ_1) = Σ (ξ̄_2 ξ_1)^n / {n}_{q̄²}!`.
    pub q_exponential: GrassmannPolynomial,
}

impl OverlapForms {
    pub fn agree(&self) -> bool {
        self.direct == self.reordered && self.direct == self.q_exponential
    }
}

/// `(ξ̄_2 ξ_1)^n` in the two-mode algebra.
pub fn xibar2_xi1_power(ctx: &QContext, n: u32, c: RadicalScalar) -> Result<GrassmannPolynomial> {
    let word: Vec<Generator> = (0..n)
        .flat_map(|_| [Generator::xibar(2), Generator::xi(1)])
        .collect();
    GrassmannPolynomial::normal_order(ctx, 2, &word, c)
}

pub fn overlap_forms(ctx: &QContext) -> Result<OverlapForms> {
    ctx.require_nondegenerate("the coherent-state overlap")?;
    let k = ctx.k();
    let ket = coherent_state(ctx)?;
    let bra = ket.bra();
    let mut direct = GrassmannPolynomial::zero(ctx, 2);
    for (b, c) in bra.coeffs.iter().zip(&ket.coeffs) {
        let b2 = b.relabel(2, &[2])?;
        let c1 = c.relabel(2, &[1])?;
        direct = direct.add(&b2.multiply(&c1)?)?;
    }
    let mut reordered = GrassmannPolynomial::zero(ctx, 2);
    let mut q_exponential = GrassmannPolynomial::zero(ctx, 2);
    for n in 0..k {
        let n64 = n as i64;
        let c = RadicalScalar::from_body(inv_q_factorial(ctx, n)?).mul_root(n64 * (n64 - 1) / 2);
        reordered = reordered.add(&xibar2_xi1_power(ctx, n, c)?)?;
        let bf = box_factorial(ctx, n, -2)?;
        let c = RadicalScalar::from_body(bf.inverse()?);
        q_exponential = q_exponential.add(&xibar2_xi1_power(ctx, n, c)?)?;
    }
    Ok(OverlapForms {
        direct,
        reordered,
        q_exponential,
    })
}

/// `⟨ξ_2|ξ_1⟩`, after checking that all three computations agree.
pub fn overlap(ctx: &QContext) -> Result<GrassmannPolynomial> {
    let forms = overlap_forms(ctx)?;
    if !forms.agree() {
        return Err(AlgebraError::IdentityMismatch(format!(
            "overlap computations disagree: {forms:?}"
        )));
    }
    Ok(forms.direct)
}
