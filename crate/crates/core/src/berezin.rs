//! Berezin integration over one Z_k-graded mode, the weights ω and ω̃, and
//! both resolutions of unity.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::grassmann::{
    multiply_monomials, Generator, GeneratorKind, GrassmannMonomial, GrassmannPolynomial,
};
use crate::matrix::SquareMatrix;
use crate::oscillator::{coherent_state, FockOperator};
use crate::scalars::{q_factorial, CyclotomicNumber, QContext, RadicalScalar};

/// Exponent `e` in `X d = q^e d X` for a variable `X` and a differential `d`.
///
/// `ξ dξ̄ = q dξ̄ ξ`, `ξ dξ = q̄ dξ ξ`, `ξ̄ dξ = q dξ ξ̄`, `ξ̄ dξ̄ = q̄ dξ̄ ξ̄`.
pub fn differential_crossing_phase(x: GeneratorKind, d: GeneratorKind, k: u32) -> i64 {
    debug_assert!(!x.is_differential() && d.is_differential());
    (-x.grade(k) * d.grade(k)).rem_euclid(k as i64)
}

fn check_single_mode(p: &GrassmannPolynomial) -> Result<()> {
    if p.modes() != 1 {
        return Err(AlgebraError::InvalidArgument(format!(
            "integration is defined on one mode, got {}",
            p.modes()
        )));
    }
    Ok(())
}

/// `∫dξ p` or `∫dξ̄ p` with the differential standing to the left of `p`.
///
/// `∫dξ ξ^i ξ̄^j = δ_{i,k-1} ξ̄^j` and `∫dξ̄ ξ^i ξ̄^j = q̄^i ξ^i δ_{j,k-1}`,
/// the phase coming from moving `dξ̄` across `ξ^i`.
pub fn integrate_single(
    p: &GrassmannPolynomial,
    var: GeneratorKind,
    ctx: &QContext,
) -> Result<GrassmannPolynomial> {
    check_single_mode(p)?;
    let top = (ctx.k() - 1) as u8;
    let mut out = GrassmannPolynomial::zero(ctx, 1);
    for (m, c) in p.terms() {
        let (i, j) = (m.xi_power(), m.xibar_power());
        match var {
            GeneratorKind::Xi | GeneratorKind::Dxi => {
                if i == top {
                    out.add_term(GrassmannMonomial::single(0, j), c.clone())?;
                }
            }
            GeneratorKind::Xibar | GeneratorKind::Dxibar => {
                if j == top {
                    let phase = -differential_crossing_phase(
                        GeneratorKind::Xi,
                        GeneratorKind::Dxibar,
                        ctx.k(),
                    ) * i as i64;
                    out.add_term(GrassmannMonomial::single(i, 0), c.mul_root(phase))?;
                }
            }
        }
    }
    Ok(out)
}

/// `∫∫dξ̄dξ p = ∫dξ̄ (∫dξ p)`.
pub fn integrate_block(p: &GrassmannPolynomial, ctx: &QContext) -> Result<RadicalScalar> {
    let inner = integrate_single(p, GeneratorKind::Dxi, ctx)?;
    let outer = integrate_single(&inner, GeneratorKind::Dxibar, ctx)?;
    if let Some((m, _)) = outer.terms().find(|(m, _)| !m.is_one()) {
        return Err(AlgebraError::InvalidArgument(format!(
            "double integral left residual monomial {m:?}"
        )));
    }
    Ok(outer.scalar_part())
}

/// Integrate a word that may contain differentials anywhere.
///
/// Every differential is moved to the front, keeping the differentials'
/// relative order and collecting crossing phases; the rightmost differential
/// is then integrated first.
pub fn integrate_word(
    ctx: &QContext,
    word: &[Generator],
    coefficient: RadicalScalar,
) -> Result<GrassmannPolynomial> {
    let k = ctx.k();
    let mut diffs = Vec::new();
    let mut vars = Vec::new();
    let mut phase = 0i64;
    for g in word {
        if g.mode != 1 {
            return Err(AlgebraError::InvalidArgument(
                "integration is defined on one mode".into(),
            ));
        }
        if g.kind.is_differential() {
            phase += vars
                .iter()
                .map(|v: &Generator| differential_crossing_phase(v.kind, g.kind, k))
                .sum::<i64>();
            diffs.push(g.kind);
        } else {
            vars.push(*g);
        }
    }
    let mut p = GrassmannPolynomial::normal_order(ctx, 1, &vars, coefficient.mul_root(phase))?;
    for d in diffs.into_iter().rev() {
        p = integrate_single(&p, d, ctx)?;
    }
    Ok(p)
}

/// `prefix[0] ⋯ prefix[a] dξ̄dξ suffix[0] ⋯ suffix[b]`.
#[derive(Clone, Debug)]
pub struct IntegrandTerm {
    pub prefix: Vec<GrassmannPolynomial>,
    pub suffix: Vec<GrassmannPolynomial>,
}

impl IntegrandTerm {
    pub fn new(prefix: Vec<GrassmannPolynomial>, suffix: Vec<GrassmannPolynomial>) -> Self {
        IntegrandTerm { prefix, suffix }
    }
}

/// Phase exponent for moving a prefix monomial rightward across `dξ̄ dξ`.
fn block_crossing_phase(m: &GrassmannMonomial, k: u32) -> i64 {
    let mut e = 0;
    for (kind, n) in [
        (GeneratorKind::Xi, m.xi_power()),
        (GeneratorKind::Xibar, m.xibar_power()),
    ] {
        for d in [GeneratorKind::Dxibar, GeneratorKind::Dxi] {
            // X d = q^e d X, so d X = q^{-e} X d
            e -= differential_crossing_phase(kind, d, k) * n as i64;
        }
    }
    e
}

/// `∫∫` of an integrand with one `dξ̄dξ` block.
///
/// The factors are expanded lazily: a choice of one monomial per factor is
/// multiplied out only if its exponents can reach `ξ^{k-1} ξ̄^{k-1}`.
pub fn integrate_double(term: &IntegrandTerm, ctx: &QContext) -> Result<RadicalScalar> {
    let k = ctx.k();
    let top = k - 1;
    let factors: Vec<&GrassmannPolynomial> = term.prefix.iter().chain(&term.suffix).collect();
    for f in &factors {
        check_single_mode(f)?;
    }
    let split = term.prefix.len();
    let lists: Vec<Vec<(&GrassmannMonomial, &RadicalScalar)>> =
        factors.iter().map(|f| f.terms().collect()).collect();
    let mut acc = RadicalScalar::zero(ctx);
    if lists.is_empty() {
        return integrate_block(&GrassmannPolynomial::one(ctx, 1), ctx);
    }
    if lists.iter().any(Vec::is_empty) {
        return Ok(acc);
    }
    let block_unit = integrate_block(
        &GrassmannPolynomial::single(ctx, top, top, RadicalScalar::one(ctx)),
        ctx,
    )?;
    // suffix maxima for pruning
    let mut rest_xi = vec![0u32; lists.len() + 1];
    let mut rest_xibar = vec![0u32; lists.len() + 1];
    for ix in (0..lists.len()).rev() {
        let mx = lists[ix]
            .iter()
            .map(|(m, _)| m.xi_power() as u32)
            .max()
            .unwrap_or(0);
        let mb = lists[ix]
            .iter()
            .map(|(m, _)| m.xibar_power() as u32)
            .max()
            .unwrap_or(0);
        rest_xi[ix] = rest_xi[ix + 1] + mx;
        rest_xibar[ix] = rest_xibar[ix + 1] + mb;
    }
    let mut choice = vec![0usize; lists.len()];
    let mut depth = 0usize;
    let mut xi_sum = vec![0u32; lists.len() + 1];
    let mut xibar_sum = vec![0u32; lists.len() + 1];
    loop {
        if depth == lists.len() {
            if xi_sum[depth] == top && xibar_sum[depth] == top {
                acc =
                    acc.checked_add(&evaluate_choice(&lists, &choice, split, k)?.mul(&block_unit))?;
            }
            depth -= 1;
            choice[depth] += 1;
            continue;
        }
        if choice[depth] >= lists[depth].len() {
            if depth == 0 {
                break;
            }
            choice[depth] = 0;
            depth -= 1;
            choice[depth] += 1;
            continue;
        }
        let (m, _) = lists[depth][choice[depth]];
        let xs = xi_sum[depth] + m.xi_power() as u32;
        let bs = xibar_sum[depth] + m.xibar_power() as u32;
        let feasible = xs <= top
            && bs <= top
            && xs + rest_xi[depth + 1] >= top
            && bs + rest_xibar[depth + 1] >= top;
        if feasible {
            xi_sum[depth + 1] = xs;
            xibar_sum[depth + 1] = bs;
            depth += 1;
        } else {
            choice[depth] += 1;
        }
    }
    Ok(acc)
}

/// Product of the chosen monomials with the block phase, as a scalar
/// multiple of `ξ^{k-1} ξ̄^{k-1}`.
fn evaluate_choice(
    lists: &[Vec<(&GrassmannMonomial, &RadicalScalar)>],
    choice: &[usize],
    split: usize,
    k: u32,
) -> Result<RadicalScalar> {
    let (m0, c0) = lists[0][choice[0]];
    let mut mono = m0.clone();
    let mut coeff = c0.clone();
    let mut phase = if split > 0 {
        block_crossing_phase(m0, k)
    } else {
        0
    };
    for (ix, (list, &ch)) in lists.iter().zip(choice).enumerate().skip(1) {
        let (m, c) = list[ch];
        if ix < split {
            phase += block_crossing_phase(m, k);
        }
        let (next, e) = multiply_monomials(k, &mono, m).ok_or_else(|| {
            AlgebraError::InvalidArgument("pruned product unexpectedly vanished".into())
        })?;
        mono = next;
        phase += e;
        coeff = coeff.mul(c);
    }
    Ok(coeff.mul_root(phase))
}

/// `Σ_n c_n ξ^n ξ̄^n`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightFunction {
    pub coeffs: Vec<RadicalScalar>,
}

impl WeightFunction {
    pub fn polynomial(&self, ctx: &QContext) -> GrassmannPolynomial {
        let mut p = GrassmannPolynomial::zero(ctx, 1);
        for (n, c) in self.coeffs.iter().enumerate() {
            p.add_term(GrassmannMonomial::single(n as u8, n as u8), c.clone())
                .expect("distinct monomials");
        }
        p
    }

    /// The `n`-th term alone.
    pub fn component(&self, ctx: &QContext, n: usize) -> GrassmannPolynomial {
        GrassmannPolynomial::single(ctx, n as u32, n as u32, self.coeffs[n].clone())
    }
}

impl fmt::Debug for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

/// `c_n = q^{n(n+1)} [k-n-1]_q!`.
pub fn weight_omega(ctx: &QContext) -> Result<WeightFunction> {
    ctx.require_nondegenerate("the weight ω")?;
    let k = ctx.k();
    let coeffs = (0..k)
        .map(|n| {
            let n64 = n as i64;
            RadicalScalar::from_body(q_factorial(ctx, k - n - 1).mul_root(n64 * (n64 + 1)))
        })
        .collect();
    Ok(WeightFunction { coeffs })
}

/// `c̃_n = [k-n-1]_q!`.
pub fn weight_omega_tilde(ctx: &QContext) -> Result<WeightFunction> {
    ctx.require_nondegenerate("the weight ω̃")?;
    let k = ctx.k();
    let coeffs = (0..k)
        .map(|n| RadicalScalar::from_body(q_factorial(ctx, k - n - 1)))
        .collect();
    Ok(WeightFunction { coeffs })
}

/// Whether `c̃_n = q̄^{n(n+1)} c_n` for every `n`.
pub fn weights_related(omega: &WeightFunction, tilde: &WeightFunction) -> bool {
    omega.coeffs.len() == tilde.coeffs.len()
        && omega
            .coeffs
            .iter()
            .zip(&tilde.coeffs)
            .enumerate()
            .all(|(n, (c, t))| {
                let n64 = n as i64;
                c.mul_root(-n64 * (n64 + 1)) == *t
            })
}

/// `Σ_n q^{n(n+1)/2} [k-n-1]_q! (ξ̄ξ)^n`, built from the words `(ξ̄ξ)^n`.
pub fn omega_xibar_xi_presentation(ctx: &QContext) -> Result<GrassmannPolynomial> {
    ctx.require_nondegenerate("the weight ω")?;
    let k = ctx.k();
    let mut p = GrassmannPolynomial::zero(ctx, 1);
    for n in 0..k {
        let n64 = n as i64;
        let c = RadicalScalar::from_body(q_factorial(ctx, k - n - 1).mul_root(n64 * (n64 + 1) / 2));
        let word: Vec<Generator> = (0..n)
            .flat_map(|_| [Generator::xibar(1), Generator::xi(1)])
            .collect();
        p = p.add(&GrassmannPolynomial::normal_order(ctx, 1, &word, c)?)?;
    }
    Ok(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionForm {
    /// `∫∫dξ̄dξ ω |ξ⟩⟨ξ|`
    WeightFirst,
    /// `∫∫|ξ⟩dξ̄dξ ω̃ ⟨ξ|`
    KetFirst,
}

impl ResolutionForm {
    pub fn number(self) -> u8 {
        match self {
            ResolutionForm::WeightFirst => 1,
            ResolutionForm::KetFirst => 2,
        }
    }
}

/// Integrand for entry `(l, p)`: the ket coefficient of `|l⟩` and the bra
/// coefficient of `⟨p|` placed around the weight according to `form`.
fn entry_integrand(
    form: ResolutionForm,
    weight: GrassmannPolynomial,
    ket_l: GrassmannPolynomial,
    bra_p: GrassmannPolynomial,
) -> IntegrandTerm {
    match form {
        ResolutionForm::WeightFirst => IntegrandTerm::new(vec![], vec![weight, ket_l, bra_p]),
        ResolutionForm::KetFirst => IntegrandTerm::new(vec![ket_l], vec![weight, bra_p]),
    }
}

fn resolution(ctx: &QContext, form: ResolutionForm, w: &WeightFunction) -> Result<FockOperator> {
    let k = ctx.k() as usize;
    let ket = coherent_state(ctx)?;
    let bra = ket.bra();
    let weight = w.polynomial(ctx);
    SquareMatrix::try_from_fn(k, |l, p| {
        let term = entry_integrand(
            form,
            weight.clone(),
            ket.coeffs[l].clone(),
            bra.coeffs[p].clone(),
        );
        integrate_double(&term, ctx)
    })
}

/// `∫∫dξ̄dξ ω(ξ, ξ̄) |ξ⟩⟨ξ|` as a k×k matrix.
pub fn resolution_form1(ctx: &QContext) -> Result<FockOperator> {
    resolution(ctx, ResolutionForm::WeightFirst, &weight_omega(ctx)?)
}

/// `∫∫|ξ⟩dξ̄dξ ω̃(ξ, ξ̄) ⟨ξ|` as a k×k matrix.
pub fn resolution_form2(ctx: &QContext) -> Result<FockOperator> {
    resolution(ctx, ResolutionForm::KetFirst, &weight_omega_tilde(ctx)?)
}

/// Carry form-1 weights to form 2 by comparing the phases of `W_n · K_l`
/// and `K_l · W_n` for `l = k-1-n`, where only those products survive.
pub fn transport_weights(omega: &WeightFunction, ctx: &QContext) -> Result<WeightFunction> {
    let k = ctx.k();
    let coeffs = omega
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let l = (k - 1) as u8 - n as u8;
            let w = GrassmannMonomial::single(n as u8, n as u8);
            let ket = GrassmannMonomial::single(l, 0);
            let (_, weight_first) = multiply_monomials(k, &w, &ket).expect("degrees below k");
            let (_, ket_first) = multiply_monomials(k, &ket, &w).expect("degrees below k");
            Ok(c.mul_root(weight_first - ket_first))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightFunction { coeffs })
}

/// Recover the weights from the integrated constraints alone.
///
/// Each unknown `c_n` multiplies the unit weight `ξ^n ξ̄^n`; the entries
/// `(l, p)` of the integrated resolution give `k²` linear equations, which are
/// solved by exact elimination.
pub fn solve_weights(ctx: &QContext, form: ResolutionForm) -> Result<WeightFunction> {
    let k = ctx.k() as usize;
    // unnormalized coherent-state coefficients: phases kept, 1/sqrt([n]!) dropped
    let ket: Vec<GrassmannPolynomial> = (0..k)
        .map(|n| {
            let n64 = n as i64;
            GrassmannPolynomial::single(
                ctx,
                n as u32,
                0,
                RadicalScalar::root(ctx, -(n64 * (n64 + 1) / 2)),
            )
        })
        .collect();
    let bra: Vec<GrassmannPolynomial> = ket.iter().map(GrassmannPolynomial::dagger).collect();
    let mut rows: Vec<(Vec<CyclotomicNumber>, CyclotomicNumber)> = Vec::new();
    for l in 0..k {
        for p in 0..k {
            let mut coeffs = Vec::with_capacity(k);
            for n in 0..k {
                let unit =
                    GrassmannPolynomial::single(ctx, n as u32, n as u32, RadicalScalar::one(ctx));
                let term = entry_integrand(form, unit, ket[l].clone(), bra[p].clone());
                let a = integrate_double(&term, ctx)?;
                let a = a.as_cyclotomic().cloned().ok_or_else(|| {
                    AlgebraError::InvalidArgument(format!("constraint ({l},{p}) carries radicals"))
                })?;
                coeffs.push(a);
            }
            let rhs = if l == p {
                // Σ c_n A_n / [l]! = 1
                let fact = q_factorial(ctx, l as u32);
                if fact.is_zero() {
                    return Err(AlgebraError::degenerate(
                        ctx.k(),
                        format!(
                            "constraint for |{l}⟩⟨{l}| reads Σ c_n A_n / [{l}]_q! = 1 with [{l}]_q! = 0 since [k/2]_q = [{}]_q = 0; no weight satisfies it",
                            ctx.k() / 2
                        ),
                    ));
                }
                fact
            } else {
                ctx.zero()
            };
            rows.push((coeffs, rhs));
        }
    }
    let solution = solve_linear(ctx, rows, k)?;
    Ok(WeightFunction {
        coeffs: solution.into_iter().map(RadicalScalar::from_body).collect(),
    })
}

/// Unique solution of an overdetermined consistent system, or an error.
fn solve_linear(
    ctx: &QContext,
    mut rows: Vec<(Vec<CyclotomicNumber>, CyclotomicNumber)>,
    unknowns: usize,
) -> Result<Vec<CyclotomicNumber>> {
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(unknowns);
    for col in 0..unknowns {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else {
            return Err(AlgebraError::IdentityMismatch(format!(
                "weight c_{col} is not determined by the constraints"
            )));
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row].0[col].inverse()?;
        let (pc, pr) = {
            let (c, r) = &rows[pivot_row];
            (c.iter().map(|x| x * &inv).collect::<Vec<_>>(), r * &inv)
        };
        rows[pivot_row] = (pc.clone(), pr.clone());
        for r in 0..rows.len() {
            if r == pivot_row || rows[r].0[col].is_zero() {
                continue;
            }
            let f = rows[r].0[col].clone();
            for (x, p) in rows[r].0.iter_mut().zip(&pc) {
                *x = &*x - &(&f * p);
            }
            rows[r].1 = &rows[r].1 - &(&f * &pr);
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if let Some((_, r)) = rows[pivot_row..].iter().find(|(_, r)| !r.is_zero()) {
        return Err(AlgebraError::IdentityMismatch(format!(
            "constraints are inconsistent (residual {r:?})"
        )));
    }
    let _ = ctx;
    Ok(pivots.into_iter().map(|r| rows[r].1.clone()).collect())
}
