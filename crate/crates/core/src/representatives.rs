//! Grassmann representatives `ψ(ξ̄)` of Fock states, their scalar product,
//! derivatives in `ξ̄`, and the differential realizations of `a`, `a⁺`, `N`.

use std::fmt;

use crate::berezin::{integrate_double, weight_omega_tilde, IntegrandTerm};
use crate::error::{AlgebraError, Result};
use crate::grassmann::{GrassmannMonomial, GrassmannPolynomial};
use crate::matrix::SquareMatrix;
use crate::oscillator::{bm_checks, coherent_state, fock_matrices, IdentityCheck};
use crate::scalars::{inv_sqrt_q_factorial, q_number, CyclotomicNumber, QContext, RadicalScalar};

/// Phase convention for the representative monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `q̄^{n(n-1)/2} ξ̄^n / sqrt([n]!)`
    M,
    /// `q^{n(n+1)/2} ξ̄^n / sqrt([n]!)`, the bra `⟨ξ|` taken as the dagger of `|ξ⟩`
    D,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::M => "M",
            Convention::D => "D",
        }
    }
}

/// Linear operator on representative coefficient vectors; column `m` is the image of `ξ̄^m`.
pub type RepOperator = SquareMatrix;

/// `Σ_m c_m ξ̄^m` with `m < k`.
#[derive(Clone, PartialEq, Eq)]
pub struct RepPolynomial {
    pub coeffs: Vec<RadicalScalar>,
}

impl RepPolynomial {
    pub fn zero(ctx: &QContext) -> Self {
        RepPolynomial {
            coeffs: vec![RadicalScalar::zero(ctx); ctx.k() as usize],
        }
    }

    /// `c ξ̄^m`.
    pub fn monomial(ctx: &QContext, m: usize, c: RadicalScalar) -> Self {
        let mut p = Self::zero(ctx);
        p.coeffs[m] = c;
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RadicalScalar::is_zero)
    }

    pub fn to_grassmann(&self, ctx: &QContext) -> GrassmannPolynomial {
        let mut p = GrassmannPolynomial::zero(ctx, 1);
        for (m, c) in self.coeffs.iter().enumerate() {
            p.add_term(GrassmannMonomial::single(0, m as u8), c.clone())
                .expect("distinct monomials");
        }
        p
    }

    /// Inverse of [`RepPolynomial::to_grassmann`]; fails if `ξ` occurs.
    pub fn from_grassmann(p: &GrassmannPolynomial) -> Result<Self> {
        let mut out = Self::zero(p.ctx());
        for (m, c) in p.terms() {
            if p.modes() != 1 || m.xi_power() != 0 {
                return Err(AlgebraError::InvalidArgument(format!(
                    "{m:?} is not a monomial in ξ̄ alone"
                )));
            }
            out.coeffs[m.xibar_power() as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn apply(op: &RepOperator, p: &RepPolynomial) -> Result<Self> {
        Ok(RepPolynomial {
            coeffs: op.apply(&p.coeffs)?,
        })
    }
}

impl fmt::Debug for RepPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

fn monomial_coefficient(ctx: &QContext, n: u32, convention: Convention) -> Result<RadicalScalar> {
    ctx.require_nondegenerate("representative monomials")?;
    let n64 = n as i64;
    let phase = match convention {
        Convention::M => -(n64 * (n64 - 1) / 2),
        Convention::D => n64 * (n64 + 1) / 2,
    };
    Ok(inv_sqrt_q_factorial(ctx, n)?.mul_root(phase))
}

/// Representative of `|n⟩`.
pub fn rep_monomial(ctx: &QContext, n: u32, convention: Convention) -> Result<RepPolynomial> {
    if n >= ctx.k() {
        return Err(AlgebraError::InvalidArgument(format!(
            "level {n} outside 0..{}",
            ctx.k()
        )));
    }
    Ok(RepPolynomial::monomial(
        ctx,
        n as usize,
        monomial_coefficient(ctx, n, convention)?,
    ))
}

/// `Σ_n s_n · rep_monomial(n)`.
pub fn to_representative(
    state: &[RadicalScalar],
    ctx: &QContext,
    convention: Convention,
) -> Result<RepPolynomial> {
    if state.len() != ctx.k() as usize {
        return Err(AlgebraError::InvalidArgument(format!(
            "state has {} components, expected {}",
            state.len(),
            ctx.k()
        )));
    }
    let coeffs = state
        .iter()
        .enumerate()
        .map(|(n, s)| Ok(s.mul(&monomial_coefficient(ctx, n as u32, convention)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RepPolynomial { coeffs })
}

/// Fock coefficients of `∫∫ |ξ⟩ dξ̄dξ ω̃ ψ(ξ̄)`.
pub fn reconstruct(psi: &RepPolynomial, ctx: &QContext) -> Result<Vec<RadicalScalar>> {
    let ket = coherent_state(ctx)?;
    let weight = weight_omega_tilde(ctx)?.polynomial(ctx);
    let psi = psi.to_grassmann(ctx);
    ket.coeffs
        .iter()
        .map(|kl| {
            integrate_double(
                &IntegrandTerm::new(vec![kl.clone()], vec![weight.clone(), psi.clone()]),
                ctx,
            )
        })
        .collect()
}

/// `∫∫ φ̄(ξ) dξ̄dξ ω̃ ψ(ξ̄)`, with `φ̄` the dagger of `bra_side`.
pub fn rep_inner(
    bra_side: &RepPolynomial,
    ket_side: &RepPolynomial,
    ctx: &QContext,
) -> Result<RadicalScalar> {
    let weight = weight_omega_tilde(ctx)?.polynomial(ctx);
    let left = bra_side.to_grassmann(ctx).dagger();
    integrate_double(
        &IntegrandTerm::new(vec![left], vec![weight, ket_side.to_grassmann(ctx)]),
        ctx,
    )
}

/// `∂_ξ̄ ξ̄^m = m ξ̄^{m-1}`.
pub fn partial_derivative(psi: &RepPolynomial, ctx: &QContext) -> Result<RepPolynomial> {
    RepPolynomial::apply(&partial_matrix(ctx), psi)
}

/// `D_ξ̄ ξ̄^m = [m]_q ξ̄^{m-1}`.
pub fn q_derivative(psi: &RepPolynomial, ctx: &QContext) -> Result<RepPolynomial> {
    RepPolynomial::apply(&q_derivative_matrix(ctx), psi)
}

/// `(ψ(qξ̄) - ψ(q̄ξ̄)) / ((q - q̄) ξ̄)`.
pub fn q_derivative_difference_quotient(
    psi: &RepPolynomial,
    ctx: &QContext,
) -> Result<RepPolynomial> {
    if ctx.k() == 2 {
        return Err(AlgebraError::DegenerateDenominator(
            "q - q^-1 = 0 at k = 2".into(),
        ));
    }
    let p = psi.to_grassmann(ctx);
    let diff = p.scale_substitute(1).sub(&p.scale_substitute(-1))?;
    let denom = (ctx.root(1) - ctx.qbar()).inverse()?;
    let mut out = RepPolynomial::zero(ctx);
    for (m, c) in diff.terms() {
        let j = m.xibar_power() as usize;
        if j == 0 {
            return Err(AlgebraError::IdentityMismatch(
                "difference left a constant term".into(),
            ));
        }
        out.coeffs[j - 1] = c.mul_body(&denom);
    }
    Ok(out)
}

fn shift_down(ctx: &QContext, weight: impl Fn(u32) -> CyclotomicNumber) -> RepOperator {
    let k = ctx.k() as usize;
    SquareMatrix::from_fn(k, |i, j| {
        if j == i + 1 {
            RadicalScalar::from_body(weight(j as u32))
        } else {
            RadicalScalar::zero(ctx)
        }
    })
}

/// `∂_ξ̄` as a matrix.
pub fn partial_matrix(ctx: &QContext) -> RepOperator {
    shift_down(ctx, |m| ctx.rational(m as i64))
}

/// `D_ξ̄` as a matrix.
pub fn q_derivative_matrix(ctx: &QContext) -> RepOperator {
    shift_down(ctx, |m| q_number(ctx, m))
}

/// Multiplication by `ξ̄`, with `ξ̄^k = 0`.
pub fn xibar_matrix(ctx: &QContext) -> RepOperator {
    let k = ctx.k() as usize;
    SquareMatrix::from_fn(k, |i, j| {
        if i == j + 1 {
            RadicalScalar::one(ctx)
        } else {
            RadicalScalar::zero(ctx)
        }
    })
}

/// `q^{s ξ̄∂_ξ̄}`: `ξ̄^m ↦ q^{sm} ξ̄^m`.
pub fn euler_power_matrix(ctx: &QContext, s: i64) -> RepOperator {
    let k = ctx.k() as usize;
    SquareMatrix::diagonal(
        (0..k)
            .map(|m| RadicalScalar::root(ctx, s * m as i64))
            .collect(),
    )
}

/// `ρ(a) = q^{ξ̄∂} D_ξ̄`, `ρ(a⁺) = ξ̄ q̄^{ξ̄∂}`, `ρ(N) = ξ̄∂_ξ̄`.
#[derive(Clone, Debug)]
pub struct Realizations {
    pub a: RepOperator,
    pub ad: RepOperator,
    pub number: RepOperator,
}

pub fn realizations(ctx: &QContext) -> Result<Realizations> {
    ctx.require_nondegenerate("the differential realizations")?;
    Ok(Realizations {
        a: euler_power_matrix(ctx, 1).mul(&q_derivative_matrix(ctx))?,
        ad: xibar_matrix(ctx).mul(&euler_power_matrix(ctx, -1))?,
        number: xibar_matrix(ctx).mul(&partial_matrix(ctx))?,
    })
}

/// `B⁻¹ op B` with `B = diag` of the monomial coefficients of `convention`.
pub fn in_monomial_basis(
    op: &RepOperator,
    ctx: &QContext,
    convention: Convention,
) -> Result<SquareMatrix> {
    let k = ctx.k();
    let b = (0..k)
        .map(|n| monomial_coefficient(ctx, n, convention))
        .collect::<Result<Vec<_>>>()?;
    let b_inv = b
        .iter()
        .map(RadicalScalar::invert)
        .collect::<Result<Vec<_>>>()?;
    SquareMatrix::diagonal(b_inv)
        .mul(op)?
        .mul(&SquareMatrix::diagonal(b))
}

/// `diag(q^{n²})`, sending each M-monomial to the D-monomial.
pub fn convention_intertwiner(ctx: &QContext) -> RepOperator {
    let k = ctx.k() as usize;
    SquareMatrix::diagonal(
        (0..k)
            .map(|n| RadicalScalar::root(ctx, (n * n) as i64))
            .collect(),
    )
}

/// BM relations and nilpotency for the realizations, plus intertwining with
/// the Fock matrices in convention M.
pub fn verify_realizations(ctx: &QContext) -> Result<Vec<IdentityCheck>> {
    let r = realizations(ctx)?;
    let mut checks = bm_checks(
        ctx,
        &r.a,
        &r.ad,
        &r.number,
        &euler_power_matrix(ctx, 1),
        &euler_power_matrix(ctx, -1),
    );
    for c in &mut checks {
        c.name = format!("realization {}", c.name);
    }
    let f = fock_matrices(ctx);
    for (name, op, fock) in [
        ("intertwine_a", &r.a, &f.a),
        ("intertwine_ad", &r.ad, &f.ad),
        ("intertwine_n", &r.number, &f.number),
    ] {
        let m = in_monomial_basis(op, ctx, Convention::M)?;
        checks.push(IdentityCheck::new(
            name,
            &m == fock,
            if &m == fock {
                "M-basis matrix equals the Fock matrix".to_string()
            } else {
                format!("M-basis matrix {m:?}")
            },
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(ctx: &QContext, m: usize) -> Vec<RadicalScalar> {
        (0..ctx.k() as usize)
            .map(|n| {
                if n == m {
                    RadicalScalar::one(ctx)
                } else {
                    RadicalScalar::zero(ctx)
                }
            })
            .collect()
    }

    #[test]
    fn monomial_examples() {
        for k in [2u32, 3, 5] {
            let ctx = QContext::new(k).unwrap();
            for conv in [Convention::M, Convention::D] {
                assert!(rep_monomial(&ctx, 0, conv).unwrap().coeffs[0].is_one());
            }
        }
        let ctx = QContext::new(3).unwrap();
        let m2 = rep_monomial(&ctx, 2, Convention::M).unwrap();
        let expect = inv_sqrt_q_factorial(&ctx, 2).unwrap().mul_root(-1);
        assert_eq!(m2.coeffs[2], expect);
        assert_eq!(
            convention_intertwiner(&ctx),
            SquareMatrix::diagonal(vec![
                RadicalScalar::one(&ctx),
                RadicalScalar::root(&ctx, 1),
                RadicalScalar::root(&ctx, 1)
            ])
        );
        let ctx2 = QContext::new(2).unwrap();
        assert_eq!(
            convention_intertwiner(&ctx2),
            SquareMatrix::diagonal(vec![
                RadicalScalar::one(&ctx2),
                RadicalScalar::from_int(&ctx2, -1)
            ])
        );
    }

    #[test]
    fn intertwiner_maps_m_to_d() {
        for k in [2u32, 3, 5, 7] {
            let ctx = QContext::new(k).unwrap();
            let t = convention_intertwiner(&ctx);
            for n in 0..k {
                let m = rep_monomial(&ctx, n, Convention::M).unwrap();
                let d = rep_monomial(&ctx, n, Convention::D).unwrap();
                assert_eq!(RepPolynomial::apply(&t, &m).unwrap(), d);
            }
        }
    }

    #[test]
    fn reconstruction_by_convention() {
        for k in [2u32, 3, 5] {
            let ctx = QContext::new(k).unwrap();
            for m in 0..k as usize {
                let e = unit(&ctx, m);
                let d = to_representative(&e, &ctx, Convention::D).unwrap();
                assert_eq!(reconstruct(&d, &ctx).unwrap(), e, "k={k} m={m}");
                let mm = to_representative(&e, &ctx, Convention::M).unwrap();
                let mut expect = e.clone();
                expect[m] = RadicalScalar::root(&ctx, -((m * m) as i64));
                assert_eq!(reconstruct(&mm, &ctx).unwrap(), expect, "k={k} m={m}");
            }
            let zero = vec![RadicalScalar::zero(&ctx); k as usize];
            assert!(to_representative(&zero, &ctx, Convention::M)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn orthonormal_monomials() {
        for k in [2u32, 3, 5, 7] {
            let ctx = QContext::new(k).unwrap();
            for conv in [Convention::M, Convention::D] {
                for m in 0..k {
                    for n in 0..k {
                        let v = rep_inner(
                            &rep_monomial(&ctx, m, conv).unwrap(),
                            &rep_monomial(&ctx, n, conv).unwrap(),
                            &ctx,
                        )
                        .unwrap();
                        assert_eq!(v.is_one(), m == n, "k={k} {conv:?} {m} {n}");
                        assert_eq!(v.is_zero(), m != n);
                    }
                }
            }
            let z = RepPolynomial::zero(&ctx);
            let p = rep_monomial(&ctx, 1, Convention::D).unwrap();
            assert!(rep_inner(&z, &p, &ctx).unwrap().is_zero());
        }
    }

    #[test]
    fn derivative_examples() {
        let ctx = QContext::new(5).unwrap();
        let p = RepPolynomial::monomial(&ctx, 3, RadicalScalar::one(&ctx));
        assert_eq!(
            partial_derivative(&p, &ctx).unwrap(),
            RepPolynomial::monomial(&ctx, 2, RadicalScalar::from_int(&ctx, 3))
        );
        let ctx3 = QContext::new(3).unwrap();
        let p = RepPolynomial::monomial(&ctx3, 2, RadicalScalar::one(&ctx3));
        assert_eq!(
            q_derivative(&p, &ctx3).unwrap(),
            RepPolynomial::monomial(&ctx3, 1, RadicalScalar::from_int(&ctx3, -1))
        );
        let one = RepPolynomial::monomial(&ctx3, 0, RadicalScalar::one(&ctx3));
        assert!(q_derivative(&one, &ctx3).unwrap().is_zero());
        let ctx2 = QContext::new(2).unwrap();
        assert!(matches!(
            q_derivative_difference_quotient(&RepPolynomial::zero(&ctx2), &ctx2),
            Err(AlgebraError::DegenerateDenominator(_))
        ));
    }

    #[test]
    fn difference_quotient_matches_coefficient_rule() {
        for k in 3..=11u32 {
            let ctx = QContext::new(k).unwrap();
            for m in 0..k as usize {
                let p = RepPolynomial::monomial(&ctx, m, RadicalScalar::root(&ctx, m as i64 + 1));
                assert_eq!(
                    q_derivative_difference_quotient(&p, &ctx).unwrap(),
                    q_derivative(&p, &ctx).unwrap(),
                    "k={k} m={m}"
                );
            }
        }
    }

    #[test]
    fn realization_actions() {
        let ctx = QContext::new(5).unwrap();
        let r = realizations(&ctx).unwrap();
        for m in 0..5usize {
            let p = RepPolynomial::monomial(&ctx, m, RadicalScalar::one(&ctx));
            assert_eq!(
                RepPolynomial::apply(&r.number, &p).unwrap(),
                RepPolynomial::monomial(&ctx, m, RadicalScalar::from_int(&ctx, m as i64))
            );
        }
        for k in [3u32, 5, 7] {
            let ctx = QContext::new(k).unwrap();
            for c in verify_realizations(&ctx).unwrap() {
                assert!(c.holds, "k={k}: {c:?}");
            }
        }
    }

    #[test]
    fn realization_intertwining_at_k2() {
        let ctx = QContext::new(2).unwrap();
        for c in verify_realizations(&ctx).unwrap() {
            assert_eq!(c.holds, !c.name.contains("bm_"), "{c:?}");
        }
    }
}
