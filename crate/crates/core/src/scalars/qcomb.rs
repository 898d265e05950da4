//! q-numbers, box numbers and their factorials at q = e^{2πi/k}.

use super::context::QContext;
use super::cyclotomic::CyclotomicNumber;
use super::radical::RadicalScalar;
use crate::error::{AlgebraError, Result};

/// `[n]_q = Σ_{j<n} q^{n-1-2j}`.
pub fn q_number(ctx: &QContext, n: u32) -> CyclotomicNumber {
    if (n as usize) < ctx.tables.q_numbers.len() {
        return CyclotomicNumber::from_coeffs(
            &ctx.tables,
            ctx.tables.q_numbers[n as usize].clone(),
        );
    }
    let n = n as i64;
    (0..n).fold(ctx.zero(), |acc, j| acc + ctx.root(n - 1 - 2 * j))
}

/// `[n]_q` evaluated at q̄ instead of q.
pub fn q_number_conj(ctx: &QContext, n: u32) -> CyclotomicNumber {
    let n = n as i64;
    (0..n).fold(ctx.zero(), |acc, j| acc + ctx.root(-(n - 1 - 2 * j)))
}

/// `[n]_q! = [1]_q ⋯ [n]_q`, with `[0]_q! = 1`.
pub fn q_factorial(ctx: &QContext, n: u32) -> CyclotomicNumber {
    (1..=n).fold(ctx.one(), |acc, j| acc * q_number(ctx, j))
}

/// `{n}_Q = (1 - Q^n)/(1 - Q)` for `Q = ζ^m`, computed as `Σ_{j<n} Q^j`.
///
/// At `Q = 1` the geometric sum gives `n`; that limit is only admitted at
/// k = 2, where it is the fermionic case.
pub fn box_number(ctx: &QContext, n: u32, m: i64) -> Result<CyclotomicNumber> {
    let trivial_q = m.rem_euclid(ctx.k() as i64) == 0;
    if trivial_q && n >= 2 && ctx.k() != 2 {
        return Err(AlgebraError::degenerate(
            ctx.k(),
            format!("box number {{{n}}}_Q with Q = q^{m} = 1 has vanishing denominator 1 - Q"),
        ));
    }
    Ok((0..n as i64).fold(ctx.zero(), |acc, j| acc + ctx.root(m * j)))
}

/// `{n}_Q! = {1}_Q ⋯ {n}_Q`, with `{0}_Q! = 1`.
pub fn box_factorial(ctx: &QContext, n: u32, m: i64) -> Result<CyclotomicNumber> {
    (1..=n).try_fold(ctx.one(), |acc, j| Ok(acc * box_number(ctx, j, m)?))
}

/// Checks `[n]_q = [n]_q̄ = q̄^{n-1}{n}_{q²} = q^{n-1}{n}_{q̄²}` and
/// `[n]_q! = q^{n(n-1)/2}{n}_{q̄²}!`.
pub fn verify_box_identities(ctx: &QContext, n: u32) -> Result<bool> {
    let n64 = n as i64;
    let qn = q_number(ctx, n);
    let via_q2 = box_number(ctx, n, 2)?.mul_root(-(n64 - 1));
    let via_qbar2 = box_number(ctx, n, -2)?.mul_root(n64 - 1);
    let fact = q_factorial(ctx, n);
    let fact_box = box_factorial(ctx, n, -2)?.mul_root(n64 * (n64 - 1) / 2);
    Ok(qn == q_number_conj(ctx, n) && qn == via_q2 && qn == via_qbar2 && fact == fact_box)
}

/// `sqrt([n]_q!) = r_1 ⋯ r_n`.
pub fn sqrt_q_factorial(ctx: &QContext, n: u32) -> RadicalScalar {
    (1..=n).fold(RadicalScalar::one(ctx), |acc, j| {
        acc.mul(&RadicalScalar::radical(ctx, j))
    })
}

/// `1/sqrt([n]_q!)`, failing when `[n]_q! = 0`.
pub fn inv_sqrt_q_factorial(ctx: &QContext, n: u32) -> Result<RadicalScalar> {
    let s = sqrt_q_factorial(ctx, n);
    if s.is_zero() {
        return Err(AlgebraError::degenerate(
            ctx.k(),
            format!(
                "1/sqrt([{n}]_q!) is undefined because [{}]_q = 0",
                ctx.k() / 2
            ),
        ));
    }
    s.invert()
}

/// `1/[n]_q!`, failing when it vanishes.
pub fn inv_q_factorial(ctx: &QContext, n: u32) -> Result<CyclotomicNumber> {
    let f = q_factorial(ctx, n);
    if f.is_zero() {
        return Err(AlgebraError::degenerate(
            ctx.k(),
            format!("1/[{n}]_q! is undefined because [{}]_q = 0", ctx.k() / 2),
        ));
    }
    f.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_q_numbers() {
        let ctx = QContext::new(3).unwrap();
        assert!(q_number(&ctx, 0).is_zero());
        assert!(q_number(&ctx, 1).is_one());
        assert_eq!(q_number(&ctx, 2), ctx.rational(-1));
        // k = 2: [n]_{-1} = n(-1)^{n-1}
        let ctx2 = QContext::new(2).unwrap();
        assert_eq!(q_number(&ctx2, 1), ctx2.rational(1));
        assert_eq!(q_number(&ctx2, 2), ctx2.rational(-2));
    }

    #[test]
    fn q_factorials() {
        let ctx = QContext::new(3).unwrap();
        assert!(q_factorial(&ctx, 0).is_one());
        assert_eq!(q_factorial(&ctx, 2), ctx.rational(-1));
        let ctx5 = QContext::new(5).unwrap();
        assert_eq!(q_factorial(&ctx5, 2), ctx5.root(1) + ctx5.root(4));
    }

    #[test]
    fn box_numbers() {
        let ctx = QContext::new(7).unwrap();
        assert!(box_number(&ctx, 1, 3).unwrap().is_one());
        let ctx2 = QContext::new(2).unwrap();
        assert_eq!(box_number(&ctx2, 5, -2).unwrap(), ctx2.rational(5));
        let ctx3 = QContext::new(3).unwrap();
        assert_eq!(box_number(&ctx3, 2, 2).unwrap(), ctx3.one() + ctx3.root(2));
        assert!(box_number(&ctx3, 2, 3).is_err());
        assert!(box_number(&ctx3, 1, 3).is_ok());
    }

    #[test]
    fn box_identities_hold() {
        for k in 2..=12 {
            let ctx = QContext::new(k).unwrap();
            for n in 0..k {
                assert!(verify_box_identities(&ctx, n).unwrap(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn q_number_matches_sine_ratio() {
        for k in 3..=12 {
            let ctx = QContext::new(k).unwrap();
            for n in 0..k {
                let qn = q_number(&ctx, n);
                assert_eq!(qn.conjugate(), qn);
                let th = 2.0 * std::f64::consts::PI / k as f64;
                let want = (n as f64 * th).sin() / th.sin();
                let got = qn.to_complex();
                assert!((got.re - want).abs() < 1e-10 && got.im.abs() < 1e-10);
            }
        }
    }

    #[test]
    fn degenerate_factorial_inverse() {
        let ctx = QContext::new(6).unwrap();
        assert!(inv_sqrt_q_factorial(&ctx, 2).is_ok());
        let err = inv_sqrt_q_factorial(&ctx, 3).unwrap_err();
        assert!(err.to_string().contains("[3]_q = 0"));
        assert!(inv_q_factorial(&ctx, 4).is_err());
    }
}
