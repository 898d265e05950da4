//! Cyclotomic numbers times square-free products of formal radicals
//! `r_n = sqrt([n]_q)`.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::context::QContext;
use super::cyclotomic::{CyclotomicNumber, Rational, Tables};
use crate::error::{AlgebraError, Result};

/// Exact scalar `body · Π_{n ∈ radicals} r_n`.
///
/// Bit `n-1` of `radicals` records one factor `r_n`. Products fold `r_n^2` into
/// the body as `[n]_q`. `r_1 = 1` is never stored and any `r_n` with
/// `[n]_q = 0` makes the whole scalar zero.
#[derive(Clone, PartialEq, Eq)]
pub struct RadicalScalar {
    body: CyclotomicNumber,
    radicals: u64,
}

impl RadicalScalar {
    pub fn zero(ctx: &QContext) -> Self {
        Self::from_body(ctx.zero())
    }

    pub fn one(ctx: &QContext) -> Self {
        Self::from_body(ctx.one())
    }

    pub fn from_int(ctx: &QContext, n: i64) -> Self {
        Self::from_body(ctx.rational(n))
    }

    pub fn from_rational(ctx: &QContext, r: Rational) -> Self {
        Self::from_body(ctx.from_rational(r))
    }

    /// ζ^e.
    pub fn root(ctx: &QContext, e: i64) -> Self {
        Self::from_body(ctx.root(e))
    }

    pub fn from_body(body: CyclotomicNumber) -> Self {
        RadicalScalar { body, radicals: 0 }
    }

    /// The formal radical `r_n = sqrt([n]_q)`, for `0 <= n <= k`.
    pub fn radical(ctx: &QContext, n: u32) -> Self {
        assert!(
            n <= ctx.k(),
            "radical index {n} out of range for k = {}",
            ctx.k()
        );
        let qn = &ctx.tables.q_numbers[n as usize];
        if qn.iter().all(num_traits::Zero::is_zero) {
            return Self::zero(ctx);
        }
        if n == 1 {
            return Self::one(ctx);
        }
        RadicalScalar {
            body: ctx.one(),
            radicals: 1u64 << (n - 1),
        }
    }

    /// Assemble from parts, normalising the radical set.
    pub fn new(body: CyclotomicNumber, radicals: u64) -> Self {
        let tables = Arc::clone(&body.tables);
        let mut out = Self::from_body(body);
        for n in radical_indices(radicals) {
            let r = RadicalScalar::radical_in(&tables, n);
            out = out.mul(&r);
        }
        out
    }

    fn radical_in(tables: &Arc<Tables>, n: u32) -> Self {
        let qn = &tables.q_numbers[n as usize];
        if qn.iter().all(num_traits::Zero::is_zero) {
            return Self::from_body(CyclotomicNumber::zero_in(tables));
        }
        if n == 1 {
            return Self::from_body(CyclotomicNumber::rational_in(
                tables,
                num_traits::One::one(),
            ));
        }
        RadicalScalar {
            body: CyclotomicNumber::rational_in(tables, num_traits::One::one()),
            radicals: 1u64 << (n - 1),
        }
    }

    pub fn body(&self) -> &CyclotomicNumber {
        &self.body
    }

    /// Raw radical bitmask (bit `n-1` ⇔ factor `r_n`).
    pub fn radical_mask(&self) -> u64 {
        self.radicals
    }

    /// Indices `n` of the radical factors, ascending.
    pub fn radical_indices(&self) -> Vec<u32> {
        radical_indices(self.radicals).collect()
    }

    pub fn order(&self) -> u32 {
        self.body.order()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.radicals == 0 && self.body.is_one()
    }

    /// `Some(body)` when no radicals are present.
    pub fn as_cyclotomic(&self) -> Option<&CyclotomicNumber> {
        (self.radicals == 0).then_some(&self.body)
    }

    pub fn zero_like(&self) -> Self {
        Self::from_body(self.body.zero_like())
    }

    pub fn one_like(&self) -> Self {
        Self::from_body(self.body.one_like())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let shared = self.radicals & other.radicals;
        let mut body = &self.body * &other.body;
        for n in radical_indices(shared) {
            let qn = CyclotomicNumber::from_coeffs(
                &body.tables,
                body.tables.q_numbers[n as usize].clone(),
            );
            body = body * qn;
        }
        let radicals = if body.is_zero() {
            0
        } else {
            self.radicals ^ other.radicals
        };
        RadicalScalar { body, radicals }
    }

    pub fn mul_body(&self, c: &CyclotomicNumber) -> Self {
        let body = &self.body * c;
        let radicals = if body.is_zero() { 0 } else { self.radicals };
        RadicalScalar { body, radicals }
    }

    /// Multiplication by ζ^e.
    pub fn mul_root(&self, e: i64) -> Self {
        RadicalScalar {
            body: self.body.mul_root(e),
            radicals: self.radicals,
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.mul_body(&CyclotomicNumber::rational_in(&self.body.tables, r.clone()))
    }

    pub fn neg(&self) -> Self {
        RadicalScalar {
            body: -&self.body,
            radicals: self.radicals,
        }
    }

    /// Sum of two scalars in the same radical class (or with one side zero).
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.radicals != other.radicals {
            return Err(AlgebraError::IncompatibleRadicals {
                left: describe_mask(self.radicals),
                right: describe_mask(other.radicals),
            });
        }
        let body = &self.body + &other.body;
        let radicals = if body.is_zero() { 0 } else { self.radicals };
        Ok(RadicalScalar { body, radicals })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    /// Multiplicative inverse; `r_n^{-1} = r_n / [n]_q`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut denom = self.body.clone();
        for n in radical_indices(self.radicals) {
            let qn = CyclotomicNumber::from_coeffs(
                &denom.tables,
                denom.tables.q_numbers[n as usize].clone(),
            );
            denom = denom * qn;
        }
        Ok(RadicalScalar {
            body: denom.inverse()?,
            radicals: self.radicals,
        })
    }

    /// Formal adjoint: conjugates the body, fixes every `r_n`.
    pub fn dagger(&self) -> Self {
        RadicalScalar {
            body: self.body.conjugate(),
            radicals: self.radicals,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Complex value: ζ ↦ e^{2πi/k}, `r_n` ↦ principal square root of the real `[n]_q`.
    pub fn numeric_value(&self) -> Complex64 {
        let mut z = self.body.to_complex();
        for n in radical_indices(self.radicals) {
            let qn = CyclotomicNumber::from_coeffs(
                &self.body.tables,
                self.body.tables.q_numbers[n as usize].clone(),
            );
            z *= principal_sqrt(qn.to_complex().re);
        }
        z
    }
}

pub(crate) fn principal_sqrt(x: f64) -> Complex64 {
    if x >= 0.0 {
        Complex64::new(x.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-x).sqrt())
    }
}

fn radical_indices(mask: u64) -> impl Iterator<Item = u32> {
    (0..64u32)
        .filter(move |b| mask >> b & 1 == 1)
        .map(|b| b + 1)
}

fn describe_mask(mask: u64) -> String {
    let parts: Vec<String> = radical_indices(mask).map(|n| format!("r_{n}")).collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("·")
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})", self.body)?;
        for n in radical_indices(self.radicals) {
            write!(f, "·r_{n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radical_squares_fold_into_body() {
        let ctx = QContext::new(3).unwrap();
        let r2 = RadicalScalar::radical(&ctx, 2);
        let sq = r2.mul(&r2);
        assert_eq!(sq.radical_mask(), 0);
        assert_eq!(sq, RadicalScalar::from_int(&ctx, -1));
    }

    #[test]
    fn dagger_fixes_radicals() {
        let ctx = QContext::new(3).unwrap();
        let x = RadicalScalar::radical(&ctx, 2).mul_root(1);
        let expect = RadicalScalar::radical(&ctx, 2).mul_root(2);
        assert_eq!(x.dagger(), expect);
    }

    #[test]
    fn r1_is_one_and_self_inverse() {
        let ctx = QContext::new(5).unwrap();
        let r1 = RadicalScalar::radical(&ctx, 1);
        assert!(r1.is_one());
        assert_eq!(r1.invert().unwrap(), r1);
    }

    #[test]
    fn vanishing_radical_is_zero() {
        let ctx = QContext::new(4).unwrap();
        assert!(RadicalScalar::radical(&ctx, 2).is_zero());
        assert!(RadicalScalar::radical(&ctx, 0).is_zero());
    }

    #[test]
    fn mismatched_radical_sum_is_an_error() {
        let ctx = QContext::new(5).unwrap();
        let r2 = RadicalScalar::radical(&ctx, 2);
        let r3 = RadicalScalar::radical(&ctx, 3);
        assert!(matches!(
            r2.checked_add(&r3),
            Err(AlgebraError::IncompatibleRadicals { .. })
        ));
        assert_eq!(r2.checked_add(&RadicalScalar::zero(&ctx)).unwrap(), r2);
        assert!(r2.checked_sub(&r2).unwrap().is_zero());
    }

    #[test]
    fn inverse_of_radical_product() {
        let ctx = QContext::new(7).unwrap();
        let x = RadicalScalar::radical(&ctx, 2)
            .mul(&RadicalScalar::radical(&ctx, 3))
            .mul_root(3);
        assert!(x.mul(&x.invert().unwrap()).is_one());
    }

    #[test]
    fn numeric_values() {
        let ctx = QContext::new(3).unwrap();
        let q = RadicalScalar::root(&ctx, 1).numeric_value();
        assert!((q.re + 0.5).abs() < 1e-12 && (q.im - 0.8660254037844386).abs() < 1e-12);
        let r2 = RadicalScalar::radical(&ctx, 2).numeric_value();
        assert!(r2.re.abs() < 1e-12 && (r2.im - 1.0).abs() < 1e-12);
        assert_eq!(
            RadicalScalar::zero(&ctx).numeric_value(),
            Complex64::new(0.0, 0.0)
        );
    }
}
