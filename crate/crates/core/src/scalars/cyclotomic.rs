//! Exact arithmetic in the cyclotomic field Q(ζ_k).
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(k)-1}` after reduction
//! modulo the k-th cyclotomic polynomial, so structural equality is field
//! equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};

/// Arbitrary-precision rational number (always kept in lowest terms).
pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Coefficients (lowest degree first) of the k-th cyclotomic polynomial Φ_k.
///
/// Obtained by dividing `x^k - 1` by Φ_d for every proper divisor `d` of `k`.
pub fn cyclotomic_polynomial(k: u32) -> Vec<Rational> {
    assert!(k >= 1, "cyclotomic polynomial needs k >= 1");
    let mut poly = vec![Rational::zero(); k as usize + 1];
    poly[0] = rat(-1);
    poly[k as usize] = Rational::one();
    for d in 1..k {
        if k.is_multiple_of(d) {
            poly = divide_exact(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

/// Quotient of `num / den` for monic `den`, asserting the remainder vanishes.
fn divide_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![Rational::zero(); nd - dd + 1];
    for shift in (0..=nd - dd).rev() {
        let lead = rem[shift + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (i, c) in den.iter().enumerate() {
            rem[shift + i] -= &lead * c;
        }
        quot[shift] = lead;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Per-order precomputed data shared by every number of that order.
pub(crate) struct Tables {
    pub(crate) order: u32,
    pub(crate) degree: usize,
    /// `powers[j]` is ζ^j reduced, for `0 <= j < order`.
    pub(crate) powers: Vec<Vec<Rational>>,
    /// Residues `t` coprime to the order; σ_t : ζ ↦ ζ^t runs over the Galois group.
    pub(crate) units: Vec<u32>,
    /// `q_numbers[n]` is `[n]_q` reduced, for `0 <= n <= order`.
    pub(crate) q_numbers: Vec<Vec<Rational>>,
}

impl Tables {
    pub(crate) fn new(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![Rational::zero(); degree];
        cur[0] = Rational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by ζ and fold ζ^degree = -Σ m_i ζ^i
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Rational::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * &modulus[i];
                }
            }
        }
        let units = (1..order.max(2))
            .filter(|t| t.gcd(&order) == 1)
            .collect::<Vec<_>>();
        let k = order as i64;
        let q_numbers = (0..=order as i64)
            .map(|n| {
                let mut acc = vec![Rational::zero(); degree];
                for j in 0..n {
                    let e = (n - 1 - 2 * j).rem_euclid(k) as usize;
                    for (a, p) in acc.iter_mut().zip(&powers[e]) {
                        *a += p;
                    }
                }
                acc
            })
            .collect();
        Tables {
            order,
            degree,
            powers,
            units,
            q_numbers,
        }
    }

    pub(crate) fn power_index(&self, e: i64) -> usize {
        e.rem_euclid(self.order as i64) as usize
    }
}

/// An element of Q(ζ_k) with ζ = e^{2πi/k}.
#[derive(Clone)]
pub struct CyclotomicNumber {
    pub(crate) tables: Arc<Tables>,
    pub(crate) coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    pub(crate) fn from_coeffs(tables: &Arc<Tables>, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len(), tables.degree);
        CyclotomicNumber {
            tables: Arc::clone(tables),
            coeffs,
        }
    }

    pub(crate) fn zero_in(tables: &Arc<Tables>) -> Self {
        Self::from_coeffs(tables, vec![Rational::zero(); tables.degree])
    }

    pub(crate) fn rational_in(tables: &Arc<Tables>, r: Rational) -> Self {
        let mut c = Self::zero_in(tables);
        c.coeffs[0] = r;
        c
    }

    pub(crate) fn root_in(tables: &Arc<Tables>, e: i64) -> Self {
        Self::from_coeffs(tables, tables.powers[tables.power_index(e)].clone())
    }

    /// The order k of the ambient field.
    pub fn order(&self) -> u32 {
        self.tables.order
    }

    /// Power-basis coefficients, length φ(k).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn zero_like(&self) -> Self {
        Self::zero_in(&self.tables)
    }

    pub fn one_like(&self) -> Self {
        Self::rational_in(&self.tables, Rational::one())
    }

    /// ζ^e in the same field.
    pub fn root_like(&self, e: i64) -> Self {
        Self::root_in(&self.tables, e)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `Some(r)` when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// `Some((r, j))` when the element equals `r·ζ^j` for a rational `r` and `0 <= j < k`.
    ///
    /// The smallest such `j` with positive `r` is preferred, then the smallest `j` overall.
    pub fn as_scaled_root(&self) -> Option<(Rational, u32)> {
        if self.is_zero() {
            return Some((Rational::zero(), 0));
        }
        let mut fallback = None;
        for j in 0..self.tables.order {
            if let Some(r) = self.mul_root(-(j as i64)).as_rational() {
                if r.is_positive() {
                    return Some((r, j));
                }
                fallback.get_or_insert((r, j));
            }
        }
        fallback
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.tables.order, other.tables.order,
            "mixing cyclotomic numbers of different order"
        );
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.check_same(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self::from_coeffs(&self.tables, coeffs)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.check_same(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Self::from_coeffs(&self.tables, coeffs)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.check_same(other);
        let t = &self.tables;
        let k = t.order as usize;
        let mut cyclic = vec![Rational::zero(); k];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    cyclic[(i + j) % k] += a * b;
                }
            }
        }
        let mut out = vec![Rational::zero(); t.degree];
        for (e, c) in cyclic.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e < t.degree {
                out[e] += c;
            } else {
                for (o, p) in out.iter_mut().zip(&t.powers[e]) {
                    if !p.is_zero() {
                        *o += &c * p;
                    }
                }
            }
        }
        Self::from_coeffs(t, out)
    }

    /// Image under the field automorphism ζ ↦ ζ^t.
    pub fn galois(&self, t: i64) -> Self {
        let tb = &self.tables;
        let mut out = vec![Rational::zero(); tb.degree];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let p = &tb.powers[tb.power_index(t * j as i64)];
            for (o, pc) in out.iter_mut().zip(p) {
                if !pc.is_zero() {
                    *o += a * pc;
                }
            }
        }
        Self::from_coeffs(tb, out)
    }

    /// Complex conjugation, ζ ↦ ζ^{k-1}.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplication by ζ^e.
    pub fn mul_root(&self, e: i64) -> Self {
        if e.rem_euclid(self.tables.order as i64) == 0 {
            return self.clone();
        }
        self.mul_ref(&self.root_like(e))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a * r).collect();
        Self::from_coeffs(&self.tables, coeffs)
    }

    /// Field norm down to Q: the product of all Galois conjugates.
    pub fn norm(&self) -> Rational {
        let n = self.mul_ref(&self.cofactor());
        n.as_rational().expect("field norm is rational")
    }

    /// Product of the non-identity Galois conjugates.
    fn cofactor(&self) -> Self {
        self.tables
            .units
            .iter()
            .filter(|&&t| t != 1)
            .fold(self.one_like(), |acc, &t| {
                acc.mul_ref(&self.galois(t as i64))
            })
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let cof = self.cofactor();
        let norm = self
            .mul_ref(&cof)
            .as_rational()
            .expect("field norm is rational");
        Ok(cof.scale(&norm.recip()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    /// Complex value under ζ ↦ e^{2πi/k}.
    pub fn to_complex(&self) -> Complex64 {
        let k = self.tables.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / k;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), theta)
            })
            .sum()
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.tables.order == other.tables.order && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}·ζ^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " (k={})", self.tables.order)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                self.$inner(rhs)
            }
        }
        impl $tr<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                self.$inner(&rhs)
            }
        }
        impl $tr<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        CyclotomicNumber::from_coeffs(&self.tables, coeffs)
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[Rational]) -> Vec<i64> {
        v.iter().map(|r| r.to_integer().to_i64().unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degree_is_totient() {
        let phi = |k: u32| (1..=k).filter(|t| t.gcd(&k) == 1).count();
        for k in 1..=30 {
            assert_eq!(cyclotomic_polynomial(k).len() - 1, phi(k), "k={k}");
        }
    }

    #[test]
    fn roots_sum_to_zero() {
        for k in 2..=16 {
            let t = Arc::new(Tables::new(k));
            let s = (0..k as i64)
                .map(|j| CyclotomicNumber::root_in(&t, j))
                .fold(CyclotomicNumber::zero_in(&t), |a, b| a + b);
            assert!(s.is_zero(), "k={k}");
        }
    }

    #[test]
    fn conjugate_and_inverse_of_zeta() {
        for k in 2..=12 {
            let t = Arc::new(Tables::new(k));
            let z = CyclotomicNumber::root_in(&t, 1);
            let zk1 = CyclotomicNumber::root_in(&t, k as i64 - 1);
            assert_eq!(z.conjugate(), zk1);
            assert_eq!(z.inverse().unwrap(), zk1);
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        let t = Arc::new(Tables::new(5));
        assert_eq!(
            CyclotomicNumber::zero_in(&t).inverse(),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn generic_inverse() {
        let t = Arc::new(Tables::new(7));
        let x = CyclotomicNumber::from_coeffs(
            &t,
            vec![rat(3), rat(-1), rat(0), rat(2), rat(1), rat(5)],
        );
        assert!((&x * &x.inverse().unwrap()).is_one());
    }

    #[test]
    fn to_complex_of_zeta() {
        let t = Arc::new(Tables::new(3));
        let z = CyclotomicNumber::root_in(&t, 1).to_complex();
        assert!((z.re + 0.5).abs() < 1e-12);
        assert!((z.im - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn scaled_root_detection() {
        let t3 = Arc::new(Tables::new(3));
        let x = CyclotomicNumber::root_in(&t3, 2).scale(&rat(-2));
        assert_eq!(x.as_scaled_root(), Some((rat(-2), 2)));
        let t4 = Arc::new(Tables::new(4));
        let y = -CyclotomicNumber::root_in(&t4, 1);
        assert_eq!(y.as_scaled_root(), Some((rat(1), 3)));
        let z = CyclotomicNumber::root_in(&t3, 1) + CyclotomicNumber::rational_in(&t3, rat(2));
        assert_eq!(z.as_scaled_root(), None);
    }
}
