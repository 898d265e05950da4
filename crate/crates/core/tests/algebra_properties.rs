use kfermion::grassmann::{GrassmannMonomial, GrassmannPolynomial};
use kfermion::scalars::{q_number, verify_box_identities, CyclotomicNumber};
use kfermion::{QContext, RadicalScalar, Rational};
use num_complex::Complex64;
use proptest::prelude::*;

fn cyclotomic(ctx: &QContext, coeffs: &[i64]) -> CyclotomicNumber {
    coeffs.iter().enumerate().fold(ctx.zero(), |acc, (j, &c)| {
        acc + ctx.root(j as i64).scale(&Rational::from_integer(c.into()))
    })
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() < 1e-9 * (1.0 + a.norm().max(b.norm()))
}

fn k_and_coeffs(n: usize) -> impl Strategy<Value = (u32, Vec<Vec<i64>>)> {
    (2u32..=12).prop_flat_map(move |k| {
        (
            Just(k),
            prop::collection::vec(prop::collection::vec(-6i64..=6, k as usize), n),
        )
    })
}

/// One-mode polynomial with cyclotomic coefficients and all exponents below k.
fn grassmann(ctx: &QContext, coeffs: &[i64]) -> GrassmannPolynomial {
    let k = ctx.k() as usize;
    let mut p = GrassmannPolynomial::zero(ctx, 1);
    for (idx, &c) in coeffs.iter().enumerate() {
        let (i, j) = (idx / k, idx % k);
        let c = RadicalScalar::from_body(
            ctx.root(idx as i64)
                .scale(&Rational::from_integer(c.into())),
        );
        let m = GrassmannPolynomial::single(ctx, i as u32, j as u32, c);
        p = p.add(&m).unwrap();
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_laws((k, v) in k_and_coeffs(3)) {
        let ctx = QContext::new(k).unwrap();
        let (x, y, z) = (cyclotomic(&ctx, &v[0]), cyclotomic(&ctx, &v[1]), cyclotomic(&ctx, &v[2]));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn numeric_value_is_a_ring_homomorphism((k, v) in k_and_coeffs(2)) {
        let ctx = QContext::new(k).unwrap();
        let (x, y) = (cyclotomic(&ctx, &v[0]), cyclotomic(&ctx, &v[1]));
        prop_assert!(close((&x * &y).to_complex(), x.to_complex() * y.to_complex()));
        prop_assert!(close((&x + &y).to_complex(), x.to_complex() + y.to_complex()));
        prop_assert!(close(x.conjugate().to_complex(), x.to_complex().conj()));
        prop_assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn radical_scalars((k, v) in k_and_coeffs(2), n in 1u32..12, m in 1u32..12) {
        let ctx = QContext::new(k).unwrap();
        let (n, m) = (n.min(k - 1), m.min(k - 1));
        let x = RadicalScalar::from_body(cyclotomic(&ctx, &v[0])).mul(&RadicalScalar::radical(&ctx, n));
        let y = RadicalScalar::from_body(cyclotomic(&ctx, &v[1])).mul(&RadicalScalar::radical(&ctx, m));
        prop_assert_eq!(x.dagger().dagger(), x.clone());
        prop_assert!(close(x.mul(&y).numeric_value(), x.numeric_value() * y.numeric_value()));
        let r = RadicalScalar::radical(&ctx, n);
        prop_assert_eq!(r.mul(&r), RadicalScalar::from_body(q_number(&ctx, n)));
    }

    #[test]
    fn grassmann_product_is_associative((k, v) in (2u32..=5).prop_flat_map(|k| {
        (Just(k), prop::collection::vec(prop::collection::vec(-3i64..=3, (k * k) as usize), 3))
    })) {
        let ctx = QContext::new(k).unwrap();
        let (a, b, c) = (grassmann(&ctx, &v[0]), grassmann(&ctx, &v[1]), grassmann(&ctx, &v[2]));
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(a.dagger().dagger(), a.clone());
        let sum = a.add(&b).unwrap().multiply(&c).unwrap();
        prop_assert_eq!(sum, a.multiply(&c).unwrap().add(&b.multiply(&c).unwrap()).unwrap());
    }
}

#[test]
fn nilpotency_and_reflection() {
    for k in 2..=12u32 {
        let ctx = QContext::new(k).unwrap();
        let xi = GrassmannPolynomial::single(&ctx, 1, 0, RadicalScalar::one(&ctx));
        let xibar = GrassmannPolynomial::single(&ctx, 0, 1, RadicalScalar::one(&ctx));
        assert!(xi.pow(k).unwrap().is_zero());
        assert!(xibar.pow(k).unwrap().is_zero());
        assert!(!xi.pow(k - 1).unwrap().is_zero());
        let top = xi
            .pow(k - 1)
            .unwrap()
            .multiply(&xibar.pow(k - 1).unwrap())
            .unwrap();
        assert!(top
            .coefficient(&GrassmannMonomial::single(k as u8 - 1, k as u8 - 1))
            .is_one());
        if k > 2 {
            for n in 1..k {
                assert_eq!(q_number(&ctx, k - n), -q_number(&ctx, n), "k={k} n={n}");
            }
        }
        for n in 0..k {
            assert!(verify_box_identities(&ctx, n).unwrap(), "k={k} n={n}");
        }
    }
}
