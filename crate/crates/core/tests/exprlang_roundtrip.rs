use kfermion::expr::{parse, print, Atom, Expr, Sign, MAX_EXPONENT};
use kfermion::render::Format;
use kfermion::Rational;
use proptest::prelude::*;

fn atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        Just(Atom::A),
        Just(Atom::Ad),
        Just(Atom::Xi),
        Just(Atom::Xibar),
        Just(Atom::Dxi),
        Just(Atom::Dxibar),
        (-40i64..40).prop_map(Atom::QPow),
        (-6i64..6).prop_map(Atom::QN),
        (0u32..13).prop_map(Atom::Bracket),
        (0u32..13).prop_map(Atom::Rad),
        (0i64..50, 1i64..9).prop_map(|(n, d)| Atom::Rational(Rational::new(n.into(), d.into()))),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    atom()
        .prop_map(Expr::Atom)
        .prop_recursive(4, 24, 4, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 2..4).prop_map(Expr::Product),
                prop::collection::vec((prop::bool::ANY, inner.clone()), 1..4).prop_map(|ts| {
                    Expr::Sum(
                        ts.into_iter()
                            .map(|(neg, t)| (if neg { Sign::Minus } else { Sign::Plus }, t))
                            .collect(),
                    )
                }),
                (inner, -4i64..9).prop_map(|(b, e)| {
                    let e = if e < 0 && !b.invertible_form() { -e } else { e };
                    Expr::Power(Box::new(b), if e == 0 { 2 } else { e })
                }),
            ]
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        let e = e.normalize();
        let text = print(&e, Format::Text);
        let back = parse(&text);
        prop_assert!(back.is_ok(), "{text}: {:?}", back.err());
        prop_assert_eq!(back.unwrap(), e, "{}", text);
    }

    #[test]
    fn latex_output_is_balanced(e in expr()) {
        let text = print(&e.normalize(), Format::Latex);
        let opens = text.matches('{').count();
        prop_assert_eq!(opens, text.matches('}').count(), "{}", text);
    }
}

#[test]
fn exponent_overflow_is_reported() {
    let src = format!("xi^{}", MAX_EXPONENT + 1);
    let err = parse(&src).unwrap_err();
    assert_eq!(err.position(), (1, 4));
}

#[test]
fn errors_carry_positions() {
    let err = parse("xi +\n  )").unwrap_err();
    assert_eq!(err.position(), (2, 3));
    assert!(parse("xi^-1").is_err());
    assert!(parse("(a ad)^-2").is_err());
}
