use super::{Atom, Expr, Sign};
use crate::render::Format;

fn atom_text(a: &Atom) -> String {
    match a {
        Atom::A => "a".into(),
        Atom::Ad => "ad".into(),
        Atom::Xi => "xi".into(),
        Atom::Xibar => "xibar".into(),
        Atom::Dxi => "dxi".into(),
        Atom::Dxibar => "dxibar".into(),
        Atom::QPow(1) => "q".into(),
        Atom::QPow(m) => format!("q^{m}"),
        Atom::QN(1) => "qN".into(),
        Atom::QN(s) => format!("qN^{s}"),
        Atom::Bracket(n) => format!("br({n})"),
        Atom::Rad(n) => format!("rad({n})"),
        Atom::Rational(r) => r.to_string(),
    }
}

fn atom_latex(a: &Atom) -> String {
    match a {
        Atom::A => "a".into(),
        Atom::Ad => r"a^{\dagger}".into(),
        Atom::Xi => r"\xi".into(),
        Atom::Xibar => r"\bar\xi".into(),
        Atom::Dxi => r"d\xi".into(),
        Atom::Dxibar => r"d\bar\xi".into(),
        Atom::QPow(1) => "q".into(),
        Atom::QPow(m) => format!("q^{{{m}}}"),
        Atom::QN(1) => "q^{N}".into(),
        Atom::QN(s) => format!("q^{{{s}N}}"),
        Atom::Bracket(n) => format!("[{n}]_q"),
        Atom::Rad(n) => format!(r"\sqrt{{[{n}]_q}}"),
        Atom::Rational(r) if r.is_integer() => r.to_string(),
        Atom::Rational(r) => format!(r"\frac{{{}}}{{{}}}", r.numer(), r.denom()),
    }
}

/// Bases printed bare in front of `^`.
fn bare_base(e: &Expr) -> bool {
    match e {
        Expr::Atom(Atom::Rational(r)) => r.is_integer(),
        Expr::Atom(Atom::QPow(_) | Atom::QN(_)) => false,
        Expr::Atom(_) => true,
        _ => false,
    }
}

fn wrap(s: String, format: Format) -> String {
    match format {
        Format::Text => format!("({s})"),
        Format::Latex => format!(r"\left({s}\right)"),
    }
}

fn render(e: &Expr, format: Format) -> String {
    match e {
        Expr::Atom(a) => match format {
            Format::Text => atom_text(a),
            Format::Latex => atom_latex(a),
        },
        Expr::Power(b, n) => {
            let base = render(b, format);
            let base = if bare_base(b) && !matches!(**b, Expr::Atom(Atom::Ad)) {
                base
            } else if bare_base(b) {
                match format {
                    Format::Text => base,
                    Format::Latex => format!("{{{base}}}"),
                }
            } else {
                wrap(base, format)
            };
            match format {
                Format::Text => format!("{base}^{n}"),
                Format::Latex => format!("{base}^{{{n}}}"),
            }
        }
        Expr::Product(fs) => fs
            .iter()
            .map(|f| match f {
                Expr::Sum(_) => wrap(render(f, format), format),
                _ => render(f, format),
            })
            .collect::<Vec<_>>()
            .join(" "),
        Expr::Sum(ts) => {
            let mut out = String::new();
            for (i, (s, t)) in ts.iter().enumerate() {
                let body = match t {
                    Expr::Sum(_) => wrap(render(t, format), format),
                    _ => render(t, format),
                };
                match (i, s) {
                    (0, Sign::Plus) => {}
                    (0, Sign::Minus) => out.push('-'),
                    (_, Sign::Plus) => out.push_str(" + "),
                    (_, Sign::Minus) => out.push_str(" - "),
                }
                out.push_str(&body);
            }
            out
        }
    }
}

/// Text output re-parses to the normalized tree.
pub fn print(e: &Expr, format: Format) -> String {
    render(e, format)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn examples() {
        let e = Expr::Product(vec![Expr::Atom(Atom::Ad), Expr::Atom(Atom::Xi)]);
        assert_eq!(print(&e, Format::Text), "ad xi");
        let e = Expr::Power(Box::new(Expr::Atom(Atom::Xibar)), 2);
        assert_eq!(print(&e, Format::Latex), r"\bar\xi^{2}");
        let e = Expr::Power(Box::new(Expr::Atom(Atom::Ad)), 3);
        assert_eq!(print(&e, Format::Latex), r"{a^{\dagger}}^{3}");
    }

    #[test]
    fn reparse_samples() {
        for src in [
            "-1 + q^2 xi xibar + xi^2 xibar^2",
            "(xi + a)^2 ad",
            "(q)^3 (q^2)^-1 rad(2)^-1",
            "-(xi - ad) a",
            "1/2 3 br(4) qN^-2",
            "(1/2)^2",
        ] {
            let e = parse(src).unwrap();
            assert_eq!(parse(&print(&e, Format::Text)).unwrap(), e, "{src}");
        }
    }
}
