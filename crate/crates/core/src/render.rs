//! Text and LaTeX output for scalars, polynomials, representatives and matrices.
//!
//! Text output uses the expression syntax, so single-mode results can be fed
//! back to the parser.

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::berezin::WeightFunction;
use crate::grassmann::{GrassmannMonomial, GrassmannPolynomial};
use crate::matrix::SquareMatrix;
use crate::oscillator::{MixedPolynomial, OscMonomial};
use crate::representatives::RepPolynomial;
use crate::scalars::{CyclotomicNumber, RadicalScalar, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Latex,
}

fn rational(r: &Rational, format: Format) -> String {
    match format {
        Format::Latex if !r.is_integer() => {
            format!(r"\frac{{{}}}{{{}}}", r.numer(), r.denom())
        }
        _ => r.to_string(),
    }
}

fn q_power(j: i64, format: Format) -> String {
    match (j, format) {
        (1, _) => "q".into(),
        (_, Format::Text) => format!("q^{j}"),
        (_, Format::Latex) => format!("q^{{{j}}}"),
    }
}

fn join_factors(parts: Vec<String>) -> String {
    parts
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Signed sum of terms `(negative, magnitude)`.
fn signed_sum(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

/// `Σ c_j q^j` over the power basis.
fn cyclotomic_expansion(c: &CyclotomicNumber, format: Format) -> String {
    let terms = c
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(j, a)| {
            let mag = a.abs();
            let body = match (j, mag.is_one()) {
                (0, _) => rational(&mag, format),
                (_, true) => q_power(j as i64, format),
                (_, false) => join_factors(vec![rational(&mag, format), q_power(j as i64, format)]),
            };
            (a.is_negative(), body)
        })
        .collect();
    signed_sum(terms)
}

fn radical_factors(r: &RadicalScalar, format: Format) -> Vec<String> {
    r.radical_indices()
        .into_iter()
        .map(|n| match format {
            Format::Text => format!("rad({n})"),
            Format::Latex => format!(r"\sqrt{{[{n}]_q}}"),
        })
        .collect()
}

/// Sign and magnitude factors of a coefficient; empty magnitude means 1.
fn coefficient_parts(c: &RadicalScalar, format: Format) -> (bool, Vec<String>) {
    let mut parts = Vec::new();
    let mut negative = false;
    match c.body().as_scaled_root() {
        Some((r, j)) => {
            negative = r.is_negative();
            let mag = r.abs();
            if !mag.is_one() {
                parts.push(rational(&mag, format));
            }
            if j != 0 {
                parts.push(q_power(j as i64, format));
            }
        }
        None => {
            let inner = cyclotomic_expansion(c.body(), format);
            parts.push(match format {
                Format::Text => format!("({inner})"),
                Format::Latex => format!(r"\left({inner}\right)"),
            });
        }
    }
    parts.extend(radical_factors(c, format));
    (negative, parts)
}

fn term(c: &RadicalScalar, monomial: Vec<String>, format: Format) -> (bool, String) {
    let (neg, mut parts) = coefficient_parts(c, format);
    parts.extend(monomial);
    let body = join_factors(parts);
    (neg, if body.is_empty() { "1".into() } else { body })
}

pub fn scalar(c: &RadicalScalar, format: Format) -> String {
    if c.is_zero() {
        return "0".into();
    }
    signed_sum(vec![term(c, vec![], format)])
}

pub fn cyclotomic(c: &CyclotomicNumber, format: Format) -> String {
    scalar(&RadicalScalar::from_body(c.clone()), format)
}

fn power(base: &str, e: u32, format: Format) -> String {
    match (e, format) {
        (1, _) => base.to_string(),
        (_, Format::Text) => format!("{base}^{e}"),
        (_, Format::Latex) if base.contains('^') => format!("{{{base}}}^{{{e}}}"),
        (_, Format::Latex) => format!("{base}^{{{e}}}"),
    }
}

fn variable(
    name_text: &str,
    name_latex: &str,
    mode: usize,
    modes: usize,
    format: Format,
) -> String {
    match (format, modes) {
        (Format::Text, 1) => name_text.to_string(),
        (Format::Text, _) => format!("{name_text}_{mode}"),
        (Format::Latex, 1) => name_latex.to_string(),
        (Format::Latex, _) => format!("{name_latex}_{{{mode}}}"),
    }
}

fn grassmann_factors(m: &GrassmannMonomial, format: Format) -> Vec<String> {
    let modes = m.modes();
    let mut out = Vec::new();
    for (i, &e) in m.xi_exponents().iter().enumerate() {
        if e > 0 {
            out.push(power(
                &variable("xi", r"\xi", i + 1, modes, format),
                e as u32,
                format,
            ));
        }
    }
    for (i, &e) in m.xibar_exponents().iter().enumerate() {
        if e > 0 {
            out.push(power(
                &variable("xibar", r"\bar\xi", i + 1, modes, format),
                e as u32,
                format,
            ));
        }
    }
    out
}

fn oscillator_factors(o: &OscMonomial, format: Format) -> Vec<String> {
    let mut out = Vec::new();
    let ad = match format {
        Format::Text => "ad",
        Format::Latex => r"a^{\dagger}",
    };
    if o.raise > 0 {
        out.push(power(ad, o.raise, format));
    }
    if o.qn > 0 {
        out.push(match (o.qn, format) {
            (1, Format::Text) => "qN".into(),
            (s, Format::Text) => format!("qN^{s}"),
            (1, Format::Latex) => "q^{N}".into(),
            (s, Format::Latex) => format!("q^{{{s}N}}"),
        });
    }
    if o.lower > 0 {
        out.push(power("a", o.lower, format));
    }
    out
}

pub fn grassmann(p: &GrassmannPolynomial, format: Format) -> String {
    signed_sum(
        p.terms()
            .map(|(m, c)| term(c, grassmann_factors(m, format), format))
            .collect(),
    )
}

pub fn mixed(p: &MixedPolynomial, format: Format) -> String {
    signed_sum(
        p.terms()
            .map(|(g, o, c)| {
                let mut f = grassmann_factors(g, format);
                f.extend(oscillator_factors(o, format));
                term(c, f, format)
            })
            .collect(),
    )
}

pub fn representative(p: &RepPolynomial, format: Format) -> String {
    signed_sum(
        p.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| {
                let mono = GrassmannMonomial::single(0, m as u8);
                term(c, grassmann_factors(&mono, format), format)
            })
            .collect(),
    )
}

pub fn weight(w: &WeightFunction, format: Format) -> String {
    signed_sum(
        w.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| {
                let mono = GrassmannMonomial::single(n as u8, n as u8);
                term(c, grassmann_factors(&mono, format), format)
            })
            .collect(),
    )
}

pub fn matrix(m: &SquareMatrix, format: Format) -> String {
    let rows: Vec<Vec<String>> = (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| scalar(m.get(i, j), format)).collect())
        .collect();
    match format {
        Format::Text => rows
            .iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => format!(
            "\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}",
            rows.iter()
                .map(|r| r.join(" & "))
                .collect::<Vec<_>>()
                .join(" \\\\\n")
        ),
    }
}

/// `a+bi` with values below 1e-12 in magnitude dropped.
pub fn complex(z: Complex64) -> String {
    let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    match (re == 0.0, im == 0.0) {
        (_, true) => format!("{re}"),
        (true, false) => format!("{im}i"),
        (false, false) if im < 0.0 => format!("{re}-{}i", -im),
        (false, false) => format!("{re}+{im}i"),
    }
}

/// Numeric coefficients in front of Grassmann and oscillator factors.
pub fn mixed_numeric(p: &MixedPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms()
        .map(|(g, o, c)| {
            let mut f = grassmann_factors(g, Format::Text);
            f.extend(oscillator_factors(o, Format::Text));
            let z = complex(c.numeric_value());
            if f.is_empty() {
                z
            } else {
                format!("({z}) {}", f.join(" "))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn grassmann_numeric(p: &GrassmannPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms()
        .map(|(m, c)| {
            let f = grassmann_factors(m, Format::Text);
            let z = complex(c.numeric_value());
            if f.is_empty() {
                z
            } else {
                format!("({z}) {}", f.join(" "))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berezin::weight_omega;
    use crate::scalars::{inv_sqrt_q_factorial, QContext};

    #[test]
    fn omega_at_k3() {
        let ctx = QContext::new(3).unwrap();
        let w = weight_omega(&ctx).unwrap();
        assert_eq!(weight(&w, Format::Text), "-1 + q^2 xi xibar + xi^2 xibar^2");
        assert_eq!(
            grassmann(&w.polynomial(&ctx), Format::Latex),
            r"-1 + q^{2} \xi \bar\xi + \xi^{2} \bar\xi^{2}"
        );
    }

    #[test]
    fn scalars() {
        let ctx = QContext::new(5).unwrap();
        assert_eq!(scalar(&RadicalScalar::zero(&ctx), Format::Text), "0");
        assert_eq!(scalar(&RadicalScalar::root(&ctx, 1), Format::Text), "q");
        assert_eq!(
            scalar(&RadicalScalar::root(&ctx, 3).neg(), Format::Text),
            "-q^3"
        );
        let c = RadicalScalar::from_body(
            ctx.one() + ctx.root(1).scale(&Rational::from_integer(2.into())),
        );
        assert_eq!(scalar(&c, Format::Text), "(1 + 2 q)");
        let ctx3 = QContext::new(3).unwrap();
        let r = inv_sqrt_q_factorial(&ctx3, 2).unwrap().mul_root(-1);
        assert_eq!(scalar(&r, Format::Text), "-q^2 rad(2)");
        assert_eq!(complex(Complex64::new(0.5, -0.25)), "0.5-0.25i");
        assert_eq!(complex(Complex64::new(1.0, 1e-15)), "1");
    }
}
