//! Floating-point recomputation of the exact results, written against `f64`
//! complex numbers only. Nothing here calls into the exact layers.

use std::f64::consts::PI;

use num_complex::Complex64 as C;

pub const TOLERANCE: f64 = 1e-10;

pub type CMatrix = Vec<Vec<C>>;

pub fn q(k: u32) -> C {
    C::from_polar(1.0, 2.0 * PI / k as f64)
}

pub fn q_pow(k: u32, e: i64) -> C {
    C::from_polar(1.0, 2.0 * PI * e.rem_euclid(k as i64) as f64 / k as f64)
}

/// `[n]_q = sin(2πn/k) / sin(2π/k)`; at k = 2 the limit `(-1)^{n-1} n`.
pub fn q_number(k: u32, n: u32) -> f64 {
    if k == 2 {
        let s = if n % 2 == 1 { 1.0 } else { -1.0 };
        return s * n as f64;
    }
    let t = 2.0 * PI / k as f64;
    let v = (t * n as f64).sin() / t.sin();
    if v.abs() < 1e-13 {
        0.0
    } else {
        v
    }
}

pub fn q_factorial(k: u32, n: u32) -> f64 {
    (1..=n).map(|j| q_number(k, j)).product()
}

/// `Π_{j<=n} sqrt([j]_q)` with complex principal roots.
pub fn sqrt_q_factorial(k: u32, n: u32) -> C {
    (1..=n)
        .map(|j| C::new(q_number(k, j), 0.0).sqrt())
        .product()
}

pub fn zeros(d: usize) -> CMatrix {
    vec![vec![C::new(0.0, 0.0); d]; d]
}

pub fn identity(d: usize) -> CMatrix {
    let mut m = zeros(d);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = C::new(1.0, 0.0);
    }
    m
}

pub fn matmul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let d = a.len();
    let mut out = zeros(d);
    for i in 0..d {
        for j in 0..d {
            out[i][j] = (0..d).map(|l| a[i][l] * b[l][j]).sum();
        }
    }
    out
}

pub fn lincomb(a: &CMatrix, alpha: C, b: &CMatrix, beta: C) -> CMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| {
            ra.iter()
                .zip(rb)
                .map(|(x, y)| alpha * x + beta * y)
                .collect()
        })
        .collect()
}

pub struct FockF {
    pub a: CMatrix,
    pub ad: CMatrix,
    pub number: CMatrix,
    pub q_n: CMatrix,
    pub q_neg_n: CMatrix,
}

pub fn fock(k: u32) -> FockF {
    let d = k as usize;
    let mut a = zeros(d);
    let mut ad = zeros(d);
    let mut number = zeros(d);
    let mut q_n = zeros(d);
    let mut q_neg_n = zeros(d);
    for n in 0..d {
        if n + 1 < d {
            let r = C::new(q_number(k, n as u32 + 1), 0.0).sqrt();
            a[n][n + 1] = r;
            ad[n + 1][n] = r;
        }
        number[n][n] = C::new(n as f64, 0.0);
        q_n[n][n] = q_pow(k, n as i64);
        q_neg_n[n][n] = q_pow(k, -(n as i64));
    }
    FockF {
        a,
        ad,
        number,
        q_n,
        q_neg_n,
    }
}

/// `a a⁺ - c a⁺ a`.
pub fn bm_lhs(k: u32, c: C) -> CMatrix {
    let f = fock(k);
    lincomb(
        &matmul(&f.a, &f.ad),
        C::new(1.0, 0.0),
        &matmul(&f.ad, &f.a),
        -c,
    )
}

/// One-mode Grassmann element, `c[i][j]` the coefficient of `ξ^i ξ̄^j`.
#[derive(Clone, Debug)]
pub struct GrassF {
    pub k: u32,
    pub c: CMatrix,
}

impl GrassF {
    pub fn zero(k: u32) -> Self {
        GrassF {
            k,
            c: zeros(k as usize),
        }
    }

    pub fn term(k: u32, i: usize, j: usize, v: C) -> Self {
        let mut g = Self::zero(k);
        g.c[i][j] = v;
        g
    }

    pub fn add(&self, o: &Self) -> Self {
        GrassF {
            k: self.k,
            c: lincomb(&self.c, C::new(1.0, 0.0), &o.c, C::new(1.0, 0.0)),
        }
    }

    /// `ξ^a ξ̄^b · ξ^c ξ̄^d = q^{bc} ξ^{a+c} ξ̄^{b+d}` from `ξ̄ ξ = q ξ ξ̄`.
    pub fn mul(&self, o: &Self) -> Self {
        let k = self.k as usize;
        let mut out = Self::zero(self.k);
        for a in 0..k {
            for b in 0..k {
                if self.c[a][b] == C::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..k - a {
                    for d in 0..k - b {
                        let v = o.c[c][d];
                        if v == C::new(0.0, 0.0) {
                            continue;
                        }
                        out.c[a + c][b + d] += self.c[a][b] * v * q_pow(self.k, (b * c) as i64);
                    }
                }
            }
        }
        out
    }

    /// `∫∫dξ̄dξ` applied to `prefix · block · self`, with the prefix carried
    /// across the block one letter at a time.
    pub fn integrate_after(&self, prefix: &GrassF) -> C {
        let k = self.k as usize;
        let mut moved = GrassF::zero(self.k);
        for i in 0..k {
            for j in 0..k {
                // ξ dξ̄ = q dξ̄ ξ, ξ dξ = q̄ dξ ξ, ξ̄ dξ = q dξ ξ̄, ξ̄ dξ̄ = q̄ dξ̄ ξ̄
                let across_dxibar = i as i64 - j as i64;
                let across_dxi = -(i as i64) + j as i64;
                moved.c[i][j] = prefix.c[i][j] * q_pow(self.k, across_dxibar + across_dxi);
            }
        }
        moved.mul(self).c[k - 1][k - 1]
    }
}

/// `(ξ̄ ξ)^n` by repeated multiplication.
pub fn xibar_xi_power(k: u32, n: u32) -> GrassF {
    let xbx = GrassF::term(k, 0, 1, C::new(1.0, 0.0)).mul(&GrassF::term(k, 1, 0, C::new(1.0, 0.0)));
    let mut acc = GrassF::term(k, 0, 0, C::new(1.0, 0.0));
    for _ in 0..n {
        acc = acc.mul(&xbx);
    }
    acc
}

/// Phase of `(a⁺ξ)^n = φ ξ^n (a⁺)^n`, counting each `a⁺ ξ → q̄ ξ a⁺` swap.
pub fn ad_xi_phase(k: u32, n: u32) -> C {
    let mut word: Vec<bool> = (0..n).flat_map(|_| [false, true]).collect(); // true = ξ
    let mut phase = C::new(1.0, 0.0);
    let qbar = q_pow(k, -1);
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..word.len().saturating_sub(1) {
            if !word[i] && word[i + 1] {
                word.swap(i, i + 1);
                phase *= qbar;
                changed = true;
            }
        }
    }
    phase
}

/// Coefficient of `ξ^n |n⟩` in `Σ (a⁺ξ)^n/[n]! |0⟩`.
pub fn coherent_ket(k: u32) -> Vec<C> {
    coherent(k, false)
}

/// Coefficient of `⟨n| ξ̄^n` in the bra: the phase is conjugated, the
/// square roots `sqrt([j]_q)` are kept as they are.
pub fn coherent_bra(k: u32) -> Vec<C> {
    coherent(k, true)
}

fn coherent(k: u32, bra: bool) -> Vec<C> {
    let f = fock(k);
    let d = k as usize;
    (0..k)
        .map(|n| {
            let mut v = vec![C::new(0.0, 0.0); d];
            v[0] = C::new(1.0, 0.0);
            for _ in 0..n {
                v = (0..d)
                    .map(|i| (0..d).map(|j| f.ad[i][j] * v[j]).sum())
                    .collect();
            }
            let phase = ad_xi_phase(k, n);
            let phase = if bra { phase.conj() } else { phase };
            phase * v[n as usize] / q_factorial(k, n)
        })
        .collect()
}

/// `max_n |coef of ξ^n|n-1⟩ in a|ξ⟩ - coef in ξ|ξ⟩|`.
pub fn eigen_residual(k: u32) -> f64 {
    let ket = coherent_ket(k);
    (1..k as usize)
        .map(|n| {
            let lhs = q_pow(k, n as i64) * C::new(q_number(k, n as u32), 0.0).sqrt() * ket[n];
            (lhs - ket[n - 1]).norm()
        })
        .fold(0.0, f64::max)
}

/// Coefficient of `ξ_1^n ξ̄_2^n` in `⟨ξ_2|ξ_1⟩ = Σ ξ̄_2^n ξ_1^n / [n]!`.
pub fn overlap_coefficients(k: u32) -> Vec<C> {
    (0..k)
        .map(|n| {
            // each of the n² swaps ξ̄_2 ξ_1 → ξ_1 ξ̄_2 costs q^{-(k-1)} = q
            q_pow(k, (n * n) as i64) / q_factorial(k, n)
        })
        .collect()
}

/// `(c_n, c̃_n)`.
pub fn weights(k: u32) -> (Vec<C>, Vec<C>) {
    let c = (0..k)
        .map(|n| q_pow(k, (n * (n + 1)) as i64) * q_factorial(k, k - n - 1))
        .collect();
    let t = (0..k)
        .map(|n| C::new(q_factorial(k, k - n - 1), 0.0))
        .collect();
    (c, t)
}

/// Both resolutions of unity with floating-point Berezin integrals.
pub fn resolution(k: u32, form: u8) -> CMatrix {
    let d = k as usize;
    let ket = coherent_ket(k);
    let bra = coherent_bra(k);
    let (c, t) = weights(k);
    let mut w = GrassF::zero(k);
    for n in 0..d {
        let v = if form == 1 { c[n] } else { t[n] };
        w = w.add(&GrassF::term(k, n, n, v));
    }
    let mut out = zeros(d);
    for l in 0..d {
        for p in 0..d {
            let kl = GrassF::term(k, l, 0, ket[l]);
            let bp = GrassF::term(k, 0, p, bra[p]);
            out[l][p] = if form == 1 {
                w.mul(&kl)
                    .mul(&bp)
                    .integrate_after(&GrassF::term(k, 0, 0, C::new(1.0, 0.0)))
            } else {
                w.mul(&bp).integrate_after(&kl)
            };
        }
    }
    out
}

pub fn max_deviation(a: &[C], b: &[C]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn flatten(m: &CMatrix) -> Vec<C> {
    m.iter().flatten().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_q_numbers() {
        assert!((q_number(3, 2) + 1.0).abs() < 1e-14);
        assert_eq!(q_number(4, 2), 0.0);
        assert_eq!(q_number(2, 2), -2.0);
    }

    #[test]
    fn float_resolutions() {
        for k in [2u32, 3, 5, 7, 9] {
            for form in [1u8, 2] {
                let dev = max_deviation(
                    &flatten(&resolution(k, form)),
                    &flatten(&identity(k as usize)),
                );
                assert!(dev < TOLERANCE, "k={k} form={form} dev={dev}");
            }
            assert!(eigen_residual(k) < TOLERANCE);
        }
    }

    #[test]
    fn float_xibar_xi_lemma() {
        for k in [3u32, 5, 7] {
            for n in 1..k {
                let p = xibar_xi_power(k, n);
                let expect = q_pow(k, (n * (n + 1) / 2) as i64);
                assert!((p.c[n as usize][n as usize] - expect).norm() < TOLERANCE);
                let n64 = n as i64;
                assert!((ad_xi_phase(k, n) - q_pow(k, -(n64 * (n64 + 1) / 2))).norm() < TOLERANCE);
            }
        }
    }
}
