//! Dense k×k matrices with exact scalar entries.

use std::fmt;

use crate::error::Result;
use crate::scalars::{CyclotomicNumber, QContext, RadicalScalar};

#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<RadicalScalar>,
}

impl SquareMatrix {
    pub fn zero(ctx: &QContext, dim: usize) -> Self {
        SquareMatrix {
            dim,
            entries: vec![RadicalScalar::zero(ctx); dim * dim],
        }
    }

    pub fn identity(ctx: &QContext, dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| RadicalScalar::one(ctx)).collect())
    }

    pub fn diagonal(diag: Vec<RadicalScalar>) -> Self {
        let dim = diag.len();
        assert!(dim > 0, "empty diagonal");
        let zero = diag[0].zero_like();
        let mut entries = vec![zero; dim * dim];
        for (i, d) in diag.into_iter().enumerate() {
            entries[i * dim + i] = d;
        }
        SquareMatrix { dim, entries }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> RadicalScalar) -> Self {
        let entries = (0..dim * dim).map(|ix| f(ix / dim, ix % dim)).collect();
        SquareMatrix { dim, entries }
    }

    pub fn try_from_fn(
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Result<RadicalScalar>,
    ) -> Result<Self> {
        let entries = (0..dim * dim)
            .map(|ix| f(ix / dim, ix % dim))
            .collect::<Result<Vec<_>>>()?;
        Ok(SquareMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &RadicalScalar {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: RadicalScalar) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RadicalScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Entrywise sums must stay within one radical class.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        Self::try_from_fn(n, |i, j| {
            let mut acc = self.get(i, j).zero_like();
            for l in 0..n {
                let a = self.get(i, l);
                let b = other.get(l, j);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.checked_add(&a.mul(b))?;
            }
            Ok(acc)
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.dim, other.dim);
        Self::try_from_fn(self.dim, |i, j| self.get(i, j).checked_add(other.get(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.dim, other.dim);
        Self::try_from_fn(self.dim, |i, j| self.get(i, j).checked_sub(other.get(i, j)))
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    pub fn scale_body(&self, c: &CyclotomicNumber) -> Self {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.mul_body(c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let ctx_one = self.entries[0].one_like();
        let mut acc = Self::diagonal(vec![ctx_one; self.dim]);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `self·other - other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[RadicalScalar]) -> Result<Vec<RadicalScalar>> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                let mut acc = v[0].zero_like();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if a.is_zero() || x.is_zero() {
                        continue;
                    }
                    acc = acc.checked_add(&a.mul(x))?;
                }
                Ok(acc)
            })
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RadicalScalar)> {
        self.entries
            .iter()
            .enumerate()
            .map(move |(ix, e)| (ix / self.dim, ix % self.dim, e))
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SquareMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| format!("{:?}", self.get(i, j)))
                .collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let ctx = QContext::new(5).unwrap();
        let m = SquareMatrix::from_fn(5, |i, j| RadicalScalar::root(&ctx, (i * j) as i64));
        let id = SquareMatrix::identity(&ctx, 5);
        assert_eq!(m.mul(&id).unwrap(), m);
        assert_eq!(id.mul(&m).unwrap(), m);
        assert!(id.is_identity());
        assert!(m.sub(&m).unwrap().is_zero());
    }
}
