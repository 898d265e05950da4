use std::fmt;
use std::sync::Arc;

use super::cyclotomic::{CyclotomicNumber, Tables};
use crate::error::{AlgebraError, Result};

/// Largest k the radical bitmask can address.
pub const MAX_ORDER: u32 = 64;

/// The deformation parameter q = e^{2πi/k} together with its cached tables.
///
/// Cloning is cheap; every exact value built from a context shares its tables.
#[derive(Clone)]
pub struct QContext {
    pub(crate) tables: Arc<Tables>,
    degenerate: bool,
}

impl QContext {
    pub fn new(k: u32) -> Result<Self> {
        if !(2..=MAX_ORDER).contains(&k) {
            return Err(AlgebraError::InvalidArgument(format!(
                "k must lie in 2..={MAX_ORDER}, got {k}"
            )));
        }
        let tables = Arc::new(Tables::new(k));
        let degenerate =
            (1..k as usize).any(|n| tables.q_numbers[n].iter().all(num_traits::Zero::is_zero));
        Ok(QContext { tables, degenerate })
    }

    pub fn k(&self) -> u32 {
        self.tables.order
    }

    /// True iff `[n]_q = 0` for some `1 <= n <= k-1`, i.e. k even and k >= 4.
    pub fn degenerate(&self) -> bool {
        self.degenerate
    }

    /// Fails with a degenerate-parameter error naming the vanishing q-number.
    pub fn require_nondegenerate(&self, what: &str) -> Result<()> {
        if self.degenerate {
            let k = self.k();
            Err(AlgebraError::degenerate(
                k,
                format!(
                    "{what} needs 1/[n]_q! for n <= {}, but [k/2]_q = [{}]_q = 0",
                    k - 1,
                    k / 2
                ),
            ))
        } else {
            Ok(())
        }
    }

    /// ζ^e.
    pub fn root(&self, e: i64) -> CyclotomicNumber {
        CyclotomicNumber::root_in(&self.tables, e)
    }

    /// q̄ = q^{-1} = q^{k-1}.
    pub fn qbar(&self) -> CyclotomicNumber {
        self.root(-1)
    }

    pub fn zero(&self) -> CyclotomicNumber {
        CyclotomicNumber::zero_in(&self.tables)
    }

    pub fn one(&self) -> CyclotomicNumber {
        self.rational(1)
    }

    pub fn rational(&self, n: i64) -> CyclotomicNumber {
        CyclotomicNumber::rational_in(&self.tables, super::cyclotomic::rat(n))
    }

    pub fn from_rational(&self, r: super::Rational) -> CyclotomicNumber {
        CyclotomicNumber::rational_in(&self.tables, r)
    }
}

impl fmt::Debug for QContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QContext")
            .field("k", &self.k())
            .field("degenerate", &self.degenerate)
            .finish()
    }
}

impl PartialEq for QContext {
    fn eq(&self, other: &Self) -> bool {
        self.k() == other.k()
    }
}

impl Eq for QContext {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degeneracy_flag() {
        for k in 2..=16 {
            let ctx = QContext::new(k).unwrap();
            assert_eq!(ctx.degenerate(), k % 2 == 0 && k >= 4, "k={k}");
        }
    }

    #[test]
    fn rejects_small_k() {
        assert!(QContext::new(1).is_err());
        assert!(QContext::new(0).is_err());
        assert!(QContext::new(MAX_ORDER + 1).is_err());
    }

    #[test]
    fn degenerate_message_names_half_k() {
        let ctx = QContext::new(6).unwrap();
        let err = ctx.require_nondegenerate("coherent state").unwrap_err();
        assert!(err.to_string().contains("[3]_q = 0"), "{err}");
    }
}
