//! Exact scalars: Q(ζ_k), formal radicals of q-numbers, q-combinatorics.

mod context;
mod cyclotomic;
mod qcomb;
mod radical;

pub use context::{QContext, MAX_ORDER};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicNumber, Rational};
pub use qcomb::{
    box_factorial, box_number, inv_q_factorial, inv_sqrt_q_factorial, q_factorial, q_number,
    q_number_conj, sqrt_q_factorial, verify_box_identities,
};
pub use radical::RadicalScalar;
