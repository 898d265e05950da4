//! Exact algebra for k-fermionic coherent states.
//!
//! At `q = e^{2πi/k}` the Biedenharn–Macfarlane oscillator has a nilpotent
//! k-dimensional Fock representation. Its coherent states are labelled by
//! Z_k-graded Grassmann variables, admit two resolutions of unity under
//! generalised Berezin integration, and map Fock vectors onto polynomials in
//! ξ̄. Every identity in that construction is built and checked here with
//! exact arithmetic over Q(ζ_k) extended by formal radicals `sqrt([n]_q)`.

pub mod berezin;
pub mod error;
pub mod expr;
pub mod float_oracle;
pub mod grassmann;
pub mod matrix;
pub mod oscillator;
pub mod render;
pub mod representatives;
pub mod scalars;
pub mod verify;

pub use error::{AlgebraError, Result};
pub use scalars::{CyclotomicNumber, QContext, RadicalScalar, Rational};
