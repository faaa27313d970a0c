//! Exact-arithmetic foundation: coefficients, monomial orders, and sparse
//! polynomial arithmetic over Q (or a prime field) in ring variables plus
//! the distinguished pencil variable `y`.

mod monomial;
mod parse;
mod poly;
mod ring;

pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::{same_ring, Coeff, CoeffMode, RingSpec, PENCIL_VAR};
