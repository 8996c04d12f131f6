//! Exact coefficient arithmetic: polynomials, reduced fractions and
//! specialization homomorphisms.

mod fraction;
pub mod linalg;
mod poly;
mod specialize;

pub use fraction::{frac, CoeffFraction};
pub use poly::{Exps, Poly, Var, NVARS};
pub use specialize::{as_rational, constant_sign, cyclotomic, AlgebraKind, Specialization};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at specialization: {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid specialization: {0}")]
    InvalidSpecialization(String),
}
