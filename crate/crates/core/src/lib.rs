//! Exact computations in Brauer and Birman–Murakami–Wenzl algebras.

pub mod algebra;
pub mod bmw;
pub mod brauer;
pub mod cellular;
pub mod cli;
pub mod combin;
pub mod diagram;
pub mod exactring;
pub mod hecke;
pub mod specsim;
mod tangle;
pub mod towers;
