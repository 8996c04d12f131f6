//! The B–M–W algebra `B_n(q, r)`: words, products, the anti-involution,
//! cellular data and Jucys–Murphy elements.

use crate::algebra::{Algebra, Element, Gen, Side};
use crate::cellular::{CellError, CellModule, CellularIndex};
use crate::combin::Partition;
use crate::exactring::linalg::Matrix;
use crate::exactring::{AlgebraKind, CoeffFraction};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("generator {gen} out of range for n = {n}")]
pub struct GenRange {
    pub gen: Gen,
    pub n: usize,
}

fn check(alg: &Algebra) {
    assert_eq!(alg.kind(), AlgebraKind::Bmw, "expected a B–M–W algebra");
}

/// The product of a word in `T_i`, `T_i^{-1}`, `E_i`.
pub fn bmw_word(alg: &Algebra, gens: &[Gen]) -> Result<Element, GenRange> {
    check(alg);
    if let Some(&g) = gens.iter().find(|&&g| !alg.check_gen(g)) {
        return Err(GenRange { gen: g, n: alg.n() });
    }
    Ok(alg.word(gens))
}

pub fn bmw_mul_right_gen(alg: &Algebra, x: &Element, g: Gen) -> Result<Element, GenRange> {
    check(alg);
    if !alg.check_gen(g) {
        return Err(GenRange { gen: g, n: alg.n() });
    }
    Ok(alg.mul_gen(x, g, Side::Right))
}

pub fn bmw_star(alg: &Algebra, x: &Element) -> Element {
    check(alg);
    alg.star(x)
}

/// Cellular coordinates `(lambda, s, v, t, u)` of an element.
pub fn bmw_to_cellular(alg: &Algebra, x: &Element) -> Result<BTreeMap<CellularIndex, CoeffFraction>, CellError> {
    check(alg);
    alg.to_cellular(x)
}

pub fn bmw_m_lambda(alg: &Algebra, lambda: &Partition) -> Result<Element, CellError> {
    check(alg);
    alg.m_lambda(lambda)
}

pub fn bmw_cell_action(cm: &CellModule, v: &[CoeffFraction], g: Gen) -> Vec<CoeffFraction> {
    cm.act(v, g)
}

pub fn bmw_gram(alg: &Algebra, lambda: &Partition) -> Result<Matrix, CellError> {
    check(alg);
    Ok(alg.cell_module(lambda)?.gram())
}

pub fn bmw_jm(alg: &Algebra, i: usize) -> Element {
    check(alg);
    alg.jm(i)
}
