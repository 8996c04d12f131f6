//! The Brauer algebra `B_n(z)`: diagram products, cellular data and
//! Jucys–Murphy elements.

use crate::algebra::{Algebra, Element, Gen};
use crate::cellular::{CellError, CellModule, CellularIndex};
use crate::combin::Partition;
use crate::diagram::BrauerDiagram;
use crate::exactring::linalg::Matrix;
use crate::exactring::{AlgebraKind, CoeffFraction};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("diagrams on {0} and {1} strands cannot be composed")]
pub struct SizeMismatch(pub usize, pub usize);

fn check(alg: &Algebra) {
    assert_eq!(alg.kind(), AlgebraKind::Brauer, "expected a Brauer algebra");
}

/// Stacks `a` over `b`; returns the product diagram and the number of closed loops.
pub fn br_compose(a: &BrauerDiagram, b: &BrauerDiagram) -> Result<(BrauerDiagram, usize), SizeMismatch> {
    if a.n() != b.n() {
        return Err(SizeMismatch(a.n(), b.n()));
    }
    Ok(a.compose(b))
}

pub fn br_mul(alg: &Algebra, a: &Element, b: &Element) -> Element {
    check(alg);
    alg.mul(a, b)
}

/// `m_lambda = E_1 E_3 ... E_{2f-1} x_lambda`.
pub fn br_m_lambda(alg: &Algebra, lambda: &Partition) -> Result<Element, CellError> {
    check(alg);
    alg.m_lambda(lambda)
}

/// `v g` in the cell module; `T` and `T^-1` both act as `s_i`.
pub fn br_cell_action(cm: &CellModule, v: &[CoeffFraction], g: Gen) -> Vec<CoeffFraction> {
    cm.act(v, g)
}

pub fn br_to_cellular(alg: &Algebra, x: &Element) -> Result<BTreeMap<CellularIndex, CoeffFraction>, CellError> {
    check(alg);
    alg.to_cellular(x)
}

pub fn br_gram(alg: &Algebra, lambda: &Partition) -> Result<Matrix, CellError> {
    check(alg);
    Ok(alg.cell_module(lambda)?.gram())
}

pub fn br_jm(alg: &Algebra, i: usize) -> Element {
    check(alg);
    alg.jm(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Side;
    use crate::cellular::perm_word;
    use crate::combin::{enumerate_paths, maximal_path, Perm};
    use crate::exactring::frac;
    use crate::towers::content;

    #[test]
    fn compose_examples() {
        let e1 = BrauerDiagram::e(3, 1);
        let e2 = BrauerDiagram::e(3, 2);
        assert_eq!(br_compose(&e1, &e1).unwrap(), (e1.clone(), 1));
        let (d, l1) = br_compose(&e1, &e2).unwrap();
        let (d, l2) = br_compose(&d, &e1).unwrap();
        assert_eq!((d, l1 + l2), (e1.clone(), 0));
        assert!(br_compose(&e1, &BrauerDiagram::e(4, 1)).is_err());
        let id = BrauerDiagram::identity(3);
        assert_eq!(br_compose(&id, &e2).unwrap(), (e2, 0));
    }

    #[test]
    fn products() {
        let b = Algebra::brauer(3);
        let s1 = b.gen(Gen::T(1));
        assert_eq!(br_mul(&b, &s1, &s1), b.one());
        assert_eq!(br_mul(&b, &s1, &b.gen(Gen::E(1))), b.gen(Gen::E(1)));
        let w = b.word(&[Gen::T(1), Gen::T(2), Gen::T(1)]);
        assert_eq!(br_mul(&b, &w, &w), b.one());
    }

    #[test]
    fn m_lambda_examples() {
        let b3 = Algebra::brauer(3);
        assert_eq!(br_m_lambda(&b3, &Partition::of(&[1])).unwrap(), b3.gen(Gen::E(1)));
        let b4 = Algebra::brauer(4);
        assert_eq!(br_m_lambda(&b4, &Partition::of(&[1, 1])).unwrap(), b4.gen(Gen::E(1)));
        let all = Perm::all(3).iter().fold(b3.zero(), |acc, w| acc.add(&b3.word(&perm_word(w))));
        assert_eq!(br_m_lambda(&b3, &Partition::of(&[3])).unwrap(), all);
    }

    #[test]
    fn cell_actions() {
        let b = Algebra::brauer(3);
        let cm = b.cell_module(&Partition::of(&[1])).unwrap();
        // E_1 s_2 is the second basis vector
        assert_eq!(br_cell_action(&cm, &cm.unit(0), Gen::T(2)), cm.unit(1));
        let cm = b.cell_module(&Partition::of(&[2, 1])).unwrap();
        for i in 1..3 {
            let a = cm.action(Gen::T(i));
            assert_eq!(a.mul(a), Matrix::identity(cm.dim()));
        }
    }

    #[test]
    fn gram_examples() {
        let b = Algebra::brauer(3);
        let g = br_gram(&b, &Partition::of(&[1])).unwrap();
        assert_eq!(g.det(), frac("(z-1)^2*(z+2)"));
        assert_eq!(br_gram(&b, &Partition::of(&[3])).unwrap(), Matrix::from_rows(vec![vec![frac("6")]]));
    }

    #[test]
    fn jm_elements() {
        for n in 2..=4 {
            let b = Algebra::brauer(n);
            assert!(br_jm(&b, 1).is_zero());
            let l2 = b.gen(Gen::T(1)).sub(&b.gen(Gen::E(1)));
            assert_eq!(br_jm(&b, 2), l2);
            let sum = (2..=n).fold(b.zero(), |acc, k| acc.add(&br_jm(&b, k)));
            for i in 1..n {
                for g in [Gen::T(i), Gen::E(i)] {
                    assert_eq!(b.mul_gen(&sum, g, Side::Right), b.mul_gen(&sum, g, Side::Left), "n={} {}", n, g);
                }
            }
        }
    }

    #[test]
    fn jm_on_e_chains() {
        for n in 2..=5 {
            let b = Algebra::brauer(n);
            for f in 1..=n / 2 {
                let chain = b.word(&(0..f).map(|i| Gen::E(2 * i + 1)).collect::<Vec<_>>());
                for k in 1..=(2 * f + 1).min(n) {
                    let got = b.mul(&chain, &b.jm(k));
                    if k % 2 == 1 {
                        assert!(got.is_zero(), "n={} f={} k={}", n, f, k);
                    } else {
                        assert_eq!(got, chain.scale(&frac("1-z")), "n={} f={} k={}", n, f, k);
                    }
                }
            }
        }
    }

    #[test]
    fn jm_eigenvalues_on_m_lambda() {
        for n in 1..=4 {
            let b = Algebra::brauer(n);
            for lambda in Partition::cell_shapes(n) {
                let cm = b.cell_module(&lambda).unwrap();
                let t = maximal_path(&lambda, n).unwrap();
                assert!(enumerate_paths(&lambda, n).unwrap().contains(&t));
                let m = b.m_lambda(&lambda).unwrap();
                for k in 1..=n {
                    let v = cm.coords(&b.mul(&m, &b.jm(k))).unwrap();
                    let want: Vec<CoeffFraction> =
                        cm.unit(0).iter().map(|x| x.mul(&content(AlgebraKind::Brauer, &t, k))).collect();
                    assert_eq!(v, want, "n={} {} k={}", n, lambda, k);
                }
            }
        }
    }
}
