use bmw_cellular::algebra::{Algebra, Element, Gen, Side};
use bmw_cellular::combin::{enumerate_paths, maximal_path, Partition, Perm};
use bmw_cellular::exactring::{AlgebraKind, CoeffFraction, Poly, Specialization};
use bmw_cellular::hecke::{Hecke, HeckeElement};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::OnceLock;

fn poly_with(zdeg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..=4, 0u32..3, 0u32..3, 0..=zdeg), 0..4)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(c, a, b, d)| ([a, b, d], BigInt::from(c))).collect()))
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    poly_with(1)
}

/// Fractions whose denominators are monomials times `(1 + q^2)`, so they
/// never vanish at the integer points used below.
fn frac_strategy() -> impl Strategy<Value = CoeffFraction> {
    (poly_strategy(), 0u32..3, 0u32..2, any::<bool>()).prop_map(|(p, a, b, extra)| {
        let mut den = Poly::monomial(BigInt::from(1), [a, b, 0]);
        if extra {
            den = den.mul(&Poly::from_terms(vec![([0, 0, 0], BigInt::from(1)), ([2, 0, 0], BigInt::from(1))]));
        }
        CoeffFraction::new(p, den).unwrap()
    })
}

fn nonzero_frac() -> impl Strategy<Value = CoeffFraction> {
    frac_strategy().prop_filter("nonzero", |x| !x.is_zero())
}

fn bmw3() -> &'static Algebra {
    static A: OnceLock<Algebra> = OnceLock::new();
    A.get_or_init(|| Algebra::bmw(3))
}

fn brauer4() -> &'static Algebra {
    static A: OnceLock<Algebra> = OnceLock::new();
    A.get_or_init(|| Algebra::brauer(4))
}

fn element(a: &Algebra, terms: &[(usize, i64)]) -> Element {
    let v: Vec<(usize, CoeffFraction)> =
        terms.iter().map(|&(i, c)| (i % a.dim(), CoeffFraction::from_i64(c))).collect();
    Element::from_sparse(&v)
}

fn terms() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..1000, -3i64..=3), 1..4)
}

fn hecke_element(m: usize, ts: &[(usize, i64, i32)]) -> HeckeElement {
    let perms = Perm::all(m);
    let mut h = HeckeElement::zero(m);
    for &(i, c, e) in ts {
        let c = CoeffFraction::from_i64(c).mul(&CoeffFraction::q().pow(e).unwrap());
        h.add_term(perms[i % perms.len()].clone(), &c);
    }
    h
}

fn hecke_terms() -> impl Strategy<Value = Vec<(usize, i64, i32)>> {
    prop::collection::vec((0usize..100, -3i64..=3, -2i32..=2), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn fraction_field_laws(a in frac_strategy(), b in frac_strategy(), c in nonzero_frac()) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&c).div(&c).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.to_string().parse::<CoeffFraction>().unwrap(), a.clone());
        prop_assert_eq!(c.mul(&c.inv().unwrap()), CoeffFraction::one());
    }

    #[test]
    fn specialisation_is_a_homomorphism(a in frac_strategy(), b in frac_strategy()) {
        for (kind, s) in [(AlgebraKind::Bmw, "q=2,r=3"), (AlgebraKind::Bmw, "r=-q^-3"), (AlgebraKind::Brauer, "z=5")] {
            let sp = Specialization::parse(kind, s).unwrap();
            let (fa, fb) = (sp.apply(&a).unwrap(), sp.apply(&b).unwrap());
            prop_assert_eq!(sp.apply(&a.add(&b)).unwrap(), fa.add(&fb));
            prop_assert_eq!(sp.apply(&a.mul(&b)).unwrap(), sp.apply(&fa.mul(&fb)).unwrap());
        }
    }

    #[test]
    fn root_of_unity_specialisation_is_multiplicative(a in poly_with(0), b in poly_with(0)) {
        let sp = Specialization::parse(AlgebraKind::Bmw, "q=zeta(5),r=q^2+1").unwrap();
        let (a, b) = (CoeffFraction::from_poly(a), CoeffFraction::from_poly(b));
        let lhs = sp.apply(&a.mul(&b)).unwrap();
        let rhs = sp.apply(&sp.apply(&a).unwrap().mul(&sp.apply(&b).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bmw_product_is_associative(x in terms(), y in terms(), w in terms()) {
        let a = bmw3();
        let (x, y, w) = (element(a, &x), element(a, &y), element(a, &w));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &w), a.mul(&x, &a.mul(&y, &w)));
        prop_assert_eq!(a.star(&a.mul(&x, &y)), a.mul(&a.star(&y), &a.star(&x)));
        prop_assert_eq!(a.star(&a.star(&x)), x);
    }

    #[test]
    fn brauer_product_is_associative(x in terms(), y in terms(), w in terms()) {
        let a = brauer4();
        let (x, y, w) = (element(a, &x), element(a, &y), element(a, &w));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &w), a.mul(&x, &a.mul(&y, &w)));
        prop_assert_eq!(a.star(&a.mul(&x, &y)), a.mul(&a.star(&y), &a.star(&x)));
    }

    #[test]
    fn generators_act_consistently(x in terms(), i in 1usize..3) {
        let a = bmw3();
        let x = element(a, &x);
        for g in [Gen::T(i), Gen::TInv(i), Gen::E(i)] {
            prop_assert_eq!(a.mul_gen(&x, g, Side::Right), a.mul(&x, &a.gen(g)));
            prop_assert_eq!(a.mul_gen(&x, g, Side::Left), a.mul(&a.gen(g), &x));
        }
    }

    #[test]
    fn murphy_round_trip(ts in hecke_terms(), m in 1usize..=4) {
        let h = Hecke::generic(m);
        let x = hecke_element(m, &ts);
        prop_assert_eq!(h.from_murphy(&h.to_murphy(&x)), x);
    }

    #[test]
    fn hecke_braid_and_star(ts in hecke_terms(), m in 3usize..=4) {
        let h = Hecke::generic(m);
        let x = hecke_element(m, &ts);
        for i in 1..m - 1 {
            let mut l = x.clone();
            let mut r = x.clone();
            for g in [i, i + 1, i] {
                l = h.mul_gen(&l, g, Side::Right).unwrap();
            }
            for g in [i + 1, i, i + 1] {
                r = h.mul_gen(&r, g, Side::Right).unwrap();
            }
            prop_assert_eq!(l, r);
        }
        let y = hecke_element(m, &ts[..1]);
        prop_assert_eq!(h.star(&h.mul(&x, &y)), h.mul(&h.star(&y), &h.star(&x)));
    }

    #[test]
    fn permutation_words(idx in 0usize..120, jdx in 0usize..120) {
        let all = Perm::all(5);
        let (u, v) = (&all[idx], &all[jdx]);
        let w = u.reduced_word();
        prop_assert_eq!(w.len(), u.length());
        prop_assert_eq!(&Perm::from_word(5, &w), u);
        prop_assert_eq!(u.inverse().length(), u.length());
        let uv = u.mul(v);
        prop_assert!(uv.length() <= u.length() + v.length());
        prop_assert_eq!(uv.length() % 2, (u.length() + v.length()) % 2);
    }
}

#[test]
fn descents_control_length() {
    for n in 1..=5 {
        for u in Perm::all(n) {
            for i in 1..n {
                let us = u.mul_simple(i);
                let up = us.length() == u.length() + 1;
                assert_eq!(up, !u.has_right_descent(i), "{:?} s_{}", u, i);
                assert!(up || us.length() + 1 == u.length());
            }
        }
    }
}

#[test]
fn maximal_path_dominates_its_shape() {
    for n in 1..=6 {
        for lambda in Partition::cell_shapes(n) {
            let paths = enumerate_paths(&lambda, n).unwrap();
            let top = maximal_path(&lambda, n).unwrap();
            let maxima: Vec<_> = paths.iter().filter(|s| paths.iter().all(|t| *s == t || s.dominates(t))).collect();
            assert_eq!(maxima, vec![&top], "n={} {}", n, lambda);
        }
    }
}

#[test]
fn path_counts_sum_to_double_factorial() {
    for n in 1..=6 {
        let total: usize = Partition::cell_shapes(n).iter().map(|l| enumerate_paths(l, n).unwrap().len().pow(2)).sum();
        assert_eq!(total, (1..=n).map(|k| 2 * k - 1).product::<usize>());
    }
}
