//! Semisimplicity certificates: content vectors, Gram ranks, Hom obstructions
//! and the evidence harness for the conjectured Brauer discriminants.

use crate::algebra::Algebra;
use crate::cellular::CellError;
use crate::combin::{enumerate_paths, Dominance, Partition, Path, TableauError};
use crate::exactring::{as_rational, AlgebraKind, CoeffFraction, Poly, RingError, Specialization, Var};
use crate::towers::content;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error("specialization is for the other algebra")]
    WrongKind,
    #[error("{0}")]
    Input(String),
}

impl SpecError {
    pub fn is_pole(&self) -> bool {
        matches!(self, SpecError::Ring(RingError::Pole(_)) | SpecError::Cell(CellError::Ring(RingError::Pole(_))))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    CertifiedSemisimple,
    Inconclusive,
    CertifiedNotSemisimple,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::CertifiedSemisimple => "CertifiedSemisimple",
            Outcome::Inconclusive => "Inconclusive",
            Outcome::CertifiedNotSemisimple => "CertifiedNotSemisimple",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `s` has the dominating shape; both paths share `vector`.
    Paths { s: Path, t: Path, vector: Vec<CoeffFraction> },
    /// A cell module whose form has a radical.
    Gram { lambda: Partition, rank: usize, dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witnesses: Vec<Witness>,
    /// `(lambda, dim, dim RAD)` for every cell module, Gram route only.
    pub radicals: Vec<(Partition, usize, usize)>,
}

fn check_kind(kind: AlgebraKind, s: &Specialization) -> Result<(), SpecError> {
    if s.kind() != kind {
        return Err(SpecError::WrongKind);
    }
    Ok(())
}

/// `P^(t)`: the eigenvalues of `L_1, ..., L_n` along `t`, specialised.
pub fn content_vector(kind: AlgebraKind, t: &Path, s: &Specialization) -> Result<Vec<CoeffFraction>, SpecError> {
    check_kind(kind, s)?;
    (1..=t.n()).map(|k| Ok(s.apply(&content(kind, t, k))?)).collect()
}

fn all_paths(n: usize) -> Result<Vec<(Partition, Vec<Path>)>, SpecError> {
    Partition::cell_shapes(n)
        .into_iter()
        .map(|l| {
            let p = enumerate_paths(&l, n)?;
            Ok((l, p))
        })
        .collect()
}

fn cmp_witness(a: &Witness, b: &Witness) -> Ordering {
    match (a, b) {
        (Witness::Paths { s: s1, t: t1, .. }, Witness::Paths { s: s2, t: t2, .. }) => s1
            .shape()
            .order_cmp(s2.shape())
            .then_with(|| t1.shape().order_cmp(t2.shape()))
            .then_with(|| s1.order_cmp(s2))
            .then_with(|| t1.order_cmp(t2)),
        (Witness::Gram { lambda: l1, .. }, Witness::Gram { lambda: l2, .. }) => l1.order_cmp(l2),
        (Witness::Paths { .. }, _) => Ordering::Less,
        _ => Ordering::Greater,
    }
}

/// The content-vector criterion. Never returns `CertifiedNotSemisimple`.
pub fn certify(kind: AlgebraKind, n: usize, s: &Specialization) -> Result<Verdict, SpecError> {
    if n == 0 {
        return Err(SpecError::Input("n must be positive".into()));
    }
    let shapes = all_paths(n)?;
    let mut vectors = Vec::new();
    for (l, paths) in &shapes {
        for t in paths {
            vectors.push((l.clone(), t.clone(), content_vector(kind, t, s)?));
        }
    }
    let mut witnesses = Vec::new();
    for (l, a, va) in &vectors {
        for (m, b, vb) in &vectors {
            if l == m || va != vb {
                continue;
            }
            if l.dominance(m) == Dominance::Dominates {
                witnesses.push(Witness::Paths { s: a.clone(), t: b.clone(), vector: va.clone() });
            }
        }
    }
    witnesses.sort_by(cmp_witness);
    let outcome = if witnesses.is_empty() { Outcome::CertifiedSemisimple } else { Outcome::Inconclusive };
    Ok(Verdict { outcome, witnesses, radicals: Vec::new() })
}

/// Ranks of all specialised Gram matrices.
pub fn gram_rank_certify(alg: &Algebra, s: &Specialization) -> Result<Verdict, SpecError> {
    check_kind(alg.kind(), s)?;
    let mut witnesses = Vec::new();
    let mut radicals = Vec::new();
    for lambda in Partition::cell_shapes(alg.n()) {
        let g = alg.cell_module(&lambda)?.gram();
        let gs = g.try_map(|x| s.apply(x))?;
        let norm = |x: CoeffFraction| s.apply(&x).expect("specialised values have no poles");
        let rank = gs.rank_with(&norm);
        let dim = g.rows();
        radicals.push((lambda.clone(), dim, dim - rank));
        if rank < dim {
            witnesses.push(Witness::Gram { lambda, rank, dim });
        }
    }
    witnesses.sort_by(cmp_witness);
    let outcome = if witnesses.is_empty() { Outcome::CertifiedSemisimple } else { Outcome::CertifiedNotSemisimple };
    Ok(Verdict { outcome, witnesses, radicals })
}

/// Whether the necessary identity for `Hom(S^lambda, S^mu) != 0` holds.
/// `false` certifies that the Hom space vanishes.
pub fn hom_obstruction(
    kind: AlgebraKind,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    s: &Specialization,
) -> Result<bool, SpecError> {
    check_kind(kind, s)?;
    if lambda.size() > n
        || mu.size() > n
        || !(n - lambda.size()).is_multiple_of(2)
        || !(n - mu.size()).is_multiple_of(2)
    {
        return Err(SpecError::Input(format!("{} and {} must both be cell shapes at n = {}", lambda, mu, n)));
    }
    if lambda.size() < mu.size() {
        return Err(SpecError::Input("lambda must have at least as many boxes as mu".into()));
    }
    let f = (n - lambda.size()) / 2;
    let g = (n - mu.size()) / 2;
    let (cl, cm) = (lambda.content_sum(), mu.content_sum());
    let (lhs, rhs) = match kind {
        AlgebraKind::Bmw => {
            let lhs =
                CoeffFraction::var_pow(Var::R, 2 * (g - f) as i32).mul(&CoeffFraction::var_pow(Var::Q, 2 * cl as i32));
            (lhs, CoeffFraction::var_pow(Var::Q, 2 * cm as i32))
        }
        AlgebraKind::Brauer => {
            if f != 0 {
                return Err(SpecError::Input(format!("lambda must be a partition of n = {}", n)));
            }
            let rhs = CoeffFraction::from_i64(1).sub(&CoeffFraction::z()).scale_i64(g as i64);
            (CoeffFraction::from_i64(cl - cm), rhs)
        }
    };
    Ok(s.apply(&lhs)? == s.apply(&rhs)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionNote {
    pub root_of_unity: Option<u32>,
    /// `(sign, k)` with `r = sign * q^k`.
    pub r_power: Option<(i32, i32)>,
}

impl ConditionNote {
    pub fn matched(&self) -> bool {
        self.root_of_unity.is_some() || self.r_power.is_some()
    }
}

/// Checks the necessary conditions for non-semisimplicity of `B_n(q, r)`:
/// `q` a root of unity of order at most `bound`, or `r = +-q^k` with `|k| <= bound`.
pub fn necessary_condition_note(s: &Specialization, bound: u32) -> Result<ConditionNote, SpecError> {
    check_kind(AlgebraKind::Bmw, s)?;
    let root_of_unity = s.q_root_of_unity_order(bound);
    let r = s.apply(&CoeffFraction::r())?;
    let mut r_power = None;
    'outer: for k in 0..=bound as i32 {
        for k in if k == 0 { vec![0] } else { vec![k, -k] } {
            let qk = s.apply(&CoeffFraction::var_pow(Var::Q, k))?;
            for sign in [1, -1] {
                if r == qk.scale_i64(sign as i64) {
                    r_power = Some((sign, k));
                    break 'outer;
                }
            }
        }
    }
    Ok(ConditionNote { root_of_unity, r_power })
}

/// `p_i(z)`.
pub fn conjecture_poly(i: usize) -> CoeffFraction {
    assert!(i >= 1, "p_i is defined for i >= 1");
    let lin = |a: i64| CoeffFraction::z().add(&CoeffFraction::from_i64(a));
    let mut p = lin(2).mul(&lin(-1));
    for j in 2..=i as i64 {
        p = p.mul(&lin(2 * j)).mul(&lin(-j));
        if j % 2 == 1 {
            p = p.mul(&lin(j - 2));
        }
    }
    p
}

/// Linear factors of a polynomial in `z` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSplit {
    /// Rational roots with multiplicities, ascending.
    pub roots: Vec<(BigRational, usize)>,
    /// What is left after removing the linear factors (constant if fully split).
    pub remainder: CoeffFraction,
}

fn eval(c: &[BigRational], x: &BigRational) -> BigRational {
    c.iter().rev().fold(BigRational::zero(), |acc, a| acc * x + a)
}

fn divisors(m: &BigInt) -> Vec<BigInt> {
    let m = m.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            out.push(d.clone());
            out.push(&m / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Splits off the rational roots of a univariate polynomial in `z`.
pub fn rational_roots(p: &CoeffFraction) -> Result<RootSplit, SpecError> {
    if !p.denom().is_one() && p.denom().as_constant().is_none() {
        return Err(SpecError::Input("expected a polynomial".into()));
    }
    if p.is_zero() {
        return Err(SpecError::Input("zero polynomial has every root".into()));
    }
    if p.uses(Var::Q) || p.uses(Var::R) {
        return Err(SpecError::Input("expected a polynomial in z".into()));
    }
    let mut c: Vec<BigRational> = p
        .numer()
        .coeffs_in(Var::Z)
        .iter()
        .map(|x| BigRational::from_integer(x.as_constant().expect("univariate")))
        .collect();
    let scale = BigRational::from_integer(p.denom().as_constant().expect("constant denominator"));
    let mut roots: BTreeMap<BigRational, usize> = BTreeMap::new();
    while c.len() > 1 && c[0].is_zero() {
        c.remove(0);
        *roots.entry(BigRational::zero()).or_default() += 1;
    }
    loop {
        if c.len() <= 1 {
            break;
        }
        let lcm = c.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom()));
        let ints: Vec<BigInt> = c.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let mut found = None;
        'search: for a in divisors(&ints[0]) {
            for b in divisors(ints.last().unwrap()) {
                for sign in [1, -1] {
                    let x = BigRational::new(&a * sign, b.clone());
                    if eval(&c, &x).is_zero() {
                        found = Some(x);
                        break 'search;
                    }
                }
            }
        }
        let Some(x) = found else { break };
        // synthetic division by (z - x)
        let d = c.len() - 1;
        let mut q = vec![BigRational::zero(); d];
        let mut acc = BigRational::zero();
        for i in (1..=d).rev() {
            acc = &acc * &x + &c[i];
            q[i - 1] = acc.clone();
        }
        c = q;
        *roots.entry(x).or_default() += 1;
    }
    let lcm = c.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom()));
    let coeffs: Vec<Poly> =
        c.iter().map(|x| Poly::constant((x * BigRational::from_integer(lcm.clone())).to_integer())).collect();
    let rem = CoeffFraction::new(Poly::from_coeffs(Var::Z, &coeffs), Poly::constant(lcm))?
        .div(&CoeffFraction::from_bigint(scale.to_integer()))?;
    Ok(RootSplit { roots: roots.into_iter().collect(), remainder: rem })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureEvidence {
    pub n: usize,
    pub k: usize,
    pub lambda: Partition,
    pub determinant: CoeffFraction,
    pub split: RootSplit,
    /// Roots predicted by `p_k` (and `z = 0` for even `n`).
    pub predicted: Vec<BigRational>,
    pub agree: bool,
    /// Even `n` only: whether the roots match `z p_{k-1}` instead (`p_0 = 1`).
    pub agree_shifted: Option<bool>,
}

/// Compares the root set of `det Gram(S^(1))` (odd `n`) or `det Gram(S^empty)` (even `n`)
/// for the Brauer algebra with the roots of `p_k`.
pub fn conjecture_evidence(n: usize) -> Result<ConjectureEvidence, SpecError> {
    if n < 2 {
        return Err(SpecError::Input("n must be at least 2".into()));
    }
    let k = n / 2;
    let lambda = if n % 2 == 1 { Partition::of(&[1]) } else { Partition::empty() };
    let alg = Algebra::brauer(n);
    let determinant = alg.cell_module(&lambda)?.gram().det();
    let split = rational_roots(&determinant)?;
    let mut predicted: Vec<BigRational> = rational_roots(&conjecture_poly(k))?.roots.into_iter().map(|x| x.0).collect();
    if n.is_multiple_of(2) {
        predicted.push(BigRational::zero());
    }
    predicted.sort();
    predicted.dedup();
    let found: Vec<BigRational> = split.roots.iter().map(|x| x.0.clone()).collect();
    let agree = found == predicted && split.remainder.is_constant();
    let agree_shifted = if n.is_multiple_of(2) {
        let mut shifted = vec![BigRational::zero()];
        if k > 1 {
            shifted.extend(rational_roots(&conjecture_poly(k - 1))?.roots.into_iter().map(|x| x.0));
        }
        shifted.sort();
        shifted.dedup();
        Some(found == shifted && split.remainder.is_constant())
    } else {
        None
    };
    Ok(ConjectureEvidence { n, k, lambda, determinant, split, predicted, agree, agree_shifted })
}

/// Rational value of a constant, for display.
pub fn rational(x: &CoeffFraction) -> Option<BigRational> {
    as_rational(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::frac;
    use crate::exactring::linalg::Matrix;

    fn path(shapes: &[&[usize]]) -> Path {
        Path::new(shapes.iter().map(|p| Partition::of(p)).collect()).unwrap()
    }

    #[test]
    fn content_vectors_of_the_examples() {
        let s = Specialization::parse(AlgebraKind::Bmw, "r=-q^-3").unwrap();
        let p = path(&[&[], &[1], &[2], &[1]]);
        assert_eq!(content_vector(AlgebraKind::Bmw, &p, &s).unwrap(), vec![frac("1"), frac("q^2"), frac("q^4")]);
        let s = Specialization::parse(AlgebraKind::Brauer, "z=4").unwrap();
        let t = path(&[&[], &[1], &[1, 1], &[1]]);
        let u = path(&[&[], &[1], &[1, 1], &[1, 1, 1]]);
        let want = vec![frac("0"), frac("-1"), frac("-2")];
        assert_eq!(content_vector(AlgebraKind::Brauer, &t, &s).unwrap(), want);
        assert_eq!(content_vector(AlgebraKind::Brauer, &u, &s).unwrap(), want);
    }

    #[test]
    fn generic_certificates() {
        for n in 1..=4 {
            let v = certify(AlgebraKind::Bmw, n, &Specialization::generic(AlgebraKind::Bmw)).unwrap();
            assert_eq!(v.outcome, Outcome::CertifiedSemisimple, "bmw n={}", n);
        }
        for n in 1..=5 {
            let v = certify(AlgebraKind::Brauer, n, &Specialization::generic(AlgebraKind::Brauer)).unwrap();
            assert_eq!(v.outcome, Outcome::CertifiedSemisimple, "brauer n={}", n);
        }
    }

    #[test]
    fn brauer_z1_is_not_semisimple() {
        let s = Specialization::parse(AlgebraKind::Brauer, "z=1").unwrap();
        let v = gram_rank_certify(&Algebra::brauer(3), &s).unwrap();
        assert_eq!(v.outcome, Outcome::CertifiedNotSemisimple);
        assert_eq!(v.witnesses, vec![Witness::Gram { lambda: Partition::of(&[1]), rank: 1, dim: 3 }]);
    }

    #[test]
    fn hom_obstructions() {
        let s = Specialization::parse(AlgebraKind::Brauer, "z=4").unwrap();
        let (l3, l1) = (Partition::of(&[3]), Partition::of(&[1]));
        assert!(!hom_obstruction(AlgebraKind::Brauer, &l3, &l1, 3, &s).unwrap());
        assert!(hom_obstruction(AlgebraKind::Brauer, &l3, &l3, 3, &s).unwrap());
        let s = Specialization::parse(AlgebraKind::Bmw, "r=-q^-3").unwrap();
        assert!(hom_obstruction(AlgebraKind::Bmw, &l3, &l1, 3, &s).unwrap());
        let g = Specialization::generic(AlgebraKind::Bmw);
        assert!(!hom_obstruction(AlgebraKind::Bmw, &l3, &l1, 3, &g).unwrap());
    }

    #[test]
    fn condition_notes() {
        let s = Specialization::parse(AlgebraKind::Bmw, "r=-q^-3").unwrap();
        assert_eq!(necessary_condition_note(&s, 24).unwrap().r_power, Some((-1, -3)));
        let g = Specialization::generic(AlgebraKind::Bmw);
        assert!(!necessary_condition_note(&g, 24).unwrap().matched());
        let s = Specialization::parse(AlgebraKind::Bmw, "q=zeta(5),r=3").unwrap();
        let note = necessary_condition_note(&s, 24).unwrap();
        assert_eq!(note.root_of_unity, Some(5));
    }

    #[test]
    fn polynomials() {
        assert_eq!(conjecture_poly(1), frac("(z+2)*(z-1)"));
        assert_eq!(conjecture_poly(2), frac("(z+4)*(z-2)*(z+2)*(z-1)"));
        assert_eq!(conjecture_poly(3), frac("(z+6)*(z-3)*(z+1)*(z+4)*(z-2)*(z+2)*(z-1)"));
    }

    #[test]
    fn root_splitting() {
        let r = rational_roots(&frac("(z-1)^2*(z+2)*(z^2+1)*3")).unwrap();
        let int = |x: i64| BigRational::from_integer(BigInt::from(x));
        assert_eq!(r.roots, vec![(int(-2), 1), (int(1), 2)]);
        assert_eq!(r.remainder, frac("3*z^2+3"));
        let r = rational_roots(&frac("z*(2*z-1)")).unwrap();
        assert_eq!(r.roots, vec![(int(0), 1), (BigRational::new(1.into(), 2.into()), 1)]);
    }

    #[test]
    fn evidence_n3() {
        let e = conjecture_evidence(3).unwrap();
        assert_eq!(e.determinant, frac("(z-1)^2*(z+2)"));
        assert!(e.agree);
        assert_eq!(e.agree_shifted, None);
    }

    #[test]
    fn evidence_even() {
        // S^empty at n = 4 has the three pairings as basis; <a, b> = z^{loops(a, b)}
        let g = Matrix::from_rows(
            ["z^2 z z", "z z^2 z", "z z z^2"].iter().map(|r| r.split(' ').map(frac).collect()).collect(),
        );
        let e = conjecture_evidence(4).unwrap();
        assert_eq!(e.determinant, g.det());
        assert!(!e.agree);
        assert_eq!(e.agree_shifted, Some(true));
        let e = conjecture_evidence(2).unwrap();
        assert_eq!(e.determinant, frac("z"));
        assert_eq!(e.agree_shifted, Some(true));
    }
}
