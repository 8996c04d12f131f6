//! Specialization homomorphisms `R -> kappa`.
//!
//! A specialization substitutes fractions for variables and may additionally
//! declare that `q` is a root of an irreducible integer polynomial (for roots of
//! unity). Values land in `Q(remaining variables)` or in `Q[q]/(m)`, and are
//! represented by [`CoeffFraction`] in both cases.

use super::fraction::CoeffFraction;
use super::poly::{Poly, Var, NVARS};
use super::RingError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Which defining relations the specialization must respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Bmw,
    Brauer,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Specialization {
    kind: AlgebraKind,
    images: [Option<CoeffFraction>; NVARS],
    /// Minimal polynomial of `q`, if `q` is specialised to an algebraic number.
    minpoly: Option<Poly>,
    label: String,
}

impl Specialization {
    /// The identity map (generic parameters).
    pub fn generic(kind: AlgebraKind) -> Self {
        Specialization { kind, images: [None, None, None], minpoly: None, label: "generic".into() }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_generic(&self) -> bool {
        self.images.iter().all(|x| x.is_none()) && self.minpoly.is_none()
    }

    pub fn image(&self, v: Var) -> Option<&CoeffFraction> {
        self.images[v.index()].as_ref()
    }

    pub fn minpoly(&self) -> Option<&Poly> {
        self.minpoly.as_ref()
    }

    /// Builds a specialization from explicit images, checking the unit conditions.
    pub fn new(
        kind: AlgebraKind,
        assignments: &[(Var, CoeffFraction)],
        minpoly: Option<Poly>,
    ) -> Result<Self, RingError> {
        let mut images: [Option<CoeffFraction>; NVARS] = [None, None, None];
        let own: &[Var] = match kind {
            AlgebraKind::Bmw => &[Var::Q, Var::R],
            AlgebraKind::Brauer => &[Var::Z],
        };
        for (v, x) in assignments {
            if !own.contains(v) || Var::ALL.iter().any(|w| !own.contains(w) && x.uses(*w)) {
                return Err(RingError::InvalidSpecialization(format!(
                    "{}={} does not belong to this algebra",
                    v.name(),
                    x
                )));
            }
            if x.uses(*v) {
                return Err(RingError::InvalidSpecialization(format!(
                    "{} may not be expressed in terms of itself",
                    v.name()
                )));
            }
            images[v.index()] = Some(x.clone());
        }
        if let Some(m) = &minpoly {
            if m.uses(Var::R) || m.uses(Var::Z) || m.degree_in(Var::Q) == 0 {
                return Err(RingError::InvalidSpecialization("minimal polynomial must be univariate in q".into()));
            }
            if images[Var::Q.index()].is_some() {
                return Err(RingError::InvalidSpecialization("q is both assigned and algebraic".into()));
            }
            if kind != AlgebraKind::Bmw {
                return Err(RingError::InvalidSpecialization("q does not occur in the Brauer algebra".into()));
            }
            // reduction modulo the minimal polynomial works over Q[q] only
            if images[Var::R.index()].is_none() {
                return Err(RingError::InvalidSpecialization("r must be assigned when q is a root of unity".into()));
            }
        }
        let mut label = assignments.iter().map(|(v, x)| format!("{}={}", v.name(), x)).collect::<Vec<_>>().join(",");
        if let Some(m) = &minpoly {
            if !label.is_empty() {
                label.push(',');
            }
            label.push_str(&format!("q root of {}", m));
        }
        let s = Specialization { kind, images, minpoly, label };
        s.check_units()?;
        Ok(s)
    }

    fn check_units(&self) -> Result<(), RingError> {
        match self.kind {
            AlgebraKind::Bmw => {
                for (name, x) in
                    [("q", CoeffFraction::q()), ("r", CoeffFraction::r()), ("q-q^-1", CoeffFraction::delta())]
                {
                    let v = self.apply(&x).map_err(|_| RingError::Pole(format!("image of {}", name)))?;
                    if v.is_zero() {
                        return Err(RingError::InvalidSpecialization(format!("image of {} is not a unit", name)));
                    }
                }
                Ok(())
            }
            AlgebraKind::Brauer => Ok(()),
        }
    }

    /// Parses `"z=4"`, `"r=-q^-3"`, `"q=2,r=3"` or `"q=zeta(5),r=3"` (primitive root of unity).
    pub fn parse(kind: AlgebraKind, s: &str) -> Result<Self, RingError> {
        let s = s.trim();
        if s.is_empty() || s == "generic" {
            return Ok(Self::generic(kind));
        }
        let mut assignments = Vec::new();
        let mut minpoly = None;
        for part in s.split(',') {
            let (lhs, rhs) =
                part.split_once('=').ok_or_else(|| RingError::Parse(format!("expected var=value in {:?}", part)))?;
            let v = Var::from_name(lhs.trim())
                .ok_or_else(|| RingError::Parse(format!("unknown variable {:?}", lhs.trim())))?;
            let rhs = rhs.trim();
            if let Some(k) = rhs.strip_prefix("zeta(").and_then(|x| x.strip_suffix(')')) {
                if v != Var::Q {
                    return Err(RingError::Parse("only q may be a root of unity".into()));
                }
                let k: u32 = k.trim().parse().map_err(|_| RingError::Parse(format!("bad order {:?}", k)))?;
                if k == 0 {
                    return Err(RingError::Parse("root of unity order must be positive".into()));
                }
                minpoly = Some(cyclotomic(k));
            } else {
                assignments.push((v, rhs.parse::<CoeffFraction>()?));
            }
        }
        Self::new(kind, &assignments, minpoly)
    }

    /// Applies the homomorphism.
    pub fn apply(&self, x: &CoeffFraction) -> Result<CoeffFraction, RingError> {
        if self.is_generic() {
            return Ok(x.clone());
        }
        let y = x.substitute(&self.images).map_err(|_| RingError::Pole(x.to_string()))?;
        match &self.minpoly {
            None => Ok(y),
            Some(m) => {
                if y.uses(Var::R) || y.uses(Var::Z) {
                    return Err(RingError::InvalidSpecialization(format!("{} is not a function of q alone", y)));
                }
                let n = reduce_mod(y.numer(), m);
                let d = reduce_mod(y.denom(), m);
                if d.iter().all(|c| c.is_zero()) {
                    return Err(RingError::Pole(x.to_string()));
                }
                let dinv = inverse_mod(&d, &to_upoly(m)).ok_or_else(|| RingError::Pole(x.to_string()))?;
                let prod = rem(&mul_u(&n, &dinv), &to_upoly(m));
                Ok(from_upoly(&prod))
            }
        }
    }

    /// True if `q` is specialised to a root of unity of order at most `bound`.
    pub fn q_root_of_unity_order(&self, bound: u32) -> Option<u32> {
        if let Some(m) = &self.minpoly {
            return (1..=bound).find(|&k| {
                let xk = Poly::var(Var::Q).pow(k).sub(&Poly::one());
                xk.div_exact(m).is_some()
            });
        }
        let q = self.image(Var::Q)?;
        if !q.is_constant() {
            return None;
        }
        let v = q.as_integer()?;
        if v.is_one() {
            Some(1)
        } else if v == BigInt::from(-1) {
            Some(2)
        } else {
            None
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

/// The `k`th cyclotomic polynomial in `q`.
pub fn cyclotomic(k: u32) -> Poly {
    let mut p = Poly::var(Var::Q).pow(k).sub(&Poly::one());
    for d in 1..k {
        if k.is_multiple_of(d) {
            p = p.div_exact(&cyclotomic(d)).expect("cyclotomic factor divides");
        }
    }
    p
}

type UPoly = Vec<BigRational>;

fn to_upoly(p: &Poly) -> UPoly {
    let d = p.degree_in(Var::Q) as usize;
    let mut v = vec![BigRational::zero(); d + 1];
    for (e, c) in p.terms() {
        assert!(e[1] == 0 && e[2] == 0, "univariate in q expected");
        v[e[0] as usize] += BigRational::from_integer(c.clone());
    }
    trim(&mut v);
    v
}

fn trim(v: &mut UPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn from_upoly(v: &UPoly) -> CoeffFraction {
    let mut den = BigInt::one();
    for c in v {
        den = den.lcm(c.denom());
    }
    let terms = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (Poly::var_exps(Var::Q, i as u32), (c * BigRational::from_integer(den.clone())).to_integer()))
        .collect();
    CoeffFraction::new(Poly::from_terms(terms), Poly::constant(den)).expect("nonzero denominator")
}

fn mul_u(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn divmod(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let mut r = a.clone();
    trim(&mut r);
    let n = b.len() - 1;
    let lb = b[n].clone();
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(n).max(1)];
    while r.len() > n {
        let m = r.len() - 1;
        let c = &r[m] / &lb;
        for (i, bi) in b.iter().enumerate() {
            r[m - n + i] -= &c * bi;
        }
        q[m - n] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn rem(a: &UPoly, b: &UPoly) -> UPoly {
    divmod(a, b).1
}

fn sub_u(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out: UPoly = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigRational::zero) - b.get(i).cloned().unwrap_or_else(BigRational::zero)
        })
        .collect();
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
fn inverse_mod(a: &UPoly, m: &UPoly) -> Option<UPoly> {
    let (mut r0, mut r1) = (m.clone(), rem(a, m));
    let (mut s0, mut s1): (UPoly, UPoly) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (qt, r2) = divmod(&r0, &r1);
        let s2 = sub_u(&s0, &mul_u(&qt, &s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(rem(&s0.iter().map(|x| x / &c).collect(), m))
}

fn reduce_mod(p: &Poly, m: &Poly) -> UPoly {
    rem(&to_upoly(p), &to_upoly(m))
}

/// Rational value of a constant fraction.
pub fn as_rational(x: &CoeffFraction) -> Option<BigRational> {
    let n = x.numer().as_constant()?;
    let d = x.denom().as_constant()?;
    Some(BigRational::new(n, d))
}

/// Sign of a constant fraction (for reporting only).
pub fn constant_sign(x: &CoeffFraction) -> Option<i32> {
    as_rational(x).map(|r| {
        if r.is_zero() {
            0
        } else if r.is_negative() {
            -1
        } else {
            1
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::frac;

    #[test]
    fn evaluate_at_integer() {
        let s = Specialization::parse(AlgebraKind::Brauer, "z=4").unwrap();
        assert_eq!(s.apply(&CoeffFraction::z()).unwrap(), CoeffFraction::from_i64(4));
        assert_eq!(s.apply(&frac("(z-1)^2*(z+2)")).unwrap(), CoeffFraction::from_i64(54));
    }

    #[test]
    fn pole_is_reported() {
        let s = Specialization::parse(AlgebraKind::Brauer, "z=1").unwrap();
        assert!(matches!(s.apply(&frac("1/(z-1)")), Err(RingError::Pole(_))));
    }

    #[test]
    fn unit_check_rejects_q_one() {
        assert!(Specialization::parse(AlgebraKind::Bmw, "q=1").is_err());
        assert!(Specialization::parse(AlgebraKind::Bmw, "q=-1").is_err());
        assert!(Specialization::parse(AlgebraKind::Bmw, "r=0").is_err());
        assert!(Specialization::parse(AlgebraKind::Bmw, "q=2,r=3").is_ok());
    }

    #[test]
    fn symbolic_substitution() {
        let s = Specialization::parse(AlgebraKind::Bmw, "r=-q^-3").unwrap();
        assert_eq!(s.apply(&frac("q^3*r-1")).unwrap(), CoeffFraction::from_i64(-2));
        assert!(s.apply(&frac("q^3*r+1")).unwrap().is_zero());
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), frac("q-1").numer().clone());
        assert_eq!(cyclotomic(4), frac("q^2+1").numer().clone());
        assert_eq!(cyclotomic(6), frac("q^2-q+1").numer().clone());
        assert_eq!(cyclotomic(5).degree_in(Var::Q), 4);
    }

    #[test]
    fn root_of_unity_arithmetic() {
        let s = Specialization::parse(AlgebraKind::Bmw, "q=zeta(5),r=3").unwrap();
        assert!(s.apply(&frac("q^5")).unwrap().is_one());
        assert!(s.apply(&frac("1+q+q^2+q^3+q^4")).unwrap().is_zero());
        let x = s.apply(&frac("1/(q+1)")).unwrap();
        let y = s.apply(&frac("q+1")).unwrap();
        assert!(s.apply(&x.mul(&y)).unwrap().is_one());
        assert_eq!(s.q_root_of_unity_order(24), Some(5));
    }

    #[test]
    fn foreign_variables_are_rejected() {
        assert!(Specialization::parse(AlgebraKind::Brauer, "q=2").is_err());
        assert!(Specialization::parse(AlgebraKind::Brauer, "z=q").is_err());
        assert!(Specialization::parse(AlgebraKind::Bmw, "z=3").is_err());
        assert!(Specialization::parse(AlgebraKind::Bmw, "q=zeta(5)").is_err());
        let s = Specialization::parse(AlgebraKind::Bmw, "q=zeta(5),r=q^2").unwrap();
        assert!(s.apply(&frac("z")).is_err());
        assert!(s.apply(&frac("r^5")).unwrap().is_one());
    }
}
