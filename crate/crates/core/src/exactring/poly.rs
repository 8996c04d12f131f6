//! Sparse multivariate integer polynomials in the fixed variables `q`, `r`, `z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

pub const NVARS: usize = 3;

/// Exponent vector indexed by [`Var`].
pub type Exps = [u32; NVARS];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    R,
    Z,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::R, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::R => "r",
            Var::Z => "z",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "q" => Some(Var::Q),
            "r" => Some(Var::R),
            "z" => Some(Var::Z),
            _ => None,
        }
    }
}

/// Terms are kept sorted by exponent vector in strictly decreasing lexicographic
/// order (`q > r > z`), with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Exps, BigInt)>,
}

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn sub_exps(b: &Exps, a: &Exps) -> Exps {
    [b[0] - a[0], b[1] - a[1], b[2] - a[2]]
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![([0; NVARS], c)] }
        }
    }

    pub fn from_i64(c: i64) -> Poly {
        Poly::constant(BigInt::from(c))
    }

    pub fn var(v: Var) -> Poly {
        Poly::monomial(BigInt::one(), Self::var_exps(v, 1))
    }

    pub fn var_exps(v: Var, e: u32) -> Exps {
        let mut x = [0; NVARS];
        x[v.index()] = e;
        x
    }

    pub fn monomial(c: BigInt, e: Exps) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(e, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(mut terms: Vec<(Exps, BigInt)>) -> Poly {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Exps, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Exps, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0; NVARS] && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 if self.terms[0].0 == [0; NVARS] => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Exps, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coeff_sign(&self) -> i32 {
        match self.terms.first() {
            None => 0,
            Some((_, c)) if c.is_negative() => -1,
            _ => 1,
        }
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(e, _)| e[v.index()]).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(e, _)| e[v.index()]).min().unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.iter().any(|(e, _)| e[v.index()] > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.iter().copied().filter(|&v| self.uses(v)).collect()
    }

    /// Integer content (gcd of all coefficients, nonnegative).
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise minimum of the exponent vectors.
    pub fn min_exps(&self) -> Exps {
        let mut m = [u32::MAX; NVARS];
        for (e, _) in &self.terms {
            for i in 0..NVARS {
                m[i] = m[i].min(e[i]);
            }
        }
        if self.terms.is_empty() {
            [0; NVARS]
        } else {
            m
        }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.mul_term(c, e);
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return other.mul_term(c, e);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                terms.push((add_exps(ea, eb), ca * cb));
            }
        }
        Poly::from_terms(terms)
    }

    /// Multiplication by `c * x^e`; order is preserved so no re-sort is needed.
    pub fn mul_term(&self, c: &BigInt, e: &Exps) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(ea, ca)| (add_exps(ea, e), ca * c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(c, &[0; NVARS])
    }

    pub fn div_int_exact(&self, c: &BigInt) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, x)| (*e, x / c)).collect() }
    }

    /// Divides by the monomial `x^e` (which must divide every term).
    pub fn div_mono_exact(&self, e: &Exps) -> Poly {
        Poly { terms: self.terms.iter().map(|(ea, c)| (sub_exps(ea, e), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division; `None` if `other` does not divide `self` in `Z[q,r,z]`.
    pub fn div_exact(&self, other: &Poly) -> Option<Poly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (ea, ca) in &self.terms {
                if !divides(e, ea) {
                    return None;
                }
                let (qt, rm) = ca.div_rem(c);
                if !rm.is_zero() {
                    return None;
                }
                out.push((sub_exps(ea, e), qt));
            }
            return Some(Poly { terms: out });
        }
        let (lb_e, lb_c) = &other.terms[0];
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((le, lc)) = rem.terms.first().cloned() {
            if !divides(lb_e, &le) {
                return None;
            }
            let (qc, r) = lc.div_rem(lb_c);
            if !r.is_zero() {
                return None;
            }
            let qe = sub_exps(&le, lb_e);
            rem = rem.sub(&other.mul_term(&qc, &qe));
            quot.push((qe, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Coefficients with respect to `v`: entry `i` is the coefficient of `v^i`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Exps, BigInt)>> = vec![Vec::new(); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2[v.index()] as usize;
            e2[v.index()] = 0;
            buckets[k].push((e2, c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_coeffs(v: Var, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (k, p) in coeffs.iter().enumerate() {
            for (e, c) in &p.terms {
                let mut e2 = *e;
                e2[v.index()] += k as u32;
                terms.push((e2, c.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Greatest common divisor, normalised to a positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        if self.is_monomial() || other.is_monomial() {
            let (mono, poly) = if self.is_monomial() { (self, other) } else { (other, self) };
            let c = mono.terms[0].1.abs().gcd(&poly.int_content());
            let me = mono.terms[0].0;
            let pe = poly.min_exps();
            let e = [me[0].min(pe[0]), me[1].min(pe[1]), me[2].min(pe[2])];
            return Poly::monomial(c, e);
        }
        if self == other {
            return self.normalize_sign();
        }
        // Pull out common monomial and integer content first.
        let ea = self.min_exps();
        let eb = other.min_exps();
        let em = [ea[0].min(eb[0]), ea[1].min(eb[1]), ea[2].min(eb[2])];
        let ca = self.int_content();
        let cb = other.int_content();
        let c = ca.gcd(&cb);
        let a = self.div_mono_exact(&ea).div_int_exact(&ca);
        let b = other.div_mono_exact(&eb).div_int_exact(&cb);
        let g = gcd_primitive(&a, &b);
        g.mul_term(&c, &em).normalize_sign()
    }

    pub fn normalize_sign(&self) -> Poly {
        if self.leading_coeff_sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Evaluates one variable at an integer, leaving a polynomial in the rest.
    pub fn eval_var_int(&self, v: Var, x: &BigInt) -> Poly {
        let coeffs = self.coeffs_in(v);
        let mut acc = Poly::zero();
        for c in coeffs.iter().rev() {
            acc = acc.scale(x).add(c);
        }
        acc
    }

    /// Total size, used as a pivoting heuristic.
    pub fn size(&self) -> usize {
        self.terms.iter().map(|(_, c)| 1 + c.bits() as usize / 32).sum()
    }
}

/// gcd of two polynomials with trivial integer content and no monomial factor.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.normalize_sign();
    }
    if b.is_zero() {
        return a.normalize_sign();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    if a.is_monomial() || b.is_monomial() {
        return a.gcd(b);
    }
    // Choose a main variable occurring in both; a variable present in only one
    // polynomial can be eliminated through its content.
    for v in Var::ALL {
        let (ua, ub) = (a.uses(v), b.uses(v));
        if ua && !ub {
            let ca = content_in(a, v);
            return ca.gcd(b);
        }
        if ub && !ua {
            let cb = content_in(b, v);
            return a.gcd(&cb);
        }
    }
    let v = *a
        .vars()
        .iter()
        .filter(|v| b.uses(**v))
        .min_by_key(|v| a.degree_in(**v).max(b.degree_in(**v)))
        .expect("nonconstant polynomials share a variable");
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let cg = ca.gcd(&cb);
    let mut pa = a.div_exact(&ca).expect("content divides").coeffs_in(v);
    let mut pb = b.div_exact(&cb).expect("content divides").coeffs_in(v);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !(pb.len() == 1 && pb[0].is_zero()) && !pb.is_empty() {
        let r = prem(&pa, &pb);
        pa = pb;
        if r.iter().all(|p| p.is_zero()) {
            break;
        }
        let rp = Poly::from_coeffs(v, &r);
        let rc = content_in(&rp, v);
        pb = rp.div_exact(&rc).expect("content divides").coeffs_in(v);
    }
    let g = Poly::from_coeffs(v, &pa);
    let gc = content_in(&g, v);
    let g = g.div_exact(&gc).expect("content divides");
    g.mul(&cg).normalize_sign()
}

/// gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &Poly, v: Var) -> Poly {
    let coeffs = p.coeffs_in(v);
    let mut g = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() { c.normalize_sign() } else { g.gcd(c) };
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        Poly::one()
    } else {
        g
    }
}

fn trim(v: &mut Vec<Poly>) {
    while v.len() > 1 && v.last().is_some_and(|p| p.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder of `a` by `b` in `D[v]`, coefficient vectors low-to-high.
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut r: Vec<Poly> = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let n = b.len() - 1;
    let lb = b[n].clone();
    while r.len() > n && !(r.len() == 1 && r[0].is_zero()) {
        let m = r.len() - 1;
        let lr = r[m].clone();
        let shift = m - n;
        for x in r.iter_mut() {
            *x = x.mul(&lb);
        }
        for (i, bi) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&bi.mul(&lr));
        }
        debug_assert!(r[m].is_zero());
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            r.push(Poly::zero());
        }
    }
    r
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let mut parts: Vec<String> = Vec::new();
            let is_const = *e == [0; NVARS];
            if !a.is_one() || is_const {
                parts.push(a.to_string());
            }
            for v in Var::ALL {
                match e[v.index()] {
                    0 => {}
                    1 => parts.push(v.name().to_string()),
                    d => parts.push(format!("{}^{}", v.name(), d)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
