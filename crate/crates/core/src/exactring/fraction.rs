//! Reduced fractions of integer polynomials.

use super::poly::{Poly, Var, NVARS};
use super::RingError;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::fmt;
use std::str::FromStr;

/// An element of `Q(q, r, z)` stored as a reduced quotient of integer polynomials.
///
/// Numerator and denominator are coprime and the denominator has a positive
/// leading coefficient, so equal fractions have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffFraction {
    num: Poly,
    den: Poly,
}

impl Default for CoeffFraction {
    fn default() -> Self {
        CoeffFraction::zero()
    }
}

impl CoeffFraction {
    pub fn zero() -> Self {
        CoeffFraction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        CoeffFraction { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_i64(c: i64) -> Self {
        CoeffFraction { num: Poly::from_i64(c), den: Poly::one() }
    }

    pub fn from_bigint(c: BigInt) -> Self {
        CoeffFraction { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        CoeffFraction { num: p, den: Poly::one() }
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn r() -> Self {
        Self::var(Var::R)
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    /// `v^k` for any integer `k`.
    pub fn var_pow(v: Var, k: i32) -> Self {
        let m = Poly::monomial(BigInt::one(), Poly::var_exps(v, k.unsigned_abs()));
        if k >= 0 {
            Self::from_poly(m)
        } else {
            CoeffFraction { num: Poly::one(), den: m }
        }
    }

    /// Builds `num/den`, reducing to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return CoeffFraction { num, den };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if d.leading_coeff_sign() < 0 {
            n = n.neg();
            d = d.neg();
        }
        CoeffFraction { num: n, den: d }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.num.as_constant().is_some() && self.den.as_constant().is_some()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.num.uses(v) || self.den.uses(v)
    }

    pub fn neg(&self) -> Self {
        CoeffFraction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::reduce(self.num.add(&o.num), self.den.clone());
        }
        if self.den.is_one() {
            return CoeffFraction { num: self.num.mul(&o.den).add(&o.num), den: o.den.clone() };
        }
        if o.den.is_one() {
            return CoeffFraction { num: o.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        let g = self.den.gcd(&o.den);
        if g.is_one() {
            // Coprime denominators: the sum is already reduced.
            let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            let den = self.den.mul(&o.den);
            return Self::reduce_sign(num, den);
        }
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&b).add(&o.num.mul(&a));
        if num.is_zero() {
            return Self::zero();
        }
        let h = num.gcd(&g);
        let (num, g2) = if h.is_one() {
            (num, g)
        } else {
            (num.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides"))
        };
        Self::reduce_sign(num, a.mul(&b).mul(&g2))
    }

    fn reduce_sign(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.leading_coeff_sign() < 0 {
            CoeffFraction { num: num.neg(), den: den.neg() }
        } else {
            CoeffFraction { num, den }
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).unwrap() };
        let d2 = if g1.is_one() { o.den.clone() } else { o.den.div_exact(&g1).unwrap() };
        let n2 = if g2.is_one() { o.num.clone() } else { o.num.div_exact(&g2).unwrap() };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).unwrap() };
        Self::reduce_sign(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduce_sign(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, RingError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self, RingError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(CoeffFraction { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.mul(&Self::from_i64(c))
    }

    /// Maps `x` to `x` with `q` replaced by `q^{-1}` and `r` by `r^{-1}`.
    pub fn bar(&self) -> Self {
        let sub = |p: &Poly| -> CoeffFraction {
            let mut acc = CoeffFraction::zero();
            for (e, c) in p.terms() {
                let mut t = CoeffFraction::from_bigint(c.clone());
                t = t.mul(&CoeffFraction::var_pow(Var::Q, -(e[0] as i32)));
                t = t.mul(&CoeffFraction::var_pow(Var::R, -(e[1] as i32)));
                t = t.mul(&CoeffFraction::var_pow(Var::Z, e[2] as i32));
                acc = acc.add(&t);
            }
            acc
        };
        sub(&self.num).div(&sub(&self.den)).expect("bar of a nonzero denominator")
    }

    /// Size heuristic used for pivot selection.
    pub fn size(&self) -> usize {
        self.num.size() + self.den.size()
    }

    /// `q - q^{-1}`.
    pub fn delta() -> Self {
        CoeffFraction::q().sub(&CoeffFraction::var_pow(Var::Q, -1))
    }

    /// The loop value `z = 1 + (r - r^{-1})/(q - q^{-1})` of the Kauffman skein.
    pub fn bmw_z() -> Self {
        let rr = CoeffFraction::r().sub(&CoeffFraction::var_pow(Var::R, -1));
        CoeffFraction::one().add(&rr.div(&Self::delta()).expect("delta is nonzero"))
    }

    /// Substitutes every variable by a fraction (all simultaneously).
    pub fn substitute(&self, images: &[Option<CoeffFraction>; NVARS]) -> Result<Self, RingError> {
        let n = eval_poly(&self.num, images);
        let d = eval_poly(&self.den, images);
        if d.is_zero() {
            return Err(RingError::Pole(self.to_string()));
        }
        n.div(&d)
    }
}

/// Evaluates a polynomial with some variables replaced, others left symbolic.
pub(crate) fn eval_poly(p: &Poly, images: &[Option<CoeffFraction>; NVARS]) -> CoeffFraction {
    let mut powers: Vec<Vec<CoeffFraction>> = Vec::with_capacity(NVARS);
    for v in Var::ALL {
        let base = images[v.index()].clone().unwrap_or_else(|| CoeffFraction::var(v));
        let d = p.degree_in(v) as usize;
        let mut pw = Vec::with_capacity(d + 1);
        pw.push(CoeffFraction::one());
        for i in 1..=d {
            pw.push(pw[i - 1].mul(&base));
        }
        powers.push(pw);
    }
    let mut acc = CoeffFraction::zero();
    for (e, c) in p.terms() {
        let mut t = CoeffFraction::from_bigint(c.clone());
        for i in 0..NVARS {
            if e[i] > 0 {
                t = t.mul(&powers[i][e[i] as usize]);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

fn needs_parens(p: &Poly) -> bool {
    p.terms().len() > 1
}

impl fmt::Display for CoeffFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = self.num.to_string();
        let d = self.den.to_string();
        let single_neg = !needs_parens(&self.num) && self.num.leading_coeff_sign() < 0;
        let ns = if needs_parens(&self.num) || single_neg && n.contains('*') { format!("({})", n) } else { n };
        let ds = if needs_parens(&self.den) || d.contains('*') || d.contains('^') { format!("({})", d) } else { d };
        write!(f, "{}/{}", ns, ds)
    }
}

impl FromStr for CoeffFraction {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).parse()
    }
}

/// Parses an expression such as `(q+r)*(q*r-1)/(r*(q+1)*(q-1))`.
pub fn frac(s: &str) -> CoeffFraction {
    s.parse().unwrap_or_else(|e| panic!("invalid fraction {:?}: {}", s, e))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(Var),
    Op(char),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    err: Option<String>,
}

impl Parser {
    fn new(s: &str) -> Self {
        let mut toks = Vec::new();
        let mut err = None;
        let cs: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < cs.len() {
            let ch = cs[i];
            if ch.is_whitespace() {
                i += 1;
            } else if ch.is_ascii_digit() {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = cs[st..i].iter().collect();
                toks.push(Tok::Num(lit.parse().expect("digits")));
            } else if let Some(v) = Var::from_name(&ch.to_string()) {
                toks.push(Tok::Var(v));
                i += 1;
            } else if "+-*/^()".contains(ch) {
                toks.push(Tok::Op(ch));
                i += 1;
            } else if ch == '\u{2212}' {
                toks.push(Tok::Op('-'));
                i += 1;
            } else {
                err.get_or_insert(format!("unexpected character {:?}", ch));
                i += 1;
            }
        }
        Parser { toks, pos: 0, err }
    }

    fn fail<T>(&self, msg: &str) -> Result<T, RingError> {
        Err(RingError::Parse(msg.to_string()))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse(mut self) -> Result<CoeffFraction, RingError> {
        if let Some(e) = self.err.take() {
            return Err(RingError::Parse(e));
        }
        if self.toks.is_empty() {
            return self.fail("empty expression");
        }
        let v = self.expr()?;
        if self.pos != self.toks.len() {
            return self.fail("trailing input");
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<CoeffFraction, RingError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<CoeffFraction, RingError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                acc = acc.div(&self.unary()?)?;
            } else if matches!(self.peek(), Some(Tok::Var(_)) | Some(Tok::Op('('))) {
                acc = acc.mul(&self.unary()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<CoeffFraction, RingError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let k: i32 = n.try_into().map_err(|_| RingError::Parse("exponent too large".into()))?;
                    return base.pow(if neg { -k } else { k });
                }
                _ => return self.fail("expected integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<CoeffFraction, RingError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(CoeffFraction::from_bigint(n))
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(CoeffFraction::var(v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.fail("missing ')'");
                }
                Ok(v)
            }
            _ => self.fail("expected number, variable or '('"),
        }
    }
}

impl CoeffFraction {
    /// True when the numerator is a single term with negative coefficient.
    pub fn is_negative_monomial(&self) -> bool {
        self.num.is_monomial() && self.num.terms()[0].1.is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_division_is_one() {
        let d = CoeffFraction::delta();
        assert!(d.div(&d).unwrap().is_one());
    }

    #[test]
    fn bmw_loop_value_matches_factored_form() {
        let z = frac("(q+r)*(q*r-1)/(r*(q+1)*(q-1))");
        assert_eq!(CoeffFraction::bmw_z(), z);
    }

    #[test]
    fn cubic_expansion() {
        let z = CoeffFraction::z();
        let one = CoeffFraction::one();
        let p = z.sub(&one).mul(&z.sub(&one)).mul(&z.add(&CoeffFraction::from_i64(2)));
        assert_eq!(p, frac("z^3-3*z+2"));
        assert_eq!(p.to_string(), "z^3-3*z+2");
    }

    #[test]
    fn display_round_trip() {
        for s in ["(q^2-1)/q", "-1/(q*r)", "q^-3", "(1-q^2)/(q*r)", "-q/(r+1)", "3/2", "-3/2"] {
            let x = frac(s);
            assert_eq!(frac(&x.to_string()), x, "{} -> {}", s, x);
        }
        assert_eq!(frac("(q^2-1)/q").to_string(), "(q^2-1)/q");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(CoeffFraction::one().div(&CoeffFraction::zero()), Err(RingError::DivisionByZero));
        assert!("1/(q-q)".parse::<CoeffFraction>().is_err());
    }

    #[test]
    fn bar_inverts_q_and_r() {
        assert_eq!(frac("q^2*r").bar(), frac("q^-2*r^-1"));
        assert_eq!(CoeffFraction::bmw_z().bar(), CoeffFraction::bmw_z());
    }
}
