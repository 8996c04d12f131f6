//! The Brauer algebra and the B–M–W algebra on a common diagram basis.
//!
//! Both algebras have a basis indexed by the Brauer diagrams on `2n` points,
//! listed as in [`BrauerDiagram::all`]. For the Brauer algebra the basis
//! element is the diagram itself. For the B–M–W algebra it is `b_d`, the
//! descending tangle with connectivity `d` and self-writhe zero.

use crate::cellular::perm_word;
use crate::diagram::BrauerDiagram;
use crate::exactring::{AlgebraKind, CoeffFraction};
use crate::tangle::{make_descending, Reducer, Sparse};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

pub use crate::hecke::Side;

/// A generator: `T_i`, `T_i^{-1}` or `E_i`. In the Brauer algebra `T_i` and
/// `T_i^{-1}` both stand for the transposition `s_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    T(usize),
    TInv(usize),
    E(usize),
}

impl Gen {
    pub fn index(self) -> usize {
        match self {
            Gen::T(i) | Gen::TInv(i) | Gen::E(i) => i,
        }
    }

    /// Swaps `T_i` and `T_i^{-1}`.
    pub fn flipped(self) -> Gen {
        match self {
            Gen::T(i) => Gen::TInv(i),
            Gen::TInv(i) => Gen::T(i),
            g => g,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::T(i) => write!(f, "T{}", i),
            Gen::TInv(i) => write!(f, "T{}^-1", i),
            Gen::E(i) => write!(f, "E{}", i),
        }
    }
}

/// Coordinates in the diagram basis, keyed by diagram index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<usize, CoeffFraction>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn basis(i: usize) -> Element {
        Element::from_sparse(&[(i, CoeffFraction::one())])
    }

    pub fn from_sparse(v: &[(usize, CoeffFraction)]) -> Element {
        let mut e = Element::zero();
        for (k, c) in v {
            e.add_term(*k, c);
        }
        e
    }

    pub fn terms(&self) -> &BTreeMap<usize, CoeffFraction> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize) -> CoeffFraction {
        self.terms.get(&i).cloned().unwrap_or_else(CoeffFraction::zero)
    }

    pub fn add_term(&mut self, i: usize, c: &CoeffFraction) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(i).or_insert_with(CoeffFraction::zero);
        *e = e.add(c);
        if e.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn add(&self, o: &Element) -> Element {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, o: &Element) -> Element {
        self.add(&o.scale(&CoeffFraction::from_i64(-1)))
    }

    pub fn scale(&self, c: &CoeffFraction) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(k, x)| (*k, x.mul(c))).collect() }
    }

    fn add_scaled(&mut self, v: &Sparse, c: &CoeffFraction) {
        for (k, x) in v {
            self.add_term(*k, &x.mul(c));
        }
    }
}

type ActionKey = (Side, Gen, usize);

pub struct Algebra {
    kind: AlgebraKind,
    n: usize,
    z: CoeffFraction,
    diagrams: Vec<BrauerDiagram>,
    index: HashMap<BrauerDiagram, usize>,
    /// Descending word `W_d` and the scalar `s_d` with `b_d = s_d W_d`.
    lifts: Vec<(Vec<Gen>, CoeffFraction)>,
    reducer: Mutex<Reducer>,
    actions: Mutex<HashMap<ActionKey, Arc<Sparse>>>,
    pub(crate) layers: Mutex<HashMap<(usize, bool), Arc<crate::cellular::Layer>>>,
    pub(crate) cells: Mutex<HashMap<crate::combin::Partition, Arc<crate::cellular::CellModule>>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra").field("kind", &self.kind).field("n", &self.n).finish()
    }
}

impl Algebra {
    pub fn new(kind: AlgebraKind, n: usize) -> Algebra {
        assert!((1..=8).contains(&n), "n must lie in 1..=8");
        let diagrams = BrauerDiagram::all(n);
        let index = diagrams.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        let z = match kind {
            AlgebraKind::Brauer => CoeffFraction::z(),
            AlgebraKind::Bmw => CoeffFraction::bmw_z(),
        };
        let lifts = diagrams
            .iter()
            .map(|d| {
                let (a, b) = d.factor();
                let mut w = perm_word(&a);
                w.extend((0..d.caps()).map(|k| Gen::E(2 * k + 1)));
                w.extend(perm_word(&b));
                match kind {
                    AlgebraKind::Brauer => (w, CoeffFraction::one()),
                    AlgebraKind::Bmw => {
                        let (w, writhe) = make_descending(&w, n);
                        (w, CoeffFraction::var_pow(crate::exactring::Var::R, -writhe as i32))
                    }
                }
            })
            .collect();
        Algebra {
            kind,
            n,
            z,
            diagrams,
            index,
            lifts,
            reducer: Mutex::new(Reducer::new(n)),
            actions: Mutex::new(HashMap::new()),
            layers: Mutex::new(HashMap::new()),
            cells: Mutex::new(HashMap::new()),
        }
    }

    pub fn brauer(n: usize) -> Algebra {
        Algebra::new(AlgebraKind::Brauer, n)
    }

    pub fn bmw(n: usize) -> Algebra {
        Algebra::new(AlgebraKind::Bmw, n)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.diagrams.len()
    }

    /// The loop value `z` (a free parameter for Brauer, `1 + (r - r^{-1})/(q - q^{-1})` for B–M–W).
    pub fn loop_value(&self) -> &CoeffFraction {
        &self.z
    }

    pub fn diagrams(&self) -> &[BrauerDiagram] {
        &self.diagrams
    }

    pub fn diagram(&self, i: usize) -> &BrauerDiagram {
        &self.diagrams[i]
    }

    pub fn index_of(&self, d: &BrauerDiagram) -> usize {
        self.index[d]
    }

    /// The word `W_d` whose multiple `s_d W_d` is the basis element `b_d`.
    pub fn lift(&self, i: usize) -> (&[Gen], &CoeffFraction) {
        let (w, s) = &self.lifts[i];
        (w, s)
    }

    pub fn zero(&self) -> Element {
        Element::zero()
    }

    pub fn one(&self) -> Element {
        Element::basis(self.index[&BrauerDiagram::identity(self.n)])
    }

    pub fn check_gen(&self, g: Gen) -> bool {
        (1..self.n).contains(&g.index())
    }

    pub fn gen(&self, g: Gen) -> Element {
        self.mul_gen(&self.one(), g, Side::Right)
    }

    /// The product of the generators in `word`, read left to right.
    pub fn word(&self, word: &[Gen]) -> Element {
        word.iter().fold(self.one(), |acc, &g| self.mul_gen(&acc, g, Side::Right))
    }

    fn action(&self, side: Side, g: Gen, i: usize) -> Arc<Sparse> {
        assert!(self.check_gen(g), "generator {} out of range for n={}", g, self.n);
        let key = (side, g, i);
        if let Some(v) = self.actions.lock().expect("cache lock").get(&key) {
            return v.clone();
        }
        let v = match self.kind {
            AlgebraKind::Brauer => {
                let gd = match g {
                    Gen::T(k) | Gen::TInv(k) => BrauerDiagram::s(self.n, k),
                    Gen::E(k) => BrauerDiagram::e(self.n, k),
                };
                let d = &self.diagrams[i];
                let (p, loops) = match side {
                    Side::Right => d.compose(&gd),
                    Side::Left => gd.compose(d),
                };
                vec![(self.index[&p], self.z.pow(loops as i32).expect("z is nonzero"))]
            }
            AlgebraKind::Bmw => {
                let (w, s) = &self.lifts[i];
                let mut word = Vec::with_capacity(w.len() + 1);
                match side {
                    Side::Right => {
                        word.extend_from_slice(w);
                        word.push(g);
                    }
                    Side::Left => {
                        word.push(g);
                        word.extend_from_slice(w);
                    }
                }
                let v = self.reducer.lock().expect("reducer lock").reduce(&word, &self.index);
                v.into_iter().map(|(k, c)| (k, c.mul(s))).collect()
            }
        };
        let v = Arc::new(v);
        self.actions.lock().expect("cache lock").insert(key, v.clone());
        v
    }

    /// `x g` or `g x`.
    pub fn mul_gen(&self, x: &Element, g: Gen, side: Side) -> Element {
        let mut out = Element::zero();
        for (i, c) in x.terms() {
            out.add_scaled(&self.action(side, g, *i), c);
        }
        out
    }

    pub fn mul_word(&self, x: &Element, word: &[Gen], side: Side) -> Element {
        match side {
            Side::Right => word.iter().fold(x.clone(), |acc, &g| self.mul_gen(&acc, g, Side::Right)),
            Side::Left => word.iter().rev().fold(x.clone(), |acc, &g| self.mul_gen(&acc, g, Side::Left)),
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (i, c) in b.terms() {
            match self.kind {
                AlgebraKind::Brauer => {
                    for (j, x) in a.terms() {
                        let (p, loops) = self.diagrams[*j].compose(&self.diagrams[*i]);
                        let k = x.mul(c).mul(&self.z.pow(loops as i32).expect("z is nonzero"));
                        out.add_term(self.index[&p], &k);
                    }
                }
                AlgebraKind::Bmw => {
                    let (w, s) = &self.lifts[*i];
                    out = out.add(&self.mul_word(a, w, Side::Right).scale(&c.mul(s)));
                }
            }
        }
        out
    }

    /// The Jucys–Murphy element `L_k`: `L_1 = 1`, `L_k = T_{k-1} L_{k-1} T_{k-1}` for B–M–W,
    /// and `L_1 = 0`, `L_k = s_{k-1} - E_{k-1} + s_{k-1} L_{k-1} s_{k-1}` for Brauer.
    pub fn jm(&self, k: usize) -> Element {
        assert!((1..=self.n).contains(&k), "L_{} out of range for n={}", k, self.n);
        let mut l = match self.kind {
            AlgebraKind::Bmw => self.one(),
            AlgebraKind::Brauer => self.zero(),
        };
        for i in 1..k {
            let t = Gen::T(i);
            let conj = self.mul_gen(&self.mul_gen(&l, t, Side::Left), t, Side::Right);
            l = match self.kind {
                AlgebraKind::Bmw => conj,
                AlgebraKind::Brauer => conj.add(&self.gen(t)).sub(&self.gen(Gen::E(i))),
            };
        }
        l
    }

    /// The anti-involution fixing every generator.
    pub fn star(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (i, c) in x.terms() {
            match self.kind {
                AlgebraKind::Brauer => out.add_term(self.index[&self.diagrams[*i].flip()], c),
                AlgebraKind::Bmw => {
                    let (w, s) = &self.lifts[*i];
                    let rev: Vec<Gen> = w.iter().rev().copied().collect();
                    let v = self.reducer.lock().expect("reducer lock").reduce(&rev, &self.index);
                    out.add_scaled(&v, &c.mul(s));
                }
            }
        }
        out
    }

    pub fn format(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let sym = match self.kind {
            AlgebraKind::Brauer => "",
            AlgebraKind::Bmw => "b",
        };
        x.terms().iter().map(|(i, c)| format!("({})*{}{}", c, sym, self.diagrams[*i])).collect::<Vec<_>>().join(" + ")
    }
}
