//! The Iwahori–Hecke algebra `H_m(q^2)` with basis `X_w`, its Murphy basis,
//! Specht modules and the Jucys–Murphy elements `D_i`.
//!
//! The parameter is any [`CoeffFraction`]; `q = 1` gives the group algebra of
//! the symmetric group, which the Brauer side uses.

use crate::combin::{enumerate_std, semistandard_set, type_map, Partition, Perm, SemiStdTableau, Tableau};
use crate::exactring::linalg::Matrix;
use crate::exactring::{CoeffFraction, Var};
use std::collections::BTreeMap;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("generator index {i} out of range for H_{m}")]
    IndexOutOfRange { i: usize, m: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A finitely supported map `S_m -> coefficients`, read as `sum a_w X_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    m: usize,
    terms: BTreeMap<Perm, CoeffFraction>,
}

impl HeckeElement {
    pub fn zero(m: usize) -> Self {
        HeckeElement { m, terms: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::basis(&Perm::identity(m))
    }

    pub fn basis(w: &Perm) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), CoeffFraction::one());
        HeckeElement { m: w.n(), terms }
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &CoeffFraction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Perm) -> CoeffFraction {
        self.terms.get(w).cloned().unwrap_or_else(CoeffFraction::zero)
    }

    pub fn add_term(&mut self, w: Perm, c: &CoeffFraction) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let x = o.get().add(c);
                if x.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = x;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&CoeffFraction::from_i64(-1)))
    }

    pub fn scale(&self, c: &CoeffFraction) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        HeckeElement { m: self.m, terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect() }
    }
}

/// Index of a Murphy basis element `c_{st}` with `s, t` standard of shape `shape`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MurphyIndex {
    pub shape: Partition,
    pub s: Tableau,
    pub t: Tableau,
}

/// Coordinates with respect to the Murphy basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MurphyCoords {
    pub entries: BTreeMap<MurphyIndex, CoeffFraction>,
}

impl MurphyCoords {
    pub fn get(&self, shape: &Partition, s: &Tableau, t: &Tableau) -> CoeffFraction {
        self.entries
            .get(&MurphyIndex { shape: shape.clone(), s: s.clone(), t: t.clone() })
            .cloned()
            .unwrap_or_else(CoeffFraction::zero)
    }
}

struct MurphyData {
    perms: Vec<Perm>,
    pos: BTreeMap<Perm, usize>,
    index: Vec<MurphyIndex>,
    /// Inverse of the matrix whose columns are the `c_{st}` in `X_w` coordinates.
    inverse: Matrix,
}

/// `H_m(q^2)`: generators `X_1..X_{m-1}` with `(X_i - q)(X_i + q^{-1}) = 0`.
pub struct Hecke {
    m: usize,
    q: CoeffFraction,
    delta: CoeffFraction,
    murphy: OnceLock<MurphyData>,
}

impl Hecke {
    pub fn new(m: usize, q: CoeffFraction) -> Self {
        let delta = q.sub(&q.inv().expect("q must be invertible"));
        Hecke { m, q, delta, murphy: OnceLock::new() }
    }

    /// `q` an indeterminate.
    pub fn generic(m: usize) -> Self {
        Self::new(m, CoeffFraction::var(Var::Q))
    }

    /// `q = 1`: the group algebra of `S_m`.
    pub fn classical(m: usize) -> Self {
        Self::new(m, CoeffFraction::one())
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> &CoeffFraction {
        &self.q
    }

    pub fn gen(&self, i: usize) -> HeckeElement {
        HeckeElement::basis(&Perm::simple(self.m, i))
    }

    /// Multiplies by `X_i` on the given side.
    pub fn mul_gen(&self, h: &HeckeElement, i: usize, side: Side) -> Result<HeckeElement, HeckeError> {
        if i == 0 || i >= self.m {
            return Err(HeckeError::IndexOutOfRange { i, m: self.m });
        }
        let mut out = HeckeElement::zero(self.m);
        for (w, c) in &h.terms {
            let (ws, down) = match side {
                Side::Right => (w.mul_simple(i), w.has_right_descent(i)),
                Side::Left => (w.simple_mul(i), w.has_left_descent(i)),
            };
            out.add_term(ws, c);
            if down {
                out.add_term(w.clone(), &c.mul(&self.delta));
            }
        }
        Ok(out)
    }

    fn right_word(&self, h: &HeckeElement, word: &[usize]) -> HeckeElement {
        word.iter().fold(h.clone(), |acc, &i| self.mul_gen(&acc, i, Side::Right).expect("valid word"))
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(self.m);
        for (w, c) in &b.terms {
            out = out.add(&self.right_word(a, &w.reduced_word()).scale(c));
        }
        out
    }

    /// `X_w -> X_{w^{-1}}`.
    pub fn star(&self, h: &HeckeElement) -> HeckeElement {
        HeckeElement { m: h.m, terms: h.terms.iter().map(|(w, c)| (w.inverse(), c.clone())).collect() }
    }

    /// Row stabiliser of `t^mu` in `S_m`.
    pub fn row_stabilizer(mu: &Partition) -> Vec<Perm> {
        let m = mu.size();
        let mut out = vec![Perm::identity(m)];
        let mut start = 0;
        for &p in mu.parts() {
            let block: Vec<Perm> = Perm::all(p).into_iter().map(|w| w.shift(start, m)).collect();
            out = out.iter().flat_map(|a| block.iter().map(move |b| a.mul(b))).collect();
            start += p;
        }
        out.sort();
        out
    }

    /// `c_mu = sum_{w in S_mu} q^{l(w)} X_w`.
    pub fn c_mu(&self, mu: &Partition) -> HeckeElement {
        assert_eq!(mu.size(), self.m, "c_mu needs a partition of m");
        let mut out = HeckeElement::zero(self.m);
        for w in Self::row_stabilizer(mu) {
            let c = self.q.pow(w.length() as i32).expect("q invertible");
            out.add_term(w, &c);
        }
        out
    }

    /// `D_1 = 1`, `D_i = X_{i-1} D_{i-1} X_{i-1}`.
    pub fn jm(&self, i: usize) -> HeckeElement {
        assert!(i >= 1 && i <= self.m);
        let mut d = HeckeElement::one(self.m);
        for k in 2..=i {
            d = self.mul_gen(&d, k - 1, Side::Left).expect("in range");
            d = self.mul_gen(&d, k - 1, Side::Right).expect("in range");
        }
        d
    }

    /// `sum_{k<i} X_{(k,i)}`.
    pub fn jm_tilde(&self, i: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.m);
        for k in 1..i {
            let mut img: Vec<u8> = (1..=self.m as u8).collect();
            img.swap(k - 1, i - 1);
            out.add_term(Perm::from_images(img), &CoeffFraction::one());
        }
        out
    }

    /// `c_{st} = X_{d(s)}^* c_lambda X_{d(t)}`.
    pub fn murphy(&self, s: &Tableau, t: &Tableau) -> HeckeElement {
        let lambda = s.shape();
        assert_eq!(lambda, t.shape());
        let c = self.c_mu(&lambda);
        let mut h = self.right_word(&c, &t.perm().reduced_word());
        for &i in s.perm().reduced_word().iter() {
            h = self.mul_gen(&h, i, Side::Left).expect("in range");
        }
        h
    }

    fn murphy_data(&self) -> &MurphyData {
        self.murphy.get_or_init(|| {
            let perms = Perm::all(self.m);
            let pos: BTreeMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            let mut index = Vec::new();
            for shape in Partition::all(self.m) {
                let tabs = enumerate_std(&shape, self.m).expect("partition of m");
                for s in &tabs {
                    for t in &tabs {
                        index.push(MurphyIndex { shape: shape.clone(), s: s.clone(), t: t.clone() });
                    }
                }
            }
            let n = perms.len();
            let mut mat = Matrix::zeros(n, n);
            for (j, ix) in index.iter().enumerate() {
                for (w, c) in self.murphy(&ix.s, &ix.t).terms() {
                    mat[(pos[w], j)] = c.clone();
                }
            }
            let inverse = mat.inverse().expect("the Murphy basis is a basis");
            MurphyData { perms, pos, index, inverse }
        })
    }

    /// All Murphy indices, shapes most dominant first.
    pub fn murphy_index(&self) -> &[MurphyIndex] {
        &self.murphy_data().index
    }

    /// Coordinates of `h` in the Murphy basis.
    pub fn to_murphy(&self, h: &HeckeElement) -> MurphyCoords {
        let data = self.murphy_data();
        let mut entries = BTreeMap::new();
        for (row, ix) in data.index.iter().enumerate() {
            let mut acc = CoeffFraction::zero();
            for (w, c) in &h.terms {
                let a = &data.inverse[(row, data.pos[w])];
                if !a.is_zero() {
                    acc = acc.add(&a.mul(c));
                }
            }
            if !acc.is_zero() {
                entries.insert(ix.clone(), acc);
            }
        }
        MurphyCoords { entries }
    }

    pub fn from_murphy(&self, coords: &MurphyCoords) -> HeckeElement {
        let mut out = HeckeElement::zero(self.m);
        for (ix, c) in &coords.entries {
            out = out.add(&self.murphy(&ix.s, &ix.t).scale(c));
        }
        out
    }

    /// All permutations of `S_m` in the order used for dense coordinates.
    pub fn perms(&self) -> &[Perm] {
        &self.murphy_data().perms
    }

    /// `c_{St} = sum_{s : mu(s) = S} q^{l(d(s))} c_{st}`.
    pub fn semistd_elt(&self, big_s: &SemiStdTableau, t: &Tableau) -> Result<HeckeElement, HeckeError> {
        if big_s.shape != t.shape() {
            return Err(HeckeError::Shape(format!("{} vs {}", big_s.shape, t.shape())));
        }
        let mut out = HeckeElement::zero(self.m);
        for s in enumerate_std(&big_s.shape, self.m).map_err(|e| HeckeError::Shape(e.to_string()))? {
            if type_map(&s, &big_s.ty).map_err(|e| HeckeError::Shape(e.to_string()))? == *big_s {
                let c = self.q.pow(s.perm().length() as i32).expect("q invertible");
                out = out.add(&self.murphy(&s, t).scale(&c));
            }
        }
        Ok(out)
    }

    /// The basis `{c_{St}}` of the permutation module `M^mu`.
    pub fn permutation_module_basis(&self, mu: &Partition) -> Vec<HeckeElement> {
        let mut out = Vec::new();
        for nu in Partition::all(self.m) {
            let sets = semistandard_set(&nu, mu).expect("sizes agree");
            if sets.is_empty() {
                continue;
            }
            for t in enumerate_std(&nu, self.m).expect("partition of m") {
                for big_s in &sets {
                    out.push(self.semistd_elt(big_s, &t).expect("shapes agree"));
                }
            }
        }
        out
    }

    /// Matrix of right multiplication by `h` on the Specht module `C^lambda`
    /// with basis `c_{t^lambda t}`; column `j` holds the image of basis vector `j`.
    pub fn specht_action(&self, lambda: &Partition, h: &HeckeElement) -> Result<Matrix, HeckeError> {
        let tabs = enumerate_std(lambda, self.m).map_err(|e| HeckeError::Shape(e.to_string()))?;
        let top = &tabs[0];
        let mut mat = Matrix::zeros(tabs.len(), tabs.len());
        for (j, t) in tabs.iter().enumerate() {
            let v = self.mul(&self.murphy(top, t), h);
            let coords = self.to_murphy(&v);
            for (ix, c) in &coords.entries {
                if ix.shape == *lambda {
                    if ix.s != *top {
                        return Err(HeckeError::Shape(format!("component outside c_lambda H at {:?}", ix)));
                    }
                    let i = tabs.iter().position(|x| *x == ix.t).expect("standard tableau");
                    mat[(i, j)] = c.clone();
                } else if !ix.shape.dominates(lambda) {
                    return Err(HeckeError::Shape(format!("shape {} does not dominate {}", ix.shape, lambda)));
                }
            }
        }
        Ok(mat)
    }
}
