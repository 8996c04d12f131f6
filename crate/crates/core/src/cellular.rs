//! Cellular coordinates, cell modules and their bilinear forms.
//!
//! Modulo the ideal spanned by diagrams with more than `f` caps, the elements
//! `T_v^* E_1 E_3 ... E_{2f-1} T_w T_u` (`v, u` in `D_{f,n}`, `w` permuting
//! `2f+1..n`) form a basis, and `E_1 ... E_{2f-1} T_w ↦ X_ŵ` identifies each
//! `(v, u)` block with the Hecke algebra `H_{n-2f}` (at `q = 1` for Brauer).
//! Cellular coordinates are read off from Murphy coordinates block by block.

use crate::algebra::{Algebra, Element, Gen, Side};
use crate::combin::{coset_reps, enumerate_std, layer_of, Partition, Perm, Tableau, TableauError};
use crate::exactring::linalg::Matrix;
use crate::exactring::{AlgebraKind, CoeffFraction, RingError};
use crate::hecke::{Hecke, HeckeElement};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CellError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("element is not in the expected submodule: {0}")]
    Outside(String),
    #[error("cell module has no straightening data; use Algebra::cell_coords")]
    NoLayer,
    #[error("cached action matrices do not fit S^{0}")]
    BadCache(Partition),
}

pub(crate) fn perm_word(w: &Perm) -> Vec<Gen> {
    w.reduced_word().into_iter().map(Gen::T).collect()
}

/// Word of `T_w^* = T_{w^{-1}}`.
pub(crate) fn perm_word_star(w: &Perm) -> Vec<Gen> {
    let mut v = perm_word(w);
    v.reverse();
    v
}

pub(crate) fn e_chain(f: usize) -> Vec<Gen> {
    (0..f).map(|k| Gen::E(2 * k + 1)).collect()
}

/// Minimal number of crossings of a diagram drawn in a box.
fn crossing_number(d: &crate::diagram::BrauerDiagram) -> usize {
    let n = d.n();
    let pos = |p: usize| if p < n { p } else { 3 * n - 1 - p };
    let arcs: Vec<(usize, usize)> = (0..2 * n)
        .filter(|&p| p < d.partner(p))
        .map(|p| {
            let (a, b) = (pos(p), pos(d.partner(p)));
            (a.min(b), a.max(b))
        })
        .collect();
    let mut c = 0;
    for (i, &(a, b)) in arcs.iter().enumerate() {
        for &(x, y) in &arcs[i + 1..] {
            if (a < x && x < b) != (a < y && y < b) {
                c += 1;
            }
        }
    }
    c
}

enum Solver {
    /// Each column has a unique entry of maximal crossing number; distinct columns lead at distinct rows.
    Triangular {
        lead: HashMap<usize, usize>,
    },
    Dense {
        rows: HashMap<usize, usize>,
        inverse: Matrix,
    },
}

/// The basis of layer `f` modulo layer `f+1`, either two-sided or restricted to `v = 1`.
pub(crate) struct Layer {
    f: usize,
    hecke: Hecke,
    uppers: Vec<Perm>,
    lefts: Vec<Perm>,
    cosets: Vec<Perm>,
    caps: Vec<usize>,
    cross: Vec<usize>,
    cols: Vec<Vec<(usize, CoeffFraction)>>,
    solver: Solver,
}

impl Layer {
    fn new(alg: &Algebra, f: usize, two_sided: bool) -> Layer {
        let n = alg.n();
        let m = n - 2 * f;
        let hecke = match alg.kind() {
            AlgebraKind::Bmw => Hecke::generic(m),
            AlgebraKind::Brauer => Hecke::classical(m),
        };
        let uppers = Perm::all(m);
        let cosets = coset_reps(f, n);
        let lefts = if two_sided { cosets.clone() } else { vec![Perm::identity(n)] };
        let caps: Vec<usize> = alg.diagrams().iter().map(|d| d.caps()).collect();
        let cross: Vec<usize> = alg.diagrams().iter().map(crossing_number).collect();
        let mut cols = Vec::new();
        for v in &lefts {
            for w in &uppers {
                for u in &cosets {
                    let mut word = perm_word_star(v);
                    word.extend(e_chain(f));
                    word.extend(perm_word(&w.shift(2 * f, n)));
                    word.extend(perm_word(u));
                    let x = alg.word(&word);
                    cols.push(x.terms().iter().filter(|(k, _)| caps[**k] == f).map(|(k, c)| (*k, c.clone())).collect());
                }
            }
        }
        let solver = Layer::triangular(&cols, &cross).unwrap_or_else(|| Layer::dense(&cols));
        Layer { f, hecke, uppers, lefts, cosets, caps, cross, cols, solver }
    }

    fn triangular(cols: &[Vec<(usize, CoeffFraction)>], cross: &[usize]) -> Option<Solver> {
        let mut lead = HashMap::new();
        for (j, col) in cols.iter().enumerate() {
            let top = col.iter().map(|(k, _)| cross[*k]).max()?;
            let at_top: Vec<usize> = col.iter().filter(|(k, _)| cross[*k] == top).map(|(k, _)| *k).collect();
            if at_top.len() != 1 || lead.insert(at_top[0], j).is_some() {
                return None;
            }
        }
        Some(Solver::Triangular { lead })
    }

    fn dense(cols: &[Vec<(usize, CoeffFraction)>]) -> Solver {
        let mut rows = HashMap::new();
        for col in cols {
            for (k, _) in col {
                let r = rows.len();
                rows.entry(*k).or_insert(r);
            }
        }
        assert_eq!(rows.len(), cols.len(), "layer basis is not square");
        let mut p = Matrix::zeros(cols.len(), cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (k, c) in col {
                p[(rows[k], j)] = c.clone();
            }
        }
        Solver::Dense { rows, inverse: p.inverse().expect("layer basis is invertible") }
    }

    #[cfg(test)]
    pub(crate) fn is_triangular(&self) -> bool {
        matches!(self.solver, Solver::Triangular { .. })
    }

    fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Coordinates of `x` (modulo layer `f+1`) in the layer basis.
    fn solve(&self, x: &Element) -> Result<BTreeMap<usize, CoeffFraction>, CellError> {
        let mut out = BTreeMap::new();
        let mut rest: BTreeMap<(usize, usize), CoeffFraction> = BTreeMap::new();
        for (k, c) in x.terms() {
            match self.caps[*k].cmp(&self.f) {
                std::cmp::Ordering::Greater => {}
                std::cmp::Ordering::Less => {
                    return Err(CellError::Outside(format!(
                        "diagram with {} caps below layer {}",
                        self.caps[*k], self.f
                    )))
                }
                std::cmp::Ordering::Equal => {
                    rest.insert((self.cross[*k], *k), c.clone());
                }
            }
        }
        match &self.solver {
            Solver::Triangular { lead } => {
                while let Some(((_, k), c)) = rest.pop_last() {
                    let j = *lead
                        .get(&k)
                        .ok_or_else(|| CellError::Outside(format!("diagram {} off the layer basis", k)))?;
                    let col = &self.cols[j];
                    let pivot = &col.iter().find(|(r, _)| *r == k).expect("leading entry").1;
                    let a = c.div(pivot)?;
                    for (r, p) in col {
                        if *r == k {
                            continue;
                        }
                        let key = (self.cross[*r], *r);
                        let e = rest.entry(key).or_insert_with(CoeffFraction::zero);
                        *e = e.sub(&a.mul(p));
                        if e.is_zero() {
                            rest.remove(&key);
                        }
                    }
                    out.insert(j, a);
                }
            }
            Solver::Dense { rows, inverse } => {
                let mut b = vec![CoeffFraction::zero(); self.ncols()];
                for ((_, k), c) in rest {
                    let r = *rows
                        .get(&k)
                        .ok_or_else(|| CellError::Outside(format!("diagram {} off the layer basis", k)))?;
                    b[r] = c;
                }
                for j in 0..self.ncols() {
                    let mut acc = CoeffFraction::zero();
                    for (r, x) in b.iter().enumerate() {
                        if !x.is_zero() {
                            acc = acc.add(&inverse[(j, r)].mul(x));
                        }
                    }
                    if !acc.is_zero() {
                        out.insert(j, acc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Splits `x` into Hecke elements indexed by `(v, u)` positions.
    fn blocks(&self, x: &Element) -> Result<BTreeMap<(usize, usize), HeckeElement>, CellError> {
        let (nw, nu) = (self.uppers.len(), self.cosets.len());
        let mut out: BTreeMap<(usize, usize), HeckeElement> = BTreeMap::new();
        for (j, c) in self.solve(x)? {
            let (vi, wi, ui) = (j / (nw * nu), (j / nu) % nw, j % nu);
            let h = out.entry((vi, ui)).or_insert_with(|| HeckeElement::zero(self.uppers[0].n()));
            h.add_term(self.uppers[wi].clone(), &c);
        }
        Ok(out)
    }
}

impl Algebra {
    pub(crate) fn layer(&self, f: usize, two_sided: bool) -> Arc<Layer> {
        if let Some(l) = self.layers.lock().expect("layer cache").get(&(f, two_sided)) {
            return l.clone();
        }
        let l = Arc::new(Layer::new(self, f, two_sided));
        self.layers.lock().expect("layer cache").entry((f, two_sided)).or_insert(l).clone()
    }

    /// The cell module `S^lambda`, built once and cached.
    pub fn cell_module(&self, lambda: &Partition) -> Result<Arc<CellModule>, CellError> {
        if let Some(c) = self.cells.lock().expect("cell cache").get(lambda) {
            return Ok(c.clone());
        }
        let c = Arc::new(CellModule::new(self, lambda)?);
        Ok(self.cells.lock().expect("cell cache").entry(lambda.clone()).or_insert(c).clone())
    }

    /// Installs `S^lambda` from previously computed generator matrices.
    pub fn restore_cell_module(
        &self,
        lambda: &Partition,
        actions: BTreeMap<Gen, Matrix>,
    ) -> Result<Arc<CellModule>, CellError> {
        let n = self.n();
        let f = layer_of(lambda, n)?;
        let tableaux = enumerate_std(lambda, n)?;
        let cosets = coset_reps(f, n);
        let basis: Vec<CellIndex> = tableaux
            .iter()
            .flat_map(|t| cosets.iter().map(move |u| CellIndex { t: t.clone(), u: u.clone() }))
            .collect();
        let d = basis.len();
        let mut want: Vec<Gen> = (1..n).flat_map(|i| [Gen::T(i), Gen::TInv(i), Gen::E(i)]).collect();
        if self.kind() == AlgebraKind::Brauer {
            want.retain(|g| !matches!(g, Gen::TInv(_)));
        }
        want.sort();
        let have: Vec<Gen> = actions.keys().copied().collect();
        if have != want || actions.values().any(|m| m.rows() != d || m.cols() != d) {
            return Err(CellError::BadCache(lambda.clone()));
        }
        let cm = CellModule {
            kind: self.kind(),
            n,
            f,
            lambda: lambda.clone(),
            tableaux,
            cosets,
            basis,
            layer: OnceLock::new(),
            actions,
            m_terms: self.m_lambda_terms(lambda)?,
        };
        let c = Arc::new(cm);
        Ok(self.cells.lock().expect("cell cache").entry(lambda.clone()).or_insert(c).clone())
    }

    /// `cm.coords(x)`, building the straightening data first if `cm` came from a cache.
    pub fn cell_coords(&self, cm: &CellModule, x: &Element) -> Result<Vec<CoeffFraction>, CellError> {
        cm.layer.get_or_init(|| self.layer(cm.f, false));
        cm.coords(x)
    }

    /// `x_lambda = sum_{w in S_lambda} q^{l(w)} T_w` on the indices `2f+1..n`, as words.
    pub fn x_lambda_terms(&self, lambda: &Partition) -> Result<Vec<(CoeffFraction, Vec<Gen>)>, CellError> {
        let f = layer_of(lambda, self.n())?;
        let q = match self.kind() {
            AlgebraKind::Bmw => CoeffFraction::q(),
            AlgebraKind::Brauer => CoeffFraction::one(),
        };
        Ok(Hecke::row_stabilizer(lambda)
            .into_iter()
            .map(|w| (q.pow(w.length() as i32).expect("q is a unit"), perm_word(&w.shift(2 * f, self.n()))))
            .collect())
    }

    /// `m_lambda = E_1 E_3 ... E_{2f-1} x_lambda`, as a list of words.
    pub fn m_lambda_terms(&self, lambda: &Partition) -> Result<Vec<(CoeffFraction, Vec<Gen>)>, CellError> {
        let f = layer_of(lambda, self.n())?;
        Ok(self
            .x_lambda_terms(lambda)?
            .into_iter()
            .map(|(c, w)| {
                let mut word = e_chain(f);
                word.extend(w);
                (c, word)
            })
            .collect())
    }

    pub fn m_lambda(&self, lambda: &Partition) -> Result<Element, CellError> {
        Ok(self.m_lambda_terms(lambda)?.iter().fold(Element::zero(), |acc, (c, w)| acc.add(&self.word(w).scale(c))))
    }

    /// The cellular basis element `T_v^* T_{d(s)}^* m_lambda T_{d(t)} T_u`.
    pub fn cellular_element(&self, ix: &CellularIndex) -> Result<Element, CellError> {
        let m = self.m_lambda(&ix.lambda)?;
        let mut right = perm_word(&ix.t.perm());
        right.extend(perm_word(&ix.u));
        let mut left = perm_word_star(&ix.v);
        left.extend(perm_word_star(&ix.s.perm()));
        let x = self.mul_word(&m, &right, Side::Right);
        Ok(self.mul_word(&x, &left, Side::Left))
    }

    /// Coordinates of `x` in the cellular basis.
    pub fn to_cellular(&self, x: &Element) -> Result<BTreeMap<CellularIndex, CoeffFraction>, CellError> {
        let n = self.n();
        let mut rest = x.clone();
        let mut out = BTreeMap::new();
        for f in 0..=n / 2 {
            let layer = self.layer(f, true);
            let m = n - 2 * f;
            let mut found = Vec::new();
            for ((vi, ui), h) in layer.blocks(&rest)? {
                for (mix, c) in layer.hecke.to_murphy(&h).entries {
                    let lift = |t: &Tableau| {
                        let rows = t.rows().iter().map(|r| r.iter().map(|k| k + 2 * f).collect()).collect();
                        Tableau::from_rows(rows, n)
                    };
                    debug_assert_eq!(mix.shape.size(), m);
                    let ix = CellularIndex {
                        lambda: mix.shape.clone(),
                        v: layer.lefts[vi].clone(),
                        s: lift(&mix.s),
                        t: lift(&mix.t),
                        u: layer.cosets[ui].clone(),
                    };
                    found.push((ix, c));
                }
            }
            for (ix, c) in found {
                rest = rest.sub(&self.cellular_element(&ix)?.scale(&c));
                out.insert(ix, c);
            }
        }
        if !rest.is_zero() {
            return Err(CellError::Outside("nonzero remainder after the last layer".into()));
        }
        Ok(out)
    }
}

/// Index `(lambda, (s, v), (t, u))` of the cellular basis element `T_v^* T_{d(s)}^* m_lambda T_{d(t)} T_u`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellularIndex {
    pub lambda: Partition,
    pub s: Tableau,
    pub v: Perm,
    pub t: Tableau,
    pub u: Perm,
}

/// A basis index `(t, u)` of a cell module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CellIndex {
    pub t: Tableau,
    pub u: Perm,
}

/// The cell module `S^lambda` with basis `m_lambda T_{d(t)} T_u`, ordered with
/// `t` outer (tableau order) and `u` inner (lexicographic by images).
pub struct CellModule {
    kind: AlgebraKind,
    n: usize,
    f: usize,
    lambda: Partition,
    tableaux: Vec<Tableau>,
    cosets: Vec<Perm>,
    basis: Vec<CellIndex>,
    layer: OnceLock<Arc<Layer>>,
    actions: BTreeMap<Gen, Matrix>,
    m_terms: Vec<(CoeffFraction, Vec<Gen>)>,
}

impl std::fmt::Debug for CellModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CellModule")
            .field("kind", &self.kind)
            .field("n", &self.n)
            .field("lambda", &self.lambda)
            .finish()
    }
}

impl CellModule {
    fn new(alg: &Algebra, lambda: &Partition) -> Result<CellModule, CellError> {
        let n = alg.n();
        let f = layer_of(lambda, n)?;
        let tableaux = enumerate_std(lambda, n)?;
        let cosets = coset_reps(f, n);
        let basis: Vec<CellIndex> = tableaux
            .iter()
            .flat_map(|t| cosets.iter().map(move |u| CellIndex { t: t.clone(), u: u.clone() }))
            .collect();
        let layer = OnceLock::from(alg.layer(f, false));
        let m_terms = alg.m_lambda_terms(lambda)?;
        let mut cm = CellModule {
            kind: alg.kind(),
            n,
            f,
            lambda: lambda.clone(),
            tableaux,
            cosets,
            basis,
            layer,
            actions: BTreeMap::new(),
            m_terms,
        };
        let m = alg.m_lambda(lambda)?;
        let vectors: Vec<Element> = cm
            .basis
            .iter()
            .map(|ix| {
                let mut w = perm_word(&ix.t.perm());
                w.extend(perm_word(&ix.u));
                alg.mul_word(&m, &w, Side::Right)
            })
            .collect();
        let mut gens = Vec::new();
        for i in 1..n {
            gens.push(Gen::T(i));
            if cm.kind == AlgebraKind::Bmw {
                gens.push(Gen::TInv(i));
            }
            gens.push(Gen::E(i));
        }
        for g in gens {
            let mut a = Matrix::zeros(cm.dim(), cm.dim());
            for (j, v) in vectors.iter().enumerate() {
                let col = cm.coords(&alg.mul_gen(v, g, Side::Right))?;
                for (i, c) in col.into_iter().enumerate() {
                    a[(i, j)] = c;
                }
            }
            cm.actions.insert(g, a);
        }
        Ok(cm)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[CellIndex] {
        &self.basis
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn cosets(&self) -> &[Perm] {
        &self.cosets
    }

    pub fn position(&self, t: &Tableau, u: &Perm) -> Option<usize> {
        let i = self.tableaux.iter().position(|x| x == t)?;
        let j = self.cosets.iter().position(|x| x == u)?;
        Some(i * self.cosets.len() + j)
    }

    /// All generator matrices, keyed by generator.
    pub fn actions(&self) -> &BTreeMap<Gen, Matrix> {
        &self.actions
    }

    /// Coordinates of `x + B̌^lambda` for `x` in `m_lambda B`.
    pub fn coords(&self, x: &Element) -> Result<Vec<CoeffFraction>, CellError> {
        let layer = self.layer.get().ok_or(CellError::NoLayer)?;
        let mut out = vec![CoeffFraction::zero(); self.dim()];
        let top = self.tableaux[0].hat();
        for ((vi, ui), h) in layer.blocks(x)? {
            debug_assert_eq!(vi, 0);
            for (ix, c) in layer.hecke.to_murphy(&h).entries {
                if ix.shape == self.lambda {
                    if ix.s != top {
                        return Err(CellError::Outside(format!("component outside m_lambda B at {:?}", ix)));
                    }
                    let i = self.tableaux.iter().position(|t| t.hat() == ix.t).expect("standard tableau");
                    out[i * self.cosets.len() + ui] = c;
                } else if !ix.shape.dominates(&self.lambda) {
                    return Err(CellError::Outside(format!("shape {} does not dominate {}", ix.shape, self.lambda)));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of right multiplication by a generator; column `j` is the image of basis vector `j`.
    pub fn action(&self, g: Gen) -> &Matrix {
        let g = match (self.kind, g) {
            (AlgebraKind::Brauer, Gen::TInv(i)) => Gen::T(i),
            _ => g,
        };
        self.actions.get(&g).unwrap_or_else(|| panic!("generator {} out of range for n={}", g, self.n))
    }

    pub fn act(&self, v: &[CoeffFraction], g: Gen) -> Vec<CoeffFraction> {
        let a = self.action(g);
        let mut out = vec![CoeffFraction::zero(); self.dim()];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let c = &a[(i, j)];
                if !c.is_zero() {
                    *o = o.add(&c.mul(x));
                }
            }
        }
        out
    }

    pub fn act_word(&self, v: &[CoeffFraction], word: &[Gen]) -> Vec<CoeffFraction> {
        word.iter().fold(v.to_vec(), |acc, &g| self.act(&acc, g))
    }

    /// Action of a linear combination of words.
    pub fn act_terms(&self, v: &[CoeffFraction], terms: &[(CoeffFraction, Vec<Gen>)]) -> Vec<CoeffFraction> {
        let mut out = vec![CoeffFraction::zero(); self.dim()];
        for (c, w) in terms {
            for (o, x) in out.iter_mut().zip(self.act_word(v, w)) {
                *o = o.add(&x.mul(c));
            }
        }
        out
    }

    /// Matrix of right multiplication by a word (`A_{gh} = A_h A_g`).
    pub fn word_matrix(&self, word: &[Gen]) -> Matrix {
        word.iter().fold(Matrix::identity(self.dim()), |acc, &g| self.action(g).mul(&acc))
    }

    pub fn unit(&self, j: usize) -> Vec<CoeffFraction> {
        let mut v = vec![CoeffFraction::zero(); self.dim()];
        v[j] = CoeffFraction::one();
        v
    }

    /// `m_lambda` as a list of words.
    pub fn m_lambda_terms(&self) -> &[(CoeffFraction, Vec<Gen>)] {
        &self.m_terms
    }

    /// Gram matrix of the form `<a, b> m_lambda ≡ m_lambda b_a b_b^* m_lambda`.
    pub fn gram(&self) -> Matrix {
        let d = self.dim();
        // phi(v_c): coefficient of m_lambda in v_c m_lambda.
        let phi: Vec<CoeffFraction> = (0..d).map(|c| self.act_terms(&self.unit(c), &self.m_terms)[0].clone()).collect();
        let mut g = Matrix::zeros(d, d);
        for (b, ix) in self.basis.iter().enumerate() {
            let mut word = perm_word_star(&ix.u);
            word.extend(perm_word_star(&ix.t.perm()));
            for a in 0..d {
                let v = self.act_word(&self.unit(a), &word);
                let mut acc = CoeffFraction::zero();
                for (x, p) in v.iter().zip(&phi) {
                    if !x.is_zero() && !p.is_zero() {
                        acc = acc.add(&x.mul(p));
                    }
                }
                g[(a, b)] = acc;
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::frac;

    fn mat(rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| frac(s)).collect()).collect())
    }

    #[test]
    fn bmw_gram_n3() {
        let a = Algebra::bmw(3);
        let s = a.cell_module(&Partition::of(&[1])).unwrap();
        let g = s.gram();
        let z = "1+(r-r^-1)/(q-q^-1)";
        let zz = format!("{}+(q-q^-1)*(r-r^-1)", z);
        let expect = mat(&[&[z, "r", "1"], &["r", &zz, "r^-1"], &["1", "r^-1", z]]);
        assert_eq!(g, expect);
        assert_eq!(g.det(), frac("(r-1)^2*(r+1)^2*(q^3+r)*(q^3*r-1)/(r^3*(q-1)^3*(q+1)^3)"));
        let e = a.cell_module(&Partition::empty());
        assert!(e.is_err());
    }

    #[test]
    fn brauer_gram_n3() {
        let a = Algebra::brauer(3);
        let s = a.cell_module(&Partition::of(&[1])).unwrap();
        assert_eq!(s.gram(), mat(&[&["z", "1", "1"], &["1", "z", "1"], &["1", "1", "z"]]));
        let t = a.cell_module(&Partition::of(&[3])).unwrap();
        assert_eq!(t.gram(), mat(&[&["6"]]));
        let b = Algebra::brauer(2);
        assert_eq!(b.cell_module(&Partition::empty()).unwrap().gram(), mat(&[&["z"]]));
    }

    #[test]
    fn cell_actions_satisfy_relations() {
        let a = Algebra::bmw(3);
        let s = a.cell_module(&Partition::of(&[1])).unwrap();
        let t2 = s.action(Gen::T(2));
        assert_eq!(t2.row(1)[0], frac("1"));
        for i in 1..3 {
            let t = s.action(Gen::T(i));
            let id = Matrix::identity(3);
            let sh = |c: &str| {
                let mut m = t.clone();
                for k in 0..3 {
                    m[(k, k)] = m[(k, k)].sub(&frac(c));
                }
                m
            };
            let cubic = sh("q").mul(&sh("-q^-1")).mul(&sh("r^-1"));
            assert_eq!(cubic, Matrix::zeros(3, 3));
            assert_eq!(t.mul(s.action(Gen::TInv(i))), id);
        }
        let b = Algebra::brauer(3);
        let s = b.cell_module(&Partition::of(&[2, 1])).unwrap();
        for i in 1..3 {
            let x = s.action(Gen::T(i));
            assert_eq!(x.mul(x), Matrix::identity(2));
        }
    }

    #[test]
    fn layer_bases_are_triangular() {
        for a in [Algebra::bmw(4), Algebra::brauer(5)] {
            for f in 0..=a.n() / 2 {
                assert!(a.layer(f, true).is_triangular(), "{:?} f={}", a, f);
            }
        }
    }

    #[test]
    fn cellular_coordinates_round_trip() {
        for a in [Algebra::bmw(3), Algebra::brauer(4)] {
            let mut count = 0;
            for i in (0..a.dim()).step_by(if a.n() == 3 { 1 } else { 4 }) {
                let x = Element::basis(i);
                let c = a.to_cellular(&x).unwrap();
                let back =
                    c.iter().fold(Element::zero(), |acc, (ix, k)| acc.add(&a.cellular_element(ix).unwrap().scale(k)));
                assert_eq!(back, x);
                count += 1;
            }
            assert!(count > 0);
        }
    }
}
