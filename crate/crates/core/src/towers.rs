//! Restriction to `B_{n-1}`, the recursive path basis of a cell module, and
//! the Jucys–Murphy operators in that basis.

use crate::algebra::{Algebra, Gen};
use crate::cellular::{perm_word, CellError, CellModule};
use crate::combin::{distinguished_perms, enumerate_paths, enumerate_std, layer_of, maximal_path, neighbours};
use crate::combin::{Partition, Path, Perm, TableauError};
use crate::exactring::linalg::Matrix;
use crate::exactring::{AlgebraKind, CoeffFraction, Var};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TowerError {
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("{mu} is not a neighbour of {lambda} at level {n}")]
    NotNeighbour { lambda: Partition, mu: Partition, n: usize },
    #[error("n = {n} exceeds the tower height {height}")]
    TooHigh { n: usize, height: usize },
    #[error("path basis of {0} is singular")]
    Singular(Partition),
}

/// A linear combination of words in the generators.
pub type WordSum = Vec<(CoeffFraction, Vec<Gen>)>;

/// The eigenvalue `P_t(k)` of `L_k` attached to step `k` of a path.
pub fn content(kind: AlgebraKind, t: &Path, k: usize) -> CoeffFraction {
    let (a, b) = (t.at(k - 1), t.at(k));
    let x = a.difference(b).expect("consecutive shapes are neighbours");
    let c = x.content();
    let up = b.size() > a.size();
    match (kind, up) {
        (AlgebraKind::Bmw, true) => CoeffFraction::var_pow(Var::Q, 2 * c as i32),
        (AlgebraKind::Bmw, false) => {
            CoeffFraction::var_pow(Var::Q, -2 * c as i32).mul(&CoeffFraction::var_pow(Var::R, -2))
        }
        (AlgebraKind::Brauer, true) => CoeffFraction::from_i64(c),
        (AlgebraKind::Brauer, false) => CoeffFraction::from_i64(1 - c).sub(&CoeffFraction::z()),
    }
}

/// The path basis `{m_t}` of `S^lambda`.
#[derive(Debug)]
pub struct PathBasis {
    pub kind: AlgebraKind,
    pub n: usize,
    pub lambda: Partition,
    pub paths: Vec<Path>,
    /// Column `j` holds the coordinates of `m_{t_j}` in the basis `m_lambda T_{d(t)} T_u`.
    pub transition: Matrix,
    inverse: Matrix,
    /// `b_t` with `m_t = m_lambda b_t`.
    pub words: Vec<WordSum>,
}

impl PathBasis {
    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn position(&self, t: &Path) -> Option<usize> {
        self.paths.iter().position(|p| p == t)
    }

    /// `P^{-1} A P` for a matrix `A` in the cell basis.
    pub fn conjugate(&self, a: &Matrix) -> Matrix {
        self.inverse.mul(&a.mul(&self.transition))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JmReport {
    pub lambda: Partition,
    pub n: usize,
    pub paths: Vec<Path>,
    /// `diagonals[t][k-1]` is the diagonal entry of `L_k` at `t`.
    pub diagonals: Vec<Vec<CoeffFraction>>,
    pub violations: Vec<String>,
}

impl JmReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    pub lambda: Partition,
    pub n: usize,
    /// `(mu^(k), dim S^{mu^(k)})` in filtration order.
    pub layers: Vec<(Partition, usize)>,
    pub failures: Vec<String>,
}

impl FiltrationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The algebras `B_1 ⊂ B_2 ⊂ ... ⊂ B_n` of one kind, with cached path bases.
pub struct Tower {
    kind: AlgebraKind,
    levels: Vec<OnceLock<Algebra>>,
    bases: Mutex<HashMap<(usize, Partition), Arc<PathBasis>>>,
}

impl Tower {
    pub fn new(kind: AlgebraKind, height: usize) -> Tower {
        Tower { kind, levels: (0..height).map(|_| OnceLock::new()).collect(), bases: Mutex::new(HashMap::new()) }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn height(&self) -> usize {
        self.levels.len()
    }

    pub fn algebra(&self, n: usize) -> Result<&Algebra, TowerError> {
        let slot = self.levels.get(n.wrapping_sub(1)).ok_or(TowerError::TooHigh { n, height: self.height() })?;
        Ok(slot.get_or_init(|| Algebra::new(self.kind, n)))
    }

    pub fn cell_module(&self, lambda: &Partition, n: usize) -> Result<Arc<CellModule>, TowerError> {
        Ok(self.algebra(n)?.cell_module(lambda)?)
    }

    /// The generator `y^lambda_mu` of the restriction filtration, in cell coordinates.
    pub fn y_element(&self, lambda: &Partition, mu: &Partition, n: usize) -> Result<Vec<CoeffFraction>, TowerError> {
        let not_nb = || TowerError::NotNeighbour { lambda: lambda.clone(), mu: mu.clone(), n };
        if n < 2 || !neighbours(lambda, n).contains(mu) {
            return Err(not_nb());
        }
        let f = layer_of(lambda, n)?;
        let cm = self.cell_module(lambda, n)?;
        if mu.size() < lambda.size() {
            // m_lambda T_{d(s)}: n sits in the box lambda/mu, the rest is t^mu.
            let x = lambda.difference(mu).ok_or_else(not_nb)?;
            let sup = crate::combin::Tableau::superstandard(mu, n - 1)?;
            let mut rows: Vec<Vec<usize>> = sup.rows().to_vec();
            if rows.len() < x.row {
                rows.push(Vec::new());
            }
            rows[x.row - 1].push(n);
            let s = crate::combin::Tableau::from_rows(rows, n);
            let j = cm.position(&s, &Perm::identity(n)).ok_or_else(not_nb)?;
            Ok(cm.unit(j))
        } else {
            let (_, steps) = distinguished_perms(lambda, n)?;
            let step = steps.iter().find(|s| s.mu == *mu).ok_or_else(not_nb)?;
            let alg = self.algebra(n)?;
            let below = self.algebra(n - 1)?;
            let mut prefix = vec![Gen::E(2 * f - 1)];
            prefix.extend(step.w_k.iter().rev().map(|&i| Gen::TInv(i)));
            let mut y = alg.zero();
            for (c, w) in below.m_lambda_terms(mu)? {
                let mut word = prefix.clone();
                word.extend(w);
                y = y.add(&alg.word(&word).scale(&c));
            }
            Ok(alg.cell_coords(&cm, &y)?)
        }
    }

    /// The path basis of `S^lambda` at level `n`, built recursively and cached.
    pub fn path_basis(&self, lambda: &Partition, n: usize) -> Result<Arc<PathBasis>, TowerError> {
        let key = (n, lambda.clone());
        if let Some(b) = self.bases.lock().expect("basis cache").get(&key) {
            return Ok(b.clone());
        }
        let b = Arc::new(self.build_path_basis(lambda, n)?);
        Ok(self.bases.lock().expect("basis cache").entry(key).or_insert(b).clone())
    }

    fn build_path_basis(&self, lambda: &Partition, n: usize) -> Result<PathBasis, TowerError> {
        let cm = self.cell_module(lambda, n)?;
        let paths = enumerate_paths(lambda, n)?;
        let d = cm.dim();
        let mut transition = Matrix::zeros(d, paths.len());
        if n == 1 {
            transition[(0, 0)] = CoeffFraction::one();
        } else {
            let mut ys: HashMap<Partition, Vec<CoeffFraction>> = HashMap::new();
            for (j, t) in paths.iter().enumerate() {
                let mu = t.at(n - 1);
                if !ys.contains_key(mu) {
                    ys.insert(mu.clone(), self.y_element(lambda, mu, n)?);
                }
                let below = self.path_basis(mu, n - 1)?;
                let u = below.position(&t.restrict(n - 1)).expect("restricted path");
                let m_t = cm.act_terms(&ys[mu], &below.words[u]);
                for (i, c) in m_t.into_iter().enumerate() {
                    transition[(i, j)] = c;
                }
            }
        }
        let inverse = transition.inverse().map_err(|_| TowerError::Singular(lambda.clone()))?;
        let words = (0..paths.len())
            .map(|j| {
                cm.basis()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !transition[(*i, j)].is_zero())
                    .map(|(i, ix)| {
                        let mut w = perm_word(&ix.t.perm());
                        w.extend(perm_word(&ix.u));
                        (transition[(i, j)].clone(), w)
                    })
                    .collect()
            })
            .collect();
        Ok(PathBasis { kind: self.kind, n, lambda: lambda.clone(), paths, transition, inverse, words })
    }

    /// Matrices of `L_1, ..., L_n` on `S^lambda` in the cell basis.
    pub fn jm_cell_matrices(&self, lambda: &Partition, n: usize) -> Result<Vec<Matrix>, TowerError> {
        let cm = self.cell_module(lambda, n)?;
        let d = cm.dim();
        let mut out: Vec<Matrix> = Vec::with_capacity(n);
        for k in 1..=n {
            let m = if k == 1 {
                match self.kind {
                    AlgebraKind::Bmw => Matrix::identity(d),
                    AlgebraKind::Brauer => Matrix::zeros(d, d),
                }
            } else {
                let prev = &out[k - 2];
                let s = cm.action(Gen::T(k - 1));
                let conj = s.mul(prev).mul(s);
                match self.kind {
                    AlgebraKind::Bmw => conj,
                    AlgebraKind::Brauer => {
                        let e = cm.action(Gen::E(k - 1));
                        let mut m = conj;
                        for i in 0..d {
                            for j in 0..d {
                                m[(i, j)] = m[(i, j)].add(&s[(i, j)]).sub(&e[(i, j)]);
                            }
                        }
                        m
                    }
                }
            };
            out.push(m);
        }
        Ok(out)
    }

    /// Checks that each `L_k` is triangular in the path basis with diagonal `P_t(k)`.
    pub fn jm_triangularity(&self, lambda: &Partition, n: usize) -> Result<JmReport, TowerError> {
        let pb = self.path_basis(lambda, n)?;
        let mats = self.jm_cell_matrices(lambda, n)?;
        let np = pb.paths.len();
        let mut diagonals = vec![Vec::with_capacity(n); np];
        let mut violations = Vec::new();
        for (k, a) in mats.iter().enumerate() {
            let k = k + 1;
            let l = pb.conjugate(a);
            for (ti, t) in pb.paths.iter().enumerate() {
                let diag = l[(ti, ti)].clone();
                let want = content(self.kind, t, k);
                if diag != want {
                    violations.push(format!("L_{} at {}: diagonal {} but P_t(k) = {}", k, t, diag, want));
                }
                diagonals[ti].push(diag);
                for (ui, u) in pb.paths.iter().enumerate() {
                    if ui != ti && !l[(ui, ti)].is_zero() && !u.dominates(t) {
                        violations.push(format!(
                            "L_{}: entry ({}, {}) = {} with {} not dominating",
                            k,
                            u,
                            t,
                            l[(ui, ti)],
                            u
                        ));
                    }
                }
            }
        }
        Ok(JmReport { lambda: lambda.clone(), n, paths: pb.paths.clone(), diagonals, violations })
    }

    /// Checks the filtration of `S^lambda` restricted to `B_{n-1}` by the spans `N^{mu^(k)}`.
    pub fn filtration_check(&self, lambda: &Partition, n: usize) -> Result<FiltrationReport, TowerError> {
        let pb = self.path_basis(lambda, n)?;
        if n == 1 {
            let layers = vec![(Partition::empty(), pb.paths.len())];
            return Ok(FiltrationReport { lambda: lambda.clone(), n, layers, failures: Vec::new() });
        }
        let cm = self.cell_module(lambda, n)?;
        let nbs = neighbours(lambda, n);
        let group: Vec<usize> =
            pb.paths.iter().map(|t| nbs.iter().position(|m| m == t.at(n - 1)).expect("neighbour")).collect();
        let mut layers = Vec::new();
        let mut failures = Vec::new();
        for mu in &nbs {
            let dim = pb.paths.iter().filter(|t| t.at(n - 1) == mu).count();
            layers.push((mu.clone(), dim));
        }
        let mut gens = Vec::new();
        for i in 1..n.saturating_sub(1) {
            gens.push(Gen::T(i));
            if self.kind == AlgebraKind::Bmw {
                gens.push(Gen::TInv(i));
            }
            gens.push(Gen::E(i));
        }
        let below: Vec<Arc<PathBasis>> = nbs.iter().map(|mu| self.path_basis(mu, n - 1)).collect::<Result<_, _>>()?;
        for g in gens {
            let a = pb.conjugate(cm.action(g));
            for (ti, t) in pb.paths.iter().enumerate() {
                for (ui, u) in pb.paths.iter().enumerate() {
                    let c = &a[(ui, ti)];
                    if group[ui] > group[ti] && !c.is_zero() {
                        failures.push(format!("{}: m_{{{}}} leaves its layer (component {} at {})", g, t, c, u));
                    }
                }
            }
            for (k, mu) in nbs.iter().enumerate() {
                let sub = &below[k];
                let bm = self.cell_module(mu, n - 1)?;
                let want = sub.conjugate(bm.action(g));
                let idx: Vec<usize> = (0..pb.paths.len()).filter(|&i| group[i] == k).collect();
                for (bi, &ti) in idx.iter().enumerate() {
                    for (bj, &tj) in idx.iter().enumerate() {
                        let below_pos = |i: usize| sub.position(&pb.paths[i].restrict(n - 1)).expect("restriction");
                        let (pi, pj) = (below_pos(ti), below_pos(tj));
                        debug_assert_eq!((pi, pj), (bi, bj));
                        if a[(ti, tj)] != want[(pi, pj)] {
                            failures.push(format!(
                                "{} on S^{}: quotient entry ({}, {}) is {} but {} at level {}",
                                g,
                                mu,
                                pb.paths[ti],
                                pb.paths[tj],
                                a[(ti, tj)],
                                want[(pi, pj)],
                                n - 1
                            ));
                        }
                    }
                }
            }
        }
        Ok(FiltrationReport { lambda: lambda.clone(), n, layers, failures })
    }

    /// The scalar by which `L_2 ... L_n` (B–M–W) or `L_2 + ... + L_n` (Brauer)
    /// acts on `S^lambda`, and whether the action really is that scalar.
    pub fn central_scalar(&self, lambda: &Partition, n: usize) -> Result<(CoeffFraction, bool), TowerError> {
        let t = maximal_path(lambda, n)?;
        let mats = self.jm_cell_matrices(lambda, n)?;
        let d = mats[0].rows();
        let (alpha, acting) = match self.kind {
            AlgebraKind::Bmw => {
                let a = (2..=n).fold(CoeffFraction::one(), |acc, k| acc.mul(&content(self.kind, &t, k)));
                let m = mats[1..].iter().fold(Matrix::identity(d), |acc, l| l.mul(&acc));
                (a, m)
            }
            AlgebraKind::Brauer => {
                let a = (2..=n).fold(CoeffFraction::zero(), |acc, k| acc.add(&content(self.kind, &t, k)));
                let mut m = Matrix::zeros(d, d);
                for l in &mats[1..] {
                    for i in 0..d {
                        for j in 0..d {
                            m[(i, j)] = m[(i, j)].add(&l[(i, j)]);
                        }
                    }
                }
                (a, m)
            }
        };
        let mut scalar = Matrix::zeros(d, d);
        for i in 0..d {
            scalar[(i, i)] = alpha.clone();
        }
        Ok((alpha, acting == scalar))
    }

    /// `Σ_λ |paths(λ)|^2` over all cell shapes at level `n`.
    pub fn dimension_check(n: usize) -> Result<(usize, Vec<(Partition, usize, usize)>), TowerError> {
        let mut total = 0;
        let mut rows = Vec::new();
        for lambda in Partition::cell_shapes(n) {
            let f = layer_of(&lambda, n)?;
            let p = enumerate_paths(&lambda, n)?.len();
            let cells = enumerate_std(&lambda, n)?.len() * crate::combin::coset_count(f, n);
            total += p * p;
            rows.push((lambda, p, cells));
        }
        Ok((total, rows))
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
    fn small_transition_matrix() {
        let tw = Tower::new(AlgebraKind::Bmw, 3);
        let pb = tw.path_basis(&Partition::of(&[1]), 3).unwrap();
        let want = mat(&[&["1", "1-q^2", "0"], &["0", "q", "0"], &["0", "q^2", "1"]]);
        assert_eq!(pb.transition, want, "\n{}", pb.transition);
    }

    #[test]
    fn transition_matrices_n4() {
        let tw = Tower::new(AlgebraKind::Bmw, 4);
        let pb = tw.path_basis(&Partition::of(&[2]), 4).unwrap();
        let want = mat(&[
            &["1", "1-q^2", "0", "1-q^2", "0", "0"],
            &["0", "q", "0", "q*(1-q^2)", "0", "0"],
            &["0", "0", "0", "q^2", "0", "0"],
            &["0", "q^2", "1", "q^2*(1-q^2)", "0", "(1-q^2)/q"],
            &["0", "0", "0", "q^3", "0", "1"],
            &["0", "0", "0", "q^4", "1", "(q^2-1)/q"],
        ]);
        assert_eq!(pb.transition, want, "\n{}", pb.transition);
        // Column 2 is forced by the n = 3 matrix: in B_3,
        // E_1 T_2^{-1} T_1^{-1} (1 + q T_1) = E_1 ((1 - q^2) + q T_2 + q^2 T_2 T_1).
        let b3 = tw.algebra(3).unwrap();
        use Gen::{TInv, E, T};
        let lhs = b3.word(&[E(1), TInv(2), TInv(1)]).add(&b3.word(&[E(1), TInv(2), TInv(1), T(1)]).scale(&frac("q")));
        let rhs = b3
            .word(&[E(1)])
            .scale(&frac("1-q^2"))
            .add(&b3.word(&[E(1), T(2)]).scale(&frac("q")))
            .add(&b3.word(&[E(1), T(2), T(1)]).scale(&frac("q^2")));
        assert_eq!(lhs, rhs);
        let pb = tw.path_basis(&Partition::of(&[1, 1]), 4).unwrap();
        let want = mat(&[
            &["1", "1-q^2", "0", "q*(q^2-1)", "1-q^2", "0"],
            &["0", "q", "0", "1-q^2", "(q^2-1)/q", "0"],
            &["0", "0", "0", "q", "-1", "0"],
            &["0", "q^2", "1", "q*(1-q^2)", "(1-q^2)/(q*r)", "0"],
            &["0", "0", "0", "q^2", "0", "0"],
            &["0", "0", "0", "0", "q^2", "1"],
        ]);
        assert_eq!(pb.transition, want, "\n{}", pb.transition);
    }

    #[test]
    fn jm_small() {
        for kind in [AlgebraKind::Bmw, AlgebraKind::Brauer] {
            let tw = Tower::new(kind, 3);
            for lambda in Partition::cell_shapes(3) {
                let r = tw.jm_triangularity(&lambda, 3).unwrap();
                assert!(r.ok(), "{:?}", r.violations);
                let f = tw.filtration_check(&lambda, 3).unwrap();
                assert!(f.ok(), "{:?}", f.failures);
                assert!(tw.central_scalar(&lambda, 3).unwrap().1);
            }
        }
    }
}
