//! Standard and semistandard tableaux, and the coset representatives `D_{f,n}`.

use super::partition::{Node, Partition};
use super::perm::Perm;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("n - |lambda| = {n} - {size} is not a non-negative even number")]
    Parity { n: usize, size: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Checks `|lambda| = n - 2f` and returns `f`.
pub fn layer_of(lambda: &Partition, n: usize) -> Result<usize, TableauError> {
    let s = lambda.size();
    if s > n || !(n - s).is_multiple_of(2) {
        return Err(TableauError::Parity { n, size: s });
    }
    Ok((n - s) / 2)
}

/// A `lambda`-tableau with entries `2f+1..n`, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
    n: usize,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>, n: usize) -> Tableau {
        Tableau { rows, n }
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("tableau rows form a partition")
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of cap pairs `f` (entries start at `2f+1`).
    pub fn offset(&self) -> usize {
        (self.n - self.shape().size()) / 2
    }

    pub fn entry(&self, x: Node) -> usize {
        self.rows[x.row - 1][x.col - 1]
    }

    /// Node holding entry `k`.
    pub fn find(&self, k: usize) -> Option<Node> {
        for (i, r) in self.rows.iter().enumerate() {
            if let Some(j) = r.iter().position(|&x| x == k) {
                return Some(Node::new(i + 1, j + 1));
            }
        }
        None
    }

    /// Superstandard tableau: `2f+1..n` filled along rows.
    pub fn superstandard(lambda: &Partition, n: usize) -> Result<Tableau, TableauError> {
        let f = layer_of(lambda, n)?;
        let mut next = 2 * f + 1;
        let rows = lambda
            .parts()
            .iter()
            .map(|&p| {
                let r: Vec<usize> = (next..next + p).collect();
                next += p;
                r
            })
            .collect();
        Ok(Tableau { rows, n })
    }

    /// Entries increase along rows and down columns.
    pub fn is_standard(&self) -> bool {
        for (i, r) in self.rows.iter().enumerate() {
            for j in 0..r.len() {
                if j + 1 < r.len() && r[j] >= r[j + 1] {
                    return false;
                }
                if i + 1 < self.rows.len() && j < self.rows[i + 1].len() && r[j] >= self.rows[i + 1][j] {
                    return false;
                }
            }
        }
        true
    }

    /// Right action of a permutation on the labels.
    pub fn act(&self, w: &Perm) -> Tableau {
        Tableau { rows: self.rows.iter().map(|r| r.iter().map(|&k| w.apply(k)).collect()).collect(), n: self.n }
    }

    /// The permutation `d(t)` with `t = t^lambda d(t)`.
    pub fn perm(&self) -> Perm {
        let sup = Tableau::superstandard(&self.shape(), self.n).expect("valid tableau");
        let mut img: Vec<u8> = (1..=self.n as u8).collect();
        for (r0, r1) in sup.rows.iter().zip(&self.rows) {
            for (&a, &b) in r0.iter().zip(r1) {
                img[a - 1] = b as u8;
            }
        }
        Perm::from_images(img)
    }

    /// Restriction to entries `<= i`, as a path shape.
    pub fn restrict_shape(&self, i: usize) -> Partition {
        let parts: Vec<usize> =
            self.rows.iter().map(|r| r.iter().filter(|&&k| k <= i).count()).filter(|&c| c > 0).collect();
        Partition::new(parts).expect("restriction of a standard tableau")
    }

    /// Relabels entries by subtracting `2f` (the hat map).
    pub fn hat(&self) -> Tableau {
        let off = 2 * self.offset();
        Tableau { rows: self.rows.iter().map(|r| r.iter().map(|&k| k - off).collect()).collect(), n: self.n - off }
    }

    /// Sequence of shapes `shape(t|_i)` for `i = 2f..n`.
    pub fn shape_sequence(&self) -> Vec<Partition> {
        let f = self.offset();
        (2 * f..=self.n).map(|i| self.restrict_shape(i)).collect()
    }

    /// Compares by the linear extension of tableau dominance used for ordering:
    /// shapes are compared from the largest entry downwards.
    pub fn order_cmp(&self, other: &Tableau) -> std::cmp::Ordering {
        let (a, b) = (self.shape_sequence(), other.shape_sequence());
        for i in (0..a.len()).rev() {
            let c = a[i].order_cmp(&b[i]);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    }

    /// Tableau dominance: `shape(s|_i) ⊵ shape(t|_i)` for all `i`.
    pub fn dominates(&self, other: &Tableau) -> bool {
        self.shape_sequence().iter().zip(other.shape_sequence()).all(|(a, b)| a.dominates(&b))
    }
}

/// All standard `lambda`-tableaux labelled `2f+1..n`, ordered with the
/// superstandard tableau first (a linear extension of dominance).
pub fn enumerate_std(lambda: &Partition, n: usize) -> Result<Vec<Tableau>, TableauError> {
    let f = layer_of(lambda, n)?;
    let m = lambda.size();
    // Build by adding entries 2f+1, 2f+2, ... at addable nodes inside lambda.
    let mut out = Vec::new();
    fn rec(lambda: &Partition, cur: &mut Vec<Vec<usize>>, next: usize, last: usize, n: usize, out: &mut Vec<Tableau>) {
        if next > last {
            out.push(Tableau { rows: cur.clone(), n });
            return;
        }
        for i in 0..lambda.len() {
            let len = cur.get(i).map_or(0, |r| r.len());
            if i > cur.len() {
                break;
            }
            let above = if i == 0 { usize::MAX } else { cur[i - 1].len() };
            if len < lambda.parts()[i] && len < above {
                if i == cur.len() {
                    cur.push(Vec::new());
                }
                cur[i].push(next);
                rec(lambda, cur, next + 1, last, n, out);
                cur[i].pop();
                if cur[i].is_empty() {
                    cur.pop();
                }
            }
        }
    }
    rec(lambda, &mut Vec::new(), 2 * f + 1, 2 * f + m, n, &mut out);
    out.sort_by(|a, b| a.order_cmp(b));
    Ok(out)
}

/// `D_{f,n}`: permutations with `(2i+1)v < (2j+1)v` for `i < j < f`,
/// `(2i+1)v < (2i+2)v`, and `(i)v < (i+1)v` for `2f < i < n`; sorted
/// lexicographically by their images.
pub fn coset_reps(f: usize, n: usize) -> Vec<Perm> {
    assert!(2 * f <= n, "f = {} too large for n = {}", f, n);
    let mut out = Vec::new();
    // pairs (a, b) with a < b, chosen with increasing first entries
    fn pairs(
        avail: &mut Vec<usize>,
        k: usize,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
        min_first: usize,
    ) {
        if k == 0 {
            out.push(acc.clone());
            return;
        }
        let cands: Vec<usize> = avail.iter().copied().filter(|&a| a > min_first).collect();
        for &a in &cands {
            for &b in cands.iter().filter(|&&b| b > a) {
                avail.retain(|&x| x != a && x != b);
                acc.push((a, b));
                pairs(avail, k - 1, acc, out, a);
                acc.pop();
                avail.push(a);
                avail.push(b);
                avail.sort_unstable();
            }
        }
    }
    let mut all = Vec::new();
    let mut avail: Vec<usize> = (1..=n).collect();
    pairs(&mut avail, f, &mut Vec::new(), &mut all, 0);
    for ps in all {
        let mut img = Vec::with_capacity(n);
        for &(a, b) in &ps {
            img.push(a as u8);
            img.push(b as u8);
        }
        let used: Vec<usize> = ps.iter().flat_map(|&(a, b)| [a, b]).collect();
        img.extend((1..=n).filter(|x| !used.contains(x)).map(|x| x as u8));
        out.push(Perm::from_images(img));
    }
    out.sort();
    out
}

/// `|D_{f,n}| = n! / (2^f f! (n-2f)!)`.
pub fn coset_count(f: usize, n: usize) -> usize {
    let fact = |k: usize| (1..=k).product::<usize>();
    fact(n) / ((1 << f) * fact(f) * fact(n - 2 * f))
}

/// A `lambda`-tableau of type `mu`: entries are row indices of `mu`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemiStdTableau {
    pub shape: Partition,
    pub ty: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl SemiStdTableau {
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok =
            (1..self.rows.len()).all(|i| (0..self.rows[i].len()).all(|j| self.rows[i - 1][j] < self.rows[i][j]));
        rows_ok && cols_ok
    }
}

impl fmt::Debug for SemiStdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rs: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("")).collect();
        write!(f, "[{}]", rs.join("/"))
    }
}

/// All semistandard tableaux of type `mu` and shape `lambda`.
pub fn semistandard_set(lambda: &Partition, mu: &Partition) -> Result<Vec<SemiStdTableau>, TableauError> {
    if lambda.size() != mu.size() {
        return Err(TableauError::Shape(format!("|{}| != |{}|", lambda, mu)));
    }
    Ok(semistandard_of_type(mu).into_iter().filter(|s| &s.shape == lambda).collect())
}

/// All semistandard tableaux of type `mu`, over all shapes.
pub fn semistandard_of_type(mu: &Partition) -> Vec<SemiStdTableau> {
    // entries k form a horizontal strip of size mu_k added to the previous shape
    let mut states: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for (k, &m) in mu.parts().iter().enumerate() {
        let mut next = Vec::new();
        for rows in &states {
            add_strip(rows, m, k + 1, 0, &mut rows.clone(), &mut next);
        }
        states = next;
    }
    let mut out: Vec<SemiStdTableau> = states
        .into_iter()
        .map(|rows| SemiStdTableau {
            shape: Partition::new(rows.iter().map(|r| r.len()).collect()).expect("shape"),
            ty: mu.clone(),
            rows,
        })
        .collect();
    out.sort_by(|a, b| a.shape.order_cmp(&b.shape).then_with(|| a.rows.cmp(&b.rows)));
    out
}

fn add_strip(
    base: &Vec<Vec<usize>>,
    remaining: usize,
    label: usize,
    row: usize,
    cur: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if remaining == 0 {
        out.push(cur.clone());
        return;
    }
    if row > base.len() {
        return;
    }
    // a horizontal strip adds at most base[row-1].len() - base[row].len() boxes to row (row 0 unbounded)
    let cap = if row == 0 { remaining } else { base[row - 1].len() - base.get(row).map_or(0, |r| r.len()) };
    for c in (0..=cap.min(remaining)).rev() {
        if row == cur.len() && c > 0 {
            cur.push(Vec::new());
        }
        for _ in 0..c {
            cur[row].push(label);
        }
        add_strip(base, remaining - c, label, row + 1, cur, out);
        for _ in 0..c {
            cur[row].pop();
        }
        if row < cur.len() && cur[row].is_empty() {
            cur.pop();
        }
    }
}

/// `mu(t)`: replace each entry `i` of `t` by the row of `i` in `t^mu`.
pub fn type_map(t: &Tableau, mu: &Partition) -> Result<SemiStdTableau, TableauError> {
    if t.shape().size() != mu.size() {
        return Err(TableauError::Shape(format!("|shape(t)| != |{}|", mu)));
    }
    let tm = Tableau::superstandard(mu, t.n()).map_err(|e| TableauError::Shape(e.to_string()))?;
    let rows = t.rows.iter().map(|r| r.iter().map(|&k| tm.find(k).expect("entry present").row).collect()).collect();
    Ok(SemiStdTableau { shape: t.shape(), ty: mu.clone(), rows })
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rs: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", rs.join("/"))
    }
}
