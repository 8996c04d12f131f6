//! Up-down paths in the Bratteli diagram and the permutations `w_p`, `w_k`, `d(s_k)`.

use super::partition::Partition;
use super::tableau::{layer_of, TableauError};
use std::cmp::Ordering;
use std::fmt;

/// A sequence `(λ^(0), ..., λ^(n))` with `λ^(0) = ∅`, consecutive shapes
/// differing by one node.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Path {
    shapes: Vec<Partition>,
}

impl Path {
    pub fn new(shapes: Vec<Partition>) -> Result<Path, TableauError> {
        if shapes.first().is_none_or(|s| !s.is_empty()) {
            return Err(TableauError::Shape("a path starts at the empty partition".into()));
        }
        for w in shapes.windows(2) {
            if w[0].difference(&w[1]).is_none() {
                return Err(TableauError::Shape(format!("{} and {} are not neighbours", w[0], w[1])));
            }
        }
        Ok(Path { shapes })
    }

    pub fn n(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn shape(&self) -> &Partition {
        self.shapes.last().expect("nonempty path")
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// `λ^(k)`.
    pub fn at(&self, k: usize) -> &Partition {
        &self.shapes[k]
    }

    /// The truncation `t|_k`.
    pub fn restrict(&self, k: usize) -> Path {
        Path { shapes: self.shapes[..=k].to_vec() }
    }

    pub fn extend(&self, next: Partition) -> Path {
        let mut shapes = self.shapes.clone();
        shapes.push(next);
        Path { shapes }
    }

    /// True if step `k` adds a node.
    pub fn is_up(&self, k: usize) -> bool {
        self.shapes[k].size() > self.shapes[k - 1].size()
    }

    /// Componentwise dominance.
    pub fn dominates(&self, other: &Path) -> bool {
        self.shapes.iter().zip(&other.shapes).all(|(a, b)| a.dominates(b))
    }

    /// Total order used throughout: compare `λ^(n-1)`, then `λ^(n-2)`, ...
    /// with more dominant shapes first. It extends path dominance.
    pub fn order_cmp(&self, other: &Path) -> Ordering {
        for k in (0..self.shapes.len()).rev() {
            let c = self.shapes[k].order_cmp(&other.shapes[k]);
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .shapes
            .iter()
            .map(|p| {
                if p.is_empty() {
                    "∅".to_string()
                } else {
                    p.parts().iter().map(|x| x.to_string()).collect::<String>()
                }
            })
            .collect();
        write!(f, "({})", s.join(","))
    }
}

/// The shapes `μ` at level `n-1` with `μ → λ`, ordered
/// `μ^(1) ▷ μ^(2) ▷ ...`: removals first, then additions.
pub fn neighbours(lambda: &Partition, n: usize) -> Vec<Partition> {
    assert!(n >= 1);
    let mut down: Vec<Partition> = lambda.removable().into_iter().map(|x| lambda.remove_node(x)).collect();
    let mut up: Vec<Partition> = if lambda.size() < n - 1 {
        lambda.addable().into_iter().map(|x| lambda.add_node(x)).collect()
    } else {
        Vec::new()
    };
    down.sort_by(|a, b| a.order_cmp(b));
    up.sort_by(|a, b| a.order_cmp(b));
    down.extend(up);
    down
}

/// All up-down paths of length `n` ending at `λ`, in the order of [`Path::order_cmp`].
pub fn enumerate_paths(lambda: &Partition, n: usize) -> Result<Vec<Path>, TableauError> {
    layer_of(lambda, n)?;
    Ok(paths_rec(lambda, n))
}

fn paths_rec(lambda: &Partition, n: usize) -> Vec<Path> {
    if n == 0 {
        return if lambda.is_empty() { vec![Path { shapes: vec![Partition::empty()] }] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for mu in neighbours(lambda, n) {
        for p in paths_rec(&mu, n - 1) {
            out.push(p.extend(lambda.clone()));
        }
    }
    out
}

/// The unique maximal path `t^λ`: alternate `(1), ∅` for the `f` cap pairs,
/// then fill `λ` row by row.
pub fn maximal_path(lambda: &Partition, n: usize) -> Result<Path, TableauError> {
    let f = layer_of(lambda, n)?;
    let mut shapes = vec![Partition::empty()];
    for _ in 0..f {
        shapes.push(Partition::of(&[1]));
        shapes.push(Partition::empty());
    }
    let mut cur = Partition::empty();
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 1..=p {
            cur = cur.add_node(super::partition::Node::new(i + 1, j));
            shapes.push(cur.clone());
        }
    }
    Ok(Path { shapes })
}

/// Data attached to an up-neighbour `μ^(k)` of `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpStep {
    pub k: usize,
    pub mu: Partition,
    pub a_k: usize,
    /// Word of `d(s_k) = s_{a_k} ... s_{n-2}`.
    pub d_sk: Vec<usize>,
    /// Word of `w_k = s_{a_k-1} ... s_{2f-1} s_{n-1} ... s_{2f}`.
    pub w_k: Vec<usize>,
}

/// `w_p = s_{n-2} ... s_{2f-1} s_{n-1} ... s_{2f}` and the up-step data.
pub fn distinguished_perms(lambda: &Partition, n: usize) -> Result<(Vec<usize>, Vec<UpStep>), TableauError> {
    let f = layer_of(lambda, n)?;
    if f == 0 {
        return Err(TableauError::Shape("no up-neighbours when f = 0".into()));
    }
    let tail: Vec<usize> = desc(n - 1, 2 * f);
    let mut w_p = desc(n as isize as usize - 2, 2 * f - 1);
    w_p.extend(&tail);
    let nb = neighbours(lambda, n);
    let mut steps = Vec::new();
    for (idx, mu) in nb.iter().enumerate() {
        if mu.size() < lambda.size() {
            continue;
        }
        let x = lambda.difference(mu).expect("neighbour");
        let a_k = 2 * (f - 1) + (1..=x.row).map(|i| mu.row(i)).sum::<usize>();
        let d_sk: Vec<usize> = if a_k + 2 <= n { (a_k..=n - 2).collect() } else { Vec::new() };
        let mut w_k = desc(a_k - 1, 2 * f - 1);
        w_k.extend(&tail);
        steps.push(UpStep { k: idx + 1, mu: mu.clone(), a_k, d_sk, w_k });
    }
    Ok((w_p, steps))
}

/// `[hi, hi-1, ..., lo]`, empty when `hi < lo`.
fn desc(hi: usize, lo: usize) -> Vec<usize> {
    if hi < lo || hi == 0 {
        Vec::new()
    } else {
        (lo..=hi).rev().collect()
    }
}
