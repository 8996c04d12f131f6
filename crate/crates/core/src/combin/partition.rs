//! Partitions, nodes and the dominance order in which smaller partitions dominate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A node `(row, column)`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Node {
        assert!(row >= 1 && col >= 1, "nodes are 1-based");
        Node { row, col }
    }

    /// Content `j - i`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// Outcome of comparing two partitions in the dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Dominates,
    Dominated,
    Equal,
    Incomparable,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

impl Partition {
    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn new(parts: Vec<usize>) -> Result<Partition, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length (0 beyond the last row), rows 1-based.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push(Node::new(i + 1, j));
            }
        }
        out
    }

    pub fn contains(&self, x: Node) -> bool {
        x.col <= self.row(x.row)
    }

    pub fn addable(&self) -> Vec<Node> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.row(i - 1) > self.row(i))
            .map(|i| Node::new(i, self.row(i) + 1))
            .collect()
    }

    pub fn removable(&self) -> Vec<Node> {
        (1..=self.len()).filter(|&i| self.row(i) > self.row(i + 1)).map(|i| Node::new(i, self.row(i))).collect()
    }

    /// (addable, removable) nodes, each sorted by row.
    pub fn box_steps(&self) -> (Vec<Node>, Vec<Node>) {
        (self.addable(), self.removable())
    }

    pub fn add_node(&self, x: Node) -> Partition {
        let mut parts = self.parts.clone();
        if x.row > parts.len() {
            parts.push(0);
        }
        parts[x.row - 1] += 1;
        Partition::new(parts).expect("addable node")
    }

    pub fn remove_node(&self, x: Node) -> Partition {
        let mut parts = self.parts.clone();
        parts[x.row - 1] -= 1;
        if parts[x.row - 1] == 0 {
            parts.pop();
        }
        Partition::new(parts).expect("removable node")
    }

    /// The node by which `self` and `other` differ, if they differ by exactly one.
    pub fn difference(&self, other: &Partition) -> Option<Node> {
        let (big, small) = if self.size() > other.size() { (self, other) } else { (other, self) };
        if big.size() != small.size() + 1 {
            return None;
        }
        let mut found = None;
        for i in 1..=big.len() {
            match big.row(i) as i64 - small.row(i) as i64 {
                0 => {}
                1 if found.is_none() => found = Some(Node::new(i, big.row(i))),
                _ => return None,
            }
        }
        found
    }

    /// Sum of contents `j - i` over all nodes.
    pub fn content_sum(&self) -> i64 {
        self.nodes().iter().map(|x| x.content()).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.row(1);
        Partition { parts: (1..=m).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect() }
    }

    /// Dominance with inverted size rule: fewer boxes dominates more boxes.
    pub fn dominance(&self, other: &Partition) -> Dominance {
        let (a, b) = (self.size(), other.size());
        if a != b {
            return if b > a { Dominance::Dominates } else { Dominance::Dominated };
        }
        if self == other {
            return Dominance::Equal;
        }
        let (mut sa, mut sb) = (0, 0);
        let (mut ge, mut le) = (true, true);
        for i in 1..=self.len().max(other.len()) {
            sa += self.row(i);
            sb += other.row(i);
            ge &= sa >= sb;
            le &= sa <= sb;
        }
        match (ge, le) {
            (true, false) => Dominance::Dominates,
            (false, true) => Dominance::Dominated,
            _ => Dominance::Incomparable,
        }
    }

    /// `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        matches!(self.dominance(other), Dominance::Dominates | Dominance::Equal)
    }

    /// A total order extending dominance: more dominant partitions sort first
    /// (smaller size first, then reverse lexicographic on parts).
    pub fn order_cmp(&self, other: &Partition) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }

    /// All partitions of `m`, most dominant first.
    pub fn all(m: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }

    /// All shapes indexing cell modules of a rank-`n` Brauer-type algebra,
    /// ordered as a linear extension of dominance (`f` decreasing).
    pub fn cell_shapes(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for f in (0..=n / 2).rev() {
            out.extend(Partition::all(n - 2 * f));
        }
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;
    /// Accepts `3,2,1`, `(3,2,1)`, `0`, `()` or an empty string for the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "0" || t == "empty" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| PartitionError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smaller_partitions_dominate() {
        assert_eq!(Partition::of(&[1]).dominance(&Partition::of(&[3])), Dominance::Dominates);
        assert_eq!(Partition::of(&[2, 1]).dominance(&Partition::of(&[2, 1])), Dominance::Equal);
        assert_eq!(Partition::of(&[2, 2]).dominance(&Partition::of(&[3, 1])), Dominance::Dominated);
        assert_eq!(Partition::of(&[3, 3]).dominance(&Partition::of(&[4, 1, 1])), Dominance::Incomparable);
    }

    #[test]
    fn box_steps_of_staircase() {
        let (add, rem) = Partition::of(&[3, 2, 1]).box_steps();
        assert_eq!(rem, vec![Node::new(1, 3), Node::new(2, 2), Node::new(3, 1)]);
        assert_eq!(add, vec![Node::new(1, 4), Node::new(2, 3), Node::new(3, 2), Node::new(4, 1)]);
        let (add, rem) = Partition::empty().box_steps();
        assert!(rem.is_empty());
        assert_eq!(add, vec![Node::new(1, 1)]);
        let (add, rem) = Partition::of(&[2, 2]).box_steps();
        assert_eq!(rem, vec![Node::new(2, 2)]);
        assert_eq!(add, vec![Node::new(1, 3), Node::new(3, 1)]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=7).map(|m| Partition::all(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn order_extends_dominance() {
        let all = Partition::cell_shapes(6);
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(!matches!(a.dominance(b), Dominance::Dominated), "{} after {}", a, b);
            }
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), Partition::of(&[3, 2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
    }
}
