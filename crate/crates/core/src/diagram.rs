//! Brauer diagrams: perfect matchings on `2n` points.
//!
//! Points `0..n` are the top row (left to right), `n..2n` the bottom row.
//! The product `a * b` stacks `a` above `b`.

use crate::combin::Perm;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    partner: Vec<u8>,
}

impl BrauerDiagram {
    pub fn from_partner(partner: Vec<u8>) -> BrauerDiagram {
        let m = partner.len();
        assert!(m.is_multiple_of(2), "odd number of points");
        for (i, &p) in partner.iter().enumerate() {
            assert!((p as usize) < m && p as usize != i && partner[p as usize] as usize == i, "not a matching");
        }
        BrauerDiagram { partner }
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p] as usize
    }

    pub fn partners(&self) -> &[u8] {
        &self.partner
    }

    pub fn identity(n: usize) -> BrauerDiagram {
        BrauerDiagram::from_perm(&Perm::identity(n))
    }

    /// Top point `k` joined to bottom point `(k)w`.
    pub fn from_perm(w: &Perm) -> BrauerDiagram {
        let n = w.n();
        let mut partner = vec![0u8; 2 * n];
        for k in 1..=n {
            let b = n + w.apply(k) - 1;
            partner[k - 1] = b as u8;
            partner[b] = (k - 1) as u8;
        }
        BrauerDiagram { partner }
    }

    pub fn s(n: usize, i: usize) -> BrauerDiagram {
        BrauerDiagram::from_perm(&Perm::simple(n, i))
    }

    pub fn e(n: usize, i: usize) -> BrauerDiagram {
        assert!(i >= 1 && i < n);
        let mut d = BrauerDiagram::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = b as u8;
        d.partner[b] = a as u8;
        d.partner[n + a] = (n + b) as u8;
        d.partner[n + b] = (n + a) as u8;
        d
    }

    /// Number of arcs joining two top points.
    pub fn caps(&self) -> usize {
        let n = self.n();
        (0..n).filter(|&p| (self.partner[p] as usize) < n && p < self.partner[p] as usize).count()
    }

    pub fn is_permutation(&self) -> bool {
        self.caps() == 0
    }

    /// The underlying permutation when there are no caps.
    pub fn to_perm(&self) -> Option<Perm> {
        if !self.is_permutation() {
            return None;
        }
        let n = self.n();
        Some(Perm::from_images((0..n).map(|k| (self.partner[k] as usize - n + 1) as u8).collect()))
    }

    /// Top arcs `(a, b)` with `a < b`, 1-based positions, sorted.
    pub fn top_caps(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .filter(|&p| (self.partner[p] as usize) < n && p < self.partner[p] as usize)
            .map(|p| (p + 1, self.partner[p] as usize + 1))
            .collect()
    }

    /// Bottom arcs `(a, b)` with `a < b`, 1-based positions, sorted.
    pub fn bottom_caps(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (n..2 * n)
            .filter(|&p| (self.partner[p] as usize) >= n && p < self.partner[p] as usize)
            .map(|p| (p - n + 1, self.partner[p] as usize - n + 1))
            .collect()
    }

    /// Reflection in the horizontal axis (the anti-involution `*`).
    pub fn flip(&self) -> BrauerDiagram {
        let n = self.n();
        let sw = |p: usize| if p < n { p + n } else { p - n };
        let mut partner = vec![0u8; 2 * n];
        for p in 0..2 * n {
            partner[sw(p)] = sw(self.partner[p] as usize) as u8;
        }
        BrauerDiagram { partner }
    }

    /// Stacks `self` above `other`; returns the product diagram and the
    /// number of closed loops removed.
    pub fn compose(&self, other: &BrauerDiagram) -> (BrauerDiagram, usize) {
        let n = self.n();
        assert_eq!(n, other.n(), "diagram sizes differ");
        // Middle point k is the bottom point k of `self` and the top point k of `other`.
        let mut seen_mid = vec![false; n];
        let mut partner = vec![u8::MAX; 2 * n];
        // Walks from middle point k, entering `other` (down) or `self` (up).
        let follow = |mut k: usize, mut down: bool, seen: &mut [bool]| -> usize {
            loop {
                seen[k] = true;
                if down {
                    let p = other.partner[k] as usize;
                    if p >= n {
                        return p;
                    }
                    k = p;
                    down = false;
                } else {
                    let p = self.partner[n + k] as usize;
                    if p < n {
                        return p;
                    }
                    k = p - n;
                    down = true;
                }
            }
        };
        for start in 0..2 * n {
            if partner[start] != u8::MAX {
                continue;
            }
            let end = if start < n {
                let p = self.partner[start] as usize;
                if p < n {
                    p
                } else {
                    follow(p - n, true, &mut seen_mid)
                }
            } else {
                let p = other.partner[start] as usize;
                if p >= n {
                    p
                } else {
                    follow(p, false, &mut seen_mid)
                }
            };
            partner[start] = end as u8;
            partner[end] = start as u8;
        }
        let mut loops = 0;
        for k in 0..n {
            if seen_mid[k] {
                continue;
            }
            loops += 1;
            let mut j = k;
            while !seen_mid[j] {
                seen_mid[j] = true;
                let p = other.partner[j] as usize;
                seen_mid[p] = true;
                j = self.partner[n + p] as usize - n;
            }
        }
        (BrauerDiagram { partner }, loops)
    }

    /// All `(2n-1)!!` diagrams, ordered by number of caps and then by partner list.
    pub fn all(n: usize) -> Vec<BrauerDiagram> {
        fn rec(partner: &mut Vec<u8>, out: &mut Vec<BrauerDiagram>) {
            let Some(a) = partner.iter().position(|&x| x == u8::MAX) else {
                out.push(BrauerDiagram { partner: partner.clone() });
                return;
            };
            for b in a + 1..partner.len() {
                if partner[b] == u8::MAX {
                    partner[a] = b as u8;
                    partner[b] = a as u8;
                    rec(partner, out);
                    partner[a] = u8::MAX;
                    partner[b] = u8::MAX;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![u8::MAX; 2 * n], &mut out);
        out.sort_by(|a, b| a.caps().cmp(&b.caps()).then_with(|| a.partner.cmp(&b.partner)));
        out
    }

    /// Permutations `a`, `b` with `self = a * E_1 E_3 ... E_{2f-1} * b`.
    pub fn factor(&self) -> (Perm, Perm) {
        let n = self.n();
        let top = self.top_caps();
        let bot = self.bottom_caps();
        let f = top.len();
        let mut a = vec![0u8; n];
        let mut b = vec![0u8; n];
        for (i, &(x, y)) in top.iter().enumerate() {
            a[x - 1] = (2 * i + 1) as u8;
            a[y - 1] = (2 * i + 2) as u8;
        }
        for (i, &(x, y)) in bot.iter().enumerate() {
            b[2 * i] = x as u8;
            b[2 * i + 1] = y as u8;
        }
        let mut j = 2 * f;
        for k in 0..n {
            let p = self.partner[k] as usize;
            if p >= n {
                a[k] = (j + 1) as u8;
                b[j] = (p - n + 1) as u8;
                j += 1;
            }
        }
        (Perm::from_images(a), Perm::from_images(b))
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BrauerDiagram {
    /// Pairs of 1-based labels, bottom points primed: `{1-2', 2-1', 3-4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let lab = |p: usize| if p < n { format!("{}", p + 1) } else { format!("{}'", p - n + 1) };
        let mut parts = Vec::new();
        for p in 0..2 * n {
            let q = self.partner[p] as usize;
            if p < q {
                parts.push(format!("{}-{}", lab(p), lab(q)));
            }
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize, f: usize) -> BrauerDiagram {
        let mut d = BrauerDiagram::identity(n);
        for i in 0..f {
            d = d.compose(&BrauerDiagram::e(n, 2 * i + 1)).0;
        }
        d
    }

    #[test]
    fn e_squared_has_one_loop() {
        let e = BrauerDiagram::e(3, 1);
        assert_eq!(e.compose(&e), (e.clone(), 1));
        let (x, l1) = e.compose(&BrauerDiagram::e(3, 2));
        let (y, l2) = x.compose(&e);
        assert_eq!((y, l1 + l2), (e, 0));
    }

    #[test]
    fn permutations_compose_like_perms() {
        for u in Perm::all(4) {
            for v in Perm::all(4).iter().step_by(5) {
                let (d, l) = BrauerDiagram::from_perm(&u).compose(&BrauerDiagram::from_perm(v));
                assert_eq!(l, 0);
                assert_eq!(d, BrauerDiagram::from_perm(&u.mul(v)));
            }
        }
    }

    #[test]
    fn counts_and_factorisation() {
        for n in 1..=6 {
            let all = BrauerDiagram::all(n);
            assert_eq!(all.len(), (1..=n).map(|k| 2 * k - 1).product::<usize>());
            for d in all.iter().step_by(7) {
                let (a, b) = d.factor();
                let f = d.caps();
                let x = BrauerDiagram::from_perm(&a).compose(&chain(n, f)).0;
                let (y, loops) = x.compose(&BrauerDiagram::from_perm(&b));
                assert_eq!((y, loops), (d.clone(), 0), "{}", d);
            }
        }
    }

    #[test]
    fn flip_reverses_products() {
        let a = BrauerDiagram::e(4, 2).compose(&BrauerDiagram::s(4, 1)).0;
        let b = BrauerDiagram::s(4, 3).compose(&BrauerDiagram::e(4, 1)).0;
        let (ab, l1) = a.compose(&b);
        let (ba, l2) = b.flip().compose(&a.flip());
        assert_eq!((ab.flip(), l1), (ba, l2));
    }
}
