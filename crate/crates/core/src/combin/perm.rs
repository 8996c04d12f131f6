//! Permutations of `{1..n}` acting on the right.

use std::fmt;

/// A permutation stored as its one-line images: `img[k-1] = (k)w`.
///
/// Composition follows the right-action convention: `(k)(uv) = ((k)u)v`,
/// so the word `s_{i_1} s_{i_2} ...` applies `s_{i_1}` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { img: (1..=n as u8).collect() }
    }

    pub fn from_images(img: Vec<u8>) -> Perm {
        let mut seen = vec![false; img.len()];
        for &x in &img {
            assert!(x >= 1 && (x as usize) <= img.len() && !seen[x as usize - 1], "not a permutation: {:?}", img);
            seen[x as usize - 1] = true;
        }
        Perm { img }
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n, "s_{} out of range for n={}", i, n);
        let mut p = Perm::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    /// Product of simple transpositions, applied left to right.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        let mut p = Perm::identity(n);
        for &i in word {
            p = p.mul_simple(i);
        }
        p
    }

    /// Builds a permutation from disjoint cycles such as `[[6,8],[7,10,9]]`.
    pub fn from_cycles(n: usize, cycles: &[&[u8]]) -> Perm {
        let mut img: Vec<u8> = (1..=n as u8).collect();
        for c in cycles {
            for k in 0..c.len() {
                img[c[k] as usize - 1] = c[(k + 1) % c.len()];
            }
        }
        Perm::from_images(img)
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.img
    }

    /// `(k)w`, for `1 <= k <= n`.
    pub fn apply(&self, k: usize) -> usize {
        self.img[k - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `self * other`: apply `self` first.
    pub fn mul(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm { img: self.img.iter().map(|&x| other.img[x as usize - 1]).collect() }
    }

    /// `self * s_i`: swaps the values `i` and `i+1`.
    pub fn mul_simple(&self, i: usize) -> Perm {
        let mut img = self.img.clone();
        for x in img.iter_mut() {
            if *x as usize == i {
                *x = (i + 1) as u8;
            } else if *x as usize == i + 1 {
                *x = i as u8;
            }
        }
        Perm { img }
    }

    /// `s_i * self`: swaps the positions `i` and `i+1`.
    pub fn simple_mul(&self, i: usize) -> Perm {
        let mut img = self.img.clone();
        img.swap(i - 1, i);
        Perm { img }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.n()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize - 1] = (i + 1) as u8;
        }
        Perm { img }
    }

    /// Coxeter length (number of inversions).
    pub fn length(&self) -> usize {
        let mut c = 0;
        for i in 0..self.img.len() {
            for j in i + 1..self.img.len() {
                if self.img[i] > self.img[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// True if `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.img[i - 1] > inv.img[i]
    }

    /// True if `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.img[i - 1] > self.img[i]
    }

    /// Canonical reduced word: repeatedly strip the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        'outer: while !w.is_identity() {
            for i in 1..w.n() {
                if w.has_right_descent(i) {
                    w = w.mul_simple(i);
                    rev.push(i);
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation without descent");
        }
        rev.reverse();
        rev
    }

    /// Embeds into `S_m` (`m >= n`) fixing the new points.
    pub fn extend(&self, m: usize) -> Perm {
        assert!(m >= self.n());
        let mut img = self.img.clone();
        img.extend((self.n() + 1..=m).map(|x| x as u8));
        Perm { img }
    }

    /// Shifts a permutation of `{1..k}` to act on `{s+1..s+k}` inside `S_n`.
    pub fn shift(&self, s: usize, n: usize) -> Perm {
        let mut img: Vec<u8> = (1..=n as u8).collect();
        for (i, &x) in self.img.iter().enumerate() {
            img[s + i] = x + s as u8;
        }
        Perm { img }
    }

    /// Cycle notation, omitting fixed points; `()` for the identity.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 1..=self.n() {
            if seen[s - 1] || self.apply(s) == s {
                continue;
            }
            let mut c = vec![s];
            seen[s - 1] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x - 1] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    /// All permutations of `S_n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Perm { img: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

/// Formats a word in simple transpositions as `s_2 s_1`, or `1` when empty.
pub fn word_string(word: &[usize], letter: &str) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|i| format!("{}_{}", letter, i)).collect::<Vec<_>>().join(" ")
}
