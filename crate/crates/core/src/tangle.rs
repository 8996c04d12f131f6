//! Reduction of B–M–W words, read as framed tangle diagrams, to descending form.
//!
//! A word is drawn top to bottom, one layer per letter. Components are
//! traversed in a fixed order: arcs by their lowest endpoint (top points
//! `0..n`, then bottom points `n..2n`), each starting from that endpoint, and
//! closed loops last. A diagram is descending when every crossing is first met
//! as an over-crossing. A descending diagram with connectivity `d`, `k` loops
//! and self-writhe `w` equals `r^w z^k b_d`, where `b_d` is the descending lift
//! of `d` with self-writhe zero. Any other diagram is rewritten at its first
//! bad crossing with `T_i - T_i^{-1} = (q - q^{-1})(1 - E_i)`.

use crate::algebra::Gen;
use crate::diagram::BrauerDiagram;
use crate::exactring::{CoeffFraction, Var};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

pub(crate) type Sparse = Vec<(usize, CoeffFraction)>;

pub(crate) struct Trace {
    pub partner: Vec<u8>,
    pub loops: usize,
    pub first_bad: Option<usize>,
    pub writhe: i64,
}

struct Tracer<'a> {
    word: &'a [Gen],
    n: usize,
    visited: Vec<bool>,
    first: Vec<Option<(usize, i64)>>,
    first_bad: Option<usize>,
    writhe: i64,
}

impl<'a> Tracer<'a> {
    fn event(&mut self, layer: usize, strand_a: bool, dir: i64, comp: usize) {
        let inverse = match self.word[layer] {
            Gen::T(_) => false,
            Gen::TInv(_) => true,
            Gen::E(_) => unreachable!("caps are not crossings"),
        };
        let over = strand_a != inverse;
        match self.first[layer] {
            None => {
                self.first[layer] = Some((comp, dir));
                if !over && self.first_bad.is_none() {
                    self.first_bad = Some(layer);
                }
            }
            Some((c, d)) => {
                if c == comp {
                    let eps = if inverse { -1 } else { 1 };
                    self.writhe += eps * d * dir;
                }
            }
        }
    }

    /// Follows a strand; returns the boundary label reached, or `None` when a
    /// closed loop returns to its start.
    fn run(&mut self, mut level: usize, mut pos: usize, mut down: bool, comp: usize) -> Option<usize> {
        let n = self.n;
        let len = self.word.len();
        let start = (level, pos, down);
        loop {
            self.visited[level * n + pos - 1] = true;
            if down {
                if level == len {
                    return Some(n + pos - 1);
                }
                match self.word[level] {
                    Gen::T(i) | Gen::TInv(i) if pos == i || pos == i + 1 => {
                        self.event(level, pos == i, 1, comp);
                        pos = if pos == i { i + 1 } else { i };
                        level += 1;
                    }
                    Gen::E(i) if pos == i || pos == i + 1 => {
                        pos = if pos == i { i + 1 } else { i };
                        down = false;
                    }
                    _ => level += 1,
                }
            } else {
                if level == 0 {
                    return Some(pos - 1);
                }
                match self.word[level - 1] {
                    Gen::T(i) | Gen::TInv(i) if pos == i || pos == i + 1 => {
                        self.event(level - 1, pos == i + 1, -1, comp);
                        pos = if pos == i { i + 1 } else { i };
                        level -= 1;
                    }
                    Gen::E(i) if pos == i || pos == i + 1 => {
                        pos = if pos == i { i + 1 } else { i };
                        down = true;
                    }
                    _ => level -= 1,
                }
            }
            if (level, pos, down) == start {
                return None;
            }
        }
    }
}

/// Traces a word. When `stop_at_bad` is set the trace ends at the first bad crossing.
pub(crate) fn trace(word: &[Gen], n: usize, stop_at_bad: bool) -> Trace {
    let len = word.len();
    let mut tr =
        Tracer { word, n, visited: vec![false; (len + 1) * n], first: vec![None; len], first_bad: None, writhe: 0 };
    let mut partner = vec![u8::MAX; 2 * n];
    let mut comp = 0;
    for label in 0..2 * n {
        if partner[label] != u8::MAX {
            continue;
        }
        let end = if label < n { tr.run(0, label + 1, true, comp) } else { tr.run(len, label - n + 1, false, comp) }
            .expect("arcs end on the boundary");
        partner[label] = end as u8;
        partner[end] = label as u8;
        comp += 1;
        if stop_at_bad && tr.first_bad.is_some() {
            return Trace { partner, loops: 0, first_bad: tr.first_bad, writhe: 0 };
        }
    }
    let mut loops = 0;
    for level in 1..len {
        for pos in 1..=n {
            if !tr.visited[level * n + pos - 1] {
                tr.run(level, pos, true, comp);
                comp += 1;
                loops += 1;
                if stop_at_bad && tr.first_bad.is_some() {
                    return Trace { partner, loops, first_bad: tr.first_bad, writhe: 0 };
                }
            }
        }
    }
    Trace { partner, loops, first_bad: tr.first_bad, writhe: tr.writhe }
}

/// Makes a word descending by switching its bad crossings; returns the new
/// word and its self-writhe.
pub(crate) fn make_descending(word: &[Gen], n: usize) -> (Vec<Gen>, i64) {
    let mut w = word.to_vec();
    loop {
        let t = trace(&w, n, true);
        match t.first_bad {
            Some(l) => w[l] = w[l].flipped(),
            None => {
                let writhe = trace(&w, n, false).writhe;
                return (w, writhe);
            }
        }
    }
}

pub(crate) struct Reducer {
    n: usize,
    delta: CoeffFraction,
    z: CoeffFraction,
    r: CoeffFraction,
    r_inv: CoeffFraction,
    memo: HashMap<Vec<Gen>, Arc<Sparse>>,
}

fn accumulate(acc: &mut BTreeMap<usize, CoeffFraction>, v: &Sparse, c: &CoeffFraction) {
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(CoeffFraction::zero);
        *e = e.add(&x.mul(c));
    }
}

fn finish(acc: BTreeMap<usize, CoeffFraction>) -> Sparse {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl Reducer {
    pub fn new(n: usize) -> Reducer {
        Reducer {
            n,
            delta: CoeffFraction::delta(),
            z: CoeffFraction::bmw_z(),
            r: CoeffFraction::var(Var::R),
            r_inv: CoeffFraction::var_pow(Var::R, -1),
            memo: HashMap::new(),
        }
    }

    /// Applies the local relations `T T^{-1} = 1`, `E^2 = zE`, `T^{±1}E = ET^{±1} = r^{∓1}E`.
    fn simplify(&self, word: &[Gen]) -> (CoeffFraction, Vec<Gen>) {
        let mut c = CoeffFraction::one();
        let mut out: Vec<Gen> = Vec::with_capacity(word.len());
        for &g0 in word {
            let mut g = Some(g0);
            while let (Some(cur), Some(&last)) = (g, out.last()) {
                if last.index() != cur.index() {
                    break;
                }
                let i = cur.index();
                match (last, cur) {
                    (Gen::T(_), Gen::TInv(_)) | (Gen::TInv(_), Gen::T(_)) => {
                        out.pop();
                        g = None;
                    }
                    (Gen::E(_), Gen::E(_)) => {
                        c = c.mul(&self.z);
                        out.pop();
                        g = Some(Gen::E(i));
                    }
                    (Gen::T(_), Gen::E(_)) | (Gen::E(_), Gen::T(_)) => {
                        c = c.mul(&self.r_inv);
                        out.pop();
                        g = Some(Gen::E(i));
                    }
                    (Gen::TInv(_), Gen::E(_)) | (Gen::E(_), Gen::TInv(_)) => {
                        c = c.mul(&self.r);
                        out.pop();
                        g = Some(Gen::E(i));
                    }
                    _ => break,
                }
            }
            if let Some(g) = g {
                out.push(g);
            }
        }
        (c, out)
    }

    /// Coordinates of the word in the basis `b_d`, indexed through `index`.
    pub fn reduce(&mut self, word: &[Gen], index: &HashMap<BrauerDiagram, usize>) -> Sparse {
        let (c, w) = self.simplify(word);
        let v = self.reduce_simple(w, index);
        v.iter().map(|(k, x)| (*k, x.mul(&c))).collect()
    }

    fn reduce_simple(&mut self, w: Vec<Gen>, index: &HashMap<BrauerDiagram, usize>) -> Arc<Sparse> {
        if let Some(v) = self.memo.get(&w) {
            return v.clone();
        }
        let t = trace(&w, self.n, true);
        let result = match t.first_bad {
            None => {
                let t = trace(&w, self.n, false);
                let d = BrauerDiagram::from_partner(t.partner);
                let coeff = CoeffFraction::var_pow(Var::R, t.writhe as i32)
                    .mul(&self.z.pow(t.loops as i32).expect("z is nonzero"));
                vec![(index[&d], coeff)]
            }
            Some(l) => {
                let i = w[l].index();
                let mut flipped = w.clone();
                flipped[l] = w[l].flipped();
                let mut smooth = w.clone();
                smooth.remove(l);
                let mut capped = w.clone();
                capped[l] = Gen::E(i);
                // T = T^{-1} + delta (1 - E) and T^{-1} = T - delta (1 - E)
                let sign = if matches!(w[l], Gen::T(_)) { self.delta.clone() } else { self.delta.neg() };
                let mut acc = BTreeMap::new();
                let one = CoeffFraction::one();
                let a = self.reduce(&flipped, index);
                accumulate(&mut acc, &a, &one);
                let b = self.reduce(&smooth, index);
                accumulate(&mut acc, &b, &sign);
                let e = self.reduce(&capped, index);
                accumulate(&mut acc, &e, &sign.neg());
                finish(acc)
            }
        };
        let result = Arc::new(result);
        self.memo.insert(w, result.clone());
        result
    }
}
