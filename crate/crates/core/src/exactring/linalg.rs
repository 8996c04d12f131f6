//! Dense exact linear algebra over [`CoeffFraction`].
//!
//! Every routine accepts a normalising map applied after each arithmetic step,
//! which lets the same code run in a quotient field such as `Q[q]/(Phi_5)`.

use super::{CoeffFraction, RingError};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<CoeffFraction>,
}

pub type Norm<'a> = &'a dyn Fn(CoeffFraction) -> CoeffFraction;

fn ident(x: CoeffFraction) -> CoeffFraction {
    x
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![CoeffFraction::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = CoeffFraction::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CoeffFraction>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[CoeffFraction] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<CoeffFraction>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&CoeffFraction) -> CoeffFraction) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<E>(&self, f: impl Fn(&CoeffFraction) -> Result<CoeffFraction, E>) -> Result<Matrix, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn det(&self) -> CoeffFraction {
        self.det_with(&ident)
    }

    pub fn det_with(&self, norm: Norm) -> CoeffFraction {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.map(|x| norm(x.clone()));
        let mut det = CoeffFraction::one();
        for c in 0..n {
            let Some(p) = pick_pivot(&a, c, c) else {
                return CoeffFraction::zero();
            };
            if p != c {
                a.swap_rows(p, c);
                det = det.neg();
            }
            let piv = a[(c, c)].clone();
            det = norm(det.mul(&piv));
            let inv = norm(piv.inv().expect("nonzero pivot"));
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = norm(a[(r, c)].mul(&inv));
                for k in c..n {
                    let v = norm(a[(r, k)].sub(&f.mul(&a[(c, k)])));
                    a[(r, k)] = v;
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        self.rank_with(&ident)
    }

    pub fn rank_with(&self, norm: Norm) -> usize {
        let (_, pivots) = self.rref_with(norm);
        pivots.len()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref_with(&self, norm: Norm) -> (Matrix, Vec<usize>) {
        let mut a = self.map(|x| norm(x.clone()));
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = pick_pivot(&a, row, c) else { continue };
            a.swap_rows(p, row);
            let inv = norm(a[(row, c)].inv().expect("nonzero pivot"));
            for k in c..self.cols {
                let v = norm(a[(row, k)].mul(&inv));
                a[(row, k)] = v;
            }
            for r in 0..self.rows {
                if r == row || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for k in c..self.cols {
                    if !a[(row, k)].is_zero() {
                        let v = norm(a[(r, k)].sub(&f.mul(&a[(row, k)])));
                        a[(r, k)] = v;
                    }
                }
            }
            pivots.push(c);
            row += 1;
        }
        (a, pivots)
    }

    pub fn inverse(&self) -> Result<Matrix, RingError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = CoeffFraction::one();
        }
        let (r, piv) = aug.rref_with(&ident);
        if piv.len() < n || piv[n - 1] >= n {
            return Err(RingError::DivisionByZero);
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(out)
    }

    /// Solves `self * x = b` for a square invertible matrix.
    pub fn solve(&self, b: &[CoeffFraction]) -> Result<Vec<CoeffFraction>, RingError> {
        let n = self.rows;
        let mut aug = Self::zeros(n, self.cols + 1);
        for i in 0..n {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, piv) = aug.rref_with(&ident);
        if piv.len() < self.cols || piv.contains(&self.cols) {
            return Err(RingError::DivisionByZero);
        }
        Ok((0..self.cols).map(|i| r[(i, self.cols)].clone()).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }
}

fn pick_pivot(a: &Matrix, from_row: usize, col: usize) -> Option<usize> {
    (from_row..a.rows).filter(|&r| !a[(r, col)].is_zero()).min_by_key(|&r| a[(r, col)].size())
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = CoeffFraction;
    fn index(&self, (i, j): (usize, usize)) -> &CoeffFraction {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CoeffFraction {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect();
        let mut width = vec![1; self.cols];
        for row in &cells {
            for (j, c) in row.iter().enumerate() {
                width[j] = width[j].max(c.len());
            }
        }
        for row in &cells {
            let line: Vec<String> = row.iter().enumerate().map(|(j, c)| format!("{:>w$}", c, w = width[j])).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::frac;

    fn m(rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| frac(s)).collect()).collect())
    }

    #[test]
    fn brauer_gram_determinant() {
        let g = m(&[&["z", "1", "1"], &["1", "z", "1"], &["1", "1", "z"]]);
        assert_eq!(g.det(), frac("(z-1)^2*(z+2)"));
    }

    #[test]
    fn rank_and_inverse() {
        let a = m(&[&["1", "q"], &["q", "q^2"]]);
        assert_eq!(a.rank(), 1);
        let b = m(&[&["1", "q"], &["0", "r"]]);
        let inv = b.inverse().unwrap();
        assert_eq!(b.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn solve_system() {
        let a = m(&[&["2", "1"], &["1", "3"]]);
        let x = a.solve(&[frac("3"), frac("4")]).unwrap();
        assert_eq!(x, vec![frac("1"), frac("1")]);
    }
}
