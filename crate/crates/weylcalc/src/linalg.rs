//! Dense exact-rational matrices: elimination, rank, determinants, kernels.
//!
//! Sizes in this crate stay tiny (at most a few dozen rows), so plain
//! Gaussian elimination over `BigRational` is the right tool.

use crate::Q;
use num::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        QMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduce to row-reduced echelon form in place; returns the pivot columns.
    ///
    /// The result is the canonical RREF of the row space, so two generating
    /// sets span the same subspace iff their reduced matrices (with zero rows
    /// dropped) are equal.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].clone();
            for j in c..self.cols {
                let v = std::mem::replace(&mut self[(r, j)], Q::zero());
                self[(r, j)] = v / &inv;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = &self[(r, j)] * &f;
                        self[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Canonical key for the row space: RREF with zero rows dropped.
    pub fn row_space_key(&self) -> Vec<Q> {
        let mut m = self.clone();
        let rank = m.rref().len();
        m.data.truncate(rank * m.cols);
        m.data
    }

    pub fn det(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Q::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= &m[(c, c)];
            let inv = m[(c, c)].clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &inv;
                for j in c..n {
                    let v = &m[(c, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
        }
        det
    }

    /// Basis of `{x : Mx = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Q::zero(); self.cols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// One solution of `Mx = b`, if any.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = QMat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn mul_vec(&self, x: &[Q]) -> Vec<Q> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !x[j].is_zero() {
                        acc += &self[(i, j)] * &x[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale_row(&mut self, i: usize, f: &Q) {
        assert!(!f.is_zero());
        for j in 0..self.cols {
            let v = std::mem::replace(&mut self[(i, j)], Q::zero());
            self[(i, j)] = v * f;
        }
    }

    pub fn scale_col(&mut self, j: usize, f: &Q) {
        assert!(!f.is_zero());
        for i in 0..self.rows {
            let v = std::mem::replace(&mut self[(i, j)], Q::zero());
            self[(i, j)] = v * f;
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

/// Integer-vector helpers shared by the root-system code.
pub fn qvec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| crate::q(x)).collect()
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one() || x.is_zero()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}
