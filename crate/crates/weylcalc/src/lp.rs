//! Exact rational linear programming: a small dense two-phase simplex.
//!
//! Problems here are tiny (tens of variables), so a textbook tableau with
//! Bland's anti-cycling rule over `BigRational` is both simple and sound.
//! No tolerances: feasibility answers are exact.

use crate::linalg::QMat;
use crate::Q;
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    /// Optimal solution and objective value.
    Optimal(Vec<Q>, Q),
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// m x (n+1); last column is the rhs.
    t: QMat,
    obj: Vec<Q>,
    value: Q,
    basis: Vec<usize>,
    n: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, j: usize) {
        let cols = self.n + 1;
        let inv = self.t[(r, j)].clone();
        for k in 0..cols {
            let v = std::mem::replace(&mut self.t[(r, k)], Q::zero());
            self.t[(r, k)] = v / &inv;
        }
        for i in 0..self.t.rows {
            if i == r || self.t[(i, j)].is_zero() {
                continue;
            }
            let f = self.t[(i, j)].clone();
            for k in 0..cols {
                let v = &self.t[(r, k)] * &f;
                self.t[(i, k)] -= v;
            }
        }
        if !self.obj[j].is_zero() {
            let f = self.obj[j].clone();
            for k in 0..self.n {
                let v = &self.t[(r, k)] * &f;
                self.obj[k] -= v;
            }
            let v = &self.t[(r, self.n)] * &f;
            self.value += v;
        }
        self.basis[r] = j;
    }

    /// Run simplex to optimality. Returns false on unboundedness.
    fn optimize(&mut self) -> bool {
        loop {
            // Bland: entering = lowest index with positive reduced cost.
            let Some(j) = (0..self.n).find(|&j| self.obj[j] > Q::zero()) else {
                return true;
            };
            let mut best: Option<(usize, Q)> = None;
            for r in 0..self.t.rows {
                if self.t[(r, j)] > Q::zero() {
                    let ratio = &self.t[(r, self.n)] / &self.t[(r, j)];
                    let better = match &best {
                        None => true,
                        Some((br, bratio)) => {
                            ratio < *bratio || (ratio == *bratio && self.basis[r] < self.basis[*br])
                        }
                    };
                    if better {
                        best = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, j);
        }
    }

    fn solution(&self) -> Vec<Q> {
        let mut x = vec![Q::zero(); self.n];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < self.n {
                x[b] = self.t[(r, self.n)].clone();
            }
        }
        x
    }
}

/// Maximize `c.x` subject to `Ax = b`, `x >= 0`.
pub fn maximize(a: &QMat, b: &[Q], c: &[Q]) -> LpOutcome {
    let m = a.rows;
    let n = a.cols;
    assert_eq!(b.len(), m);
    assert_eq!(c.len(), n);

    // Phase 1 tableau with artificial variables n..n+m and rhs >= 0.
    let total = n + m;
    let mut t = QMat::zero(m, total + 1);
    for i in 0..m {
        let neg = b[i] < Q::zero();
        for j in 0..n {
            t[(i, j)] = if neg { -a[(i, j)].clone() } else { a[(i, j)].clone() };
        }
        t[(i, n + i)] = Q::one();
        t[(i, total)] = if neg { -b[i].clone() } else { b[i].clone() };
    }
    // Phase-1 objective: maximize -(sum of artificials); reduced costs are
    // the column sums for the original variables.
    let mut obj = vec![Q::zero(); total];
    let mut value = Q::zero();
    for j in 0..n {
        for i in 0..m {
            obj[j] += &t[(i, j)];
        }
    }
    for i in 0..m {
        value -= &t[(i, total)];
    }
    let mut tab = Tableau { t, obj, value, basis: (n..n + m).collect(), n: total };
    assert!(tab.optimize(), "phase-1 objective is bounded by construction");
    if !tab.value.is_zero() {
        return LpOutcome::Infeasible;
    }
    // Drive any zero-level artificials out of the basis.
    for r in 0..m {
        if tab.basis[r] >= n {
            if let Some(j) = (0..n).find(|&j| !tab.t[(r, j)].is_zero()) {
                tab.pivot(r, j);
            }
        }
    }
    // Rows still based on an artificial are redundant constraints; freeze
    // them by forbidding re-entry (the artificial stays at level zero).

    // Phase 2: reduced costs c_j - c_B . column_j for the real objective.
    // Artificial columns are pinned at -1 so they never re-enter.
    let mut obj = vec![-Q::one(); total];
    let mut value = Q::zero();
    for (j, item) in obj.iter_mut().enumerate().take(n) {
        let mut red = c[j].clone();
        for r in 0..m {
            let b = tab.basis[r];
            if b < n && !c[b].is_zero() {
                red -= &c[b] * &tab.t[(r, j)];
            }
        }
        *item = red;
    }
    for r in 0..m {
        let b = tab.basis[r];
        if b < n && !c[b].is_zero() {
            value += &c[b] * &tab.t[(r, total)];
        }
    }
    tab.obj = obj;
    tab.value = value;
    if !tab.optimize() {
        return LpOutcome::Unbounded;
    }
    let x = tab.solution();
    LpOutcome::Optimal(x[..n].to_vec(), tab.value.clone())
}

/// Find any `x >= 0` with `Ax = b`.
pub fn feasible_nonneg(a: &QMat, b: &[Q]) -> Option<Vec<Q>> {
    match maximize(a, b, &vec![Q::zero(); a.cols]) {
        LpOutcome::Optimal(x, _) => Some(x),
        _ => None,
    }
}

/// Is `target` a non-negative rational combination of `gens`?
/// Returns the coefficients when it is.
pub fn cone_coefficients(gens: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    if gens.is_empty() {
        return target.iter().all(Zero::is_zero).then(Vec::new);
    }
    let dim = target.len();
    let mut a = QMat::zero(dim, gens.len());
    for (j, g) in gens.iter().enumerate() {
        assert_eq!(g.len(), dim);
        for i in 0..dim {
            a[(i, j)] = g[i].clone();
        }
    }
    feasible_nonneg(&a, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qvec;
    use crate::{q, qr};

    #[test]
    fn simple_max() {
        // max x + y s.t. x + y + s = 1
        let a = QMat::from_rows(vec![qvec(&[1, 1, 1])]);
        match maximize(&a, &qvec(&[1]), &qvec(&[1, 1, 0])) {
            LpOutcome::Optimal(_, v) => assert_eq!(v, q(1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_detected() {
        // x + y = -1 with x,y >= 0
        let a = QMat::from_rows(vec![qvec(&[1, 1])]);
        assert_eq!(maximize(&a, &qvec(&[-1]), &qvec(&[0, 0])), LpOutcome::Infeasible);
    }

    #[test]
    fn cone_membership() {
        let gens = vec![qvec(&[1, 0]), qvec(&[1, 1])];
        let c = cone_coefficients(&gens, &qvec(&[3, 1])).unwrap();
        assert_eq!(c, vec![q(2), q(1)]);
        assert!(cone_coefficients(&gens, &qvec(&[-1, 0])).is_none());
        // Fractional combination.
        let c = cone_coefficients(&gens, &[qr(1, 2), qr(1, 2)]).unwrap();
        assert_eq!(c, vec![q(0), qr(1, 2)]);
    }

    #[test]
    fn redundant_rows_ok() {
        let a = QMat::from_rows(vec![qvec(&[1, 1]), qvec(&[2, 2])]);
        let x = feasible_nonneg(&a, &qvec(&[1, 2])).unwrap();
        assert_eq!(&x[0] + &x[1], q(1));
    }
}
