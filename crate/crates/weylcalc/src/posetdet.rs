//! Finite posets, the chain-expansion determinant, and Möbius functions.
//!
//! The central identity: for a poset `{phi_0, ..., phi_k}` numbered along a
//! linear extension and a k x k matrix with rows `phi_0..phi_{k-1}`, columns
//! `phi_1..phi_k`, unit interior diagonal, and support inside the order
//! relation,
//!
//! ```text
//! det M = (-1)^{k+1} * sum over chains phi_0 < phi_{j_1} < ... < phi_{j_s} < phi_k
//!         of (-1)^s m_{0 j_1} m_{j_1 j_2} ... m_{j_s k}
//! ```
//!
//! where `s >= 0` counts interior elements (the empty chain contributes
//! `m_{0k}`). Specializing to the 0/1 matrix of the order relation gives
//! `mu([phi_0; phi_k]) = (-1)^k det M`.

use crate::linalg::QMat;
use crate::{Error, Q, Result};
use num::{One, Zero};
use rand::Rng;

/// A finite poset whose element numbering is a linear extension.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Build from a reflexive-transitive relation given as `leq[i][j]`.
    pub fn new(n: usize, leq_pairs: impl Fn(usize, usize) -> bool) -> Result<FinitePoset> {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = leq_pairs(i, j);
            }
        }
        let p = FinitePoset { n, leq };
        for i in 0..n {
            if !p.leq(i, i) {
                return Err(Error::Precondition(format!("relation not reflexive at {i}")));
            }
            for j in 0..n {
                if p.leq(i, j) && p.leq(j, i) && i != j {
                    return Err(Error::Precondition(format!("antisymmetry fails at {i},{j}")));
                }
                if p.leq(i, j) && j < i {
                    return Err(Error::Precondition(format!(
                        "numbering is not a linear extension at {i},{j}"
                    )));
                }
                for k in 0..n {
                    if p.leq(i, j) && p.leq(j, k) && !p.leq(i, k) {
                        return Err(Error::Precondition(format!(
                            "transitivity fails at {i},{j},{k}"
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Elements of `[a; b]`, ascending (the induced numbering is again a
    /// linear extension).
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.n).filter(|&c| self.leq(a, c) && self.leq(c, b)).collect()
    }

    /// Subposet induced on the given ascending element list.
    pub fn restrict(&self, elements: &[usize]) -> FinitePoset {
        let n = elements.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(elements[i], elements[j]);
            }
        }
        FinitePoset { n, leq }
    }

    /// Seeded random poset: a random DAG on `n <= 8` nodes, transitively
    /// closed; the identity numbering is a linear extension by construction.
    pub fn random(n: usize, rng: &mut impl Rng) -> FinitePoset {
        assert!(n <= 8);
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
            for j in i + 1..n {
                if rng.gen_bool(0.5) {
                    leq[i * n + j] = true;
                }
            }
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i * n + k] && leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        FinitePoset { n, leq }
    }
}

/// A k x k matrix with rows `phi_0..phi_{k-1}` and columns `phi_1..phi_k`
/// over a poset of k+1 elements.
#[derive(Debug, Clone)]
pub struct ChainMatrix {
    k: usize,
    m: QMat,
}

impl ChainMatrix {
    /// Validate the two structural invariants against the poset.
    pub fn new(poset: &FinitePoset, m: QMat) -> Result<ChainMatrix> {
        let k = poset.len().checked_sub(1).filter(|&k| k >= 1).ok_or_else(|| {
            Error::Precondition("chain matrix needs a poset with at least 2 elements".into())
        })?;
        if m.rows != k || m.cols != k {
            return Err(Error::Precondition(format!(
                "matrix must be {k}x{k}, got {}x{}",
                m.rows, m.cols
            )));
        }
        let cm = ChainMatrix { k, m };
        for i in 1..k {
            if !cm.entry(i, i).is_one() {
                return Err(Error::Precondition(format!("interior diagonal entry m[{i}][{i}] != 1")));
            }
        }
        for i in 0..k {
            for j in 1..=k {
                if !cm.entry(i, j).is_zero() && !poset.leq(i, j) {
                    return Err(Error::Precondition(format!(
                        "entry m[{i}][{j}] nonzero outside the order relation"
                    )));
                }
            }
        }
        Ok(cm)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Entry at row label `i` in `0..k`, column label `j` in `1..=k`.
    pub fn entry(&self, i: usize, j: usize) -> &Q {
        &self.m[(i, j - 1)]
    }

    /// The 0/1 chain matrix of the order relation itself.
    pub fn of_relation(poset: &FinitePoset) -> Result<ChainMatrix> {
        let k = poset.len() - 1;
        let mut m = QMat::zero(k, k);
        for i in 0..k {
            for j in 1..=k {
                if poset.leq(i, j) {
                    m[(i, j - 1)] = Q::one();
                }
            }
        }
        ChainMatrix::new(poset, m)
    }
}

/// The chain-expansion value of `det M`, asserted equal to the direct
/// Gaussian-elimination determinant before returning.
///
/// Chains through entries that vanish contribute nothing, and nonzero
/// entries lie inside the order relation, so walking the support of `M`
/// enumerates exactly the poset chains of the formula.
pub fn chain_expansion_det(poset: &FinitePoset, m: &ChainMatrix) -> Q {
    let k = m.k();
    assert_eq!(poset.len(), k + 1);
    let mut total = Q::zero();
    // (last index, interior count so far, product so far)
    let mut stack: Vec<(usize, usize, Q)> = vec![(0, 0, Q::one())];
    while let Some((last, depth, prod)) = stack.pop() {
        let closing = m.entry(last, k);
        if !closing.is_zero() {
            let term = &prod * closing;
            if depth % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        for j in last + 1..k {
            let step = m.entry(last, j);
            if !step.is_zero() {
                stack.push((j, depth + 1, &prod * step));
            }
        }
    }
    // Overall prefactor (-1)^{k+1}.
    if k % 2 == 0 {
        total = -total;
    }
    let direct = m.m.det();
    assert_eq!(total, direct, "chain expansion disagrees with direct determinant");
    total
}

/// Möbius function by the defining recursion.
pub fn mobius_bruteforce(poset: &FinitePoset, a: usize, b: usize) -> Result<i64> {
    if !poset.leq(a, b) {
        return Err(Error::Precondition(format!("{a} is not below {b}")));
    }
    let interval = poset.interval(a, b);
    let mut mu = std::collections::HashMap::new();
    for &c in &interval {
        if c == a {
            mu.insert(c, 1i64);
            continue;
        }
        let mut acc = 0i64;
        for &d in &interval {
            if d != c && poset.leq(d, c) {
                acc += mu[&d];
            }
        }
        mu.insert(c, -acc);
    }
    Ok(mu[&b])
}

/// Möbius function via the relation determinant: `(-1)^k det M`.
pub fn mobius_via_det(poset: &FinitePoset, a: usize, b: usize) -> Result<i64> {
    if !poset.leq(a, b) {
        return Err(Error::Precondition(format!("{a} is not below {b}")));
    }
    let elems = poset.interval(a, b);
    if elems.len() < 2 {
        return Err(Error::Precondition("interval must have at least 2 elements".into()));
    }
    let sub = poset.restrict(&elems);
    let k = sub.len() - 1;
    let m = ChainMatrix::of_relation(&sub)?;
    let det = chain_expansion_det(&sub, &m);
    let signed = if k % 2 == 0 { det } else { -det };
    assert!(crate::linalg::is_integer(&signed));
    Ok(i64::try_from(signed.to_integer()).expect("Möbius value fits i64"))
}

/// Random rational chain matrix respecting the zero pattern of `poset`.
pub fn random_chain_matrix(poset: &FinitePoset, rng: &mut impl Rng) -> ChainMatrix {
    let k = poset.len() - 1;
    let mut m = QMat::zero(k, k);
    for i in 0..k {
        for j in 1..=k {
            if !poset.leq(i, j) {
                continue;
            }
            m[(i, j - 1)] = if i == j {
                Q::one()
            } else if rng.gen_bool(0.85) {
                crate::qr(rng.gen_range(-9..=9), rng.gen_range(1..=4))
            } else {
                Q::zero()
            };
        }
    }
    ChainMatrix::new(poset, m).expect("generated matrix satisfies the invariants")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;
    use rand::SeedableRng;

    fn chain_poset(n: usize) -> FinitePoset {
        FinitePoset::new(n, |i, j| i <= j).unwrap()
    }

    #[test]
    fn k1_degenerate_case() {
        let p = chain_poset(2);
        let mut mat = QMat::zero(1, 1);
        mat[(0, 0)] = crate::qr(3, 7);
        let cm = ChainMatrix::new(&p, mat).unwrap();
        assert_eq!(chain_expansion_det(&p, &cm), crate::qr(3, 7));
    }

    #[test]
    fn two_chain_unit_entries() {
        // phi_0 < phi_1 < phi_2, all entries 1: det [[1,1],[1,1]] = 0.
        let p = chain_poset(3);
        let cm = ChainMatrix::of_relation(&p).unwrap();
        assert_eq!(chain_expansion_det(&p, &cm), q(0));
    }

    #[test]
    fn invariant_violations_rejected() {
        let p = chain_poset(3);
        let mut bad = QMat::zero(2, 2);
        bad[(0, 0)] = q(1);
        bad[(1, 1)] = q(1);
        bad[(1, 0)] = q(5); // m[1][1] label is fine; m[1][1]=1 needed
        assert!(ChainMatrix::new(&p, bad).is_err());

        let anti = FinitePoset::new(2, |_, _| true);
        assert!(anti.is_err());
    }

    #[test]
    fn mobius_basics() {
        let p = chain_poset(4);
        assert_eq!(mobius_bruteforce(&p, 1, 1).unwrap(), 1);
        assert_eq!(mobius_bruteforce(&p, 0, 1).unwrap(), -1);
        assert_eq!(mobius_bruteforce(&p, 0, 2).unwrap(), 0);
        assert_eq!(mobius_bruteforce(&p, 0, 3).unwrap(), 0);
        assert!(mobius_bruteforce(&p, 3, 0).is_err());
    }

    #[test]
    fn diamond_mobius_via_det() {
        // Boolean lattice of rank 2: 0 < {1,2} < 3.
        let p = FinitePoset::new(4, |i, j| {
            i == j || (i == 0 && j > 0) || (j == 3 && i < 3)
        })
        .unwrap();
        assert_eq!(mobius_via_det(&p, 0, 3).unwrap(), 1);
        assert_eq!(mobius_bruteforce(&p, 0, 3).unwrap(), 1);
    }

    #[test]
    fn random_posets_agree() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.gen_range(2..=8);
            let p = FinitePoset::random(n, &mut rng);
            for a in 0..n {
                for b in a..n {
                    if !p.leq(a, b) {
                        continue;
                    }
                    let brute = mobius_bruteforce(&p, a, b).unwrap();
                    if p.interval(a, b).len() >= 2 {
                        assert_eq!(mobius_via_det(&p, a, b).unwrap(), brute);
                    }
                }
            }
        }
    }

    #[test]
    fn random_entries_chain_formula() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(42);
        for _ in 0..30 {
            let n = rng.gen_range(2..=7);
            let p = FinitePoset::random(n, &mut rng);
            let cm = random_chain_matrix(&p, &mut rng);
            // chain_expansion_det asserts agreement internally.
            let _ = chain_expansion_det(&p, &cm);
        }
    }
}
