//! Integral Chevalley bases with explicit structure constants.
//!
//! The basis is `{e_phi : phi in Phi} ∪ {h_i : i < rank}` with
//! `[e_phi, e_psi] = N_{phi,psi} e_{phi+psi}`, `[e_phi, e_{-phi}] = h_phi`,
//! and `[h, e_psi] = <psi, h> e_psi`. Signs follow the extraspecial-pair
//! convention in the (height, lex) root order: for each non-simple positive
//! `chi`, the special pair with minimal first element gets `N = +(p+1)`;
//! every other constant is forced from those by the standard two- and
//! four-root relations of the invariant form.

use crate::rootsys::RootSystem;
use crate::{Q, Result};
use num::Zero;
use std::sync::Arc;

/// Basis layout: indices `0..2n` are `e_{root}` in root-index order,
/// `2n..2n+rank` are the simple coroots `h_i`.
pub struct ChevalleyAlgebra {
    rs: Arc<RootSystem>,
    n_table: Vec<i64>,
    dim: usize,
}

impl ChevalleyAlgebra {
    pub fn build(rs: Arc<RootSystem>) -> Result<ChevalleyAlgebra> {
        let n_pos = rs.n_positive();
        let total = rs.n_roots();

        // Positive-pair table first, by increasing height of the sum.
        let mut pos_table: Vec<Option<i64>> = vec![None; n_pos * n_pos];
        let chain_p = |below: usize, step: usize| -> i64 {
            // Largest k with below - k*step a root.
            let mut k = 0i64;
            let mut cur = below;
            loop {
                let neg_step = rs.negate(step);
                match rs.root_sum(cur, neg_step) {
                    Some(next) => {
                        k += 1;
                        cur = next;
                    }
                    None => return k,
                }
            }
        };

        let mut chis: Vec<usize> = (0..n_pos).filter(|&c| rs.height(c) >= 2).collect();
        chis.sort_by_key(|&c| (rs.height(c), c));
        for &chi in &chis {
            // Extraspecial pair: minimal first element in the root order.
            let (a, b) = (0..n_pos)
                .find_map(|a| {
                    let nb = rs.root_index(
                        &(0..rs.rank())
                            .map(|k| rs.root(chi)[k] - rs.root(a)[k])
                            .collect::<Vec<_>>(),
                    )?;
                    (rs.is_positive(nb) && a < nb).then_some((a, nb))
                })
                .expect("non-simple positive root is a sum of positive roots");
            pos_table[a * n_pos + b] = Some(chain_p(b, a) + 1);
            pos_table[b * n_pos + a] = Some(-(chain_p(b, a) + 1));

            // Remaining special pairs (x, y) with x + y = chi, forced by the
            // four-root relation on (a, b, -x, -y).
            let algebra_view = PartialTable { rs: &rs, pos_table: &pos_table, n_pos };
            let mut updates = Vec::new();
            for x in 0..n_pos {
                if x == a {
                    continue;
                }
                let Some(y) = rs
                    .root_index(
                        &(0..rs.rank())
                            .map(|k| rs.root(chi)[k] - rs.root(x)[k])
                            .collect::<Vec<_>>(),
                    )
                    .filter(|&y| rs.is_positive(y) && x < y)
                else {
                    continue;
                };
                let chi_len = rs.form_roots(chi, chi);
                let mut sum = Q::zero();
                // term: N_{b,-x} N_{a,-y} / (b-x, b-x)
                if let Some(bx) = rs.root_sum(b, rs.negate(x)) {
                    let t = crate::q(algebra_view.n_mixed(b, rs.negate(x)))
                        * crate::q(algebra_view.n_mixed(a, rs.negate(y)))
                        / rs.form_roots(bx, bx);
                    sum += t;
                }
                // term: N_{-x,a} N_{b,-y} / (a-x, a-x)
                if let Some(ax) = rs.root_sum(a, rs.negate(x)) {
                    let t = crate::q(algebra_view.n_mixed(rs.negate(x), a))
                        * crate::q(algebra_view.n_mixed(b, rs.negate(y)))
                        / rs.form_roots(ax, ax);
                    sum += t;
                }
                let n_ab = crate::q(pos_table[a * n_pos + b].unwrap());
                let val = chi_len * sum / n_ab;
                assert!(crate::linalg::is_integer(&val), "structure constant not integral");
                let val: i64 = val.to_integer().try_into().expect("small constant");
                updates.push((x, y, val));
            }
            for (x, y, val) in updates {
                pos_table[x * n_pos + y] = Some(val);
                pos_table[y * n_pos + x] = Some(-val);
            }
        }

        // Expand to the full table over all sign combinations.
        let view = PartialTable { rs: &rs, pos_table: &pos_table, n_pos };
        let mut n_table = vec![0i64; total * total];
        for i in 0..total {
            for j in 0..total {
                if rs.root_sum(i, j).is_some() {
                    n_table[i * total + j] = view.n_any(i, j);
                }
            }
        }

        let dim = total + rs.rank();
        let algebra = ChevalleyAlgebra { rs, n_table, dim };

        // |N_{phi,psi}| = p + 1 for every bracketing pair.
        for i in 0..total {
            for j in 0..total {
                if algebra.rs.root_sum(i, j).is_some() {
                    let p = {
                        let mut k = 0i64;
                        let mut cur = j;
                        while let Some(next) = algebra.rs.root_sum(cur, algebra.rs.negate(i)) {
                            k += 1;
                            cur = next;
                        }
                        k
                    };
                    assert_eq!(
                        algebra.n(i, j).abs(),
                        p + 1,
                        "|N| != p+1 at pair ({i},{j})"
                    );
                }
            }
        }
        Ok(algebra)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn e_index(&self, root: usize) -> usize {
        root
    }

    pub fn h_index(&self, i: usize) -> usize {
        self.rs.n_roots() + i
    }

    /// Structure constant `N_{phi,psi}`; zero when `phi+psi` is not a root.
    pub fn n(&self, phi: usize, psi: usize) -> i64 {
        self.n_table[phi * self.rs.n_roots() + psi]
    }

    /// Bracket of two basis elements, as a sparse vector.
    pub fn bracket_basis(&self, a: usize, b: usize) -> Vec<(usize, Q)> {
        let total = self.rs.n_roots();
        let rank = self.rs.rank();
        match (a < total, b < total) {
            (true, true) => {
                if b == self.rs.negate(a) {
                    // [e_phi, e_{-phi}] = h_phi = phi^vee in the h basis.
                    let coords = self.rs.coroot_coords(a);
                    (0..rank)
                        .filter(|&i| !coords[i].is_zero())
                        .map(|i| (self.h_index(i), coords[i].clone()))
                        .collect()
                } else if let Some(s) = self.rs.root_sum(a, b) {
                    vec![(s, crate::q(self.n(a, b)))]
                } else {
                    Vec::new()
                }
            }
            (false, true) => {
                let i = a - total;
                let pairing = self.rs.cartan_pairing(b, i);
                if pairing == 0 {
                    Vec::new()
                } else {
                    vec![(b, crate::q(pairing))]
                }
            }
            (true, false) => self
                .bracket_basis(b, a)
                .into_iter()
                .map(|(k, c)| (k, -c))
                .collect(),
            (false, false) => Vec::new(),
        }
    }

    /// Bracket of dense vectors.
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for (a, ca) in x.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in y.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                for (k, c) in self.bracket_basis(a, b) {
                    out[k] += ca * cb * c;
                }
            }
        }
        out
    }

    /// `exp(ad x) v` for ad-nilpotent `x`; panics if the series fails to
    /// terminate within the structural bound.
    pub fn exp_ad(&self, x: &[Q], v: &[Q]) -> Vec<Q> {
        let mut sum = v.to_vec();
        let mut term = v.to_vec();
        let cap = 2 * self.dim + 4;
        for k in 1..=cap {
            term = self.bracket(x, &term);
            let factor = crate::qr(1, k as i64);
            let mut done = true;
            for (s, t) in sum.iter_mut().zip(&term) {
                if !t.is_zero() {
                    done = false;
                    *s += t * &factor;
                }
            }
            if done {
                return sum;
            }
            // Keep term = (ad x)^k v / k!.
            for t in term.iter_mut() {
                let v = std::mem::replace(t, Q::zero());
                *t = v * &factor;
            }
        }
        panic!("exp(ad x) did not terminate: x is not nilpotent");
    }
}

/// View over the positive-pair table during construction, extending it to
/// mixed signs through the two-root relation `N_{r,s}/(t,t) = N_{s,t}/(r,r)`
/// for `r+s+t = 0`.
struct PartialTable<'a> {
    rs: &'a RootSystem,
    pos_table: &'a [Option<i64>],
    n_pos: usize,
}

impl PartialTable<'_> {
    fn n_pos_pair(&self, x: usize, y: usize) -> i64 {
        self.pos_table[x * self.n_pos + y].expect("positive pair computed by height order")
    }

    /// `N_{i,j}` for roots of any sign with `i+j` a root.
    fn n_any(&self, i: usize, j: usize) -> i64 {
        let rs = self.rs;
        match (rs.is_positive(i), rs.is_positive(j)) {
            (true, true) => self.n_pos_pair(i, j),
            (false, false) => -self.n_any(rs.negate(i), rs.negate(j)),
            (true, false) => self.n_mixed(i, j),
            (false, true) => -self.n_mixed(j, i),
        }
    }

    /// `N_{phi, -psi}` with `phi, psi` positive and `phi - psi` a root.
    fn n_mixed(&self, phi_or_neg: usize, neg_or_pos: usize) -> i64 {
        let rs = self.rs;
        // Normalize to N_{phi, -psi}.
        let (phi, neg_psi, sign) = if rs.is_positive(phi_or_neg) {
            (phi_or_neg, neg_or_pos, 1i64)
        } else {
            (neg_or_pos, phi_or_neg, -1i64)
        };
        let psi = rs.negate(neg_psi);
        let diff = rs.root_sum(phi, neg_psi).expect("difference is a root");
        let val = if rs.is_positive(diff) {
            // phi = psi + diff: N_{phi,-psi} = -N_{psi,diff} (diff,diff)/(phi,phi)
            let v = crate::q(-self.n_pos_pair(psi, diff)) * rs.form_roots(diff, diff)
                / rs.form_roots(phi, phi);
            assert!(crate::linalg::is_integer(&v));
            i64::try_from(v.to_integer()).unwrap()
        } else {
            // psi = phi + gamma with gamma = -diff:
            // N_{phi,-psi} = -N_{phi,gamma} (gamma,gamma)/(psi,psi)
            let gamma = rs.negate(diff);
            let v = crate::q(-self.n_pos_pair(phi, gamma)) * rs.form_roots(gamma, gamma)
                / rs.form_roots(psi, psi);
            assert!(crate::linalg::is_integer(&v));
            i64::try_from(v.to_integer()).unwrap()
        };
        sign * val
    }
}

/// A unipotent group element `exp(x)` for `x = sum c_phi e_phi` over the
/// positive roots; the adjoint action is `exp(ad x)`.
#[derive(Debug, Clone)]
pub struct UnipotentElement {
    coeffs: Vec<Q>,
}

impl UnipotentElement {
    pub fn identity(rs: &RootSystem) -> UnipotentElement {
        UnipotentElement { coeffs: vec![Q::zero(); rs.n_positive()] }
    }

    pub fn new(rs: &RootSystem, coeffs: Vec<Q>) -> UnipotentElement {
        assert_eq!(coeffs.len(), rs.n_positive());
        UnipotentElement { coeffs }
    }

    /// Seeded random element with small rational coefficients.
    pub fn random(rs: &RootSystem, rng: &mut impl rand::Rng) -> UnipotentElement {
        UnipotentElement {
            coeffs: (0..rs.n_positive()).map(|_| crate::rng::small_rational(rng)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// The defining vector as a dense algebra element.
    pub fn algebra_vector(&self, algebra: &ChevalleyAlgebra) -> Vec<Q> {
        let mut v = vec![Q::zero(); algebra.dim()];
        for (p, c) in self.coeffs.iter().enumerate() {
            v[algebra.e_index(p)] = c.clone();
        }
        v
    }

    /// Vector of `-x`, for the inverse adjoint action.
    pub fn neg_algebra_vector(&self, algebra: &ChevalleyAlgebra) -> Vec<Q> {
        let mut v = self.algebra_vector(algebra);
        for c in v.iter_mut() {
            let t = std::mem::replace(c, Q::zero());
            *c = -t;
        }
        v
    }
}
