//! Belkale-Kumar triples and the combinatorial checks attached to them.
//!
//! A BK triple is `(u, v, w)` with `Phi(u) ∩ Phi(v) = Phi(w)` and
//! `Phi(u) ∪ Phi(v) = Phi+`. In the symmetric form `(w1, w2, w3) =
//! (w0 w, u, v)` this says the duals' inversion sets partition `Phi+`.

use crate::linalg::QMat;
use crate::lp::{maximize, LpOutcome};
use crate::subset::RootSubset;
use crate::weyl::{BruhatMemo, ElementId, WeylGroup};
use crate::{Error, Q, Result};
use num::{One, Zero};
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BKTriple {
    pub u: ElementId,
    pub v: ElementId,
    pub w: ElementId,
}

impl BKTriple {
    /// Symmetric form `(w1, w2, w3) = (w0 w, u, v)`.
    pub fn symmetric(&self, group: &WeylGroup) -> [ElementId; 3] {
        [group.dual(self.w), self.u, self.v]
    }
}

/// The BK triple on `(u, v)`, if the two bitset conditions hold.
pub fn is_bk_pair(group: &WeylGroup, u: ElementId, v: ElementId) -> Option<BKTriple> {
    let full = RootSubset::full(group.root_system().n_positive());
    let iu = group.inversions(u);
    let iv = group.inversions(v);
    if iu.union(iv) != full {
        return None;
    }
    let w = group.element_by_inversions(iu.intersect(iv))?;
    Some(BKTriple { u, v, w })
}

/// Stream all BK triples in deterministic `(u, v)` order without
/// materializing the `|W|^2` pair space.
pub fn bk_triples(group: &WeylGroup) -> impl Iterator<Item = BKTriple> + '_ {
    let n = group.order() as ElementId;
    let n_pos = group.root_system().n_positive();
    (0..n).flat_map(move |u| {
        let lu = group.length(u);
        (0..n).filter_map(move |v| {
            // Union can only be everything if lengths suffice.
            if lu + group.length(v) < n_pos {
                return None;
            }
            is_bk_pair(group, u, v)
        })
    })
}

/// All BK triples, scanning `u` blocks in parallel; result is in the same
/// order as [`bk_triples`].
pub fn bk_triples_par(group: &WeylGroup) -> Vec<BKTriple> {
    use rayon::prelude::*;
    let n = group.order() as ElementId;
    let n_pos = group.root_system().n_positive();
    let mut out: Vec<BKTriple> = (0..n)
        .into_par_iter()
        .flat_map_iter(|u| {
            let lu = group.length(u);
            (0..n).filter_map(move |v| {
                if lu + group.length(v) < n_pos {
                    return None;
                }
                is_bk_pair(group, u, v)
            })
        })
        .collect();
    out.sort();
    out
}

/// Deterministic reservoir sample of `count` BK triples.
pub fn sample_bk_triples(group: &WeylGroup, count: usize, seed: u64) -> Vec<BKTriple> {
    let mut rng = crate::rng::stream(seed, &format!("bk-sample/{}", group.root_system().label()));
    let mut reservoir: Vec<BKTriple> = Vec::with_capacity(count);
    for (i, t) in bk_triples(group).enumerate() {
        if reservoir.len() < count {
            reservoir.push(t);
        } else {
            let j = rng.gen_range(0..=i);
            if j < count {
                reservoir[j] = t;
            }
        }
    }
    reservoir.sort();
    reservoir
}

/// Belkale-Kumar structure constant: the cup constant when the triple
/// condition holds, zero otherwise.
pub fn bk_constant(
    group: &WeylGroup,
    u: ElementId,
    v: ElementId,
    w: ElementId,
    cup: &mut impl FnMut(ElementId, ElementId, ElementId) -> Q,
) -> Q {
    match is_bk_pair(group, u, v) {
        Some(t) if t.w == w => cup(u, v, w),
        _ => Q::zero(),
    }
}

/// Simultaneous-descent check: the only `x` with `w_i x <= w_i` for all
/// three symmetric components is the identity.
pub fn check_bruhat_corollary(group: &WeylGroup, t: &BKTriple, memo: &mut BruhatMemo) -> bool {
    let ws = t.symmetric(group);
    for x in 1..group.order() as ElementId {
        if ws.iter().all(|&wi| group.bruhat_leq(group.mul(wi, x), wi, memo)) {
            return false;
        }
    }
    true
}

/// Both descent-sum identities: `d(w1)+d(w2)+d(w3) = 2 rank` and the dual
/// sum equal to `rank`.
pub fn check_descent_identities(group: &WeylGroup, t: &BKTriple) -> bool {
    let rank = group.root_system().rank();
    let ws = t.symmetric(group);
    let direct: usize = ws.iter().map(|&w| group.descent_number(w)).sum();
    let dual: usize = ws.iter().map(|&w| group.descent_number(group.dual(w))).sum();
    direct == 2 * rank && dual == rank
}

/// The descent question `d(w_i^vee) + d(w_j^vee) = d(w_i w_j^{-1}) or
/// d(w_j w_i^{-1})`, over all three index pairs.
pub fn check_descent_question(group: &WeylGroup, t: &BKTriple) -> bool {
    let ws = t.symmetric(group);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let lhs = group.descent_number(group.dual(ws[i])) + group.descent_number(group.dual(ws[j]));
        let a = group.descent_number(group.mul(ws[i], group.inverse(ws[j])));
        let b = group.descent_number(group.mul(ws[j], group.inverse(ws[i])));
        if lhs != a && lhs != b {
            return false;
        }
    }
    true
}

/// Exact product identity `prod_{a in Phi(w^{-1})} <rho, a> =
/// prod_{Phi(w1^{-1})} <rho, a> * prod_{Phi(w2^{-1})} <rho, a>`,
/// for a decomposition `Phi(w) = Phi(w1) ⊔ Phi(w2)`.
pub fn check_rho_product(
    group: &WeylGroup,
    w: ElementId,
    w1: ElementId,
    w2: ElementId,
) -> Result<bool> {
    let i1 = group.inversions(w1);
    let i2 = group.inversions(w2);
    if !i1.is_disjoint(i2) || i1.union(i2) != group.inversions(w) {
        return Err(Error::Precondition(format!(
            "Phi({}) is not the disjoint union of Phi({}) and Phi({})",
            group.word_string(w),
            group.word_string(w1),
            group.word_string(w2)
        )));
    }
    let rho_prod = |x: ElementId| -> Q {
        let rs = group.root_system();
        group
            .inversions(group.inverse(x))
            .iter()
            .map(|p| rs.form_with_root(rs.rho(), p))
            .fold(Q::one(), |acc, v| acc * v)
    };
    Ok(rho_prod(w) == rho_prod(w1) * rho_prod(w2))
}

/// A strictly dominant rational weight triple in fundamental-weight
/// coordinates, solving `w1^{-1} l1 + w2^{-1} l2 + w3^{-1} l3 = 0`.
pub type WeightTriple = [Vec<Q>; 3];

/// Exact feasibility for the face system attached to a BK triple:
/// maximize a slack `eps` with all weight coordinates `>= eps`, `eps <= 1`;
/// strict dominance is certified by `eps > 0`.
pub fn face_witness(group: &WeylGroup, t: &BKTriple) -> Option<WeightTriple> {
    let rs = group.root_system();
    let rank = rs.rank();
    let ws = t.symmetric(group);

    // B: rank x 3*rank, column block i holds w_i^{-1} acting on the
    // alpha-coordinates of omega_j.
    let mut b = QMat::zero(rank, 3 * rank);
    for (block, &wi) in ws.iter().enumerate() {
        let m = group.matrix(group.inverse(wi));
        for j in 0..rank {
            let omega = rs.fundamental_weight(j);
            for r in 0..rank {
                let mut acc = Q::zero();
                for c in 0..rank {
                    if m[r * rank + c] != 0 && !omega[c].is_zero() {
                        acc += crate::q(m[r * rank + c]) * &omega[c];
                    }
                }
                b[(r, block * rank + j)] = acc;
            }
        }
    }

    // Variables: s_0..s_{3r-1} >= 0, eps, t; lambda = s + eps.
    let nv = 3 * rank;
    let mut a = QMat::zero(rank + 1, nv + 2);
    let mut rhs = vec![Q::zero(); rank + 1];
    for r in 0..rank {
        let mut ones = Q::zero();
        for j in 0..nv {
            a[(r, j)] = b[(r, j)].clone();
            ones += &b[(r, j)];
        }
        a[(r, nv)] = ones;
    }
    a[(rank, nv)] = Q::one();
    a[(rank, nv + 1)] = Q::one();
    rhs[rank] = Q::one();
    let mut c = vec![Q::zero(); nv + 2];
    c[nv] = Q::one();

    match maximize(&a, &rhs, &c) {
        LpOutcome::Optimal(x, eps) if eps > Q::zero() => {
            let lambda: Vec<Q> = (0..nv).map(|j| &x[j] + &eps).collect();
            let triple: WeightTriple = [
                lambda[..rank].to_vec(),
                lambda[rank..2 * rank].to_vec(),
                lambda[2 * rank..].to_vec(),
            ];
            // Certify: strict positivity and the exact equation.
            for lam in &triple {
                assert!(lam.iter().all(|v| *v > Q::zero()));
            }
            let flat: Vec<Q> = triple.iter().flatten().cloned().collect();
            assert!(b.mul_vec(&flat).iter().all(Zero::is_zero));
            Some(triple)
        }
        _ => None,
    }
}

/// All decompositions `Phi(w3) = Phi(w1) ⊔ Phi(w2)` (ordered pairs with
/// disjoint inversion sets and biconvex union).
pub fn decomposition_triples(group: &WeylGroup) -> Vec<(ElementId, ElementId, ElementId)> {
    use rayon::prelude::*;
    let n = group.order() as ElementId;
    let mut out: Vec<(ElementId, ElementId, ElementId)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|w1| {
            let i1 = group.inversions(w1);
            (0..n).filter_map(move |w2| {
                let i2 = group.inversions(w2);
                if !i1.is_disjoint(i2) {
                    return None;
                }
                let w3 = group.element_by_inversions(i1.union(i2))?;
                Some((w1, w2, w3))
            })
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;
    use crate::weyl::DEFAULT_CAP;
    use std::sync::Arc;

    fn group(label: &str) -> WeylGroup {
        let rs = Arc::new(RootSystem::from_label(label).unwrap());
        WeylGroup::enumerate(rs, DEFAULT_CAP).unwrap()
    }

    /// Brute-force oracle: scan all pairs with the raw definitions and find
    /// `w` by linear search over inversion sets.
    fn bk_oracle(group: &WeylGroup) -> Vec<BKTriple> {
        let full = RootSubset::full(group.root_system().n_positive());
        let n = group.order() as ElementId;
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                let iu = group.inversions(u);
                let iv = group.inversions(v);
                if iu.union(iv) != full {
                    continue;
                }
                let meet = iu.intersect(iv);
                if let Some(w) = (0..n).find(|&w| group.inversions(w) == meet) {
                    out.push(BKTriple { u, v, w });
                }
            }
        }
        out
    }

    #[test]
    fn a1_has_exactly_three_triples() {
        let g = group("A1");
        let ts: Vec<BKTriple> = bk_triples(&g).collect();
        assert_eq!(ts.len(), 3);
        let s = 1 as ElementId;
        assert!(ts.contains(&BKTriple { u: 0, v: s, w: 0 }));
        assert!(ts.contains(&BKTriple { u: s, v: 0, w: 0 }));
        assert!(ts.contains(&BKTriple { u: s, v: s, w: s }));
    }

    #[test]
    fn a2_matches_oracle_and_regression_count() {
        let g = group("A2");
        let ts: Vec<BKTriple> = bk_triples(&g).collect();
        assert_eq!(ts, bk_oracle(&g));
        // Regression constant fixed by the 36-pair brute force.
        assert_eq!(ts.len(), 15);
        assert_eq!(bk_triples_par(&g), ts);
    }

    #[test]
    fn poincare_pairs_are_triples() {
        let g = group("B2");
        for x in 0..g.order() as ElementId {
            let t = is_bk_pair(&g, x, g.dual(x)).expect("(x, w0 x) is a BK pair");
            assert_eq!(t.w, g.identity());
        }
    }

    #[test]
    fn length_identity_and_partition() {
        for label in ["A2", "B2", "G2", "A3"] {
            let g = group(label);
            let n_pos = g.root_system().n_positive();
            for t in bk_triples(&g) {
                assert_eq!(g.length(t.u) + g.length(t.v), g.length(t.w) + n_pos);
                // Duals' inversion sets partition Phi+ and are biconvex.
                let ws = t.symmetric(&g);
                let sets: Vec<RootSubset> =
                    ws.iter().map(|&wi| g.inversions(g.dual(wi))).collect();
                assert!(sets[0].is_disjoint(sets[1]));
                assert!(sets[0].is_disjoint(sets[2]));
                assert!(sets[1].is_disjoint(sets[2]));
                assert_eq!(
                    sets[0].union(sets[1]).union(sets[2]),
                    RootSubset::full(n_pos)
                );
            }
        }
    }

    #[test]
    fn s3_symmetry_of_symmetric_form() {
        let g = group("A2");
        let all: std::collections::HashSet<[ElementId; 3]> =
            bk_triples(&g).map(|t| t.symmetric(&g)).collect();
        for ws in &all {
            for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let p = [ws[perm[0]], ws[perm[1]], ws[perm[2]]];
                assert!(all.contains(&p), "S3 symmetry fails at {ws:?} -> {p:?}");
            }
        }
    }

    #[test]
    fn bk_constant_gates_on_the_pair_condition() {
        let g = group("A2");
        let mut cup = |_: ElementId, _: ElementId, _: ElementId| crate::q(1);
        // Poincaré pair passes through to the provider.
        let x = g.left_mul(0, 0);
        let t = is_bk_pair(&g, x, g.dual(x)).unwrap();
        assert!(bk_constant(&g, t.u, t.v, t.w, &mut cup).is_one());
        // (e, e) fails the union condition unless Phi+ is empty.
        assert!(bk_constant(&g, 0, 0, 0, &mut cup).is_zero());
        // (s1s2, s2s1): intersection {highest root} is not biconvex.
        let s1s2 = g.left_mul(0, g.left_mul(1, 0));
        let s2s1 = g.left_mul(1, g.left_mul(0, 0));
        for w in 0..g.order() as ElementId {
            assert!(bk_constant(&g, s1s2, s2s1, w, &mut cup).is_zero());
        }
    }

    #[test]
    fn bruhat_corollary_small_ranks() {
        for label in ["A2", "B3"] {
            let g = group(label);
            let mut memo = BruhatMemo::default();
            for t in bk_triples(&g) {
                assert!(check_bruhat_corollary(&g, &t, &mut memo), "{label} {t:?}");
            }
        }
    }

    #[test]
    fn descent_identities_g2() {
        let g = group("G2");
        for t in bk_triples(&g) {
            assert!(check_descent_identities(&g, &t));
            assert!(check_descent_question(&g, &t));
        }
    }

    #[test]
    fn rho_product_examples() {
        let g = group("A2");
        // w1 = e: both sides equal trivially.
        for w in 0..g.order() as ElementId {
            assert!(check_rho_product(&g, w, 0, w).unwrap());
        }
        // Complementary pairs (w1, w0 w1) decompose Phi(w0).
        for w1 in 0..g.order() as ElementId {
            assert!(check_rho_product(&g, g.w0(), w1, g.dual(w1)).unwrap());
        }
        // Precondition violation is a typed error.
        let s1 = g.left_mul(0, 0);
        assert!(check_rho_product(&g, s1, s1, s1).is_err());
    }

    #[test]
    fn rho_product_all_decompositions_b3() {
        let g = group("B3");
        let decs = decomposition_triples(&g);
        assert!(!decs.is_empty());
        for (w1, w2, w3) in decs {
            assert!(check_rho_product(&g, w3, w1, w2).unwrap());
        }
    }

    #[test]
    fn face_witness_all_a2() {
        let g = group("A2");
        for t in bk_triples(&g) {
            assert!(face_witness(&g, &t).is_some(), "witness missing for {t:?}");
        }
    }

    #[test]
    fn face_witness_poincare_shape() {
        // (w1,w2,w3) = (e,w0,w0) arises from the triple (w0, w0, w0)... in
        // original coordinates: u = w0, v = w0, w = w0 gives (e, w0, w0).
        let g = group("B2");
        let t = is_bk_pair(&g, g.w0(), g.w0(), ).unwrap();
        assert_eq!(t.symmetric(&g), [g.identity(), g.w0(), g.w0()]);
        assert!(face_witness(&g, &t).is_some());
    }

    #[test]
    fn sampling_is_deterministic() {
        let g = group("A3");
        let a = sample_bk_triples(&g, 10, 42);
        let b = sample_bk_triples(&g, 10, 42);
        let c = sample_bk_triples(&g, 10, 43);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 10);
    }
}
