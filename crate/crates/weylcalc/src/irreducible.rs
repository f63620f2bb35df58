//! Classification of irreducible triples and the interval-avoidance
//! verification.
//!
//! A candidate is a dominance chain `beta < phi < gamma` of positive roots
//! with a selected sum condition (`gamma+beta` or `gamma+phi` a root). It is
//! *reducible* when some proper subspace `F` containing `beta` expresses
//! both `phi - beta` and `gamma - phi` as non-negative rational combinations
//! of roots in `F ∩ Phi+`; irreducible otherwise.
//!
//! The subspace search runs over spans of `{beta} ∪ T` with `T` drawn from
//! the positive roots, deduplicated by canonical echelon form. Because every
//! certificate coefficient is non-negative and root coordinates are
//! non-negative, certificate roots are supported inside the support of the
//! target; restricting `T` to those supports loses no spans.

use crate::lp::cone_coefficients;
use crate::rootsys::{RootSystem, Series};
use crate::subset::RootSubset;
use crate::weyl::WeylGroup;
use crate::{Error, Q, Result};
use num::Zero;
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumCondition {
    GammaPlusBeta,
    GammaPlusPhi,
}

impl std::fmt::Display for SumCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SumCondition::GammaPlusBeta => write!(f, "gamma+beta"),
            SumCondition::GammaPlusPhi => write!(f, "gamma+phi"),
        }
    }
}

impl std::str::FromStr for SumCondition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma+beta" | "gamma-plus-beta" => Ok(SumCondition::GammaPlusBeta),
            "gamma+phi" | "gamma-plus-phi" => Ok(SumCondition::GammaPlusPhi),
            _ => Err(Error::Precondition(format!("unknown sum condition {s}"))),
        }
    }
}

/// A dominance chain with its root-sum flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triple {
    pub beta: usize,
    pub phi: usize,
    pub gamma: usize,
    pub gamma_plus_beta: bool,
    pub gamma_plus_phi: bool,
    pub phi_plus_beta: bool,
}

/// All chains `beta < phi < gamma` in `Phi+` with the selected sum a root,
/// in (beta, phi, gamma) index order.
pub fn candidate_triples(rs: &RootSystem, cond: SumCondition) -> Vec<Triple> {
    let n = rs.n_positive();
    let mut out = Vec::new();
    for beta in 0..n {
        for phi in 0..n {
            if !rs.dominance_lt(beta, phi) {
                continue;
            }
            for gamma in 0..n {
                if !rs.dominance_lt(phi, gamma) {
                    continue;
                }
                let t = Triple {
                    beta,
                    phi,
                    gamma,
                    gamma_plus_beta: rs.root_sum(gamma, beta).is_some(),
                    gamma_plus_phi: rs.root_sum(gamma, phi).is_some(),
                    phi_plus_beta: rs.root_sum(phi, beta).is_some(),
                };
                let keep = match cond {
                    SumCondition::GammaPlusBeta => t.gamma_plus_beta,
                    SumCondition::GammaPlusPhi => t.gamma_plus_phi,
                };
                if keep {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// A reducibility certificate: the subspace basis and the two exact
/// non-negative combinations.
#[derive(Debug, Clone)]
pub struct ReductionWitness {
    /// Root coordinate vectors spanning `F` (first entry is `beta`).
    pub basis: Vec<Vec<i64>>,
    /// The positive roots of `F` offered to the cone tests.
    pub cone_roots_phi: Vec<usize>,
    pub cone_roots_gamma: Vec<usize>,
    pub coeffs_phi_minus_beta: Vec<Q>,
    pub coeffs_gamma_minus_phi: Vec<Q>,
}

impl ReductionWitness {
    /// Re-substitute both combinations and compare with the targets.
    pub fn verify(&self, rs: &RootSystem, t: &Triple) -> bool {
        let check = |roots: &[usize], coeffs: &[Q], target: Vec<i64>| {
            let mut acc = vec![Q::zero(); rs.rank()];
            for (&r, c) in roots.iter().zip(coeffs) {
                for k in 0..rs.rank() {
                    if rs.root(r)[k] != 0 {
                        acc[k] += c * crate::q(rs.root(r)[k]);
                    }
                }
            }
            coeffs.iter().all(|c| *c >= Q::zero())
                && (0..rs.rank()).all(|k| acc[k] == crate::q(target[k]))
        };
        let diff = |a: usize, b: usize| -> Vec<i64> {
            (0..rs.rank()).map(|k| rs.root(a)[k] - rs.root(b)[k]).collect()
        };
        check(&self.cone_roots_phi, &self.coeffs_phi_minus_beta, diff(t.phi, t.beta))
            && check(&self.cone_roots_gamma, &self.coeffs_gamma_minus_phi, diff(t.gamma, t.phi))
    }
}

/// Row-echelon span of rational vectors with a canonical key.
#[derive(Clone)]
struct Span {
    rows: Vec<Vec<Q>>,
    gens: Vec<usize>,
}

impl Span {
    fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for row in &self.rows {
            let lead = row.iter().position(|c| !c.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let f = v[lead].clone();
                for (k, rc) in row.iter().enumerate() {
                    if !rc.is_zero() {
                        v[k] -= &f * rc;
                    }
                }
            }
        }
        v
    }

    fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    fn extended(&self, v: &[Q], gen: usize) -> Option<Span> {
        let mut r = self.reduce(v);
        let lead = r.iter().position(|c| !c.is_zero())?;
        let inv = r[lead].clone();
        for c in r.iter_mut() {
            let t = std::mem::replace(c, Q::zero());
            *c = t / &inv;
        }
        let mut rows = self.rows.clone();
        // Eliminate the new leading column from existing rows, keep sorted.
        for row in rows.iter_mut() {
            if !row[lead].is_zero() {
                let f = row[lead].clone();
                for (k, rc) in r.iter().enumerate() {
                    if !rc.is_zero() {
                        row[k] -= &f * rc;
                    }
                }
            }
        }
        rows.push(r);
        rows.sort_by_key(|row| row.iter().position(|c| !c.is_zero()).unwrap());
        let mut gens = self.gens.clone();
        gens.push(gen);
        Some(Span { rows, gens })
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn key(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            for c in row {
                s.push_str(&c.to_string());
                s.push(',');
            }
            s.push(';');
        }
        s
    }
}

fn root_qvec(rs: &RootSystem, r: usize) -> Vec<Q> {
    rs.root(r).iter().map(|&c| crate::q(c)).collect()
}

/// Search for a proper subspace certifying reducibility, over spans of
/// `{beta} ∪ T` with `dim F <= maxdim`.
pub fn is_reducible(rs: &RootSystem, t: &Triple, maxdim: usize) -> Option<ReductionWitness> {
    assert!(maxdim < rs.rank());
    let rank = rs.rank();
    let d1: Vec<i64> = (0..rank).map(|k| rs.root(t.phi)[k] - rs.root(t.beta)[k]).collect();
    let d2: Vec<i64> = (0..rank).map(|k| rs.root(t.gamma)[k] - rs.root(t.phi)[k]).collect();
    let d1q: Vec<Q> = d1.iter().map(|&c| crate::q(c)).collect();
    let d2q: Vec<Q> = d2.iter().map(|&c| crate::q(c)).collect();

    // Certificate roots live inside the support of their target.
    let supported = |r: usize, d: &[i64]| (0..rank).all(|k| rs.root(r)[k] == 0 || d[k] > 0);
    let s1: Vec<usize> = (0..rs.n_positive()).filter(|&r| supported(r, &d1)).collect();
    let s2: Vec<usize> = (0..rs.n_positive()).filter(|&r| supported(r, &d2)).collect();
    let mut ground: Vec<usize> = s1.iter().chain(&s2).copied().collect();
    ground.sort_unstable();
    ground.dedup();

    let base = Span { rows: Vec::new(), gens: vec![t.beta] }
        .extended(&root_qvec(rs, t.beta), t.beta)
        .expect("beta is nonzero");
    let base = Span { gens: vec![t.beta], ..base };

    let try_span = |span: &Span| -> Option<ReductionWitness> {
        if !span.contains(&d1q) || !span.contains(&d2q) {
            return None;
        }
        let in_span = |candidates: &[usize]| -> Vec<usize> {
            candidates.iter().copied().filter(|&r| span.contains(&root_qvec(rs, r))).collect()
        };
        let roots1 = in_span(&s1);
        let gens1: Vec<Vec<Q>> = roots1.iter().map(|&r| root_qvec(rs, r)).collect();
        let c1 = cone_coefficients(&gens1, &d1q)?;
        let roots2 = in_span(&s2);
        let gens2: Vec<Vec<Q>> = roots2.iter().map(|&r| root_qvec(rs, r)).collect();
        let c2 = cone_coefficients(&gens2, &d2q)?;
        let witness = ReductionWitness {
            basis: span.gens.iter().map(|&g| rs.root(g).to_vec()).collect(),
            cone_roots_phi: roots1,
            cone_roots_gamma: roots2,
            coeffs_phi_minus_beta: c1,
            coeffs_gamma_minus_phi: c2,
        };
        assert!(witness.verify(rs, t), "cone certificate failed re-substitution");
        Some(witness)
    };

    // Breadth-first over deduplicated spans, smallest dimension first.
    let mut seen: HashSet<String> = HashSet::new();
    let mut frontier = vec![base];
    seen.insert(frontier[0].key());
    while !frontier.is_empty() {
        for span in &frontier {
            if let Some(w) = try_span(span) {
                return Some(w);
            }
        }
        let mut next = Vec::new();
        for span in &frontier {
            if span.dim() >= maxdim {
                continue;
            }
            for &g in &ground {
                if let Some(bigger) = span.extended(&root_qvec(rs, g), g) {
                    if seen.insert(bigger.key()) {
                        next.push(bigger);
                    }
                }
            }
        }
        frontier = next;
    }
    None
}

/// Classify the candidates; irreducible ones are returned, optionally up to
/// diagram automorphisms (orbit representatives are coordinate-lex minimal).
pub fn enumerate_irreducible(
    rs: &RootSystem,
    cond: SumCondition,
    up_to_aut: bool,
) -> Result<Vec<Triple>> {
    if rs.rank() > 7 {
        return Err(Error::ResourceExceeded {
            what: format!("irreducible-triple search in {}", rs.label()),
            cap: 7,
        });
    }
    use rayon::prelude::*;
    let candidates = candidate_triples(rs, cond);
    let mut irreducible: Vec<Triple> = candidates
        .into_par_iter()
        .filter(|t| is_reducible(rs, t, rs.rank() - 1).is_none())
        .collect();
    irreducible.sort();
    if up_to_aut {
        let reps: Vec<Triple> = irreducible
            .iter()
            .copied()
            .filter(|t| {
                let key = triple_key(rs, t);
                rs.automorphisms().iter().all(|perm| {
                    let img = Triple {
                        beta: rs.automorphism_image(perm, t.beta),
                        phi: rs.automorphism_image(perm, t.phi),
                        gamma: rs.automorphism_image(perm, t.gamma),
                        ..*t
                    };
                    key <= triple_key(rs, &img)
                })
            })
            .collect();
        return Ok(reps);
    }
    Ok(irreducible)
}

fn triple_key(rs: &RootSystem, t: &Triple) -> Vec<i64> {
    let mut k = rs.root(t.beta).to_vec();
    k.extend_from_slice(rs.root(t.phi));
    k.extend_from_slice(rs.root(t.gamma));
    k
}

/// One hypothesis instance of the interval-avoidance theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CombiInstance {
    pub w1: crate::weyl::ElementId,
    pub w2: crate::weyl::ElementId,
    pub beta: usize,
    pub gamma: usize,
}

/// Exhaustive scan: for every ordered biconvex pair `(Phi1, Phi2)` with
/// `Phi3 = Phi1 ⊔ Phi2` biconvex and every `(beta, gamma)` with
/// `beta ∈ Phi1`, `gamma ∉ Phi3`, `gamma+beta ∈ Phi3`, the interval
/// `[beta; gamma]` avoids `Phi2`. Returns `(instances_checked, violations)`.
pub fn verify_combi(group: &WeylGroup) -> (usize, Vec<CombiInstance>) {
    scan_combi(group, |_, _, _| true).1
}

/// Interval-avoidance scan with a side check: `gamma+beta` must land in
/// `Phi1` itself (coconvexity consequence). Violations of either claim are
/// reported separately by the caller's predicate.
fn scan_combi(
    group: &WeylGroup,
    extra: impl Fn(RootSubset, usize, usize) -> bool + Sync,
) -> (usize, (usize, Vec<CombiInstance>)) {
    use rayon::prelude::*;
    let rs = group.root_system();
    let n = rs.n_positive();
    // (beta, gamma, sum, closed interval) for all ordered positive pairs
    // whose sum is a (positive) root.
    let mut pairs = Vec::new();
    for beta in 0..n {
        for gamma in 0..n {
            if let Some(sum) = rs.root_sum(beta, gamma) {
                pairs.push((beta, gamma, sum, rs.interval(beta, gamma)));
            }
        }
    }
    let decs = crate::bk::decomposition_triples(group);
    let results: Vec<(usize, Vec<CombiInstance>)> = decs
        .par_iter()
        .map(|&(w1, w2, w3)| {
            let phi1 = group.inversions(w1);
            let phi2 = group.inversions(w2);
            let phi3 = group.inversions(w3);
            let mut checked = 0usize;
            let mut bad = Vec::new();
            for &(beta, gamma, sum, interval) in &pairs {
                if !phi1.contains(beta) || phi3.contains(gamma) || !phi3.contains(sum) {
                    continue;
                }
                checked += 1;
                if !phi2.intersect(interval).is_empty() || !extra(phi1, sum, beta) {
                    bad.push(CombiInstance { w1, w2, beta, gamma });
                }
            }
            (checked, bad)
        })
        .collect();
    let mut checked = 0;
    let mut violations = Vec::new();
    for (c, mut v) in results {
        checked += c;
        violations.append(&mut v);
    }
    violations.sort();
    (decs.len(), (checked, violations))
}

/// `gamma + beta ∈ Phi1` across all hypothesis instances.
pub fn verify_thetax(group: &WeylGroup) -> (usize, Vec<CombiInstance>) {
    scan_combi(group, |phi1, sum, _| phi1.contains(sum)).1
}

/// Single-instance form of the coconvexity consequence.
pub fn check_thetax(
    group: &WeylGroup,
    phi1: RootSubset,
    phi2: RootSubset,
    beta: usize,
    gamma: usize,
) -> Result<bool> {
    let rs = group.root_system();
    let phi3 = phi1.union(phi2);
    if !phi1.is_disjoint(phi2)
        || !group.is_biconvex(phi1)
        || !group.is_biconvex(phi2)
        || !group.is_biconvex(phi3)
    {
        return Err(Error::Precondition("sets are not a biconvex decomposition".into()));
    }
    let sum = rs
        .root_sum(gamma, beta)
        .ok_or_else(|| Error::Precondition("gamma+beta is not a root".into()))?;
    if !phi1.contains(beta) || phi3.contains(gamma) || !phi3.contains(sum) {
        return Err(Error::Precondition("hypotheses on (beta, gamma) fail".into()));
    }
    Ok(phi1.contains(sum))
}

fn is_simply_laced(rs: &RootSystem) -> bool {
    rs.components().iter().all(|&(s, _)| matches!(s, Series::A | Series::D | Series::E))
}

/// Form trichotomy for distinct roots in a simply-laced system: the value
/// in `{-1, 0, 1}` with the matching sum/difference membership verified.
pub fn killing_trichotomy(rs: &RootSystem, alpha: usize, beta: usize) -> Result<i64> {
    if !is_simply_laced(rs) {
        return Err(Error::Precondition(format!("{} is not simply laced", rs.label())));
    }
    if alpha == beta || alpha == rs.negate(beta) {
        return Err(Error::Precondition("roots must be distinct and non-opposite".into()));
    }
    let v = rs.form_roots(beta, alpha);
    assert!(crate::linalg::is_integer(&v));
    let val = i64::try_from(v.to_integer()).expect("small value");
    let diff = rs.root_sum(beta, rs.negate(alpha)).is_some();
    let sum = rs.root_sum(beta, alpha).is_some();
    let consistent = match val {
        1 => diff && !sum,
        0 => !diff && !sum,
        -1 => sum && !diff,
        _ => false,
    };
    assert!(consistent, "trichotomy mismatch at ({alpha},{beta})");
    Ok(val)
}

/// Weak decomposition bound: `gamma - beta` splits into at most
/// `2 - (gamma, beta)` positive roots (simply-laced, `beta <= gamma`).
pub fn decomposition_bound(rs: &RootSystem, beta: usize, gamma: usize) -> Result<bool> {
    if !is_simply_laced(rs) {
        return Err(Error::Precondition(format!("{} is not simply laced", rs.label())));
    }
    if !rs.dominance_leq(beta, gamma) || !rs.is_positive(beta) || !rs.is_positive(gamma) {
        return Err(Error::Precondition("need positive roots with beta <= gamma".into()));
    }
    let pairing = rs.form_roots(gamma, beta);
    assert!(crate::linalg::is_integer(&pairing));
    let bound = 2 - i64::try_from(pairing.to_integer()).expect("small value");
    let target: Vec<i64> = (0..rs.rank()).map(|k| rs.root(gamma)[k] - rs.root(beta)[k]).collect();
    if target.iter().all(|&c| c == 0) {
        return Ok(bound >= 0);
    }
    if bound <= 0 {
        return Ok(false);
    }
    Ok(subset_sum(rs, &target, 0, bound as usize))
}

fn subset_sum(rs: &RootSystem, target: &[i64], min_root: usize, budget: usize) -> bool {
    if target.iter().all(|&c| c == 0) {
        return true;
    }
    if budget == 0 {
        return false;
    }
    for r in min_root..rs.n_positive() {
        let coords = rs.root(r);
        if (0..rs.rank()).all(|k| coords[k] <= target[k]) {
            let rest: Vec<i64> = (0..rs.rank()).map(|k| target[k] - coords[k]).collect();
            // Allow repetition: recurse from the same root index.
            if subset_sum(rs, &rest, r, budget - 1) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_CAP;
    use std::sync::Arc;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    #[test]
    fn type_a_has_no_candidates() {
        for label in ["A2", "A3", "A4", "A5", "A7"] {
            let r = rs(label);
            assert!(candidate_triples(&r, SumCondition::GammaPlusBeta).is_empty(), "{label}");
        }
    }

    #[test]
    fn b2_and_c2_have_no_candidates_with_interior() {
        // The single gamma+beta pair has an empty open interval.
        let r = rs("B2");
        assert!(candidate_triples(&r, SumCondition::GammaPlusBeta).is_empty());
        let r = rs("C2");
        assert!(candidate_triples(&r, SumCondition::GammaPlusBeta).is_empty());
    }

    #[test]
    fn g2_classification() {
        let r = rs("G2");
        let got = enumerate_irreducible(&r, SumCondition::GammaPlusBeta, false).unwrap();
        let expect: Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> = vec![
            (vec![0, 1], vec![1, 1], vec![3, 1]),
            (vec![0, 1], vec![2, 1], vec![3, 1]),
            (vec![1, 0], vec![1, 1], vec![2, 1]),
        ];
        let got_coords: Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> = got
            .iter()
            .map(|t| {
                (r.root(t.beta).to_vec(), r.root(t.phi).to_vec(), r.root(t.gamma).to_vec())
            })
            .collect();
        for e in &expect {
            assert!(got_coords.contains(e), "missing {e:?}");
        }
        assert_eq!(got.len(), 3);
    }

    #[test]
    fn g2_line_subspace_cannot_reduce() {
        let r = rs("G2");
        let t = Triple {
            beta: r.root_index(&[0, 1]).unwrap(),
            phi: r.root_index(&[1, 1]).unwrap(),
            gamma: r.root_index(&[3, 1]).unwrap(),
            gamma_plus_beta: true,
            gamma_plus_phi: false,
            phi_plus_beta: false,
        };
        assert!(is_reducible(&r, &t, 1).is_none());
    }

    #[test]
    fn b3_classification() {
        let r = rs("B3");
        let got = enumerate_irreducible(&r, SumCondition::GammaPlusBeta, false).unwrap();
        assert_eq!(got.len(), 5);
        // beta = alpha_3, phi = alpha_2+alpha_3, gamma = alpha_1+alpha_2+alpha_3
        // is one of them.
        let special = got.iter().any(|t| {
            r.root(t.beta) == [0, 0, 1] && r.root(t.phi) == [0, 1, 1] && r.root(t.gamma) == [1, 1, 1]
        });
        assert!(special);
        // The other four share beta = alpha_2, gamma = 1 1 2.
        let with_beta_alpha2 =
            got.iter().filter(|t| r.root(t.beta) == [0, 1, 0] && r.root(t.gamma) == [1, 1, 2]);
        assert_eq!(with_beta_alpha2.count(), 4);
    }

    #[test]
    fn b4_reduction_witness_example() {
        // (alpha_3, 1 1 1 1, 1 1 1 2) is reducible via <beta, a1+a2, a4>.
        let r = rs("B4");
        let t = Triple {
            beta: r.root_index(&[0, 0, 1, 0]).unwrap(),
            phi: r.root_index(&[1, 1, 1, 1]).unwrap(),
            gamma: r.root_index(&[1, 1, 1, 2]).unwrap(),
            gamma_plus_beta: true,
            gamma_plus_phi: false,
            phi_plus_beta: false,
        };
        let w = is_reducible(&r, &t, 3).expect("reducible");
        assert!(w.verify(&r, &t));
        assert!(w.basis.len() <= 3);
    }

    #[test]
    fn d5_raw_and_aut_quotient() {
        let r = rs("D5");
        let raw = enumerate_irreducible(&r, SumCondition::GammaPlusBeta, false).unwrap();
        // Regression constant fixed by this search: the two phi's swapped by
        // the diagram flip plus two fixed ones.
        assert_eq!(raw.len(), 4);
        let reps = enumerate_irreducible(&r, SumCondition::GammaPlusBeta, true).unwrap();
        assert_eq!(reps.len(), 3);
        for t in &reps {
            assert_eq!(r.root(t.beta), [0, 0, 1, 0, 0]);
            assert_eq!(r.root(t.gamma), [1, 1, 1, 1, 1]);
        }
    }

    #[test]
    fn witnesses_always_verify() {
        let r = rs("C3");
        for t in candidate_triples(&r, SumCondition::GammaPlusBeta) {
            if let Some(w) = is_reducible(&r, &t, 2) {
                assert!(w.verify(&r, &t));
            }
        }
    }

    #[test]
    fn combi_scan_b3_g2() {
        for label in ["B3", "G2", "A3"] {
            let rsys = Arc::new(rs(label));
            let group = WeylGroup::enumerate(rsys, DEFAULT_CAP).unwrap();
            let (checked, violations) = verify_combi(&group);
            assert!(violations.is_empty(), "{label}: {violations:?}");
            // Even in type A the scan has instances (incomparable pairs can
            // sum to a root); only chains are excluded there.
            assert!(checked > 0, "{label} should have hypothesis instances");
            let (_, tviol) = verify_thetax(&group);
            assert!(tviol.is_empty(), "{label}: {tviol:?}");
        }
    }

    #[test]
    fn thetax_single_instance() {
        let rsys = Arc::new(rs("B3"));
        let group = WeylGroup::enumerate(Arc::clone(&rsys), DEFAULT_CAP).unwrap();
        // Phi2 empty: Phi1 = Phi3 contains gamma+beta by hypothesis.
        let w0 = group.w0();
        let phi1 = group.inversions(w0);
        let beta = rsys.root_index(&[0, 0, 1]).unwrap();
        let gamma_plus = rsys.root_index(&[1, 1, 2]).unwrap();
        // Find gamma outside Phi3... with Phi3 = Phi+, no gamma qualifies, so
        // pick a decomposition instead.
        let (checked, violations) = verify_thetax(&group);
        assert!(checked > 0 && violations.is_empty());
        let _ = (phi1, beta, gamma_plus, w0);
    }

    #[test]
    fn trichotomy_examples() {
        let a2 = rs("A2");
        let a1 = a2.root_index(&[1, 0]).unwrap();
        let al2 = a2.root_index(&[0, 1]).unwrap();
        let top = a2.root_index(&[1, 1]).unwrap();
        assert_eq!(killing_trichotomy(&a2, a1, al2).unwrap(), -1);
        assert_eq!(killing_trichotomy(&a2, a1, top).unwrap(), 1);
        let d4 = rs("D4");
        assert_eq!(
            killing_trichotomy(&d4, d4.simple_root(0), d4.simple_root(2)).unwrap(),
            0
        );
        assert!(killing_trichotomy(&rs("B2"), 0, 1).is_err());
        // Exhaustive over A3: every distinct non-opposite pair splits.
        let a3 = rs("A3");
        for i in 0..a3.n_roots() {
            for j in 0..a3.n_roots() {
                if i != j && j != a3.negate(i) {
                    killing_trichotomy(&a3, i, j).unwrap();
                }
            }
        }
    }

    #[test]
    fn decomposition_bound_examples() {
        let a2 = rs("A2");
        let a1 = a2.root_index(&[1, 0]).unwrap();
        let top = a2.root_index(&[1, 1]).unwrap();
        assert!(decomposition_bound(&a2, a1, a1).unwrap());
        assert!(decomposition_bound(&a2, a1, top).unwrap());
        // All pairs in D4.
        let d4 = rs("D4");
        for b in 0..d4.n_positive() {
            for g in 0..d4.n_positive() {
                if d4.dominance_leq(b, g) {
                    assert!(decomposition_bound(&d4, b, g).unwrap(), "({b},{g})");
                }
            }
        }
        assert!(decomposition_bound(&rs("G2"), 0, 0).is_err());
    }

    #[test]
    fn budget_error_beyond_rank7() {
        let r = rs("A1+A1+A1+A1+A1+A1+A1+A1");
        assert!(matches!(
            enumerate_irreducible(&r, SumCondition::GammaPlusBeta, false),
            Err(Error::ResourceExceeded { .. })
        ));
    }
}
