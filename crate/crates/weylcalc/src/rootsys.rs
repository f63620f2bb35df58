//! Finite crystallographic root systems of types A–G, including ordered
//! direct sums, with exact integer/rational data.
//!
//! Coordinates are always taken in the simple-root basis, so every root is an
//! integer vector. The invariant symmetric form is normalized so long roots
//! in each irreducible component have squared length 2. Positive roots are
//! indexed first, sorted by (height, lexicographic coordinates); the negative
//! of positive root `p` sits at index `n_positive() + p`.

use crate::linalg::QMat;
use crate::subset::RootSubset;
use crate::{q, Error, Q, Result};
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl std::fmt::Display for Series {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Parse a type label such as `"B3"` or `"A1+A1"` into components.
pub fn parse_type(s: &str) -> Result<Vec<(Series, usize)>> {
    let mut out = Vec::new();
    for part in s.split('+') {
        let part = part.trim();
        let mut chars = part.chars();
        let series = match chars.next() {
            Some('A') | Some('a') => Series::A,
            Some('B') | Some('b') => Series::B,
            Some('C') | Some('c') => Series::C,
            Some('D') | Some('d') => Series::D,
            Some('E') | Some('e') => Series::E,
            Some('F') | Some('f') => Series::F,
            Some('G') | Some('g') => Series::G,
            _ => return Err(Error::InvalidType(s.into())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::InvalidType(s.into()))?;
        out.push((series, rank));
    }
    if out.is_empty() {
        return Err(Error::InvalidType(s.into()));
    }
    Ok(out)
}

fn validate(series: Series, rank: usize) -> Result<()> {
    let ok = match series {
        Series::A => rank >= 1,
        Series::B | Series::C => rank >= 2,
        Series::D => rank >= 4,
        Series::E => (6..=8).contains(&rank),
        Series::F => rank == 4,
        Series::G => rank == 2,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidType(format!("{series}{rank}")))
    }
}

/// Cartan matrix of one irreducible component, Bourbaki numbering.
/// Entry `[i][j]` is `<alpha_i, alpha_j^vee>`.
fn cartan_block(series: Series, rank: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match series {
        Series::A => {
            for i in 0..rank - 1 {
                chain(&mut c, i, i + 1);
            }
        }
        Series::B => {
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
            for i in 0..rank - 2 {
                chain(&mut c, i, i + 1);
            }
            c[rank - 2][rank - 1] = -2;
            c[rank - 1][rank - 2] = -1;
        }
        Series::C => {
            // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
            for i in 0..rank - 2 {
                chain(&mut c, i, i + 1);
            }
            c[rank - 2][rank - 1] = -1;
            c[rank - 1][rank - 2] = -2;
        }
        Series::D => {
            for i in 0..rank - 3 {
                chain(&mut c, i, i + 1);
            }
            chain(&mut c, rank - 3, rank - 2);
            chain(&mut c, rank - 3, rank - 1);
        }
        Series::E => {
            // Bourbaki: node 2 hangs off node 4; chain 1-3-4-5-...-n.
            chain(&mut c, 0, 2);
            chain(&mut c, 1, 3);
            for i in 2..rank - 1 {
                chain(&mut c, i, i + 1);
            }
        }
        Series::F => {
            chain(&mut c, 0, 1);
            c[1][2] = -2;
            c[2][1] = -1;
            chain(&mut c, 2, 3);
        }
        Series::G => {
            // alpha_1 short (highest root 3a1+2a2).
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

/// Half squared lengths of the simple roots, long roots normalized to 2.
fn half_lengths(series: Series, rank: usize) -> Vec<Q> {
    match series {
        Series::A | Series::D | Series::E => vec![Q::one(); rank],
        Series::B => {
            let mut d = vec![Q::one(); rank];
            d[rank - 1] = crate::qr(1, 2);
            d
        }
        Series::C => {
            let mut d = vec![crate::qr(1, 2); rank];
            d[rank - 1] = Q::one();
            d
        }
        Series::F => vec![Q::one(), Q::one(), crate::qr(1, 2), crate::qr(1, 2)],
        Series::G => vec![crate::qr(1, 3), Q::one()],
    }
}

/// Immutable exact data for one root system (possibly a direct sum).
#[derive(Debug)]
pub struct RootSystem {
    label: String,
    components: Vec<(Series, usize)>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    gram: QMat,
    roots: Vec<Vec<i64>>,
    n_pos: usize,
    index: HashMap<Vec<i64>, usize>,
    height: Vec<i64>,
    coroot: Vec<Vec<Q>>,
    add_table: Vec<i32>,
    rho_vec: Vec<Q>,
    fundamental: Vec<Vec<Q>>,
    automorphisms: Vec<Vec<usize>>,
    simple_pos: Vec<usize>,
    component_of_simple: Vec<usize>,
}

impl RootSystem {
    pub fn build(series: Series, rank: usize) -> Result<RootSystem> {
        Self::build_composite(&[(series, rank)])
    }

    pub fn from_label(label: &str) -> Result<RootSystem> {
        Self::build_composite(&parse_type(label)?)
    }

    pub fn build_composite(components: &[(Series, usize)]) -> Result<RootSystem> {
        if components.is_empty() {
            return Err(Error::InvalidType("empty type list".into()));
        }
        for &(s, r) in components {
            validate(s, r)?;
        }
        let rank: usize = components.iter().map(|&(_, r)| r).sum();
        let label = components
            .iter()
            .map(|&(s, r)| format!("{s}{r}"))
            .collect::<Vec<_>>()
            .join("+");

        // Block-diagonal Cartan matrix and length data.
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut half_len = Vec::with_capacity(rank);
        let mut component_of_simple = Vec::with_capacity(rank);
        let mut off = 0;
        for (ci, &(s, r)) in components.iter().enumerate() {
            let block = cartan_block(s, r);
            for i in 0..r {
                for j in 0..r {
                    cartan[off + i][off + j] = block[i][j];
                }
            }
            half_len.extend(half_lengths(s, r));
            component_of_simple.extend(std::iter::repeat(ci).take(r));
            off += r;
        }

        // Gram matrix (alpha_i, alpha_j) = cartan[i][j] * d_j; must be symmetric.
        let mut gram = QMat::zero(rank, rank);
        for i in 0..rank {
            for j in 0..rank {
                gram[(i, j)] = q(cartan[i][j]) * &half_len[j];
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                assert_eq!(gram[(i, j)], gram[(j, i)], "form not symmetric");
            }
        }

        // Positive roots by closure: grow strings in each simple direction.
        let mut positives: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0i64; rank];
                v[i] = 1;
                v
            })
            .collect();
        let mut seen: HashMap<Vec<i64>, ()> = positives.iter().cloned().map(|v| (v, ())).collect();
        let mut frontier = positives.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for phi in &frontier {
                for i in 0..rank {
                    // p = how far the alpha_i string extends below phi.
                    let mut p = 0i64;
                    let mut below = phi.clone();
                    loop {
                        below[i] -= 1;
                        if seen.contains_key(&below) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..rank).map(|k| phi[k] * cartan[k][i]).sum();
                    if p - pairing > 0 {
                        let mut up = phi.clone();
                        up[i] += 1;
                        if seen.insert(up.clone(), ()).is_none() {
                            next.push(up);
                        }
                    }
                }
            }
            positives.extend(next.iter().cloned());
            frontier = next;
        }

        positives.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
        let n_pos = positives.len();
        if n_pos > 128 {
            return Err(Error::ResourceExceeded { what: format!("positive roots of {label}"), cap: 128 });
        }

        let mut roots = positives;
        for p in 0..n_pos {
            let neg: Vec<i64> = roots[p].iter().map(|&x| -x).collect();
            roots.push(neg);
        }
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let height: Vec<i64> = roots.iter().map(|v| v.iter().sum()).collect();

        // Addition table over the whole root set.
        let total = roots.len();
        let mut add_table = vec![-1i32; total * total];
        for i in 0..total {
            for j in 0..total {
                let sum: Vec<i64> = (0..rank).map(|k| roots[i][k] + roots[j][k]).collect();
                if let Some(&s) = index.get(&sum) {
                    add_table[i * total + j] = s as i32;
                }
            }
        }

        // Half squared length of each root, then coroot coordinates.
        let root_half_len: Vec<Q> = roots
            .iter()
            .map(|v| {
                let mut acc = Q::zero();
                for i in 0..rank {
                    for j in 0..rank {
                        if v[i] != 0 && v[j] != 0 {
                            acc += q(v[i] * v[j]) * &gram[(i, j)];
                        }
                    }
                }
                acc / q(2)
            })
            .collect();
        let coroot: Vec<Vec<Q>> = roots
            .iter()
            .enumerate()
            .map(|(idx, v)| {
                (0..rank).map(|i| q(v[i]) * &half_len[i] / &root_half_len[idx]).collect()
            })
            .collect();

        let rho_vec: Vec<Q> = (0..rank)
            .map(|i| {
                let s: i64 = roots[..n_pos].iter().map(|v| v[i]).sum();
                crate::qr(s, 2)
            })
            .collect();

        // Fundamental weights: rows of the inverse Cartan matrix.
        let mut aug = QMat::zero(rank, 2 * rank);
        for i in 0..rank {
            for j in 0..rank {
                aug[(i, j)] = q(cartan[i][j]);
            }
            aug[(i, rank + i)] = Q::one();
        }
        aug.rref();
        let fundamental: Vec<Vec<Q>> =
            (0..rank).map(|i| (0..rank).map(|j| aug[(i, rank + j)].clone()).collect()).collect();

        let automorphisms = diagram_automorphisms(&cartan);
        let simple_pos: Vec<usize> = (0..rank)
            .map(|i| {
                let mut v = vec![0i64; rank];
                v[i] = 1;
                index[&v]
            })
            .collect();

        let rs = RootSystem {
            label,
            components: components.to_vec(),
            rank,
            cartan,
            gram,
            roots,
            n_pos,
            index,
            height,
            coroot,
            add_table,
            rho_vec,
            fundamental,
            automorphisms,
            simple_pos,
            component_of_simple,
        };
        debug_assert!(rs.check_invariants());
        Ok(rs)
    }

    fn check_invariants(&self) -> bool {
        // rho pairs to 1 with every simple coroot.
        for i in 0..self.rank {
            assert!(self.coroot_pairing(&self.rho_vec, self.simple_pos[i]).is_one());
        }
        // heights grade addition.
        for i in 0..self.n_roots() {
            for j in 0..self.n_roots() {
                if let Some(s) = self.root_sum(i, j) {
                    assert_eq!(self.height[s], self.height[i] + self.height[j]);
                }
            }
        }
        true
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn components(&self) -> &[(Series, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn n_positive(&self) -> usize {
        self.n_pos
    }

    pub fn n_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    pub fn height(&self, i: usize) -> i64 {
        self.height[i]
    }

    /// Index of simple root `alpha_i` among the positive roots.
    pub fn simple_root(&self, i: usize) -> usize {
        self.simple_pos[i]
    }

    /// Is positive-root index `p` a simple root? Returns its simple index.
    pub fn simple_index(&self, p: usize) -> Option<usize> {
        (self.height[p] == 1).then(|| {
            self.roots[p].iter().position(|&c| c == 1).expect("height-1 root is simple")
        })
    }

    /// `phi + psi` as a root index, when the sum is a root.
    pub fn root_sum(&self, i: usize, j: usize) -> Option<usize> {
        let v = self.add_table[i * self.roots.len() + j];
        (v >= 0).then_some(v as usize)
    }

    /// Invariant form on arbitrary rational vectors in simple-root coordinates.
    pub fn form(&self, x: &[Q], y: &[Q]) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.rank {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if !y[j].is_zero() && !self.gram[(i, j)].is_zero() {
                    acc += &x[i] * &y[j] * &self.gram[(i, j)];
                }
            }
        }
        acc
    }

    /// Form value `(x, phi)` for a root index.
    pub fn form_with_root(&self, x: &[Q], phi: usize) -> Q {
        let y: Vec<Q> = self.roots[phi].iter().map(|&c| q(c)).collect();
        self.form(x, &y)
    }

    /// Form value between two roots.
    pub fn form_roots(&self, i: usize, j: usize) -> Q {
        let x: Vec<Q> = self.roots[i].iter().map(|&c| q(c)).collect();
        self.form_with_root(&x, j)
    }

    /// `<x, phi^vee> = 2(x,phi)/(phi,phi)`.
    pub fn coroot_pairing(&self, x: &[Q], phi: usize) -> Q {
        let mut acc = Q::zero();
        // <alpha_i, phi^vee> components: phi^vee = sum coroot[phi][i] alpha_i^vee
        // and <x, alpha_i^vee> = sum_j x_j cartan[j][i].
        for i in 0..self.rank {
            if self.coroot[phi][i].is_zero() {
                continue;
            }
            let mut xi = Q::zero();
            for j in 0..self.rank {
                if !x[j].is_zero() && self.cartan[j][i] != 0 {
                    xi += &x[j] * q(self.cartan[j][i]);
                }
            }
            acc += xi * &self.coroot[phi][i];
        }
        acc
    }

    /// Integer Cartan pairing `<phi, alpha_j^vee>` for a root index.
    pub fn cartan_pairing(&self, phi: usize, j: usize) -> i64 {
        (0..self.rank).map(|k| self.roots[phi][k] * self.cartan[k][j]).sum()
    }

    /// `<phi, psi^vee>` for two roots; always an integer.
    pub fn root_coroot_pairing(&self, phi: usize, psi: usize) -> i64 {
        let x: Vec<Q> = self.roots[phi].iter().map(|&c| q(c)).collect();
        let v = self.coroot_pairing(&x, psi);
        assert!(crate::linalg::is_integer(&v), "non-integer Cartan pairing");
        v.to_integer().try_into().expect("pairing fits i64")
    }

    /// Coroot coordinates of `phi^vee` in the simple-coroot basis.
    pub fn coroot_coords(&self, phi: usize) -> &[Q] {
        &self.coroot[phi]
    }

    pub fn rho(&self) -> &[Q] {
        &self.rho_vec
    }

    /// `omega_i` in simple-root coordinates.
    pub fn fundamental_weight(&self, i: usize) -> &[Q] {
        &self.fundamental[i]
    }

    /// Convert fundamental-weight coordinates to simple-root coordinates.
    pub fn weight_to_alpha(&self, omega_coords: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.rank];
        for (j, c) in omega_coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for k in 0..self.rank {
                out[k] += c * &self.fundamental[j][k];
            }
        }
        out
    }

    /// Convert simple-root coordinates to fundamental-weight coordinates.
    pub fn alpha_to_weight(&self, alpha_coords: &[Q]) -> Vec<Q> {
        (0..self.rank)
            .map(|j| {
                let mut acc = Q::zero();
                for i in 0..self.rank {
                    if !alpha_coords[i].is_zero() && self.cartan[i][j] != 0 {
                        acc += &alpha_coords[i] * q(self.cartan[i][j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Dominance order on roots: `phi <= psi` iff `psi - phi` has
    /// non-negative coordinates.
    pub fn dominance_leq(&self, phi: usize, psi: usize) -> bool {
        (0..self.rank).all(|k| self.roots[psi][k] >= self.roots[phi][k])
    }

    pub fn dominance_lt(&self, phi: usize, psi: usize) -> bool {
        phi != psi && self.dominance_leq(phi, psi)
    }

    /// Closed dominance interval `[phi; psi]` within the positive roots.
    pub fn interval(&self, phi: usize, psi: usize) -> RootSubset {
        assert!(self.is_positive(phi) && self.is_positive(psi));
        (0..self.n_pos)
            .filter(|&g| self.dominance_leq(phi, g) && self.dominance_leq(g, psi))
            .collect()
    }

    /// Open dominance interval `]phi; psi[`.
    pub fn interval_open(&self, phi: usize, psi: usize) -> RootSubset {
        let mut s = self.interval(phi, psi);
        s.remove(phi);
        s.remove(psi);
        s
    }

    /// Matrix of the simple reflection `s_i` on simple-root coordinates,
    /// stored row-major: column `j` holds the coordinates of `s_i(alpha_j)`.
    pub fn simple_reflection(&self, i: usize) -> Vec<i64> {
        let n = self.rank;
        let mut m = vec![0i64; n * n];
        for j in 0..n {
            for k in 0..n {
                m[k * n + j] = i64::from(j == k);
            }
            m[i * n + j] -= self.cartan[j][i];
        }
        m
    }

    /// Matrix of the reflection at an arbitrary root.
    pub fn reflection(&self, phi: usize) -> Vec<i64> {
        let n = self.rank;
        let mut m = vec![0i64; n * n];
        for j in 0..n {
            let pairing = self.cartan_pairing_of_simple_against(j, phi);
            for k in 0..n {
                m[k * n + j] = i64::from(j == k) - pairing * self.roots[phi][k];
            }
        }
        m
    }

    /// `<alpha_j, phi^vee>` as an integer.
    fn cartan_pairing_of_simple_against(&self, j: usize, phi: usize) -> i64 {
        let x: Vec<Q> = (0..self.rank).map(|k| q(i64::from(k == j))).collect();
        let v = self.coroot_pairing(&x, phi);
        assert!(crate::linalg::is_integer(&v));
        v.to_integer().try_into().expect("pairing fits i64")
    }

    /// Apply a rank x rank matrix (row-major) to root coordinates.
    pub fn apply_matrix(&self, m: &[i64], coords: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n).map(|r| (0..n).map(|c| m[r * n + c] * coords[c]).sum()).collect()
    }

    /// Image of root `i` under a matrix, as a root index.
    pub fn root_image(&self, m: &[i64], i: usize) -> Option<usize> {
        self.root_index(&self.apply_matrix(m, &self.roots[i]))
    }

    /// Diagram automorphisms as permutations of the simple roots.
    pub fn automorphisms(&self) -> &[Vec<usize>] {
        &self.automorphisms
    }

    /// Image of a root index under a diagram automorphism.
    pub fn automorphism_image(&self, perm: &[usize], i: usize) -> usize {
        let mut coords = vec![0i64; self.rank];
        for k in 0..self.rank {
            coords[perm[k]] = self.roots[i][k];
        }
        self.index[&coords]
    }

    /// Component id carrying root `i` (roots of a direct sum live in a
    /// single component).
    pub fn component_of_root(&self, i: usize) -> usize {
        let k = self.roots[i].iter().position(|&c| c != 0).expect("root is nonzero");
        self.component_of_simple[k]
    }

    /// Versioned JSON document for the cache layer.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "format_version": crate::cache::FORMAT_VERSION,
            "type": self.label,
            "cartan": self.cartan,
            "roots": self.roots[..self.n_pos].to_vec(),
        })
    }

    /// Rebuild from the JSON document, verifying it matches this build.
    pub fn from_json(doc: &serde_json::Value) -> Result<RootSystem> {
        let version = doc["format_version"].as_u64().unwrap_or(0);
        if version != crate::cache::FORMAT_VERSION {
            return Err(Error::Cache {
                path: "<json>".into(),
                reason: format!("format_version {version} != {}", crate::cache::FORMAT_VERSION),
            });
        }
        let label = doc["type"]
            .as_str()
            .ok_or_else(|| Error::Cache { path: "<json>".into(), reason: "missing type".into() })?;
        let rs = RootSystem::from_label(label)?;
        let roots: Vec<Vec<i64>> = serde_json::from_value(doc["roots"].clone())
            .map_err(|e| Error::Cache { path: "<json>".into(), reason: e.to_string() })?;
        if roots != rs.roots[..rs.n_pos] {
            return Err(Error::Cache {
                path: "<json>".into(),
                reason: "root table mismatch".into(),
            });
        }
        Ok(rs)
    }
}

fn diagram_automorphisms(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    if n > 9 {
        // Only needed at small rank; identity is always present.
        return vec![(0..n).collect()];
    }
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute(&mut current, 0, &mut |p| {
        let ok = (0..n).all(|i| (0..n).all(|j| cartan[p[i]][p[j]] == cartan[i][j]));
        if ok {
            perms.push(p.to_vec());
        }
    });
    perms.sort();
    perms
}

fn permute(arr: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == arr.len() {
        f(arr);
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        permute(arr, k + 1, f);
        arr.swap(k, i);
    }
}

/// Positive-root counts of the classical and exceptional types.
pub fn classical_positive_count(series: Series, rank: usize) -> usize {
    match series {
        Series::A => rank * (rank + 1) / 2,
        Series::B | Series::C => rank * rank,
        Series::D => rank * (rank - 1),
        Series::E => match rank {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Series::F => 24,
        Series::G => 6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for (label, n) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("F4", 24),
            ("G2", 6),
            ("E6", 36),
            ("E7", 63),
        ] {
            let r = rs(label);
            assert_eq!(r.n_positive(), n, "{label}");
            let (series, rank) = parse_type(label).unwrap()[0];
            assert_eq!(classical_positive_count(series, rank), n);
        }
        // Cross-check F4 against (dim g - rank)/2 = (52 - 4)/2.
        assert_eq!(rs("F4").n_positive(), (52 - 4) / 2);
    }

    #[test]
    fn g2_highest_root() {
        let r = rs("G2");
        assert!(r.root_index(&[3, 2]).is_some());
        let heights: Vec<i64> = (0..r.n_positive()).map(|i| r.height(i)).collect();
        assert_eq!(heights.iter().max(), Some(&5));
    }

    #[test]
    fn a1_trivial() {
        let r = rs("A1");
        assert_eq!(r.n_positive(), 1);
        assert_eq!(r.root(0), &[1]);
    }

    #[test]
    fn invalid_types_rejected() {
        for bad in ["D3", "E9", "F5", "G3", "B1", "H4", "A0", ""] {
            assert!(RootSystem::from_label(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn root_sums_a2_and_g2() {
        let a2 = rs("A2");
        let a1 = a2.root_index(&[1, 0]).unwrap();
        let al2 = a2.root_index(&[0, 1]).unwrap();
        let sum = a2.root_sum(a1, al2).unwrap();
        assert_eq!(a2.root(sum), &[1, 1]);
        assert!(a2.root_sum(sum, a1).is_none());

        let g2 = rs("G2");
        let a1 = g2.root_index(&[1, 0]).unwrap();
        let a12 = g2.root_index(&[1, 1]).unwrap();
        let s = g2.root_sum(a12, a1).unwrap();
        assert_eq!(g2.root(s), &[2, 1]);
    }

    #[test]
    fn intervals() {
        let a2 = rs("A2");
        let a1 = a2.root_index(&[1, 0]).unwrap();
        assert_eq!(a2.interval(a1, a1).to_vec(), vec![a1]);

        let g2 = rs("G2");
        let a2i = g2.root_index(&[0, 1]).unwrap();
        let top = g2.root_index(&[3, 2]).unwrap();
        let got = g2.interval(a2i, top);
        let expected: RootSubset = [[0, 1], [1, 1], [2, 1], [3, 1], [3, 2]]
            .iter()
            .map(|c| g2.root_index(&c[..]).unwrap())
            .collect();
        assert_eq!(got, expected);

        let d4 = rs("D4");
        let lo = d4.root_index(&[0, 1, 0, 0]).unwrap();
        let hi = d4.root_index(&[1, 1, 1, 1]).unwrap();
        let mid = d4.root_index(&[1, 1, 0, 0]).unwrap();
        assert!(d4.interval_open(lo, hi).contains(mid));
    }

    #[test]
    fn pairings() {
        let a2 = rs("A2");
        for i in 0..2 {
            assert!(a2.coroot_pairing(a2.rho(), a2.simple_root(i)).is_one());
        }
        let a1 = a2.simple_root(0);
        let al2 = a2.simple_root(1);
        assert_eq!(a2.form_roots(a1, al2), crate::q(-1));

        let d4 = rs("D4");
        assert_eq!(d4.form_roots(d4.simple_root(0), d4.simple_root(2)), crate::q(0));

        // Long-root normalization: squared length 2 for long roots.
        let g2 = rs("G2");
        let long = g2.root_index(&[3, 2]).unwrap();
        assert_eq!(g2.form_roots(long, long), crate::q(2));
        let short = g2.root_index(&[1, 0]).unwrap();
        assert_eq!(g2.form_roots(short, short), crate::qr(2, 3));
    }

    #[test]
    fn reflections_permute_roots() {
        for label in ["A2", "B3", "C3", "D4", "G2", "F4", "A1+B2"] {
            let r = rs(label);
            for i in 0..r.rank() {
                let m = r.simple_reflection(i);
                let mut seen = std::collections::HashSet::new();
                for j in 0..r.n_roots() {
                    let img = r.root_image(&m, j).expect("reflection image is a root");
                    seen.insert(img);
                }
                assert_eq!(seen.len(), r.n_roots(), "{label} s_{i}");
            }
        }
    }

    #[test]
    fn general_reflection_matches_simple() {
        let r = rs("B3");
        for i in 0..r.rank() {
            assert_eq!(r.reflection(r.simple_root(i)), r.simple_reflection(i));
        }
    }

    #[test]
    fn dominance_graded_by_height() {
        for label in ["A3", "B3", "G2", "F4"] {
            let r = rs(label);
            for i in 0..r.n_positive() {
                for j in 0..r.n_positive() {
                    if r.dominance_lt(i, j) {
                        assert!(r.height(i) < r.height(j));
                    }
                }
            }
        }
    }

    #[test]
    fn automorphisms_structure() {
        assert_eq!(rs("A1").automorphisms().len(), 1);
        assert_eq!(rs("A3").automorphisms().len(), 2);
        assert_eq!(rs("D4").automorphisms().len(), 6);
        assert_eq!(rs("D5").automorphisms().len(), 2);
        assert_eq!(rs("E6").automorphisms().len(), 2);
        assert_eq!(rs("F4").automorphisms().len(), 1);
        assert_eq!(rs("A1+A1").automorphisms().len(), 2);

        // Automorphisms preserve the addition table and the form.
        let d4 = rs("D4");
        for perm in d4.automorphisms() {
            for i in 0..d4.n_roots() {
                for j in 0..d4.n_roots() {
                    let pi = d4.automorphism_image(perm, i);
                    let pj = d4.automorphism_image(perm, j);
                    assert_eq!(
                        d4.root_sum(i, j).map(|s| d4.automorphism_image(perm, s)),
                        d4.root_sum(pi, pj)
                    );
                    assert_eq!(d4.form_roots(i, j), d4.form_roots(pi, pj));
                }
            }
        }
    }

    #[test]
    fn reducible_dominance_stays_in_component() {
        let r = rs("A2+B2");
        for i in 0..r.n_positive() {
            for j in 0..r.n_positive() {
                if r.dominance_lt(i, j) {
                    assert_eq!(r.component_of_root(i), r.component_of_root(j));
                }
            }
        }
        assert_eq!(r.n_positive(), 3 + 4);
    }

    #[test]
    fn json_round_trip() {
        let r = rs("B3");
        let doc = r.to_json();
        let back = RootSystem::from_json(&doc).unwrap();
        assert_eq!(back.label(), "B3");
        let mut bad = doc.clone();
        bad["format_version"] = serde_json::json!(999);
        assert!(RootSystem::from_json(&bad).is_err());
    }

    #[test]
    fn weight_coordinate_conversions() {
        let r = rs("B3");
        for i in 0..r.rank() {
            let om = r.fundamental_weight(i).to_vec();
            let w = r.alpha_to_weight(&om);
            for (j, c) in w.iter().enumerate() {
                assert_eq!(*c, crate::q(i64::from(i == j)));
            }
            assert_eq!(r.weight_to_alpha(&w), om);
        }
    }
}
