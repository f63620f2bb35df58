//! Sparse multivariate polynomials over exact rationals.
//!
//! Exponent vectors are `Vec<u8>` keyed in a `BTreeMap`, so polynomials have
//! a canonical term order. Variables are fundamental-weight coordinates in
//! the Schubert-calculus code, which keeps every reflection action integral.

use crate::Q;
use num::Zero;
use std::collections::BTreeMap;

pub type Mono = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Poly {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Poly {
        let mut m = vec![0u8; nvars];
        m[i] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(m, crate::q(1));
        p
    }

    /// Linear form `sum coeffs[j] x_j`.
    pub fn linear(coeffs: &[Q]) -> Poly {
        let nvars = coeffs.len();
        let mut p = Poly::zero(nvars);
        for (j, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut m = vec![0u8; nvars];
                m[j] = 1;
                p.terms.insert(m, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[u8]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.iter().map(|&e| e as usize).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().map(|&e| e as usize).sum::<usize>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub(crate) fn insert_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, f: &Q) -> Poly {
        if f.is_zero() {
            return Poly::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * f)).collect();
        Poly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Mono = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.insert_term(m, c1 * c2);
            }
        }
        out
    }

    /// Ring endomorphism sending `x_j` to the linear form `images[j]`.
    pub fn substitute_linear(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        // Memoize powers of each image.
        let mut powers: Vec<Vec<Poly>> =
            images.iter().map(|im| vec![Poly::constant(self.nvars, crate::q(1)), im.clone()]).collect();
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(self.nvars, c.clone());
            for (j, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e as usize {
                    let last = powers[j].last().unwrap().mul(&images[j]);
                    powers[j].push(last);
                }
                term = term.mul(&powers[j][e as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Exact division by the linear form `sum coeffs[j] x_j`, using
    /// `pivot` (with nonzero coefficient) as the main variable.
    ///
    /// Panics on a nonzero remainder: callers only divide polynomials that
    /// are divisible by construction, so a remainder is an internal
    /// invariant violation.
    pub fn div_exact_linear(&self, coeffs: &[Q], pivot: usize) -> Poly {
        assert!(!coeffs[pivot].is_zero());
        if self.is_zero() {
            return Poly::zero(self.nvars);
        }
        // View as a univariate polynomial in x_pivot: self = sum_k g_k t^k,
        // divisor = c t + r. Synthetic division from the top degree down.
        let top = self.terms.keys().map(|m| m[pivot]).max().unwrap() as usize;
        let mut layers: Vec<Poly> = vec![Poly::zero(self.nvars); top + 1];
        for (m, c) in &self.terms {
            let k = m[pivot] as usize;
            let mut m0 = m.clone();
            m0[pivot] = 0;
            layers[k].insert_term(m0, c.clone());
        }
        let mut rest = coeffs.to_vec();
        rest[pivot] = Q::zero();
        let r = Poly::linear(&rest);
        let c_inv = Q::from_integer(1.into()) / &coeffs[pivot];

        let mut quotient = Poly::zero(self.nvars);
        let mut carry = Poly::zero(self.nvars);
        for k in (1..=top).rev() {
            let qk = layers[k].add(&carry).scale(&c_inv);
            // Contribute q_{k-1} t^{k-1}; the r-part flows into layer k-1.
            for (m, c) in &qk.terms {
                let mut m2 = m.clone();
                m2[pivot] = (k - 1) as u8;
                quotient.insert_term(m2, c.clone());
            }
            carry = qk.mul(&r).scale(&crate::q(-1));
        }
        let remainder = layers[0].add(&carry);
        assert!(remainder.is_zero(), "non-exact division by linear form");
        quotient
    }

    /// Serialize terms as `[[exponents...], "num/den"]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| serde_json::json!([m, c.to_string()]))
            .collect();
        serde_json::json!({"nvars": self.nvars, "terms": terms})
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Poly> {
        let nvars = v["nvars"].as_u64()? as usize;
        let mut p = Poly::zero(nvars);
        for t in v["terms"].as_array()? {
            let m: Mono = serde_json::from_value(t[0].clone()).ok()?;
            let c: Q = t[1].as_str()?.parse().ok()?;
            if m.len() != nvars {
                return None;
            }
            p.insert_term(m, c);
        }
        Some(p)
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (j, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{j}")?,
                    _ => write!(f, "*x{j}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qr};

    #[test]
    fn arithmetic_basics() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y)); // x^2 - y^2
        assert_eq!(p.coefficient(&[2, 0]), q(1));
        assert_eq!(p.coefficient(&[0, 2]), q(-1));
        assert_eq!(p.coefficient(&[1, 1]), q(0));
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn substitution() {
        // x -> x + y, y -> y: (x+y)^2 under x -> x+y gives (x+2y)... check
        // p = x^2 with x -> x + 2y: x^2 + 4xy + 4y^2.
        let x = Poly::var(2, 0);
        let p = x.mul(&x);
        let image = Poly::linear(&[q(1), q(2)]);
        let s = p.substitute_linear(&[image, Poly::var(2, 1)]);
        assert_eq!(s.coefficient(&[2, 0]), q(1));
        assert_eq!(s.coefficient(&[1, 1]), q(4));
        assert_eq!(s.coefficient(&[0, 2]), q(4));
    }

    #[test]
    fn exact_linear_division() {
        // (2x - y) * (x^2 + xy/3 + 5) divided by (2x - y).
        let ell = [q(2), q(-1)];
        let l = Poly::linear(&ell);
        let mut f = Poly::zero(2);
        f.insert_term(vec![2, 0], q(1));
        f.insert_term(vec![1, 1], qr(1, 3));
        f.insert_term(vec![0, 0], q(5));
        let prod = l.mul(&f);
        assert_eq!(prod.div_exact_linear(&ell, 0), f);
    }

    #[test]
    #[should_panic(expected = "non-exact division")]
    fn inexact_division_panics() {
        let one = Poly::constant(2, q(1));
        let x = Poly::var(2, 0);
        x.add(&one).div_exact_linear(&[q(1), q(0)], 0);
    }

    #[test]
    fn json_round_trip() {
        let mut f = Poly::zero(3);
        f.insert_term(vec![1, 2, 0], qr(-7, 3));
        f.insert_term(vec![0, 0, 5], q(11));
        let back = Poly::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
    }
}

// ---------------------------------------------------------------------------
// Integer engine
// ---------------------------------------------------------------------------

use num::BigInt;

/// Build-hasher for packed monomial keys (Fibonacci multiply).
#[derive(Clone, Default)]
pub struct KeyHasherBuilder;

pub struct KeyHasher(u64);

impl std::hash::Hasher for KeyHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, _bytes: &[u8]) {
        unreachable!("only u64 keys are hashed");
    }
    fn write_u64(&mut self, k: u64) {
        self.0 = k.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    }
}

impl std::hash::BuildHasher for KeyHasherBuilder {
    type Hasher = KeyHasher;
    fn build_hasher(&self) -> KeyHasher {
        KeyHasher(0)
    }
}

pub fn pack_mono(m: &[u8]) -> u64 {
    assert!(m.len() <= 8);
    m.iter().enumerate().fold(0u64, |acc, (j, &e)| acc | (e as u64) << (8 * j))
}

pub fn unpack_mono(key: u64, nvars: usize) -> Mono {
    (0..nvars).map(|j| (key >> (8 * j)) as u8).collect()
}

/// Sparse integer polynomial with packed exponent keys, sorted by key.
///
/// This is the arithmetic engine behind the Schubert tables: divided
/// differences preserve integer coefficients in fundamental-weight
/// coordinates, so the whole pipeline runs over `BigInt` with one global
/// rational scale factored out by the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPoly {
    nvars: usize,
    terms: Vec<(u64, BigInt)>,
}

impl ZPoly {
    pub fn zero(nvars: usize) -> ZPoly {
        ZPoly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: i64) -> ZPoly {
        Self::constant_big(nvars, BigInt::from(c))
    }

    pub fn constant_big(nvars: usize, c: BigInt) -> ZPoly {
        if c == BigInt::ZERO {
            return Self::zero(nvars);
        }
        ZPoly { nvars, terms: vec![(0, c)] }
    }

    pub fn linear(coeffs: &[i64]) -> ZPoly {
        let nvars = coeffs.len();
        let mut terms: Vec<(u64, BigInt)> = coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(j, &c)| (1u64 << (8 * j), BigInt::from(c)))
            .collect();
        terms.sort_by_key(|&(k, _)| k);
        ZPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|&(k, _)| key_degree(k)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|&(k, _)| key_degree(k));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn coefficient(&self, m: &[u8]) -> BigInt {
        let key = pack_mono(m);
        match self.terms.binary_search_by_key(&key, |&(k, _)| k) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::ZERO,
        }
    }

    fn from_map(nvars: usize, map: std::collections::HashMap<u64, BigInt, KeyHasherBuilder>) -> ZPoly {
        let mut terms: Vec<(u64, BigInt)> =
            map.into_iter().filter(|(_, c)| *c != BigInt::ZERO).collect();
        terms.sort_by_key(|&(k, _)| k);
        ZPoly { nvars, terms }
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if c != BigInt::ZERO {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        ZPoly { nvars: self.nvars, terms: out }
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: std::collections::HashMap<u64, BigInt, KeyHasherBuilder> =
            std::collections::HashMap::with_capacity_and_hasher(
                small.terms.len() * large.terms.len() / 2 + 8,
                KeyHasherBuilder,
            );
        for (k1, c1) in &small.terms {
            for (k2, c2) in &large.terms {
                let e = acc.entry(k1 + k2).or_insert_with(|| BigInt::ZERO);
                *e += c1 * c2;
            }
        }
        Self::from_map(self.nvars, acc)
    }

    pub fn scale_int(&self, f: &BigInt) -> ZPoly {
        if *f == BigInt::ZERO {
            return Self::zero(self.nvars);
        }
        ZPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (*k, c * f)).collect(),
        }
    }

    /// Ring endomorphism `x_j -> sum images[j][k] x_k` (integer linear).
    pub fn substitute_linear(&self, images: &[Vec<i64>]) -> ZPoly {
        let nvars = self.nvars;
        let lines: Vec<ZPoly> = images.iter().map(|row| ZPoly::linear(row)).collect();
        let mut powers: Vec<Vec<ZPoly>> = (0..nvars)
            .map(|j| vec![ZPoly::constant(nvars, 1), lines[j].clone()])
            .collect();
        let mut acc: std::collections::HashMap<u64, BigInt, KeyHasherBuilder> =
            std::collections::HashMap::with_hasher(KeyHasherBuilder);
        for (key, c) in &self.terms {
            let mut term = ZPoly::constant_big(nvars, c.clone());
            for j in 0..nvars {
                let e = (key >> (8 * j)) as u8 as usize;
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e {
                    let next = powers[j].last().unwrap().mul(&lines[j]);
                    powers[j].push(next);
                }
                term = term.mul(&powers[j][e]);
            }
            for (k, v) in term.terms {
                let e = acc.entry(k).or_insert_with(|| BigInt::ZERO);
                *e += v;
            }
        }
        Self::from_map(nvars, acc)
    }

    /// Exact division by `sum coeffs[j] x_j` with pivot variable `pivot`.
    /// Panics on a nonzero remainder or non-integral quotient step.
    pub fn div_exact_linear(&self, coeffs: &[i64], pivot: usize) -> ZPoly {
        assert!(coeffs[pivot] != 0);
        if self.is_zero() {
            return Self::zero(self.nvars);
        }
        let shift = 8 * pivot;
        let top = self.terms.iter().map(|&(k, _)| (k >> shift) as u8).max().unwrap() as usize;
        let mut layers: Vec<Vec<(u64, BigInt)>> = vec![Vec::new(); top + 1];
        for (k, c) in &self.terms {
            let e = (k >> shift) as u8 as usize;
            layers[e].push((k & !(0xffu64 << shift), c.clone()));
        }
        let layer_polys: Vec<ZPoly> = layers
            .into_iter()
            .map(|mut t| {
                t.sort_by_key(|&(k, _)| k);
                ZPoly { nvars: self.nvars, terms: t }
            })
            .collect();
        let mut rest = coeffs.to_vec();
        rest[pivot] = 0;
        let r = ZPoly::linear(&rest);
        let c_pivot = BigInt::from(coeffs[pivot]);

        let mut quotient_terms: Vec<(u64, BigInt)> = Vec::new();
        let mut carry = ZPoly::zero(self.nvars);
        for k in (1..=top).rev() {
            let num = layer_polys[k].add(&carry);
            let mut qk = ZPoly::zero(self.nvars);
            qk.terms = num
                .terms
                .iter()
                .map(|(key, c)| {
                    let (q, rem) = num::Integer::div_rem(c, &c_pivot);
                    assert!(rem == BigInt::ZERO, "non-integral quotient in linear division");
                    (*key, q)
                })
                .collect();
            for (key, c) in &qk.terms {
                quotient_terms.push((key | ((k as u64 - 1) << shift), c.clone()));
            }
            carry = qk.mul(&r).neg();
        }
        let remainder = layer_polys[0].add(&carry);
        assert!(remainder.is_zero(), "non-exact division by linear form");
        quotient_terms.sort_by_key(|&(k, _)| k);
        ZPoly { nvars: self.nvars, terms: quotient_terms }
    }

    /// Exact rational view (used for cross-checks and serialization).
    pub fn to_rational(&self, denominator: &BigInt) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (k, c) in &self.terms {
            p.insert_term(unpack_mono(*k, self.nvars), Q::new(c.clone(), denominator.clone()));
        }
        p
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, c)| serde_json::json!([unpack_mono(*k, self.nvars), c.to_string()]))
            .collect();
        serde_json::json!({"nvars": self.nvars, "terms": terms})
    }

    pub fn from_json(v: &serde_json::Value) -> Option<ZPoly> {
        let nvars = v["nvars"].as_u64()? as usize;
        let mut terms = Vec::new();
        for t in v["terms"].as_array()? {
            let m: Mono = serde_json::from_value(t[0].clone()).ok()?;
            let c: BigInt = t[1].as_str()?.parse().ok()?;
            if m.len() != nvars {
                return None;
            }
            terms.push((pack_mono(&m), c));
        }
        terms.sort_by_key(|&(k, _)| k);
        Some(ZPoly { nvars, terms })
    }
}

pub fn key_degree(key: u64) -> usize {
    key.to_le_bytes().iter().map(|&b| b as usize).sum()
}

#[cfg(test)]
mod ztests {
    use super::*;

    #[test]
    fn zpoly_matches_rational_poly() {
        // (2x - y)(x + 3y) in both engines.
        let a = ZPoly::linear(&[2, -1]);
        let b = ZPoly::linear(&[1, 3]);
        let prod = a.mul(&b);
        let ra = Poly::linear(&[crate::q(2), crate::q(-1)]);
        let rb = Poly::linear(&[crate::q(1), crate::q(3)]);
        assert_eq!(prod.to_rational(&num::BigInt::from(1)), ra.mul(&rb));
        assert_eq!(prod.degree(), Some(2));
        assert!(prod.is_homogeneous());
    }

    #[test]
    fn zpoly_division_round_trip() {
        let ell = [2i64, -1, 1];
        let l = ZPoly::linear(&ell);
        let f = ZPoly::linear(&[1, 1, 0]).mul(&ZPoly::linear(&[0, 3, -2])).add(&ZPoly::constant(3, 4));
        let prod = l.mul(&f);
        assert_eq!(prod.div_exact_linear(&ell, 0), f);
    }

    #[test]
    fn zpoly_substitution_matches() {
        let f = ZPoly::linear(&[1, 2]).mul(&ZPoly::linear(&[1, 2]));
        let images = vec![vec![1i64, -1], vec![0, 1]];
        let s = f.substitute_linear(&images);
        let rf = Poly::linear(&[crate::q(1), crate::q(2)]);
        let rf = rf.mul(&rf);
        let rimages =
            vec![Poly::linear(&[crate::q(1), crate::q(-1)]), Poly::var(2, 1)];
        assert_eq!(s.to_rational(&num::BigInt::from(1)), rf.substitute_linear(&rimages));
    }

    #[test]
    fn zpoly_json_round_trip() {
        let f = ZPoly::linear(&[7, -3]).mul(&ZPoly::linear(&[1, 1]));
        assert_eq!(ZPoly::from_json(&f.to_json()), Some(f));
    }
}
