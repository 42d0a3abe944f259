//! Finite formal linear combinations over [`ExactScalar`].

use std::collections::btree_map::{self, BTreeMap};

use crate::exact::ExactScalar;

/// `Σ c_k · k` with no zero coefficients, keyed in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, ExactScalar>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: ExactScalar) -> Self {
        let mut c = Self::new();
        c.add_term(key, coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> ExactScalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, ExactScalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: ExactScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &ExactScalar) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), -c);
        }
    }

    pub fn scaled(&self, factor: &ExactScalar) -> Self {
        if factor.is_zero() {
            return Self::new();
        }
        Self { terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect() }
    }

    pub fn negated(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    /// Apply a linear map defined on keys.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Combination<K2>) -> Combination<K2> {
        let mut out = Combination::new();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Relabel keys through a signed injection-like map (sign 0 drops the term).
    pub fn map_keys_signed<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Option<(K2, i64)>) -> Combination<K2> {
        let mut out = Combination::new();
        for (k, c) in &self.terms {
            if let Some((k2, s)) = f(k) {
                out.add_term(k2, c.scale(s));
            }
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Self { terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }

    /// The first nonzero coefficient in key order.
    pub fn leading(&self) -> Option<(&K, &ExactScalar)> {
        self.terms.iter().next()
    }
}

impl<K: Ord + Clone> FromIterator<(K, ExactScalar)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, ExactScalar)>>(iter: I) -> Self {
        let mut c = Self::new();
        for (k, x) in iter {
            c.add_term(k, x);
        }
        c
    }
}

impl<K: Ord> IntoIterator for Combination<K> {
    type Item = (K, ExactScalar);
    type IntoIter = btree_map::IntoIter<K, ExactScalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a Combination<K> {
    type Item = (&'a K, &'a ExactScalar);
    type IntoIter = btree_map::Iter<'a, K, ExactScalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

pub(crate) fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}

pub(crate) fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut c: Combination<u8> = Combination::single(1, ExactScalar::one());
        c.add_term(1, -ExactScalar::one());
        assert!(c.is_zero());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(4), 24);
    }
}
