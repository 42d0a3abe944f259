//! Grassmann monomials on four generators and their sign calculus.
//!
//! A canonical monomial `ξ_I` (or `η_I`) is stored as a 4-bit mask: bit `k-1` is set when
//! index `k` occurs. Raw index sequences are brought to canonical form by [`normalize`],
//! which records the sign of the sorting permutation.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest generator index.
pub const N: u8 = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrassmannError {
    #[error("index {0} is outside 1..=4")]
    IndexOutOfRange(u8),
    #[error("index sequence {0:?} has a repeated entry")]
    RepeatedIndex(Vec<u8>),
}

/// A strictly increasing index sequence over `{1,2,3,4}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSeq(u8);

impl IndexSeq {
    pub const EMPTY: IndexSeq = IndexSeq(0);
    pub const TOP: IndexSeq = IndexSeq(0b1111);

    pub fn from_bits(bits: u8) -> Self {
        assert!(bits < 16, "mask {bits:#b} has bits beyond index 4");
        IndexSeq(bits)
    }

    /// The canonical sequence with the given entries, ignoring their order.
    pub fn from_indices(indices: &[u8]) -> Result<Self, GrassmannError> {
        let m = normalize(indices)?;
        if m.is_zero() {
            return Err(GrassmannError::RepeatedIndex(indices.to_vec()));
        }
        Ok(m.seq)
    }

    pub fn single(i: u8) -> Self {
        debug_assert!((1..=N).contains(&i));
        IndexSeq(1 << (i - 1))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u8) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    pub fn complement(self) -> Self {
        IndexSeq(!self.0 & 0b1111)
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn without(self, i: u8) -> Self {
        IndexSeq(self.0 & !(1 << (i - 1)))
    }

    pub fn with(self, i: u8) -> Self {
        IndexSeq(self.0 | (1 << (i - 1)))
    }

    /// Entries in increasing order.
    pub fn indices(self) -> impl Iterator<Item = u8> + Clone {
        (1..=N).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.indices().collect()
    }

    /// Number of entries strictly smaller than `i`.
    pub fn count_below(self, i: u8) -> usize {
        (self.0 & ((1 << (i - 1)) - 1)).count_ones() as usize
    }

    /// All 16 monomials, ordered by length and then lexicographically.
    pub fn all() -> impl Iterator<Item = IndexSeq> {
        let mut v: Vec<IndexSeq> = (0..16).map(IndexSeq).collect();
        v.sort_by_key(|s| (s.len(), s.to_vec()));
        v.into_iter()
    }

    /// All monomials of a given length, lexicographically.
    pub fn of_len(len: usize) -> impl Iterator<Item = IndexSeq> {
        Self::all().filter(move |s| s.len() == len)
    }

    /// Parity of the monomial: `true` when odd.
    pub fn is_odd(self) -> bool {
        self.len() % 2 == 1
    }
}

impl fmt::Display for IndexSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IndexSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// A canonical monomial with a normalisation sign. `sign == 0` encodes the zero monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedMonomial {
    pub sign: i8,
    pub seq: IndexSeq,
}

impl SignedMonomial {
    pub const ZERO: SignedMonomial = SignedMonomial { sign: 0, seq: IndexSeq::EMPTY };

    pub fn plus(seq: IndexSeq) -> Self {
        Self { sign: 1, seq }
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn negate(self) -> Self {
        Self { sign: -self.sign, ..self }
    }

    pub fn times(self, sign: i8) -> Self {
        if sign == 0 {
            Self::ZERO
        } else {
            Self { sign: self.sign * sign, ..self }
        }
    }

    /// Apply a sign-producing map unless already zero.
    pub fn and_then(self, f: impl FnOnce(IndexSeq) -> SignedMonomial) -> SignedMonomial {
        if self.is_zero() {
            Self::ZERO
        } else {
            f(self.seq).times(self.sign)
        }
    }
}

fn check_range(raw: &[u8]) -> Result<(), GrassmannError> {
    match raw.iter().find(|&&i| !(1..=N).contains(&i)) {
        Some(&i) => Err(GrassmannError::IndexOutOfRange(i)),
        None => Ok(()),
    }
}

/// Sort a raw index sequence, one sign flip per inversion. Repeated indices give zero.
pub fn normalize(raw: &[u8]) -> Result<SignedMonomial, GrassmannError> {
    check_range(raw)?;
    let mut bits = 0u8;
    let mut inversions = 0usize;
    for (k, &i) in raw.iter().enumerate() {
        if bits & (1 << (i - 1)) != 0 {
            return Ok(SignedMonomial::ZERO);
        }
        bits |= 1 << (i - 1);
        inversions += raw[..k].iter().filter(|&&j| j > i).count();
    }
    Ok(SignedMonomial { sign: parity_sign(inversions), seq: IndexSeq(bits) })
}

pub(crate) fn parity_sign(n: usize) -> i8 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `ξ_A ξ_B` in canonical form.
pub fn product(a: IndexSeq, b: IndexSeq) -> SignedMonomial {
    if a.intersects(b) {
        return SignedMonomial::ZERO;
    }
    let inversions: usize = b.indices().map(|j| a.len() - a.count_below(j)).sum();
    SignedMonomial { sign: parity_sign(inversions), seq: IndexSeq(a.0 | b.0) }
}

/// The left derivation `∂_i`: removes `i` with sign `(-1)^{pos+1}`.
pub fn derive(i: u8, m: IndexSeq) -> SignedMonomial {
    if !m.contains(i) {
        return SignedMonomial::ZERO;
    }
    SignedMonomial { sign: parity_sign(m.count_below(i)), seq: m.without(i) }
}

/// `∂_{i_1}(∂_{i_2}(⋯∂_{i_k} m))` for a raw sequence `(i_1,…,i_k)`; the rightmost acts first.
pub fn derive_seq(raw: &[u8], m: IndexSeq) -> SignedMonomial {
    raw.iter().rev().fold(SignedMonomial::plus(m), |acc, &i| acc.and_then(|s| derive(i, s)))
}

/// `∂_I m` for a canonical `I`.
pub fn derive_by(seq: IndexSeq, m: IndexSeq) -> SignedMonomial {
    derive_seq(&seq.to_vec(), m)
}

/// Sign of the permutation `(i_1,…,i_k, I^c in increasing order)` of `(1,2,3,4)`.
pub fn eps(raw: &[u8]) -> Result<i8, GrassmannError> {
    let m = normalize(raw)?;
    if m.is_zero() {
        return Err(GrassmannError::RepeatedIndex(raw.to_vec()));
    }
    let mut full = raw.to_vec();
    full.extend(m.seq.complement().indices());
    Ok(normalize(&full)?.sign)
}

/// `ε_I` for a canonical sequence.
pub fn eps_of(seq: IndexSeq) -> i8 {
    product(seq, seq.complement()).sign
}

/// `ξ_I ⋆ η_J = χ_{I∩J=∅} η_{IJ}`.
pub fn star(xi: IndexSeq, eta: IndexSeq) -> SignedMonomial {
    product(xi, eta)
}

/// The mirrored `η_J ⋆ ξ_I = χ_{I∩J=∅} η_{JI}`.
pub fn star_right(eta: IndexSeq, xi: IndexSeq) -> SignedMonomial {
    product(eta, xi)
}

/// The Hodge dual: the signed complementary monomial with `hodge(η_I) ⋆ ξ_I = η_{1234}`.
pub fn hodge(m: IndexSeq) -> SignedMonomial {
    let c = m.complement();
    SignedMonomial { sign: product(c, m).sign, seq: c }
}

/// Inverse of [`hodge`]: the signed monomial `g` with `hodge(g) = η_m`.
pub fn hodge_inv(m: IndexSeq) -> SignedMonomial {
    let c = m.complement();
    SignedMonomial { sign: hodge(c).sign, seq: c }
}
