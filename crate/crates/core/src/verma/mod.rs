//! Generalized Verma modules `Ind(F) ≅ ℂ[Θ] ⊗ ⋀(4) ⊗ F`.
//!
//! Vectors are finite sums of `Θ^k η_L ⊗ x_1^a x_2^{m-a} y_1^b y_2^{n-b}`, keyed by
//! [`VermaKey`]. Two independent implementations of the `𝔤`-action live here: the closed-form
//! λ-action ([`lambda_action`], with its Hodge-conjugate [`dual_lambda_action`]) and a
//! recursive-commutation oracle ([`act_oracle`]).

mod action;
mod checks;
mod oracle;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use action::{act, dual_lambda_action, lambda_action, t_power_action};
pub use checks::{basis_keys, check_high_t_powers, check_oracle_equivalence, check_worked_example, sampled_weights};
pub use oracle::{act_oracle, Oracle};

use crate::annihilation::SuperElement;
use crate::exact::ExactScalar;
use crate::grassmann::{hodge, hodge_inv, product, IndexSeq};
use crate::linear::{factorial, Combination};
use crate::weight_modules::{HighestWeight, MonoKey, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VermaError {
    #[error("vector is not homogeneous")]
    Inhomogeneous,
    #[error("element {0} does not lie in 𝔤_<0")]
    NotNegative(String),
    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(String, String),
}

/// The basis vector `Θ^theta η_mono ⊗ (monomial w)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VermaKey {
    pub theta: u32,
    pub mono: IndexSeq,
    pub w: MonoKey,
}

impl VermaKey {
    pub fn new(theta: u32, mono: IndexSeq, w: MonoKey) -> Self {
        Self { theta, mono, w }
    }

    /// `2k + |L|`.
    pub fn degree(self) -> u32 {
        2 * self.theta + self.mono.len() as u32
    }
}

impl fmt::Display for VermaKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.w;
        match self.theta {
            0 => {}
            1 => write!(f, "Θ")?,
            k => write!(f, "Θ^{k}")?,
        }
        write!(f, "η_{}⊗v[{a},{b}]", self.mono)
    }
}

/// An element of `Ind(F(weight))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaVector {
    weight: Arc<HighestWeight>,
    pub terms: Combination<VermaKey>,
}

impl VermaVector {
    pub fn zero(weight: &HighestWeight) -> Self {
        Self { weight: Arc::new(weight.clone()), terms: Combination::new() }
    }

    pub(crate) fn zero_like(&self) -> Self {
        Self { weight: Arc::clone(&self.weight), terms: Combination::new() }
    }

    pub(crate) fn with_terms(&self, terms: Combination<VermaKey>) -> Self {
        Self { weight: Arc::clone(&self.weight), terms }
    }

    pub fn basis(weight: &HighestWeight, key: VermaKey) -> Self {
        Self { weight: Arc::new(weight.clone()), terms: Combination::single(key, ExactScalar::one()) }
    }

    /// `Θ^k η_L ⊗ w` for a weight vector `w`.
    pub fn from_parts(theta: u32, mono: IndexSeq, w: &WeightVector) -> Self {
        let terms = w.coeffs.iter().map(|(k, c)| (VermaKey::new(theta, mono, *k), c.clone())).collect();
        Self { weight: Arc::new(w.weight.clone()), terms }
    }

    /// The vector `1 ⊗ w`.
    pub fn from_weight_vector(w: &WeightVector) -> Self {
        Self::from_parts(0, IndexSeq::EMPTY, w)
    }

    pub fn weight(&self) -> &HighestWeight {
        &self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scaled(&self, c: &ExactScalar) -> Self {
        self.with_terms(self.terms.scaled(c))
    }

    pub fn add_scaled(&mut self, other: &Self, c: &ExactScalar) {
        self.terms.add_scaled(&other.terms, c);
    }

    pub fn add(&mut self, other: &Self) {
        self.terms.add_assign(&other.terms);
    }

    pub fn sub(&mut self, other: &Self) {
        self.terms.sub_assign(&other.terms);
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub(other);
        out
    }

    /// The common degree `2k + |L|` of all terms; `None` for the zero vector.
    pub fn degree(&self) -> Result<Option<u32>, VermaError> {
        let mut degrees = self.terms.keys().map(|k| k.degree());
        let Some(first) = degrees.next() else { return Ok(None) };
        if degrees.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(VermaError::Inhomogeneous)
        }
    }

    /// The `F`-component `v_{L,k}` multiplying `Θ^k η_L`.
    pub fn component(&self, theta: u32, mono: IndexSeq) -> WeightVector {
        let coeffs = self
            .terms
            .iter()
            .filter(|(k, _)| k.theta == theta && k.mono == mono)
            .map(|(k, c)| (k.w, c.clone()))
            .collect();
        WeightVector { weight: (*self.weight).clone(), coeffs }
    }

    /// The distinct `(k, L)` slots carrying a nonzero component.
    pub fn slots(&self) -> Vec<(u32, IndexSeq)> {
        let mut v: Vec<(u32, IndexSeq)> = self.terms.keys().map(|k| (k.theta, k.mono)).collect();
        v.dedup();
        v
    }

    pub fn max_theta(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.theta).max()
    }

    /// Rescale so that the first nonzero coefficient (in key order) is 1.
    pub fn normalized(&self) -> Self {
        match self.terms.leading() {
            None => self.clone(),
            Some((_, c)) => self.scaled(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Equality up to a nonzero overall scalar.
    pub fn proportional_to(&self, other: &Self) -> bool {
        !self.is_zero() && !other.is_zero() && self.normalized() == other.normalized()
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c})·{k}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(serde::Serialize)]
struct TermRecord<'a> {
    theta: u32,
    mono: String,
    w: MonoKey,
    coeff: &'a ExactScalar,
}

impl serde::Serialize for VermaVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<TermRecord<'_>> = self
            .terms
            .iter()
            .map(|(k, c)| TermRecord { theta: k.theta, mono: k.mono.to_string(), w: k.w, coeff: c })
            .collect();
        let mut st = serializer.serialize_struct("VermaVector", 2)?;
        st.serialize_field("weight", &*self.weight)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Generators of `U(𝔤_<0)` acting by left multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UGen {
    Eta(u8),
    Theta,
}

/// Left multiplication by `η_i` or `Θ`, reduced to the normal basis.
pub fn umult(g: UGen, v: &VermaVector) -> VermaVector {
    let terms = v.terms.map_keys_signed(|k| umult_key(g, *k));
    v.with_terms(terms)
}

fn umult_key(g: UGen, k: VermaKey) -> Option<(VermaKey, i64)> {
    match g {
        UGen::Theta => Some((VermaKey::new(k.theta + 1, k.mono, k.w), 1)),
        UGen::Eta(i) => {
            let single = IndexSeq::single(i);
            if k.mono.contains(i) {
                // η_i η_L = (-1)^{#l<i} η_i η_i η_{L∖i} = (-1)^{#l<i} Θ η_{L∖i}.
                let sign = if k.mono.count_below(i) % 2 == 0 { 1 } else { -1 };
                Some((VermaKey::new(k.theta + 1, k.mono.without(i), k.w), sign))
            } else {
                let p = product(single, k.mono);
                Some((VermaKey::new(k.theta, p.seq, k.w), p.sign as i64))
            }
        }
    }
}

/// Left multiplication by an element of `𝔤_<0 = ⟨ξ_∅, ξ_1, …, ξ_4⟩`, with `ξ_∅ = -2Θ`.
pub fn umult_element(x: &SuperElement, v: &VermaVector) -> Result<VermaVector, VermaError> {
    let mut out = v.zero_like();
    if !x.central.is_zero() {
        return Err(VermaError::NotNegative(x.to_string()));
    }
    for (b, c) in x.terms.iter() {
        let image = match (b.tpow, b.mono.len()) {
            (0, 0) => umult(UGen::Theta, v).scaled(&ExactScalar::from_int(-2)),
            (0, 1) => umult(UGen::Eta(b.mono.indices().next().expect("one index")), v),
            _ => return Err(VermaError::NotNegative(b.to_string())),
        };
        out.add_scaled(&image, c);
    }
    Ok(out)
}

/// Left multiplication by `η_{i_1} η_{i_2} ⋯ η_{i_r}`.
pub fn umult_word(word: &[u8], v: &VermaVector) -> VermaVector {
    word.iter().rev().fold(v.clone(), |acc, &i| umult(UGen::Eta(i), &acc))
}

/// The Hodge-dual transform `T(Θ^k η_L ⊗ w) = Θ^k η̄_L ⊗ w`.
pub fn transform_t(v: &VermaVector) -> VermaVector {
    v.with_terms(v.terms.map_keys_signed(|k| {
        let h = hodge(k.mono);
        Some((VermaKey::new(k.theta, h.seq, k.w), h.sign as i64))
    }))
}

/// The inverse of [`transform_t`].
pub fn transform_t_inv(v: &VermaVector) -> VermaVector {
    v.with_terms(v.terms.map_keys_signed(|k| {
        let h = hodge_inv(k.mono);
        Some((VermaKey::new(k.theta, h.seq, k.w), h.sign as i64))
    }))
}

/// A polynomial in λ with Verma-vector coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaValue {
    pub weight: HighestWeight,
    pub coeffs: BTreeMap<u32, VermaVector>,
}

impl LambdaValue {
    pub fn zero(weight: &HighestWeight) -> Self {
        Self { weight: weight.clone(), coeffs: BTreeMap::new() }
    }

    pub fn coeff(&self, j: u32) -> VermaVector {
        self.coeffs.get(&j).cloned().unwrap_or_else(|| VermaVector::zero(&self.weight))
    }

    /// Highest nonzero λ-power.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.iter().filter(|(_, v)| !v.is_zero()).map(|(&j, _)| j).next_back()
    }

    /// The action of `t^j ξ_I`, i.e. `j!` times the `λ^j` coefficient.
    pub fn t_power(&self, j: u32) -> VermaVector {
        self.coeff(j).scaled(&ExactScalar::from_int(factorial(j)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(VermaVector::is_zero)
    }

    /// Apply a linear map to every coefficient.
    pub fn map(&self, f: impl Fn(&VermaVector) -> VermaVector) -> Self {
        Self {
            weight: self.weight.clone(),
            coeffs: self.coeffs.iter().map(|(&j, v)| (j, f(v))).filter(|(_, v)| !v.is_zero()).collect(),
        }
    }
}
