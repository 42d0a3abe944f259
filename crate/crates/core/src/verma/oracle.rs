//! The `𝔤`-action on `Ind(F)` by recursive commutation through the PBW normal form.
//!
//! Shares nothing with the closed-form λ-action beyond the bracket of `𝔤` and the action of
//! `𝔤_0` on `F`, so agreement of the two is a real check on both.

use std::collections::HashMap;

use super::{umult, UGen, VermaKey, VermaVector};
use crate::annihilation::{bracket, SuperBasis, SuperElement};
use crate::exact::ExactScalar;
use crate::linear::Combination;
use crate::weight_modules::{act_g0, HighestWeight, WeightVector};

/// Memoised recursive action for one highest weight.
pub struct Oracle {
    template: VermaVector,
    cache: HashMap<(SuperBasis, VermaKey), Combination<VermaKey>>,
}

impl Oracle {
    pub fn new(weight: &HighestWeight) -> Self {
        Self { template: VermaVector::zero(weight), cache: HashMap::new() }
    }

    fn weight(&self) -> &HighestWeight {
        self.template.weight()
    }

    pub fn act(&mut self, a: &SuperElement, v: &VermaVector) -> VermaVector {
        let mut out = Combination::new();
        for (key, c) in v.terms.iter() {
            out.add_scaled(&self.act_element(a, *key), c);
        }
        v.with_terms(out)
    }

    fn act_element(&mut self, a: &SuperElement, key: VermaKey) -> Combination<VermaKey> {
        let mut out = Combination::new();
        for (b, c) in a.terms.iter() {
            let image = self.act_basis(*b, key);
            out.add_scaled(&image, c);
        }
        if !a.central.is_zero() {
            out.add_term(key, &a.central * &self.weight().mu_c);
        }
        out
    }

    fn left_mult(&self, g: UGen, terms: Combination<VermaKey>) -> Combination<VermaKey> {
        umult(g, &self.template.with_terms(terms)).terms
    }

    pub fn act_basis(&mut self, x: SuperBasis, key: VermaKey) -> Combination<VermaKey> {
        if let Some(hit) = self.cache.get(&(x, key)) {
            return hit.clone();
        }
        let single = Combination::single(key, ExactScalar::one());
        let result = if x.degree() < 0 {
            match x.mono.indices().next() {
                None => self.left_mult(UGen::Theta, single).scaled(&ExactScalar::from_int(-2)),
                Some(i) => self.left_mult(UGen::Eta(i), single),
            }
        } else if key.theta > 0 {
            // x Θ r = [x, Θ] r + Θ x r.
            let rest = VermaKey::new(key.theta - 1, key.mono, key.w);
            let commutator = bracket(&SuperElement::from_basis(x), &SuperElement::theta());
            let mut out = self.act_element(&commutator, rest);
            let moved = self.act_basis(x, rest);
            out.add_assign(&self.left_mult(UGen::Theta, moved));
            out
        } else if let Some(first) = key.mono.indices().next() {
            // x η_l r = [x, ξ_l] r + (-1)^{p(x)} η_l x r.
            let rest = VermaKey::new(0, key.mono.without(first), key.w);
            let xi_l = SuperElement::basis(0, crate::grassmann::IndexSeq::single(first));
            let commutator = bracket(&SuperElement::from_basis(x), &xi_l);
            let mut out = self.act_element(&commutator, rest);
            let moved = self.act_basis(x, rest);
            let moved = self.left_mult(UGen::Eta(first), moved);
            if x.is_odd() {
                out.sub_assign(&moved);
            } else {
                out.add_assign(&moved);
            }
            out
        } else if x.degree() == 0 {
            let w =
                WeightVector { weight: self.weight().clone(), coeffs: Combination::single(key.w, ExactScalar::one()) };
            let image = act_g0(&SuperElement::from_basis(x), &w).expect("degree-zero basis element lies in 𝔤_0");
            image.coeffs.iter().map(|(k, c)| (VermaKey::new(0, key.mono, *k), c.clone())).collect()
        } else {
            Combination::new()
        };
        self.cache.insert((x, key), result.clone());
        result
    }
}

/// The action of `a ∈ 𝔤` on `v` by recursive commutation.
pub fn act_oracle(a: &SuperElement, v: &VermaVector) -> VermaVector {
    Oracle::new(v.weight()).act(a, v)
}
