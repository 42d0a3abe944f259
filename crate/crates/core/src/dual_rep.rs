//! The restricted dual `K(1,4)_+^* = ⊕_j (K(1,4)_+)_j^*` with the coadjoint action, and the
//! isomorphism `M(0,0,2,0) → K(1,4)_+^*` determined by `v ↦ Θ^*`.

use serde::Serialize;

use crate::annihilation::{bracket, SuperBasis, SuperElement};
use crate::exact::{EchelonBasis, ExactScalar, SparseRow};
use crate::grassmann::IndexSeq;
use crate::linear::Combination;
use crate::report::CheckReport;
use crate::verma::{act, VermaKey, VermaVector};
use crate::weight_modules::HighestWeight;

/// `Σ c_b (t^m ξ_I)^*`, finitely supported.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualElement {
    pub terms: Combination<SuperBasis>,
}

impl DualElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The functional `(t^m ξ_I)^*`.
    pub fn dual_basis(b: SuperBasis) -> Self {
        Self { terms: Combination::single(b, ExactScalar::one()) }
    }

    /// `Θ^* = -2 ξ_∅^*`, so that `Θ^*(Θ) = 1`.
    pub fn theta_star() -> Self {
        Self::dual_basis(SuperBasis::new(0, IndexSeq::EMPTY)).scaled(&ExactScalar::from_int(-2))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scaled(&self, c: &ExactScalar) -> Self {
        Self { terms: self.terms.scaled(c) }
    }

    /// `f(y)` for `y` without central part.
    pub fn pair(&self, y: &SuperElement) -> ExactScalar {
        self.terms.iter().map(|(b, c)| c * &y.terms.coeff(b)).sum()
    }

    /// If `self = γ · b^*` for a single basis element, return `(b, γ)`.
    pub fn as_single(&self) -> Option<(SuperBasis, ExactScalar)> {
        let mut it = self.terms.iter();
        let (b, c) = it.next()?;
        it.next().is_none().then(|| (*b, c.clone()))
    }
}

/// `(x.f)(y) = -(-1)^{p(x)p(f)} f([x, y])`; the central part of `[x, y]` pairs to zero.
pub fn coadjoint_act(x: &SuperElement, f: &DualElement) -> DualElement {
    let mut out = Combination::new();
    for (xb, xc) in x.terms.iter() {
        for (fb, fc) in f.terms.iter() {
            let sign = if xb.is_odd() && fb.is_odd() { 1 } else { -1 };
            let coeff = (xc * fc).scale(sign);
            for y in SuperBasis::of_degree(fb.degree() - xb.degree()) {
                let value = basis_bracket_coeff(*xb, y, *fb);
                if !value.is_zero() {
                    out.add_term(y, &coeff * &value);
                }
            }
        }
    }
    DualElement { terms: out }
}

fn basis_bracket_coeff(x: SuperBasis, y: SuperBasis, target: SuperBasis) -> ExactScalar {
    bracket(&SuperElement::from_basis(x), &SuperElement::from_basis(y)).terms.coeff(&target)
}

fn theta_element() -> SuperElement {
    SuperElement::theta()
}

/// `φ(Θ^k η_L ⊗ v) = Θ^k η_L . Θ^*`.
pub fn phi_key(key: VermaKey) -> DualElement {
    let mut f = DualElement::theta_star();
    for l in key.mono.to_vec().into_iter().rev() {
        f = coadjoint_act(&SuperElement::basis(0, IndexSeq::single(l)), &f);
    }
    for _ in 0..key.theta {
        f = coadjoint_act(&theta_element(), &f);
    }
    f
}

pub fn phi(v: &VermaVector) -> DualElement {
    let mut out = Combination::new();
    for (k, c) in v.terms.iter() {
        out.add_scaled(&phi_key(*k).terms, c);
    }
    DualElement { terms: out }
}

/// The highest weight `(0, 0, 2, 0)`.
pub fn coadjoint_weight() -> HighestWeight {
    HighestWeight::new(0, 0, ExactScalar::from_int(2), ExactScalar::zero())
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeComparison {
    pub degree: u32,
    pub verma_dim: usize,
    pub dual_dim: usize,
    pub rank: usize,
}

impl DegreeComparison {
    pub fn bijective(&self) -> bool {
        self.verma_dim == self.dual_dim && self.rank == self.verma_dim
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiIsoReport {
    pub per_degree: Vec<DegreeComparison>,
    pub equivariance: CheckReport,
    pub degree_preserving: CheckReport,
}

impl PhiIsoReport {
    pub fn passed(&self) -> bool {
        self.per_degree.iter().all(DegreeComparison::bijective)
            && self.equivariance.passed()
            && self.degree_preserving.passed()
    }
}

fn verma_keys_of_degree(d: u32) -> Vec<VermaKey> {
    (0..=d / 2)
        .flat_map(|k| {
            IndexSeq::all().filter(move |l| 2 * k + l.len() as u32 == d).map(move |l| VermaKey::new(k, l, (0, 0)))
        })
        .collect()
}

/// Degreewise bijectivity of `φ`, plus `𝔤`-equivariance on basis elements with `t`-power ≤ 2
/// acting on basis vectors of degree ≤ 4.
pub fn check_phi_iso(max_degree: u32) -> PhiIsoReport {
    use rayon::prelude::*;
    let weight = coadjoint_weight();
    let mut degree_preserving = CheckReport::new("φ maps degree d into functionals on degree d-2");
    let per_degree: Vec<DegreeComparison> = (0..=max_degree)
        .map(|d| {
            let keys = verma_keys_of_degree(d);
            let targets = SuperBasis::of_degree(d as i32 - 2);
            let mut echelon = EchelonBasis::new(targets.len());
            for key in &keys {
                let image = phi_key(*key);
                degree_preserving
                    .record(image.terms.keys().all(|b| b.degree() == d as i32 - 2), || format!("φ({key})"));
                let row: SparseRow = image
                    .terms
                    .iter()
                    .filter_map(|(b, c)| targets.binary_search(b).ok().map(|i| (i, c.clone())))
                    .collect();
                echelon.insert(row);
            }
            DegreeComparison { degree: d, verma_dim: keys.len(), dual_dim: targets.len(), rank: echelon.rank() }
        })
        .collect();

    let elements = SuperBasis::up_to(2);
    let vectors: Vec<VermaKey> = (0..=4.min(max_degree)).flat_map(verma_keys_of_degree).collect();
    let equivariance = vectors
        .par_iter()
        .map(|key| {
            let mut report = CheckReport::new("φ(x.v) = x.φ(v)");
            let v = VermaVector::basis(&weight, *key);
            let image = phi_key(*key);
            for b in &elements {
                let x = SuperElement::from_basis(*b);
                let lhs = phi(&act(&x, &v));
                let rhs = coadjoint_act(&x, &image);
                report.record(lhs == rhs, || format!("x = {b}, v = {key}"));
            }
            report
        })
        .reduce(
            || CheckReport::new("φ(x.v) = x.φ(v)"),
            |mut a, b| {
                a.merge(b);
                a
            },
        );
    PhiIsoReport { per_degree, equivariance, degree_preserving }
}

/// `Θ^s . ξ_{i_1} . ⋯ . ξ_{i_p} . Θ^*` is a nonzero multiple of `(t^s ξ_{i_1⋯i_p})^*`.
pub fn check_iterated_theta(max_s: u32) -> CheckReport {
    let mut report = CheckReport::new("Θ^s ξ_I . Θ^* = γ (t^s ξ_I)^*, γ ≠ 0");
    for s in 0..=max_s {
        for mono in IndexSeq::all() {
            let f = phi_key(VermaKey::new(s, mono, (0, 0)));
            let ok = matches!(f.as_single(), Some((b, c)) if b == SuperBasis::new(s, mono) && !c.is_zero());
            report.record(ok, || format!("s = {s}, I = {mono}: {:?}", f.terms));
        }
    }
    report
}

/// For `deg(t^m ξ_I) ≥ deg(t^s ξ_K)`: `t^{m+1} ξ_I . (t^s ξ_K)^*` is a nonzero multiple of `Θ^*`
/// when `(s, K) = (m, I)` and zero otherwise.
pub fn check_raising_to_theta(max_t: u32) -> CheckReport {
    let mut report = CheckReport::new("t^{m+1}ξ_I . (t^s ξ_K)^* = δ β Θ^*, β ≠ 0");
    let basis = SuperBasis::up_to(max_t);
    let theta_dual = SuperBasis::new(0, IndexSeq::EMPTY);
    for &a in &basis {
        let x = SuperElement::basis(a.tpow + 1, a.mono);
        for &b in basis.iter().filter(|b| a.degree() >= b.degree()) {
            let f = coadjoint_act(&x, &DualElement::dual_basis(b));
            let ok = if a == b {
                matches!(f.as_single(), Some((t, c)) if t == theta_dual && !c.is_zero())
            } else {
                f.is_zero()
            };
            report.record(ok, || format!("m,I = {a}; s,K = {b}: {:?}", f.terms));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_star_pairs_to_one() {
        assert!(DualElement::theta_star().pair(&SuperElement::theta()).is_one());
    }

    #[test]
    fn theta_star_is_a_weight_vector() {
        let f = DualElement::theta_star();
        assert_eq!(coadjoint_act(&SuperElement::t(), &f), f.scaled(&ExactScalar::from_int(2)));
        for b in SuperBasis::up_to(3).into_iter().filter(|b| b.degree() > 0) {
            assert!(coadjoint_act(&SuperElement::from_basis(b), &f).is_zero(), "{b}");
        }
    }

    #[test]
    fn grading_of_the_action() {
        let x = SuperElement::basis(1, IndexSeq::single(3));
        let f = DualElement::dual_basis(SuperBasis::new(2, IndexSeq::from_indices(&[1, 2]).unwrap()));
        let g = coadjoint_act(&x, &f);
        assert!(!g.is_zero());
        assert!(g.terms.keys().all(|b| b.degree() == 4 - 1));
    }

    #[test]
    fn module_axiom_on_samples() {
        let xs: Vec<SuperElement> = SuperBasis::up_to(1).into_iter().map(SuperElement::from_basis).collect();
        let f = DualElement::dual_basis(SuperBasis::new(1, IndexSeq::from_indices(&[2, 4]).unwrap()));
        for a in &xs {
            for b in &xs {
                let pa = a.terms.keys().next().unwrap().is_odd();
                let pb = b.terms.keys().next().unwrap().is_odd();
                let lhs = coadjoint_act(&bracket(a, b).without_central(), &f);
                let mut rhs = coadjoint_act(a, &coadjoint_act(b, &f)).terms;
                let sign = if pa && pb { ExactScalar::one() } else { -ExactScalar::one() };
                rhs.add_scaled(&coadjoint_act(b, &coadjoint_act(a, &f)).terms, &sign);
                assert_eq!(lhs.terms, rhs, "[{a}, {b}]");
            }
        }
    }

    #[test]
    fn small_degrees_bijective() {
        let r = check_phi_iso(3);
        assert!(r.passed(), "{r:?}");
    }
}
