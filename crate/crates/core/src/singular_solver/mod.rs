//! Linear systems for highest weight singular vectors, the explicit singular vectors of
//! degrees 1–3, and classification sweeps over weights.
//!
//! A vector `m` is a highest weight singular vector iff `e_1 m = e_2 m = 0` and
//! `t^j ξ_I . m = 0` for every basis element of positive degree. The unknowns are the
//! `F`-coefficients of `m` on a set of `Θ^k η_L` slots; each condition contributes one row per
//! output basis vector.

mod classify;
mod theorems;

use std::collections::BTreeMap;

use serde::Serialize;

pub use classify::{
    classify, expected_labels, is_listed, listed_weights, off_list_weights, solve_report, theta_degree_bound_check,
    ClassifyOptions, SingularReport, ThetaBoundReport,
};
pub use theorems::{build_theorem_vector, theorem_instances, theorem_weight, TheoremLabel, WLetter, ALL_LABELS};

use crate::annihilation::{SuperBasis, SuperElement};
use crate::exact::{EchelonBasis, ExactMatrix, ExactScalar, SparseRow};
use crate::grassmann::IndexSeq;
use crate::verma::{act, dual_lambda_action, lambda_action, transform_t, VermaError, VermaKey, VermaVector};
use crate::weight_modules::{e1, e2, HighestWeight, WeightError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("family {label} is not defined at (m, n) = ({m}, {n})")]
    OutOfRange { label: String, m: u32, n: u32 },
    #[error("unknown theorem label {0:?}")]
    UnknownLabel(String),
}

/// Which form of the action assembles the rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AssemblyPath {
    /// Conditions on `m` through the closed-form λ-action.
    Primal,
    /// Conditions on `T(m)` through the Hodge-conjugated λ-action.
    Dual,
}

/// Which annihilation conditions are imposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConditionSet {
    /// `e_1`, `e_2` and every basis element of positive degree.
    Full,
    /// `e_1`, `e_2`, `t(ξ_1 + iξ_2)` and `(ξ_1 + iξ_2)ξ_3ξ_4` only.
    Generators,
}

/// Unknown coefficients of a candidate vector: one column per `(slot, F-monomial)`.
#[derive(Clone, Debug)]
pub struct CandidateSpace {
    pub weight: HighestWeight,
    pub slots: Vec<(u32, IndexSeq)>,
    pub columns: Vec<VermaKey>,
}

impl CandidateSpace {
    /// All `Θ^k η_L` with `2k + |L| = degree`.
    pub fn new(weight: &HighestWeight, degree: u32) -> Result<Self, SolverError> {
        if degree == 0 {
            return Err(SolverError::ZeroDegree);
        }
        let slots = (0..=degree / 2)
            .flat_map(|k| IndexSeq::all().filter(move |l| 2 * k + l.len() as u32 == degree).map(move |l| (k, l)))
            .collect();
        Ok(Self::with_slots(weight, slots))
    }

    /// Every slot with `Θ`-power at most `max_theta`, except the degree-0 slot `1 ⊗ F`.
    pub fn theta_ansatz(weight: &HighestWeight, max_theta: u32) -> Self {
        let slots = (0..=max_theta)
            .flat_map(|k| IndexSeq::all().map(move |l| (k, l)))
            .filter(|&(k, l)| k > 0 || !l.is_empty())
            .collect();
        Self::with_slots(weight, slots)
    }

    pub fn with_slots(weight: &HighestWeight, slots: Vec<(u32, IndexSeq)>) -> Self {
        let columns =
            slots.iter().flat_map(|&(k, l)| weight.monomials().map(move |w| VermaKey::new(k, l, w))).collect();
        Self { weight: weight.clone(), slots, columns }
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn vector_from(&self, coeffs: &[ExactScalar]) -> VermaVector {
        let terms = self.columns.iter().zip(coeffs).map(|(k, c)| (*k, c.clone())).collect();
        VermaVector::zero(&self.weight).with_terms(terms)
    }
}

/// Row label: which condition, and which output basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Condition {
    E1,
    E2,
    Positive(SuperBasis),
    Shortcut(u8),
}

/// `t(ξ_1 + iξ_2)` and `(ξ_1 + iξ_2)ξ_3ξ_4`.
pub fn g1_lowest_vectors() -> [SuperElement; 2] {
    let i = ExactScalar::i();
    let mut tx = SuperElement::basis(1, IndexSeq::single(1));
    tx.add_scaled(&SuperElement::basis(1, IndexSeq::single(2)), &i);
    let mut cubic = SuperElement::xi(&[1, 3, 4]);
    cubic.add_scaled(&SuperElement::xi(&[2, 3, 4]), &i);
    [tx, cubic]
}

/// Image of one candidate column under every condition, keyed by `(condition, output key)`.
fn column_images(
    key: VermaKey,
    space: &CandidateSpace,
    path: AssemblyPath,
    conditions: ConditionSet,
) -> Vec<((Condition, VermaKey), ExactScalar)> {
    let base = VermaVector::basis(&space.weight, key);
    let input = match path {
        AssemblyPath::Primal => base.clone(),
        AssemblyPath::Dual => transform_t(&base),
    };
    let degree = key.degree() as i32;
    let mut out = Vec::new();
    let mut emit = |cond: Condition, v: VermaVector| {
        out.extend(v.terms.into_iter().map(|(k, c)| ((cond, k), c)));
    };
    let apply = |a: &SuperElement| match path {
        AssemblyPath::Primal => act(a, &input),
        AssemblyPath::Dual => dual_act(a, &input),
    };
    emit(Condition::E1, apply(&e1()));
    emit(Condition::E2, apply(&e2()));
    match conditions {
        ConditionSet::Full => {
            for mono in IndexSeq::all() {
                let value = match path {
                    AssemblyPath::Primal => lambda_action(mono, &input),
                    AssemblyPath::Dual => dual_lambda_action(mono, &input),
                };
                for &j in value.coeffs.keys() {
                    let b = SuperBasis::new(j, mono);
                    if b.degree() > 0 && b.degree() <= degree {
                        emit(Condition::Positive(b), value.t_power(j));
                    }
                }
            }
        }
        ConditionSet::Generators => {
            for (n, g) in g1_lowest_vectors().iter().enumerate() {
                emit(Condition::Shortcut(n as u8), apply(g));
            }
        }
    }
    out
}

/// `T ∘ a ∘ T^{-1}` on `u`, via the Hodge-conjugated λ-action.
pub fn dual_act(a: &SuperElement, u: &VermaVector) -> VermaVector {
    let mut out = VermaVector::zero(u.weight());
    let mut by_mono = BTreeMap::new();
    for (b, c) in a.terms.iter() {
        let value = by_mono.entry(b.mono).or_insert_with(|| dual_lambda_action(b.mono, u));
        out.add_scaled(&value.t_power(b.tpow), c);
    }
    if !a.central.is_zero() {
        out.add_scaled(u, &(&a.central * &u.weight().mu_c));
    }
    out
}

fn condition_rows(space: &CandidateSpace, path: AssemblyPath, conditions: ConditionSet) -> Vec<SparseRow> {
    use rayon::prelude::*;
    let images: Vec<_> = space.columns.par_iter().map(|&k| column_images(k, space, path, conditions)).collect();
    let mut rows: BTreeMap<(Condition, VermaKey), SparseRow> = BTreeMap::new();
    for (col, entries) in images.into_iter().enumerate() {
        for (label, c) in entries {
            rows.entry(label).or_default().insert(col, c);
        }
    }
    rows.into_values().collect()
}

/// The full condition matrix: rows are scalar conditions, columns are the candidate unknowns.
pub fn assemble_system(space: &CandidateSpace, path: AssemblyPath, conditions: ConditionSet) -> ExactMatrix {
    let mut m = ExactMatrix::with_cols(space.dim());
    for row in condition_rows(space, path, conditions) {
        m.push_row(row).expect("row indices lie within the candidate columns");
    }
    m
}

/// Kernel basis of the condition matrix, as candidate vectors in `Ind(F)`.
pub fn solve_space(space: &CandidateSpace, path: AssemblyPath, conditions: ConditionSet) -> Vec<VermaVector> {
    let mut echelon = EchelonBasis::new(space.dim());
    for row in condition_rows(space, path, conditions) {
        echelon.insert(row);
        if echelon.is_full() {
            return Vec::new();
        }
    }
    echelon.kernel().iter().map(|v| space.vector_from(v)).collect()
}

/// Kernel basis of highest weight singular vectors of the given degree.
pub fn solve(weight: &HighestWeight, degree: u32, path: AssemblyPath) -> Result<Vec<VermaVector>, SolverError> {
    Ok(solve_space(&CandidateSpace::new(weight, degree)?, path, ConditionSet::Full))
}

/// Per-condition outcome of [`verify_vector`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub s0: bool,
    pub s1: bool,
    pub s2: bool,
    pub s3: bool,
    pub shortcut: bool,
}

impl Verification {
    pub fn full(&self) -> bool {
        self.s0 && self.s1 && self.s2 && self.s3
    }

    /// Both routes agree and accept.
    pub fn is_singular(&self) -> bool {
        self.full() && self.shortcut
    }

    pub fn routes_agree(&self) -> bool {
        self.full() == self.shortcut
    }
}

/// Check the conditions on a homogeneous vector, by the full sweep and by the generator shortcut.
pub fn verify_vector(v: &VermaVector) -> Result<Verification, SolverError> {
    v.degree()?;
    let s0 = act(&e1(), v).is_zero() && act(&e2(), v).is_zero();
    let (mut s1, mut s2, mut s3) = (true, true, true);
    for mono in IndexSeq::all() {
        let value = lambda_action(mono, v);
        for (&j, coeff) in &value.coeffs {
            if coeff.is_zero() {
                continue;
            }
            match j {
                0 if mono.len() >= 3 => s3 = false,
                1 if !mono.is_empty() => s2 = false,
                j if j >= 2 => s1 = false,
                _ => {}
            }
        }
    }
    let shortcut = s0 && g1_lowest_vectors().iter().all(|g| act(g, v).is_zero());
    Ok(Verification { s0, s1, s2, s3, shortcut })
}

/// Whether two lists of vectors span the same subspace.
pub fn same_span(a: &[VermaVector], b: &[VermaVector]) -> bool {
    let mut keys: Vec<VermaKey> = a.iter().chain(b).flat_map(|v| v.terms.keys().copied()).collect();
    keys.sort();
    keys.dedup();
    let index: BTreeMap<VermaKey, usize> = keys.iter().enumerate().map(|(n, k)| (*k, n)).collect();
    let row = |v: &VermaVector| -> SparseRow { v.terms.iter().map(|(k, c)| (index[k], c.clone())).collect() };
    let rank_of = |vs: &[&VermaVector]| {
        let mut e = EchelonBasis::new(keys.len());
        for v in vs {
            e.insert(row(v));
        }
        e.rank()
    };
    let ra = rank_of(&a.iter().collect::<Vec<_>>());
    let rb = rank_of(&b.iter().collect::<Vec<_>>());
    let both = rank_of(&a.iter().chain(b).collect::<Vec<_>>());
    ra == rb && rb == both
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weight(s: &str) -> HighestWeight {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_weight_has_degree_one_vector() {
        let w = weight("0 0 0 0");
        let kernel = solve(&w, 1, AssemblyPath::Primal).unwrap();
        assert_eq!(kernel.len(), 1);
        assert!(kernel[0].proportional_to(&build_theorem_vector(TheoremLabel::D1a, 0, 0).unwrap()));
    }

    #[test]
    fn irreducible_weight_has_none() {
        let w = weight("0 0 2 0");
        for d in 1..=3 {
            assert!(solve(&w, d, AssemblyPath::Primal).unwrap().is_empty(), "degree {d}");
        }
    }

    #[test]
    fn degree_three_instance() {
        let w = weight("1 0 5/2 -1/2");
        let kernel = solve(&w, 3, AssemblyPath::Primal).unwrap();
        assert_eq!(kernel.len(), 1);
        assert!(kernel[0].proportional_to(&build_theorem_vector(TheoremLabel::D3a, 1, 0).unwrap()));
        let dual = solve(&w, 3, AssemblyPath::Dual).unwrap();
        assert!(same_span(&kernel, &dual));
    }

    #[test]
    fn verification_examples() {
        let v = build_theorem_vector(TheoremLabel::D1a, 2, 1).unwrap();
        assert!(verify_vector(&v).unwrap().is_singular());
        let v = build_theorem_vector(TheoremLabel::D2c, 2, 0).unwrap();
        assert!(verify_vector(&v).unwrap().is_singular());
        let mut shifted = theorem_weight(TheoremLabel::D1a, 2, 1).unwrap();
        shifted.mu_t = &shifted.mu_t + &ExactScalar::one();
        let moved =
            VermaVector::zero(&shifted).with_terms(build_theorem_vector(TheoremLabel::D1a, 2, 1).unwrap().terms);
        let r = verify_vector(&moved).unwrap();
        assert!(!r.is_singular() && r.routes_agree());
    }

    #[test]
    fn verification_is_scale_invariant() {
        let v = build_theorem_vector(TheoremLabel::D1c, 1, 1).unwrap();
        let c = ExactScalar::gaussian(3, -2);
        assert_eq!(verify_vector(&v).unwrap(), verify_vector(&v.scaled(&c)).unwrap());
    }

    #[test]
    fn inhomogeneous_input_is_rejected() {
        let w = weight("0 0 0 0");
        let mut v = VermaVector::basis(&w, VermaKey::new(0, IndexSeq::single(1), (0, 0)));
        v.add(&VermaVector::basis(&w, VermaKey::new(1, IndexSeq::EMPTY, (0, 0))).scaled(&ExactScalar::one()));
        v.add(&VermaVector::basis(&w, VermaKey::new(0, IndexSeq::EMPTY, (0, 0))));
        assert!(verify_vector(&v).is_err());
    }

    #[test]
    fn candidate_space_slots() {
        let w = weight("1 0 0 0");
        let s = CandidateSpace::new(&w, 3).unwrap();
        assert_eq!(s.slots.len(), 8);
        assert_eq!(s.dim(), 16);
        assert!(CandidateSpace::new(&w, 0).is_err());
    }
}
