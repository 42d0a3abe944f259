//! Classification sweeps: solve at every tabulated weight and at sampled off-list weights,
//! and compare each kernel with the explicit vectors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::theorems::{build_theorem_vector, theorem_instances, theorem_weight, TheoremLabel, ALL_LABELS};
use super::{same_span, solve_space, verify_vector, AssemblyPath, CandidateSpace, ConditionSet};
use crate::exact::ExactScalar;
use crate::grassmann::IndexSeq;
use crate::verma::{transform_t, VermaVector};
use crate::weight_modules::HighestWeight;

/// Outcome of one `(weight, degree)` solve.
#[derive(Clone, Debug, Serialize)]
pub struct SingularReport {
    pub weight: HighestWeight,
    pub degree: u32,
    pub kernel_dim: usize,
    pub basis_vectors: Vec<VermaVector>,
    pub matched_theorem_label: Option<TheoremLabel>,
    /// Families whose tabulated weight and degree coincide with this solve.
    pub expected_labels: Vec<TheoremLabel>,
    /// The kernel differs from the span of the expected explicit vectors.
    pub unexpected: bool,
    /// Every basis vector passes both verification routes.
    pub verified: bool,
    /// Kernel from the Hodge-conjugated assembly, compared after applying `T`.
    pub dual_agrees: Option<bool>,
    /// Kernel from the four-generator conditions.
    pub shortcut_agrees: Option<bool>,
}

impl SingularReport {
    pub fn passed(&self) -> bool {
        !self.unexpected && self.verified && self.dual_agrees != Some(false) && self.shortcut_agrees != Some(false)
    }
}

/// Families with an instance at exactly this weight and degree.
pub fn expected_labels(weight: &HighestWeight, degree: u32) -> Vec<TheoremLabel> {
    ALL_LABELS
        .into_iter()
        .filter(|l| l.degree() == degree)
        .filter(|l| theorem_weight(*l, weight.m, weight.n).is_ok_and(|w| &w == weight))
        .collect()
}

/// Whether the weight appears in any family, at any degree.
pub fn is_listed(weight: &HighestWeight) -> bool {
    (1..=3).any(|d| !expected_labels(weight, d).is_empty())
}

/// Solve at one weight and degree and compare against the explicit vectors.
pub fn solve_report(weight: &HighestWeight, degree: u32, cross_check: bool) -> SingularReport {
    let space = CandidateSpace::new(weight, degree).expect("degree ≥ 1");
    let kernel = solve_space(&space, AssemblyPath::Primal, ConditionSet::Full);
    let labels = expected_labels(weight, degree);
    let expected: Vec<VermaVector> = labels
        .iter()
        .map(|l| build_theorem_vector(*l, weight.m, weight.n).expect("label in range at its own weight"))
        .collect();
    let matches = match (kernel.as_slice(), expected.as_slice()) {
        ([], []) => true,
        ([k], [e]) => k.proportional_to(e),
        _ => same_span(&kernel, &expected),
    };
    let verified = kernel.iter().all(|v| verify_vector(v).is_ok_and(|r| r.is_singular()));
    let (dual_agrees, shortcut_agrees) = if cross_check {
        let dual = solve_space(&space, AssemblyPath::Dual, ConditionSet::Full);
        let shortcut = solve_space(&space, AssemblyPath::Primal, ConditionSet::Generators);
        (Some(same_span(&dual, &kernel)), Some(same_span(&shortcut, &kernel)))
    } else {
        (None, None)
    };
    SingularReport {
        weight: weight.clone(),
        degree,
        kernel_dim: kernel.len(),
        matched_theorem_label: if matches && labels.len() == 1 { Some(labels[0]) } else { None },
        basis_vectors: kernel.iter().map(VermaVector::normalized).collect(),
        expected_labels: labels,
        unexpected: !matches,
        verified,
        dual_agrees,
        shortcut_agrees,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyOptions {
    pub max_mn: u32,
    pub degrees: Vec<u32>,
    /// Number of sampled weights that appear in no family.
    pub off_list: usize,
    pub seed: u64,
    /// Also solve through the dual assembly and the four-generator conditions.
    pub cross_check: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { max_mn: 3, degrees: vec![1, 2, 3], off_list: 30, seed: 0x4b34, cross_check: true }
    }
}

/// Seeded weights that appear in no family: half are unit or half-unit shifts of tabulated
/// weights, half are uniform small rationals.
pub fn off_list_weights(count: usize, max_mn: u32, seed: u64) -> Vec<HighestWeight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let listed: Vec<HighestWeight> = theorem_instances(max_mn)
        .into_iter()
        .map(|(l, m, n)| theorem_weight(l, m, n).expect("instance in range"))
        .collect();
    let mut out: Vec<HighestWeight> = Vec::with_capacity(count);
    while out.len() < count {
        let candidate = if out.len() % 2 == 0 && !listed.is_empty() {
            let base = &listed[rng.gen_range(0..listed.len())];
            let shift = ExactScalar::from_ratio(*[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).expect("index"), 2)
                .expect("nonzero");
            if rng.gen_bool(0.5) {
                HighestWeight::new(base.m, base.n, &base.mu_t + &shift, base.mu_c.clone())
            } else {
                HighestWeight::new(base.m, base.n, base.mu_t.clone(), &base.mu_c + &shift)
            }
        } else {
            let m = rng.gen_range(0..=max_mn);
            let n = rng.gen_range(0..=max_mn);
            let den = rng.gen_range(1..=3);
            let t = ExactScalar::from_ratio(rng.gen_range(-12..=12), den).expect("nonzero");
            let c = ExactScalar::from_ratio(rng.gen_range(-12..=12), den).expect("nonzero");
            HighestWeight::new(m, n, t, c)
        };
        if !is_listed(&candidate) && !out.contains(&candidate) {
            out.push(candidate);
        }
    }
    out
}

/// Every tabulated weight with `m, n ≤ max_mn`, sorted and deduplicated.
pub fn listed_weights(max_mn: u32) -> Vec<HighestWeight> {
    let mut out: Vec<HighestWeight> = theorem_instances(max_mn)
        .into_iter()
        .map(|(l, m, n)| theorem_weight(l, m, n).expect("instance in range"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Solve at every tabulated weight and every off-list sample, for every requested degree.
pub fn classify(opts: &ClassifyOptions) -> Vec<SingularReport> {
    let mut weights = listed_weights(opts.max_mn);
    weights.extend(off_list_weights(opts.off_list, opts.max_mn, opts.seed));
    let jobs: Vec<(HighestWeight, u32)> =
        weights.iter().flat_map(|w| opts.degrees.iter().map(move |&d| (w.clone(), d))).collect();
    jobs.par_iter().map(|(w, d)| solve_report(w, *d, opts.cross_check)).collect()
}

/// Result of solving on the mixed ansatz `Σ_{k ≤ N} Θ^k η_L ⊗ v_{L,k}`.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaBoundReport {
    pub weight: HighestWeight,
    pub max_theta: u32,
    pub kernel_dim: usize,
    /// Same kernel as with the ansatz truncated at `Θ^3`.
    pub matches_truncated: bool,
    /// Largest `Θ`-power in `T(m)` over the kernel.
    pub dual_theta_degree: u32,
    /// Every `T(m)` has the form `Θ Σ_{|L|≥3} + Σ_{|L|≥1}`.
    pub reduced_shape: bool,
    /// The `Θ^0 η_∅` coefficient of every `T(m)` vanishes.
    pub empty_slot_zero: bool,
    pub kernel_degrees: Vec<u32>,
}

impl ThetaBoundReport {
    pub fn passed(&self) -> bool {
        self.matches_truncated && self.reduced_shape && self.empty_slot_zero && self.dual_theta_degree <= 3
    }
}

pub fn theta_degree_bound_check(weight: &HighestWeight, max_theta: u32) -> ThetaBoundReport {
    let kernel =
        solve_space(&CandidateSpace::theta_ansatz(weight, max_theta), AssemblyPath::Primal, ConditionSet::Full);
    let truncated = if max_theta == 3 {
        kernel.clone()
    } else {
        solve_space(&CandidateSpace::theta_ansatz(weight, 3), AssemblyPath::Primal, ConditionSet::Full)
    };
    let duals: Vec<VermaVector> = kernel.iter().map(transform_t).collect();
    let dual_theta_degree = duals.iter().filter_map(VermaVector::max_theta).max().unwrap_or(0);
    let reduced_shape = duals
        .iter()
        .all(|u| u.terms.keys().all(|k| (k.theta == 1 && k.mono.len() >= 3) || (k.theta == 0 && !k.mono.is_empty())));
    let empty_slot_zero = duals.iter().all(|u| u.component(0, IndexSeq::EMPTY).is_zero());
    let mut kernel_degrees: Vec<u32> = kernel.iter().filter_map(|v| v.degree().ok().flatten()).collect();
    kernel_degrees.sort();
    ThetaBoundReport {
        weight: weight.clone(),
        max_theta,
        kernel_dim: kernel.len(),
        matches_truncated: same_span(&kernel, &truncated),
        dual_theta_degree,
        reduced_shape,
        empty_slot_zero,
        kernel_degrees,
    }
}
