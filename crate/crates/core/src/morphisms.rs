//! Morphisms between Verma modules induced by singular vectors, their compositions, and
//! the conformal-duality symmetry of the resulting graph.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::annihilation::{bracket, Grading, SuperBasis, SuperElement};
use crate::exact::ExactScalar;
use crate::grassmann::IndexSeq;
use crate::singular_solver::{build_theorem_vector, theorem_instances, verify_vector, SolverError, TheoremLabel};
use crate::verma::{act, umult, umult_word, Oracle, UGen, VermaVector};
use crate::weight_modules::{lowering_word, HighestWeight, Sl2Generator};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorphismError {
    #[error("vector is not a highest weight singular vector")]
    NotSingular,
    #[error("vector is not a weight vector for {0}")]
    NotWeightVector(&'static str),
    #[error("weight {0} is not dominant integral")]
    NotIntegral(String),
    #[error("input lies in M{found}, expected M{expected}")]
    WeightMismatch { expected: String, found: String },
    #[error("cannot compose: target {first} differs from source {second}")]
    ChainMismatch { first: String, second: String },
    #[error("element does not lie in 𝔤_0")]
    NotDegreeZero,
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Weight(#[from] crate::weight_modules::WeightError),
}

/// `∇: M(source) → M(target)`, determined by `v_source ↦ image_of_hwv`.
#[derive(Clone, Debug, Serialize)]
pub struct VermaMorphism {
    pub source: HighestWeight,
    pub target: HighestWeight,
    pub image_of_hwv: VermaVector,
    pub degree: u32,
    pub label: Option<TheoremLabel>,
}

/// The eigenvalue of `x` on `v`, if `v` is an eigenvector.
fn eigenvalue(x: &SuperElement, v: &VermaVector, name: &'static str) -> Result<ExactScalar, MorphismError> {
    let image = act(x, v);
    let (key, c) = v.terms.leading().ok_or(MorphismError::NotWeightVector(name))?;
    let lambda = image.terms.coeff(key) * c.inv().expect("leading coefficient is nonzero");
    if image == v.scaled(&lambda) {
        Ok(lambda)
    } else {
        Err(MorphismError::NotWeightVector(name))
    }
}

fn to_u32(x: &ExactScalar) -> Option<u32> {
    x.to_i64().and_then(|k| u32::try_from(k).ok())
}

/// The `(h_x, h_y, t, C)`-weight of a weight vector.
pub fn weight_of(v: &VermaVector) -> Result<HighestWeight, MorphismError> {
    let hx = eigenvalue(&Sl2Generator::Hx.element(), v, "h_x")?;
    let hy = eigenvalue(&Sl2Generator::Hy.element(), v, "h_y")?;
    let mu_t = eigenvalue(&SuperElement::t(), v, "t")?;
    let mu_c = eigenvalue(&SuperElement::central_element(), v, "C")?;
    match (to_u32(&hx), to_u32(&hy)) {
        (Some(m), Some(n)) => Ok(HighestWeight::new(m, n, mu_t, mu_c)),
        _ => Err(MorphismError::NotIntegral(format!("({hx},{hy})"))),
    }
}

impl VermaMorphism {
    /// The morphism defined by a highest weight singular vector.
    pub fn from_singular_vector(image_of_hwv: VermaVector, label: Option<TheoremLabel>) -> Result<Self, MorphismError> {
        let verdict = verify_vector(&image_of_hwv)?;
        if !verdict.is_singular() {
            return Err(MorphismError::NotSingular);
        }
        let degree = image_of_hwv.degree().map_err(SolverError::from)?.ok_or(MorphismError::NotSingular)?;
        let source = weight_of(&image_of_hwv)?;
        Ok(Self { source, target: image_of_hwv.weight().clone(), image_of_hwv, degree, label })
    }

    pub fn from_theorem(label: TheoremLabel, m: u32, n: u32) -> Result<Self, MorphismError> {
        Self::from_singular_vector(build_theorem_vector(label, m, n)?, Some(label))
    }

    /// `∇(v)` for `v ∈ M(source)`, extended from the generator by `U(𝔤)`-linearity.
    pub fn evaluate(&self, v: &VermaVector) -> Result<VermaVector, MorphismError> {
        if v.weight() != &self.source {
            return Err(MorphismError::WeightMismatch {
                expected: self.source.to_string(),
                found: v.weight().to_string(),
            });
        }
        let mut oracle = Oracle::new(&self.target);
        let fx = Sl2Generator::Fx.element();
        let fy = Sl2Generator::Fy.element();
        let mut lowered: BTreeMap<(u32, u32), VermaVector> = BTreeMap::new();
        let mut out = VermaVector::zero(&self.target);
        for (key, c) in v.terms.iter() {
            let base = match lowered.entry(key.w) {
                Entry::Occupied(e) => e.into_mut(),
                Entry::Vacant(e) => {
                    let (p, q, s) = lowering_word(&self.source, key.w)?;
                    let mut image = self.image_of_hwv.clone();
                    for _ in 0..q {
                        image = oracle.act(&fy, &image);
                    }
                    for _ in 0..p {
                        image = oracle.act(&fx, &image);
                    }
                    e.insert(image.scaled(&s.inv().expect("factorial ratio is nonzero")))
                }
            };
            let mut image = umult_word(&key.mono.to_vec(), base);
            for _ in 0..key.theta {
                image = umult(UGen::Theta, &image);
            }
            out.add_scaled(&image, c);
        }
        Ok(out)
    }
}

/// Whether `second ∘ first` vanishes; it suffices to check the generator.
pub fn compose_is_zero(second: &VermaMorphism, first: &VermaMorphism) -> Result<bool, MorphismError> {
    if first.target != second.source {
        return Err(MorphismError::ChainMismatch {
            first: first.target.to_string(),
            second: second.source.to_string(),
        });
    }
    Ok(second.evaluate(&first.image_of_hwv)?.is_zero())
}

/// `(m, n, μ_t, μ_C) ↦ (m, n, 2 − μ_t, −μ_C)`.
pub fn duality_weight(mu: &HighestWeight) -> HighestWeight {
    let a = supertrace_ad(&SuperElement::t()).expect("t lies in 𝔤_0");
    let b = supertrace_ad(&SuperElement::central_element()).expect("C lies in 𝔤_0");
    HighestWeight::new(mu.m, mu.n, &a - &mu.mu_t, &b - &mu.mu_c)
}

/// Supertrace of `ad x` restricted to `𝔤_{<0} = ⟨ξ_∅⟩ ⊕ ⟨ξ_1, …, ξ_4⟩`.
pub fn supertrace_ad(x: &SuperElement) -> Result<ExactScalar, MorphismError> {
    if !matches!(x.grade(), Grading::Degree(0) | Grading::Zero) {
        return Err(MorphismError::NotDegreeZero);
    }
    let diagonal = |b: SuperBasis| bracket(x, &SuperElement::from_basis(b)).terms.coeff(&b);
    let mut out = diagonal(SuperBasis::new(0, IndexSeq::EMPTY));
    for i in 1..=4 {
        out -= &diagonal(SuperBasis::new(0, IndexSeq::single(i)));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphEdge {
    pub from: [String; 4],
    pub to: [String; 4],
    pub degree: u32,
    pub label: String,
}

/// Morphisms from every explicit singular vector whose target has `m, n ≤ max_mn`.
#[derive(Clone, Debug)]
pub struct ComplexGraph {
    pub max_mn: u32,
    pub morphisms: Vec<VermaMorphism>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub nodes: Vec<[String; 4]>,
    pub edges: Vec<GraphEdge>,
    pub two_paths: usize,
    pub vanishing_compositions: usize,
    pub first_nonvanishing: Option<String>,
    /// Nodes with `m, n ≤ max_mn` whose dual is not a node.
    pub duality_missing_nodes: Vec<String>,
    /// In-range edges `A → B` without a dual edge `dual(B) → dual(A)`.
    pub duality_missing_edges: Vec<String>,
    pub supertrace_t: ExactScalar,
    pub supertrace_c: ExactScalar,
    /// How the edge set was obtained.
    pub caveat: String,
}

impl GraphSummary {
    pub fn passed(&self) -> bool {
        self.vanishing_compositions == self.two_paths
            && self.duality_missing_nodes.is_empty()
            && self.duality_missing_edges.is_empty()
            && self.supertrace_t == ExactScalar::from_int(2)
            && self.supertrace_c.is_zero()
    }
}

impl ComplexGraph {
    pub fn build(max_mn: u32) -> Result<Self, MorphismError> {
        use rayon::prelude::*;
        let morphisms = theorem_instances(max_mn)
            .into_par_iter()
            .map(|(label, m, n)| VermaMorphism::from_theorem(label, m, n))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { max_mn, morphisms })
    }

    pub fn nodes(&self) -> BTreeSet<HighestWeight> {
        self.morphisms.iter().flat_map(|f| [f.source.clone(), f.target.clone()]).collect()
    }

    fn in_range(&self, w: &HighestWeight) -> bool {
        w.m <= self.max_mn && w.n <= self.max_mn
    }

    /// Every `(first, second)` with `first.target == second.source`.
    pub fn two_paths(&self) -> Vec<(&VermaMorphism, &VermaMorphism)> {
        let mut out = Vec::new();
        for first in &self.morphisms {
            for second in self.morphisms.iter().filter(|s| s.source == first.target) {
                out.push((first, second));
            }
        }
        out
    }

    pub fn summary(&self) -> Result<GraphSummary, MorphismError> {
        use rayon::prelude::*;
        let paths = self.two_paths();
        let results: Vec<(String, bool)> = paths
            .par_iter()
            .map(|(first, second)| {
                let name = format!("{} -> {} -> {}", first.source, first.target, second.target);
                compose_is_zero(second, first).map(|ok| (name, ok))
            })
            .collect::<Result<_, _>>()?;
        let nodes = self.nodes();
        let edges: BTreeSet<(HighestWeight, HighestWeight, u32)> =
            self.morphisms.iter().map(|f| (f.source.clone(), f.target.clone(), f.degree)).collect();
        let duality_missing_nodes = nodes
            .iter()
            .filter(|w| self.in_range(w) && !nodes.contains(&duality_weight(w)))
            .filter(|w| self.in_range(&duality_weight(w)))
            .map(|w| w.to_string())
            .collect();
        let duality_missing_edges = edges
            .iter()
            .filter(|(a, b, _)| self.in_range(a) && self.in_range(b))
            .filter(|(a, b, d)| !edges.contains(&(duality_weight(b), duality_weight(a), *d)))
            .map(|(a, b, d)| format!("{a} -> {b} (degree {d})"))
            .collect();
        Ok(GraphSummary {
            nodes: nodes.iter().map(HighestWeight::components).collect(),
            edges: self.edges(),
            two_paths: results.len(),
            vanishing_compositions: results.iter().filter(|(_, ok)| *ok).count(),
            first_nonvanishing: results.iter().find(|(_, ok)| !ok).map(|(n, _)| n.clone()),
            duality_missing_nodes,
            duality_missing_edges,
            supertrace_t: supertrace_ad(&SuperElement::t())?,
            supertrace_c: supertrace_ad(&SuperElement::central_element())?,
            caveat: "edges are synthesized from the explicit singular-vector families only".into(),
        })
    }

    pub fn edges(&self) -> Vec<GraphEdge> {
        self.morphisms
            .iter()
            .map(|f| GraphEdge {
                from: f.source.components(),
                to: f.target.components(),
                degree: f.degree,
                label: f.label.map_or_else(|| "?".into(), |l| l.to_string()),
            })
            .collect()
    }

    /// Graphviz rendering: one node per weight, one edge per morphism.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph complexes {\n  rankdir=LR;\n");
        for w in self.nodes() {
            let _ = writeln!(out, "  \"{w}\";");
        }
        for f in &self.morphisms {
            let label = f.label.map_or_else(|| "?".into(), |l| l.to_string());
            let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"{label} (d={})\"];", f.source, f.target, f.degree);
        }
        out.push_str("}\n");
        out
    }
}
