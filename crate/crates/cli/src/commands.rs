use std::path::PathBuf;

use anyhow::Context;
use clap::Args;
use k4v_core::annihilation::{check_cocycle, check_jacobi, check_jacobi_with, check_phi, Cocycle};
use k4v_core::conformal_algebra::check_conformal_axioms;
use k4v_core::dual_rep::{check_iterated_theta, check_phi_iso, check_raising_to_theta, coadjoint_weight};
use k4v_core::morphisms::ComplexGraph;
use k4v_core::singular_solver::{
    classify, expected_labels, same_span, solve, verify_vector, AssemblyPath, ClassifyOptions, SingularReport,
};
use k4v_core::verma::VermaVector;
use k4v_core::weight_modules::HighestWeight;
use k4v_core::ExactScalar;
use serde::Serialize;

use crate::report::{ReportBuilder, RunReport};

#[derive(Args, Debug, Serialize)]
pub struct AxiomsArgs {
    /// Largest `t`-power in the super-Jacobi and cocycle sweeps.
    #[arg(long, default_value_t = 3)]
    pub max_tpow: u32,
    /// Largest `∂`-power in the conformal-axiom sweep.
    #[arg(long, default_value_t = 2)]
    pub max_partial: u32,
    /// Largest `y`-power in the `K_4 → K(1,4)_+` checks; defaults to `--max-tpow`.
    #[arg(long)]
    pub max_ypow: Option<u32>,
    /// Run super-Jacobi with a deliberately wrong cocycle (negative control).
    #[arg(long, hide = true)]
    pub corrupt_cocycle: bool,
}

pub fn axioms(args: &AxiomsArgs) -> anyhow::Result<RunReport> {
    let mut report = ReportBuilder::new("axioms", args)?;
    report.checks(&check_conformal_axioms(args.max_partial));
    report.checks(&check_cocycle(args.max_tpow));
    let jacobi = if args.corrupt_cocycle {
        check_jacobi_with(args.max_tpow, &Cocycle::corrupted())
    } else {
        check_jacobi(args.max_tpow)
    };
    report.check(&jacobi);
    report.checks(&check_phi(args.max_ypow.unwrap_or(args.max_tpow)));
    report.finish(&())
}

/// Parse the four weight components; rationals are written `p/q`.
fn parse_weight(parts: &[String]) -> anyhow::Result<HighestWeight> {
    parts.join(" ").parse::<HighestWeight>().with_context(|| format!("invalid weight {parts:?}"))
}

#[derive(Args, Debug, Serialize)]
pub struct SearchArgs {
    /// `m n mu_t mu_c`, e.g. `1 0 5/2 -1/2`.
    #[arg(long, num_args = 4, value_names = ["M", "N", "MU_T", "MU_C"], allow_hyphen_values = true, required = true)]
    pub weight: Vec<String>,
    #[arg(long)]
    pub degree: u32,
    /// Assemble the system from the Hodge-conjugated action and compare with the direct one.
    #[arg(long)]
    pub dual_path: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct SearchResult {
    weight: HighestWeight,
    degree: u32,
    path: AssemblyPath,
    kernel_dim: usize,
    basis_vectors: Vec<VermaVector>,
    expected_labels: Vec<String>,
}

pub fn search(args: &SearchArgs) -> anyhow::Result<RunReport> {
    let weight = parse_weight(&args.weight)?;
    let mut report = ReportBuilder::new("search", args)?;
    let path = if args.dual_path { AssemblyPath::Dual } else { AssemblyPath::Primal };
    let kernel = solve(&weight, args.degree, path)?;
    let mut verified = k4v_core::CheckReport::new("kernel vectors are singular");
    for v in &kernel {
        let ok = verify_vector(v).is_ok_and(|r| r.is_singular());
        verified.record(ok, || v.to_string());
    }
    report.check(&verified);
    if args.dual_path {
        let primal = solve(&weight, args.degree, AssemblyPath::Primal)?;
        report.condition("dual path agrees with the direct path", same_span(&kernel, &primal), || {
            format!("dual dim {}, direct dim {}", kernel.len(), primal.len())
        });
    }
    report.finish(&SearchResult {
        expected_labels: expected_labels(&weight, args.degree).iter().map(ToString::to_string).collect(),
        weight,
        degree: args.degree,
        path,
        kernel_dim: kernel.len(),
        basis_vectors: kernel.iter().map(VermaVector::normalized).collect(),
    })
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyTheoremsArgs {
    #[arg(long, default_value_t = 3)]
    pub max_mn: u32,
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
    pub degrees: Vec<u32>,
    /// Number of seeded weights outside every family.
    #[arg(long, default_value_t = 30)]
    pub off_list: usize,
    #[arg(long, default_value_t = 0x4b34)]
    pub seed: u64,
    /// Skip the dual-path and four-generator cross-checks.
    #[arg(long)]
    pub no_cross_check: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn verify_theorems(args: &VerifyTheoremsArgs) -> anyhow::Result<RunReport> {
    let mut report = ReportBuilder::new("verify-theorems", args)?;
    report.seed(args.seed);
    let opts = ClassifyOptions {
        max_mn: args.max_mn,
        degrees: args.degrees.clone(),
        off_list: args.off_list,
        seed: args.seed,
        cross_check: !args.no_cross_check,
    };
    let results = classify(&opts);
    let describe = |r: &SingularReport| format!("{} degree {}: kernel dim {}", r.weight, r.degree, r.kernel_dim);
    let mut found = k4v_core::CheckReport::new("every listed instance is found");
    let mut unexpected = k4v_core::CheckReport::new("no unexpected kernels");
    let mut verified = k4v_core::CheckReport::new("kernel vectors pass both verification routes");
    let mut cross = k4v_core::CheckReport::new("dual path and four-generator conditions agree");
    for r in &results {
        if !r.expected_labels.is_empty() {
            found.record(!r.unexpected && r.kernel_dim > 0, || describe(r));
        }
        unexpected.record(!r.unexpected, || describe(r));
        verified.record(r.verified, || describe(r));
        cross.record(r.dual_agrees != Some(false) && r.shortcut_agrees != Some(false), || describe(r));
    }
    report.checks([&found, &unexpected, &verified, &cross]);
    report.finish(&results)
}

#[derive(Args, Debug, Serialize)]
pub struct ComplexesArgs {
    #[arg(long, default_value_t = 3)]
    pub max_mn: u32,
    /// Graph JSON path; the DOT rendering goes next to it with extension `.dot`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn complexes(args: &ComplexesArgs) -> anyhow::Result<RunReport> {
    let mut report = ReportBuilder::new("complexes", args)?;
    let graph = ComplexGraph::build(args.max_mn)?;
    let summary = graph.summary()?;
    report.condition("every 2-path composes to zero", summary.vanishing_compositions == summary.two_paths, || {
        summary.first_nonvanishing.clone().unwrap_or_default()
    });
    report.condition("duality maps in-range nodes to nodes", summary.duality_missing_nodes.is_empty(), || {
        summary.duality_missing_nodes.join("; ")
    });
    report.condition("duality reverses in-range edges", summary.duality_missing_edges.is_empty(), || {
        summary.duality_missing_edges.join("; ")
    });
    let traces_ok = summary.supertrace_t == ExactScalar::from_int(2) && summary.supertrace_c.is_zero();
    report.condition("supertrace of ad t is 2 and of ad C is 0", traces_ok, || {
        format!("str(ad t) = {}, str(ad C) = {}", summary.supertrace_t, summary.supertrace_c)
    });
    if let Some(path) = &args.out {
        std::fs::write(path, serde_json::to_string_pretty(&summary)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
        let dot = path.with_extension("dot");
        std::fs::write(&dot, graph.to_dot()).with_context(|| format!("writing {}", dot.display()))?;
    }
    report.finish(&summary)
}

#[derive(Args, Debug, Serialize)]
pub struct CoadjointArgs {
    #[arg(long, default_value_t = 6)]
    pub max_degree: u32,
    /// Largest `t`-power in the iterated-`Θ` and raising checks.
    #[arg(long, default_value_t = 3)]
    pub max_s: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn coadjoint(args: &CoadjointArgs) -> anyhow::Result<RunReport> {
    let mut report = ReportBuilder::new("coadjoint", args)?;
    let iso = check_phi_iso(args.max_degree);
    for d in &iso.per_degree {
        report.condition(&format!("φ is bijective in degree {}", d.degree), d.bijective(), || {
            format!("dims {} → {}, rank {}", d.verma_dim, d.dual_dim, d.rank)
        });
    }
    report.checks([&iso.degree_preserving, &iso.equivariance]);
    report.check(&check_iterated_theta(args.max_s));
    report.check(&check_raising_to_theta(args.max_s));
    let weight = coadjoint_weight();
    for degree in 1..=3 {
        let kernel = solve(&weight, degree, AssemblyPath::Primal)?;
        report.condition(&format!("M{weight} has no singular vectors of degree {degree}"), kernel.is_empty(), || {
            format!("kernel dim {}", kernel.len())
        });
    }
    report.finish(&iso)
}
