use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use k4v_core::annihilation::{bracket, SuperBasis, SuperElement};
use k4v_core::dual_rep::check_phi_iso;
use k4v_core::morphisms::ComplexGraph;
use k4v_core::singular_solver::{solve, theorem_weight, AssemblyPath, TheoremLabel};
use k4v_core::verma::{basis_keys, lambda_action, Oracle, VermaVector};
use k4v_core::weight_modules::HighestWeight;
use k4v_core::IndexSeq;

fn sample_weight() -> HighestWeight {
    HighestWeight::rational(2, 1, (5, 3), (-7, 2)).unwrap()
}

fn brackets(c: &mut Criterion) {
    let basis: Vec<SuperElement> = SuperBasis::up_to(3).into_iter().map(SuperElement::from_basis).collect();
    c.bench_function("bracket all pairs, t-power ≤ 3", |b| {
        b.iter(|| {
            for x in &basis {
                for y in &basis {
                    black_box(bracket(x, y));
                }
            }
        })
    });
}

fn actions(c: &mut Criterion) {
    let weight = sample_weight();
    let vectors: Vec<VermaVector> =
        basis_keys(&weight, 2).into_iter().map(|k| VermaVector::basis(&weight, k)).collect();
    c.bench_function("closed-form λ-action on Θ ≤ 2 basis", |b| {
        b.iter(|| {
            for v in &vectors {
                for mono in IndexSeq::all() {
                    black_box(lambda_action(mono, v));
                }
            }
        })
    });
    let x = SuperElement::basis(2, IndexSeq::from_indices(&[1, 3]).unwrap());
    c.bench_function("commutation oracle, cold cache", |b| {
        b.iter_batched(
            || Oracle::new(&weight),
            |mut oracle| {
                for v in &vectors {
                    black_box(oracle.act(&x, v));
                }
            },
            BatchSize::SmallInput,
        )
    });
}

fn solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    group.sample_size(10);
    let w2 = theorem_weight(TheoremLabel::D2c, 3, 0).unwrap();
    group.bench_function("degree 2 at 2c(3,0)", |b| b.iter(|| solve(&w2, 2, AssemblyPath::Primal).unwrap()));
    let w3 = theorem_weight(TheoremLabel::D3a, 1, 0).unwrap();
    group.bench_function("degree 3 at 3a", |b| b.iter(|| solve(&w3, 3, AssemblyPath::Primal).unwrap()));
    group.bench_function("degree 3 at 3a, dual path", |b| b.iter(|| solve(&w3, 3, AssemblyPath::Dual).unwrap()));
    group.finish();
}

fn global(c: &mut Criterion) {
    let mut group = c.benchmark_group("global");
    group.sample_size(10);
    group.bench_function("complex graph m,n ≤ 2", |b| b.iter(|| ComplexGraph::build(2).unwrap().summary().unwrap()));
    group.bench_function("coadjoint isomorphism to degree 6", |b| b.iter(|| check_phi_iso(6)));
    group.finish();
}

criterion_group!(benches, brackets, actions, solver, global);
criterion_main!(benches);
