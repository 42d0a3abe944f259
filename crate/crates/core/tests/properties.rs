use proptest::prelude::*;

use k4v_core::annihilation::{bracket, SuperBasis, SuperElement};
use k4v_core::dual_rep::{coadjoint_act, DualElement};
use k4v_core::exact::EchelonBasis;
use k4v_core::grassmann::{hodge, hodge_inv, normalize, product};
use k4v_core::singular_solver::{build_theorem_vector, theorem_instances, verify_vector};
use k4v_core::verma::{act, act_oracle, transform_t, transform_t_inv, VermaKey, VermaVector};
use k4v_core::weight_modules::HighestWeight;
use k4v_core::{ExactMatrix, ExactScalar, IndexSeq};

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (-9i64..=9, 1i64..=5, -9i64..=9, 1i64..=5).prop_map(|(a, b, c, d)| {
        ExactScalar::from_ratio(a, b).unwrap() + ExactScalar::i() * ExactScalar::from_ratio(c, d).unwrap()
    })
}

fn rational() -> impl Strategy<Value = ExactScalar> {
    (-12i64..=12, 1i64..=6).prop_map(|(a, b)| ExactScalar::from_ratio(a, b).unwrap())
}

fn seq() -> impl Strategy<Value = IndexSeq> {
    (0u8..16).prop_map(IndexSeq::from_bits)
}

fn basis(max_tpow: u32) -> impl Strategy<Value = SuperBasis> {
    (0..=max_tpow, seq()).prop_map(|(t, m)| SuperBasis::new(t, m))
}

fn weight() -> impl Strategy<Value = HighestWeight> {
    (0u32..=2, 0u32..=2, rational(), rational()).prop_map(|(m, n, t, c)| HighestWeight::new(m, n, t, c))
}

/// A weight together with a random combination of basis vectors with `Θ`-power ≤ 1.
fn verma_vector() -> impl Strategy<Value = VermaVector> {
    weight().prop_flat_map(|w| {
        let (m, n) = (w.m, w.n);
        let term = (0u32..=1, seq(), 0..=m, 0..=n, -3i64..=3);
        prop::collection::vec(term, 1..5).prop_map(move |terms| {
            let mut v = VermaVector::zero(&w);
            for (theta, mono, a, b, c) in terms {
                v.add(&VermaVector::basis(&w, VermaKey::new(theta, mono, (a, b))).scaled(&ExactScalar::from_int(c)));
            }
            v
        })
    })
}

fn element(max_tpow: u32) -> impl Strategy<Value = SuperElement> {
    prop::collection::vec((basis(max_tpow), -3i64..=3), 1..4).prop_map(|terms| {
        let mut x = SuperElement::zero();
        for (b, c) in terms {
            x.add_scaled(&SuperElement::from_basis(b), &ExactScalar::from_int(c));
        }
        x
    })
}

fn parity_sign(a: SuperBasis, b: SuperBasis) -> ExactScalar {
    if a.is_odd() && b.is_odd() {
        ExactScalar::one()
    } else {
        -ExactScalar::one()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.to_string().parse::<ExactScalar>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExactScalar>(&json).unwrap(), a);
    }

    #[test]
    fn weight_display_round_trip(w in weight()) {
        prop_assert_eq!(w.to_string().parse::<HighestWeight>().unwrap(), w);
    }

    #[test]
    fn nullspace_is_annihilated(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = ExactMatrix::from_ints(&refs).unwrap();
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.len(), m.cols());
        for v in &null {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(ExactScalar::is_zero));
        }
        let mut echelon = EchelonBasis::new(m.cols());
        for r in 0..m.rows() {
            echelon.insert(m.row(r).clone());
        }
        prop_assert_eq!(echelon.rank(), m.rank());
    }

    #[test]
    fn normalize_sign_is_permutation_parity(perm in Just(vec![1u8, 2, 3, 4]).prop_shuffle(), len in 0usize..=4) {
        let raw = &perm[..len];
        let inversions = (0..len).flat_map(|i| (i + 1..len).map(move |j| (i, j))).filter(|&(i, j)| raw[i] > raw[j]).count();
        let m = normalize(raw).unwrap();
        prop_assert_eq!(m.sign, if inversions % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(m.seq, IndexSeq::from_indices(raw).unwrap());
    }

    #[test]
    fn grassmann_product_is_associative(a in seq(), b in seq(), c in seq()) {
        let left = product(a, b).and_then(|ab| product(ab, c));
        let right = product(b, c).and_then(|bc| product(a, bc));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hodge_inverse(m in seq()) {
        let h = hodge(m);
        let back = hodge_inv(h.seq).times(h.sign);
        prop_assert_eq!(back.seq, m);
        prop_assert_eq!(back.sign, 1);
    }

    #[test]
    fn bracket_is_super_skew(a in basis(3), b in basis(3)) {
        let (xa, xb) = (SuperElement::from_basis(a), SuperElement::from_basis(b));
        prop_assert_eq!(bracket(&xa, &xb), bracket(&xb, &xa).scaled(&parity_sign(a, b)));
    }

    #[test]
    fn super_jacobi(a in basis(3), b in basis(3), c in basis(3)) {
        let (xa, xb, xc) = (SuperElement::from_basis(a), SuperElement::from_basis(b), SuperElement::from_basis(c));
        let lhs = bracket(&xa, &bracket(&xb, &xc));
        let mut rhs = bracket(&bracket(&xa, &xb), &xc);
        rhs.add_scaled(&bracket(&xb, &bracket(&xa, &xc)), &-parity_sign(a, b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn verma_module_axiom(v in verma_vector(), a in basis(2), b in basis(2)) {
        let (xa, xb) = (SuperElement::from_basis(a), SuperElement::from_basis(b));
        let lhs = act(&bracket(&xa, &xb), &v);
        let mut rhs = act(&xa, &act(&xb, &v));
        rhs.add_scaled(&act(&xb, &act(&xa, &v)), &parity_sign(a, b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn closed_form_matches_oracle_on_combinations(v in verma_vector(), x in element(3)) {
        prop_assert_eq!(act(&x, &v), act_oracle(&x, &v));
    }

    #[test]
    fn hodge_transform_is_invertible(v in verma_vector()) {
        prop_assert_eq!(transform_t_inv(&transform_t(&v)), v);
    }

    #[test]
    fn singular_vectors_stay_singular_under_scaling(index in 0usize..200, c in scalar()) {
        prop_assume!(!c.is_zero());
        let instances = theorem_instances(2);
        let (label, m, n) = instances[index % instances.len()];
        let v = build_theorem_vector(label, m, n).unwrap().scaled(&c);
        prop_assert!(verify_vector(&v).unwrap().is_singular());
    }

    #[test]
    fn coadjoint_module_axiom(a in basis(2), b in basis(2), f in basis(3)) {
        let (xa, xb) = (SuperElement::from_basis(a), SuperElement::from_basis(b));
        let f = DualElement::dual_basis(f);
        let lhs = coadjoint_act(&bracket(&xa, &xb).without_central(), &f);
        let mut rhs = coadjoint_act(&xa, &coadjoint_act(&xb, &f)).terms;
        rhs.add_scaled(&coadjoint_act(&xb, &coadjoint_act(&xa, &f)).terms, &parity_sign(a, b));
        prop_assert_eq!(lhs.terms, rhs);
    }
}
