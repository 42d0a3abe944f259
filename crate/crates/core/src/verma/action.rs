//! Closed-form λ-action of `ξ_I` on `Θ^k η_L ⊗ v`, and its Hodge-conjugate form.

use std::collections::BTreeMap;

use super::{LambdaValue, VermaKey, VermaVector};
use crate::annihilation::SuperElement;
use crate::exact::ExactScalar;
use crate::grassmann::{derive, derive_by, derive_seq, eps_of, normalize, product, IndexSeq, SignedMonomial};
use crate::linear::{factorial, Combination};
use crate::weight_modules::{so4_act_monomial, HighestWeight, MonoKey};

/// The `F`-factor of one term: `v`, `t.v`, `C v` or `ξ_{j,i}.v`.
#[derive(Clone, Copy)]
enum Factor {
    Plain,
    Grading,
    Central,
    Rotation(u8, u8),
}

fn apply_factor(f: Factor, weight: &HighestWeight, w: MonoKey) -> Vec<(MonoKey, ExactScalar)> {
    match f {
        Factor::Plain => vec![(w, ExactScalar::one())],
        Factor::Grading => vec![(w, weight.mu_t.clone())],
        Factor::Central => vec![(w, weight.mu_c.clone())],
        Factor::Rotation(j, i) => {
            let pair = normalize(&[j, i]).expect("indices in range");
            if pair.is_zero() {
                return Vec::new();
            }
            let s = ExactScalar::from_int(pair.sign as i64);
            so4_act_monomial(pair.seq, weight, w).into_iter().map(|(k, c)| (k, &c * &s)).collect()
        }
    }
}

type Coeffs = BTreeMap<u32, Combination<VermaKey>>;

struct Terms<'a> {
    weight: &'a HighestWeight,
    w: MonoKey,
    out: Coeffs,
}

impl Terms<'_> {
    fn push(&mut self, lam: u32, theta: u32, m: SignedMonomial, coef: i64, f: Factor) {
        if m.is_zero() || coef == 0 {
            return;
        }
        let sign = coef * m.sign as i64;
        let entry = self.out.entry(lam).or_default();
        for (k, c) in apply_factor(f, self.weight, self.w) {
            entry.add_term(VermaKey::new(theta, m.seq, k), c.scale(sign));
        }
    }
}

/// `∂_{s·ξ_J} x` for a signed monomial `s·ξ_J`.
fn derive_signed(by: SignedMonomial, target: SignedMonomial) -> SignedMonomial {
    if by.is_zero() {
        return SignedMonomial::ZERO;
    }
    target.and_then(|t| derive_by(by.seq, t)).times(by.sign)
}

fn sign_of(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

fn with_suffix(i_seq: IndexSeq, tail: &[u8]) -> Vec<u8> {
    let mut raw = i_seq.to_vec();
    raw.extend_from_slice(tail);
    raw
}

/// `ξ_I λ (η_L ⊗ w)` for `w` a monomial.
fn base_action(i_seq: IndexSeq, l_seq: IndexSeq, weight: &HighestWeight, w: MonoKey) -> Coeffs {
    let mut t = Terms { weight, w, out: BTreeMap::new() };
    let size = i_seq.len() as i64;
    let s_i = sign_of(i_seq.is_odd());
    let s_l = sign_of(l_seq.is_odd());
    let eta = SignedMonomial::plus(l_seq);
    let on_eta = |raw: &[u8]| derive_seq(raw, l_seq);

    // λ^0
    t.push(0, 1, derive_by(i_seq, l_seq), s_i * (size - 2), Factor::Plain);
    for i in 1..=4u8 {
        let di_xi = derive(i, i_seq);
        let star = product(IndexSeq::single(i), l_seq);
        t.push(0, 0, derive_signed(di_xi, star), 1, Factor::Plain);
    }
    for i in 1..=4u8 {
        for j in (i + 1)..=4 {
            let dij = derive_seq(&[i, j], i_seq);
            t.push(0, 0, derive_signed(dij, eta), s_i, Factor::Rotation(j, i));
        }
    }
    if size == 3 {
        t.push(0, 0, derive_by(i_seq.complement(), l_seq), eps_of(i_seq) as i64, Factor::Central);
    }

    // λ^1
    t.push(1, 0, derive_by(i_seq, l_seq), s_i, Factor::Grading);
    for i in 1..=4u8 {
        let d = on_eta(&with_suffix(i_seq, &[i]));
        let m = d.and_then(|s| product(s, IndexSeq::single(i)));
        t.push(1, 0, m, s_i * s_l, Factor::Plain);
    }
    for i in 1..=4u8 {
        let di_xi = derive(i, i_seq);
        for j in (1..=4u8).filter(|&j| j != i) {
            t.push(1, 0, derive_signed(di_xi, derive(j, l_seq)), 1, Factor::Rotation(j, i));
        }
    }
    if size == 2 {
        t.push(1, 0, derive_by(i_seq.complement(), l_seq), eps_of(i_seq) as i64, Factor::Central);
    }

    // λ^2
    for i in 1..=4u8 {
        for j in (i + 1)..=4 {
            t.push(2, 0, on_eta(&with_suffix(i_seq, &[i, j])), s_i, Factor::Rotation(j, i));
        }
    }
    if size == 1 {
        t.push(2, 0, derive_by(i_seq.complement(), l_seq), -(eps_of(i_seq) as i64), Factor::Central);
    }

    // λ^3
    if size == 0 {
        t.push(3, 0, derive_by(IndexSeq::TOP, l_seq), -1, Factor::Central);
    }
    t.out
}

/// `(T ∘ ξ_I λ ∘ T^{-1})(η_L ⊗ w)` for `w` a monomial.
fn dual_base_action(i_seq: IndexSeq, l_seq: IndexSeq, weight: &HighestWeight, w: MonoKey) -> Coeffs {
    let mut t = Terms { weight, w, out: BTreeMap::new() };
    let size = i_seq.len();
    let s_i = sign_of(i_seq.is_odd());
    let prefactor = sign_of((size * (size + 1) / 2 + size * l_seq.len()) % 2 == 1);
    let star = |m: SignedMonomial| m.and_then(|s| product(s, l_seq));
    let xi_i = SignedMonomial::plus(i_seq);

    // λ^0
    t.push(0, 1, star(xi_i), prefactor * (size as i64 - 2), Factor::Plain);
    for i in 1..=4u8 {
        let left = derive(i, i_seq);
        let right = derive(i, l_seq);
        let m = if left.is_zero() || right.is_zero() {
            SignedMonomial::ZERO
        } else {
            product(left.seq, right.seq).times(left.sign * right.sign)
        };
        t.push(0, 0, m, -prefactor * s_i, Factor::Plain);
    }
    for r in 1..=4u8 {
        for s in (r + 1)..=4 {
            t.push(0, 0, star(derive_seq(&[r, s], i_seq)), -prefactor, Factor::Rotation(s, r));
        }
    }
    if size == 3 {
        let m = star(SignedMonomial::plus(i_seq.complement()));
        t.push(0, 0, m, prefactor * eps_of(i_seq) as i64, Factor::Central);
    }

    // λ^1
    t.push(1, 0, star(xi_i), prefactor, Factor::Grading);
    for i in 1..=4u8 {
        let xi_ii = normalize(&with_suffix(i_seq, &[i])).expect("indices in range");
        let m = star(xi_ii).and_then(|s| derive(i, s));
        t.push(1, 0, m, -prefactor * s_i, Factor::Plain);
    }
    for i in 1..=4u8 {
        for j in (1..=4u8).filter(|&j| j != i) {
            let xi_ij = normalize(&with_suffix(i_seq, &[j])).expect("indices in range");
            let m = star(xi_ij.and_then(|s| derive(i, s)));
            t.push(1, 0, m, prefactor * s_i, Factor::Rotation(j, i));
        }
    }
    if size == 2 {
        let m = star(SignedMonomial::plus(i_seq.complement()));
        t.push(1, 0, m, prefactor * eps_of(i_seq) as i64, Factor::Central);
    }

    // λ^2
    for i in 1..=4u8 {
        for j in (i + 1)..=4 {
            let xi_iij = normalize(&with_suffix(i_seq, &[i, j])).expect("indices in range");
            t.push(2, 0, star(xi_iij), -prefactor, Factor::Rotation(j, i));
        }
    }
    if size == 1 {
        let m = star(SignedMonomial::plus(i_seq.complement()));
        t.push(2, 0, m, -prefactor * eps_of(i_seq) as i64, Factor::Central);
    }

    // λ^3
    if size == 0 {
        t.push(3, 0, star(SignedMonomial::plus(IndexSeq::TOP)), -prefactor, Factor::Central);
    }
    t.out
}

/// Raise a `Θ`-free result to `Θ^k`: `X_k = (Θ + λ) X_{k-1} - χ_{|I|=4} ε_I Θ^{k-1} η_L ⊗ C w`.
fn lift_theta(mut x: Coeffs, k: u32, i_seq: IndexSeq, l_seq: IndexSeq, weight: &HighestWeight, w: MonoKey) -> Coeffs {
    for step in 1..=k {
        let mut next: Coeffs = BTreeMap::new();
        for (&lam, comb) in &x {
            let raised = comb.map_keys_signed(|key| Some((VermaKey::new(key.theta + 1, key.mono, key.w), 1)));
            next.entry(lam).or_default().add_assign(&raised);
            next.entry(lam + 1).or_default().add_assign(comb);
        }
        if i_seq == IndexSeq::TOP && !weight.mu_c.is_zero() {
            let c = weight.mu_c.scale(-(eps_of(i_seq) as i64));
            next.entry(0).or_default().add_term(VermaKey::new(step - 1, l_seq, w), c);
        }
        x = next;
    }
    x
}

fn collect(
    v: &VermaVector,
    base: impl Fn(IndexSeq, IndexSeq, &HighestWeight, MonoKey) -> Coeffs,
    i_seq: IndexSeq,
) -> LambdaValue {
    let weight = v.weight();
    let mut total: Coeffs = BTreeMap::new();
    for (key, c) in v.terms.iter() {
        let x = base(i_seq, key.mono, weight, key.w);
        let x = lift_theta(x, key.theta, i_seq, key.mono, weight, key.w);
        for (lam, comb) in x {
            total.entry(lam).or_default().add_scaled(&comb, c);
        }
    }
    LambdaValue {
        weight: weight.clone(),
        coeffs: total.into_iter().filter(|(_, c)| !c.is_zero()).map(|(lam, c)| (lam, v.with_terms(c))).collect(),
    }
}

/// `ξ_I λ v = Σ_j λ^j/j! · t^j ξ_I . v`.
pub fn lambda_action(i_seq: IndexSeq, v: &VermaVector) -> LambdaValue {
    collect(v, base_action, i_seq)
}

/// `(T ∘ ξ_I λ ∘ T^{-1})(u)`, computed directly from the Hodge-conjugated formula.
pub fn dual_lambda_action(i_seq: IndexSeq, u: &VermaVector) -> LambdaValue {
    collect(u, dual_base_action, i_seq)
}

/// The action of the basis element `t^j ξ_I`.
pub fn t_power_action(j: u32, i_seq: IndexSeq, v: &VermaVector) -> VermaVector {
    lambda_action(i_seq, v).t_power(j)
}

/// The action of an arbitrary element of `𝔤` through the closed-form λ-action.
pub fn act(a: &SuperElement, v: &VermaVector) -> VermaVector {
    let mut out = v.zero_like();
    let mut by_mono: BTreeMap<IndexSeq, LambdaValue> = BTreeMap::new();
    for (b, c) in a.terms.iter() {
        let value = by_mono.entry(b.mono).or_insert_with(|| lambda_action(b.mono, v));
        let image = value.coeff(b.tpow).scaled(&ExactScalar::from_int(factorial(b.tpow)));
        out.add_scaled(&image, c);
    }
    if !a.central.is_zero() {
        out.add_scaled(v, &(&a.central * &v.weight().mu_c));
    }
    out
}
