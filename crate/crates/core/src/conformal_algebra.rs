//! The conformal superalgebra `K_4 = ℂ[∂] ⊗ ⋀(4)`, its λ-bracket and n-products.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::exact::ExactScalar;
use crate::grassmann::{derive, parity_sign, product, IndexSeq};
use crate::linear::{binomial, factorial, Combination};
use crate::report::CheckReport;

/// The basis element `∂^dpow ξ_mono`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ConformalBasis {
    pub dpow: u32,
    pub mono: IndexSeq,
}

impl ConformalBasis {
    pub fn new(dpow: u32, mono: IndexSeq) -> Self {
        Self { dpow, mono }
    }

    pub fn is_odd(self) -> bool {
        self.mono.is_odd()
    }

    /// All `∂^k ξ_I` with `k ≤ max_dpow`.
    pub fn up_to(max_dpow: u32) -> Vec<ConformalBasis> {
        (0..=max_dpow).flat_map(|d| IndexSeq::all().map(move |m| ConformalBasis::new(d, m))).collect()
    }
}

impl fmt::Display for ConformalBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dpow {
            0 => write!(f, "ξ_{}", self.mono),
            1 => write!(f, "∂ξ_{}", self.mono),
            d => write!(f, "∂^{d}ξ_{}", self.mono),
        }
    }
}

/// A finite ℂ-combination of `∂^k ξ_I`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConformalElement(pub Combination<ConformalBasis>);

impl ConformalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(dpow: u32, mono: IndexSeq) -> Self {
        Self(Combination::single(ConformalBasis::new(dpow, mono), ExactScalar::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ConformalBasis, &ExactScalar)> {
        self.0.iter()
    }

    /// `∂^k` applied to the element.
    pub fn derivative(&self, k: u32) -> Self {
        Self(self.0.map_keys_signed(|b| Some((ConformalBasis::new(b.dpow + k, b.mono), 1))))
    }

    pub fn scaled(&self, c: &ExactScalar) -> Self {
        Self(self.0.scaled(c))
    }

    pub fn add(&mut self, other: &Self) {
        self.0.add_assign(&other.0);
    }

    pub fn add_scaled(&mut self, other: &Self, c: &ExactScalar) {
        self.0.add_scaled(&other.0, c);
    }

    pub fn sub(&mut self, other: &Self) {
        self.0.sub_assign(&other.0);
    }
}

impl fmt::Display for ConformalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(b, c)| format!("({c})·{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `[a λ b] = Σ_n λ^n X_n`, stored as the map `n ↦ X_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LambdaBracketValue {
    pub coeffs: BTreeMap<u32, ConformalElement>,
}

impl LambdaBracketValue {
    pub fn coeff(&self, n: u32) -> ConformalElement {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    /// Highest λ-power with a nonzero coefficient.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// `(a_(n) b) = n! · X_n`.
    pub fn n_product(&self, n: u32) -> ConformalElement {
        match self.coeffs.get(&n) {
            Some(x) => x.scaled(&ExactScalar::from_int(factorial(n))),
            None => ConformalElement::zero(),
        }
    }

    fn add_term(&mut self, lam: u32, key: ConformalBasis, c: ExactScalar) {
        let slot = self.coeffs.entry(lam).or_default();
        slot.0.add_term(key, c);
        if slot.is_zero() {
            self.coeffs.remove(&lam);
        }
    }
}

/// `[∂^p ξ_I λ ∂^q ξ_J]` as integer triples `(λ-power, basis, coefficient)`.
pub fn basis_lambda_bracket(a: ConformalBasis, b: ConformalBasis) -> Vec<(u32, ConformalBasis, i64)> {
    let (i, j) = (a.mono, b.mono);
    let li = i.len() as i64;
    let lj = j.len() as i64;
    // [ξ_I λ ξ_J] as (λ-power, ∂-power, monomial, coefficient).
    let mut base: Vec<(u32, u32, IndexSeq, i64)> = Vec::with_capacity(6);
    let ij = product(i, j);
    if !ij.is_zero() {
        base.push((0, 1, ij.seq, (li - 2) * ij.sign as i64));
        base.push((1, 0, ij.seq, (li + lj - 4) * ij.sign as i64));
    }
    let outer = parity_sign(i.len()) as i64;
    for k in 1..=4u8 {
        let di = derive(k, i);
        let dj = derive(k, j);
        if di.is_zero() || dj.is_zero() {
            continue;
        }
        let m = product(di.seq, dj.seq);
        if !m.is_zero() {
            base.push((0, 0, m.seq, outer * (di.sign * dj.sign * m.sign) as i64));
        }
    }
    // (-λ)^p (λ+∂)^q applied to the base bracket.
    let pref = if a.dpow % 2 == 0 { 1 } else { -1 };
    let mut out: BTreeMap<(u32, ConformalBasis), i64> = BTreeMap::new();
    for (lam, d, mono, c) in base {
        if c == 0 {
            continue;
        }
        for r in 0..=b.dpow {
            let key = (lam + a.dpow + b.dpow - r, ConformalBasis::new(d + r, mono));
            *out.entry(key).or_insert(0) += pref * c * binomial(b.dpow, r);
        }
    }
    out.into_iter().filter(|&(_, c)| c != 0).map(|((lam, key), c)| (lam, key, c)).collect()
}

/// The λ-bracket, extended bilinearly.
pub fn lambda_bracket(a: &ConformalElement, b: &ConformalElement) -> LambdaBracketValue {
    let mut out = LambdaBracketValue::default();
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            let cab = ca * cb;
            for (lam, key, c) in basis_lambda_bracket(*ka, *kb) {
                out.add_term(lam, key, cab.scale(c));
            }
        }
    }
    out
}

/// `(a_(n) b)`.
pub fn n_product(a: &ConformalElement, b: &ConformalElement, n: u32) -> ConformalElement {
    lambda_bracket(a, b).n_product(n)
}

/// Membership in the derived subalgebra: no `ξ_{1234}` term without a derivative.
pub fn in_derived(a: &ConformalElement) -> bool {
    a.terms().all(|(k, _)| !(k.dpow == 0 && k.mono == IndexSeq::TOP))
}

fn super_sign(a: ConformalBasis, b: ConformalBasis) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

fn int(n: i64) -> ExactScalar {
    ExactScalar::from_int(n)
}

/// Conformal linearity in both slots, on all basis pairs with `∂`-power `≤ max_dpow`.
fn check_linearity(basis: &[ConformalBasis]) -> CheckReport {
    let mut report = CheckReport::new("conformal linearity");
    for &a in basis {
        let ea = ConformalElement::basis(a.dpow, a.mono);
        let da = ea.derivative(1);
        for &b in basis {
            let eb = ConformalElement::basis(b.dpow, b.mono);
            let db = eb.derivative(1);
            let ab = lambda_bracket(&ea, &eb);
            let dab = lambda_bracket(&da, &eb);
            let adb = lambda_bracket(&ea, &db);
            let top = a.dpow + b.dpow + 3;
            for n in 0..=top {
                // (∂a_(n) b) = -n (a_(n-1) b)
                let mut expect = ConformalElement::zero();
                if n > 0 {
                    expect = ab.n_product(n - 1).scaled(&int(-(n as i64)));
                }
                let ok = dab.n_product(n) == expect;
                report.record(ok, || format!("(∂a_({n})b) with a={a}, b={b}"));
                // (a_(n) ∂b) = ∂(a_(n) b) + n (a_(n-1) b)
                let mut expect = ab.n_product(n).derivative(1);
                if n > 0 {
                    expect.add_scaled(&ab.n_product(n - 1), &int(n as i64));
                }
                let ok = adb.n_product(n) == expect;
                report.record(ok, || format!("(a_({n})∂b) with a={a}, b={b}"));
            }
        }
    }
    report
}

/// Skew-symmetry `(a_(n) b) = -(-1)^{p(a)p(b)} Σ_j (-1)^{j+n} ∂^j/j! (b_(n+j) a)`.
fn check_symmetry(basis: &[ConformalBasis]) -> CheckReport {
    let mut report = CheckReport::new("conformal symmetry");
    for &a in basis {
        let ea = ConformalElement::basis(a.dpow, a.mono);
        for &b in basis {
            let eb = ConformalElement::basis(b.dpow, b.mono);
            let ab = lambda_bracket(&ea, &eb);
            let ba = lambda_bracket(&eb, &ea);
            let top = a.dpow + b.dpow + 2;
            for n in 0..=top {
                let mut rhs = ConformalElement::zero();
                for j in 0..=(top - n) {
                    let sign = -super_sign(a, b) * if (j + n) % 2 == 0 { 1 } else { -1 };
                    let coeff = ExactScalar::from_ratio(sign, factorial(j)).expect("nonzero factorial");
                    rhs.add_scaled(&ba.n_product(n + j).derivative(j), &coeff);
                }
                let ok = ab.n_product(n) == rhs;
                report.record(ok, || format!("symmetry at n={n} with a={a}, b={b}"));
            }
        }
    }
    report
}

/// The Jacobi identity
/// `(a_(m)(b_(n)c)) = Σ_j C(m,j) ((a_(j)b)_(m+n-j) c) + (-1)^{p(a)p(b)} (b_(n)(a_(m)c))`
/// for a single basis triple, all `m, n` at which any term can be nonzero.
fn jacobi_triple(a: ConformalBasis, b: ConformalBasis, c: ConformalBasis, report: &mut CheckReport) {
    let ea = ConformalElement::basis(a.dpow, a.mono);
    let eb = ConformalElement::basis(b.dpow, b.mono);
    let ec = ConformalElement::basis(c.dpow, c.mono);
    let top = a.dpow + b.dpow + c.dpow + 2;
    let bc = lambda_bracket(&eb, &ec);
    let ac = lambda_bracket(&ea, &ec);
    let ab = lambda_bracket(&ea, &eb);
    let a_bc: Vec<LambdaBracketValue> = (0..=top).map(|n| lambda_bracket(&ea, &bc.n_product(n))).collect();
    let b_ac: Vec<LambdaBracketValue> = (0..=top).map(|m| lambda_bracket(&eb, &ac.n_product(m))).collect();
    let ab_c: Vec<LambdaBracketValue> = (0..=top).map(|j| lambda_bracket(&ab.n_product(j), &ec)).collect();
    let s = int(super_sign(a, b));
    for m in 0..=top {
        for n in 0..=top {
            let lhs = a_bc[n as usize].n_product(m);
            let mut rhs = b_ac[m as usize].n_product(n).scaled(&s);
            for j in 0..=m {
                rhs.add_scaled(&ab_c[j as usize].n_product(m + n - j), &int(binomial(m, j)));
            }
            report.record(lhs == rhs, || format!("Jacobi at (m,n)=({m},{n}) with a={a}, b={b}, c={c}"));
        }
    }
}

fn check_jacobi(basis: &[ConformalBasis]) -> CheckReport {
    let parts: Vec<CheckReport> = basis
        .par_iter()
        .map(|&a| {
            let mut report = CheckReport::new("conformal Jacobi");
            for &b in basis {
                for &c in basis {
                    jacobi_triple(a, b, c, &mut report);
                }
            }
            report
        })
        .collect();
    let mut report = CheckReport::new("conformal Jacobi");
    for p in parts {
        report.merge(p);
    }
    report
}

/// λ-degree of `[ξ_I λ ξ_J]` is at most one.
fn check_locality() -> CheckReport {
    let mut report = CheckReport::new("locality of basis brackets");
    for i in IndexSeq::all() {
        for j in IndexSeq::all() {
            let v = lambda_bracket(&ConformalElement::basis(0, i), &ConformalElement::basis(0, j));
            report
                .record(v.degree().map_or(true, |d| d <= 1), || format!("[ξ_{i} λ ξ_{j}] has degree {:?}", v.degree()));
        }
    }
    report
}

/// Every n-product of two basis elements of `K'_4` stays in `K'_4`.
fn check_derived_closure(basis: &[ConformalBasis]) -> CheckReport {
    let mut report = CheckReport::new("derived subalgebra closure");
    let derived: Vec<_> = basis.iter().filter(|k| !(k.dpow == 0 && k.mono == IndexSeq::TOP)).collect();
    for a in &derived {
        for b in &derived {
            let v = lambda_bracket(&ConformalElement::basis(a.dpow, a.mono), &ConformalElement::basis(b.dpow, b.mono));
            for n in v.coeffs.keys() {
                let x = v.n_product(*n);
                report.record(in_derived(&x), || format!("({a}_({n}){b}) = {x}"));
            }
        }
    }
    report
}

/// Verify the conformal superalgebra axioms on all basis pairs and triples with `∂`-power
/// at most `max_check_degree`.
pub fn check_conformal_axioms(max_check_degree: u32) -> Vec<CheckReport> {
    let basis = ConformalBasis::up_to(max_check_degree);
    vec![
        check_locality(),
        check_linearity(&basis),
        check_symmetry(&basis),
        check_jacobi(&basis),
        check_derived_closure(&basis),
    ]
}
