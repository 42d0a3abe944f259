//! The Lie superalgebra `𝔤 = K(1,4)_+ ⊕ ℂC`: graded bracket, 2-cocycle, grading, and the
//! `Lie K'_4` presentation with its quotient map onto `K(1,4)_+`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::conformal_algebra::{lambda_bracket, ConformalElement};
use crate::exact::{ExactMatrix, ExactScalar};
use crate::grassmann::{derive, parity_sign, product, IndexSeq};
use crate::linear::{binomial, Combination};
use crate::report::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnnihilationError {
    #[error("ξ_1234 without a derivative lies outside K'_4")]
    NotInDerived,
}

/// The basis element `t^tpow ξ_mono` of `K(1,4)_+`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SuperBasis {
    pub tpow: u32,
    pub mono: IndexSeq,
}

impl SuperBasis {
    pub fn new(tpow: u32, mono: IndexSeq) -> Self {
        Self { tpow, mono }
    }

    pub fn degree(self) -> i32 {
        2 * self.tpow as i32 + self.mono.len() as i32 - 2
    }

    pub fn is_odd(self) -> bool {
        self.mono.is_odd()
    }

    /// All basis elements with `t`-power at most `max_tpow`.
    pub fn up_to(max_tpow: u32) -> Vec<SuperBasis> {
        (0..=max_tpow).flat_map(|m| IndexSeq::all().map(move |i| SuperBasis::new(m, i))).collect()
    }

    /// All basis elements of a given degree (finitely many).
    pub fn of_degree(degree: i32) -> Vec<SuperBasis> {
        if degree < -2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for len in 0..=4i32 {
            let twice_m = degree + 2 - len;
            if twice_m >= 0 && twice_m % 2 == 0 {
                out.extend(IndexSeq::of_len(len as usize).map(|i| SuperBasis::new((twice_m / 2) as u32, i)));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for SuperBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tpow {
            0 => write!(f, "ξ_{}", self.mono),
            1 => write!(f, "tξ_{}", self.mono),
            m => write!(f, "t^{m}ξ_{}", self.mono),
        }
    }
}

/// An element of `K(1,4)_+ ⊕ ℂC`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperElement {
    pub terms: Combination<SuperBasis>,
    pub central: ExactScalar,
}

/// The degree of an element, if it is homogeneous.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Grading {
    Zero,
    Degree(i32),
    Mixed,
}

impl SuperElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(tpow: u32, mono: IndexSeq) -> Self {
        Self::from_basis(SuperBasis::new(tpow, mono))
    }

    pub fn from_basis(b: SuperBasis) -> Self {
        Self { terms: Combination::single(b, ExactScalar::one()), central: ExactScalar::zero() }
    }

    /// `ξ_I` for a raw index list, which must be strictly increasing.
    pub fn xi(raw: &[u8]) -> Self {
        Self::basis(0, IndexSeq::from_indices(raw).expect("valid index list"))
    }

    pub fn central_element() -> Self {
        Self { terms: Combination::new(), central: ExactScalar::one() }
    }

    /// The grading element `t = t ξ_∅`.
    pub fn t() -> Self {
        Self::basis(1, IndexSeq::EMPTY)
    }

    /// `Θ = -½ ξ_∅`.
    pub fn theta() -> Self {
        Self::basis(0, IndexSeq::EMPTY).scaled(&ExactScalar::from_ratio(-1, 2).expect("nonzero"))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero() && self.central.is_zero()
    }

    pub fn scaled(&self, c: &ExactScalar) -> Self {
        Self { terms: self.terms.scaled(c), central: &self.central * c }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &ExactScalar::one());
        out
    }

    pub fn add_scaled(&mut self, other: &Self, c: &ExactScalar) {
        self.terms.add_scaled(&other.terms, c);
        self.central += &other.central * c;
    }

    /// The same element with the central part dropped.
    pub fn without_central(&self) -> Self {
        Self { terms: self.terms.clone(), central: ExactScalar::zero() }
    }

    pub fn grade(&self) -> Grading {
        let mut degrees = self.terms.keys().map(|b| b.degree());
        let first = match degrees.next() {
            Some(d) => d,
            None if self.central.is_zero() => return Grading::Zero,
            None => return Grading::Degree(0),
        };
        if degrees.any(|d| d != first) || (!self.central.is_zero() && first != 0) {
            Grading::Mixed
        } else {
            Grading::Degree(first)
        }
    }
}

impl fmt::Display for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("({c})·{b}")).collect();
        if !self.central.is_zero() {
            parts.push(format!("({})·C", self.central));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The 2-cocycle defining the central extension, given by its two nonzero values
/// `ψ(1, ξ_1234)` and `ψ(ξ_i, ∂_i ξ_1234)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub unit_top: i64,
    pub odd_pair: i64,
}

impl Cocycle {
    pub const STANDARD: Cocycle = Cocycle { unit_top: -2, odd_pair: -1 };

    /// A deliberately inconsistent cocycle, used as a negative control.
    pub fn corrupted() -> Self {
        Cocycle { unit_top: -2, odd_pair: 1 }
    }

    /// `ψ(a, b)` on basis elements, extended super-skew-symmetrically.
    pub fn eval(&self, a: SuperBasis, b: SuperBasis) -> i64 {
        if a.tpow != 0 || b.tpow != 0 || a.mono.len() + b.mono.len() != 4 || a.mono.intersects(b.mono) {
            return 0;
        }
        match (a.mono.len(), b.mono.len()) {
            (0, 4) => self.unit_top,
            (4, 0) => -self.unit_top,
            // ψ(ξ_i, s ξ_{i^c}) = odd_pair with ∂_i ξ_1234 = s ξ_{i^c}; both odd, so symmetric.
            (1, 3) | (3, 1) => {
                let i = if a.mono.len() == 1 { a.mono } else { b.mono };
                let idx = i.indices().next().expect("one index");
                self.odd_pair * derive(idx, IndexSeq::TOP).sign as i64
            }
            _ => 0,
        }
    }
}

impl Default for Cocycle {
    fn default() -> Self {
        Self::STANDARD
    }
}

/// Bracket of basis elements: the `K(1,4)_+` part as integer terms, plus the central coefficient.
pub fn basis_bracket(a: SuperBasis, b: SuperBasis, cocycle: &Cocycle) -> (Vec<(SuperBasis, i64)>, i64) {
    let (m, n) = (a.tpow as i64, b.tpow as i64);
    let (li, lj) = (a.mono.len() as i64, b.mono.len() as i64);
    let mut out: Vec<(SuperBasis, i64)> = Vec::with_capacity(5);
    if m + n >= 1 {
        let ij = product(a.mono, b.mono);
        let c = 2 * n - 2 * m - n * li + m * lj;
        if !ij.is_zero() && c != 0 {
            out.push((SuperBasis::new((m + n - 1) as u32, ij.seq), c * ij.sign as i64));
        }
    }
    let outer = parity_sign(a.mono.len()) as i64;
    for k in 1..=4u8 {
        let di = derive(k, a.mono);
        let dj = derive(k, b.mono);
        if di.is_zero() || dj.is_zero() {
            continue;
        }
        let p = product(di.seq, dj.seq);
        if !p.is_zero() {
            out.push((SuperBasis::new((m + n) as u32, p.seq), outer * (di.sign * dj.sign * p.sign) as i64));
        }
    }
    (out, cocycle.eval(a, b))
}

/// The superbracket on `𝔤` with a chosen cocycle.
pub fn bracket_with(a: &SuperElement, b: &SuperElement, cocycle: &Cocycle) -> SuperElement {
    let mut out = SuperElement::zero();
    for (ka, ca) in a.terms.iter() {
        for (kb, cb) in b.terms.iter() {
            let cab = ca * cb;
            let (terms, central) = basis_bracket(*ka, *kb, cocycle);
            for (k, c) in terms {
                out.terms.add_term(k, cab.scale(c));
            }
            if central != 0 {
                out.central += cab.scale(central);
            }
        }
    }
    out
}

/// The superbracket on `𝔤 = K(1,4)_+ ⊕ ℂC`.
pub fn bracket(a: &SuperElement, b: &SuperElement) -> SuperElement {
    bracket_with(a, b, &Cocycle::STANDARD)
}

fn basis_pair_sign(a: SuperBasis, b: SuperBasis) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

/// Super-skew-symmetry of `ψ` and the 2-cocycle identity
/// `ψ(a,[b,c]) = ψ([a,b],c) + (-1)^{p(a)p(b)} ψ(b,[a,c])` on basis triples.
pub fn check_cocycle(max_tpow: u32) -> Vec<CheckReport> {
    let psi = Cocycle::STANDARD;
    let basis = SuperBasis::up_to(max_tpow);
    let mut skew = CheckReport::new("cocycle skew-symmetry");
    for &a in &basis {
        for &b in &basis {
            let ok = psi.eval(a, b) == -basis_pair_sign(a, b) * psi.eval(b, a);
            skew.record(ok, || format!("ψ({a},{b}) vs ψ({b},{a})"));
        }
    }
    let psi_on = |x: SuperBasis, y: &SuperElement| -> ExactScalar {
        y.terms.iter().map(|(k, c)| c.scale(psi.eval(x, *k))).sum()
    };
    let psi_left = |x: &SuperElement, y: SuperBasis| -> ExactScalar {
        x.terms.iter().map(|(k, c)| c.scale(psi.eval(*k, y))).sum()
    };
    let mut identity = CheckReport::new("cocycle identity");
    for &a in &basis {
        let ea = SuperElement::from_basis(a);
        for &b in &basis {
            let eb = SuperElement::from_basis(b);
            let ab = bracket(&ea, &eb);
            for &c in &basis {
                let ec = SuperElement::from_basis(c);
                let bc = bracket(&eb, &ec);
                let ac = bracket(&ea, &ec);
                let lhs = psi_on(a, &bc);
                let rhs = psi_left(&ab, c) + psi_on(b, &ac).scale(basis_pair_sign(a, b));
                identity.record(lhs == rhs, || format!("cocycle identity on ({a},{b},{c})"));
            }
        }
    }
    vec![skew, identity]
}

/// The super-Jacobi identity `[a,[b,c]] = [[a,b],c] + (-1)^{p(a)p(b)} [b,[a,c]]` on all
/// basis triples with `t`-power at most `max_tpow`, the central element included.
pub fn check_jacobi_with(max_tpow: u32, cocycle: &Cocycle) -> CheckReport {
    let mut basis: Vec<(String, SuperElement, bool)> = SuperBasis::up_to(max_tpow)
        .into_iter()
        .map(|b| (b.to_string(), SuperElement::from_basis(b), b.is_odd()))
        .collect();
    basis.push(("C".to_string(), SuperElement::central_element(), false));
    let br = |x: &SuperElement, y: &SuperElement| bracket_with(x, y, cocycle);
    let mut report = CheckReport::new("super-Jacobi");
    for (na, a, pa) in &basis {
        for (nb, b, pb) in &basis {
            let ab = br(a, b);
            let sign = ExactScalar::from_int(if *pa && *pb { -1 } else { 1 });
            for (nc, c, _) in &basis {
                let lhs = br(a, &br(b, c));
                let mut rhs = br(&ab, c);
                rhs.add_scaled(&br(b, &br(a, c)), &sign);
                report.record(lhs == rhs, || format!("({na}, {nb}, {nc}): {lhs} ≠ {rhs}"));
            }
        }
    }
    report
}

pub fn check_jacobi(max_tpow: u32) -> CheckReport {
    check_jacobi_with(max_tpow, &Cocycle::STANDARD)
}

/// Basis of `Lie K'_4`: `ξ_I y^m` with `I ≠ 1234`, and `∂ξ_1234 y^m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum LieK4Basis {
    Xi { mono: IndexSeq, ypow: u32 },
    DTop { ypow: u32 },
}

impl LieK4Basis {
    pub fn up_to(max_ypow: u32) -> Vec<LieK4Basis> {
        let mut out = Vec::new();
        for ypow in 0..=max_ypow {
            out.extend(IndexSeq::all().filter(|&m| m != IndexSeq::TOP).map(|mono| LieK4Basis::Xi { mono, ypow }));
            out.push(LieK4Basis::DTop { ypow });
        }
        out
    }

    fn ypow(self) -> u32 {
        match self {
            LieK4Basis::Xi { ypow, .. } | LieK4Basis::DTop { ypow } => ypow,
        }
    }

    fn conformal(self) -> ConformalElement {
        match self {
            LieK4Basis::Xi { mono, .. } => ConformalElement::basis(0, mono),
            LieK4Basis::DTop { .. } => ConformalElement::basis(1, IndexSeq::TOP),
        }
    }
}

impl fmt::Display for LieK4Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieK4Basis::Xi { mono, ypow } => write!(f, "ξ_{mono}y^{ypow}"),
            LieK4Basis::DTop { ypow } => write!(f, "∂ξ_1234y^{ypow}"),
        }
    }
}

pub type LieK4Element = Combination<LieK4Basis>;

/// `∂^p ξ_K y^k` rewritten in the basis, using `∂x y^k = -k x y^{k-1}` and keeping a single
/// derivative on `ξ_1234`.
fn reduce_lie(dpow: u32, mono: IndexSeq, k: u32) -> Result<Option<(LieK4Basis, i64)>, AnnihilationError> {
    let falling = |steps: u32| -> i64 { (0..steps).map(|s| k as i64 - s as i64).product() };
    let sign = |steps: u32| -> i64 {
        if steps % 2 == 0 {
            1
        } else {
            -1
        }
    };
    if mono != IndexSeq::TOP {
        if dpow > k {
            return Ok(None);
        }
        return Ok(Some((LieK4Basis::Xi { mono, ypow: k - dpow }, sign(dpow) * falling(dpow))));
    }
    if dpow == 0 {
        return Err(AnnihilationError::NotInDerived);
    }
    let steps = dpow - 1;
    if steps > k {
        return Ok(None);
    }
    Ok(Some((LieK4Basis::DTop { ypow: k - steps }, sign(steps) * falling(steps))))
}

/// `[a y^m, b y^n] = Σ_j C(m,j) (a_(j) b) y^{m+n-j}` on `Lie K'_4`.
pub fn lie_bracket_k4(a: &LieK4Element, b: &LieK4Element) -> Result<LieK4Element, AnnihilationError> {
    let mut out = LieK4Element::new();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            let cab = ca * cb;
            let (m, n) = (ka.ypow(), kb.ypow());
            let lb = lambda_bracket(&ka.conformal(), &kb.conformal());
            for j in 0..=m {
                let prod = lb.n_product(j);
                let weight = cab.scale(binomial(m, j));
                for (key, c) in prod.terms() {
                    if let Some((basis, s)) = reduce_lie(key.dpow, key.mono, m + n - j)? {
                        out.add_term(basis, (c * &weight).scale(s));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The quotient map `Lie K'_4 → K(1,4)_+`: `ξ_I y^m ↦ t^m ξ_I`, `∂ξ_1234 y^m ↦ -m t^{m-1} ξ_1234`.
pub fn phi(a: &LieK4Element) -> SuperElement {
    phi_impl(a, false)
}

/// The lift of [`phi`] into the central extension, sending `∂ξ_1234 y^0` to `C`.
pub fn phi_central(a: &LieK4Element) -> SuperElement {
    phi_impl(a, true)
}

fn phi_impl(a: &LieK4Element, central: bool) -> SuperElement {
    let mut out = SuperElement::zero();
    for (k, c) in a.iter() {
        match *k {
            LieK4Basis::Xi { mono, ypow } => out.terms.add_term(SuperBasis::new(ypow, mono), c.clone()),
            LieK4Basis::DTop { ypow: 0 } => {
                if central {
                    out.central += c;
                }
            }
            LieK4Basis::DTop { ypow } => {
                out.terms.add_term(SuperBasis::new(ypow - 1, IndexSeq::TOP), c.scale(-(ypow as i64)));
            }
        }
    }
    out
}

/// Morphism property of `φ` (and of its central lift), its kernel, and centrality of
/// `∂ξ_1234 y^0`, on all basis elements with `y`-power at most `max_ypow`.
pub fn check_phi(max_ypow: u32) -> Vec<CheckReport> {
    let basis = LieK4Basis::up_to(max_ypow);
    let elems: Vec<LieK4Element> = basis.iter().map(|&b| LieK4Element::single(b, ExactScalar::one())).collect();
    let mut morphism = CheckReport::new("φ is a morphism modulo C");
    let mut lifted = CheckReport::new("central lift of φ is a morphism");
    let mut central = CheckReport::new("∂ξ_1234 y^0 is central");
    let dtop = LieK4Element::single(LieK4Basis::DTop { ypow: 0 }, ExactScalar::one());
    for (x, kx) in elems.iter().zip(&basis) {
        for (y, ky) in elems.iter().zip(&basis) {
            let xy = lie_bracket_k4(x, y);
            let (ok_plain, ok_lift) = match &xy {
                Ok(xy) => (
                    phi(xy).terms == bracket(&phi(x), &phi(y)).terms,
                    phi_central(xy) == bracket(&phi_central(x), &phi_central(y)),
                ),
                Err(_) => (false, false),
            };
            morphism.record(ok_plain, || format!("φ([{kx},{ky}])"));
            lifted.record(ok_lift, || format!("φ̂([{kx},{ky}])"));
        }
        let ok = matches!(lie_bracket_k4(&dtop, x), Ok(z) if z.is_zero())
            && matches!(lie_bracket_k4(x, &dtop), Ok(z) if z.is_zero());
        central.record(ok, || format!("[∂ξ_1234 y^0, {kx}] ≠ 0"));
    }
    // Kernel: the matrix of φ from the basis up to max_ypow into the K(1,4)_+ coordinates.
    let mut targets: Vec<SuperBasis> = SuperBasis::up_to(max_ypow);
    targets.sort();
    let mut matrix = ExactMatrix::zeros(targets.len(), basis.len());
    for (col, e) in elems.iter().enumerate() {
        for (k, c) in phi(e).terms.iter() {
            let row = targets.binary_search(k).expect("image within t-power bound");
            matrix.set(row, col, c.clone());
        }
    }
    let mut kernel = CheckReport::new("kernel of φ is spanned by ∂ξ_1234 y^0");
    let null = matrix.nullspace();
    let dtop_col = basis.iter().position(|b| *b == LieK4Basis::DTop { ypow: 0 }).expect("present");
    let ok = null.len() == 1
        && null[0].iter().enumerate().all(|(k, x)| if k == dtop_col { x.is_one() } else { x.is_zero() });
    kernel.record(ok, || format!("kernel has dimension {}", null.len()));
    // Every target except t^{max_ypow} ξ_1234, whose preimage ∂ξ_1234 y^{max_ypow+1} is out of range.
    let mut onto = CheckReport::new("φ is onto lower t-powers");
    let rank = matrix.rank();
    onto.record(rank == targets.len() - 1 && rank == basis.len() - 1, || format!("rank {rank}"));
    vec![morphism, lifted, central, kernel, onto]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(raw: &[u8]) -> IndexSeq {
        IndexSeq::from_indices(raw).unwrap()
    }

    fn int(n: i64) -> ExactScalar {
        ExactScalar::from_int(n)
    }

    #[test]
    fn t_acts_by_degree() {
        for b in SuperBasis::up_to(3) {
            let x = SuperElement::from_basis(b);
            assert_eq!(bracket(&SuperElement::t(), &x), x.scaled(&int(b.degree() as i64)), "{b}");
        }
    }

    #[test]
    fn generator_squares_to_minus_one() {
        let x = SuperElement::xi(&[1]);
        assert_eq!(bracket(&x, &x), SuperElement::xi(&[]).scaled(&int(-1)));
    }

    #[test]
    fn central_terms() {
        assert_eq!(
            bracket(&SuperElement::xi(&[1]), &SuperElement::xi(&[2, 3, 4])),
            SuperElement::central_element().scaled(&int(-1))
        );
        assert_eq!(bracket(&SuperElement::theta(), &SuperElement::xi(&[1, 2, 3, 4])), SuperElement::central_element());
    }

    #[test]
    fn cocycle_values() {
        let psi = Cocycle::STANDARD;
        let b = |raw: &[u8]| SuperBasis::new(0, seq(raw));
        assert_eq!(psi.eval(b(&[2, 3, 4]), b(&[1])), -1);
        assert_eq!(psi.eval(b(&[1]), b(&[2, 3, 4])), -1);
        assert_eq!(psi.eval(b(&[]), b(&[1, 2, 3, 4])), -2);
        assert_eq!(psi.eval(b(&[1, 2]), b(&[3, 4])), 0);
        assert_eq!(psi.eval(b(&[1]), b(&[1, 3, 4])), 0);
    }

    #[test]
    fn theta_lowers_t_power() {
        for b in SuperBasis::up_to(3) {
            let lhs = bracket(&SuperElement::theta(), &SuperElement::basis(b.tpow + 1, b.mono));
            assert_eq!(lhs, SuperElement::from_basis(b).scaled(&int(-(b.tpow as i64 + 1))), "{b}");
        }
    }

    #[test]
    fn grading() {
        assert_eq!(SuperElement::t().grade(), Grading::Degree(0));
        assert_eq!(SuperElement::xi(&[1]).grade(), Grading::Degree(-1));
        assert_eq!(SuperElement::theta().grade(), Grading::Degree(-2));
        assert_eq!(SuperElement::xi(&[1]).plus(&SuperElement::t()).grade(), Grading::Mixed);
        assert_eq!(SuperElement::central_element().grade(), Grading::Degree(0));
        assert_eq!(SuperElement::zero().grade(), Grading::Zero);
    }

    #[test]
    fn of_degree_lists_graded_pieces() {
        assert_eq!(SuperBasis::of_degree(-2), vec![SuperBasis::new(0, IndexSeq::EMPTY)]);
        assert_eq!(SuperBasis::of_degree(-1).len(), 4);
        // degree 0: t, ξ_ij
        assert_eq!(SuperBasis::of_degree(0).len(), 7);
        assert!(SuperBasis::of_degree(-3).is_empty());
        for d in -2..6 {
            assert!(SuperBasis::of_degree(d).iter().all(|b| b.degree() == d));
        }
    }

    #[test]
    fn jacobi_examples() {
        let a = SuperElement::xi(&[1]);
        let b = SuperElement::xi(&[2]);
        let c = SuperElement::basis(2, seq(&[3, 4]));
        let lhs = bracket(&a, &bracket(&b, &c));
        let mut rhs = bracket(&bracket(&a, &b), &c);
        rhs.add_scaled(&bracket(&b, &bracket(&a, &c)), &int(-1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_and_cocycle_at_low_t_power() {
        assert!(check_jacobi(1).passed());
        for r in check_cocycle(1) {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn corrupted_cocycle_breaks_jacobi() {
        let r = check_jacobi_with(0, &Cocycle::corrupted());
        assert!(!r.passed());
        assert!(r.first_counterexample.is_some());
    }

    #[test]
    fn phi_examples() {
        let dtop = LieK4Element::single(LieK4Basis::DTop { ypow: 0 }, ExactScalar::one());
        assert!(phi(&dtop).is_zero());
        let a = LieK4Element::single(LieK4Basis::Xi { mono: seq(&[1]), ypow: 1 }, ExactScalar::one());
        let b = LieK4Element::single(LieK4Basis::Xi { mono: seq(&[2]), ypow: 0 }, ExactScalar::one());
        let lhs = phi(&lie_bracket_k4(&a, &b).unwrap());
        assert_eq!(lhs.terms, bracket(&phi(&a), &phi(&b)).terms);
        for r in check_phi(1) {
            assert!(r.passed(), "{r:?}");
        }
    }
}
