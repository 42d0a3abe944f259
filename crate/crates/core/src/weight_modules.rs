//! Irreducible `𝔤_0`-modules `F(m, n, μ_t, μ_C)` realized on bihomogeneous polynomials.
//!
//! The monomial `x_1^a x_2^{m-a} y_1^b y_2^{n-b}` is keyed by `(a, b)`.
//! `𝔰𝔬(4)` acts through the two commuting `𝔰𝔩_2` copies
//! `e_x = x_1∂_{x_2}`, `f_x = x_2∂_{x_1}`, `h_x = x_1∂_{x_1} - x_2∂_{x_2}` (and likewise in `y`),
//! and every `ξ_ij` is rewritten in that basis by a fixed 6×6 change of basis.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::annihilation::SuperElement;
use crate::exact::{ExactError, ExactMatrix, ExactScalar};
use crate::grassmann::IndexSeq;
use crate::linear::{factorial, Combination};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("{0} is not in 𝔤_0")]
    NotInG0(String),
    #[error("monomial exponents ({a},{b}) out of range for weight ({m},{n})")]
    OutOfRange { a: u32, b: u32, m: u32, n: u32 },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("expected four weight components `m n mu_t mu_c`, got `{0}`")]
    Parse(String),
}

/// A highest weight `(m, n, μ_t, μ_C)` with respect to `h_x, h_y, t, C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HighestWeight {
    pub m: u32,
    pub n: u32,
    pub mu_t: ExactScalar,
    pub mu_c: ExactScalar,
}

impl HighestWeight {
    pub fn new(m: u32, n: u32, mu_t: ExactScalar, mu_c: ExactScalar) -> Self {
        Self { m, n, mu_t, mu_c }
    }

    /// A weight with rational `μ_t = t_num/t_den` and `μ_C = c_num/c_den`.
    pub fn rational(m: u32, n: u32, t: (i64, i64), c: (i64, i64)) -> Result<Self, ExactError> {
        Ok(Self::new(m, n, ExactScalar::from_ratio(t.0, t.1)?, ExactScalar::from_ratio(c.0, c.1)?))
    }

    pub fn dim(&self) -> usize {
        ((self.m + 1) * (self.n + 1)) as usize
    }

    /// Monomial keys `(a, b)` in increasing order.
    pub fn monomials(&self) -> impl Iterator<Item = (u32, u32)> {
        let n = self.n;
        (0..=self.m).flat_map(move |a| (0..=n).map(move |b| (a, b)))
    }

    /// The four components as display strings, rationals written `p/q`.
    pub fn components(&self) -> [String; 4] {
        [self.m.to_string(), self.n.to_string(), self.mu_t.to_string(), self.mu_c.to_string()]
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.m, self.n, self.mu_t, self.mu_c)
    }
}

/// Parses `m n mu_t mu_c` or `(m,n,mu_t,mu_c)`.
impl FromStr for HighestWeight {
    type Err = WeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> =
            cleaned.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect();
        let [m, n, t, c] = parts.as_slice() else {
            return Err(WeightError::Parse(s.to_string()));
        };
        let m = m.parse().map_err(|_| WeightError::Parse(s.to_string()))?;
        let n = n.parse().map_err(|_| WeightError::Parse(s.to_string()))?;
        Ok(Self::new(m, n, t.parse()?, c.parse()?))
    }
}

/// Monomial key `(a, b)` for `x_1^a x_2^{m-a} y_1^b y_2^{n-b}`.
pub type MonoKey = (u32, u32);

/// An element of `F(m, n, μ_t, μ_C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub weight: HighestWeight,
    pub coeffs: Combination<MonoKey>,
}

impl WeightVector {
    pub fn zero(weight: &HighestWeight) -> Self {
        Self { weight: weight.clone(), coeffs: Combination::new() }
    }

    pub fn monomial(weight: &HighestWeight, key: MonoKey) -> Result<Self, WeightError> {
        check_key(weight, key)?;
        Ok(Self { weight: weight.clone(), coeffs: Combination::single(key, ExactScalar::one()) })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }
}

fn check_key(w: &HighestWeight, (a, b): MonoKey) -> Result<(), WeightError> {
    if a > w.m || b > w.n {
        return Err(WeightError::OutOfRange { a, b, m: w.m, n: w.n });
    }
    Ok(())
}

/// The highest weight vector `x_1^m y_1^n`.
pub fn hwv(weight: &HighestWeight) -> WeightVector {
    WeightVector { weight: weight.clone(), coeffs: Combination::single((weight.m, weight.n), ExactScalar::one()) }
}

/// `(p, q, s)` with `x_1^{m-p} x_2^p y_1^{n-q} y_2^q = (1/s) f_x^p f_y^q (x_1^m y_1^n)`.
pub fn lowering_word(weight: &HighestWeight, (a, b): MonoKey) -> Result<(u32, u32, ExactScalar), WeightError> {
    check_key(weight, (a, b))?;
    let s = ExactScalar::from_int(factorial(weight.m) / factorial(a))
        * ExactScalar::from_int(factorial(weight.n) / factorial(b));
    Ok((weight.m - a, weight.n - b, s))
}

/// The six `𝔰𝔩_2 × 𝔰𝔩_2` generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sl2Generator {
    Hx,
    Hy,
    Ex,
    Ey,
    Fx,
    Fy,
}

impl Sl2Generator {
    pub const ALL: [Sl2Generator; 6] = [Self::Hx, Self::Hy, Self::Ex, Self::Ey, Self::Fx, Self::Fy];

    /// The generator as a combination of `ξ_12, ξ_13, ξ_14, ξ_23, ξ_24, ξ_34`.
    pub fn element(self) -> SuperElement {
        let i = ExactScalar::i();
        let half = ExactScalar::from_ratio(1, 2).expect("nonzero");
        let ihalf = &i * &half;
        // Coefficients on ξ_12, ξ_13, ξ_14, ξ_23, ξ_24, ξ_34.
        let coeffs: [ExactScalar; 6] = match self {
            Self::Hx => [-&i, z(), z(), z(), z(), i.clone()],
            Self::Hy => [-&i, z(), z(), z(), z(), -&i],
            Self::Ex => [z(), -&half, -&ihalf, ihalf.clone(), -&half, z()],
            Self::Ey => [z(), -&half, ihalf.clone(), ihalf.clone(), half.clone(), z()],
            Self::Fx => [z(), half.clone(), -&ihalf, ihalf.clone(), half.clone(), z()],
            Self::Fy => [z(), half.clone(), ihalf.clone(), ihalf.clone(), -&half, z()],
        };
        let mut out = SuperElement::zero();
        for (pair, c) in so4_pairs().into_iter().zip(coeffs) {
            out.terms.add_term(crate::annihilation::SuperBasis::new(0, pair), c);
        }
        out
    }

    /// Action on a monomial: the image is a single monomial times an integer.
    pub fn act_monomial(self, weight: &HighestWeight, (a, b): MonoKey) -> Option<(MonoKey, i64)> {
        let (m, n) = (weight.m, weight.n);
        let out = match self {
            Self::Hx => ((a, b), 2 * a as i64 - m as i64),
            Self::Hy => ((a, b), 2 * b as i64 - n as i64),
            Self::Ex if a < m => ((a + 1, b), (m - a) as i64),
            Self::Ey if b < n => ((a, b + 1), (n - b) as i64),
            Self::Fx if a > 0 => ((a - 1, b), a as i64),
            Self::Fy if b > 0 => ((a, b - 1), b as i64),
            _ => return None,
        };
        (out.1 != 0).then_some(out)
    }
}

fn z() -> ExactScalar {
    ExactScalar::zero()
}

/// `ξ_12, ξ_13, ξ_14, ξ_23, ξ_24, ξ_34`.
pub fn so4_pairs() -> [IndexSeq; 6] {
    let p = |i: u8, j: u8| IndexSeq::single(i).with(j);
    [p(1, 2), p(1, 3), p(1, 4), p(2, 3), p(2, 4), p(3, 4)]
}

/// `e_1 = e_x + e_y = -ξ_13 + iξ_23`.
pub fn e1() -> SuperElement {
    Sl2Generator::Ex.element().plus(&Sl2Generator::Ey.element())
}

/// `e_2 = e_x - e_y = -ξ_24 - iξ_14`.
pub fn e2() -> SuperElement {
    let mut out = Sl2Generator::Ex.element();
    out.add_scaled(&Sl2Generator::Ey.element(), &ExactScalar::from_int(-1));
    out
}

/// `ξ_ij = Σ_g c_g · g` over the six `𝔰𝔩_2` generators, for each pair in [`so4_pairs`] order.
fn change_of_basis() -> &'static [[ExactScalar; 6]; 6] {
    static TABLE: OnceLock<[[ExactScalar; 6]; 6]> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Rows: generators; columns: ξ-pairs.
        let pairs = so4_pairs();
        let rows: Vec<Vec<ExactScalar>> = Sl2Generator::ALL
            .iter()
            .map(|g| {
                let e = g.element();
                pairs.iter().map(|&p| e.terms.coeff(&crate::annihilation::SuperBasis::new(0, p))).collect()
            })
            .collect();
        let forward = ExactMatrix::from_dense(rows).expect("square");
        let inverse = forward.inverse().expect("the six generators form a basis of 𝔰𝔬(4)");
        // generator = Σ_p forward[g][p] ξ_p, so ξ_p = Σ_g inverse[p][g] generator_g.
        std::array::from_fn(|p| std::array::from_fn(|g| inverse.get(p, g)))
    })
}

/// `ξ_pair` acting on one monomial.
pub fn so4_act_monomial(pair: IndexSeq, weight: &HighestWeight, key: MonoKey) -> Vec<(MonoKey, ExactScalar)> {
    let idx = so4_pairs().iter().position(|&p| p == pair).expect("pair of distinct indices");
    let row = &change_of_basis()[idx];
    let mut out: Combination<MonoKey> = Combination::new();
    for (g, c) in Sl2Generator::ALL.iter().zip(row) {
        if c.is_zero() {
            continue;
        }
        if let Some((k, s)) = g.act_monomial(weight, key) {
            out.add_term(k, c.scale(s));
        }
    }
    out.into_iter().collect()
}

/// Action of a degree-0 element (a combination of `t`, `C` and the `ξ_ij`) on `F`.
pub fn act_g0(g: &SuperElement, w: &WeightVector) -> Result<WeightVector, WeightError> {
    let weight = &w.weight;
    let mut out = Combination::new();
    for (basis, c) in g.terms.iter() {
        match (basis.tpow, basis.mono.len()) {
            (1, 0) => out.add_scaled(&w.coeffs, &(c * &weight.mu_t)),
            (0, 2) => {
                for (key, x) in w.coeffs.iter() {
                    for (k2, y) in so4_act_monomial(basis.mono, weight, *key) {
                        out.add_term(k2, &(c * x) * &y);
                    }
                }
            }
            _ => return Err(WeightError::NotInG0(basis.to_string())),
        }
    }
    if !g.central.is_zero() {
        out.add_scaled(&w.coeffs, &(&g.central * &weight.mu_c));
    }
    Ok(WeightVector { weight: weight.clone(), coeffs: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annihilation::{bracket, SuperBasis};

    fn weight(m: u32, n: u32) -> HighestWeight {
        HighestWeight::rational(m, n, (3, 2), (-1, 3)).unwrap()
    }

    fn act(g: &SuperElement, w: &WeightVector) -> WeightVector {
        act_g0(g, w).unwrap()
    }

    fn sub(a: &WeightVector, b: &WeightVector) -> WeightVector {
        let mut c = a.coeffs.clone();
        c.sub_assign(&b.coeffs);
        WeightVector { weight: a.weight.clone(), coeffs: c }
    }

    #[test]
    fn highest_weight_vector_eigenvalues() {
        for (m, n) in [(0, 0), (2, 1), (3, 3)] {
            let w = weight(m, n);
            let v = hwv(&w);
            let hx = act(&Sl2Generator::Hx.element(), &v);
            assert_eq!(hx.coeffs, v.coeffs.scaled(&ExactScalar::from_int(m as i64)));
            let hy = act(&Sl2Generator::Hy.element(), &v);
            assert_eq!(hy.coeffs, v.coeffs.scaled(&ExactScalar::from_int(n as i64)));
            assert!(act(&e1(), &v).is_zero());
            assert!(act(&e2(), &v).is_zero());
        }
    }

    #[test]
    fn raising_in_x() {
        let w = weight(1, 1);
        // x_2 y_1 is the key (0, 1); e_x sends it to x_1 y_1.
        let v = WeightVector::monomial(&w, (0, 1)).unwrap();
        assert_eq!(act(&Sl2Generator::Ex.element(), &v), WeightVector::monomial(&w, (1, 1)).unwrap());
    }

    #[test]
    fn xi12_on_highest_weight_vector() {
        let w = weight(2, 3);
        let v = hwv(&w);
        let r = act(&SuperElement::xi(&[1, 2]), &v);
        let expect: ExactScalar = "5/2i".parse().unwrap();
        assert_eq!(r.coeffs, v.coeffs.scaled(&expect));
    }

    #[test]
    fn t_and_c_act_by_scalars() {
        let w = weight(1, 2);
        let v = WeightVector::monomial(&w, (0, 1)).unwrap();
        assert_eq!(act(&SuperElement::t(), &v).coeffs, v.coeffs.scaled(&w.mu_t));
        assert_eq!(act(&SuperElement::central_element(), &v).coeffs, v.coeffs.scaled(&w.mu_c));
        assert!(act_g0(&SuperElement::xi(&[1]), &v).is_err());
    }

    #[test]
    fn lowering_words() {
        let w = weight(2, 1);
        assert_eq!(hwv(&w).coeffs.leading().unwrap().0, &(2, 1));
        let (p, q, s) = lowering_word(&w, (1, 1)).unwrap();
        assert_eq!((p, q, s), (1, 0, ExactScalar::from_int(2)));
        assert_eq!(lowering_word(&w, (2, 1)).unwrap(), (0, 0, ExactScalar::one()));
        assert!(lowering_word(&w, (3, 0)).is_err());
    }

    #[test]
    fn sl2_relations() {
        for m in 0..=4 {
            for n in 0..=4 {
                let w = weight(m, n);
                for key in w.monomials() {
                    let v = WeightVector::monomial(&w, key).unwrap();
                    for (e, f, h) in [
                        (Sl2Generator::Ex, Sl2Generator::Fx, Sl2Generator::Hx),
                        (Sl2Generator::Ey, Sl2Generator::Fy, Sl2Generator::Hy),
                    ] {
                        let (e, f, h) = (e.element(), f.element(), h.element());
                        let ef = sub(&act(&e, &act(&f, &v)), &act(&f, &act(&e, &v)));
                        assert_eq!(ef, act(&h, &v));
                        let he = sub(&act(&h, &act(&e, &v)), &act(&e, &act(&h, &v)));
                        assert_eq!(he.coeffs, act(&e, &v).coeffs.scaled(&ExactScalar::from_int(2)));
                    }
                }
            }
        }
    }

    #[test]
    fn so4_action_respects_the_bracket() {
        for m in 0..=3 {
            for n in 0..=3 {
                let w = weight(m, n);
                for key in w.monomials() {
                    let v = WeightVector::monomial(&w, key).unwrap();
                    for p in so4_pairs() {
                        for q in so4_pairs() {
                            let a = SuperElement::from_basis(SuperBasis::new(0, p));
                            let b = SuperElement::from_basis(SuperBasis::new(0, q));
                            let lhs = sub(&act(&a, &act(&b, &v)), &act(&b, &act(&a, &v)));
                            assert_eq!(lhs, act(&bracket(&a, &b), &v), "[{p},{q}] on {key:?} at ({m},{n})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn e1_e2_kill_only_the_highest_weight_line() {
        for (m, n) in [(0, 0), (1, 2), (3, 3)] {
            let w = weight(m, n);
            let keys: Vec<MonoKey> = w.monomials().collect();
            let mut rows = ExactMatrix::with_cols(keys.len());
            for op in [e1(), e2()] {
                for target in &keys {
                    let row = keys
                        .iter()
                        .enumerate()
                        .map(|(col, &k)| (col, act(&op, &WeightVector::monomial(&w, k).unwrap()).coeffs.coeff(target)))
                        .collect();
                    rows.push_row(row).unwrap();
                }
            }
            let null = rows.nullspace();
            assert_eq!(null.len(), 1);
            assert!(null[0][keys.iter().position(|&k| k == (m, n)).unwrap()].is_one());
            assert_eq!(w.dim(), keys.len());
        }
    }

    #[test]
    fn weight_parsing() {
        let w: HighestWeight = "1 0 5/2 -1/2".parse().unwrap();
        assert_eq!(w, HighestWeight::rational(1, 0, (5, 2), (-1, 2)).unwrap());
        let w2: HighestWeight = "(1,0,5/2,-1/2)".parse().unwrap();
        assert_eq!(w, w2);
        assert!("1 2 3".parse::<HighestWeight>().is_err());
    }
}
