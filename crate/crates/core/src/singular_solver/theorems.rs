//! The explicit highest weight singular vectors of degrees 1, 2 and 3, written in the
//! `w_{ab}` basis of `𝔤_{-1}` and expanded into the normal basis.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::SolverError;
use crate::exact::ExactScalar;
use crate::grassmann::IndexSeq;
use crate::verma::{umult, UGen, VermaKey, VermaVector};
use crate::weight_modules::{HighestWeight, MonoKey};

/// Weight basis of `𝔤_{-1}`: `w11 = η2 + iη1`, `w22 = η2 − iη1`, `w12 = −η4 + iη3`, `w21 = η4 + iη3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WLetter {
    W11,
    W22,
    W12,
    W21,
}

impl WLetter {
    /// `(real generator, real coefficient, imaginary generator, imaginary coefficient)`.
    fn expansion(self) -> (u8, i64, u8, i64) {
        match self {
            WLetter::W11 => (2, 1, 1, 1),
            WLetter::W22 => (2, 1, 1, -1),
            WLetter::W12 => (4, -1, 3, 1),
            WLetter::W21 => (4, 1, 3, 1),
        }
    }

    pub fn apply(self, v: &VermaVector) -> VermaVector {
        let (a, ca, b, cb) = self.expansion();
        let mut out = umult(UGen::Eta(a), v).scaled(&ExactScalar::from_int(ca));
        out.add_scaled(&umult(UGen::Eta(b), v), &ExactScalar::gaussian(0, cb));
        out
    }
}

/// `w_{a_1} ⋯ w_{a_r} ⊗ x_1^a x_2^{m-a} y_1^b y_2^{n-b}`.
fn word(weight: &HighestWeight, letters: &[WLetter], w: MonoKey) -> VermaVector {
    let base = VermaVector::basis(weight, VermaKey::new(0, IndexSeq::EMPTY, w));
    letters.iter().rev().fold(base, |acc, l| l.apply(&acc))
}

/// The ten families of explicit singular vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremLabel {
    D1a,
    D1b,
    D1c,
    D1d,
    D2a,
    D2b,
    D2c,
    D2d,
    D3a,
    D3b,
}

pub const ALL_LABELS: [TheoremLabel; 10] = [
    TheoremLabel::D1a,
    TheoremLabel::D1b,
    TheoremLabel::D1c,
    TheoremLabel::D1d,
    TheoremLabel::D2a,
    TheoremLabel::D2b,
    TheoremLabel::D2c,
    TheoremLabel::D2d,
    TheoremLabel::D3a,
    TheoremLabel::D3b,
];

impl TheoremLabel {
    pub fn degree(self) -> u32 {
        use TheoremLabel::*;
        match self {
            D1a | D1b | D1c | D1d => 1,
            D2a | D2b | D2c | D2d => 2,
            D3a | D3b => 3,
        }
    }

    /// Whether the family contains an instance at `(m, n)`.
    pub fn in_range(self, m: u32, n: u32) -> bool {
        use TheoremLabel::*;
        match self {
            D1a => true,
            D1b => m > 0,
            D1c => m > 0 && n > 0,
            D1d => n > 0,
            D2a => m == 0,
            D2b => n == 0,
            D2c => n == 0 && m > 1,
            D2d => m == 0 && n > 1,
            D3a => (m, n) == (1, 0),
            D3b => (m, n) == (0, 1),
        }
    }
}

impl fmt::Display for TheoremLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremLabel::D1a => "1a",
            TheoremLabel::D1b => "1b",
            TheoremLabel::D1c => "1c",
            TheoremLabel::D1d => "1d",
            TheoremLabel::D2a => "2a",
            TheoremLabel::D2b => "2b",
            TheoremLabel::D2c => "2c",
            TheoremLabel::D2d => "2d",
            TheoremLabel::D3a => "3a",
            TheoremLabel::D3b => "3b",
        };
        f.write_str(s)
    }
}

impl FromStr for TheoremLabel {
    type Err = SolverError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_LABELS.into_iter().find(|l| l.to_string() == s).ok_or_else(|| SolverError::UnknownLabel(s.to_string()))
    }
}

impl Serialize for TheoremLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn out_of_range(label: TheoremLabel, m: u32, n: u32) -> SolverError {
    SolverError::OutOfRange { label: label.to_string(), m, n }
}

fn half(num: i64) -> ExactScalar {
    ExactScalar::from_ratio(num, 2).expect("nonzero denominator")
}

/// The highest weight `(m, n, μ_t, μ_C)` of `F` at which the family has its singular vector.
pub fn theorem_weight(label: TheoremLabel, m: u32, n: u32) -> Result<HighestWeight, SolverError> {
    use TheoremLabel::*;
    if !label.in_range(m, n) {
        return Err(out_of_range(label, m, n));
    }
    let (mi, ni) = (m as i64, n as i64);
    // Twice μ_t and twice μ_C.
    let (t2, c2) = match label {
        D1a => (-(mi + ni), mi - ni),
        D1b => (2 + mi - ni, -2 - mi - ni),
        D1c => (4 + mi + ni, ni - mi),
        D1d => (2 + ni - mi, 2 + mi + ni),
        D2a => (2 - ni, -2 - ni),
        D2b => (2 - mi, 2 + mi),
        D2c => (4 + mi, -mi),
        D2d => (4 + ni, ni),
        D3a => (5, -1),
        D3b => (5, 1),
    };
    Ok(HighestWeight::new(m, n, half(t2), half(c2)))
}

/// The explicit singular vector of a family, expanded in the normal basis of `Ind(F)`.
pub fn build_theorem_vector(label: TheoremLabel, m: u32, n: u32) -> Result<VermaVector, SolverError> {
    use TheoremLabel::*;
    use WLetter::*;
    let weight = theorem_weight(label, m, n)?;
    let w = |letters: &[WLetter], key: MonoKey| word(&weight, letters, key);
    let mut v = VermaVector::zero(&weight);
    match label {
        D1a => v.add(&w(&[W11], (m, n))),
        D1b => {
            v.add(&w(&[W21], (m, n)));
            v.sub(&w(&[W11], (m - 1, n)));
        }
        D1c => {
            v.add(&w(&[W22], (m, n)));
            v.sub(&w(&[W12], (m - 1, n)));
            v.sub(&w(&[W21], (m, n - 1)));
            v.add(&w(&[W11], (m - 1, n - 1)));
        }
        D1d => {
            v.add(&w(&[W12], (m, n)));
            v.sub(&w(&[W11], (m, n - 1)));
        }
        D2a => v.add(&w(&[W11, W21], (0, n))),
        D2b => v.add(&w(&[W11, W12], (m, 0))),
        D2c => {
            v.add(&w(&[W22, W21], (m, 0)));
            v.add(&w(&[W11, W22], (m - 1, 0)));
            v.add(&w(&[W21, W12], (m - 1, 0)));
            v.sub(&w(&[W11, W12], (m - 2, 0)));
        }
        D2d => {
            v.add(&w(&[W22, W12], (0, n)));
            v.sub(&w(&[W22, W11], (0, n - 1)));
            v.sub(&w(&[W21, W12], (0, n - 1)));
            v.sub(&w(&[W11, W21], (0, n - 2)));
        }
        D3a => {
            v.add(&w(&[W11, W22, W21], (1, 0)));
            v.add(&w(&[W21, W12, W11], (0, 0)));
        }
        D3b => {
            v.add(&w(&[W11, W22, W12], (0, 1)));
            v.add(&w(&[W12, W21, W11], (0, 0)));
        }
    }
    Ok(v)
}

/// Every `(label, m, n)` with `m, n ≤ max_mn` inside the family's range.
pub fn theorem_instances(max_mn: u32) -> Vec<(TheoremLabel, u32, u32)> {
    let mut out = Vec::new();
    for label in ALL_LABELS {
        for m in 0..=max_mn {
            for n in 0..=max_mn {
                if label.in_range(m, n) {
                    out.push((label, m, n));
                }
            }
        }
    }
    out
}
