use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactError;

/// An element `re + i·im` of the Gaussian rationals ℚ(i).
///
/// Both parts are `BigRational`, which keeps them in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactScalar {
    re: BigRational,
    im: BigRational,
}

impl ExactScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den` as a real scalar. Fails when `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Result<Self, ExactError> {
        if den == 0 {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::new(BigRational::new(BigInt::from(num), BigInt::from(den)), BigRational::zero()))
    }

    /// `a + b·i` with integer parts.
    pub fn gaussian(a: i64, b: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(a)), BigRational::from_integer(BigInt::from(b)))
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.inv()?)
    }

    /// Multiplication by a machine integer, cheaper than a full product.
    pub fn scale(&self, k: i64) -> Self {
        match k {
            0 => Self::zero(),
            1 => self.clone(),
            -1 => -self.clone(),
            _ => {
                let k = BigRational::from_integer(BigInt::from(k));
                Self::new(&self.re * &k, &self.im * &k)
            }
        }
    }

    /// The rational value if the scalar is real and an integer.
    pub fn to_i64(&self) -> Option<i64> {
        use num::ToPrimitive;
        if self.im.is_zero() && self.re.is_integer() {
            self.re.to_integer().to_i64()
        } else {
            None
        }
    }

    /// Parse a rational written `p`, `p/q` or `-p/q`.
    pub fn parse_rational(s: &str) -> Result<BigRational, ExactError> {
        let s = s.trim();
        let bad = || ExactError::Parse(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(BigRational::new(num, den))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc *= self;
        }
        acc
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p/q`, `p/q i`, `a+bi` and `a-bi` forms with rational parts.
impl FromStr for ExactScalar {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(ExactError::Parse(s.to_string()));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::from_rational(Self::parse_rational(&t)?));
        };
        // Split at the last sign that is not the leading one.
        let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(k, _)| k).last();
        let imag = |part: &str| -> Result<BigRational, ExactError> {
            match part {
                "" | "+" => Ok(BigRational::one()),
                "-" => Ok(-BigRational::one()),
                p => Self::parse_rational(p.strip_prefix('+').unwrap_or(p)),
            }
        };
        match split {
            Some(k) => Ok(Self::new(Self::parse_rational(&body[..k])?, imag(&body[k..])?)),
            None => Ok(Self::new(BigRational::zero(), imag(body)?)),
        }
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl Add<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return ExactScalar::from_rational(&self.re * &rhs.re);
        }
        ExactScalar::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        &self * &rhs
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-self.re, -self.im)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -self.clone()
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for ExactScalar {
    fn add_assign(&mut self, rhs: ExactScalar) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self * rhs;
    }
}

impl Sum for ExactScalar {
    fn sum<It: Iterator<Item = ExactScalar>>(iter: It) -> Self {
        iter.fold(ExactScalar::zero(), |acc, x| acc + x)
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    re: String,
    im: String,
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            re: format!("{}/{}", self.re.numer(), self.re.denom()),
            im: format!("{}/{}", self.im.numer(), self.im.denom()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        let re = ExactScalar::parse_rational(&repr.re).map_err(D::Error::custom)?;
        let im = ExactScalar::parse_rational(&repr.im).map_err(D::Error::custom)?;
        Ok(ExactScalar::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    #[test]
    fn norm_of_one_plus_i() {
        assert_eq!(ExactScalar::gaussian(1, 1) * ExactScalar::gaussian(1, -1), ExactScalar::from_int(2));
    }

    #[test]
    fn i_squared() {
        assert_eq!(ExactScalar::i() * ExactScalar::i(), ExactScalar::from_int(-1));
    }

    #[test]
    fn componentwise_addition() {
        assert_eq!(q("1/2") + q("3/2i"), q("1/2+3/2i"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(ExactScalar::one().checked_div(&ExactScalar::zero()), Err(ExactError::DivisionByZero));
        assert!(ExactScalar::from_ratio(1, 0).is_err());
    }

    #[test]
    fn inverse_of_gaussian() {
        let z = ExactScalar::gaussian(3, -4);
        assert!((&z * &z.inv().unwrap()).is_one());
        assert_eq!(z.inv().unwrap(), q("3/25+4/25i"));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "-7", "5/2", "-1/2i", "i", "-i", "1/3-2/5i", "-1+i"] {
            let z = q(s);
            assert_eq!(q(&z.to_string()), z, "{s}");
        }
        assert_eq!(q("4/8"), q("1/2"));
        assert!("x".parse::<ExactScalar>().is_err());
        assert!("1/0".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn serde_uses_fraction_strings() {
        let z = q("-1/2+3i");
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(json, r#"{"re":"-1/2","im":"3/1"}"#);
        assert_eq!(serde_json::from_str::<ExactScalar>(&json).unwrap(), z);
    }
}
