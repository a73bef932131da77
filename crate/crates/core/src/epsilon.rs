//! Exact rational `ε` in `[0, 1]`.
//!
//! Budgets such as `|E0| ≤ ε·n²` are compared in integer arithmetic so that
//! boundary cases like `ε = 1/64, n = 64` are decided exactly.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::EpsilonError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Epsilon(Ratio<u64>);

impl Epsilon {
    pub const ZERO: Epsilon = Epsilon(Ratio::new_raw(0, 1));
    pub const ONE: Epsilon = Epsilon(Ratio::new_raw(1, 1));

    pub fn new(num: u64, den: u64) -> Result<Self, EpsilonError> {
        if den == 0 {
            return Err(EpsilonError::Malformed(format!("{num}/{den}")));
        }
        let r = Ratio::new(num, den);
        if r > Ratio::from_integer(1) {
            return Err(EpsilonError::OutOfRange(format!("{num}/{den}")));
        }
        Ok(Epsilon(r))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn ratio(&self) -> Ratio<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    pub fn as_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    /// `ε·n^power` as a float, for reporting only.
    pub fn budget(&self, n: usize, power: u32) -> f64 {
        self.as_f64() * (n as f64).powi(power as i32)
    }

    /// `count ≤ ε·n^power`, decided exactly.
    pub fn within_budget(&self, count: usize, n: usize, power: u32) -> bool {
        let lhs = (count as u128).saturating_mul(self.denom() as u128);
        let rhs = (self.numer() as u128).saturating_mul((n as u128).saturating_pow(power));
        lhs <= rhs
    }

    /// `degree ≥ ε·n`, decided exactly.
    pub fn degree_at_least(&self, degree: usize, n: usize) -> bool {
        (degree as u128) * (self.denom() as u128) >= (self.numer() as u128) * (n as u128)
    }

    /// `1/ε`; infinite for `ε = 0`.
    pub fn inverse_f64(&self) -> f64 {
        if self.is_zero() {
            f64::INFINITY
        } else {
            self.denom() as f64 / self.numer() as f64
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

fn parse_u64(s: &str, whole: &str) -> Result<u64, EpsilonError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(EpsilonError::Malformed(whole.to_string()));
    }
    s.parse().map_err(|_| EpsilonError::Malformed(whole.to_string()))
}

impl FromStr for Epsilon {
    type Err = EpsilonError;

    /// Accepts `a/b`, integers and plain decimals such as `0.05`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some((a, b)) = t.split_once('/') {
            return Epsilon::new(parse_u64(a.trim(), s)?, parse_u64(b.trim(), s)?);
        }
        let (int, frac) = match t.split_once('.') {
            Some((i, f)) => (if i.is_empty() { "0" } else { i }, f),
            None => (t, ""),
        };
        let int = parse_u64(int, s)?;
        if frac.is_empty() {
            return Epsilon::new(int, 1);
        }
        if frac.len() > 18 {
            return Err(EpsilonError::Malformed(s.to_string()));
        }
        let den = 10u64.pow(frac.len() as u32);
        let num = int
            .checked_mul(den)
            .and_then(|x| x.checked_add(parse_u64(frac, s).ok()?))
            .ok_or_else(|| EpsilonError::Malformed(s.to_string()))?;
        Epsilon::new(num, den)
    }
}

impl Serialize for Epsilon {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Epsilon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
