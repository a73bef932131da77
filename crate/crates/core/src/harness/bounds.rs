use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::algorithm::Algorithm;
use crate::cover::sample_count;
use crate::epsilon::Epsilon;
use crate::error::BoundError;

/// Closed-form part-count bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `50·ε⁻²` parts of diameter 3.
    Diam3Upper,
    /// `16·ε⁻¹` parts of diameter 4.
    Diam4Upper,
    /// `⌈2·ε⁻²·log₂ n⌉` sampled pairs.
    SamplingUpper,
    /// Fewer than `ε⁻²` cover parts of diameter 5.
    Cover5Upper,
    /// Fewer than `ε⁻¹` cover parts of diameter 6.
    Cover6Upper,
    /// At least `1/(16ε)` parts for disjoint cliques.
    CliquesLower,
    /// At most `n` stars.
    StarsUpper,
    /// A single part.
    PruneUpper,
}

const ALL: [(BoundKind, &str); 8] = [
    (BoundKind::Diam3Upper, "diam3_upper"),
    (BoundKind::Diam4Upper, "diam4_upper"),
    (BoundKind::SamplingUpper, "sampling_upper"),
    (BoundKind::Cover5Upper, "cover5_upper"),
    (BoundKind::Cover6Upper, "cover6_upper"),
    (BoundKind::CliquesLower, "cliques_lower"),
    (BoundKind::StarsUpper, "stars_upper"),
    (BoundKind::PruneUpper, "prune_upper"),
];

impl BoundKind {
    /// The bound a report for `algorithm` is checked against.
    pub fn for_algorithm(algorithm: Algorithm) -> Option<BoundKind> {
        match algorithm {
            Algorithm::Stars => Some(BoundKind::StarsUpper),
            Algorithm::Prune => Some(BoundKind::PruneUpper),
            Algorithm::Diam3 => Some(BoundKind::Diam3Upper),
            Algorithm::Diam4 => Some(BoundKind::Diam4Upper),
            Algorithm::SamplingDiam3 => Some(BoundKind::SamplingUpper),
            Algorithm::ScatteredDiam5 => Some(BoundKind::Cover5Upper),
            Algorithm::ScatteredDiam6 => Some(BoundKind::Cover6Upper),
            Algorithm::HyperDiam3 | Algorithm::Manual => None,
        }
    }

    pub fn is_lower(self) -> bool {
        self == BoundKind::CliquesLower
    }

    pub fn is_strict(self) -> bool {
        matches!(self, BoundKind::Cover5Upper | BoundKind::Cover6Upper)
    }

    /// Whether a count of `parts` respects this bound with value `bound`.
    pub fn admits(self, parts: usize, bound: Ratio<u128>) -> bool {
        let parts = Ratio::from_integer(parts as u128);
        if self.is_lower() {
            parts >= bound
        } else if self.is_strict() {
            parts < bound
        } else {
            parts <= bound
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = ALL.iter().find(|(k, _)| k == self).map(|(_, s)| *s).unwrap_or("?");
        f.write_str(name)
    }
}

impl FromStr for BoundKind {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL.iter()
            .find(|(_, name)| *name == s)
            .map(|(k, _)| *k)
            .ok_or_else(|| BoundError::UnknownKind(s.to_string()))
    }
}

/// Exact value of the bound `kind` for `n` vertices at `eps`.
pub fn bound_formula(kind: BoundKind, n: usize, eps: Epsilon) -> Result<Ratio<u128>, BoundError> {
    if eps.is_zero() {
        return Err(BoundError::ZeroEpsilon);
    }
    let inv = Ratio::new(eps.denom() as u128, eps.numer() as u128);
    Ok(match kind {
        BoundKind::Diam3Upper => inv * inv * 50,
        BoundKind::Diam4Upper => inv * 16,
        BoundKind::SamplingUpper => Ratio::from_integer(sample_count(n, eps) as u128),
        BoundKind::Cover5Upper => inv * inv,
        BoundKind::Cover6Upper => inv,
        BoundKind::CliquesLower => inv / 16,
        BoundKind::StarsUpper => Ratio::from_integer(n as u128),
        BoundKind::PruneUpper => Ratio::from_integer(1),
    })
}

pub fn ratio_to_f64(r: Ratio<u128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps(s: &str) -> Epsilon {
        s.parse().unwrap()
    }

    #[test]
    fn formula_examples() {
        let v = |k, e| bound_formula(k, 100, eps(e)).unwrap();
        assert_eq!(v(BoundKind::Diam3Upper, "0.1"), Ratio::from_integer(5000));
        assert_eq!(v(BoundKind::Diam4Upper, "1/64"), Ratio::from_integer(1024));
        assert_eq!(v(BoundKind::CliquesLower, "1/64"), Ratio::from_integer(4));
        assert_eq!(
            bound_formula(BoundKind::SamplingUpper, 50, eps("0.2")).unwrap(),
            Ratio::from_integer(283)
        );
        assert_eq!(v(BoundKind::Cover6Upper, "3/8"), Ratio::new(8, 3));
        assert_eq!(
            bound_formula(BoundKind::Diam3Upper, 10, Epsilon::ZERO),
            Err(BoundError::ZeroEpsilon)
        );
    }

    #[test]
    fn names_roundtrip() {
        for (k, name) in ALL {
            assert_eq!(name.parse::<BoundKind>(), Ok(k));
            assert_eq!(k.to_string(), name);
            assert_eq!(serde_json::to_string(&k).unwrap(), format!("\"{name}\""));
        }
        assert_eq!(
            "diam9_upper".parse::<BoundKind>(),
            Err(BoundError::UnknownKind("diam9_upper".into()))
        );
    }

    #[test]
    fn admits_respects_strictness() {
        let five = Ratio::from_integer(5);
        assert!(BoundKind::Diam4Upper.admits(5, five));
        assert!(!BoundKind::Cover6Upper.admits(5, five));
        assert!(BoundKind::Cover6Upper.admits(4, five));
        assert!(BoundKind::CliquesLower.admits(6, five));
        assert!(!BoundKind::CliquesLower.admits(4, five));
    }
}
