//! Closed forms for `r(K_{1,n}, K_{1,m}+e)` and `r_*(K_{1,n}, K_{1,m}+e)`, `n, m >= 3`.
//!
//! `r_*` is the smallest `k` for which `K_{r-1} ⊔ K_{1,k}` arrows the pair.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::FormulaError;

/// Which branch of the piecewise formulas a pair `(n, m)` falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    /// `n`, `m` both even and `n <= m - 2`.
    BothEvenSmallN,
    /// `n` or `m` odd and `n <= m - 2`.
    OddSmallN,
    /// `n > m - 2`.
    LargeN,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::BothEvenSmallN => "both_even_small_n",
            CaseTag::OddSmallN => "odd_small_n",
            CaseTag::LargeN => "large_n",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "both_even_small_n" => Ok(CaseTag::BothEvenSmallN),
            "odd_small_n" => Ok(CaseTag::OddSmallN),
            "large_n" => Ok(CaseTag::LargeN),
            other => Err(format!("unknown case tag {other:?}")),
        }
    }
}

fn check_domain(n: usize, m: usize) -> Result<(), FormulaError> {
    if n < 3 || m < 3 {
        Err(FormulaError::Domain { n, m })
    } else {
        Ok(())
    }
}

pub fn classify(n: usize, m: usize) -> Result<CaseTag, FormulaError> {
    check_domain(n, m)?;
    // n > m - 2, written without underflow
    Ok(if n + 2 > m {
        CaseTag::LargeN
    } else if n.is_multiple_of(2) && m.is_multiple_of(2) {
        CaseTag::BothEvenSmallN
    } else {
        CaseTag::OddSmallN
    })
}

pub fn r_formula(n: usize, m: usize) -> Result<usize, FormulaError> {
    Ok(match classify(n, m)? {
        CaseTag::BothEvenSmallN => n + m - 1,
        CaseTag::OddSmallN => n + m,
        CaseTag::LargeN => 2 * n + 1,
    })
}

pub fn r_star_formula(n: usize, m: usize) -> Result<usize, FormulaError> {
    Ok(match classify(n, m)? {
        CaseTag::BothEvenSmallN => n + m - 2,
        CaseTag::OddSmallN => 1,
        CaseTag::LargeN => n + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        assert_eq!(classify(4, 6).unwrap(), CaseTag::BothEvenSmallN);
        assert_eq!(classify(3, 5).unwrap(), CaseTag::OddSmallN);
        assert_eq!(classify(6, 7).unwrap(), CaseTag::LargeN);
        assert_eq!(classify(4, 7).unwrap(), CaseTag::OddSmallN);
        assert_eq!(classify(4, 5).unwrap(), CaseTag::LargeN);
        assert_eq!(classify(3, 3).unwrap(), CaseTag::LargeN);
    }

    #[test]
    fn domain_errors() {
        assert_eq!(classify(2, 5), Err(FormulaError::Domain { n: 2, m: 5 }));
        assert!(r_formula(3, 2).is_err());
        assert!(r_star_formula(0, 0).is_err());
    }

    #[test]
    fn ramsey_examples() {
        assert_eq!(r_formula(8, 10).unwrap(), 17);
        assert_eq!(r_formula(3, 5).unwrap(), 8);
        assert_eq!(r_formula(6, 7).unwrap(), 13);
    }

    #[test]
    fn star_critical_examples() {
        assert_eq!(r_star_formula(8, 14).unwrap(), 20);
        assert_eq!(r_star_formula(4, 7).unwrap(), 1);
        assert_eq!(r_star_formula(6, 7).unwrap(), 7);
    }

    #[test]
    fn tag_round_trips_through_str() {
        for tag in [CaseTag::BothEvenSmallN, CaseTag::OddSmallN, CaseTag::LargeN] {
            assert_eq!(tag.as_str().parse::<CaseTag>().unwrap(), tag);
        }
        assert!("nope".parse::<CaseTag>().is_err());
    }
}
