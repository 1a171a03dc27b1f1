//! L-series of the twists `C(11,p)` and `C(19,p)`: coefficients, root
//! numbers, `L(1)`, `L'(1)` and the analytic-rank classifier.

mod base;
mod coefficients;
mod special;
mod values;

use serde::Serialize;

use crate::arith::kronecker;
use crate::elliptic::Level;
use crate::{Error, Result};

pub(crate) use base::write_atomic;
pub use base::BaseTable;
pub use coefficients::coefficients;
pub use special::exp_integral_e1;
pub use values::{
    l_values, partial_l_values, required_terms, LValues, SYMMETRIC_STRETCH, TRUNCATION_TOLERANCE,
};

/// Default threshold below which `|L(1)|` or `|L'(1)|` counts as zero.
pub const DEFAULT_TAU: f64 = 1e-4;

/// Root number of `C(N,p)`: `χ_{p*}(−N) = (−N/p)`.
pub fn sign(n: u64, p: u64) -> Result<i32> {
    if p == 2 || !crate::arith::is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if n.is_multiple_of(p) {
        return Err(Error::InvalidArgument(format!("{p} divides the level {n}")));
    }
    Ok(kronecker(-(n as i64), p as i64))
}

/// Conductor `N·p²` of `C(N,p)` for odd `p ∤ N`.
pub fn conductor(level: Level, p: u64) -> u64 {
    level.value() * p * p
}

#[derive(Debug, Clone, PartialEq)]
pub struct LSeriesProfile {
    pub level: Level,
    pub p: u64,
    pub conductor: u64,
    pub sign: i32,
    /// `a_n` at index `n`; index 0 is unused.
    pub coefficients: Vec<i64>,
}

impl LSeriesProfile {
    /// Profile with exactly as many coefficients as the truncation rule needs.
    pub fn build(level: Level, p: u64, base: &BaseTable) -> Result<Self> {
        let cond = conductor(level, p);
        let eps = sign(level.value(), p)?;
        Self::with_terms(level, p, terms_for(cond, eps), base)
    }

    pub fn with_terms(level: Level, p: u64, nmax: usize, base: &BaseTable) -> Result<Self> {
        let coefficients = coefficients(level, p, nmax, base)?;
        Ok(LSeriesProfile {
            level,
            p,
            conductor: conductor(level, p),
            sign: sign(level.value(), p)?,
            coefficients,
        })
    }

    pub fn nmax(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn required_terms(&self) -> usize {
        terms_for(self.conductor, self.sign)
    }
}

fn terms_for(conductor: u64, sign: i32) -> usize {
    let stretch = if sign == 1 { 1.0 } else { SYMMETRIC_STRETCH };
    required_terms(conductor, stretch)
}

/// Largest table index needed to classify `C(N,p)`.
pub fn terms_needed(level: Level, p: u64) -> Result<usize> {
    Ok(terms_for(conductor(level, p), sign(level.value(), p)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RankEstimate {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "apparent-even>=2")]
    ApparentEvenAtLeastTwo,
    #[serde(rename = "apparent-odd>=3")]
    ApparentOddAtLeastThree,
}

impl RankEstimate {
    pub fn label(self) -> &'static str {
        match self {
            RankEstimate::Zero => "0",
            RankEstimate::One => "1",
            RankEstimate::ApparentEvenAtLeastTwo => "apparent-even>=2",
            RankEstimate::ApparentOddAtLeastThree => "apparent-odd>=3",
        }
    }
}

impl std::fmt::Display for RankEstimate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankVerdict {
    pub level: Level,
    pub p: u64,
    pub sign: i32,
    pub parity: Parity,
    pub estimate: RankEstimate,
    pub l_value: f64,
    pub l_prime_value: f64,
    pub nmax_used: usize,
    pub tau: f64,
}

/// Classifies a profile. The raw values are always reported: numerical
/// vanishing only suggests higher rank.
pub fn classify_profile(profile: &LSeriesProfile, tau: f64) -> Result<RankVerdict> {
    let v = l_values(profile)?;
    let (parity, estimate) = if profile.sign == 1 {
        let e = if v.l1.abs() > tau {
            RankEstimate::Zero
        } else {
            RankEstimate::ApparentEvenAtLeastTwo
        };
        (Parity::Even, e)
    } else {
        let e = if v.l1_prime.abs() > tau {
            RankEstimate::One
        } else {
            RankEstimate::ApparentOddAtLeastThree
        };
        (Parity::Odd, e)
    };
    Ok(RankVerdict {
        level: profile.level,
        p: profile.p,
        sign: profile.sign,
        parity,
        estimate,
        l_value: v.l1,
        l_prime_value: v.l1_prime,
        nmax_used: v.terms,
        tau,
    })
}

/// Analytic rank of `C(N,p)` against a prepared table of base traces.
pub fn analytic_rank_with(base: &BaseTable, n: u64, p: u64, tau: f64) -> Result<RankVerdict> {
    let level = Level::try_from(n)?;
    crate::elliptic::require_twist_condition(n, p)?;
    classify_profile(&LSeriesProfile::build(level, p, base)?, tau)
}

/// Analytic rank of `C(N,p)`, computing the base traces it needs.
pub fn analytic_rank(n: u64, p: u64, tau: f64) -> Result<RankVerdict> {
    let level = Level::try_from(n)?;
    crate::elliptic::require_twist_condition(n, p)?;
    let base = BaseTable::compute(terms_needed(level, p)? as u64);
    analytic_rank_with(&base, n, p, tau)
}
