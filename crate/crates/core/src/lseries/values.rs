use std::f64::consts::PI;

use super::{exp_integral_e1, LSeriesProfile};
use crate::{Error, Result};

/// Target bound on the discarded tail of every truncated series.
pub const TRUNCATION_TOLERANCE: f64 = 1e-8;

/// Stretch `t` of the symmetric form of `L(1)` used when the root number is
/// `−1`; at `t = 1` that form vanishes identically.
pub const SYMMETRIC_STRETCH: f64 = 1.1;

/// Number of terms for the series with decay `c = 2π/(t·√cond)`.
///
/// At least `ceil(ln(10^10)/c)`, and long enough that the tail bound
/// `2√3·e^{−c(M+1)}/(1 − e^{−c})` (from `|a_n|/n ≤ d(n)/√n ≤ √3`) is below
/// [`TRUNCATION_TOLERANCE`]; the second condition dominates for large
/// conductors.
pub fn required_terms(conductor: u64, stretch: f64) -> usize {
    let c = 2.0 * PI / (stretch * (conductor as f64).sqrt());
    let floor = (1e10f64.ln() / c).ceil();
    let scale = 2.0 * 3f64.sqrt() / ((1.0 - (-c).exp()) * TRUNCATION_TOLERANCE);
    (scale.ln() / c - 1.0).ceil().max(floor).max(1.0) as usize
}

/// Truncated values of `L(1)` and `L'(1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LValues {
    pub l1: f64,
    pub l1_prime: f64,
    pub terms: usize,
}

/// `L(1)` and `L'(1)` from the rapidly convergent series
///
/// * `L(1) = Σ (a_n/n)·(e^{−cn/t} + ε·e^{−cnt})` with `c = 2π/√cond`, taken
///   at `t = 1` (the familiar `2·Σ (a_n/n)·e^{−cn}`) when `ε = +1` and at
///   `t = 1.1` when `ε = −1`, where the result must vanish up to truncation
///   error and so checks the sign and conductor;
/// * `L'(1) = 2·Σ (a_n/n)·E1(cn)`, meaningful only when `ε = −1`.
pub fn l_values(profile: &LSeriesProfile) -> Result<LValues> {
    let need = profile.required_terms();
    let have = profile.nmax();
    if have < need {
        return Err(Error::TableTooShort { have, need });
    }
    partial_l_values(profile, need)
}

/// The same sums cut off after `terms` coefficients.
pub fn partial_l_values(profile: &LSeriesProfile, terms: usize) -> Result<LValues> {
    if terms > profile.nmax() {
        return Err(Error::TableTooShort {
            have: profile.nmax(),
            need: terms,
        });
    }
    let c = 2.0 * PI / (profile.conductor as f64).sqrt();
    let eps = profile.sign as f64;
    let t = if profile.sign == 1 {
        1.0
    } else {
        SYMMETRIC_STRETCH
    };
    let (mut l1, mut l1p) = (0.0f64, 0.0f64);
    for (n, &a) in profile
        .coefficients
        .iter()
        .enumerate()
        .take(terms + 1)
        .skip(1)
    {
        if a == 0 {
            continue;
        }
        let x = c * n as f64;
        let w = a as f64 / n as f64;
        l1 += w * ((-x / t).exp() + eps * (-x * t).exp());
        l1p += w * exp_integral_e1(x)?;
    }
    Ok(LValues {
        l1,
        l1_prime: 2.0 * l1p,
        terms,
    })
}
