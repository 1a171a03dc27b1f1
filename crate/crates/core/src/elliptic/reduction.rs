//! Reduction of integral Weierstrass models modulo a prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::WeierstrassCurve;
use crate::arith::{is_prime, kronecker};
use crate::{Error, Result};

fn reduced_coefficients(c: &WeierstrassCurve, l: u64) -> Result<[u64; 5]> {
    let m = BigInt::from(l);
    let a = c.integer_coefficients()?;
    Ok(a.map(|x| x.mod_floor(&m).to_u64().unwrap()))
}

fn discriminant_mod(c: &WeierstrassCurve, l: u64) -> Result<u64> {
    let d = c.discriminant();
    if !d.is_integer() {
        return Err(Error::NonIntegralModel);
    }
    Ok(d.to_integer().mod_floor(&BigInt::from(l)).to_u64().unwrap())
}

/// `#C(F_ℓ)` including the point at infinity, for a prime of good reduction.
pub fn count_points_mod(c: &WeierstrassCurve, l: u64) -> Result<u64> {
    if !is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    if discriminant_mod(c, l)?.is_zero() {
        return Err(Error::BadReduction(l));
    }
    let [a1, a2, a3, a4, a6] = reduced_coefficients(c, l)?;
    let m = l as u128;
    let mut count = 1u64;
    if l == 2 {
        for x in 0..2u128 {
            for y in 0..2u128 {
                let (a1, a2, a3, a4, a6) =
                    (a1 as u128, a2 as u128, a3 as u128, a4 as u128, a6 as u128);
                let lhs = (y * y + a1 * x * y + a3 * y) % 2;
                let rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
                if lhs == rhs {
                    count += 1;
                }
            }
        }
        return Ok(count);
    }
    // (2y + a1x + a3)² = 4x³ + b2x² + 2b4x + b6
    let (a1, a2, a3, a4, a6) = (a1 as u128, a2 as u128, a3 as u128, a4 as u128, a6 as u128);
    let b2 = (a1 * a1 + 4 * a2) % m;
    let b4 = (2 * a4 + a1 * a3) % m;
    let b6 = (a3 * a3 + 4 * a6) % m;
    for x in 0..m {
        let f = ((((4 * x + b2) % m * x + 2 * b4) % m) * x + b6) % m;
        count += (1 + kronecker(f as i64, l as i64)) as u64;
    }
    Ok(count)
}

/// Trace of Frobenius `a_ℓ = ℓ + 1 − #C(F_ℓ)` at a prime of good reduction.
pub fn ap(c: &WeierstrassCurve, l: u64) -> Result<i64> {
    Ok(l as i64 + 1 - count_points_mod(c, l)? as i64)
}

/// `a_ℓ` at a prime of bad reduction of a model minimal at `ℓ`: `+1` when
/// the node has `ℓ`-rational tangents (split), `−1` when it does not
/// (nonsplit), `0` at a cusp (additive).
///
/// Finds the singular point by enumeration, so intended for small `ℓ`.
pub fn bad_reduction_ap(c: &WeierstrassCurve, l: u64) -> Result<i64> {
    if !is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    if !discriminant_mod(c, l)?.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "{l} is a prime of good reduction"
        )));
    }
    let [a1, a2, a3, a4, a6] = reduced_coefficients(c, l)?.map(|v| v as i128);
    let m = l as i128;
    let md = |v: i128| v.rem_euclid(m);
    let singular = (0..m)
        .flat_map(|x| (0..m).map(move |y| (x, y)))
        .find(|&(x, y)| {
            let f = y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6;
            let fx = a1 * y - 3 * x * x - 2 * a2 * x - a4;
            let fy = 2 * y + a1 * x + a3;
            md(f) == 0 && md(fx) == 0 && md(fy) == 0
        });
    let Some((x0, _)) = singular else {
        return Err(Error::InvalidArgument(format!(
            "no singular point modulo {l}"
        )));
    };
    // tangent cone at the node: Y² + a1·XY − (a2 + 3x0)·X² = 0
    let k = a2 + 3 * x0;
    let roots = (0..m).filter(|&t| md(t * t + a1 * t - k) == 0).count();
    Ok(match roots {
        2 => 1,
        0 => -1,
        _ => 0,
    })
}
