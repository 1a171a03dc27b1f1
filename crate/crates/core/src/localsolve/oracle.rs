use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::QuarticModel;
use crate::{Error, Result};

const MAX_MODULUS: u128 = 10_000_000;

/// Brute-force test for a primitive solution of `d·Y² ≡ P(X, Z) mod ℓ^k`,
/// where `P(X, Z)` is the homogenised quartic. Pairs are normalised to
/// `Z = 1` or to `X = 1, ℓ | Z`.
pub fn exhaustive_oracle(model: &QuarticModel, l: u64, k: u32) -> Result<bool> {
    crate::arith::require_prime(l)?;
    let modulus = (l as u128)
        .checked_pow(k)
        .filter(|&m| m <= MAX_MODULUS)
        .ok_or(Error::EnumerationTooLarge((l as u128).saturating_pow(k)))? as u64;
    let m = BigInt::from(modulus);
    let reduce = |x: &BigInt| x.mod_floor(&m).to_u64().unwrap();
    let d = reduce(model.d());
    let c = model.coefficients().clone().map(|x| reduce(&x));

    let mut values = vec![false; modulus as usize];
    for y in 0..modulus {
        let y2 = mul(y, y, modulus);
        values[mul(d, y2, modulus) as usize] = true;
    }
    let horner = |cs: [u64; 5], x: u64| {
        cs.iter()
            .fold(0, |acc, &ci| (mul(acc, x, modulus) + ci) % modulus)
    };
    let affine = (0..modulus).any(|x| values[horner(c, x) as usize]);
    if affine {
        return Ok(true);
    }
    let mut reversed = c;
    reversed.reverse();
    Ok((0..modulus)
        .step_by(l as usize)
        .any(|z| values[horner(reversed, z) as usize]))
}

fn mul(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}
