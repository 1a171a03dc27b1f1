use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::primes::require_odd_prime;
use crate::Result;

// (2/n) for odd n, indexed by n mod 8
const TWO_TABLE: [i32; 8] = [0, 1, 0, -1, 0, -1, 0, 1];

/// The Kronecker symbol `(a/n)`, including `n ≤ 0` and even `n`.
///
/// Completely multiplicative in both arguments (for `n` of the same sign)
/// and equal to the Legendre symbol when `n` is an odd prime.
pub fn kronecker(a: i64, n: i64) -> i32 {
    let mut a = a as i128;
    let mut b = n as i128;
    if b == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    if a & 1 == 0 && b & 1 == 0 {
        return 0;
    }
    let v = b.trailing_zeros();
    b >>= v;
    let mut k = if v & 1 == 0 {
        1
    } else {
        TWO_TABLE[(a & 7) as usize]
    };
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    // b is odd and positive from here on
    loop {
        if a == 0 {
            return if b == 1 { k } else { 0 };
        }
        let v = a.trailing_zeros();
        a >>= v;
        if v & 1 == 1 {
            k *= TWO_TABLE[(b & 7) as usize];
        }
        if a & b & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = b % r;
        b = r;
    }
}

/// Legendre symbol of an arbitrary-size integer modulo the odd prime `p`.
pub fn legendre_big(a: &BigInt, p: u64) -> i32 {
    let r = a
        .mod_floor(&BigInt::from(p))
        .to_i64()
        .expect("residue fits");
    kronecker(r, p as i64)
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    let mut acc = 1u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// `p* = (-1)^((p-1)/2)·p`, the discriminant of `Q(√±p)`.
pub fn p_star(p: u64) -> Result<i64> {
    require_odd_prime(p)?;
    Ok(if p % 4 == 1 { p as i64 } else { -(p as i64) })
}

/// A square root of `a` modulo the odd prime `p` (Tonelli-Shanks), in `[0, p)`.
pub fn sqrt_mod(a: i64, p: u64) -> Option<u64> {
    debug_assert!(p > 2 && super::is_prime(p));
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return Some(0);
    }
    if kronecker(a as i64, p as i64) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let z = (2..p)
        .find(|&z| kronecker(z as i64, p as i64) == -1)
        .expect("nonresidue exists");
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        // least i with t^(2^i) = 1
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul(t2, t2);
            i += 1;
        }
        let mut b = c;
        for _ in 0..(m - i - 1) {
            b = mul(b, b);
        }
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    Some(r)
}
