use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::{is_prime, legendre_big};
use crate::{Error, Result};

/// A place of `Q`: a finite prime or the real place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Prime(u64),
    Infinity,
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Splits `a = p^v·u` with `p ∤ u`.
fn split_valuation(a: &BigInt, p: u64) -> (u32, BigInt) {
    let p = BigInt::from(p);
    let mut v = 0;
    let mut u = a.clone();
    loop {
        let (q, r) = u.div_rem(&p);
        if !r.is_zero() {
            return (v, u);
        }
        u = q;
        v += 1;
    }
}

/// Hilbert symbol `(a, b)_v` of nonzero integers.
pub fn hilbert_symbol_int(a: &BigInt, b: &BigInt, v: Place) -> i32 {
    assert!(!a.is_zero() && !b.is_zero(), "Hilbert symbol of zero");
    match v {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = split_valuation(a, 2);
            let (beta, w) = split_valuation(b, 2);
            let u8_ = u.mod_floor(&BigInt::from(8)).to_u64().unwrap();
            let w8 = w.mod_floor(&BigInt::from(8)).to_u64().unwrap();
            let eps = |x: u64| ((x - 1) / 2) & 1;
            let omega = |x: u64| ((x * x - 1) / 8) & 1;
            let e = eps(u8_) * eps(w8) + alpha as u64 * omega(w8) + beta as u64 * omega(u8_);
            if e.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = split_valuation(a, p);
            let (beta, w) = split_valuation(b, p);
            let mut s = 1;
            if (alpha as u64 * beta as u64 * ((p - 1) / 2)) % 2 == 1 {
                s = -s;
            }
            if beta % 2 == 1 {
                s *= legendre_big(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre_big(&w, p);
            }
            s
        }
    }
}

/// Hilbert symbol `(a, b)_v` of nonzero rationals: `+1` iff
/// `z² = a·x² + b·y²` has a nontrivial solution over `Q_v`.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, v: Place) -> i32 {
    // n/d and n·d differ by the square d²
    let a = a.numer() * a.denom();
    let b = b.numer() * b.denom();
    hilbert_symbol_int(&a, &b, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::prime_divisors;
    use proptest::prelude::*;

    fn h(a: i64, b: i64, v: Place) -> i32 {
        hilbert_symbol_int(&BigInt::from(a), &BigInt::from(b), v)
    }

    /// Solubility of z² = a x² + b y² modulo p^k by enumeration of primitive
    /// triples; for small odd p and k = 1 + max valuation this decides the
    /// local symbol.
    fn brute_conic(a: i64, b: i64, p: i64, k: u32) -> bool {
        let m = p.pow(k);
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if x % p == 0 && y % p == 0 && z % p == 0 {
                        continue;
                    }
                    if (z * z - a * x * x - b * y * y).rem_euclid(m) == 0 {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn spec_examples() {
        assert_eq!(h(17, 5, Place::Prime(17)), -1);
        assert_eq!(h(17 * 17 * 17, 5, Place::Prime(17)), -1);
        for v in [
            Place::Prime(2),
            Place::Prime(3),
            Place::Prime(17),
            Place::Infinity,
        ] {
            assert_eq!(h(1, -7, v), 1);
        }
        assert_eq!(h(-1, -1, Place::Infinity), -1);
        assert_eq!(h(-1, -1, Place::Prime(2)), -1);
        assert_eq!(h(-1, -1, Place::Prime(3)), 1);
    }

    #[test]
    fn rational_arguments() {
        let a = BigRational::new(BigInt::from(17), BigInt::from(4));
        let b = BigRational::new(BigInt::from(5), BigInt::from(9));
        assert_eq!(hilbert_symbol(&a, &b, Place::Prime(17)), -1);
        let c = BigRational::new(BigInt::from(1), BigInt::from(17));
        assert_eq!(hilbert_symbol(&c, &b, Place::Prime(17)), -1);
    }

    #[test]
    fn odd_place_matches_conic_search() {
        for p in [3i64, 5, 7] {
            for a in [-6i64, -3, -1, 1, 2, 3, 5, 6, 7, 10, 14, 15] {
                for b in [-5i64, -2, -1, 2, 3, 7, 21] {
                    let expect = brute_conic(a, b, p, 2);
                    assert_eq!(
                        h(a, b, Place::Prime(p as u64)) == 1,
                        expect,
                        "({a},{b})_{p}"
                    );
                }
            }
        }
    }

    #[test]
    fn place_validation() {
        assert!(Place::prime(17).is_ok());
        assert!(Place::prime(15).is_err());
        assert_eq!(Place::Infinity.to_string(), "inf");
        assert!(Place::Prime(1_000_003) < Place::Infinity);
    }

    fn nonzero() -> impl Strategy<Value = i64> {
        prop_oneof![-100_000i64..-1, 1i64..100_000]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn product_formula(a in nonzero(), b in nonzero()) {
            let mut places = vec![Place::Infinity, Place::Prime(2)];
            for q in prime_divisors(a.unsigned_abs()).into_iter().chain(prime_divisors(b.unsigned_abs())) {
                places.push(Place::Prime(q));
            }
            places.sort();
            places.dedup();
            let product: i32 = places.iter().map(|&v| h(a, b, v)).product();
            prop_assert_eq!(product, 1);
        }

        #[test]
        fn symmetric_and_bimultiplicative(a in nonzero(), b in nonzero(), c in nonzero()) {
            for v in [Place::Prime(2), Place::Prime(3), Place::Prime(5), Place::Infinity] {
                prop_assert_eq!(h(a, b, v), h(b, a, v));
                prop_assert_eq!(h(a, b * c, v), h(a, b, v) * h(a, c, v));
                prop_assert_eq!(h(a, -a, v), 1);
            }
        }
    }
}
