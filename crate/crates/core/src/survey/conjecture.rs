use num_integer::Integer;

use crate::arith::{class_number, field_discriminant, primes_up_to};
use crate::{Error, Result};

/// Number of primes `p ≤ bound`, `p ≠ 3`, `p ≡ m (mod M)` for which the class
/// number of `Q(√−3p)` is prime to 3.
pub fn conjecture_count(bound: u64, m: u64, modulus: u64) -> Result<u64> {
    if modulus == 0 || m.gcd(&modulus) != 1 {
        return Err(Error::InvalidArgument(format!(
            "residue {m} is not a unit modulo {modulus}"
        )));
    }
    let mut count = 0;
    for p in primes_up_to(bound) {
        if p == 3 || p % modulus != m % modulus {
            continue;
        }
        let d = field_discriminant(-3 * p as i64)?;
        if class_number(d)? % 3 != 0 {
            count += 1;
        }
    }
    Ok(count)
}
