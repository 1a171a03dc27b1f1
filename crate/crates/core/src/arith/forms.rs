use num_integer::Integer;
use serde::Serialize;

use super::is_squarefree;
use crate::{Error, Result};

/// Discriminant of a quadratic order: a nonzero non-square `D ≡ 0, 1 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(value: i64) -> Result<Self> {
        if value == 0 {
            return Err(Error::InvalidDiscriminant(value, "zero"));
        }
        if !matches!(value.rem_euclid(4), 0 | 1) {
            return Err(Error::InvalidDiscriminant(value, "not 0 or 1 mod 4"));
        }
        if value > 0 && value.isqrt().pow(2) == value {
            return Err(Error::InvalidDiscriminant(value, "perfect square"));
        }
        Ok(Discriminant(value))
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

/// Discriminant of `Q(√m)` for squarefree `m ≠ 0, 1`.
pub fn field_discriminant(m: i64) -> Result<Discriminant> {
    if m == 1 || !is_squarefree(m) {
        return Err(Error::NotSquarefree(m));
    }
    let d = if m.rem_euclid(4) == 1 { m } else { 4 * m };
    Discriminant::new(d)
}

/// Reduced primitive positive-definite forms `(a, b, c)` of discriminant `D < 0`.
pub fn reduced_forms(d: Discriminant) -> Result<Vec<(i64, i64, i64)>> {
    let d = d.value();
    if d >= 0 {
        return Err(Error::InvalidDiscriminant(d, "class numbers need D < 0"));
    }
    let n = -d;
    let mut out = Vec::new();
    // reduced forms have 3b² ≤ |D|
    let mut b = n & 1;
    while 3 * b * b <= n {
        let ac = (b * b + n) / 4;
        let mut a = b.max(1);
        while a * a <= ac {
            if ac % a == 0 {
                let c = ac / a;
                if a.gcd(&b).gcd(&c) == 1 {
                    out.push((a, b, c));
                    if b != 0 && b != a && a != c {
                        out.push((a, -b, c));
                    }
                }
            }
            a += 1;
        }
        b += 2;
    }
    out.sort();
    Ok(out)
}

/// Class number `h(D)` of the imaginary quadratic order of discriminant `D`.
pub fn class_number(d: Discriminant) -> Result<u64> {
    Ok(reduced_forms(d)?.len() as u64)
}
