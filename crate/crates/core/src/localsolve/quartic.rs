use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::p_star;
use crate::{Error, Result};

/// `x⁴ + 2x³ − 39x² − 176x − 212`, a quartic with `y² = P(x)` birational
/// to `X_0(17)` and the Atkin-Lehner involution acting as `y ↦ −y`.
pub const C17_QUARTIC: [i64; 5] = [1, 2, -39, -176, -212];

/// `d·y² = c4·x⁴ + c3·x³ + c2·x² + c1·x + c0` with `d ≠ 0`, `c4 ≠ 0` and
/// nonzero discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticModel {
    d: BigInt,
    /// `[c4, c3, c2, c1, c0]`
    coeffs: [BigInt; 5],
}

impl QuarticModel {
    pub fn new(d: BigInt, coeffs: [BigInt; 5]) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InvalidQuartic("d = 0"));
        }
        if coeffs[0].is_zero() {
            return Err(Error::InvalidQuartic("leading coefficient is zero"));
        }
        let m = QuarticModel { d, coeffs };
        if m.discriminant().is_zero() {
            return Err(Error::InvalidQuartic("P has a repeated root"));
        }
        Ok(m)
    }

    pub fn from_ints(d: i64, coeffs: [i64; 5]) -> Result<Self> {
        Self::new(d.into(), coeffs.map(BigInt::from))
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// `[c4, c3, c2, c1, c0]`.
    pub fn coefficients(&self) -> &[BigInt; 5] {
        &self.coeffs
    }

    /// Discriminant of `P` via the invariants `I`, `J`: `(4I³ − J²)/27`.
    pub fn discriminant(&self) -> BigInt {
        let [a, b, c, d, e] = &self.coeffs;
        let i = BigInt::from(12) * a * e - BigInt::from(3) * b * d + c * c;
        let j = BigInt::from(72) * a * c * e + BigInt::from(9) * b * c * d
            - BigInt::from(27) * a * d * d
            - BigInt::from(27) * e * b * b
            - BigInt::from(2) * c * c * c;
        (BigInt::from(4) * &i * &i * &i - &j * &j) / BigInt::from(27)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `d·P(x)` as ascending coefficients.
    pub(crate) fn scaled_ascending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().map(|c| c * &self.d).collect()
    }

    /// `d·x⁴·P(1/x)` as ascending coefficients.
    pub(crate) fn scaled_reciprocal(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c * &self.d).collect()
    }
}

impl fmt::Display for QuarticModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*y^2 = ", self.d)?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = 4 - i;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = power == 0 || mag != BigInt::from(1);
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QuarticModel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The genus-one model `p*·y² = x⁴ + 2x³ − 39x² − 176x − 212` of `C(17,p)`.
pub fn c17_model(p: u64) -> Result<QuarticModel> {
    crate::elliptic::require_twist_condition(17, p)?;
    QuarticModel::from_ints(p_star(p)?, C17_QUARTIC)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_of_split_quartic() {
        // (x−1)(x−2)(x−3)(x−4): Π (r_i − r_j)² = 12²
        let m = QuarticModel::from_ints(1, [1, -10, 35, -50, 24]).unwrap();
        assert_eq!(m.discriminant(), BigInt::from(144));
        assert!(QuarticModel::from_ints(1, [1, 0, -2, 0, 1]).is_err()); // (x²−1)²
        assert!(QuarticModel::from_ints(0, [1, 0, 0, 0, 1]).is_err());
        assert!(QuarticModel::from_ints(1, [0, 1, 0, 0, 1]).is_err());
    }

    #[test]
    fn c17_models() {
        let m = c17_model(5).unwrap();
        assert_eq!(m.d(), &BigInt::from(5));
        assert_eq!(m.to_string(), "5*y^2 = x^4 + 2x^3 - 39x^2 - 176x - 212");
        assert_eq!(c17_model(3).unwrap().d(), &BigInt::from(-3));
        assert!(matches!(
            c17_model(13),
            Err(Error::KroneckerCondition { symbol: 1, .. })
        ));
        assert!(c17_model(17).is_err());
        assert!(!m.discriminant().is_zero());
        assert_eq!(m.evaluate(&BigInt::from(0)), BigInt::from(-212));
    }
}
