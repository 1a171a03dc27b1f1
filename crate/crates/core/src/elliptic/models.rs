use std::fmt;

use serde::Serialize;

use super::{quadratic_twist, WeierstrassCurve};
use crate::arith::{is_prime, kronecker, p_star};
use crate::{Error, Result};

/// The two levels whose twists `C(N,p)` are elliptic curves over `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Eleven,
    Nineteen,
}

impl Level {
    pub const ALL: [Level; 2] = [Level::Eleven, Level::Nineteen];

    pub fn value(self) -> u64 {
        match self {
            Level::Eleven => 11,
            Level::Nineteen => 19,
        }
    }
}

impl TryFrom<u64> for Level {
    type Error = Error;

    fn try_from(n: u64) -> Result<Self> {
        match n {
            11 => Ok(Level::Eleven),
            19 => Ok(Level::Nineteen),
            _ => Err(Error::UnsupportedLevel(
                n,
                "only X_0(11) and X_0(19) are handled",
            )),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for Level {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.value())
    }
}

/// `X_0(11)`: `y² + y = x³ − x² − 10x − 20`.
pub fn e11() -> WeierstrassCurve {
    WeierstrassCurve::from_ints([0, -1, 1, -10, -20]).expect("nonsingular")
}

/// `X_0(19)`: `y² + y = x³ + x² − 9x − 15`.
pub fn e19() -> WeierstrassCurve {
    WeierstrassCurve::from_ints([0, 1, 1, -9, -15]).expect("nonsingular")
}

pub fn base_curve(level: Level) -> WeierstrassCurve {
    match level {
        Level::Eleven => e11(),
        Level::Nineteen => e19(),
    }
}

/// The printed model of `C(11,4079)`.
pub fn example1_curve() -> WeierstrassCurve {
    WeierstrassCurve::from_ints([0, -1, 1, -171_928_490, 1_571_689_994_520]).expect("nonsingular")
}

/// The printed model of `C(19,5591)`.
pub fn example2_curve() -> WeierstrassCurve {
    WeierstrassCurve::from_ints([0, 1, 1, -291_753_289, 2_040_511_796_399]).expect("nonsingular")
}

/// Checks the twisting hypothesis `(N/p) = −1` for an odd prime `p`.
pub(crate) fn require_twist_condition(n: u64, p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let symbol = kronecker(n as i64, p as i64);
    if symbol != -1 {
        return Err(Error::KroneckerCondition {
            n: n as i64,
            p,
            symbol,
        });
    }
    Ok(())
}

/// `C(N,p)` for `N ∈ {11, 19}`: the quadratic twist of `X_0(N)` by `p*`.
pub fn c_curve(n: u64, p: u64) -> Result<WeierstrassCurve> {
    let level = Level::try_from(n)?;
    require_twist_condition(n, p)?;
    quadratic_twist(&base_curve(level), p_star(p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::curves_isomorphic;

    #[test]
    fn base_models_untwist_the_printed_examples() {
        assert!(curves_isomorphic(
            &quadratic_twist(&e11(), -4079).unwrap(),
            &example1_curve()
        ));
        assert!(curves_isomorphic(
            &quadratic_twist(&e19(), -5591).unwrap(),
            &example2_curve()
        ));
        assert!(!curves_isomorphic(
            &quadratic_twist(&e11(), 1).unwrap(),
            &example1_curve()
        ));
        assert!(!curves_isomorphic(
            &quadratic_twist(&e19(), -4079).unwrap(),
            &example2_curve()
        ));
    }

    #[test]
    fn c_curve_examples() {
        assert!(curves_isomorphic(
            &c_curve(11, 4079).unwrap(),
            &example1_curve()
        ));
        assert!(curves_isomorphic(
            &c_curve(19, 5591).unwrap(),
            &example2_curve()
        ));
        assert!(matches!(
            c_curve(11, 7),
            Err(Error::KroneckerCondition { symbol: 1, .. })
        ));
        assert!(c_curve(17, 5).is_err());
        assert!(c_curve(11, 2).is_err());
        assert!(c_curve(11, 4077).is_err());
    }

    #[test]
    fn levels() {
        assert_eq!(Level::try_from(19).unwrap(), Level::Nineteen);
        assert!(Level::try_from(17).is_err());
        assert_eq!(Level::Eleven.to_string(), "11");
    }
}
