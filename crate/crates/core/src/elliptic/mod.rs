//! Elliptic curves over `Q` in long Weierstrass form with exact rational
//! coefficients.

mod models;
mod point;
mod reduction;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::is_squarefree;
use crate::{Error, Result};

pub(crate) use models::require_twist_condition;
pub use models::{base_curve, c_curve, e11, e19, example1_curve, example2_curve, Level};
pub use point::ProjectivePoint;
pub use reduction::{ap, bad_reduction_ap, count_points_mod};

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6` with `Δ ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassCurve {
    a1: BigRational,
    a2: BigRational,
    a3: BigRational,
    a4: BigRational,
    a6: BigRational,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl WeierstrassCurve {
    pub fn new(coeffs: [BigRational; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = coeffs;
        let c = WeierstrassCurve { a1, a2, a3, a4, a6 };
        if c.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    pub fn from_ints(coeffs: [i64; 5]) -> Result<Self> {
        Self::new(coeffs.map(q))
    }

    pub fn from_big_ints(coeffs: [BigInt; 5]) -> Result<Self> {
        Self::new(coeffs.map(BigRational::from_integer))
    }

    /// Coefficients in the order `[a1, a2, a3, a4, a6]`.
    pub fn coefficients(&self) -> [&BigRational; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn a1(&self) -> &BigRational {
        &self.a1
    }
    pub fn a2(&self) -> &BigRational {
        &self.a2
    }
    pub fn a3(&self) -> &BigRational {
        &self.a3
    }
    pub fn a4(&self) -> &BigRational {
        &self.a4
    }
    pub fn a6(&self) -> &BigRational {
        &self.a6
    }

    pub fn b2(&self) -> BigRational {
        &self.a1 * &self.a1 + q(4) * &self.a2
    }
    pub fn b4(&self) -> BigRational {
        q(2) * &self.a4 + &self.a1 * &self.a3
    }
    pub fn b6(&self) -> BigRational {
        &self.a3 * &self.a3 + q(4) * &self.a6
    }
    pub fn b8(&self) -> BigRational {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        a1 * a1 * a6 + q(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    }
    pub fn c4(&self) -> BigRational {
        let b2 = self.b2();
        &b2 * &b2 - q(24) * self.b4()
    }
    pub fn c6(&self) -> BigRational {
        let b2 = self.b2();
        -(&b2 * &b2 * &b2) + q(36) * &b2 * self.b4() - q(216) * self.b6()
    }
    pub fn discriminant(&self) -> BigRational {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        -(&b2 * &b2 * &b8) - q(8) * &b4 * &b4 * &b4 - q(27) * &b6 * &b6 + q(9) * &b2 * &b4 * &b6
    }
    pub fn j_invariant(&self) -> BigRational {
        let c4 = self.c4();
        &c4 * &c4 * &c4 / self.discriminant()
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients().iter().all(|a| a.is_integer())
    }

    /// Integer coefficients, or an error for a non-integral model.
    pub fn integer_coefficients(&self) -> Result<[BigInt; 5]> {
        if !self.is_integral() {
            return Err(Error::NonIntegralModel);
        }
        Ok(self.coefficients().map(|a| a.to_integer()))
    }

    /// The model obtained by the substitution `x = u²x'`, `y = u³y'`.
    pub fn scale(&self, u: &BigRational) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::InvalidArgument("scaling by zero".into()));
        }
        let mut p = BigRational::one();
        let mut powers = Vec::with_capacity(7);
        for _ in 0..=6 {
            powers.push(p.clone());
            p *= u;
        }
        Self::new([
            &self.a1 / &powers[1],
            &self.a2 / &powers[2],
            &self.a3 / &powers[3],
            &self.a4 / &powers[4],
            &self.a6 / &powers[6],
        ])
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}, {}]",
            self.a1, self.a2, self.a3, self.a4, self.a6
        )
    }
}

impl Serialize for WeierstrassCurve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(5))?;
        for a in self.coefficients() {
            seq.serialize_element(&a.to_string())?;
        }
        seq.end()
    }
}

/// Quadratic twist by the squarefree integer `d`: the curve with covariants
/// `d²·c4`, `d³·c6`, in the model `y² = x³ − 27d²c4·x − 54d³c6`.
pub fn quadratic_twist(curve: &WeierstrassCurve, d: i64) -> Result<WeierstrassCurve> {
    if d == 0 || !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    let d = q(d);
    let a4 = -q(27) * &d * &d * curve.c4();
    let a6 = -q(54) * &d * &d * &d * curve.c6();
    WeierstrassCurve::new([q(0), q(0), q(0), a4, a6])
}

/// `Some(r)` with `r^k = x` when `x` is the `k`-th power of a rational.
fn rational_root(x: &BigRational, k: u32) -> Option<BigRational> {
    if x.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let root = |n: &BigInt| -> Option<BigInt> {
        let r = n.nth_root(k);
        (r.pow(k) == *n).then_some(r)
    };
    Some(BigRational::new(root(x.numer())?, root(x.denom())?))
}

/// Whether the two curves are isomorphic over `Q` as elliptic curves:
/// `c4' = u⁴·c4` and `c6' = u⁶·c6` for some rational `u ≠ 0`.
pub fn curves_isomorphic(c1: &WeierstrassCurve, c2: &WeierstrassCurve) -> bool {
    let (c4, c6) = (c1.c4(), c1.c6());
    let (d4, d6) = (c2.c4(), c2.c6());
    if c4.is_zero() != d4.is_zero() || c6.is_zero() != d6.is_zero() {
        return false;
    }
    if c4.is_zero() {
        return rational_root(&(d6 / c6), 6).is_some();
    }
    if c6.is_zero() {
        return rational_root(&(d4 / c4), 4).is_some();
    }
    let r4 = &d4 / &c4;
    let r6 = &d6 / &c6;
    // u² = r6 / r4
    let Some(u) = rational_root(&(&r6 / &r4), 2) else {
        return false;
    };
    let u2 = &u * &u;
    &u2 * &u2 == r4 && &u2 * &u2 * &u2 == r6
}
