use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::WeierstrassCurve;
use crate::{Error, Result};

/// Homogeneous coordinates `[X:Y:Z]` normalised to a primitive integer
/// triple with `Z ≥ 0` (and `Y > 0` when `Z = 0`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ProjectivePoint {
    #[serde(serialize_with = "ser_big")]
    x: BigInt,
    #[serde(serialize_with = "ser_big")]
    y: BigInt,
    #[serde(serialize_with = "ser_big")]
    z: BigInt,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl ProjectivePoint {
    pub fn new(x: BigInt, y: BigInt, z: BigInt) -> Result<Self> {
        if x.is_zero() && y.is_zero() && z.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let g = x.gcd(&y).gcd(&z);
        let (mut x, mut y, mut z) = (x / &g, y / &g, z / &g);
        let flip = z.is_negative()
            || (z.is_zero() && (y.is_negative() || (y.is_zero() && x.is_negative())));
        if flip {
            x = -x;
            y = -y;
            z = -z;
        }
        Ok(ProjectivePoint { x, y, z })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new(x.into(), y.into(), z.into())
    }

    /// Parses `"X:Y:Z"` (brackets and whitespace optional).
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<&str> = body.split(':').map(str::trim).collect();
        let bad = || Error::InvalidArgument(format!("cannot parse point {s:?}"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut c = parts.iter().map(|p| p.parse::<BigInt>().map_err(|_| bad()));
        Self::new(c.next().unwrap()?, c.next().unwrap()?, c.next().unwrap()?)
    }

    pub fn infinity() -> Self {
        ProjectivePoint {
            x: BigInt::zero(),
            y: BigInt::one(),
            z: BigInt::zero(),
        }
    }

    pub fn affine(x: &BigRational, y: &BigRational) -> Self {
        let l = x.denom().lcm(y.denom());
        let xn = x.numer() * (&l / x.denom());
        let yn = y.numer() * (&l / y.denom());
        Self::new(xn, yn, l).expect("z is nonzero")
    }

    pub fn is_infinity(&self) -> bool {
        self.z.is_zero()
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }
    pub fn y(&self) -> &BigInt {
        &self.y
    }
    pub fn z(&self) -> &BigInt {
        &self.z
    }

    fn to_affine(&self) -> Option<(BigRational, BigRational)> {
        if self.is_infinity() {
            return None;
        }
        Some((
            BigRational::new(self.x.clone(), self.z.clone()),
            BigRational::new(self.y.clone(), self.z.clone()),
        ))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.x, self.y, self.z)
    }
}

impl WeierstrassCurve {
    /// Whether `[X:Y:Z]` satisfies
    /// `Y²Z + a1·XYZ + a3·YZ² = X³ + a2·X²Z + a4·XZ² + a6·Z³`.
    pub fn on_curve(&self, p: &ProjectivePoint) -> bool {
        let r = |n: &BigInt| BigRational::from_integer(n.clone());
        let (x, y, z) = (r(&p.x), r(&p.y), r(&p.z));
        let lhs = &y * &y * &z + self.a1() * &x * &y * &z + self.a3() * &y * &z * &z;
        let rhs = &x * &x * &x
            + self.a2() * &x * &x * &z
            + self.a4() * &x * &z * &z
            + self.a6() * &z * &z * &z;
        lhs == rhs
    }

    fn check(&self, p: &ProjectivePoint) -> Result<()> {
        if self.on_curve(p) {
            Ok(())
        } else {
            Err(Error::PointNotOnCurve)
        }
    }

    pub fn negate(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        self.check(p)?;
        Ok(self.negate_unchecked(p))
    }

    fn negate_unchecked(&self, p: &ProjectivePoint) -> ProjectivePoint {
        match p.to_affine() {
            None => ProjectivePoint::infinity(),
            Some((x, y)) => {
                let ny = -&y - self.a1() * &x - self.a3();
                ProjectivePoint::affine(&x, &ny)
            }
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectivePoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &ProjectivePoint, q: &ProjectivePoint) -> ProjectivePoint {
        let (Some((x1, y1)), Some((x2, y2))) = (p.to_affine(), q.to_affine()) else {
            return if p.is_infinity() {
                q.clone()
            } else {
                p.clone()
            };
        };
        let (a1, a2, a3, a4, a6) = (self.a1(), self.a2(), self.a3(), self.a4(), self.a6());
        let (lambda, nu) = if x1 == x2 {
            let denom = &y1 + &y2 + a1 * &x2 + a3;
            if denom.is_zero() {
                return ProjectivePoint::infinity();
            }
            let three = BigRational::from_integer(3.into());
            let two = BigRational::from_integer(2.into());
            let lambda = (&three * &x1 * &x1 + &two * a2 * &x1 + a4 - a1 * &y1) / &denom;
            let nu = (-(&x1 * &x1 * &x1) + a4 * &x1 + &two * a6 - a3 * &y1) / &denom;
            (lambda, nu)
        } else {
            let dx = &x2 - &x1;
            ((&y2 - &y1) / &dx, (&y1 * &x2 - &y2 * &x1) / &dx)
        };
        let x3 = &lambda * &lambda + a1 * &lambda - a2 - &x1 - &x2;
        let y3 = -(&lambda + a1) * &x3 - nu - a3;
        ProjectivePoint::affine(&x3, &y3)
    }

    /// `n·P` by double-and-add; negative `n` multiplies `−P`.
    pub fn multiply(&self, p: &ProjectivePoint, n: i64) -> Result<ProjectivePoint> {
        self.check(p)?;
        let mut base = if n < 0 {
            self.negate_unchecked(p)
        } else {
            p.clone()
        };
        let mut k = n.unsigned_abs();
        let mut acc = ProjectivePoint::infinity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }

    /// Torsion test by Mazur's bound: a rational torsion point has order at
    /// most 12, so `P` is torsion iff `n·P = O` for some `1 ≤ n ≤ 12`.
    pub fn is_torsion(&self, p: &ProjectivePoint) -> Result<bool> {
        Ok(self.torsion_order(p)?.is_some())
    }

    /// Order of `P` if it is at most 12.
    pub fn torsion_order(&self, p: &ProjectivePoint) -> Result<Option<u32>> {
        self.check(p)?;
        let mut acc = p.clone();
        for n in 1..=12 {
            if acc.is_infinity() {
                return Ok(Some(n));
            }
            acc = self.add_unchecked(&acc, p);
        }
        Ok(None)
    }
}
