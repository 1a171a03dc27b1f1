//! Deficient places of `C(N,p)`: places `v` with `C(N,p)(Q_v) = ∅`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::arith::{
    class_number, factorize, field_discriminant, hilbert_symbol_int, is_prime, is_squarefree,
    kronecker, p_star, prime_divisors, Place,
};
use crate::{Error, Result};

/// Genus of `X_0(N)`.
pub fn genus_x0(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("level must be positive".into()));
    }
    let factors = factorize(n);
    let mu: u64 = factors
        .iter()
        .map(|&(l, e)| l.pow(e - 1) * (l + 1))
        .product();
    let nu = |disc: i64, square: u64| -> u64 {
        if n.is_multiple_of(square) {
            return 0;
        }
        factors
            .iter()
            .map(|&(l, _)| (1 + kronecker(disc, l as i64)) as u64)
            .product()
    };
    let nu2 = nu(-4, 4);
    let nu3 = nu(-3, 9);
    let cusps: u64 = divisors(n)
        .into_iter()
        .map(|d| totient(d.gcd(&(n / d))))
        .sum();
    let twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * cusps;
    Ok(twelve_g / 12)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1];
    for (l, e) in factorize(n) {
        let current = out.clone();
        let mut power = 1;
        for _ in 0..e {
            power *= l;
            out.extend(current.iter().map(|d| d * power));
        }
    }
    out
}

fn totient(n: u64) -> u64 {
    prime_divisors(n).iter().fold(n, |acc, l| acc / l * (l - 1))
}

fn require_squarefree(n: u64) -> Result<()> {
    if n == 0 || !is_squarefree(n as i64) {
        return Err(Error::NotSquarefree(n as i64));
    }
    Ok(())
}

/// Whether `X_0(N)` has a rational point fixed by `w_N`, i.e. whether
/// `Q(√−N)` has class number one.
pub fn rational_fixed_point_exists(n: u64) -> Result<bool> {
    require_squarefree(n)?;
    if n <= 3 {
        return Err(Error::InvalidArgument(format!("level {n} must exceed 3")));
    }
    Ok(class_number(field_discriminant(-(n as i64))?)? == 1)
}

const GENUS_ZERO_CONSTANTS: [(u64, u64); 7] = [
    (2, 1),
    (3, 1),
    (5, 125),
    (6, 18),
    (7, 49),
    (10, 5),
    (13, 13),
];

/// Integer `c_N` with `C(N,p)` obstructed exactly where `⟨c_N, p*⟩` ramifies.
/// Tabulated for the squarefree genus-zero levels, `N^(12/gcd(12, N−1))`
/// for prime `N` of positive genus.
pub fn obstruction_constant(n: u64) -> Result<BigInt> {
    require_squarefree(n)?;
    if let Some(&(_, c)) = GENUS_ZERO_CONSTANTS.iter().find(|(m, _)| *m == n) {
        return Ok(c.into());
    }
    if is_prime(n) {
        return Ok(prime_level_constant(n));
    }
    Err(Error::UnsupportedLevel(
        n,
        "no obstruction constant for composite levels of positive genus",
    ))
}

fn prime_level_constant(n: u64) -> BigInt {
    BigInt::from(n).pow((12 / 12u64.gcd(&(n - 1))) as u32)
}

/// `C(N,p)(Q_N) = ∅` for prime `N`, which happens iff `N ≡ 1 (mod 4)`.
pub fn deficient_at_atkin_prime(n: u64) -> Result<bool> {
    if !is_prime(n) {
        return Err(Error::UnsupportedLevel(n, "level must be prime"));
    }
    Ok(n % 4 == 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Deficient,
    NotDeficient,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Deficient => "deficient",
            Status::NotDeficient => "not-deficient",
            Status::Unknown => "unknown",
        })
    }
}

/// The fact that settled a place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `C(N,p)` always has real points.
    RealPoints,
    /// Good reduction away from `Np` and genus at most one.
    GoodReduction,
    /// Good reduction and `ℓ + 1 > 2g√ℓ`.
    WeilBound,
    /// `⟨c_N, p*⟩_ℓ = −1`.
    QuaternionObstruction,
    /// Local points at `ℓ = N` for prime `N`.
    AtkinLehnerPrime,
    /// Genus zero: the curve is a conic, split wherever `⟨c_N, p*⟩_ℓ = 1`.
    ConicSymbol,
    /// `C(N,p)` has a rational point (`N ∈ {11, 19}`).
    GlobalPoint,
    /// No available criterion applies.
    Open,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::RealPoints => "real-points",
            Rule::GoodReduction => "good-reduction",
            Rule::WeilBound => "weil-bound",
            Rule::QuaternionObstruction => "quaternion-obstruction",
            Rule::AtkinLehnerPrime => "atkin-lehner-prime",
            Rule::ConicSymbol => "conic-symbol",
            Rule::GlobalPoint => "global-point",
            Rule::Open => "open",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeficiencyReport {
    pub n: u64,
    pub p: u64,
    pub genus: u64,
    pub statuses: BTreeMap<Place, Status>,
    pub provenance: BTreeMap<Place, Rule>,
}

impl DeficiencyReport {
    pub fn deficient_places(&self) -> Vec<Place> {
        self.places_with(Status::Deficient)
    }

    pub fn places_with(&self, status: Status) -> Vec<Place> {
        self.statuses
            .iter()
            .filter(|(_, s)| **s == status)
            .map(|(v, _)| *v)
            .collect()
    }
}

/// Status of every place dividing `2·N·p·∞`; places not listed are never
/// deficient when the genus is at most one.
pub fn classify(n: u64, p: u64) -> Result<DeficiencyReport> {
    require_squarefree(n)?;
    crate::elliptic::require_twist_condition(n, p)?;
    let genus = genus_x0(n)?;
    let constant = match obstruction_constant(n) {
        Ok(c) => Some(c),
        Err(Error::UnsupportedLevel(..)) => None,
        Err(e) => return Err(e),
    };
    let pstar = BigInt::from(p_star(p)?);

    let places: Vec<u64> = prime_divisors(2 * n * p);
    let mut statuses = BTreeMap::from([(Place::Infinity, Status::NotDeficient)]);
    let mut provenance = BTreeMap::from([(Place::Infinity, Rule::RealPoints)]);

    if let Some(c) = &constant {
        let mut ramified: Vec<Place> = places
            .iter()
            .map(|&l| Place::Prime(l))
            .chain([Place::Infinity])
            .filter(|&v| hilbert_symbol_int(c, &pstar, v) == -1)
            .collect();
        ramified.sort();
        if ramified.len() % 2 == 1 {
            return Err(Error::RuleConflict {
                place: "all".into(),
                detail: format!("odd number of ramified places {ramified:?}"),
            });
        }
    }

    for l in places {
        let place = Place::Prime(l);
        let mut verdicts: Vec<(Rule, Status)> = Vec::new();
        let symbol = constant
            .as_ref()
            .map(|c| hilbert_symbol_int(c, &pstar, place));
        if symbol == Some(-1) {
            verdicts.push((Rule::QuaternionObstruction, Status::Deficient));
        }
        if l == n && is_prime(n) {
            let status = if deficient_at_atkin_prime(n)? {
                Status::Deficient
            } else {
                Status::NotDeficient
            };
            verdicts.push((Rule::AtkinLehnerPrime, status));
        }
        if !n.is_multiple_of(l) && p != l {
            if genus <= 1 {
                verdicts.push((Rule::GoodReduction, Status::NotDeficient));
            } else if (l + 1).pow(2) > 4 * genus * genus * l {
                verdicts.push((Rule::WeilBound, Status::NotDeficient));
            }
        }
        if genus == 0 && symbol == Some(1) {
            verdicts.push((Rule::ConicSymbol, Status::NotDeficient));
        }
        if n == 11 || n == 19 {
            verdicts.push((Rule::GlobalPoint, Status::NotDeficient));
        }

        let (rule, status) = verdicts
            .first()
            .copied()
            .unwrap_or((Rule::Open, Status::Unknown));
        if let Some((other, _)) = verdicts.iter().find(|(_, s)| *s != status) {
            return Err(Error::RuleConflict {
                place: place.to_string(),
                detail: format!("{rule} says {status}, {other} disagrees"),
            });
        }
        statuses.insert(place, status);
        provenance.insert(place, rule);
    }
    Ok(DeficiencyReport {
        n,
        p,
        genus,
        statuses,
        provenance,
    })
}
