//! Python bindings: `import atkin_twists_py`.

use std::collections::BTreeMap;

use atkin_twists::arith::{self, Discriminant, Place};
use atkin_twists::elliptic::{self, ProjectivePoint};
use atkin_twists::lseries::{self, RankEstimate};
use atkin_twists::{deficiency, localsolve, survey};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: atkin_twists::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn place(p: Option<u64>) -> PyResult<Place> {
    match p {
        None => Ok(Place::Infinity),
        Some(p) => Place::prime(p).map_err(err),
    }
}

#[pyfunction]
fn kronecker(a: i64, n: i64) -> i32 {
    arith::kronecker(a, n)
}

#[pyfunction]
fn is_prime(n: u64) -> bool {
    arith::is_prime(n)
}

#[pyfunction]
fn p_star(p: u64) -> PyResult<i64> {
    arith::p_star(p).map_err(err)
}

/// Hilbert symbol at the prime `place`, or at the real place when `None`.
#[pyfunction]
#[pyo3(signature = (a, b, place=None))]
fn hilbert_symbol(a: BigInt, b: BigInt, place: Option<u64>) -> PyResult<i32> {
    Ok(arith::hilbert_symbol_int(&a, &b, self::place(place)?))
}

#[pyfunction]
fn class_number(d: i64) -> PyResult<u64> {
    arith::class_number(Discriminant::new(d).map_err(err)?).map_err(err)
}

#[pyclass(module = "atkin_twists_py", frozen)]
struct Curve(elliptic::WeierstrassCurve);

#[pymethods]
impl Curve {
    #[new]
    fn new(a: [BigInt; 5]) -> PyResult<Self> {
        elliptic::WeierstrassCurve::from_big_ints(a)
            .map(Curve)
            .map_err(err)
    }

    /// `C(N,p)` for `N ∈ {11, 19}`.
    #[staticmethod]
    fn twist(n: u64, p: u64) -> PyResult<Self> {
        elliptic::c_curve(n, p).map(Curve).map_err(err)
    }

    fn discriminant(&self) -> String {
        self.0.discriminant().to_string()
    }

    fn j_invariant(&self) -> String {
        self.0.j_invariant().to_string()
    }

    fn is_isomorphic(&self, other: &Curve) -> bool {
        elliptic::curves_isomorphic(&self.0, &other.0)
    }

    /// `point` is `"X:Y:Z"`.
    fn contains(&self, point: &str) -> PyResult<bool> {
        Ok(self
            .0
            .on_curve(&ProjectivePoint::parse(point).map_err(err)?))
    }

    fn is_torsion(&self, point: &str) -> PyResult<bool> {
        let p = ProjectivePoint::parse(point).map_err(err)?;
        self.0.is_torsion(&p).map_err(err)
    }

    fn ap(&self, l: u64) -> PyResult<i64> {
        elliptic::ap(&self.0, l).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Curve({})", self.0)
    }
}

#[pyclass(module = "atkin_twists_py", frozen, get_all)]
struct RankVerdict {
    level: u64,
    p: u64,
    sign: i32,
    estimate: String,
    l_value: f64,
    l_prime_value: f64,
    nmax_used: usize,
}

#[pymethods]
impl RankVerdict {
    fn __repr__(&self) -> String {
        format!(
            "RankVerdict(C({},{}), estimate={}, L1={:e}, L1prime={:e})",
            self.level, self.p, self.estimate, self.l_value, self.l_prime_value
        )
    }
}

impl From<lseries::RankVerdict> for RankVerdict {
    fn from(v: lseries::RankVerdict) -> Self {
        RankVerdict {
            level: v.level.value(),
            p: v.p,
            sign: v.sign,
            estimate: v.estimate.label().to_string(),
            l_value: v.l_value,
            l_prime_value: v.l_prime_value,
            nmax_used: v.nmax_used,
        }
    }
}

#[pyfunction]
#[pyo3(signature = (n, p, tau=lseries::DEFAULT_TAU))]
fn analytic_rank(py: Python<'_>, n: u64, p: u64, tau: f64) -> PyResult<RankVerdict> {
    py.detach(|| lseries::analytic_rank(n, p, tau))
        .map(RankVerdict::from)
        .map_err(err)
}

/// Label of every rank estimate, in order.
#[pyfunction]
fn rank_estimates() -> Vec<&'static str> {
    [
        RankEstimate::Zero,
        RankEstimate::One,
        RankEstimate::ApparentEvenAtLeastTwo,
        RankEstimate::ApparentOddAtLeastThree,
    ]
    .map(RankEstimate::label)
    .to_vec()
}

#[pyclass(module = "atkin_twists_py", frozen)]
struct Quartic(localsolve::QuarticModel);

#[pymethods]
impl Quartic {
    /// `d·y² = c4·x⁴ + … + c0` with `coeffs = [c4, c3, c2, c1, c0]`.
    #[new]
    fn new(d: BigInt, coeffs: [BigInt; 5]) -> PyResult<Self> {
        localsolve::QuarticModel::new(d, coeffs)
            .map(Quartic)
            .map_err(err)
    }

    #[staticmethod]
    fn c17(p: u64) -> PyResult<Self> {
        localsolve::c17_model(p).map(Quartic).map_err(err)
    }

    fn discriminant(&self) -> BigInt {
        self.0.discriminant()
    }

    fn solvable_real(&self) -> bool {
        localsolve::solvable_real(&self.0)
    }

    fn solvable_at(&self, l: u64) -> PyResult<bool> {
        localsolve::solvable_at(&self.0, l).map_err(err)
    }

    /// Least `k` with no solution modulo `ℓ^k`, or `None` if solvable.
    fn obstruction_depth(&self, l: u64) -> PyResult<Option<u32>> {
        Ok(localsolve::local_search(&self.0, l)
            .map_err(err)?
            .obstruction_depth)
    }

    fn exhaustive_oracle(&self, l: u64, k: u32) -> PyResult<bool> {
        localsolve::exhaustive_oracle(&self.0, l, k).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Quartic({})", self.0)
    }
}

/// `{place: status}` with places as strings (`"inf"` for the real place).
#[pyfunction]
fn deficient_places(n: u64, p: u64) -> PyResult<BTreeMap<String, String>> {
    let r = deficiency::classify(n, p).map_err(err)?;
    Ok(r.statuses
        .iter()
        .map(|(v, s)| (v.to_string(), s.to_string()))
        .collect())
}

#[pyfunction]
fn genus_x0(n: u64) -> PyResult<u64> {
    deficiency::genus_x0(n).map_err(err)
}

#[pyfunction]
fn census_stratum_a(bound: u64) -> Vec<u64> {
    survey::census_stratum_a(bound)
        .iter()
        .map(|r| r.p)
        .collect()
}

#[pyfunction]
fn census_stratum_b(bound: u64) -> Vec<u64> {
    survey::census_stratum_b(bound)
        .iter()
        .map(|r| r.p)
        .collect()
}

/// Whether both worked examples pass every check.
#[pyfunction]
fn verify_examples() -> PyResult<bool> {
    Ok(survey::verify_examples()
        .map_err(err)?
        .iter()
        .all(|c| c.passed()))
}

#[pyfunction]
fn conjecture_count(bound: u64, m: u64, modulus: u64) -> PyResult<u64> {
    survey::conjecture_count(bound, m, modulus).map_err(err)
}

#[pymodule]
fn atkin_twists_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Curve>()?;
    m.add_class::<Quartic>()?;
    m.add_class::<RankVerdict>()?;
    m.add_function(wrap_pyfunction!(kronecker, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(p_star, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(class_number, m)?)?;
    m.add_function(wrap_pyfunction!(analytic_rank, m)?)?;
    m.add_function(wrap_pyfunction!(rank_estimates, m)?)?;
    m.add_function(wrap_pyfunction!(deficient_places, m)?)?;
    m.add_function(wrap_pyfunction!(genus_x0, m)?)?;
    m.add_function(wrap_pyfunction!(census_stratum_a, m)?)?;
    m.add_function(wrap_pyfunction!(census_stratum_b, m)?)?;
    m.add_function(wrap_pyfunction!(verify_examples, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_count, m)?)?;
    Ok(())
}
