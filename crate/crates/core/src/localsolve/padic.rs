use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::QuarticModel;
use crate::arith::legendre_big;
use crate::Result;

/// Which affine patch a residue class lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Chart {
    /// `x ∈ Z_ℓ`
    Affine,
    /// `z = 1/x ∈ ℓZ_ℓ`, on `d·w² = z⁴P(1/z)`
    Reciprocal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NodeOutcome {
    /// `d·P(a)` is a nonzero square (or zero).
    Witness,
    /// Newton's method converges to a root of `P` inside the class.
    HenselRoot,
    /// Every value on the class has valuation `valuation` and the same
    /// unit part modulo `ℓ` (modulo 8 at `ℓ = 2`), which is not a square.
    Excluded {
        valuation: u64,
    },
    Split,
}

/// The class `residue + ℓ^depth·Z_ℓ` visited during the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueNode {
    pub chart: Chart,
    #[serde(serialize_with = "ser_display")]
    pub residue: BigInt,
    pub depth: u32,
    pub outcome: NodeOutcome,
}

fn ser_display<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Result of the residue-class search at one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalSearch {
    pub prime: u64,
    pub solvable: bool,
    /// All classes visited, in search order.
    pub nodes: Vec<ResidueNode>,
    pub max_depth: u32,
    /// `v_ℓ(4·disc(P)·d²) + 3`
    pub depth_bound: u32,
    /// Least `k` for which the mod-`ℓ^k` congruence is already insoluble;
    /// `None` when solvable.
    pub obstruction_depth: Option<u32>,
}

// A squarefree quartic is separated from its roots after a depth bounded by
// its discriminant valuation; this cap is never reached for valid models.
const DEPTH_CAP: u32 = 4096;

pub fn solvable_at(model: &QuarticModel, l: u64) -> Result<bool> {
    Ok(local_search(model, l)?.solvable)
}

/// Decides whether `d·y² = P(x)` has a point over `Q_ℓ` by refining residue
/// classes of `x` until every class is either shown to contain a point or
/// shown to take only non-square values.
pub fn local_search(model: &QuarticModel, l: u64) -> Result<LocalSearch> {
    crate::arith::require_prime(l)?;
    let extra = if l == 2 { 3 } else { 1 };
    let mut search = Search {
        l,
        lb: BigInt::from(l),
        extra,
        nodes: Vec::new(),
        max_depth: 0,
        obstruction_depth: 0,
    };
    let affine = model.scaled_ascending();
    let reciprocal = model.scaled_reciprocal();
    let solvable = search.explore(&affine, Chart::Affine, BigInt::zero(), 0)
        || search.explore(&reciprocal, Chart::Reciprocal, BigInt::zero(), 1);
    let disc = model.discriminant() * BigInt::from(4) * model.d() * model.d();
    let depth_bound = valuation(&disc, &search.lb).0 as u32 + 3;
    Ok(LocalSearch {
        prime: l,
        solvable,
        max_depth: search.max_depth,
        depth_bound,
        obstruction_depth: (!solvable).then_some(search.obstruction_depth),
        nodes: search.nodes,
    })
}

struct Search {
    l: u64,
    lb: BigInt,
    extra: u64,
    nodes: Vec<ResidueNode>,
    max_depth: u32,
    obstruction_depth: u32,
}

impl Search {
    fn explore(&mut self, poly: &[BigInt], chart: Chart, residue: BigInt, depth: u32) -> bool {
        assert!(depth < DEPTH_CAP, "residue search failed to separate roots");
        self.max_depth = self.max_depth.max(depth);
        let outcome = self.classify(poly, &residue, depth);
        let split = outcome == NodeOutcome::Split;
        let found = matches!(outcome, NodeOutcome::Witness | NodeOutcome::HenselRoot);
        if let NodeOutcome::Excluded { valuation } = outcome {
            let need = (valuation + self.extra).max(depth as u64) as u32;
            self.obstruction_depth = self.obstruction_depth.max(need);
        }
        self.nodes.push(ResidueNode {
            chart,
            residue: residue.clone(),
            depth,
            outcome,
        });
        if found {
            return true;
        }
        if !split {
            return false;
        }
        let step = self.lb.pow(depth);
        (0..self.l).any(|r| {
            let child = &residue + &step * BigInt::from(r);
            self.explore(poly, chart, child, depth + 1)
        })
    }

    fn classify(&self, poly: &[BigInt], a: &BigInt, k: u32) -> NodeOutcome {
        let t = taylor_shift(poly, a);
        if t[0].is_zero() {
            return NodeOutcome::Witness;
        }
        let (v, unit) = valuation(&t[0], &self.lb);
        if v % 2 == 0 && self.unit_is_square(&unit) {
            return NodeOutcome::Witness;
        }
        if !t[1].is_zero() {
            let w = valuation(&t[1], &self.lb).0;
            if v > 2 * w && v - w >= k as u64 {
                return NodeOutcome::HenselRoot;
            }
        }
        let closed = t.iter().enumerate().skip(1).all(|(i, ti)| {
            ti.is_zero() || valuation(ti, &self.lb).0 + i as u64 * k as u64 >= v + self.extra
        });
        if closed {
            NodeOutcome::Excluded { valuation: v }
        } else {
            NodeOutcome::Split
        }
    }

    fn unit_is_square(&self, u: &BigInt) -> bool {
        if self.l == 2 {
            u.mod_floor(&BigInt::from(8)).is_one()
        } else {
            legendre_big(u, self.l) == 1
        }
    }
}

/// Coefficients of `f(a + X)`, ascending.
fn taylor_shift(poly: &[BigInt], a: &BigInt) -> Vec<BigInt> {
    let mut c = poly.to_vec();
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &c[j + 1] * a;
            c[j] += t;
        }
    }
    c
}

/// `(v, u)` with `x = ℓ^v·u`, `ℓ ∤ u`. `x` must be nonzero.
pub(crate) fn valuation(x: &BigInt, l: &BigInt) -> (u64, BigInt) {
    debug_assert!(!x.is_zero());
    let mut v = 0;
    let mut u = x.clone();
    loop {
        let (q, r) = u.div_rem(l);
        if !r.is_zero() {
            return (v, u);
        }
        u = q;
        v += 1;
    }
}
