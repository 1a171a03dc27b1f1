use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{kronecker, primes_up_to};
use crate::elliptic::Level;
use crate::lseries::{
    analytic_rank_with, sign, terms_needed, BaseTable, RankEstimate, RankVerdict,
};
use crate::Result;

pub const CENSUS_BOUND: u64 = 300_000;

/// `q` in the symbols `(q/p)` recorded for every prime.
pub const SYMBOL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 19];

/// Primes `p ≡ 3 (mod 4)` for which a twist `C(N,p)` of even sign has
/// vanishing `L(1)` and a known point of infinite order.
pub const RANK_TWO_PRIMES: [u64; 7] = [4079, 5591, 6719, 10391, 19319, 24359, 26759];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Stratum {
    /// `p ≡ 1 (mod 4)`: sign −1, realization through analytic rank one.
    A,
    /// `p ≡ 3 (mod 4)`: sign +1, realization needs rank at least two.
    B,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusRecord {
    pub p: u64,
    pub stratum: Stratum,
    pub mod4: u8,
    /// `(q/p)` for `q` in [`SYMBOL_PRIMES`].
    pub symbols: [i32; 6],
    /// Levels `N` with `(N/p) = −1`.
    pub levels: Vec<Level>,
    /// Level used for realization; unset while verdicts are pending and
    /// more than one level is available.
    pub chosen_n: Option<Level>,
    pub sign: i32,
    /// One verdict per entry of `levels`, empty while pending.
    pub verdicts: Vec<RankVerdict>,
    /// `None` while pending.
    pub realized: Option<bool>,
}

impl CensusRecord {
    fn new(p: u64) -> Option<Self> {
        if !is_new_prime(p) {
            return None;
        }
        let symbols = SYMBOL_PRIMES.map(|q| kronecker(q as i64, p as i64));
        let levels: Vec<Level> = Level::ALL
            .into_iter()
            .filter(|l| kronecker(l.value() as i64, p as i64) == -1)
            .collect();
        let first = *levels.first()?;
        let stratum = if p % 4 == 1 { Stratum::A } else { Stratum::B };
        Some(CensusRecord {
            p,
            stratum,
            mod4: (p % 4) as u8,
            symbols,
            chosen_n: (levels.len() == 1).then_some(first),
            sign: sign(first.value(), p).expect("twist condition holds"),
            levels,
            verdicts: Vec::new(),
            realized: None,
        })
    }

    /// The estimate that realizes `PSL_2(F_p)` in this stratum.
    pub fn target_estimate(&self) -> RankEstimate {
        match self.stratum {
            Stratum::A => RankEstimate::One,
            Stratum::B => RankEstimate::ApparentEvenAtLeastTwo,
        }
    }

    /// Verdict for the chosen level, if computed.
    pub fn chosen_verdict(&self) -> Option<&RankVerdict> {
        let n = self.chosen_n?;
        self.verdicts.iter().find(|v| v.level == n)
    }

    fn set_verdicts(&mut self, verdicts: Vec<RankVerdict>) {
        let target = self.target_estimate();
        let hit = verdicts
            .iter()
            .find(|v| v.estimate == target)
            .map(|v| v.level);
        self.realized = Some(hit.is_some());
        self.chosen_n = hit.or(self.levels.first().copied());
        self.verdicts = verdicts;
    }
}

/// Odd `p` not already handled by the earlier criteria: `(q/p) = 1` for
/// `q = 2, 3, 5, 7`.
pub fn is_new_prime(p: u64) -> bool {
    p > 7 && [2, 3, 5, 7].iter().all(|&q| kronecker(q, p as i64) == 1)
}

pub fn new_primes(bound: u64) -> Vec<u64> {
    primes_up_to(bound)
        .into_iter()
        .filter(|&p| is_new_prime(p))
        .collect()
}

/// New primes `p ≤ bound` with `(11/p) = −1` or `(19/p) = −1`, ascending.
pub fn census(bound: u64) -> Vec<CensusRecord> {
    primes_up_to(bound)
        .into_iter()
        .filter_map(CensusRecord::new)
        .collect()
}

pub fn census_stratum_a(bound: u64) -> Vec<CensusRecord> {
    stratum(bound, Stratum::A)
}

pub fn census_stratum_b(bound: u64) -> Vec<CensusRecord> {
    stratum(bound, Stratum::B)
}

fn stratum(bound: u64, s: Stratum) -> Vec<CensusRecord> {
    census(bound)
        .into_iter()
        .filter(|r| r.stratum == s)
        .collect()
}

/// Largest base trace index needed to rank every record.
pub fn table_limit(records: &[CensusRecord]) -> Result<u64> {
    let mut limit = 0;
    for r in records {
        for &level in &r.levels {
            limit = limit.max(terms_needed(level, r.p)? as u64);
        }
    }
    Ok(limit)
}

/// Computes rank verdicts for every valid level of every record.
pub fn attach_verdicts(records: &mut [CensusRecord], base: &BaseTable, tau: f64) -> Result<()> {
    records.par_iter_mut().try_for_each(|r| {
        let verdicts = r
            .levels
            .iter()
            .map(|l| analytic_rank_with(base, l.value(), r.p, tau))
            .collect::<Result<Vec<_>>>()?;
        r.set_verdicts(verdicts);
        Ok(())
    })
}
