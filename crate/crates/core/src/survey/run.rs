use std::path::PathBuf;

use serde::Serialize;

use super::census::{attach_verdicts, census, table_limit, CensusRecord, Stratum};
use crate::lseries::{write_atomic, BaseTable, DEFAULT_TAU};
use crate::Result;

pub const CSV_HEADER: [&str; 14] = [
    "p", "mod4", "k2", "k3", "k5", "k7", "k11", "k19", "chosen_N", "sign", "L1", "L1prime",
    "verdict", "realized",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StratumSelection {
    A,
    B,
    Both,
}

impl StratumSelection {
    fn includes(self, s: Stratum) -> bool {
        matches!(
            (self, s),
            (StratumSelection::Both, _)
                | (StratumSelection::A, Stratum::A)
                | (StratumSelection::B, Stratum::B)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyConfig {
    pub bound: u64,
    pub stratum: StratumSelection,
    /// Compute analytic rank verdicts, not just the symbol layer.
    pub ranks: bool,
    pub tau: f64,
    pub csv: Option<PathBuf>,
    pub json: Option<PathBuf>,
    /// Base trace cache; traces are recomputed in memory when absent.
    pub cache: Option<PathBuf>,
}

impl SurveyConfig {
    pub fn new(bound: u64, stratum: StratumSelection) -> Self {
        SurveyConfig {
            bound,
            stratum,
            ranks: false,
            tau: DEFAULT_TAU,
            csv: None,
            json: None,
            cache: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveySummary {
    pub config: SurveyConfig,
    pub stratum_a: usize,
    pub stratum_b: usize,
    /// `None` unless verdicts were computed.
    pub realized: Option<usize>,
    pub records: Vec<CensusRecord>,
}

pub fn run_survey(config: &SurveyConfig) -> Result<SurveySummary> {
    let mut records: Vec<CensusRecord> = census(config.bound)
        .into_iter()
        .filter(|r| config.stratum.includes(r.stratum))
        .collect();
    let mut realized = None;
    if config.ranks && !records.is_empty() {
        let limit = table_limit(&records)?;
        let base = match &config.cache {
            Some(path) => BaseTable::load_or_compute(path, limit)?,
            None => BaseTable::compute(limit),
        };
        attach_verdicts(&mut records, &base, config.tau)?;
        realized = Some(records.iter().filter(|r| r.realized == Some(true)).count());
    } else if config.ranks {
        realized = Some(0);
    }
    let summary = SurveySummary {
        config: config.clone(),
        stratum_a: records.iter().filter(|r| r.stratum == Stratum::A).count(),
        stratum_b: records.iter().filter(|r| r.stratum == Stratum::B).count(),
        realized,
        records,
    };
    if let Some(path) = &config.csv {
        write_atomic(path, &write_csv(&summary.records)?)?;
    }
    if let Some(path) = &config.json {
        let mut bytes = serde_json::to_vec_pretty(&summary)?;
        bytes.push(b'\n');
        write_atomic(path, &bytes)?;
    }
    Ok(summary)
}

/// CSV body with [`CSV_HEADER`]; reals carry 12 significant digits.
pub fn write_csv(records: &[CensusRecord]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in records {
        let verdict = r.chosen_verdict();
        let real = |x: Option<f64>| x.map(|v| format!("{v:.11e}")).unwrap_or_default();
        let mut row: Vec<String> = vec![r.p.to_string(), r.mod4.to_string()];
        row.extend(r.symbols.iter().map(|k| k.to_string()));
        row.push(
            r.chosen_n
                .map(|n| n.value().to_string())
                .unwrap_or_default(),
        );
        row.push(r.sign.to_string());
        row.push(real(verdict.map(|v| v.l_value)));
        row.push(real(verdict.map(|v| v.l_prime_value)));
        row.push(
            verdict
                .map_or("pending", |v| v.estimate.label())
                .to_string(),
        );
        row.push(r.realized.map(|b| b.to_string()).unwrap_or_default());
        w.write_record(&row)?;
    }
    Ok(w.into_inner().expect("in-memory writer"))
}
