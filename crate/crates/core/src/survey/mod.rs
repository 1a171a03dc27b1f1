//! Census of twisting primes, verification of the worked examples, the
//! class-number counting experiment and the survey driver.

mod census;
mod conjecture;
mod examples;
mod run;

pub use census::{
    attach_verdicts, census, census_stratum_a, census_stratum_b, is_new_prime, new_primes,
    table_limit, CensusRecord, Stratum, CENSUS_BOUND, RANK_TWO_PRIMES, SYMBOL_PRIMES,
};
pub use conjecture::conjecture_count;
pub use examples::{check_example, verify_examples, ExampleCheck, EXAMPLE1_POINT, EXAMPLE2_POINT};
pub use run::{run_survey, write_csv, StratumSelection, SurveyConfig, SurveySummary, CSV_HEADER};
