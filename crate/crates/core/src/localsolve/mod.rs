//! Real and `ℓ`-adic points on quartic models `d·y² = P(x)`.

mod oracle;
mod padic;
mod quartic;
mod real;

pub use oracle::exhaustive_oracle;
pub use padic::{local_search, solvable_at, Chart, LocalSearch, NodeOutcome, ResidueNode};
pub use quartic::{c17_model, QuarticModel, C17_QUARTIC};
pub use real::{real_root_count, solvable_real};
