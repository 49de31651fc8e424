//! Independent ground truth: definition-level scans and exhaustive theorem suites.

mod brute;
mod report;
mod suites;
mod zee_suites;

pub use brute::{closure_by_definition, dense_by_definition, ORACLE_MAX_ORDER};
pub use report::{total_line, Failure, TheoremReport};
pub use suites::{run_suite, run_suites, SUITE_IDS};
pub use zee_suites::{descriptor_grid, GridPoint, GRID_MAX_K, GRID_PRIMES, LCM_RANGE, LCM_SET_MAX, LCM_SET_SIZE};
