//! Command-line verification suites and solvers on top of `dkp-core`.

pub mod cli;
pub mod report;
pub mod suites;
