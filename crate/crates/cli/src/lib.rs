//! Command-line layer over `qharm-core`: parameter parsing, rendering, and
//! the verification suites used by `qharm verify` and the acceptance test.

pub mod commands;
pub mod probe;
pub mod report;
pub mod suites;

pub use report::{Check, Status, SuiteReport};
pub use suites::{run_suite, run_suites, Config};
