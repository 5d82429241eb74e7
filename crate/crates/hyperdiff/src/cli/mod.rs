//! Text grammar, job specifications and record output for the command-line tool.

pub mod grammar;
pub mod job;
pub mod output;
pub mod suite;

pub use grammar::{parse_hyper, parse_hyper_spec, parse_input, parse_mb, print_hyper, print_mb, Input};
pub use job::{exit_code, parse_binding_args, run_job, Command, JobSpec, Outcome};
pub use output::{parse_records, Format, Record, Status, Verification};
