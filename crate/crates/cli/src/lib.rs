//! Batch front end: read a TOML spec, build the structure, run checks, report.

mod demo;
mod error;
pub mod job;
pub mod report;

pub use demo::{airy_demo, AiryDemo};
pub use error::CliError;
pub use job::{parse_spec, parse_spec_str, JobEcho, OdeBlock, VerificationJob};
pub use report::{emit, execute, Conditions, Eigen, Format, Report};
