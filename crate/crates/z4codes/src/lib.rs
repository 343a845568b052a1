//! Standard-library companion to `z4codes-core`: file formats, run
//! configuration, deterministic parallel enumeration, seeded random matrix
//! generation, and report rendering. The `z4codes` binary in this package
//! ties these into a command-line front end.

pub mod config;
pub mod format;
pub mod parallel;
pub mod randmat;
pub mod report;

pub use config::RunConfig;
pub use format::{read_z4m, write_z4m, ParseError};
