//! IO companion to `kp-core`: configuration ingestion, case solving and
//! verification from the command line, parameter sweeps, admissibility
//! region maps, and shape export as JSON, CSV or SVG.

pub mod config;
pub mod output;
pub mod run;
pub mod shapes;
