//! Command-line front end: enumeration, power relations and verification
//! sweeps with table, newline-delimited JSON and CSV output.

pub mod app;
pub mod records;
pub mod render;
