//! Command-line front end for the `uqsl2` kernel: argument definitions,
//! command handlers, and assembly of the verification battery.

pub mod args;
pub mod commands;
pub mod suites;
