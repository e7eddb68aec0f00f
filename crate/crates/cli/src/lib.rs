//! Command-line front end: monomial-syntax parsing, JSON reports and
//! staircase rendering over the core library.

pub mod commands;
pub mod parse;
pub mod render;
pub mod report;
