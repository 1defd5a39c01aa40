//! Library half of the `qkit` command-line tool: table format, reports,
//! egg-box rendering and the suite harness.

pub mod commands;
pub mod eggbox;
pub mod harness;
pub mod report;
pub mod table;
