//! Database files, run reports and the command line.

mod cli;
mod db;
mod report;

pub use cli::{run_cli, run_cli_with};
pub use db::{format_db, parse_db, parse_db_str, read_db, write_db, write_records, DbError, DbRecord};
pub use report::{Counts, ReportDoc, RunInfo, SurvivorRecord};
