//! File formats, JSON run reports, parallel extremal search and the
//! `hyperturan` command line, built on [`hyperturan_core`].

pub mod cli;
pub mod format;
pub mod pattern;
pub mod report;
pub mod search;

pub use format::{parse_auto, parse_json, parse_text, to_json, to_text, FormatError};
pub use pattern::{parse_pattern, parse_pattern_list};
pub use report::RunReport;
pub use search::parallel_extremal;
