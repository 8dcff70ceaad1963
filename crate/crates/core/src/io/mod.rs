//! Text formats: words, group files, table files and reports.

pub mod group_file;
pub mod report;
pub mod table_file;
pub mod word_syntax;

use thiserror::Error;

pub use group_file::{BuildError, GroupFile, GroupSource};
pub use report::{Document, Section};
pub use table_file::{emit_table, parse_table};
pub use word_syntax::{format_word, parse_relation, parse_word, WordError};

/// A parse failure. Syntax errors carry a 1-based line and column; semantic
/// errors carry the line when one is responsible.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{}{message}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Semantic { line: Option<usize>, message: String },
}

impl FormatError {
    pub fn syntax(line: usize, column: usize, message: String) -> Self {
        FormatError::Syntax { line, column, message }
    }

    pub fn semantic(line: Option<usize>, message: impl Into<String>) -> Self {
        FormatError::Semantic {
            line,
            message: message.into(),
        }
    }
}
