//! Report files: named sections of ordered `key value` lines.
//!
//! ```text
//! [run]
//! provenance group
//! [decision]
//! order 8
//! restriction-sum X.5 C.3 0
//! ```
//!
//! Keys may repeat and order is preserved, so emitting a parsed document
//! reproduces it exactly.

use std::fmt::{self, Write as _};

use super::group_file::key_value;
use super::FormatError;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Self {
        Section {
            name: name.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn get_all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.entries.iter().filter(move |(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}]", self.name)?;
        for (k, v) in &self.entries {
            if v.is_empty() {
                writeln!(f, "{k}")?;
            } else {
                writeln!(f, "{k} {v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub sections: Vec<Section>,
}

impl Document {
    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn get(&self, section: &str, key: &str) -> Option<&str> {
        self.section(section)?.get(key)
    }

    pub fn parse(text: &str) -> Result<Document, FormatError> {
        let mut doc = Document::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if let Some(rest) = trimmed.strip_prefix('[') {
                let name = rest
                    .strip_suffix(']')
                    .ok_or_else(|| FormatError::syntax(line, raw.len(), "expected ']'".into()))?;
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(FormatError::syntax(line, 2, format!("bad section name '{name}'")));
                }
                doc.sections.push(Section::new(name));
                continue;
            }
            let Some((key, value, _)) = key_value(raw) else {
                continue;
            };
            let section = doc
                .sections
                .last_mut()
                .ok_or_else(|| FormatError::syntax(line, 1, "entry before any section".into()))?;
            section.entries.push((key.to_string(), value.to_string()));
        }
        Ok(doc)
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            write!(out, "{s}").unwrap();
        }
        out
    }
}
