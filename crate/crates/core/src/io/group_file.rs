//! Group files.
//!
//! ```text
//! # comments and blank lines are ignored
//! format permutation
//! name q8
//! prime 2
//! degree 8
//! generator 1 3 6 2 0 7 4 5     # 0-based images
//! cycles (1 2 4 7)(3 6 8 5)     # 1-based cycle notation
//! ```
//!
//! ```text
//! format presentation
//! name q8
//! prime 2
//! max-cosets 1000
//! generators x y
//! relation x^4
//! relation x^2 = y^2
//! ```
//!
//! The canonical form lists keys in the order above, writes permutation
//! generators as image lines, and keeps relation text verbatim.

use std::fmt::Write as _;

use super::word_syntax::{parse_relation, WordError};
use super::FormatError;
use crate::coset::{enumerate_group, CosetError, Presentation, DEFAULT_MAX_COSETS};
use crate::group::{Group, GroupError, DEFAULT_ELEMENT_CAP};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Permutation {
        degree: usize,
        generators: Vec<Permutation>,
    },
    Presentation {
        generators: Vec<String>,
        relations: Vec<String>,
        max_cosets: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub name: Option<String>,
    pub prime: u64,
    pub source: GroupSource,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BuildError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// Splits a line into its first token and the trimmed remainder, ignoring
/// any `#` comment.
pub(crate) fn key_value(line: &str) -> Option<(&str, &str, usize)> {
    let body = line.split('#').next().unwrap_or("");
    let trimmed = body.trim_start();
    if trimmed.trim().is_empty() {
        return None;
    }
    let offset = body.len() - trimmed.len();
    let (key, rest) = match trimmed.find(char::is_whitespace) {
        Some(i) => (&trimmed[..i], &trimmed[i..]),
        None => (trimmed, ""),
    };
    let value_offset = offset + key.len() + (rest.len() - rest.trim_start().len());
    Some((key, rest.trim(), value_offset + 1))
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile, FormatError> {
        let mut format: Option<String> = None;
        let mut name = None;
        let mut prime = None;
        let mut degree: Option<usize> = None;
        let mut perms: Vec<(usize, Permutation)> = Vec::new();
        let mut pending: Vec<(usize, usize, PermLine)> = Vec::new();
        let mut generators: Option<Vec<String>> = None;
        let mut relations: Vec<(usize, usize, String)> = Vec::new();
        let mut max_cosets = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let Some((key, value, column)) = key_value(raw) else {
                continue;
            };
            let syntax = |message: String| FormatError::syntax(line, column, message);
            match key {
                "format" => set_once(&mut format, value.to_string(), line, "format")?,
                "name" => set_once(&mut name, value.to_string(), line, "name")?,
                "prime" => set_once(&mut prime, parse_number::<u64>(value, line, column)?, line, "prime")?,
                "degree" => set_once(&mut degree, parse_number::<usize>(value, line, column)?, line, "degree")?,
                "max-cosets" => set_once(
                    &mut max_cosets,
                    parse_number::<usize>(value, line, column)?,
                    line,
                    "max-cosets",
                )?,
                "generator" => {
                    let images = value
                        .split_whitespace()
                        .map(|t| t.parse::<u32>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| syntax("generator images must be nonnegative integers".into()))?;
                    pending.push((line, column, PermLine::Images(images)));
                }
                "cycles" => pending.push((line, column, PermLine::Cycles(parse_cycles(value).map_err(syntax)?))),
                "generators" => {
                    let names: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                    if let Some(bad) = names.iter().find(|n| !is_identifier(n)) {
                        return Err(syntax(format!("'{bad}' is not a generator name")));
                    }
                    set_once(&mut generators, names, line, "generators")?;
                }
                "relation" => relations.push((line, column, value.to_string())),
                other => return Err(FormatError::syntax(line, 1, format!("unknown key '{other}'"))),
            }
        }

        let prime = prime.ok_or_else(|| FormatError::semantic(None, "missing 'prime'"))?;
        match format.as_deref() {
            Some("permutation") => {
                let degree = degree.ok_or_else(|| FormatError::semantic(None, "missing 'degree'"))?;
                if generators.is_some() || !relations.is_empty() || max_cosets.is_some() {
                    return Err(FormatError::semantic(None, "presentation keys in a permutation file"));
                }
                for (line, _, pl) in pending {
                    let perm = match pl {
                        PermLine::Images(images) => {
                            if images.len() != degree {
                                return Err(FormatError::semantic(
                                    Some(line),
                                    format!("{} images given for degree {degree}", images.len()),
                                ));
                            }
                            Permutation::from_images(images)
                        }
                        PermLine::Cycles(cycles) => Permutation::from_cycles(degree, &cycles),
                    }
                    .map_err(|e| FormatError::semantic(Some(line), e.to_string()))?;
                    perms.push((line, perm));
                }
                Ok(GroupFile {
                    name,
                    prime,
                    source: GroupSource::Permutation {
                        degree,
                        generators: perms.into_iter().map(|(_, p)| p).collect(),
                    },
                })
            }
            Some("presentation") => {
                if degree.is_some() || !pending.is_empty() {
                    return Err(FormatError::semantic(None, "permutation keys in a presentation file"));
                }
                let generators = generators.ok_or_else(|| FormatError::semantic(None, "missing 'generators'"))?;
                for (i, g) in generators.iter().enumerate() {
                    if generators[..i].contains(g) {
                        return Err(FormatError::semantic(None, format!("generator '{g}' declared twice")));
                    }
                }
                for (line, column, text) in &relations {
                    parse_relation(text, &generators).map_err(|e| word_error(*line, *column, e))?;
                }
                Ok(GroupFile {
                    name,
                    prime,
                    source: GroupSource::Presentation {
                        generators,
                        relations: relations.into_iter().map(|(_, _, r)| r).collect(),
                        max_cosets: max_cosets.unwrap_or(DEFAULT_MAX_COSETS),
                    },
                })
            }
            Some(other) => Err(FormatError::semantic(None, format!("unknown format '{other}'"))),
            None => Err(FormatError::semantic(None, "missing 'format'")),
        }
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        let format = match self.source {
            GroupSource::Permutation { .. } => "permutation",
            GroupSource::Presentation { .. } => "presentation",
        };
        writeln!(out, "format {format}").unwrap();
        if let Some(name) = &self.name {
            writeln!(out, "name {name}").unwrap();
        }
        writeln!(out, "prime {}", self.prime).unwrap();
        match &self.source {
            GroupSource::Permutation { degree, generators } => {
                writeln!(out, "degree {degree}").unwrap();
                for g in generators {
                    let images: Vec<String> = g.images().iter().map(u32::to_string).collect();
                    writeln!(out, "generator {}", images.join(" ")).unwrap();
                }
            }
            GroupSource::Presentation {
                generators,
                relations,
                max_cosets,
            } => {
                writeln!(out, "max-cosets {max_cosets}").unwrap();
                writeln!(out, "generators {}", generators.join(" ")).unwrap();
                for r in relations {
                    writeln!(out, "relation {r}").unwrap();
                }
            }
        }
        out
    }

    /// The presentation described by the file, if it is one.
    pub fn presentation(&self) -> Result<Option<Presentation>, BuildError> {
        let GroupSource::Presentation {
            generators, relations, ..
        } = &self.source
        else {
            return Ok(None);
        };
        let mut relators = Vec::new();
        for r in relations {
            relators.extend(parse_relation(r, generators).map_err(|e| word_error(0, 0, e))?);
        }
        Ok(Some(Presentation::new(generators.clone(), relators)?))
    }

    /// Builds the group. `max_cosets` overrides the file's coset cap.
    pub fn build(&self, max_cosets: Option<usize>) -> Result<Group, BuildError> {
        match &self.source {
            GroupSource::Permutation { degree, generators } => Ok(Group::from_generators(
                *degree,
                generators.clone(),
                self.prime,
                DEFAULT_ELEMENT_CAP,
            )?),
            GroupSource::Presentation { max_cosets: cap, .. } => {
                let pres = self.presentation()?.unwrap();
                Ok(enumerate_group(&pres, self.prime, max_cosets.unwrap_or(*cap))?)
            }
        }
    }

    /// Generator names: declared names for presentations, `g1, g2, ...`
    /// for permutation files.
    pub fn generator_names(&self) -> Vec<String> {
        match &self.source {
            GroupSource::Permutation { generators, .. } => {
                (1..=generators.len()).map(|i| format!("g{i}")).collect()
            }
            GroupSource::Presentation { generators, .. } => generators.clone(),
        }
    }
}

enum PermLine {
    Images(Vec<u32>),
    Cycles(Vec<Vec<usize>>),
}

fn word_error(line: usize, column: usize, e: WordError) -> FormatError {
    let column = column + e.column - 1;
    match e.unknown_generator {
        Some(_) => FormatError::semantic(Some(line), e.message),
        None => FormatError::syntax(line, column, e.message),
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: usize, key: &str) -> Result<(), FormatError> {
    if slot.is_some() {
        return Err(FormatError::semantic(Some(line), format!("'{key}' given twice")));
    }
    *slot = Some(value);
    Ok(())
}

pub(crate) fn parse_number<T: std::str::FromStr>(value: &str, line: usize, column: usize) -> Result<T, FormatError> {
    value
        .parse()
        .map_err(|_| FormatError::syntax(line, column, format!("expected a number, found '{value}'")))
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses `(1 2 3)(4 5)`; an empty string or `()` is the identity.
fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(inner) = rest.strip_prefix('(') else {
            return Err(format!("expected '(' in cycle notation, found '{rest}'"));
        };
        let close = inner.find(')').ok_or("unclosed cycle")?;
        let points = inner[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| format!("'{t}' is not a point")))
            .collect::<Result<Vec<_>, _>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = inner[close + 1..].trim_start();
    }
    Ok(cycles)
}
