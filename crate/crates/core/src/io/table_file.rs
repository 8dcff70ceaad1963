//! Character table files.
//!
//! ```text
//! format character-table
//! order 8
//! prime 2
//! conductor 4
//! class 1 1 1 2:1          # index, size, element order, then q:image
//! class 2 1 2 2:1
//! class 3 2 4 2:2
//! ...
//! row 1 1, 1, 1, 1, 1      # cyclotomic literals, one per class
//! ...
//! ```
//!
//! Classes and rows are numbered from 1 and must appear in order. Power
//! maps are only required for primes dividing the conductor; the others are
//! derived from the values.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::group_file::{key_value, parse_number};
use super::FormatError;
use crate::chartab::{complete_power_map, CharacterTable};
use crate::cyclotomic::Cyclotomic;

struct ClassRecord {
    size: u64,
    order: u64,
    maps: Vec<(u64, usize)>,
}

pub fn parse_table(text: &str) -> Result<CharacterTable, FormatError> {
    let mut format = None;
    let mut order = None;
    let mut prime = None;
    let mut conductor = None;
    let mut classes: Vec<ClassRecord> = Vec::new();
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let Some((key, value, column)) = key_value(raw) else {
            continue;
        };
        let single = |slot: &Option<u64>| {
            if slot.is_some() {
                Err(FormatError::semantic(Some(line), format!("'{key}' given twice")))
            } else {
                parse_number::<u64>(value, line, column)
            }
        };
        match key {
            "format" => {
                if value != "character-table" {
                    return Err(FormatError::semantic(Some(line), format!("unknown format '{value}'")));
                }
                format = Some(());
            }
            "order" => order = Some(single(&order)?),
            "prime" => prime = Some(single(&prime)?),
            "conductor" => conductor = Some(single(&conductor)?),
            "class" => {
                let (index, rest) = leading_index(value, line, column)?;
                expect_index(index, classes.len() + 1, line, "class")?;
                classes.push(parse_class(rest, line, column, text_offset(value, rest))?);
            }
            "row" => {
                let (index, rest) = leading_index(value, line, column)?;
                expect_index(index, rows.len() + 1, line, "row")?;
                let mut offset = column + text_offset(value, rest);
                let mut row = Vec::new();
                for entry in rest.split(',') {
                    let lead = entry.len() - entry.trim_start().len();
                    let literal = entry.trim();
                    let v: Cyclotomic = literal.parse().map_err(|e: crate::cyclotomic::ParseCyclotomicError| {
                        FormatError::syntax(line, offset + lead + e.offset, e.message)
                    })?;
                    row.push(v);
                    offset += entry.len() + 1;
                }
                rows.push(row);
            }
            other => return Err(FormatError::syntax(line, 1, format!("unknown key '{other}'"))),
        }
    }

    format.ok_or_else(|| FormatError::semantic(None, "missing 'format'"))?;
    let order = order.ok_or_else(|| FormatError::semantic(None, "missing 'order'"))?;
    let prime = prime.ok_or_else(|| FormatError::semantic(None, "missing 'prime'"))?;
    let r = classes.len();
    if rows.len() != r {
        return Err(FormatError::semantic(None, format!("{} rows for {r} classes", rows.len())));
    }
    if let Some(i) = rows.iter().position(|row| row.len() != r) {
        return Err(FormatError::semantic(None, format!("row {} has {} entries, expected {r}", i + 1, rows[i].len())));
    }
    let orders: Vec<u64> = classes.iter().map(|c| c.order).collect();
    let mut maps: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (c, record) in classes.iter().enumerate() {
        for &(q, image) in &record.maps {
            if image == 0 || image > r {
                return Err(FormatError::semantic(None, format!("class {}: {q}-power class {image} out of range", c + 1)));
            }
            let map = maps.entry(q).or_insert_with(|| vec![usize::MAX; r]);
            map[c] = image - 1;
        }
    }
    for (q, map) in &maps {
        if let Some(c) = map.iter().position(|&x| x == usize::MAX) {
            return Err(FormatError::semantic(None, format!("class {} lacks its {q}-power class", c + 1)));
        }
    }
    let power_map = complete_power_map(&orders, maps, &rows).map_err(|e| FormatError::semantic(None, e.to_string()))?;
    let table = CharacterTable::new(
        order,
        prime,
        classes.iter().map(|c| c.size).collect(),
        orders,
        power_map,
        rows,
    )
    .map_err(|e| FormatError::semantic(None, e.to_string()))?;
    if let Some(cond) = conductor {
        if cond != table.conductor() {
            return Err(FormatError::semantic(
                None,
                format!("conductor {cond} given, element orders give {}", table.conductor()),
            ));
        }
    }
    Ok(table)
}

/// Canonical text of a table. Only power maps for primes dividing the
/// conductor are written.
pub fn emit_table(t: &CharacterTable) -> String {
    let mut out = String::new();
    writeln!(out, "format character-table").unwrap();
    writeln!(out, "order {}", t.order()).unwrap();
    writeln!(out, "prime {}", t.prime()).unwrap();
    writeln!(out, "conductor {}", t.conductor()).unwrap();
    let primes: Vec<u64> = t.power_map().primes().filter(|q| t.conductor() % q == 0).collect();
    for c in 0..t.class_count() {
        write!(out, "class {} {} {}", c + 1, t.class_sizes()[c], t.element_orders()[c]).unwrap();
        for &q in &primes {
            write!(out, " {q}:{}", t.power_map().prime_map(q).unwrap()[c] + 1).unwrap();
        }
        out.push('\n');
    }
    for (i, row) in t.rows().iter().enumerate() {
        let values: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(out, "row {} {}", i + 1, values.join(", ")).unwrap();
    }
    out
}

fn text_offset(whole: &str, tail: &str) -> usize {
    whole.len() - tail.len()
}

fn leading_index(value: &str, line: usize, column: usize) -> Result<(usize, &str), FormatError> {
    let end = value.find(char::is_whitespace).unwrap_or(value.len());
    let index = parse_number::<usize>(&value[..end], line, column)?;
    Ok((index, value[end..].trim_start()))
}

fn expect_index(found: usize, expected: usize, line: usize, what: &str) -> Result<(), FormatError> {
    if found != expected {
        return Err(FormatError::semantic(Some(line), format!("{what} {found} out of sequence, expected {expected}")));
    }
    Ok(())
}

fn parse_class(rest: &str, line: usize, column: usize, offset: usize) -> Result<ClassRecord, FormatError> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    let col = column + offset;
    if tokens.len() < 2 {
        return Err(FormatError::syntax(line, col, "expected class size and element order".into()));
    }
    let size = parse_number(tokens[0], line, col)?;
    let order = parse_number(tokens[1], line, col)?;
    let maps = tokens[2..]
        .iter()
        .map(|tok| {
            let (q, image) = tok
                .split_once(':')
                .ok_or_else(|| FormatError::syntax(line, col, format!("expected prime:class, found '{tok}'")))?;
            Ok((parse_number(q, line, col)?, parse_number(image, line, col)?))
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    Ok(ClassRecord { size, order, maps })
}
