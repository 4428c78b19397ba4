//! The `.trn` text format.
//!
//! ```text
//! tournament 3
//! -10
//! 0-1
//! 10-
//! role x 0
//! role S 1 2
//! ```
//!
//! Row `i` holds `p` characters; position `j` is `1` iff `i -> j`, `0`
//! otherwise and `-` on the diagonal. Whitespace between tokens (including
//! inside a row) is ignored when parsing. Serialization is canonical: one
//! space between tokens, no blank lines, trailing newline.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::labeled::LabeledTournament;
use crate::tournament::{Tournament, MAX_ORDER};
use crate::vertex_set::VertexSet;

pub fn serialize(t: &Tournament) -> String {
    serialize_labeled(&LabeledTournament::new(t.clone()))
}

pub fn serialize_labeled(lt: &LabeledTournament) -> String {
    let t = &lt.tournament;
    let p = t.order();
    let mut s = String::with_capacity((p + 1) * (p + 1) + 16);
    writeln!(s, "tournament {p}").unwrap();
    for i in 0..p {
        for j in 0..p {
            s.push(if i == j {
                '-'
            } else if t.arc(i, j) {
                '1'
            } else {
                '0'
            });
        }
        s.push('\n');
    }
    for role in lt.roles() {
        write!(s, "role {}", role.name).unwrap();
        for v in role.members {
            write!(s, " {v}").unwrap();
        }
        s.push('\n');
    }
    s
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Byte offset of the first non-whitespace character, 1-based.
fn first_column(raw: &str) -> usize {
    raw.len() - raw.trim_start().len() + 1
}

pub fn parse(text: &str) -> Result<LabeledTournament> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("tournament") {
        return Err(parse_err(
            header_line,
            first_column(header),
            "expected `tournament <order>`",
        ));
    }
    let order: usize = tokens
        .next()
        .and_then(|tok| tok.parse().ok())
        .ok_or_else(|| parse_err(header_line, first_column(header), "missing or invalid order"))?;
    if tokens.next().is_some() {
        return Err(parse_err(header_line, first_column(header), "trailing tokens after order"));
    }
    if order == 0 || order > MAX_ORDER {
        return Err(Error::OrderTooLarge(order));
    }

    let mut out = vec![0u32; order];
    for (i, row) in out.iter_mut().enumerate() {
        let (line_no, raw) = lines
            .next()
            .ok_or_else(|| parse_err(header_line + i + 1, 1, format!("missing row {i}")))?;
        let mut j = 0;
        for (col, c) in raw.char_indices() {
            if c.is_whitespace() {
                continue;
            }
            let column = col + 1;
            if j >= order {
                return Err(parse_err(line_no, column, format!("row {i} longer than {order}")));
            }
            match (c, i == j) {
                ('-', true) => {}
                ('1', false) => *row |= 1 << j,
                ('0', false) => {}
                _ => {
                    return Err(parse_err(line_no, column, format!("unexpected {c:?}")));
                }
            }
            j += 1;
        }
        if j != order {
            return Err(parse_err(line_no, raw.len() + 1, format!("row {i} has {j} entries, expected {order}")));
        }
    }
    let tournament = Tournament::from_out_masks(out)?;

    let mut labeled = LabeledTournament::new(tournament);
    for (line_no, raw) in lines {
        let mut tokens = raw.split_whitespace();
        if tokens.next() != Some("role") {
            return Err(parse_err(line_no, first_column(raw), "expected `role <name> <index...>`"));
        }
        let name = tokens
            .next()
            .ok_or_else(|| parse_err(line_no, first_column(raw), "role without name"))?;
        let mut members = VertexSet::EMPTY;
        for tok in tokens {
            let v: usize = tok.parse().map_err(|_| {
                let column = raw.find(tok).map_or(1, |c| c + 1);
                parse_err(line_no, column, format!("invalid index {tok:?}"))
            })?;
            if v >= order {
                return Err(Error::IndexOutOfRange { index: v, order });
            }
            members.insert(v);
        }
        labeled.add_role(name, members)?;
    }
    Ok(labeled)
}
