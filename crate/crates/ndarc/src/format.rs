//! The text format for digraphs: a header line `n <count>`, then one
//! `tail head` line per arc. `#` starts a comment and blank lines are
//! ignored. The coloured variant appends a third column holding each
//! arc's colour. Every parse error carries its 1-based line number.

use crate::colouring::ArcColouring;
use crate::digraph::{build_digraph, Digraph};
use crate::{Error, Result};
use std::collections::HashSet;
use std::fmt::Write as _;

fn parse_error(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}

/// A content line surviving comment stripping, with its position.
struct Row {
    line: usize,
    fields: Vec<usize>,
}

/// Strips comments and blanks, reads the `n <count>` header, and
/// parses every remaining line into numeric fields.
fn tokenize(text: &str) -> Result<(usize, Vec<Row>)> {
    let mut order = None;
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if order.is_none() {
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match tokens.as_slice() {
                ["n", count] => {
                    let n = count
                        .parse()
                        .map_err(|_| parse_error(line, format!("invalid order '{count}'")))?;
                    order = Some(n);
                }
                _ => return Err(parse_error(line, "expected header 'n <count>'".into())),
            }
            continue;
        }
        let fields = content
            .split_whitespace()
            .map(|token| {
                token
                    .parse()
                    .map_err(|_| parse_error(line, format!("invalid number '{token}'")))
            })
            .collect::<Result<Vec<usize>>>()?;
        rows.push(Row { line, fields });
    }
    match order {
        Some(n) => Ok((n, rows)),
        None => Err(parse_error(1, "missing header 'n <count>'".into())),
    }
}

/// Validates one arc row against the running digraph state, reporting
/// any defect with the row's line number.
fn check_arc(
    n: usize,
    seen: &mut HashSet<(usize, usize)>,
    u: usize,
    v: usize,
    line: usize,
) -> Result<()> {
    for w in [u, v] {
        if w >= n {
            return Err(parse_error(line, Error::VertexOutOfRange(w, n).to_string()));
        }
    }
    if u == v {
        return Err(parse_error(line, Error::LoopArc(u).to_string()));
    }
    if !seen.insert((u, v)) {
        return Err(parse_error(line, Error::DuplicateArc(u, v).to_string()));
    }
    Ok(())
}

/// Parses the two-column arc-list format into a digraph.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let (n, rows) = tokenize(text)?;
    let mut seen = HashSet::with_capacity(rows.len());
    let mut arcs = Vec::with_capacity(rows.len());
    for row in rows {
        match row.fields.as_slice() {
            &[u, v] => {
                check_arc(n, &mut seen, u, v, row.line)?;
                arcs.push((u, v));
            }
            _ => return Err(parse_error(row.line, "expected 'tail head'".into())),
        }
    }
    Ok(build_digraph(n, &arcs).expect("rows were validated line by line"))
}

/// Parses the three-column format into a digraph plus the colouring
/// carried in the last column. The declared colour count is the
/// largest colour present.
pub fn parse_coloured_digraph(text: &str) -> Result<(Digraph, ArcColouring)> {
    let (n, rows) = tokenize(text)?;
    let mut seen = HashSet::with_capacity(rows.len());
    let mut arcs = Vec::with_capacity(rows.len());
    let mut colours = Vec::with_capacity(rows.len());
    for row in rows {
        match row.fields.as_slice() {
            &[u, v, colour] => {
                check_arc(n, &mut seen, u, v, row.line)?;
                if colour == 0 {
                    return Err(parse_error(row.line, "colour must be at least 1".into()));
                }
                arcs.push((u, v));
                colours.push(colour);
            }
            _ => return Err(parse_error(row.line, "expected 'tail head colour'".into())),
        }
    }
    let k = colours.iter().copied().max().unwrap_or(0);
    let digraph = build_digraph(n, &arcs).expect("rows were validated line by line");
    let colouring = ArcColouring::new(colours, k).expect("colours were validated line by line");
    Ok((digraph, colouring))
}

/// Renders a digraph in the two-column format parsed by
/// [`parse_digraph`].
pub fn emit_digraph(d: &Digraph) -> String {
    let mut out = format!("n {}\n", d.n());
    for &(u, v) in d.arcs() {
        writeln!(out, "{u} {v}").expect("writing to a string cannot fail");
    }
    out
}

/// Renders a digraph and colouring in the three-column format parsed
/// by [`parse_coloured_digraph`].
pub fn emit_coloured_digraph(d: &Digraph, colouring: &ArcColouring) -> String {
    let mut out = format!("n {}\n", d.n());
    for (idx, &(u, v)) in d.arcs().iter().enumerate() {
        writeln!(out, "{u} {v} {}", colouring.colour(idx))
            .expect("writing to a string cannot fail");
    }
    out
}
