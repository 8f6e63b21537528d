//! Facet-file text format.
//!
//! ```text
//! # comment
//! n t
//! 0 1 2
//! 1 2 3
//! ```
//!
//! The header gives the ground-set size and the facet count; each following
//! line is one ascending vertex list. Blank lines and `#` comments are
//! skipped, so the empty facet is spelled `{}`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub(crate) fn write_facet_file(n: usize, facets: &[VertexSet]) -> String {
    let mut out = format!("{n} {}\n", facets.len());
    for f in facets {
        if f.is_empty() {
            out.push_str("{}\n");
            continue;
        }
        let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Parses a facet file, keeping the listed faces in file order (so the same
/// format can carry a shelling order).
pub fn parse_facet_list(text: &str) -> Result<(usize, Vec<VertexSet>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, reason: "missing header `n t`".into() })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse { line: hl, reason: format!("expected header `n t`, found `{header}`") });
    }
    let number = |s: &str, what: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse { line: hl, reason: format!("{what} `{s}` is not a number") })
    };
    let n = number(fields[0], "ground-set size")?;
    let t = number(fields[1], "facet count")?;
    if n > MAX_VERTICES {
        return Err(Error::Parse { line: hl, reason: format!("ground-set size {n} exceeds 64") });
    }

    let mut facets = Vec::with_capacity(t);
    let mut last_line = hl;
    for (line, body) in lines {
        last_line = line;
        if facets.len() == t {
            return Err(Error::Parse { line, reason: format!("more than the declared {t} facets") });
        }
        if body == "{}" {
            facets.push(VertexSet::EMPTY);
            continue;
        }
        let mut set = VertexSet::EMPTY;
        let mut prev: Option<usize> = None;
        for tok in body.split_whitespace() {
            let v: usize =
                tok.parse().map_err(|_| Error::Parse { line, reason: format!("`{tok}` is not a vertex") })?;
            if v >= n {
                return Err(Error::Parse { line, reason: format!("vertex {v} out of range for n = {n}") });
            }
            if prev.is_some_and(|p| p >= v) {
                return Err(Error::Parse { line, reason: "vertices must be strictly ascending".into() });
            }
            prev = Some(v);
            set = set.insert(v);
        }
        facets.push(set);
    }
    if facets.len() != t {
        return Err(Error::Parse {
            line: last_line,
            reason: format!("declared {t} facets but found {}", facets.len()),
        });
    }
    Ok((n, facets))
}
