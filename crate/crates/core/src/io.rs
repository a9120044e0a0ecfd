//! Text formats for families and posets.
//!
//! Family files: `#` starts a comment, every other non-blank line is one set
//! given as whitespace-separated labels, `EMPTYSET` alone is the empty set.
//! An optional first line `elements: a b c` fixes the universe and its order;
//! otherwise labels are indexed in order of first appearance.
//!
//! Poset files: a header `elements: a b c` followed by lines `x < y`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::family::{ElementSet, SetFamily, Universe, EMPTY_TOKEN};
use crate::lattice::Poset;

const HEADER: &str = "elements:";

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_err(line: usize, e: impl ToString) -> Error {
    Error::Parse {
        line,
        message: e.to_string(),
    }
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    let mut lines = content_lines(text).peekable();
    let mut header: Option<(usize, Arc<Universe>)> = None;
    if let Some(&(n, line)) = lines.peek() {
        if let Some(rest) = line.strip_prefix(HEADER) {
            let u = Universe::new(rest.split_whitespace()).map_err(|e| parse_err(n, e))?;
            header = Some((n, Arc::new(u)));
            lines.next();
        }
    }

    let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
    for (n, line) in lines {
        if line.starts_with(HEADER) {
            return Err(parse_err(n, "the `elements:` header must come first"));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.contains(&EMPTY_TOKEN) {
            if tokens.len() != 1 {
                return Err(parse_err(n, "EMPTYSET must stand alone on its line"));
            }
            rows.push((n, Vec::new()));
        } else {
            rows.push((n, tokens));
        }
    }
    if rows.is_empty() {
        return Err(parse_err(
            header.map_or(1, |(n, _)| n),
            "file declares no sets",
        ));
    }

    let universe = match header {
        Some((_, u)) => u,
        None => {
            let mut labels: Vec<&str> = Vec::new();
            for (_, tokens) in &rows {
                for t in tokens {
                    if !labels.contains(t) {
                        labels.push(t);
                    }
                }
            }
            let first = rows[0].0;
            Arc::new(Universe::new(labels.iter().copied()).map_err(|e| parse_err(first, e))?)
        }
    };

    let mut members = Vec::with_capacity(rows.len());
    for (n, tokens) in &rows {
        members.push(
            universe
                .set_of(tokens.iter())
                .map_err(|e| parse_err(*n, e))?,
        );
    }
    SetFamily::new(universe, members)
}

/// Renders with an explicit header so the universe order survives a round
/// trip.
pub fn write_family(f: &SetFamily) -> String {
    let u = f.universe();
    let mut out = format!("{HEADER} {}\n", u.labels().join(" "));
    for m in f.iter() {
        out.push_str(&u.render_line(m));
        out.push('\n');
    }
    out
}

/// Parses a single set against a universe, accepting comma or whitespace
/// separators.
pub fn parse_set(universe: &Universe, text: &str) -> Result<ElementSet> {
    universe.parse_set(text)
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = content_lines(text);
    let (hn, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty poset file"))?;
    let rest = header
        .strip_prefix(HEADER)
        .ok_or_else(|| parse_err(hn, "poset files start with `elements: ...`"))?;
    let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    if labels.is_empty() {
        return Err(parse_err(hn, "no elements declared"));
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(parse_err(hn, format!("duplicate element `{l}`")));
        }
    }
    let find = |n: usize, l: &str| {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| parse_err(n, format!("unknown element `{l}`")))
    };
    let mut relations = Vec::new();
    for (n, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [x, "<", y] => relations.push((find(n, x)?, find(n, y)?)),
            _ => return Err(parse_err(n, "expected a relation `x < y`")),
        }
    }
    Poset::from_relations(labels, &relations).map_err(|e| parse_err(hn, e))
}

/// Header plus the cover relations.
pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("{HEADER} {}\n", p.labels().join(" "));
    for x in 0..p.len() {
        for y in p.upper_covers(x) {
            out.push_str(&format!("{} < {}\n", p.label(x), p.label(y)));
        }
    }
    out
}

/// `true` when the text looks like a poset file rather than a family file.
pub fn looks_like_poset(text: &str) -> bool {
    content_lines(text).skip(1).any(|(_, line)| {
        let t: Vec<&str> = line.split_whitespace().collect();
        t.len() == 3 && t[1] == "<"
    })
}
