//! File loading and the shared pieces of text and JSON output.

use std::fs;

use serde_json::{json, Value};
use ucf_core::io::{
    looks_like_poset, parse_family, parse_poset, parse_set, write_family, write_poset,
};
use ucf_core::lattice::{order_of_family, BottomPolicy};
use ucf_core::rational::{to_f64, to_pq};
use ucf_core::{ElementSet, LatticeView, Poset, Rational, SetFamily};

use crate::CommandResult;

pub type Loaded<T> = Result<T, CommandResult>;

fn read(path: &str) -> Loaded<String> {
    fs::read_to_string(path).map_err(|e| CommandResult::error(format!("{path}: {e}")))
}

fn in_file(path: &str, e: ucf_core::Error) -> CommandResult {
    CommandResult::error(format!("{path}: {e}"))
}

pub fn family(path: &str) -> Loaded<SetFamily> {
    parse_family(&read(path)?).map_err(|e| in_file(path, e))
}

pub fn poset(path: &str) -> Loaded<Poset> {
    parse_poset(&read(path)?).map_err(|e| in_file(path, e))
}

/// A lattice from a poset file, or from a union-closed family ordered by
/// inclusion (a bottom is adjoined when missing). Returns the lattice and a
/// text form of the input that re-parses to it.
pub fn lattice(path: &str) -> Loaded<(LatticeView, String)> {
    let text = read(path)?;
    if looks_like_poset(&text)
        || text.trim_start().starts_with("elements:") && parse_family(&text).is_err()
    {
        let p = parse_poset(&text).map_err(|e| in_file(path, e))?;
        let out = write_poset(&p);
        let l = LatticeView::from_poset(p).map_err(|e| in_file(path, e))?;
        Ok((l, out))
    } else {
        let f = parse_family(&text).map_err(|e| in_file(path, e))?;
        let l = order_of_family(&f, BottomPolicy::Adjoin).map_err(|e| in_file(path, e))?;
        Ok((l, write_family(&f)))
    }
}

/// `H` read from `path` with its labels mapped onto the universe of `base`.
pub fn family_on(base: &SetFamily, path: &str) -> Loaded<SetFamily> {
    let other = family(path)?;
    let members = other
        .iter()
        .map(|m| base.universe().set_of(other.universe().labels_of(m)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| in_file(path, e))?;
    Ok(base.derive(members))
}

pub fn set(f: &SetFamily, text: &str) -> Loaded<ElementSet> {
    parse_set(f.universe(), text).map_err(CommandResult::from)
}

pub fn labels(f: &SetFamily, s: ElementSet) -> Value {
    json!(f.universe().labels_of(s))
}

pub fn sets(f: &SetFamily, members: impl IntoIterator<Item = ElementSet>) -> Value {
    Value::Array(members.into_iter().map(|m| labels(f, m)).collect())
}

pub fn pq(r: &Rational) -> Value {
    Value::String(to_pq(r))
}

/// `7/17 (≈0.4118)`, or just `2` for integers.
pub fn human(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{} (≈{:.4})", r.numer(), r.denom(), to_f64(r))
    }
}

/// Members as `{a b}`, space separated inside braces; `∅` for the empty set.
pub fn braces(f: &SetFamily, members: impl IntoIterator<Item = ElementSet>) -> String {
    let parts: Vec<String> = members
        .into_iter()
        .map(|m| {
            if m.is_empty() {
                "∅".to_string()
            } else {
                format!("{{{}}}", f.universe().labels_of(m).join(" "))
            }
        })
        .collect();
    parts.join(", ")
}
