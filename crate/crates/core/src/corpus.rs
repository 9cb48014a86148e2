//! Built-in example data, shipped as JSON files under `corpus/`.

use crate::chartable::CharacterTable;
use crate::error::{Error, Result};
use crate::fusion::RingRef;
use crate::group::Group;
use crate::io::{parse_group, parse_ring, parse_table, GroupDoc};

macro_rules! entries {
    ($dir:literal: $($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $dir, "/", $name, ".json")))),*]
    };
}

const RINGS: &[(&str, &str)] = entries!("rings":
    "trivial", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9", "z10", "z11", "z12",
    "s3", "s4", "d4", "s3_group", "ising", "fibonacci", "su2",
);

const TABLES: &[(&str, &str)] = entries!("tables": "z2", "s3", "s4", "d4");

const GROUPS: &[(&str, &str)] = entries!("groups":
    "z", "z2_lattice", "f2", "heisenberg", "z6", "s3", "s4",
);

fn lookup(kind: &str, list: &[(&str, &'static str)], name: &str) -> Result<&'static str> {
    list.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Parse(format!("no {kind} named `{name}` in the corpus")))
}

pub fn ring_names() -> Vec<&'static str> {
    RINGS.iter().map(|(n, _)| *n).collect()
}

pub fn table_names() -> Vec<&'static str> {
    TABLES.iter().map(|(n, _)| *n).collect()
}

pub fn group_names() -> Vec<&'static str> {
    GROUPS.iter().map(|(n, _)| *n).collect()
}

pub fn ring_text(name: &str) -> Result<&'static str> {
    lookup("ring", RINGS, name)
}

pub fn table_text(name: &str) -> Result<&'static str> {
    lookup("table", TABLES, name)
}

pub fn group_text(name: &str) -> Result<&'static str> {
    lookup("group", GROUPS, name)
}

pub fn ring(name: &str) -> Result<RingRef> {
    parse_ring(ring_text(name)?)
}

pub fn table(name: &str) -> Result<CharacterTable> {
    parse_table(table_text(name)?)
}

pub fn group(name: &str) -> Result<(GroupDoc, Group)> {
    parse_group(group_text(name)?)
}

/// Corpus rings of finite rank at least two carrying integer dimensions.
pub fn dimensioned_rings() -> Vec<(&'static str, RingRef)> {
    RINGS
        .iter()
        .filter_map(|(n, t)| {
            let r = parse_ring(t).ok()?;
            (r.rank().is_some_and(|k| k >= 2) && r.has_dimensions()).then_some((*n, r))
        })
        .collect()
}
