//! Text format for network instances.
//!
//! ```text
//! # butterfly
//! pairs
//! s1 t1
//! s2 t2
//! intermediates
//! z
//! edges
//! s1 z
//! s2 z
//! s1 t2
//! s2 t1
//! z t1
//! z t2
//! ```
//!
//! Section headers may end with `:`. `#` starts a comment. Node names are
//! any whitespace-free strings.

use std::fmt::Write as _;

use super::instance::NetworkInstance;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Pairs,
    Intermediates,
    Edges,
}

pub fn parse_instance(text: &str) -> Result<NetworkInstance> {
    let mut section = Section::None;
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut inter: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line.trim_end_matches(':') {
            "pairs" => {
                section = Section::Pairs;
                continue;
            }
            "intermediates" => {
                section = Section::Intermediates;
                continue;
            }
            "edges" => {
                section = Section::Edges;
                continue;
            }
            _ => {}
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (section, fields.as_slice()) {
            (Section::None, _) => return Err(Error::parse(line_no, "expected a section header")),
            (Section::Pairs, [s, t]) => pairs.push((s.to_string(), t.to_string())),
            (Section::Pairs, _) => return Err(Error::parse(line_no, "expected `source sink`")),
            (Section::Intermediates, names) => inter.extend(names.iter().map(|s| s.to_string())),
            (Section::Edges, [u, v]) => edges.push((u.to_string(), v.to_string())),
            (Section::Edges, _) => return Err(Error::parse(line_no, "expected `from to`")),
        }
    }
    let pairs: Vec<(&str, &str)> = pairs
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    let inter: Vec<&str> = inter.iter().map(String::as_str).collect();
    let edges: Vec<(&str, &str)> = edges
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    NetworkInstance::from_names(&pairs, &inter, &edges)
}

pub fn write_instance(inst: &NetworkInstance) -> String {
    let mut out = String::from("pairs\n");
    for (&s, &t) in inst.sources().iter().zip(inst.sinks()) {
        let _ = writeln!(out, "{} {}", inst.name(s), inst.name(t));
    }
    out.push_str("intermediates\n");
    for &z in inst.intermediates() {
        let _ = writeln!(out, "{}", inst.name(z));
    }
    out.push_str("edges\n");
    for &(u, v) in inst.edges() {
        let _ = writeln!(out, "{} {}", inst.name(u), inst.name(v));
    }
    out
}
