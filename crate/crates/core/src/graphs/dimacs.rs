use std::fmt::Write;

use super::UGraph;
use crate::error::{Error, Result};

/// DIMACS `.col` text with `c label` comments preserving vertex labels.
pub fn to_dimacs(g: &UGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (v, label) in g.labels().iter().enumerate() {
        writeln!(out, "c label {} {}", v + 1, label).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses DIMACS `.col` text. Vertices without a `c label` line are
/// labelled by their number; repeated edges are merged.
pub fn parse_dimacs(text: &str) -> Result<UGraph> {
    let mut n: Option<usize> = None;
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        let mut words = line.split_whitespace();
        match words.next() {
            None => {}
            Some("c") => {
                if words.next() == Some("label") {
                    let v = parse_index(words.next(), line_no)?;
                    let label: Vec<&str> = words.collect();
                    if label.is_empty() {
                        return Err(Error::parse(line_no, "label line without a label"));
                    }
                    labels.push((line_no, v, label.join(" ")));
                }
            }
            Some("p") => {
                if n.is_some() {
                    return Err(Error::parse(line_no, "second problem line"));
                }
                if !matches!(words.next(), Some("edge" | "col")) {
                    return Err(Error::parse(line_no, "expected `p edge <n> <m>`"));
                }
                n = Some(parse_count(words.next(), line_no)?);
                parse_count(words.next(), line_no)?;
            }
            Some("e") => {
                let u = parse_index(words.next(), line_no)?;
                let v = parse_index(words.next(), line_no)?;
                edges.push((line_no, u, v));
            }
            Some(other) => {
                return Err(Error::parse(line_no, format!("unknown line type {other:?}")));
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing `p edge` line"))?;
    let mut names: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    for (line, v, label) in labels {
        if v > n {
            return Err(Error::parse(line, format!("vertex {v} beyond {n}")));
        }
        names[v - 1] = label;
    }
    let mut g = UGraph::new(names)?;
    for (line, u, v) in edges {
        if u > n || v > n {
            return Err(Error::parse(line, format!("edge ({u}, {v}) beyond {n} vertices")));
        }
        if u == v {
            return Err(Error::parse(line, format!("loop at vertex {u}")));
        }
        g.add_edge(u - 1, v - 1)?;
    }
    Ok(g)
}

fn parse_count(word: Option<&str>, line: usize) -> Result<usize> {
    word.and_then(|w| w.parse().ok())
        .ok_or_else(|| Error::parse(line, "expected a non-negative integer"))
}

fn parse_index(word: Option<&str>, line: usize) -> Result<usize> {
    match parse_count(word, line)? {
        0 => Err(Error::parse(line, "vertices are numbered from 1")),
        v => Ok(v),
    }
}
