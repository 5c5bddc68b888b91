//! Text formats for graphs, cover certificates, and colorings.
//!
//! Graph: `p <n> <m>` then `m` lines `e <u> <v>` with `1 <= u < v <= n`.
//! Certificate: `c <cover|partition> <class-tag> <k>` then `f <i> <u-v> ...`.
//! Coloring: `col <kind> <c>` then `v <vertex> <color>` or `e <u>-<v> <color>`.
//! All lines are newline-terminated ASCII; writers emit edges sorted so a
//! parse/write round trip is byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::certificate::{ColoringCertificate, ColoringKind, CoverCertificate, CoverMode};
use crate::class::ForestClass;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for e in g.edges() {
        writeln!(out, "e {} {}", e.u(), e.v()).unwrap();
    }
    out
}

fn parse_usize(token: &str, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::Format(format!("bad {what}: `{token}`")))
}

fn parse_edge_token(token: &str) -> Result<Edge> {
    let (a, b) = token
        .split_once('-')
        .ok_or_else(|| Error::Format(format!("bad edge token `{token}`")))?;
    let u = parse_usize(a, "edge endpoint")?;
    let v = parse_usize(b, "edge endpoint")?;
    Edge::try_new(u, v).map_err(|e| Error::Format(e.to_string()))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty graph file".into()))?;
    let mut it = header.split_ascii_whitespace();
    if it.next() != Some("p") {
        return Err(Error::Format("graph file must start with a `p` line".into()));
    }
    let n = parse_usize(it.next().unwrap_or(""), "vertex count")?;
    let m = parse_usize(it.next().unwrap_or(""), "edge count")?;
    if it.next().is_some() {
        return Err(Error::Format("trailing tokens on `p` line".into()));
    }

    let mut edges = Vec::with_capacity(m);
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_ascii_whitespace();
        if it.next() != Some("e") {
            return Err(Error::Format(format!("expected `e` line, got `{line}`")));
        }
        let u = parse_usize(it.next().unwrap_or(""), "edge endpoint")?;
        let v = parse_usize(it.next().unwrap_or(""), "edge endpoint")?;
        if it.next().is_some() {
            return Err(Error::Format("trailing tokens on `e` line".into()));
        }
        if !(1 <= u && u < v && v <= n) {
            return Err(Error::Format(format!(
                "edge {u} {v} violates 1 <= u < v <= {n}"
            )));
        }
        edges.push(Edge::new(u, v));
    }
    if edges.len() != m {
        return Err(Error::Format(format!(
            "header says {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges).map_err(|e| Error::Format(e.to_string()))
}

pub fn write_certificate(cert: &CoverCertificate) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "c {} {} {}",
        cert.mode.tag(),
        cert.class.tag(),
        cert.k()
    )
    .unwrap();
    for (i, part) in cert.parts.iter().enumerate() {
        let mut sorted = part.clone();
        sorted.sort();
        write!(out, "f {}", i + 1).unwrap();
        for e in &sorted {
            write!(out, " {}-{}", e.u(), e.v()).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<CoverCertificate> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty certificate file".into()))?;
    let mut it = header.split_ascii_whitespace();
    if it.next() != Some("c") {
        return Err(Error::Format(
            "certificate file must start with a `c` line".into(),
        ));
    }
    let mode = CoverMode::from_tag(it.next().unwrap_or(""))?;
    let class = ForestClass::from_tag(it.next().unwrap_or(""))?;
    let k = parse_usize(it.next().unwrap_or(""), "part count")?;

    let mut parts: Vec<Vec<Edge>> = vec![Vec::new(); k];
    let mut seen = vec![false; k];
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_ascii_whitespace();
        if it.next() != Some("f") {
            return Err(Error::Format(format!("expected `f` line, got `{line}`")));
        }
        let i = parse_usize(it.next().unwrap_or(""), "part index")?;
        if i == 0 || i > k {
            return Err(Error::Format(format!("part index {i} outside 1..={k}")));
        }
        if seen[i - 1] {
            return Err(Error::Format(format!("part {i} listed twice")));
        }
        seen[i - 1] = true;
        for token in it {
            parts[i - 1].push(parse_edge_token(token)?);
        }
    }
    if let Some(i) = seen.iter().position(|&s| !s) {
        return Err(Error::Format(format!("part {} missing", i + 1)));
    }
    Ok(CoverCertificate::new(class, mode, parts))
}

pub fn write_coloring(col: &ColoringCertificate) -> String {
    let mut out = String::new();
    writeln!(out, "col {} {}", col.kind.tag(), col.c).unwrap();
    for (v, color) in &col.vertex_colors {
        writeln!(out, "v {v} {color}").unwrap();
    }
    for (e, color) in &col.edge_colors {
        writeln!(out, "e {}-{} {color}", e.u(), e.v()).unwrap();
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<ColoringCertificate> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty coloring file".into()))?;
    let mut it = header.split_ascii_whitespace();
    if it.next() != Some("col") {
        return Err(Error::Format(
            "coloring file must start with a `col` line".into(),
        ));
    }
    let kind = ColoringKind::from_tag(it.next().unwrap_or(""))?;
    let c = parse_usize(it.next().unwrap_or(""), "color count")?;

    let mut vertex_colors = BTreeMap::new();
    let mut edge_colors = BTreeMap::new();
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_ascii_whitespace();
        match it.next() {
            Some("v") => {
                let v = parse_usize(it.next().unwrap_or(""), "vertex")?;
                let color = parse_usize(it.next().unwrap_or(""), "color")?;
                if vertex_colors.insert(v, color).is_some() {
                    return Err(Error::Format(format!("vertex {v} colored twice")));
                }
            }
            Some("e") => {
                let e = parse_edge_token(it.next().unwrap_or(""))?;
                let color = parse_usize(it.next().unwrap_or(""), "color")?;
                if edge_colors.insert(e, color).is_some() {
                    return Err(Error::Format(format!("edge {e} colored twice")));
                }
            }
            _ => return Err(Error::Format(format!("expected `v` or `e` line, got `{line}`"))),
        }
    }
    if kind.colors_vertices() {
        if !edge_colors.is_empty() {
            return Err(Error::Format(format!("`e` lines in a {kind} coloring")));
        }
        Ok(ColoringCertificate::vertex(kind, c, vertex_colors))
    } else {
        if !vertex_colors.is_empty() {
            return Err(Error::Format(format!("`v` lines in a {kind} coloring")));
        }
        Ok(ColoringCertificate::edge(kind, c, edge_colors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip_is_byte_identical() {
        let g = Graph::from_pairs(5, &[(3, 5), (1, 2), (2, 3)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "p 5 3\ne 1 2\ne 2 3\ne 3 5\n");
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("p 2 1\ne 2 1\n").is_err()); // u < v required
        assert!(parse_graph("p 2 2\ne 1 2\n").is_err()); // count mismatch
        assert!(parse_graph("p 2 1\ne 1 3\n").is_err()); // out of range
    }

    #[test]
    fn certificate_round_trip() {
        let cert = CoverCertificate::new(
            ForestClass::InducedForest,
            CoverMode::Cover,
            vec![vec![Edge::new(1, 2), Edge::new(3, 4)], vec![Edge::new(2, 3)]],
        );
        let text = write_certificate(&cert);
        assert_eq!(text, "c cover if 2\nf 1 1-2 3-4\nf 2 2-3\n");
        assert_eq!(parse_certificate(&text).unwrap(), cert);
    }

    #[test]
    fn coloring_round_trip() {
        let col = ColoringCertificate::vertex(
            ColoringKind::AcyclicVertex,
            2,
            [(1, 1), (2, 2)].into(),
        );
        let text = write_coloring(&col);
        assert_eq!(parse_coloring(&text).unwrap(), col);

        let edge_col = ColoringCertificate::edge(
            ColoringKind::StrongEdge,
            1,
            [(Edge::new(1, 2), 1)].into(),
        );
        let text = write_coloring(&edge_col);
        assert_eq!(parse_coloring(&text).unwrap(), edge_col);
    }

    #[test]
    fn certificate_part_bookkeeping() {
        assert!(parse_certificate("c cover if 2\nf 1 1-2\n").is_err()); // part 2 missing
        assert!(parse_certificate("c cover if 1\nf 1 1-2\nf 1 2-3\n").is_err()); // duplicate
        assert!(parse_certificate("c cover nope 1\nf 1 1-2\n").is_err());
    }
}
