use std::fmt::Write as _;

use arbor_core::{CoverCertificate, Graph};

const PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999",
    "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
];

/// DOT text with exactly n node statements and m edge statements. With a
/// certificate, edges are colored by their first containing part and
/// labeled with all part indices.
pub fn to_dot(g: &Graph, cert: Option<&CoverCertificate>) -> String {
    let mut out = String::from("graph arbor {\n");
    for v in g.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for e in g.edges() {
        let parts: Vec<usize> = cert
            .map(|c| {
                c.parts
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| p.contains(e))
                    .map(|(i, _)| i + 1)
                    .collect()
            })
            .unwrap_or_default();
        if parts.is_empty() {
            writeln!(out, "  {} -- {};", e.u(), e.v()).unwrap();
        } else {
            let labels: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
            writeln!(
                out,
                "  {} -- {} [color=\"{}\", label=\"{}\"];",
                e.u(),
                e.v(),
                PALETTE[(parts[0] - 1) % PALETTE.len()],
                labels.join(",")
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}
