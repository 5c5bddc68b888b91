use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::class::{validate_edge_set, ForestClass};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    /// An edge may appear in several parts.
    Cover,
    /// Each edge appears in exactly one part.
    Partition,
}

impl CoverMode {
    pub fn tag(&self) -> &'static str {
        match self {
            CoverMode::Cover => "cover",
            CoverMode::Partition => "partition",
        }
    }

    pub fn from_tag(tag: &str) -> Result<CoverMode> {
        match tag {
            "cover" => Ok(CoverMode::Cover),
            "partition" => Ok(CoverMode::Partition),
            other => Err(Error::Format(format!("unknown mode `{other}`"))),
        }
    }
}

impl fmt::Display for CoverMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A family of edge subsets claimed to cover (or partition) `E(G)` with every
/// part valid for `class`. `k` is the number of parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCertificate {
    pub class: ForestClass,
    pub mode: CoverMode,
    pub parts: Vec<Vec<Edge>>,
}

impl CoverCertificate {
    pub fn new(class: ForestClass, mode: CoverMode, parts: Vec<Vec<Edge>>) -> CoverCertificate {
        let parts = parts
            .into_iter()
            .map(|mut p| {
                p.sort();
                p.dedup();
                p
            })
            .collect();
        CoverCertificate { class, mode, parts }
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }
}

/// Everything `verify_certificate` found out; failures are entries, never errors.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// Per part: `None` if the part satisfies the class, otherwise a reason.
    pub part_failures: Vec<Option<String>>,
    /// Parts that are empty (always a failure: `k` counts useful parts).
    pub empty_parts: Vec<usize>,
    /// Edges of the part lists that are not edges of the graph, by part.
    pub foreign_edges: Vec<(usize, Edge)>,
    /// Edges of `G` not present in any part.
    pub missing_edges: Vec<Edge>,
    /// Partition mode only: edges appearing in more than one part.
    pub duplicate_edges: Vec<Edge>,
    /// For each vertex, the number of parts whose vertex set contains it.
    pub loads: Vec<usize>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.part_failures.iter().all(Option::is_none)
            && self.empty_parts.is_empty()
            && self.foreign_edges.is_empty()
            && self.missing_edges.is_empty()
            && self.duplicate_edges.is_empty()
    }

    pub fn load(&self, v: usize) -> usize {
        self.loads[v]
    }

    pub fn max_load(&self) -> usize {
        self.loads.iter().copied().max().unwrap_or(0)
    }

    pub fn summary(&self) -> String {
        if self.is_valid() {
            return "valid".into();
        }
        let mut lines = Vec::new();
        for (i, f) in self.part_failures.iter().enumerate() {
            if let Some(reason) = f {
                lines.push(format!("part {}: {}", i + 1, reason));
            }
        }
        for i in &self.empty_parts {
            lines.push(format!("part {}: empty", i + 1));
        }
        for (i, e) in &self.foreign_edges {
            lines.push(format!("part {}: edge {} not in graph", i + 1, e));
        }
        if !self.missing_edges.is_empty() {
            let list: Vec<String> = self.missing_edges.iter().map(|e| e.to_string()).collect();
            lines.push(format!("missing edges: {}", list.join(" ")));
        }
        if !self.duplicate_edges.is_empty() {
            let list: Vec<String> = self.duplicate_edges.iter().map(|e| e.to_string()).collect();
            lines.push(format!("edges in more than one part: {}", list.join(" ")));
        }
        lines.join("\n")
    }
}

/// Checks a cover certificate part-by-part against `g` and reports coverage,
/// disjointness (partition mode), and per-vertex loads.
pub fn verify_certificate(g: &Graph, cert: &CoverCertificate) -> VerifyReport {
    let mut part_failures = Vec::with_capacity(cert.parts.len());
    let mut empty_parts = Vec::new();
    let mut foreign_edges = Vec::new();
    let mut loads = vec![0usize; g.n() + 1];
    let mut seen_in: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut duplicate_edges = BTreeSet::new();

    for (i, part) in cert.parts.iter().enumerate() {
        if part.is_empty() {
            empty_parts.push(i);
        }
        let in_graph: Vec<Edge> = part
            .iter()
            .filter(|e| {
                if g.contains(e) {
                    true
                } else {
                    foreign_edges.push((i, **e));
                    false
                }
            })
            .copied()
            .collect();
        let failure = match validate_edge_set(g, &in_graph, cert.class) {
            Ok(true) => None,
            Ok(false) => Some(format!("not a valid {}", cert.class)),
            Err(e) => Some(e.to_string()),
        };
        part_failures.push(failure);

        let verts: BTreeSet<usize> = in_graph.iter().flat_map(|e| [e.u(), e.v()]).collect();
        for v in verts {
            loads[v] += 1;
        }
        for e in &in_graph {
            if seen_in.insert(*e, i).is_some() {
                duplicate_edges.insert(*e);
            }
        }
    }

    let missing_edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| !seen_in.contains_key(e))
        .copied()
        .collect();

    let duplicate_edges = if cert.mode == CoverMode::Partition {
        duplicate_edges.into_iter().collect()
    } else {
        Vec::new()
    };

    VerifyReport {
        part_failures,
        empty_parts,
        foreign_edges,
        missing_edges,
        duplicate_edges,
        loads,
    }
}

/// A vertex ordering witnessing a degeneracy bound: each vertex has at most
/// `d` neighbors earlier in the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingCertificate {
    pub order: Vec<usize>,
    pub d: usize,
}

impl OrderingCertificate {
    pub fn check(&self, g: &Graph) -> bool {
        if self.order.len() != g.n() {
            return false;
        }
        let mut pos = vec![usize::MAX; g.n() + 1];
        for (i, &v) in self.order.iter().enumerate() {
            if !g.has_vertex(v) || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = i;
        }
        self.order.iter().all(|&v| {
            g.neighbors(v).iter().filter(|&&w| pos[w] < pos[v]).count() <= self.d
        })
    }

    /// Position of each vertex in the order.
    pub fn positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n + 1];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringKind {
    ProperVertex,
    AcyclicVertex,
    ProperEdge,
    StrongEdge,
}

impl ColoringKind {
    pub fn tag(&self) -> &'static str {
        match self {
            ColoringKind::ProperVertex => "proper-vertex",
            ColoringKind::AcyclicVertex => "acyclic-vertex",
            ColoringKind::ProperEdge => "proper-edge",
            ColoringKind::StrongEdge => "strong-edge",
        }
    }

    pub fn from_tag(tag: &str) -> Result<ColoringKind> {
        match tag {
            "proper-vertex" => Ok(ColoringKind::ProperVertex),
            "acyclic-vertex" => Ok(ColoringKind::AcyclicVertex),
            "proper-edge" => Ok(ColoringKind::ProperEdge),
            "strong-edge" => Ok(ColoringKind::StrongEdge),
            other => Err(Error::Format(format!("unknown coloring kind `{other}`"))),
        }
    }

    pub fn colors_vertices(&self) -> bool {
        matches!(self, ColoringKind::ProperVertex | ColoringKind::AcyclicVertex)
    }
}

impl fmt::Display for ColoringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A vertex or edge coloring with colors `1..=c` and a declared validity kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringCertificate {
    pub kind: ColoringKind,
    pub c: usize,
    pub vertex_colors: BTreeMap<usize, usize>,
    pub edge_colors: BTreeMap<Edge, usize>,
}

impl ColoringCertificate {
    pub fn vertex(kind: ColoringKind, c: usize, colors: BTreeMap<usize, usize>) -> Self {
        assert!(kind.colors_vertices());
        ColoringCertificate {
            kind,
            c,
            vertex_colors: colors,
            edge_colors: BTreeMap::new(),
        }
    }

    pub fn edge(kind: ColoringKind, c: usize, colors: BTreeMap<Edge, usize>) -> Self {
        assert!(!kind.colors_vertices());
        ColoringCertificate {
            kind,
            c,
            vertex_colors: BTreeMap::new(),
            edge_colors: colors,
        }
    }

    /// Vertices of each color class, indexed by color - 1.
    pub fn vertex_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.c];
        for (&v, &col) in &self.vertex_colors {
            classes[col - 1].push(v);
        }
        classes
    }

    pub fn edge_classes(&self) -> Vec<Vec<Edge>> {
        let mut classes = vec![Vec::new(); self.c];
        for (&e, &col) in &self.edge_colors {
            classes[col - 1].push(e);
        }
        classes
    }
}

fn check_total_vertex(g: &Graph, col: &ColoringCertificate) -> Result<()> {
    for v in g.vertices() {
        match col.vertex_colors.get(&v) {
            Some(&c) if c >= 1 && c <= col.c => {}
            Some(&c) => {
                return Err(Error::InvalidInput(format!(
                    "color {c} of vertex {v} outside 1..={}",
                    col.c
                )))
            }
            None => {
                return Err(Error::InvalidInput(format!(
                    "partial assignment: vertex {v} uncolored"
                )))
            }
        }
    }
    Ok(())
}

fn check_total_edge(g: &Graph, col: &ColoringCertificate) -> Result<()> {
    for e in g.edges() {
        match col.edge_colors.get(e) {
            Some(&c) if c >= 1 && c <= col.c => {}
            Some(&c) => {
                return Err(Error::InvalidInput(format!(
                    "color {c} of edge {e} outside 1..={}",
                    col.c
                )))
            }
            None => {
                return Err(Error::InvalidInput(format!(
                    "partial assignment: edge {e} uncolored"
                )))
            }
        }
    }
    Ok(())
}

fn pair_induces_forest(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    let members: BTreeSet<usize> = a.iter().chain(b).copied().collect();
    // Union-find over the induced subgraph on both classes.
    let mut parent: BTreeMap<usize, usize> = members.iter().map(|&v| (v, v)).collect();
    fn find(parent: &mut BTreeMap<usize, usize>, mut x: usize) -> usize {
        while parent[&x] != x {
            let up = parent[&parent[&x]];
            parent.insert(x, up);
            x = up;
        }
        x
    }
    for &x in &members {
        for &y in g.neighbors(x) {
            if y > x && members.contains(&y) {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx == ry {
                    return false;
                }
                parent.insert(rx, ry);
            }
        }
    }
    true
}

/// Checks a coloring certificate against its declared kind.
///
/// Errors on partial assignments or out-of-range colors; returns `false`
/// exactly when the kind's invariant fails.
pub fn verify_coloring(g: &Graph, col: &ColoringCertificate) -> Result<bool> {
    match col.kind {
        ColoringKind::ProperVertex => {
            check_total_vertex(g, col)?;
            Ok(g
                .edges()
                .iter()
                .all(|e| col.vertex_colors[&e.u()] != col.vertex_colors[&e.v()]))
        }
        ColoringKind::AcyclicVertex => {
            check_total_vertex(g, col)?;
            if g.edges()
                .iter()
                .any(|e| col.vertex_colors[&e.u()] == col.vertex_colors[&e.v()])
            {
                return Ok(false);
            }
            let classes = col.vertex_classes();
            for i in 0..classes.len() {
                for j in i + 1..classes.len() {
                    if !pair_induces_forest(g, &classes[i], &classes[j]) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        ColoringKind::ProperEdge => {
            check_total_edge(g, col)?;
            for v in g.vertices() {
                let mut seen = BTreeSet::new();
                for &w in g.neighbors(v) {
                    if !seen.insert(col.edge_colors[&Edge::new(v, w)]) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        ColoringKind::StrongEdge => {
            check_total_edge(g, col)?;
            for class in col.edge_classes() {
                if !validate_edge_set(g, &class, ForestClass::InducedMatching)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_pairs(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    fn kn(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                pairs.push((u, v));
            }
        }
        Graph::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn alternating_two_coloring_of_c4() {
        let g = c4();
        let colors: BTreeMap<usize, usize> = [(1, 1), (2, 2), (3, 1), (4, 2)].into();
        let proper =
            ColoringCertificate::vertex(ColoringKind::ProperVertex, 2, colors.clone());
        assert!(verify_coloring(&g, &proper).unwrap());
        // The whole 4-cycle is bichromatic, so the same coloring is not acyclic.
        let acyc = ColoringCertificate::vertex(ColoringKind::AcyclicVertex, 2, colors);
        assert!(!verify_coloring(&g, &acyc).unwrap());
    }

    #[test]
    fn singletons_are_acyclic_in_kn() {
        let g = kn(4);
        let colors: BTreeMap<usize, usize> = (1..=4).map(|v| (v, v)).collect();
        let acyc = ColoringCertificate::vertex(ColoringKind::AcyclicVertex, 4, colors);
        assert!(verify_coloring(&g, &acyc).unwrap());
    }

    #[test]
    fn strong_edge_coloring_of_p4() {
        // Path 1-2-3-4 with end edges sharing a color: vertices {1,2,3,4}
        // induce the middle edge too, so color 1 is not an induced matching.
        let g = Graph::from_pairs(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let colors: BTreeMap<Edge, usize> = [
            (Edge::new(1, 2), 1),
            (Edge::new(2, 3), 2),
            (Edge::new(3, 4), 1),
        ]
        .into();
        let col = ColoringCertificate::edge(ColoringKind::StrongEdge, 2, colors);
        assert!(!verify_coloring(&g, &col).unwrap());
    }

    #[test]
    fn partial_assignment_is_an_input_error() {
        let g = c4();
        let colors: BTreeMap<usize, usize> = [(1, 1), (2, 2)].into();
        let col = ColoringCertificate::vertex(ColoringKind::ProperVertex, 2, colors);
        assert!(verify_coloring(&g, &col).is_err());
    }

    #[test]
    fn report_flags_missing_edges() {
        let g = kn(3);
        let cert = CoverCertificate::new(
            ForestClass::InducedForest,
            CoverMode::Cover,
            vec![vec![Edge::new(1, 2)], vec![Edge::new(1, 3)]],
        );
        let report = verify_certificate(&g, &cert);
        assert!(!report.is_valid());
        assert_eq!(report.missing_edges, vec![Edge::new(2, 3)]);
        assert_eq!(report.load(1), 2);
        assert_eq!(report.load(2), 1);
    }

    #[test]
    fn report_flags_partition_overlap_and_empty_parts() {
        let g = kn(3);
        let cert = CoverCertificate::new(
            ForestClass::Forest,
            CoverMode::Partition,
            vec![
                vec![Edge::new(1, 2), Edge::new(2, 3)],
                vec![Edge::new(2, 3), Edge::new(1, 3)],
                vec![],
            ],
        );
        let report = verify_certificate(&g, &cert);
        assert!(!report.is_valid());
        assert_eq!(report.duplicate_edges, vec![Edge::new(2, 3)]);
        assert_eq!(report.empty_parts, vec![2]);
    }

    #[test]
    fn valid_star_cover_of_k34() {
        let mut pairs = Vec::new();
        for u in 1..=3 {
            for v in 4..=7 {
                pairs.push((u, v));
            }
        }
        let g = Graph::from_pairs(7, &pairs).unwrap();
        let parts = (1..=3)
            .map(|u| (4..=7).map(|v| Edge::new(u, v)).collect())
            .collect();
        let cert = CoverCertificate::new(ForestClass::InducedForest, CoverMode::Cover, parts);
        let report = verify_certificate(&g, &cert);
        assert!(report.is_valid(), "{}", report.summary());
        // Every right-side vertex is in all three parts.
        for v in 4..=7 {
            assert_eq!(report.load(v), 3);
        }
    }

    #[test]
    fn ordering_certificate_checks() {
        let g = Graph::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        let ok = OrderingCertificate {
            order: vec![1, 2, 3],
            d: 1,
        };
        assert!(ok.check(&g));
        let bad = OrderingCertificate {
            order: vec![2, 1, 3],
            d: 0,
        };
        assert!(!bad.check(&g));
    }
}
