use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// The eight forest classes whose covering numbers this workspace computes.
///
/// Each tag is a predicate on `(graph, edge subset)`; see [`validate_edge_set`].
/// Short tags (`forest`, `wif`, `if`, `sf`, `wisf`, `isf`, `matching`, `im`)
/// are shared between the CLI and the certificate file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ForestClass {
    Forest,
    WeakInducedForest,
    InducedForest,
    StarForest,
    WeakInducedStarForest,
    InducedStarForest,
    Matching,
    InducedMatching,
}

impl ForestClass {
    pub const ALL: [ForestClass; 8] = [
        ForestClass::Forest,
        ForestClass::WeakInducedForest,
        ForestClass::InducedForest,
        ForestClass::StarForest,
        ForestClass::WeakInducedStarForest,
        ForestClass::InducedStarForest,
        ForestClass::Matching,
        ForestClass::InducedMatching,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            ForestClass::Forest => "forest",
            ForestClass::WeakInducedForest => "wif",
            ForestClass::InducedForest => "if",
            ForestClass::StarForest => "sf",
            ForestClass::WeakInducedStarForest => "wisf",
            ForestClass::InducedStarForest => "isf",
            ForestClass::Matching => "matching",
            ForestClass::InducedMatching => "im",
        }
    }

    pub fn from_tag(tag: &str) -> Result<ForestClass> {
        let class = match tag {
            "forest" => ForestClass::Forest,
            "wif" | "weak-induced-forest" => ForestClass::WeakInducedForest,
            "if" | "induced-forest" => ForestClass::InducedForest,
            "sf" | "star-forest" => ForestClass::StarForest,
            "wisf" | "weak-induced-star-forest" => ForestClass::WeakInducedStarForest,
            "isf" | "induced-star-forest" => ForestClass::InducedStarForest,
            "matching" => ForestClass::Matching,
            "im" | "induced-matching" => ForestClass::InducedMatching,
            other => return Err(Error::Format(format!("unknown class tag `{other}`"))),
        };
        Ok(class)
    }

    /// Direct superclasses in the class lattice: any edge set valid for
    /// `self` is valid for each returned class on the same graph.
    pub fn direct_superclasses(&self) -> &'static [ForestClass] {
        match self {
            ForestClass::InducedMatching => {
                &[ForestClass::InducedStarForest, ForestClass::Matching]
            }
            ForestClass::InducedStarForest => &[
                ForestClass::InducedForest,
                ForestClass::WeakInducedStarForest,
            ],
            ForestClass::InducedForest => &[ForestClass::WeakInducedForest],
            ForestClass::Matching => &[ForestClass::WeakInducedStarForest],
            ForestClass::WeakInducedStarForest => {
                &[ForestClass::WeakInducedForest, ForestClass::StarForest]
            }
            ForestClass::WeakInducedForest => &[ForestClass::Forest],
            ForestClass::StarForest => &[ForestClass::Forest],
            ForestClass::Forest => &[],
        }
    }

    /// Whether parts must be induced as a whole, per component, or not at all.
    pub fn inducedness(&self) -> Inducedness {
        match self {
            ForestClass::InducedForest
            | ForestClass::InducedStarForest
            | ForestClass::InducedMatching => Inducedness::Whole,
            ForestClass::WeakInducedForest
            | ForestClass::WeakInducedStarForest
            | ForestClass::Matching => Inducedness::PerComponent,
            ForestClass::Forest | ForestClass::StarForest => Inducedness::None,
        }
    }

    pub fn requires_star(&self) -> bool {
        matches!(
            self,
            ForestClass::StarForest
                | ForestClass::WeakInducedStarForest
                | ForestClass::InducedStarForest
        )
    }

    pub fn requires_matching(&self) -> bool {
        matches!(self, ForestClass::Matching | ForestClass::InducedMatching)
    }
}

impl fmt::Display for ForestClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// How much of the host graph an edge set must reproduce.
///
/// A matching is listed under `PerComponent` although single edges are
/// induced automatically; the distinction only matters for solver pruning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inducedness {
    None,
    PerComponent,
    Whole,
}

struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..=n).collect(),
            size: vec![1; n + 1],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }
}

/// Decides whether `(V(subset), subset)` satisfies `class` inside `g`.
///
/// The empty subset is valid for every class. Errors only on edges that are
/// not in `g`; duplicates in the slice are collapsed.
pub fn validate_edge_set(g: &Graph, subset: &[Edge], class: ForestClass) -> Result<bool> {
    g.check_subset(subset)?;
    let set: BTreeSet<Edge> = subset.iter().copied().collect();
    if set.is_empty() {
        return Ok(true);
    }

    let mut deg = vec![0usize; g.n() + 1];
    for e in &set {
        deg[e.u()] += 1;
        deg[e.v()] += 1;
    }

    if class.requires_matching() {
        if set.iter().any(|e| deg[e.u()] > 1 || deg[e.v()] > 1) {
            return Ok(false);
        }
    } else {
        // Acyclicity via union-find; a rejected union closes a cycle.
        let mut dsu = Dsu::new(g.n());
        for e in &set {
            if !dsu.union(e.u(), e.v()) {
                return Ok(false);
            }
        }
        if class.requires_star() {
            // A tree is a star iff at most one vertex has degree >= 2.
            let mut dsu = Dsu::new(g.n());
            for e in &set {
                dsu.union(e.u(), e.v());
            }
            let mut big: BTreeSet<usize> = BTreeSet::new();
            for v in 1..=g.n() {
                if deg[v] >= 2 && !big.insert(dsu.find(v)) {
                    return Ok(false);
                }
            }
        }
    }

    match class.inducedness() {
        Inducedness::None => {}
        Inducedness::Whole => {
            let in_set: BTreeSet<usize> = set.iter().flat_map(|e| [e.u(), e.v()]).collect();
            for &x in &in_set {
                for &y in g.neighbors(x) {
                    if y > x && in_set.contains(&y) && !set.contains(&Edge::new(x, y)) {
                        return Ok(false);
                    }
                }
            }
        }
        Inducedness::PerComponent => {
            let mut dsu = Dsu::new(g.n());
            for e in &set {
                dsu.union(e.u(), e.v());
            }
            let in_set: BTreeSet<usize> = set.iter().flat_map(|e| [e.u(), e.v()]).collect();
            for &x in &in_set {
                let rx = dsu.find(x);
                for &y in g.neighbors(x) {
                    if y > x
                        && in_set.contains(&y)
                        && dsu.find(y) == rx
                        && !set.contains(&Edge::new(x, y))
                    {
                        return Ok(false);
                    }
                }
            }
        }
    }

    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                pairs.push((u, v));
            }
        }
        Graph::from_pairs(n, &pairs).unwrap()
    }

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn single_edge_is_induced_forest_in_k3() {
        let g = k(3);
        assert!(validate_edge_set(&g, &[e(1, 2)], ForestClass::InducedForest).unwrap());
    }

    #[test]
    fn weak_induced_forests_of_kn_are_matchings() {
        let g = k(4);
        assert!(validate_edge_set(&g, &[e(1, 2), e(3, 4)], ForestClass::WeakInducedForest).unwrap());
        assert!(
            !validate_edge_set(&g, &[e(1, 2), e(1, 3)], ForestClass::WeakInducedForest).unwrap()
        );
    }

    #[test]
    fn full_star_in_bipartite_graph_is_induced() {
        // K_{3,4} with left part {1,2,3}: all edges at one left vertex.
        let mut pairs = Vec::new();
        for u in 1..=3 {
            for v in 4..=7 {
                pairs.push((u, v));
            }
        }
        let g = Graph::from_pairs(7, &pairs).unwrap();
        let star: Vec<Edge> = (4..=7).map(|v| e(1, v)).collect();
        assert!(validate_edge_set(&g, &star, ForestClass::InducedForest).unwrap());
        assert!(validate_edge_set(&g, &star, ForestClass::InducedStarForest).unwrap());
    }

    #[test]
    fn cycle_is_no_forest() {
        let g = k(3);
        let all = vec![e(1, 2), e(1, 3), e(2, 3)];
        assert!(!validate_edge_set(&g, &all, ForestClass::Forest).unwrap());
    }

    #[test]
    fn path_of_three_edges_is_no_star() {
        let g = Graph::from_pairs(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let all = vec![e(1, 2), e(2, 3), e(3, 4)];
        assert!(validate_edge_set(&g, &all, ForestClass::Forest).unwrap());
        assert!(!validate_edge_set(&g, &all, ForestClass::StarForest).unwrap());
        assert!(
            validate_edge_set(&g, &[e(1, 2), e(2, 3)], ForestClass::InducedStarForest).unwrap()
        );
    }

    #[test]
    fn matching_needs_degree_one() {
        let g = k(4);
        assert!(validate_edge_set(&g, &[e(1, 2), e(3, 4)], ForestClass::Matching).unwrap());
        assert!(!validate_edge_set(&g, &[e(1, 2), e(3, 4)], ForestClass::InducedMatching).unwrap());
        assert!(!validate_edge_set(&g, &[e(1, 2), e(2, 3)], ForestClass::Matching).unwrap());
    }

    #[test]
    fn empty_subset_valid_everywhere() {
        let g = k(3);
        for class in ForestClass::ALL {
            assert!(validate_edge_set(&g, &[], class).unwrap());
        }
    }

    #[test]
    fn foreign_edge_is_an_input_error() {
        let g = Graph::from_pairs(3, &[(1, 2)]).unwrap();
        assert!(validate_edge_set(&g, &[e(1, 3)], ForestClass::Forest).is_err());
    }

    #[test]
    fn class_tags_round_trip() {
        for class in ForestClass::ALL {
            assert_eq!(ForestClass::from_tag(class.tag()).unwrap(), class);
        }
        assert!(ForestClass::from_tag("nope").is_err());
    }
}
