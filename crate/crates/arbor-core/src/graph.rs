use std::fmt;

use crate::error::{Error, Result};

/// An undirected edge, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop; use [`Edge::try_new`]
    /// when the endpoints come from untrusted input.
    pub fn new(a: usize, b: usize) -> Edge {
        Edge::try_new(a, b).expect("loop edge")
    }

    pub fn try_new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
        }
        if a == 0 || b == 0 {
            return Err(Error::InvalidGraph("vertices are 1-based".into()));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Ok(Edge { u, v })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    /// The endpoint different from `x`; panics if `x` is not an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            assert_eq!(x, self.v, "vertex {x} not on edge {self}");
            self.u
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// An immutable simple undirected graph on vertices `1..=n`.
///
/// Edges are kept sorted and deduplicated; adjacency lists are sorted, so
/// membership tests are binary searches. All operations in this workspace
/// treat graphs as immutable value objects, which keeps certificates that
/// reference vertex ids stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>, // index 0 unused
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidGraph(format!("duplicate edge {}", w[0])));
            }
        }
        let mut adj = vec![Vec::new(); n + 1];
        for e in &edges {
            if e.v() > n {
                return Err(Error::VertexOutOfRange(e.v(), n));
            }
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    /// Builds from raw endpoint pairs, normalizing the order of each pair.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Edge::try_new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        v >= 1 && v <= self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a == b || !self.has_vertex(a) || !self.has_vertex(b) {
            return false;
        }
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    /// Position of `e` in the sorted edge list.
    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    /// Validates that every edge of `subset` belongs to this graph.
    pub fn check_subset(&self, subset: &[Edge]) -> Result<()> {
        for e in subset {
            if !self.contains(e) {
                return Err(Error::EdgeNotInGraph(*e));
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![2u8; self.n + 1]; // 2 = unassigned
        for s in 1..=self.n {
            if side[s] != 2 {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in self.neighbors(x) {
                    if side[y] == 2 {
                        side[y] = 1 - side[x];
                        stack.push(y);
                    } else if side[y] == side[x] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_normalizes_order() {
        let e = Edge::new(5, 2);
        assert_eq!(e.endpoints(), (2, 5));
        assert_eq!(e.to_string(), "2-5");
        assert_eq!(e.other(2), 5);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Edge::try_new(3, 3).is_err());
        let dup = Graph::new(3, [Edge::new(1, 2), Edge::new(2, 1)]);
        assert!(dup.is_err());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Graph::new(2, [Edge::new(1, 3)]).is_err());
    }

    #[test]
    fn adjacency_matches_edges() {
        let g = Graph::from_pairs(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!(g.has_edge(4, 1));
        assert!(!g.has_edge(1, 3));
        assert_eq!(g.neighbors(2), &[1, 3]);
        assert!(g.is_connected());
        assert!(g.is_bipartite());
    }
}
