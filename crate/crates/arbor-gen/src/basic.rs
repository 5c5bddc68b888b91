use std::collections::BTreeMap;

use arbor_core::{Edge, Graph};

use crate::error::{GenError, Result};

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(GenError::Parameter("complete(n) needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            edges.push(Edge::new(u, v));
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Parts are {1..m} and {m+1..m+n}.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(GenError::Parameter(
            "complete_bipartite(m,n) needs m,n >= 1".into(),
        ));
    }
    let mut edges = Vec::new();
    for u in 1..=m {
        for v in m + 1..=m + n {
            edges.push(Edge::new(u, v));
        }
    }
    Ok(Graph::new(m + n, edges)?)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(GenError::Parameter("cycle(n) needs n >= 3".into()));
    }
    let mut edges: Vec<Edge> = (1..n).map(|v| Edge::new(v, v + 1)).collect();
    edges.push(Edge::new(1, n));
    Ok(Graph::new(n, edges)?)
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(GenError::Parameter("path(n) needs n >= 1".into()));
    }
    let edges: Vec<Edge> = (1..n).map(|v| Edge::new(v, v + 1)).collect();
    Ok(Graph::new(n, edges)?)
}

/// p-th power of a path: vertices 1..=n in path order, edge uv iff |u-v| <= p.
pub fn path_power(n: usize, p: usize) -> Result<Graph> {
    if n < 2 || p < 1 {
        return Err(GenError::Parameter(
            "path_power(n,p) needs n >= 2, p >= 1".into(),
        ));
    }
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=(u + p).min(n) {
            edges.push(Edge::new(u, v));
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Result of subdividing every edge once: the new graph plus the subdivision
/// vertex assigned to each original edge.
#[derive(Debug, Clone)]
pub struct SubdividedGraph {
    pub graph: Graph,
    pub edge_vertex: BTreeMap<Edge, usize>,
}

/// sd_1(G): one new vertex per edge, |V| + |E| vertices, 2|E| edges.
pub fn subdivide_once(g: &Graph) -> SubdividedGraph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    let mut edge_vertex = BTreeMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        let w = n + i + 1;
        edge_vertex.insert(*e, w);
        edges.push(Edge::new(e.u(), w));
        edges.push(Edge::new(e.v(), w));
    }
    let graph = Graph::new(n + g.m(), edges).expect("subdivision is simple");
    SubdividedGraph { graph, edge_vertex }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_counts() {
        assert_eq!(complete(4).unwrap().m(), 6);
        assert_eq!(complete_bipartite(3, 4).unwrap().m(), 12);
        assert_eq!(cycle(5).unwrap().m(), 5);
        assert_eq!(path(6).unwrap().m(), 5);
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn path_power_counts() {
        // Power 1 is the path itself.
        assert_eq!(path_power(7, 1).unwrap(), path(7).unwrap());
        // Pairs at distance <= 2 on 12 vertices: 11 + 10.
        assert_eq!(path_power(12, 2).unwrap().m(), 21);
        // Pairs at distance <= 3 on 36 vertices: 35 + 34 + 33.
        assert_eq!(path_power(36, 3).unwrap().m(), 102);
    }

    #[test]
    fn subdivision_counts_and_bipartite() {
        let k3 = complete(3).unwrap();
        let sd = subdivide_once(&k3);
        assert_eq!(sd.graph.n(), 6);
        assert_eq!(sd.graph.m(), 6);
        assert!(sd.graph.is_bipartite());

        let k4 = complete(4).unwrap();
        let sd = subdivide_once(&k4);
        assert_eq!(sd.graph.n(), 10);
        assert_eq!(sd.graph.m(), 12);
        assert!(sd.graph.is_bipartite());
    }
}
