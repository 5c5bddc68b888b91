use crate::clique::clique_number;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Outcome of chordality recognition: either a perfect elimination ordering
/// (each vertex's later neighbors form a clique) or a chordless cycle of
/// length at least 4 as a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal { peo: Vec<usize> },
    NotChordal { chordless_cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Maximum cardinality search; returns the visit sequence. The reversal of
/// this sequence is a perfect elimination ordering iff the graph is chordal.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n + 1];
    let mut visited = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (1..=n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Checks that each vertex's later neighbors form a clique; on failure
/// returns the offending vertex with two nonadjacent later neighbors.
fn peo_violation(g: &Graph, peo: &[usize]) -> Option<(usize, usize, usize)> {
    let mut pos = vec![usize::MAX; g.n() + 1];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in peo {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        for i in 0..later.len() {
            for j in i + 1..later.len() {
                if !g.has_edge(later[i], later[j]) {
                    return Some((v, later[i], later[j]));
                }
            }
        }
    }
    None
}

/// Shortest path from `from` to `to` avoiding `banned` vertices, as the
/// vertex sequence excluding the endpoints' common neighbor.
fn restricted_shortest_path(
    g: &Graph,
    from: usize,
    to: usize,
    banned: &[bool],
) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n() + 1];
    let mut queue = std::collections::VecDeque::new();
    prev[from] = from;
    queue.push_back(from);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if !banned[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Extracts a chordless cycle of length >= 4 from a non-chordal graph.
///
/// For a vertex `mid` with nonadjacent neighbors `a`, `b`, a shortest a-b
/// path avoiding N[mid] - {a,b} closes a cycle through `mid` in which every
/// chord would shortcut the path, so none exists.
fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for mid in g.vertices() {
        let nbrs = g.neighbors(mid);
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                let (a, b) = (nbrs[i], nbrs[j]);
                if g.has_edge(a, b) {
                    continue;
                }
                let mut banned = vec![false; g.n() + 1];
                banned[mid] = true;
                for &w in nbrs {
                    if w != a && w != b {
                        banned[w] = true;
                    }
                }
                if let Some(path) = restricted_shortest_path(g, a, b, &banned) {
                    let mut cycle = vec![mid];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// Chordality recognition via maximum cardinality search.
pub fn chordality(g: &Graph) -> Chordality {
    let mut peo = mcs_order(g);
    peo.reverse();
    if peo_violation(g, &peo).is_none() {
        return Chordality::Chordal { peo };
    }
    let cycle = find_chordless_cycle(g)
        .expect("MCS rejected the ordering, so a chordless cycle exists");
    debug_assert!(cycle_is_chordless(g, &cycle));
    Chordality::NotChordal {
        chordless_cycle: cycle,
    }
}

pub(crate) fn cycle_is_chordless(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let adjacent_on_cycle = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != adjacent_on_cycle {
                return false;
            }
        }
    }
    true
}

/// Tree-width of a chordal graph: clique number minus one.
/// Errors on non-chordal input; general tree-width is out of scope here.
pub fn treewidth_chordal(g: &Graph) -> Result<usize> {
    match chordality(g) {
        Chordality::Chordal { .. } => Ok(clique_number(g).saturating_sub(1)),
        Chordality::NotChordal { .. } => Err(Error::NotChordal),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn complete_graphs_are_chordal() {
        for n in 1..=6 {
            assert!(chordality(&kn(n)).is_chordal());
            if n >= 1 {
                assert_eq!(treewidth_chordal(&kn(n)).unwrap(), n.saturating_sub(1));
            }
        }
    }

    #[test]
    fn c4_reports_itself() {
        let g = Graph::from_pairs(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        match chordality(&g) {
            Chordality::NotChordal { chordless_cycle } => {
                assert_eq!(chordless_cycle.len(), 4);
                assert!(cycle_is_chordless(&g, &chordless_cycle));
            }
            Chordality::Chordal { .. } => panic!("C_4 is not chordal"),
        }
        assert!(treewidth_chordal(&g).is_err());
    }

    #[test]
    fn longer_hole_found_in_webbed_graph() {
        // C_6 plus one chord splits into a C_4 and a C_5 region; the finder
        // must return some chordless cycle of length >= 4.
        let g = Graph::from_pairs(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 3)])
            .unwrap();
        match chordality(&g) {
            Chordality::NotChordal { chordless_cycle } => {
                assert!(cycle_is_chordless(&g, &chordless_cycle));
            }
            Chordality::Chordal { .. } => panic!("graph has a hole"),
        }
    }

    #[test]
    fn trees_are_chordal_with_treewidth_one() {
        let g = Graph::from_pairs(5, &[(1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        assert!(chordality(&g).is_chordal());
        assert_eq!(treewidth_chordal(&g).unwrap(), 1);
    }

    #[test]
    fn peo_definition_holds_when_claimed() {
        let g = Graph::from_pairs(5, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        match chordality(&g) {
            Chordality::Chordal { peo } => {
                assert!(peo_violation(&g, &peo).is_none());
            }
            _ => panic!("graph is chordal"),
        }
    }
}
