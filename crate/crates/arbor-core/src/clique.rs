use crate::bitset::VertexSet;
use crate::degeneracy::degeneracy;
use crate::graph::Graph;

/// Exact maximum clique size by branch and bound with greedy-coloring upper
/// bounds for pruning. Intended for graphs up to a few hundred vertices with
/// small clique number.
pub fn clique_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.m() == 0 {
        return 1;
    }
    let adj: Vec<VertexSet> = (0..=g.n())
        .map(|v| {
            let mut s = VertexSet::with_capacity(g.n());
            if v >= 1 {
                for &w in g.neighbors(v) {
                    s.insert(w);
                }
            }
            s
        })
        .collect();

    // A degeneracy order keeps candidate sets small near the root.
    let order = degeneracy(g).order;
    let mut best = 1;
    let mut candidates: Vec<usize> = order.clone();
    candidates.reverse();
    expand(&adj, &mut best, 0, candidates);
    best
}

/// Greedy coloring of `p`; vertices are then processed in decreasing color,
/// so `depth + color` bounds any clique extending through that vertex.
fn color_sort(adj: &[VertexSet], p: &[usize]) -> Vec<(usize, usize)> {
    let mut color_classes: Vec<Vec<usize>> = Vec::new();
    for &v in p {
        let slot = color_classes
            .iter()
            .position(|class| class.iter().all(|&w| !adj[v].contains(w)));
        match slot {
            Some(i) => color_classes[i].push(v),
            None => color_classes.push(vec![v]),
        }
    }
    let mut out = Vec::with_capacity(p.len());
    for (i, class) in color_classes.iter().enumerate() {
        for &v in class {
            out.push((v, i + 1));
        }
    }
    out
}

fn expand(adj: &[VertexSet], best: &mut usize, depth: usize, p: Vec<usize>) {
    let colored = color_sort(adj, &p);
    let mut p = p;
    for &(v, color) in colored.iter().rev() {
        if depth + color <= *best {
            return;
        }
        let next: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&w| w != v && adj[v].contains(w))
            .collect();
        if next.is_empty() {
            *best = (*best).max(depth + 1);
        } else {
            expand(adj, best, depth + 1, next);
        }
        p.retain(|&w| w != v);
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
    fn complete_graphs() {
        for n in 1..=8 {
            assert_eq!(clique_number(&kn(n)), n);
        }
    }

    #[test]
    fn five_cycle_has_clique_number_two() {
        let g = Graph::from_pairs(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert_eq!(clique_number(&g), 2);
    }

    #[test]
    fn planted_clique_in_sparse_graph() {
        // Path on 1..6 plus a K_4 on {7,8,9,10} joined by one edge.
        let mut pairs: Vec<(usize, usize)> = (1..6).map(|v| (v, v + 1)).collect();
        for u in 7..=10 {
            for v in u + 1..=10 {
                pairs.push((u, v));
            }
        }
        pairs.push((6, 7));
        let g = Graph::from_pairs(10, &pairs).unwrap();
        assert_eq!(clique_number(&g), 4);
    }

    #[test]
    fn edgeless_and_empty() {
        assert_eq!(clique_number(&Graph::new(0, []).unwrap()), 0);
        assert_eq!(clique_number(&Graph::new(3, []).unwrap()), 1);
    }
}
