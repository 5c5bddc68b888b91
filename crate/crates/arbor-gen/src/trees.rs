use std::collections::BTreeMap;

use arbor_core::{Edge, Graph};

/// All free trees on n labeled vertices 1..=n, one representative per
/// isomorphism class, in canonical-code order. Grown by leaf attachment
/// with AHU-style canonical forms for deduplication.
pub fn all_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut current = vec![Graph::new(1, []).unwrap()];
    for size in 2..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &current {
            for v in 1..size {
                let mut edges: Vec<Edge> = t.edges().to_vec();
                edges.push(Edge::new(v, size));
                let grown = Graph::new(size, edges).unwrap();
                next.entry(tree_code(&grown)).or_insert(grown);
            }
        }
        current = next.into_values().collect();
    }
    current
}

/// Canonical code of a free tree: root at the center, or at the central
/// edge with the two halves' codes sorted.
pub fn tree_code(t: &Graph) -> String {
    let centers = centers(t);
    match centers.as_slice() {
        [c] => encode(t, *c, 0),
        [c1, c2] => {
            let a = encode(t, *c1, *c2);
            let b = encode(t, *c2, *c1);
            if a <= b {
                format!("[{a}{b}]")
            } else {
                format!("[{b}{a}]")
            }
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

fn encode(t: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(t, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n == 1 {
        return vec![1];
    }
    let mut deg: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { t.degree(v) }).collect();
    let mut removed = vec![false; n + 1];
    let mut layer: Vec<usize> = (1..=n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in t.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (1..=n).filter(|&v| !removed[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_tree_counts() {
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(all_trees(i + 1).len(), count, "n = {}", i + 1);
        }
    }

    #[test]
    fn path_and_star_are_distinguished() {
        let path = Graph::from_pairs(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let star = Graph::from_pairs(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_ne!(tree_code(&path), tree_code(&star));
        // Relabeled path has the same code.
        let path2 = Graph::from_pairs(4, &[(2, 4), (4, 1), (1, 3)]).unwrap();
        assert_eq!(tree_code(&path), tree_code(&path2));
    }
}
