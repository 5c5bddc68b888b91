use std::collections::BTreeSet;

use crate::certificate::OrderingCertificate;
use crate::graph::Graph;

/// Degeneracy of `g` with a witness ordering, by iterated minimum-degree
/// removal (ties to the smallest vertex id). The returned order is the
/// reversed removal sequence, so every vertex has at most `d` neighbors
/// earlier in the order.
pub fn degeneracy(g: &Graph) -> OrderingCertificate {
    let n = g.n();
    let mut deg: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { g.degree(v) }).collect();
    let mut queue: BTreeSet<(usize, usize)> = (1..=n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n + 1];
    let mut removal = Vec::with_capacity(n);
    let mut d = 0;

    while let Some(&(dv, v)) = queue.iter().next() {
        queue.remove(&(dv, v));
        removed[v] = true;
        d = d.max(dv);
        removal.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }

    removal.reverse();
    let cert = OrderingCertificate { order: removal, d };
    debug_assert!(cert.check(g));
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

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
    fn complete_graph() {
        for n in 1..=6 {
            assert_eq!(degeneracy(&kn(n)).d, n - 1);
        }
    }

    #[test]
    fn complete_bipartite_is_min_side_degenerate() {
        // K_{n,d} with n > (d-1)^2 has degeneracy d.
        for (n, d) in [(5, 2), (2, 2), (10, 3)] {
            let mut pairs = Vec::new();
            for u in 1..=n {
                for v in n + 1..=n + d {
                    pairs.push((u, v));
                }
            }
            let g = Graph::from_pairs(n + d, &pairs).unwrap();
            let cert = degeneracy(&g);
            assert_eq!(cert.d, d.min(n));
            assert!(cert.check(&g));
        }
    }

    #[test]
    fn trees_are_one_degenerate() {
        let g = Graph::from_pairs(6, &[(1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap();
        assert_eq!(degeneracy(&g).d, 1);
    }

    #[test]
    fn edgeless_graph() {
        let g = Graph::new(4, []).unwrap();
        let cert = degeneracy(&g);
        assert_eq!(cert.d, 0);
        assert!(cert.check(&g));
    }
}
