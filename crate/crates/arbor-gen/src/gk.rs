use arbor_core::{Edge, Graph};

use crate::basic::path_power;
use crate::error::{GenError, Result};

/// The tree-width-(k-1) witness graph: a (k-1)-st path power carrying
/// vertex pairs (w', w'') over consecutive blocks, with a K_k hung on every
/// vertex of the augmented graph.
///
/// Every vertex role is recorded so tests can address the block cliques
/// S_i' and S_i'' directly.
#[derive(Debug, Clone)]
pub struct GkGraph {
    pub graph: Graph,
    pub k: usize,
    /// Vertices 1..=h1_len are the path-power vertices, in path order.
    pub h1_len: usize,
    pub blocks: Vec<GkBlock>,
    /// Per vertex of H_2 (ascending id): the fresh vertices of its hanging K_k.
    pub hanging: Vec<HangingClique>,
}

#[derive(Debug, Clone)]
pub struct GkBlock {
    /// First k-2 block vertices plus the k-th, a (k-1)-clique in H_1.
    pub s_prime: Vec<usize>,
    /// Remaining k-1 block vertices, also a (k-1)-clique in H_1.
    pub s_double_prime: Vec<usize>,
    pub w_prime: usize,
    pub w_double_prime: usize,
}

#[derive(Debug, Clone)]
pub struct HangingClique {
    /// The H_2 vertex the clique shares with the rest of the graph.
    pub anchor: usize,
    pub fresh: Vec<usize>,
}

impl GkGraph {
    pub fn h2_vertex_count(&self) -> usize {
        self.h1_len + 2 * self.blocks.len()
    }

    /// Role tags for the sidecar file: `h1:<pos>`, `s:<i>:prime`,
    /// `s:<i>:double`, `w:<i>:prime`, `w:<i>:double`, `clique:<anchor>`.
    pub fn roles(&self) -> Vec<(usize, String)> {
        let mut out = Vec::new();
        for v in 1..=self.h1_len {
            out.push((v, format!("h1:{v}")));
        }
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in &b.s_prime {
                out.push((v, format!("s:{}:prime", i + 1)));
            }
            for &v in &b.s_double_prime {
                out.push((v, format!("s:{}:double", i + 1)));
            }
            out.push((b.w_prime, format!("w:{}:prime", i + 1)));
            out.push((b.w_double_prime, format!("w:{}:double", i + 1)));
        }
        for h in &self.hanging {
            for &v in &h.fresh {
                out.push((v, format!("clique:{}", h.anchor)));
            }
        }
        out.sort();
        out
    }
}

/// Builds G_k for k >= 3. The k = 2 member of the family is defined only by
/// a drawing, so it is not generated; a substitute witness is found by
/// search instead (see the acceptance suite).
pub fn gk(k: usize) -> Result<GkGraph> {
    if k < 3 {
        return Err(GenError::Parameter("gk(k) needs k >= 3".into()));
    }
    let h1_len = k * (k - 1) * (k - 1);
    let h1 = path_power(h1_len, k - 1)?;
    let mut edges: Vec<Edge> = h1.edges().to_vec();

    let block_size = 2 * (k - 1);
    let block_count = k * (k - 1) / 2;
    debug_assert_eq!(block_size * block_count, h1_len);

    let mut blocks = Vec::with_capacity(block_count);
    let mut next = h1_len + 1;
    for i in 0..block_count {
        let start = i * block_size + 1;
        let members: Vec<usize> = (start..start + block_size).collect();
        // First k-2 vertices plus the k-th, in path order; the rest is S''.
        let mut s_prime: Vec<usize> = members[..k - 2].to_vec();
        s_prime.push(members[k - 1]);
        let s_double_prime: Vec<usize> = members
            .iter()
            .copied()
            .filter(|v| !s_prime.contains(v))
            .collect();
        let w_prime = next;
        let w_double_prime = next + 1;
        next += 2;
        for &v in &s_prime {
            edges.push(Edge::new(w_prime, v));
        }
        for &v in &s_double_prime {
            edges.push(Edge::new(w_double_prime, v));
        }
        blocks.push(GkBlock {
            s_prime,
            s_double_prime,
            w_prime,
            w_double_prime,
        });
    }

    let h2_count = next - 1;
    let mut hanging = Vec::with_capacity(h2_count);
    for anchor in 1..=h2_count {
        let fresh: Vec<usize> = (next..next + k - 1).collect();
        next += k - 1;
        for (i, &x) in fresh.iter().enumerate() {
            edges.push(Edge::new(anchor, x));
            for &y in &fresh[i + 1..] {
                edges.push(Edge::new(x, y));
            }
        }
        hanging.push(HangingClique { anchor, fresh });
    }

    let graph = Graph::new(next - 1, edges)?;
    Ok(GkGraph {
        graph,
        k,
        h1_len,
        blocks,
        hanging,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_k3() {
        let g = gk(3).unwrap();
        // 12 path vertices + 6 w's + 18 hanging pairs.
        assert_eq!(g.graph.n(), 54);
        // 21 power-path edges + 12 w edges + 18 hanging triangles.
        assert_eq!(g.graph.m(), 87);
        assert_eq!(g.h2_vertex_count(), 18);
        assert_eq!(g.blocks.len(), 3);
    }

    #[test]
    fn counts_for_k4() {
        let g = gk(4).unwrap();
        assert_eq!(g.graph.n(), 36 + 12 + 48 * 3);
        assert_eq!(g.graph.m(), 102 + 12 * 3 + 48 * 6);
    }

    #[test]
    fn block_sets_are_cliques_in_h1() {
        for k in [3usize, 4, 5] {
            let g = gk(k).unwrap();
            for b in &g.blocks {
                for side in [&b.s_prime, &b.s_double_prime] {
                    assert_eq!(side.len(), k - 1);
                    for (i, &x) in side.iter().enumerate() {
                        for &y in &side[i + 1..] {
                            assert!(g.graph.has_edge(x, y), "k={k}: {x}-{y} missing");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn w_vertices_see_exactly_their_side() {
        let g = gk(3).unwrap();
        for b in &g.blocks {
            let nbrs: Vec<usize> = g
                .graph
                .neighbors(b.w_prime)
                .iter()
                .copied()
                .filter(|&v| v <= g.h1_len)
                .collect();
            assert_eq!(nbrs, b.s_prime);
        }
    }

    #[test]
    fn hanging_cliques_share_one_vertex() {
        let g = gk(3).unwrap();
        assert_eq!(g.hanging.len(), 18);
        for h in &g.hanging {
            assert_eq!(h.fresh.len(), 2);
            for &x in &h.fresh {
                assert!(g.graph.has_edge(h.anchor, x));
            }
            assert!(g.graph.has_edge(h.fresh[0], h.fresh[1]));
        }
    }

    #[test]
    fn k2_unsupported() {
        assert!(gk(2).is_err());
    }
}
