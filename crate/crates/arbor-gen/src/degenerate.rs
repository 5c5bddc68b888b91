use itertools::Itertools;

use arbor_core::{Edge, Graph};

use crate::error::{GenError, Result};

/// Guards the faithful construction, whose size explodes in d.
const MAX_VERTICES: u128 = 200_000;

/// The bipartite d-degenerate witness: parts A (size d) and B (size N),
/// plus one fresh part B_S of size N per d-subset S of B, joined as complete
/// bipartite graphs (A,B) and (S, B_S).
#[derive(Debug, Clone)]
pub struct DegenerateLbGraph {
    pub graph: Graph,
    pub d: usize,
    pub n_param: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// True when N was the full 2^d * d^(d+1); overrides give truncated,
    /// non-faithful desk-scale instances.
    pub faithful: bool,
}

pub fn degenerate_lb_graph(d: usize, n_override: Option<usize>) -> Result<DegenerateLbGraph> {
    if d < 2 {
        return Err(GenError::Parameter(
            "degenerate_lb_graph(d) needs d >= 2".into(),
        ));
    }
    let full_n = (1usize << d) * d.pow(d as u32 + 1);
    let n = n_override.unwrap_or(full_n);
    if n < d {
        return Err(GenError::Parameter(format!(
            "N must be at least d = {d}, got {n}"
        )));
    }

    let subsets = binomial(n as u128, d as u128);
    let total: u128 = d as u128 + n as u128 + subsets * n as u128;
    if total > MAX_VERTICES {
        return Err(GenError::TooLarge(format!(
            "construction would have {total} vertices (d = {d}, N = {n})"
        )));
    }

    let a: Vec<usize> = (1..=d).collect();
    let b: Vec<usize> = (d + 1..=d + n).collect();
    let mut edges = Vec::new();
    for &x in &a {
        for &y in &b {
            edges.push(Edge::new(x, y));
        }
    }
    let mut next = d + n + 1;
    // d-subsets S of B in lexicographic order; ids stay reproducible.
    for s in b.iter().copied().combinations(d) {
        let b_s: Vec<usize> = (next..next + n).collect();
        next += n;
        for &x in &s {
            for &y in &b_s {
                edges.push(Edge::new(x, y));
            }
        }
    }

    let graph = Graph::new(next - 1, edges)?;
    Ok(DegenerateLbGraph {
        graph,
        d,
        n_param: n,
        a,
        b,
        faithful: n_override.is_none(),
    })
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k {
        out = out.saturating_mul(n - i) / (i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use arbor_core::degeneracy;

    #[test]
    fn truncated_instance_counts() {
        let lb = degenerate_lb_graph(2, Some(4)).unwrap();
        assert!(!lb.faithful);
        assert_eq!(lb.graph.n(), 2 + 4 + 6 * 4);
        assert!(lb.graph.is_bipartite());
        assert!(degeneracy(&lb.graph).d <= 2);
    }

    #[test]
    fn faithful_d2_counts() {
        let lb = degenerate_lb_graph(2, None).unwrap();
        assert!(lb.faithful);
        assert_eq!(lb.n_param, 32);
        assert_eq!(lb.graph.n(), 2 + 32 + 496 * 32);
        assert!(lb.graph.is_bipartite());
        assert!(degeneracy(&lb.graph).d <= 2);
    }

    #[test]
    fn faithful_d3_overflows_with_named_count() {
        let err = degenerate_lb_graph(3, None).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("vertices"), "{msg}");
        // N = 8 * 81 = 648; the guard must name the full-size count.
        assert!(msg.contains("648"), "{msg}");
    }

    #[test]
    fn truncated_d3_is_three_degenerate() {
        let lb = degenerate_lb_graph(3, Some(4)).unwrap();
        assert_eq!(lb.graph.n(), 3 + 4 + 4 * 4);
        assert!(degeneracy(&lb.graph).d <= 3);
        assert!(lb.graph.is_bipartite());
    }
}
