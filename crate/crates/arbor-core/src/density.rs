use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Nash-Williams density m(G) = max over subgraphs H with |V(H)| >= 2 of
/// ceil(|E(H)| / (|V(H)| - 1)); equals the arboricity a(G).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityBound {
    pub value: usize,
    /// True when every connected induced subgraph was enumerated; otherwise
    /// `value` is a lower bound from sampled subgraphs.
    pub exact: bool,
}

/// Largest vertex count for which the exact subset enumeration runs.
pub const EXACT_DENSITY_LIMIT: usize = 20;

/// Computes m(G), exactly for graphs on at most [`EXACT_DENSITY_LIMIT`]
/// vertices. It suffices to scan connected induced subgraphs: adding edges
/// never lowers the numerator, and a disconnected subgraph is dominated by
/// its densest component.
pub fn nash_williams_density(g: &Graph) -> DensityBound {
    if g.n() <= EXACT_DENSITY_LIMIT {
        DensityBound {
            value: exact_density(g),
            exact: true,
        }
    } else {
        DensityBound {
            value: sampled_density(g, 1),
            exact: false,
        }
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    if a == 0 {
        0
    } else {
        (a + b - 1) / b
    }
}

fn subset_density(g: &Graph, members: &[usize]) -> usize {
    if members.len() < 2 {
        return 0;
    }
    let mut edges = 0;
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            if g.has_edge(x, y) {
                edges += 1;
            }
        }
    }
    ceil_div(edges, members.len() - 1)
}

fn exact_density(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    let adj_mask: Vec<u32> = (0..=n)
        .map(|v| {
            let mut m = 0u32;
            if v >= 1 {
                for &w in g.neighbors(v) {
                    m |= 1 << (w - 1);
                }
            }
            m
        })
        .collect();

    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 {
            continue;
        }
        // Connectivity by mask BFS from the lowest member.
        let start = mask.trailing_zeros() as usize + 1;
        let mut reached = 1u32 << (start - 1);
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize + 1;
                f &= f - 1;
                next |= adj_mask[v] & mask & !reached;
            }
            reached |= next;
            frontier = next;
        }
        if reached != mask {
            continue;
        }
        let mut edges = 0usize;
        let mut f = mask;
        while f != 0 {
            let v = f.trailing_zeros() as usize + 1;
            f &= f - 1;
            edges += (adj_mask[v] & mask).count_ones() as usize;
        }
        edges /= 2;
        best = best.max(ceil_div(edges, size - 1));
    }
    best
}

/// Lower bound on m(G) for large graphs: the whole graph, every closed
/// neighborhood, and seeded random connected subsets grown by BFS.
fn sampled_density(g: &Graph, seed: u64) -> usize {
    let n = g.n();
    let whole: Vec<usize> = g.vertices().collect();
    let mut best = subset_density(g, &whole);
    for v in g.vertices() {
        let mut hood: Vec<usize> = g.neighbors(v).to_vec();
        hood.push(v);
        best = best.max(subset_density(g, &hood));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let start = rng.gen_range(1..=n);
        let target = rng.gen_range(2..=16.min(n));
        let mut members = vec![start];
        let mut in_set = vec![false; n + 1];
        in_set[start] = true;
        while members.len() < target {
            let x = members[rng.gen_range(0..members.len())];
            let nbrs: Vec<usize> = g.neighbors(x).iter().copied().filter(|&y| !in_set[y]).collect();
            if nbrs.is_empty() {
                break;
            }
            let y = nbrs[rng.gen_range(0..nbrs.len())];
            in_set[y] = true;
            members.push(y);
        }
        best = best.max(subset_density(g, &members));
    }
    best
}
