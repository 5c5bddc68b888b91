//! Brute-force family-enumeration oracle used by the acceptance suite.
//! Independent of the solver: enumerates every class-valid edge subset and
//! runs a covering (or exact partition) dynamic program over edge masks.

use arbor_core::{validate_edge_set, CoverMode, Edge, ForestClass, Graph};

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            out.push((u, v));
        }
    }
    out
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = all_pairs(n);
    let edges: Vec<Edge> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &(u, v))| Edge::new(u, v))
        .collect();
    Graph::new(n, edges).unwrap()
}

fn canonical_mask(n: usize, mask: u64) -> u64 {
    let pairs = all_pairs(n);
    let index_of = |u: usize, v: usize| -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut relabeled = 0u64;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                relabeled |= 1 << index_of(p[u - 1], p[v - 1]);
            }
        }
        best = best.min(relabeled);
    });
    best
}

fn permute(items: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        f(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, f);
        items.swap(at, i);
    }
}

/// One representative per isomorphism class of n-vertex graphs.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let bits = all_pairs(n).len();
    let mut out = Vec::new();
    for mask in 0..(1u64 << bits) {
        if canonical_mask(n, mask) == mask {
            out.push(graph_from_mask(n, mask));
        }
    }
    out
}

/// Exact minimum family size covering (or partitioning) E(G) with
/// class-valid subsets, by DP over edge masks.
pub fn oracle_min_family(g: &Graph, class: ForestClass, mode: CoverMode) -> usize {
    let m = g.m();
    if m == 0 {
        return 0;
    }
    assert!(m <= 20, "oracle is for tiny graphs");
    let mut sets = Vec::new();
    for mask in 1u64..(1 << m) {
        let subset: Vec<Edge> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        if validate_edge_set(g, &subset, class).unwrap() {
            sets.push(mask);
        }
    }
    let full = (1u64 << m) - 1;
    let mut memo = vec![u32::MAX; 1 << m];
    memo[0] = 0;
    for mask in 1u64..=full {
        let low = mask.trailing_zeros();
        let mut best = u32::MAX;
        for &s in &sets {
            if s >> low & 1 == 0 {
                continue;
            }
            let rest = match mode {
                CoverMode::Cover => mask & !s,
                CoverMode::Partition => {
                    if s & !mask != 0 {
                        continue;
                    }
                    mask ^ s
                }
            };
            if memo[rest as usize] != u32::MAX {
                best = best.min(memo[rest as usize] + 1);
            }
        }
        memo[mask as usize] = best;
    }
    memo[full as usize] as usize
}
