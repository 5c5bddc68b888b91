use std::collections::{BTreeMap, BTreeSet, VecDeque};

use arbor_core::{CoverCertificate, Edge, ForestClass, Graph, Inducedness};

use crate::error::{ConstructError, Result};

/// Splits every forest part into BFS layers taken modulo 2 or 3, turning
/// forests into star forests. Each tree is rooted at its smallest vertex id
/// and an edge's layer is the depth of its upper endpoint, so the edges of
/// one residue class form vertex-disjoint stars.
///
/// Class upgrades: plain forests give star forests, weak induced forests
/// give weak induced star forests, and induced forests give induced star
/// forests when the modulus is 3 (with modulus 2 only the per-component
/// guarantee survives).
pub fn split_layers(
    g: &Graph,
    cert: &CoverCertificate,
    modulus: usize,
) -> Result<CoverCertificate> {
    if modulus != 2 && modulus != 3 {
        return Err(ConstructError::Input(format!(
            "modulus must be 2 or 3, got {modulus}"
        )));
    }
    let out_class = match (cert.class.inducedness(), modulus) {
        (Inducedness::Whole, 3) => ForestClass::InducedStarForest,
        (Inducedness::Whole, _) | (Inducedness::PerComponent, _) => {
            ForestClass::WeakInducedStarForest
        }
        (Inducedness::None, _) => ForestClass::StarForest,
    };

    let mut out_parts = Vec::new();
    for (idx, part) in cert.parts.iter().enumerate() {
        g.check_subset(part)?;
        let layers = edge_layers(g.n(), part).ok_or_else(|| {
            ConstructError::Input(format!("part {} is not a forest", idx + 1))
        })?;
        let mut buckets: Vec<Vec<Edge>> = vec![Vec::new(); modulus];
        for (e, layer) in part.iter().zip(&layers) {
            buckets[layer % modulus].push(*e);
        }
        for bucket in buckets {
            if !bucket.is_empty() {
                out_parts.push(bucket);
            }
        }
    }
    Ok(CoverCertificate::new(out_class, cert.mode, out_parts))
}

/// BFS depth layer of each edge (the smaller endpoint depth), rooting each
/// tree at its minimum vertex. None when the edge set has a cycle.
fn edge_layers(n: usize, part: &[Edge]) -> Option<Vec<usize>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in part {
        adj.entry(e.u()).or_default().push(e.v());
        adj.entry(e.v()).or_default().push(e.u());
    }
    let mut depth = vec![usize::MAX; n + 1];
    let mut visited: BTreeSet<usize> = BTreeSet::new();
    let mut edges_seen = 0usize;
    for &root in adj.keys() {
        if visited.contains(&root) {
            continue;
        }
        depth[root] = 0;
        visited.insert(root);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in adj.get(&x).into_iter().flatten() {
                if visited.insert(y) {
                    depth[y] = depth[x] + 1;
                    edges_seen += 1;
                    queue.push_back(y);
                }
            }
        }
    }
    // A forest has exactly |V(part)| - #components tree edges.
    if edges_seen != part.len() {
        return None;
    }
    Some(
        part.iter()
            .map(|e| depth[e.u()].min(depth[e.v()]))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use arbor_core::{verify_certificate, CoverMode};

    #[test]
    fn star_rooted_at_center_stays_one_part() {
        let g = Graph::from_pairs(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let cert = CoverCertificate::new(
            ForestClass::StarForest,
            CoverMode::Partition,
            vec![g.edges().to_vec()],
        );
        let split = split_layers(&g, &cert, 2).unwrap();
        assert_eq!(split.k(), 1);
        assert_eq!(split.class, ForestClass::StarForest);
    }

    #[test]
    fn path_splits_into_two_star_forests() {
        let g = Graph::from_pairs(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let cert = CoverCertificate::new(
            ForestClass::InducedForest,
            CoverMode::Partition,
            vec![g.edges().to_vec()],
        );
        let split = split_layers(&g, &cert, 2).unwrap();
        assert_eq!(split.k(), 2);
        assert_eq!(split.class, ForestClass::WeakInducedStarForest);
        assert!(verify_certificate(&g, &split).is_valid());
    }

    #[test]
    fn part_count_bounded_by_modulus_times_input() {
        let g = Graph::from_pairs(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]).unwrap();
        let cert = CoverCertificate::new(
            ForestClass::Forest,
            CoverMode::Partition,
            vec![g.edges().to_vec()],
        );
        for modulus in [2usize, 3] {
            let split = split_layers(&g, &cert, modulus).unwrap();
            assert!(split.k() <= modulus * cert.k());
            // Union is preserved edge for edge.
            let mut edges: Vec<Edge> = split.parts.iter().flatten().copied().collect();
            edges.sort();
            assert_eq!(edges, g.edges());
            assert!(verify_certificate(&g, &split).is_valid());
        }
    }

    #[test]
    fn cycle_part_is_an_input_error() {
        let g = Graph::from_pairs(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let cert = CoverCertificate::new(
            ForestClass::Forest,
            CoverMode::Partition,
            vec![g.edges().to_vec()],
        );
        assert!(split_layers(&g, &cert, 2).is_err());
    }

    #[test]
    fn induced_input_with_modulus_three_gives_induced_stars() {
        // K_{3,4} induced-star cover: one star per left vertex.
        let mut pairs = Vec::new();
        for u in 1..=3 {
            for v in 4..=7 {
                pairs.push((u, v));
            }
        }
        let g = Graph::from_pairs(7, &pairs).unwrap();
        let parts: Vec<Vec<Edge>> = (1..=3)
            .map(|u| (4..=7).map(|v| Edge::new(u, v)).collect())
            .collect();
        let cert = CoverCertificate::new(ForestClass::InducedForest, CoverMode::Cover, parts);
        let split = split_layers(&g, &cert, 3).unwrap();
        assert_eq!(split.class, ForestClass::InducedStarForest);
        assert!(split.k() <= 9);
        assert!(verify_certificate(&g, &split).is_valid());
    }
}
