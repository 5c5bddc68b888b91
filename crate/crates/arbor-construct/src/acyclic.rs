use arbor_core::{
    verify_coloring, ColoringCertificate, ColoringKind, CoverCertificate, CoverMode, Edge,
    ForestClass, Graph,
};

use crate::error::{ConstructError, Result};

fn checked_acyclic(g: &Graph, col: &ColoringCertificate) -> Result<()> {
    if col.kind != ColoringKind::AcyclicVertex {
        return Err(ConstructError::Input(format!(
            "expected an acyclic-vertex coloring, got {}",
            col.kind
        )));
    }
    if !verify_coloring(g, col)? {
        return Err(ConstructError::Input(
            "coloring is not acyclic on this graph".into(),
        ));
    }
    Ok(())
}

/// A cover certificate whose parts are labeled by the color pairs (or
/// matching rounds) that produced them.
#[derive(Debug, Clone)]
pub struct LabeledCover {
    pub certificate: CoverCertificate,
    pub labels: Vec<(usize, usize)>,
}

/// One induced forest per unordered pair of color classes of an acyclic
/// coloring; the pair property makes every part an induced forest. Pairs
/// with no edges are dropped, so with all pairs populated the certificate
/// has exactly C(k,2) parts.
pub fn acyclic_pairs_cover(g: &Graph, col: &ColoringCertificate) -> Result<LabeledCover> {
    checked_acyclic(g, col)?;
    let k = col.c;
    let mut parts: Vec<Vec<Edge>> = Vec::new();
    let mut labels = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            let part: Vec<Edge> = g
                .edges()
                .iter()
                .copied()
                .filter(|e| {
                    let (a, b) = (col.vertex_colors[&e.u()], col.vertex_colors[&e.v()]);
                    (a.min(b), a.max(b)) == (i, j)
                })
                .collect();
            if !part.is_empty() {
                parts.push(part);
                labels.push((i, j));
            }
        }
    }
    Ok(LabeledCover {
        certificate: CoverCertificate::new(ForestClass::InducedForest, CoverMode::Partition, parts),
        labels,
    })
}

/// Groups the color pairs of an acyclic coloring by a proper edge coloring
/// of K_k (round robin), giving k - 1 + (k mod 2) weak induced forests:
/// the pairs of one round are disjoint, so components stay within pairs.
pub fn acyclic_matching_cover(g: &Graph, col: &ColoringCertificate) -> Result<LabeledCover> {
    checked_acyclic(g, col)?;
    let k = col.c;
    if k < 2 {
        // No pair of classes; the edge set is empty.
        return Ok(LabeledCover {
            certificate: CoverCertificate::new(
                ForestClass::WeakInducedForest,
                CoverMode::Partition,
                Vec::new(),
            ),
            labels: Vec::new(),
        });
    }
    let rounds = round_robin_matchings(k)?;
    let mut parts = Vec::new();
    let mut labels = Vec::new();
    for (r, matching) in rounds.iter().enumerate() {
        let part: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| {
                let (a, b) = (col.vertex_colors[&e.u()], col.vertex_colors[&e.v()]);
                matching.contains(&(a.min(b), a.max(b)))
            })
            .collect();
        if !part.is_empty() {
            parts.push(part);
            labels.push((r + 1, 0));
        }
    }
    Ok(LabeledCover {
        certificate: CoverCertificate::new(
            ForestClass::WeakInducedForest,
            CoverMode::Partition,
            parts,
        ),
        labels,
    })
}

/// 1-factorization-style partition of E(K_k) into chi'(K_k) = k-1+(k mod 2)
/// matchings by the circle method; odd k adds a dummy vertex, so each
/// vertex idles once.
pub fn round_robin_matchings(k: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if k < 2 {
        return Err(ConstructError::Input(
            "round_robin_matchings(k) needs k >= 2".into(),
        ));
    }
    let nn = if k % 2 == 0 { k } else { k + 1 };
    let mut rounds = Vec::with_capacity(nn - 1);
    for r in 0..nn - 1 {
        let mut matching = Vec::new();
        let fixed_partner = r + 1;
        if fixed_partner <= k {
            // nn is the fixed hub; it is the dummy when k is odd.
            if nn <= k {
                matching.push((fixed_partner.min(nn), fixed_partner.max(nn)));
            }
        }
        for i in 1..nn / 2 {
            let a = (r + i) % (nn - 1) + 1;
            let b = (r + nn - 1 - i) % (nn - 1) + 1;
            if a <= k && b <= k {
                matching.push((a.min(b), a.max(b)));
            }
        }
        matching.sort();
        rounds.push(matching);
    }
    Ok(rounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    use arbor_core::verify_certificate;

    fn kn(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                pairs.push((u, v));
            }
        }
        Graph::from_pairs(n, &pairs).unwrap()
    }

    fn singleton_coloring(n: usize) -> ColoringCertificate {
        ColoringCertificate::vertex(
            ColoringKind::AcyclicVertex,
            n,
            (1..=n).map(|v| (v, v)).collect(),
        )
    }

    #[test]
    fn round_robin_partitions_complete_graphs() {
        for k in 2..=9 {
            let rounds = round_robin_matchings(k).unwrap();
            assert_eq!(rounds.len(), k - 1 + (k % 2), "k = {k}");
            let mut seen = BTreeSet::new();
            for matching in &rounds {
                let mut touched = BTreeSet::new();
                for &(a, b) in matching {
                    assert!(a < b && b <= k);
                    assert!(touched.insert(a) && touched.insert(b), "k={k}: not a matching");
                    assert!(seen.insert((a, b)), "k={k}: pair repeated");
                }
            }
            assert_eq!(seen.len(), k * (k - 1) / 2, "k = {k}: not a partition");
        }
    }

    #[test]
    fn round_robin_small_shapes() {
        assert_eq!(round_robin_matchings(4).unwrap().iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 2, 2]);
        assert_eq!(round_robin_matchings(5).unwrap().iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 2, 2, 2, 2]);
        assert_eq!(round_robin_matchings(3).unwrap().iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1, 1]);
    }

    #[test]
    fn k4_singletons_give_six_single_edges() {
        let g = kn(4);
        let cover = acyclic_pairs_cover(&g, &singleton_coloring(4)).unwrap();
        assert_eq!(cover.certificate.k(), 6);
        assert!(cover.certificate.parts.iter().all(|p| p.len() == 1));
        assert!(verify_certificate(&g, &cover.certificate).is_valid());
    }

    #[test]
    fn tree_with_two_classes_is_one_part() {
        let g = Graph::from_pairs(5, &[(1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        let col = ColoringCertificate::vertex(
            ColoringKind::AcyclicVertex,
            2,
            [(1, 1), (2, 2), (3, 1), (4, 2), (5, 2)].into(),
        );
        let pairs = acyclic_pairs_cover(&g, &col).unwrap();
        assert_eq!(pairs.certificate.k(), 1);
        let matchings = acyclic_matching_cover(&g, &col).unwrap();
        assert_eq!(matchings.certificate.k(), 1);
    }

    #[test]
    fn k4_matching_cover_has_three_parts() {
        let g = kn(4);
        let cover = acyclic_matching_cover(&g, &singleton_coloring(4)).unwrap();
        assert_eq!(cover.certificate.k(), 3);
        let report = verify_certificate(&g, &cover.certificate);
        assert!(report.is_valid(), "{}", report.summary());
    }

    #[test]
    fn k5_matching_cover_has_five_parts() {
        let g = kn(5);
        let cover = acyclic_matching_cover(&g, &singleton_coloring(5)).unwrap();
        assert_eq!(cover.certificate.k(), 5);
        assert!(verify_certificate(&g, &cover.certificate).is_valid());
    }

    #[test]
    fn non_acyclic_coloring_rejected() {
        let g = Graph::from_pairs(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let col = ColoringCertificate::vertex(
            ColoringKind::AcyclicVertex,
            2,
            [(1, 1), (2, 2), (3, 1), (4, 2)].into(),
        );
        assert!(acyclic_pairs_cover(&g, &col).is_err());
        assert!(acyclic_matching_cover(&g, &col).is_err());
    }
}
