use std::collections::{BTreeMap, BTreeSet};

use arbor_core::{
    degeneracy, validate_edge_set, CoverCertificate, CoverMode, Edge, ForestClass, Graph,
    OrderingCertificate,
};

use crate::error::{ConstructError, Result};

/// Edge coloring in colors 1..=2d over a degeneracy ordering, together with
/// the reserved color sets S(v) that drive the construction. Every color
/// class is a weak induced star forest of right stars (centers precede
/// leaves in the ordering).
#[derive(Debug, Clone)]
pub struct DegeneracyColoring {
    pub ordering: OrderingCertificate,
    pub edge_colors: BTreeMap<Edge, usize>,
    pub reserved: BTreeMap<usize, BTreeSet<usize>>,
}

/// Partitions E(G) into at most 2 * degeneracy(G) weak induced star
/// forests, processing vertices along a degeneracy ordering: each new
/// vertex colors its left-going edges from the reserved sets of the left
/// endpoints, avoiding colors those endpoints already spent on edges toward
/// other neighbors of the new vertex.
pub fn degeneracy_star_cover(g: &Graph) -> (DegeneracyColoring, CoverCertificate) {
    let ordering = degeneracy(g);
    let d = ordering.d;
    let pos = ordering.positions(g.n());

    let mut edge_colors: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut reserved: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();

    for &v in &ordering.order {
        // Left neighbors in ordering position, ascending.
        let mut left: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .collect();
        left.sort_by_key(|&w| pos[w]);
        let t = left.len();
        debug_assert!(t <= d);

        let mut picked: BTreeSet<usize> = BTreeSet::new();
        for (j, &w) in left.iter().enumerate() {
            // S'(w_j): reserved colors of w_j minus the colors w_j already
            // spent on its edges to the later left-neighbors of v.
            let mut avail = reserved[&w].clone();
            for &w_later in &left[j + 1..] {
                if g.has_edge(w, w_later) {
                    if let Some(&c) = edge_colors.get(&Edge::new(w, w_later)) {
                        avail.remove(&c);
                    }
                }
            }
            let color = avail
                .iter()
                .copied()
                .find(|c| !picked.contains(c))
                .expect("the reserved sets leave at least j colors free");
            picked.insert(color);
            edge_colors.insert(Edge::new(v, w), color);
        }

        let s: BTreeSet<usize> = (1..=2 * d)
            .filter(|c| !picked.contains(c))
            .take(d)
            .collect();
        debug_assert_eq!(s.len(), d);
        reserved.insert(v, s);
    }

    let mut parts: Vec<Vec<Edge>> = vec![Vec::new(); 2 * d];
    for (&e, &c) in &edge_colors {
        parts[c - 1].push(e);
    }
    parts.retain(|p| !p.is_empty());
    let cert = CoverCertificate::new(
        ForestClass::WeakInducedStarForest,
        CoverMode::Partition,
        parts,
    );
    (
        DegeneracyColoring {
            ordering,
            edge_colors,
            reserved,
        },
        cert,
    )
}

/// Test-mode invariant check: runs the construction's guarantees on every
/// prefix of the ordering — reserved set sizes, reserved sets avoiding the
/// left-edge colors, and every color class being a weak induced star forest
/// of right stars inside the prefix-induced subgraph.
pub fn check_prefix_invariants(g: &Graph, col: &DegeneracyColoring) -> Result<()> {
    let d = col.ordering.d;
    let pos = col.ordering.positions(g.n());

    for &v in &col.ordering.order {
        let s = col
            .reserved
            .get(&v)
            .ok_or_else(|| ConstructError::Input(format!("no reserved set for {v}")))?;
        if s.len() != d {
            return Err(ConstructError::Input(format!(
                "|S({v})| = {} but degeneracy is {d}",
                s.len()
            )));
        }
        for &w in g.neighbors(v) {
            if pos[w] < pos[v] {
                let c = col.edge_colors[&Edge::new(v, w)];
                if s.contains(&c) {
                    return Err(ConstructError::Input(format!(
                        "S({v}) contains color {c} of left edge {v}-{w}"
                    )));
                }
            }
        }
    }

    for prefix_len in 1..=col.ordering.order.len() {
        let prefix: BTreeSet<usize> =
            col.ordering.order[..prefix_len].iter().copied().collect();
        let mut classes: BTreeMap<usize, Vec<Edge>> = BTreeMap::new();
        for (&e, &c) in &col.edge_colors {
            if prefix.contains(&e.u()) && prefix.contains(&e.v()) {
                classes.entry(c).or_default().push(e);
            }
        }
        for (c, class) in classes {
            if !validate_edge_set(g, &class, ForestClass::WeakInducedStarForest)? {
                return Err(ConstructError::Input(format!(
                    "color {c} is not a weak induced star forest on prefix {prefix_len}"
                )));
            }
            if !stars_point_right(&class, &pos) {
                return Err(ConstructError::Input(format!(
                    "color {c} has a star whose center is not leftmost (prefix {prefix_len})"
                )));
            }
        }
    }
    Ok(())
}

/// Every component of a star class must have its center (the unique vertex
/// meeting all edges) before its leaves in the ordering.
fn stars_point_right(class: &[Edge], pos: &[usize]) -> bool {
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    for e in class {
        *deg.entry(e.u()).or_default() += 1;
        *deg.entry(e.v()).or_default() += 1;
    }
    class.iter().all(|e| {
        let (u, v) = e.endpoints();
        let center = if deg[&u] >= 2 {
            u
        } else if deg[&v] >= 2 {
            v
        } else if pos[u] < pos[v] {
            u
        } else {
            v
        };
        pos[center] <= pos[u] && pos[center] <= pos[v]
    })
}
