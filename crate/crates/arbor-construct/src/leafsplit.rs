use std::collections::BTreeMap;

use arbor_core::{
    validate_edge_set, verify_coloring, ColoringCertificate, ColoringKind, CoverCertificate,
    Edge, ForestClass, Graph,
};

use crate::acyclic::LabeledCover;
use crate::error::{ConstructError, Result};

/// Splits each star forest by the color of the leaf endpoint: the part
/// (i, j) holds the edges of star forest i whose leaf is colored j. The
/// leaves of one star share a color, hence are pairwise nonadjacent, so
/// every part is a weak induced star forest. Fed optimal star covers and
/// colorings this realizes the wia <= sa * chi pipeline.
pub fn leaf_color_split(
    g: &Graph,
    stars: &CoverCertificate,
    col: &ColoringCertificate,
) -> Result<LabeledCover> {
    if col.kind != ColoringKind::ProperVertex {
        return Err(ConstructError::Input(format!(
            "expected a proper-vertex coloring, got {}",
            col.kind
        )));
    }
    if !verify_coloring(g, col)? {
        return Err(ConstructError::Input("coloring is not proper".into()));
    }

    let mut parts = Vec::new();
    let mut labels = Vec::new();
    for (i, part) in stars.parts.iter().enumerate() {
        let centers = star_centers(g, part).map_err(|reason| {
            ConstructError::Input(format!(
                "part {} has no center designation: {reason}",
                i + 1
            ))
        })?;
        let mut by_color: BTreeMap<usize, Vec<Edge>> = BTreeMap::new();
        for e in part {
            let center = centers[&e];
            let leaf = e.other(center);
            by_color.entry(col.vertex_colors[&leaf]).or_default().push(*e);
        }
        for (j, bucket) in by_color {
            parts.push(bucket);
            labels.push((i + 1, j));
        }
    }
    Ok(LabeledCover {
        certificate: CoverCertificate::new(
            ForestClass::WeakInducedStarForest,
            stars.mode,
            parts,
        ),
        labels,
    })
}

/// Center of every edge's star: the unique vertex of degree >= 2 in its
/// component, or the smaller endpoint for a 2-vertex star. Errors when the
/// part is not a star forest.
fn star_centers(g: &Graph, part: &[Edge]) -> std::result::Result<BTreeMap<Edge, usize>, String> {
    match validate_edge_set(g, part, ForestClass::StarForest) {
        Ok(true) => {}
        Ok(false) => return Err("not a star forest".into()),
        Err(e) => return Err(e.to_string()),
    }
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    for e in part {
        *deg.entry(e.u()).or_default() += 1;
        *deg.entry(e.v()).or_default() += 1;
    }
    Ok(part
        .iter()
        .map(|e| {
            let center = if deg[&e.u()] >= 2 {
                e.u()
            } else if deg[&e.v()] >= 2 {
                e.v()
            } else {
                e.u() // 2-vertex star: smaller id is the center
            };
            (*e, center)
        })
        .collect())
}
