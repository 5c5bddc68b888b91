use std::collections::BTreeMap;

use arbor_core::{
    is_half_shallow_minor, verify_certificate, verify_coloring, ColoringCertificate,
    ColoringKind, CoverCertificate, ForestClass, Graph, StarDecomposition,
};

use crate::error::{ConstructError, Result};

/// A proper coloring of a 1/2-shallow minor, with the underlying
/// (host color, star-forest index set) code of every minor vertex.
#[derive(Debug, Clone)]
pub struct MinorColoring {
    pub certificate: ColoringCertificate,
    /// Per minor vertex: the host color of its star center and the bitmask
    /// (part j of the cover = bit j-1) of star forests meeting its star.
    pub codes: BTreeMap<usize, (usize, u64)>,
    /// The pigeonhole bound chi(phi) * 2^k the construction promises.
    pub color_bound: usize,
}

/// Colors a 1/2-shallow minor H of G by the pair (host color of the star
/// center, set of induced star forests meeting the star's edges). For an
/// H-edge witnessed between center i and a leaf of star j, the forest
/// holding that leaf's star edge cannot touch center i, so the index sets
/// differ; witnessed center-center edges differ in the host color.
///
/// Raw pair codes are phi(c_i) + chi * rank(A_i), with subsets ranked by
/// their characteristic vector (part 1 highest); the certificate renumbers
/// the codes that occur to 1..=c in that order.
pub fn shallow_minor_coloring(
    g: &Graph,
    dec: &StarDecomposition,
    phi: &ColoringCertificate,
    isa_cert: &CoverCertificate,
) -> Result<MinorColoring> {
    if phi.kind != ColoringKind::ProperVertex {
        return Err(ConstructError::Input(format!(
            "expected a proper-vertex coloring of the host, got {}",
            phi.kind
        )));
    }
    if !verify_coloring(g, phi)? {
        return Err(ConstructError::Input("host coloring is not proper".into()));
    }
    if isa_cert.class != ForestClass::InducedStarForest {
        return Err(ConstructError::Input(format!(
            "cover must consist of induced star forests, got {}",
            isa_cert.class
        )));
    }
    let report = verify_certificate(g, isa_cert);
    if !report.is_valid() {
        return Err(ConstructError::Input(format!(
            "star-forest cover does not verify: {}",
            report.summary()
        )));
    }
    let h = dec.minor()?;
    if !is_half_shallow_minor(g, &h, &dec.stars)? {
        return Err(ConstructError::Input(
            "decomposition does not witness the minor".into(),
        ));
    }

    let k = isa_cert.k();
    if k > 63 {
        return Err(ConstructError::Input(format!(
            "covers beyond 63 parts are not supported ({k})"
        )));
    }

    let mut codes: BTreeMap<usize, (usize, u64)> = BTreeMap::new();
    for (i, star) in dec.stars.iter().enumerate() {
        let mut mask = 0u64;
        for (j, part) in isa_cert.parts.iter().enumerate() {
            if star.edges().any(|e| part.contains(&e)) {
                // Part 1 is the highest bit: characteristic-vector order.
                mask |= 1 << (k - 1 - j);
            }
        }
        codes.insert(i + 1, (phi.vertex_colors[&star.center], mask));
    }

    let chi = phi.c;
    let raw: BTreeMap<usize, u64> = codes
        .iter()
        .map(|(&v, &(color, mask))| (v, color as u64 + chi as u64 * mask))
        .collect();
    let mut palette: Vec<u64> = raw.values().copied().collect();
    palette.sort_unstable();
    palette.dedup();
    let compact: BTreeMap<usize, usize> = raw
        .iter()
        .map(|(&v, code)| (v, palette.binary_search(code).unwrap() + 1))
        .collect();

    let certificate =
        ColoringCertificate::vertex(ColoringKind::ProperVertex, palette.len(), compact);
    if !verify_coloring(&h, &certificate)? {
        return Err(ConstructError::Input(
            "inputs do not yield a proper minor coloring; the cover or \
             decomposition violates a precondition"
                .into(),
        ));
    }
    Ok(MinorColoring {
        certificate,
        codes,
        color_bound: chi << k,
    })
}
