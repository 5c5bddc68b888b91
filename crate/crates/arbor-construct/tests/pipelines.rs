//! End-to-end pipelines feeding exact-solver outputs into the constructive
//! builders, checking the promised part counts and re-verifying everything.

use arbor_core::{
    verify_certificate, verify_coloring, CoverMode, Edge, ForestClass, Graph, Star,
    StarDecomposition,
};
use arbor_construct::{
    acyclic_matching_cover, acyclic_pairs_cover, check_prefix_invariants, degeneracy_star_cover,
    leaf_color_split, shallow_minor_coloring, split_layers,
};
use arbor_gen::{complete, random_degenerate, subdivide_once};
use arbor_solve::{
    acyclic_chromatic_number, chromatic_number, min_cover, Budget, SolveRequest,
};

/// Minor-coloring pipeline: color K_4 as a 1/2-shallow minor of its subdivision.
#[test]
fn shallow_minor_coloring_of_k4_inside_its_subdivision() {
    let k4 = complete(4).unwrap();
    let sd = subdivide_once(&k4);
    let host = &sd.graph;

    // Canonical decomposition: star i = branch vertex i plus the
    // subdivision vertices of its edges toward larger branch vertices.
    let stars: Vec<Star> = (1..=4)
        .map(|i| Star {
            center: i,
            leaves: (i + 1..=4)
                .map(|j| sd.edge_vertex[&Edge::new(i, j)])
                .collect(),
        })
        .collect();
    let dec = StarDecomposition {
        stars,
        minor_edges: k4.edges().to_vec(),
    };

    let phi = chromatic_number(host, Budget::default());
    let phi_cert = phi.certificate().unwrap();
    assert_eq!(phi.value(), Some(2)); // subdivisions are bipartite

    let isa = min_cover(&SolveRequest::new(
        host,
        ForestClass::InducedStarForest,
        CoverMode::Cover,
    ))
    .unwrap();
    let isa_cert = isa.certificate().unwrap();

    let out = shallow_minor_coloring(host, &dec, phi_cert, isa_cert).unwrap();
    assert!(verify_coloring(&k4, &out.certificate).unwrap());
    assert!(out.certificate.c <= phi_cert.c * (1 << isa_cert.k()));
    assert_eq!(out.color_bound, phi_cert.c << isa_cert.k());
    // Adjacent minor vertices got different codes; spelled out directly.
    for e in k4.edges() {
        assert_ne!(out.codes[&e.u()], out.codes[&e.v()]);
    }
}

/// K_4: optimal forest cover -> layer split -> leaf split stays within
/// sa * chi <= 4 a^2 weak induced star forests.
#[test]
fn leaf_split_pipeline_respects_quadratic_bound() {
    let g = complete(4).unwrap();

    let forests = min_cover(&SolveRequest::new(&g, ForestClass::Forest, CoverMode::Partition))
        .unwrap();
    let forest_cert = forests.certificate().unwrap();
    let a = forest_cert.k();
    assert_eq!(a, 2);

    let stars = split_layers(&g, forest_cert, 2).unwrap();
    assert!(stars.k() <= 2 * a);
    assert!(verify_certificate(&g, &stars).is_valid());

    let chi = chromatic_number(&g, Budget::default());
    let chi_cert = chi.certificate().unwrap();

    let split = leaf_color_split(&g, &stars, chi_cert).unwrap();
    assert!(split.certificate.k() <= stars.k() * chi_cert.c);
    let report = verify_certificate(&g, &split.certificate);
    assert!(report.is_valid(), "{}", report.summary());
}

/// Degeneracy star covers on sampled graphs (the acceptance suite runs 100).
#[test]
fn degeneracy_star_cover_on_sampled_degenerate_graphs() {
    for (d, seed) in [(2usize, 1u64), (2, 2), (3, 3), (3, 4)] {
        let g = random_degenerate(50, d, seed).unwrap();
        let (col, cert) = degeneracy_star_cover(&g);
        assert!(cert.k() <= 2 * d, "d={d} seed={seed}: {} parts", cert.k());
        let report = verify_certificate(&g, &cert);
        assert!(report.is_valid(), "{}", report.summary());
        let covered: usize = cert.parts.iter().map(Vec::len).sum();
        assert_eq!(covered, g.m(), "partition must be exact");
        check_prefix_invariants(&g, &col).unwrap();
    }
}

/// An 18-vertex planar graph: the pair cover stays within the planar
/// budget of ten induced forests.
#[test]
fn planar_grid_pair_cover_within_ten() {
    let id = |r: usize, c: usize| r * 6 + c + 1;
    let mut pairs = Vec::new();
    for r in 0..3 {
        for c in 0..6 {
            if c < 5 {
                pairs.push((id(r, c), id(r, c + 1)));
            }
            if r < 2 {
                pairs.push((id(r, c), id(r + 1, c)));
            }
            if r < 2 && c < 5 {
                pairs.push((id(r, c + 1), id(r + 1, c)));
            }
        }
    }
    let g = Graph::from_pairs(18, &pairs).unwrap();
    let acyc = acyclic_chromatic_number(&g, Budget::default());
    let col = acyc.certificate().unwrap();
    assert!(col.c <= 5);
    let cover = acyclic_pairs_cover(&g, col).unwrap();
    assert!(cover.certificate.k() <= 10);
    assert!(verify_certificate(&g, &cover.certificate).is_valid());
}

/// The octahedron is planar with acyclic chromatic number 5; its matching
/// cover lands on exactly chi'(K_5) = 5 verified weak induced forests.
#[test]
fn octahedron_matching_cover_has_five_parts() {
    let pairs: Vec<(usize, usize)> = (1..=6)
        .flat_map(|u| ((u + 1)..=6).map(move |v| (u, v)))
        .filter(|&(u, v)| u + 3 != v)
        .collect();
    let g = Graph::from_pairs(6, &pairs).unwrap();
    let acyc = acyclic_chromatic_number(&g, Budget::default());
    let col = acyc.certificate().unwrap();
    assert_eq!(col.c, 5);
    let cover = acyclic_matching_cover(&g, col).unwrap();
    assert_eq!(cover.certificate.k(), 5);
    assert!(verify_certificate(&g, &cover.certificate).is_valid());
}

/// Pair and matching covers built from solver-computed acyclic colorings.
#[test]
fn acyclic_covers_from_solver_colorings() {
    let graphs: Vec<Graph> = vec![
        complete(4).unwrap(),
        complete(5).unwrap(),
        Graph::from_pairs(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap(), // C_5
        Graph::from_pairs(6, &[(1, 2), (1, 3), (2, 4), (2, 5), (3, 6)]).unwrap(), // a tree
    ];
    for g in &graphs {
        let acyc = acyclic_chromatic_number(g, Budget::default());
        let col = acyc.certificate().unwrap();
        let k = col.c;

        let pairs = acyclic_pairs_cover(g, col).unwrap();
        assert!(pairs.certificate.k() <= k * (k - 1) / 2);
        assert!(verify_certificate(g, &pairs.certificate).is_valid());

        let matchings = acyclic_matching_cover(g, col).unwrap();
        assert!(matchings.certificate.k() <= k - 1 + (k % 2));
        assert!(verify_certificate(g, &matchings.certificate).is_valid());
    }
}
