//! Acceptance gate: every gating row must pass. Each test prints one
//! pass/fail line; the same rows back the `arbor reproduce` subcommand.

use arbor_cli::accept;

fn gate(id: &str, result: Result<String, String>) {
    match result {
        Ok(note) => println!("pass  {id}: {note}"),
        Err(note) => {
            println!("FAIL  {id}: {note}");
            panic!("{id}: {note}");
        }
    }
}

#[test]
fn criterion_complete_closed_forms() {
    gate("complete-closed-forms", accept::complete_closed_forms());
}

#[test]
fn criterion_cover_vs_partition() {
    gate("cover-vs-partition", accept::cover_vs_partition_gadget());
}

#[test]
fn criterion_bipartite_star_covers() {
    gate("bipartite-star-covers", accept::bipartite_star_covers());
}

#[test]
fn criterion_double_wheel_lower_bound() {
    gate("double-wheel-lower-bound", accept::double_wheel_lower_bound());
}

#[test]
fn criterion_degenerate_star_covers() {
    gate("degenerate-star-covers", accept::degenerate_star_covers(1));
}

#[test]
fn criterion_acyclic_cover_counts() {
    gate("acyclic-cover-counts", accept::acyclic_cover_counts());
}

#[test]
fn criterion_acyclic_edge_bound() {
    gate("acyclic-edge-bound", accept::acyclic_edge_bound());
}

#[test]
fn criterion_gk_structure() {
    gate("gk-structure", accept::gk_structure());
}

#[test]
fn criterion_oracle_equivalence() {
    gate("oracle-equivalence", accept::oracle_equivalence());
}

#[test]
fn criterion_inequality_chain() {
    gate("inequality-chain", accept::inequality_chain_on_corpus());
}

#[test]
fn criterion_minor_coloring_pipeline() {
    gate("minor-coloring-pipeline", accept::minor_coloring_pipeline());
}

#[test]
fn criterion_ten_vertex_tree_witness() {
    gate("ten-vertex-tree-witness", accept::ten_vertex_tree_witness());
}

/// Extended, non-gating (matches `reproduce --extended`): run only when
/// ARBOR_EXTENDED is set, so the default gate stays within its time budget.
#[test]
fn extended_double_wheel_hub_floor() {
    if std::env::var("ARBOR_EXTENDED").is_err() {
        println!("skip  double-wheel-hub-floor: set ARBOR_EXTENDED=1 to run");
        return;
    }
    gate("double-wheel-hub-floor", accept::double_wheel_hub_floor());
}
