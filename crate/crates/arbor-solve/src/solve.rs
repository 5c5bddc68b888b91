use std::time::Instant;

use arbor_core::{verify_certificate, CoverCertificate, CoverMode, ForestClass, Graph};
use thiserror::Error;

use crate::bounds::{lower_bound, upper_bound};
use crate::engine::{Engine, Outcome};
use crate::request::{Budget, Objective, SearchStats, SolveRequest, SolveResult, SolveStatus};

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("decide mode needs k >= 1")]
    ZeroK,

    #[error("part counts above 63 are not supported (asked for {0})")]
    TooManyParts(usize),

    #[error("load bound on vertex {0}, which is not in the graph")]
    UnknownVertex(usize),

    #[error("load floor {floor} on vertex {vertex} exceeds k = {k}")]
    FloorAboveK {
        vertex: usize,
        floor: usize,
        k: usize,
    },
}

fn validate(req: &SolveRequest, k: usize) -> Result<(), SolveError> {
    if k > 63 {
        return Err(SolveError::TooManyParts(k));
    }
    for (&v, _) in req.load_caps.iter().chain(req.load_floors.iter()) {
        if !req.graph.has_vertex(v) {
            return Err(SolveError::UnknownVertex(v));
        }
    }
    for (&v, &f) in &req.load_floors {
        if f > k {
            return Err(SolveError::FloorAboveK {
                vertex: v,
                floor: f,
                k,
            });
        }
    }
    Ok(())
}

fn empty_graph_result(class: ForestClass, mode: CoverMode) -> SolveResult {
    SolveResult {
        status: SolveStatus::Feasible(CoverCertificate::new(class, mode, Vec::new())),
        k: Some(0),
        stats: SearchStats::default(),
    }
}

fn run_decide(req: &SolveRequest, k: usize) -> Result<SolveResult, SolveError> {
    validate(req, k)?;
    if req.graph.m() == 0 {
        return Ok(if req.load_floors.values().all(|&f| f == 0) {
            empty_graph_result(req.class, req.mode)
        } else {
            SolveResult {
                status: SolveStatus::Infeasible,
                k: None,
                stats: SearchStats::default(),
            }
        });
    }
    if k == 0 {
        return Err(SolveError::ZeroK);
    }

    let started = Instant::now();
    let mut engine = Engine::new(
        req.graph,
        req.class,
        req.mode,
        k,
        &req.load_caps,
        &req.load_floors,
        req.symmetry_breaking,
        req.budget,
    );
    let outcome = engine.search();
    let stats = SearchStats {
        nodes: engine.nodes,
        elapsed: started.elapsed(),
    };
    let status = match outcome {
        Outcome::Found => {
            let cert = engine.extract_certificate();
            debug_assert!(verify_certificate(req.graph, &cert).is_valid());
            SolveStatus::Feasible(cert)
        }
        Outcome::Exhausted => {
            debug_assert!(!engine.budget_was_hit());
            SolveStatus::Infeasible
        }
        Outcome::Budget => SolveStatus::BudgetExhausted {
            lower: k,
            upper: None,
        },
    };
    let k_out = match &status {
        SolveStatus::Feasible(cert) => Some(cert.k()),
        _ => None,
    };
    Ok(SolveResult {
        status,
        k: k_out,
        stats,
    })
}

/// Decision problem at a fixed k (the request's objective must be DecideK).
/// A budget stop is its own status, never reported as infeasible.
pub fn decide_cover(req: &SolveRequest) -> Result<SolveResult, SolveError> {
    match req.objective {
        Objective::DecideK(k) => run_decide(req, k),
        Objective::MinimizeK => min_cover(req),
    }
}

/// Iterative deepening from a sound lower bound; the first feasible k is the
/// optimum. On a budget stop, reports the proven bounds instead. Load
/// bounds can leave every k infeasible (a cap of zero, say); that comes
/// back as an exact infeasible answer.
pub fn min_cover(req: &SolveRequest) -> Result<SolveResult, SolveError> {
    if req.graph.m() == 0 {
        return run_decide(req, 0);
    }
    let hi = req.graph.m().min(63);
    let max_floor = req.load_floors.values().copied().max().unwrap_or(0);
    if max_floor > hi {
        // A vertex's load cannot exceed the part count.
        return Ok(SolveResult {
            status: SolveStatus::Infeasible,
            k: None,
            stats: SearchStats::default(),
        });
    }

    let lo = lower_bound(req.graph, req.class, req.mode, &req.known)
        .max(1)
        .max(max_floor);
    let mut nodes_total = 0u64;
    let started = Instant::now();
    // A single edge is valid for every class, so m parts suffice unless
    // load bounds rule everything out.
    for k in lo..=hi {
        let mut result = run_decide(req, k)?;
        nodes_total += result.stats.nodes;
        match result.status {
            SolveStatus::Feasible(cert) => {
                return Ok(SolveResult {
                    k: Some(cert.k()),
                    status: SolveStatus::Feasible(cert),
                    stats: SearchStats {
                        nodes: nodes_total,
                        elapsed: started.elapsed(),
                    },
                });
            }
            SolveStatus::Infeasible => continue,
            SolveStatus::BudgetExhausted { .. } => {
                result.status = SolveStatus::BudgetExhausted {
                    lower: k,
                    upper: upper_bound(req.class, req.mode, &req.known),
                };
                result.stats = SearchStats {
                    nodes: nodes_total,
                    elapsed: started.elapsed(),
                };
                return Ok(result);
            }
        }
    }
    if hi < req.graph.m() {
        // The optimum may exceed the engine's part limit; refusing beats a
        // wrong infeasibility claim.
        return Err(SolveError::TooManyParts(hi + 1));
    }
    if req.load_caps.is_empty() {
        unreachable!("a cover by single edges is always feasible");
    }
    // Any cover uses at most one nonempty part per edge, so exhausting
    // k = m settles infeasibility under load caps exactly.
    Ok(SolveResult {
        status: SolveStatus::Infeasible,
        k: None,
        stats: SearchStats {
            nodes: nodes_total,
            elapsed: started.elapsed(),
        },
    })
}

/// chi'_s(G): the smallest number of induced matchings covering E(G).
pub fn strong_chromatic_index(g: &Graph, budget: Budget) -> Result<SolveResult, SolveError> {
    let req = SolveRequest::new(g, ForestClass::InducedMatching, CoverMode::Cover)
        .with_budget(budget);
    min_cover(&req)
}
