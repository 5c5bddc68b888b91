use std::collections::BTreeMap;
use std::time::Duration;

use arbor_core::{CoverCertificate, CoverMode, ForestClass, Graph};

use crate::chain::ArborParam;

/// Search limits for one decide call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_millis: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_nodes: 10_000_000,
            max_millis: 60_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    MinimizeK,
    DecideK(usize),
}

/// One exact cover/partition question: can E(G) be covered (or partitioned)
/// by at most k parts of the given class, optionally with per-vertex bounds
/// on the number of parts whose vertex set contains the vertex.
#[derive(Debug, Clone)]
pub struct SolveRequest<'g> {
    pub graph: &'g Graph,
    pub class: ForestClass,
    pub mode: CoverMode,
    pub objective: Objective,
    pub load_caps: BTreeMap<usize, usize>,
    pub load_floors: BTreeMap<usize, usize>,
    pub budget: Budget,
    /// Disable only in tests; optima are unchanged either way.
    pub symmetry_breaking: bool,
    /// Already-computed parameters of the same graph, used to seed the
    /// minimize loop's lower bound through the standard inequality chain.
    pub known: BTreeMap<ArborParam, usize>,
}

impl<'g> SolveRequest<'g> {
    pub fn new(graph: &'g Graph, class: ForestClass, mode: CoverMode) -> SolveRequest<'g> {
        SolveRequest {
            graph,
            class,
            mode,
            objective: Objective::MinimizeK,
            load_caps: BTreeMap::new(),
            load_floors: BTreeMap::new(),
            budget: Budget::default(),
            symmetry_breaking: true,
            known: BTreeMap::new(),
        }
    }

    pub fn decide(mut self, k: usize) -> Self {
        self.objective = Objective::DecideK(k);
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_load_cap(mut self, vertex: usize, cap: usize) -> Self {
        self.load_caps.insert(vertex, cap);
        self
    }

    pub fn with_load_floor(mut self, vertex: usize, floor: usize) -> Self {
        self.load_floors.insert(vertex, floor);
        self
    }

    pub fn with_known(mut self, param: ArborParam, value: usize) -> Self {
        self.known.insert(param, value);
        self
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub enum SolveStatus {
    Feasible(CoverCertificate),
    /// The full search space was exhausted; never reported on budget stops.
    Infeasible,
    BudgetExhausted {
        /// Values up to `lower - 1` are proven infeasible.
        lower: usize,
        upper: Option<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Certificate part count for feasible answers; the optimum when minimizing.
    pub k: Option<usize>,
    pub stats: SearchStats,
}

impl SolveResult {
    pub fn certificate(&self) -> Option<&CoverCertificate> {
        match &self.status {
            SolveStatus::Feasible(cert) => Some(cert),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self.status, SolveStatus::Feasible(_))
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self.status, SolveStatus::Infeasible)
    }

    pub fn is_budget_exhausted(&self) -> bool {
        matches!(self.status, SolveStatus::BudgetExhausted { .. })
    }
}
