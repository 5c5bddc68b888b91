//! Backtracking engine deciding whether E(G) has a cover or partition into
//! at most k parts of one forest class.
//!
//! Edges are processed in a fixed conflict-density order. Partition mode
//! branches over the single part of each edge. Cover mode branches over a
//! primary part per edge and adds every further membership by propagation:
//! for the induced classes an edge whose endpoints both lie in a part's
//! vertex set must belong to that part, so such memberships are applied
//! eagerly (also retroactively) instead of being branched on. Any cover can
//! be reduced to one whose extra memberships are all of this forced kind,
//! so the primary-choice search is complete. The exception is cover mode
//! with load floors, where dropping redundant memberships can lose floor
//! satisfaction; there the engine branches over part subsets per edge.
//!
//! Per-part state (component bitsets, union-find, degree counts) is updated
//! through a trail so backtracking is a pop loop.

use std::collections::VecDeque;
use std::time::Instant;

use arbor_core::bitset::VertexSet;
use arbor_core::{CoverCertificate, CoverMode, Edge, ForestClass, Graph, Inducedness};

use crate::request::Budget;

const MAX_PARTS: usize = 63;

pub(crate) struct Engine<'g> {
    g: &'g Graph,
    class: ForestClass,
    mode: CoverMode,
    k: usize,
    symmetry: bool,
    subset_mode: bool,

    order: Vec<usize>,     // edge indices in branching order
    rank: Vec<usize>,      // rank[edge_index] = depth in `order`
    depth: usize,          // edges with rank < depth are processed
    adj: Vec<VertexSet>,   // host adjacency as bitsets

    caps: Vec<usize>,      // per vertex; usize::MAX when unconstrained
    floors: Vec<usize>,    // per vertex; 0 when unconstrained
    floored: Vec<usize>,   // vertices with a floor

    // Per-part state, indexed [part].
    present: Vec<VertexSet>,
    parent: Vec<Vec<usize>>,
    comp_size: Vec<Vec<usize>>,
    comp_bits: Vec<Vec<VertexSet>>,
    deg: Vec<Vec<usize>>,
    bigdeg: Vec<Vec<usize>>, // per root: component vertices of degree >= 2

    edge_parts: Vec<u64>,
    part_edge_count: Vec<usize>,
    load: Vec<usize>,
    remaining_inc: Vec<usize>,
    required: Vec<Option<usize>>, // partition mode forcing
    parts_used: usize,

    trail: Vec<Op>,

    pub nodes: u64,
    budget: Budget,
    deadline: Instant,
    budget_hit: bool,
}

enum Op {
    AddVertex { p: usize, v: usize },
    BumpDeg { p: usize, v: usize },
    BigDeg { p: usize, r: usize },
    Merge { p: usize, big: usize, small: usize },
    AddMembership { e: usize, p: usize },
    SetRequired { e: usize, prev: Option<usize> },
    DecRemaining { v: usize },
    IncPartsUsed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found,
    Exhausted,
    Budget,
}

impl<'g> Engine<'g> {
    pub fn new(
        g: &'g Graph,
        class: ForestClass,
        mode: CoverMode,
        k: usize,
        caps_in: &std::collections::BTreeMap<usize, usize>,
        floors_in: &std::collections::BTreeMap<usize, usize>,
        symmetry: bool,
        budget: Budget,
    ) -> Engine<'g> {
        assert!(k <= MAX_PARTS);
        let n = g.n();
        let m = g.m();

        let adj: Vec<VertexSet> = (0..=n)
            .map(|v| {
                let mut s = VertexSet::with_capacity(n);
                if v >= 1 {
                    for &w in g.neighbors(v) {
                        s.insert(w);
                    }
                }
                s
            })
            .collect();

        // Conflict-dense edges first: descending triangle count, then
        // descending degree sum, ties by edge order for determinism.
        let mut order: Vec<usize> = (0..m).collect();
        let tri: Vec<usize> = g
            .edges()
            .iter()
            .map(|e| adj[e.u()].intersection_count(&adj[e.v()]))
            .collect();
        order.sort_by_key(|&i| {
            let e = g.edges()[i];
            (
                std::cmp::Reverse(tri[i]),
                std::cmp::Reverse(g.degree(e.u()) + g.degree(e.v())),
                i,
            )
        });
        let mut rank = vec![0; m];
        for (d, &i) in order.iter().enumerate() {
            rank[i] = d;
        }

        let mut caps = vec![usize::MAX; n + 1];
        for (&v, &c) in caps_in {
            caps[v] = c;
        }
        let mut floors = vec![0usize; n + 1];
        let mut floored = Vec::new();
        for (&v, &f) in floors_in {
            floors[v] = f;
            if f > 0 {
                floored.push(v);
            }
        }
        let subset_mode = mode == CoverMode::Cover && !floored.is_empty();

        let mut remaining_inc = vec![0usize; n + 1];
        for e in g.edges() {
            remaining_inc[e.u()] += 1;
            remaining_inc[e.v()] += 1;
        }

        Engine {
            g,
            class,
            mode,
            k,
            symmetry,
            subset_mode,
            order,
            rank,
            depth: 0,
            adj,
            caps,
            floors,
            floored,
            present: (0..k).map(|_| VertexSet::with_capacity(n)).collect(),
            parent: vec![vec![0; n + 1]; k],
            comp_size: vec![vec![0; n + 1]; k],
            comp_bits: (0..k)
                .map(|_| (0..=n).map(|_| VertexSet::with_capacity(n)).collect())
                .collect(),
            deg: vec![vec![0; n + 1]; k],
            bigdeg: vec![vec![0; n + 1]; k],
            edge_parts: vec![0; m],
            part_edge_count: vec![0; k],
            load: vec![0; n + 1],
            remaining_inc,
            required: vec![None; m],
            parts_used: 0,
            trail: Vec::new(),
            nodes: 0,
            budget,
            deadline: Instant::now() + std::time::Duration::from_millis(budget.max_millis),
            budget_hit: false,
        }
    }

    pub fn budget_was_hit(&self) -> bool {
        self.budget_hit
    }

    fn member(&self, e: usize, p: usize) -> bool {
        self.edge_parts[e] >> p & 1 == 1
    }

    fn find(&self, p: usize, mut x: usize) -> usize {
        while self.parent[p][x] != x {
            x = self.parent[p][x];
        }
        x
    }

    fn checkpoint(&self) -> usize {
        self.trail.len()
    }

    fn undo_to(&mut self, checkpoint: usize) {
        while self.trail.len() > checkpoint {
            match self.trail.pop().unwrap() {
                Op::AddVertex { p, v } => {
                    self.present[p].remove(v);
                    self.load[v] -= 1;
                }
                Op::BumpDeg { p, v } => self.deg[p][v] -= 1,
                Op::BigDeg { p, r } => self.bigdeg[p][r] -= 1,
                Op::Merge { p, big, small } => {
                    self.parent[p][small] = small;
                    let small_bits = self.comp_bits[p][small].clone();
                    self.comp_bits[p][big].xor_with(&small_bits);
                    self.comp_size[p][big] -= self.comp_size[p][small];
                    self.bigdeg[p][big] -= self.bigdeg[p][small];
                }
                Op::AddMembership { e, p } => {
                    self.edge_parts[e] &= !(1u64 << p);
                    self.part_edge_count[p] -= 1;
                }
                Op::SetRequired { e, prev } => self.required[e] = prev,
                Op::DecRemaining { v } => self.remaining_inc[v] += 1,
                Op::IncPartsUsed => self.parts_used -= 1,
            }
        }
    }

    fn add_vertex(&mut self, p: usize, x: usize, queue: &mut VecDeque<(usize, usize)>) -> bool {
        if self.load[x] + 1 > self.caps[x] {
            return false;
        }
        self.trail.push(Op::AddVertex { p, v: x });
        self.present[p].insert(x);
        self.load[x] += 1;
        self.parent[p][x] = x;
        self.comp_size[p][x] = 1;
        self.deg[p][x] = 0;
        self.bigdeg[p][x] = 0;
        self.comp_bits[p][x].clear();
        self.comp_bits[p][x].insert(x);

        if self.class.inducedness() == Inducedness::Whole {
            // Every host edge inside the part's vertex set must join the part.
            let mut inside = self.adj[x].clone();
            inside.intersect_with(&self.present[p]);
            for y in inside.iter() {
                let f = self
                    .g
                    .edge_index(&Edge::new(x, y))
                    .expect("host adjacency");
                if self.member(f, p) {
                    continue;
                }
                if !self.force(f, p, queue) {
                    return false;
                }
            }
        }
        true
    }

    fn force(&mut self, f: usize, p: usize, queue: &mut VecDeque<(usize, usize)>) -> bool {
        match self.mode {
            CoverMode::Cover => {
                queue.push_back((f, p));
                true
            }
            CoverMode::Partition => {
                if self.rank[f] < self.depth {
                    // Processed and not a member: its single part is elsewhere.
                    return false;
                }
                match self.required[f] {
                    Some(q) => q == p,
                    None => {
                        self.trail.push(Op::SetRequired { e: f, prev: None });
                        self.required[f] = Some(p);
                        true
                    }
                }
            }
        }
    }

    /// Adds edge `e` to part `p`, maintaining class validity incrementally.
    /// Follow-up memberships demanded by inducedness go through `queue`.
    fn apply(&mut self, e: usize, p: usize, queue: &mut VecDeque<(usize, usize)>) -> bool {
        if self.member(e, p) {
            return true;
        }
        let edge = self.g.edges()[e];
        let (u, v) = edge.endpoints();

        self.trail.push(Op::AddMembership { e, p });
        self.edge_parts[e] |= 1 << p;
        self.part_edge_count[p] += 1;

        if !self.present[p].contains(u) && !self.add_vertex(p, u, queue) {
            return false;
        }
        if !self.present[p].contains(v) && !self.add_vertex(p, v, queue) {
            return false;
        }

        if self.class.requires_matching() {
            if self.deg[p][u] > 0 || self.deg[p][v] > 0 {
                return false;
            }
        } else if self.find(p, u) == self.find(p, v) {
            return false; // closes a cycle inside the part
        }

        for x in [u, v] {
            self.deg[p][x] += 1;
            self.trail.push(Op::BumpDeg { p, v: x });
            if self.deg[p][x] == 2 {
                let r = self.find(p, x);
                self.bigdeg[p][r] += 1;
                self.trail.push(Op::BigDeg { p, r });
            }
        }

        let (ru, rv) = (self.find(p, u), self.find(p, v));
        if ru != rv {
            if self.class.inducedness() == Inducedness::PerComponent {
                // A host edge between the merging components other than the
                // one being added can never be repaired: it would both be
                // required inside the component and close a cycle.
                let (a, b) = if self.comp_size[p][ru] <= self.comp_size[p][rv] {
                    (ru, rv)
                } else {
                    (rv, ru)
                };
                let a_bits = self.comp_bits[p][a].clone();
                for x in a_bits.iter() {
                    let mut cross = self.adj[x].clone();
                    cross.intersect_with(&self.comp_bits[p][b]);
                    for y in cross.iter() {
                        let f = self
                            .g
                            .edge_index(&Edge::new(x, y))
                            .expect("host adjacency");
                        if f != e && !self.member(f, p) {
                            return false;
                        }
                    }
                }
            }
            let (big, small) = if self.comp_size[p][ru] >= self.comp_size[p][rv] {
                (ru, rv)
            } else {
                (rv, ru)
            };
            self.parent[p][small] = big;
            let small_bits = self.comp_bits[p][small].clone();
            self.comp_bits[p][big].union_with(&small_bits);
            self.comp_size[p][big] += self.comp_size[p][small];
            self.bigdeg[p][big] += self.bigdeg[p][small];
            self.trail.push(Op::Merge { p, big, small });
            if self.class.requires_star() && self.bigdeg[p][big] > 1 {
                return false;
            }
        }
        true
    }

    /// Primary assignment of `e` to `p` plus the full propagation cascade.
    fn assign(&mut self, e: usize, p: usize) -> bool {
        if p == self.parts_used {
            self.parts_used += 1;
            self.trail.push(Op::IncPartsUsed);
        }
        let mut queue = VecDeque::new();
        if !self.apply(e, p, &mut queue) {
            return false;
        }
        while let Some((f, q)) = queue.pop_front() {
            if !self.apply(f, q, &mut queue) {
                return false;
            }
        }
        true
    }

    fn floors_still_reachable(&self) -> bool {
        for &v in &self.floored {
            let gain = if self.remaining_inc[v] == 0 {
                0
            } else if self.mode == CoverMode::Cover {
                self.k - self.load[v]
            } else {
                (self.k - self.load[v]).min(self.remaining_inc[v])
            };
            if self.load[v] + gain < self.floors[v] {
                return false;
            }
        }
        true
    }

    fn floors_met(&self) -> bool {
        self.floored.iter().all(|&v| self.load[v] >= self.floors[v])
    }

    fn candidate_limit(&self) -> usize {
        if self.symmetry {
            (self.parts_used + 1).min(self.k)
        } else {
            self.k
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            self.budget_hit = true;
            return false;
        }
        if self.nodes % 4096 == 0 && Instant::now() >= self.deadline {
            self.budget_hit = true;
            return false;
        }
        true
    }

    pub fn search(&mut self) -> Outcome {
        if self.depth == self.g.m() {
            return if self.floors_met() {
                Outcome::Found
            } else {
                Outcome::Exhausted
            };
        }
        let e = self.order[self.depth];
        let edge = self.g.edges()[e];
        let cp = self.checkpoint();
        for x in [edge.u(), edge.v()] {
            self.remaining_inc[x] -= 1;
            self.trail.push(Op::DecRemaining { v: x });
        }
        self.depth += 1;

        let out = if self.subset_mode {
            self.subset_branch(e, 0)
        } else {
            self.primary_branch(e)
        };

        self.depth -= 1;
        // Keep the winning assignment in place for certificate extraction.
        if out != Outcome::Found {
            self.undo_to(cp);
        }
        out
    }

    fn descend(&mut self, e: usize) -> Outcome {
        if self.edge_parts[e] == 0 {
            return Outcome::Exhausted; // uncovered edge
        }
        if !self.floors_still_reachable() {
            return Outcome::Exhausted;
        }
        self.search()
    }

    fn primary_branch(&mut self, e: usize) -> Outcome {
        if self.mode == CoverMode::Cover && self.edge_parts[e] != 0 {
            // Already covered by forced propagation; extra primaries would
            // only re-create memberships the irredundancy reduction drops.
            return self.descend(e);
        }
        let candidates: Vec<usize> = match (self.mode, self.required[e]) {
            (CoverMode::Partition, Some(p)) => vec![p],
            _ => (0..self.candidate_limit()).collect(),
        };
        for p in candidates {
            let cp = self.checkpoint();
            if !self.tick() {
                return Outcome::Budget;
            }
            if self.assign(e, p) {
                match self.descend(e) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            self.undo_to(cp);
        }
        Outcome::Exhausted
    }

    /// Cover mode with load floors: redundant memberships can be essential
    /// for floors, so branch over part subsets (forced memberships stay).
    fn subset_branch(&mut self, e: usize, p: usize) -> Outcome {
        if p >= self.k {
            return self.descend(e);
        }
        // Exclude p. Skipping an unused part and opening a later one is
        // symmetric, so the exclude chain stops at the first fresh part.
        let excluded = if self.symmetry && p >= self.parts_used {
            self.descend(e)
        } else {
            self.subset_branch(e, p + 1)
        };
        if excluded != Outcome::Exhausted {
            return excluded;
        }
        if !self.member(e, p) {
            let cp = self.checkpoint();
            if !self.tick() {
                return Outcome::Budget;
            }
            if self.assign(e, p) {
                match self.subset_branch(e, p + 1) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            self.undo_to(cp);
        }
        Outcome::Exhausted
    }

    /// Certificate of the current (complete) assignment.
    pub fn extract_certificate(&self) -> CoverCertificate {
        let mut parts: Vec<Vec<Edge>> = vec![Vec::new(); self.k];
        for (i, &mask) in self.edge_parts.iter().enumerate() {
            for p in 0..self.k {
                if mask >> p & 1 == 1 {
                    parts[p].push(self.g.edges()[i]);
                }
            }
        }
        parts.retain(|p| !p.is_empty());
        CoverCertificate::new(self.class, self.mode, parts)
    }
}
