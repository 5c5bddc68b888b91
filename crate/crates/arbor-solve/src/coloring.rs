//! Exact chromatic parameters by iterative deepening over the color count,
//! with backtracking decides that cap fresh colors at one above the maximum
//! used so far (classic color-symmetry breaking).

use std::collections::BTreeMap;
use std::time::Instant;

use arbor_core::{
    clique_number, verify_coloring, ColoringCertificate, ColoringKind, Edge, Graph,
};

use crate::request::{Budget, SearchStats};

#[derive(Debug, Clone)]
pub enum ColoringOutcome {
    Found {
        value: usize,
        certificate: ColoringCertificate,
    },
    BudgetExhausted {
        lower: usize,
        upper: Option<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct ColoringResult {
    pub outcome: ColoringOutcome,
    pub stats: SearchStats,
}

impl ColoringResult {
    pub fn value(&self) -> Option<usize> {
        match &self.outcome {
            ColoringOutcome::Found { value, .. } => Some(*value),
            ColoringOutcome::BudgetExhausted { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&ColoringCertificate> {
        match &self.outcome {
            ColoringOutcome::Found { certificate, .. } => Some(certificate),
            ColoringOutcome::BudgetExhausted { .. } => None,
        }
    }
}

struct NodeBudget {
    nodes: u64,
    max_nodes: u64,
    deadline: Instant,
    hit: bool,
}

impl NodeBudget {
    fn new(budget: Budget) -> NodeBudget {
        NodeBudget {
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: Instant::now() + std::time::Duration::from_millis(budget.max_millis),
            hit: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes
            || (self.nodes % 4096 == 0 && Instant::now() >= self.deadline)
        {
            self.hit = true;
        }
        !self.hit
    }
}

/// DSATUR-style decide: is the (0-based) adjacency structure c-colorable?
fn decide_proper(adj: &[Vec<usize>], c: usize, budget: &mut NodeBudget) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut colors = vec![0usize; n]; // 0 = uncolored
    let mut max_used = 0usize;

    fn pick(adj: &[Vec<usize>], colors: &[usize]) -> Option<usize> {
        // Highest saturation, then highest degree, then lowest index.
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..adj.len() {
            if colors[v] != 0 {
                continue;
            }
            let sat = {
                let mut seen: Vec<usize> = adj[v]
                    .iter()
                    .map(|&w| colors[w])
                    .filter(|&c| c != 0)
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                seen.len()
            };
            let key = (sat, adj[v].len(), usize::MAX - v);
            if best.map_or(true, |(s, d, i)| key > (s, d, i)) {
                best = Some(key);
            }
        }
        best.map(|(_, _, inv)| usize::MAX - inv)
    }

    fn go(
        adj: &[Vec<usize>],
        c: usize,
        colors: &mut Vec<usize>,
        max_used: &mut usize,
        budget: &mut NodeBudget,
    ) -> bool {
        let v = match pick(adj, colors) {
            Some(v) => v,
            None => return true,
        };
        let cap = c.min(*max_used + 1);
        for col in 1..=cap {
            if adj[v].iter().any(|&w| colors[w] == col) {
                continue;
            }
            if !budget.tick() {
                return false;
            }
            colors[v] = col;
            let old_max = *max_used;
            *max_used = (*max_used).max(col);
            if go(adj, c, colors, max_used, budget) {
                return true;
            }
            *max_used = old_max;
            colors[v] = 0;
            if budget.hit {
                return false;
            }
        }
        false
    }

    if go(adj, c, &mut colors, &mut max_used, budget) {
        Some(colors)
    } else {
        None
    }
}

fn adjacency_zero_based(g: &Graph) -> Vec<Vec<usize>> {
    (1..=g.n())
        .map(|v| g.neighbors(v).iter().map(|&w| w - 1).collect())
        .collect()
}

/// chi(G) with a verified proper-vertex certificate.
pub fn chromatic_number(g: &Graph, budget: Budget) -> ColoringResult {
    let started = Instant::now();
    if g.n() == 0 {
        return found(0, ColoringCertificate::vertex(ColoringKind::ProperVertex, 0, BTreeMap::new()), started, 0);
    }
    let adj = adjacency_zero_based(g);
    let lo = if g.m() == 0 { 1 } else { clique_number(g) };
    let mut nb = NodeBudget::new(budget);
    for c in lo..=g.n() {
        if let Some(colors) = decide_proper(&adj, c, &mut nb) {
            let map: BTreeMap<usize, usize> =
                colors.iter().enumerate().map(|(v, &col)| (v + 1, col)).collect();
            let cert = ColoringCertificate::vertex(ColoringKind::ProperVertex, c, map);
            debug_assert!(verify_coloring(g, &cert).unwrap());
            return found(c, cert, started, nb.nodes);
        }
        if nb.hit {
            return exhausted(c, None, started, nb.nodes);
        }
    }
    unreachable!("n colors always suffice");
}

/// chi'(G): proper edge coloring, solved as a vertex coloring of the line graph.
pub fn edge_chromatic_number(g: &Graph, budget: Budget) -> ColoringResult {
    let started = Instant::now();
    if g.m() == 0 {
        return found(0, ColoringCertificate::edge(ColoringKind::ProperEdge, 0, BTreeMap::new()), started, 0);
    }
    let m = g.m();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n() + 1];
    for (i, e) in g.edges().iter().enumerate() {
        incident[e.u()].push(i);
        incident[e.v()].push(i);
    }
    let mut line_adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for edges in incident.iter() {
        for (a, &i) in edges.iter().enumerate() {
            for &j in &edges[a + 1..] {
                line_adj[i].push(j);
                line_adj[j].push(i);
            }
        }
    }
    for l in line_adj.iter_mut() {
        l.sort_unstable();
        l.dedup();
    }

    let lo = g.max_degree();
    let mut nb = NodeBudget::new(budget);
    for c in lo..=m {
        if let Some(colors) = decide_proper(&line_adj, c, &mut nb) {
            let map: BTreeMap<Edge, usize> = colors
                .iter()
                .enumerate()
                .map(|(i, &col)| (g.edges()[i], col))
                .collect();
            let cert = ColoringCertificate::edge(ColoringKind::ProperEdge, c, map);
            debug_assert!(verify_coloring(g, &cert).unwrap());
            return found(c, cert, started, nb.nodes);
        }
        if nb.hit {
            return exhausted(c, None, started, nb.nodes);
        }
    }
    unreachable!("m colors always suffice");
}

/// chi_acyc(G): proper coloring in which every two classes induce a forest.
/// Backtracking over a static degree-descending vertex order; a bichromatic
/// cycle among colored vertices can only persist, so pruning on the partial
/// assignment is sound.
pub fn acyclic_chromatic_number(g: &Graph, budget: Budget) -> ColoringResult {
    let started = Instant::now();
    if g.n() == 0 {
        return found(0, ColoringCertificate::vertex(ColoringKind::AcyclicVertex, 0, BTreeMap::new()), started, 0);
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let lo = if g.m() == 0 {
        1
    } else {
        // chi <= chi_acyc; reuse the proper solver for the seed.
        chromatic_number(g, budget).value().unwrap_or(2)
    };

    let mut nb = NodeBudget::new(budget);
    for c in lo..=g.n() {
        let mut colors = vec![0usize; g.n() + 1];
        if decide_acyclic(g, &order, 0, c, &mut colors, &mut 0, &mut nb) {
            let map: BTreeMap<usize, usize> =
                g.vertices().map(|v| (v, colors[v])).collect();
            let cert = ColoringCertificate::vertex(ColoringKind::AcyclicVertex, c, map);
            debug_assert!(verify_coloring(g, &cert).unwrap());
            return found(c, cert, started, nb.nodes);
        }
        if nb.hit {
            return exhausted(c, None, started, nb.nodes);
        }
    }
    unreachable!("n colors always suffice");
}

fn decide_acyclic(
    g: &Graph,
    order: &[usize],
    idx: usize,
    c: usize,
    colors: &mut Vec<usize>,
    max_used: &mut usize,
    budget: &mut NodeBudget,
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let cap = c.min(*max_used + 1);
    'colors: for col in 1..=cap {
        if g.neighbors(v).iter().any(|&w| colors[w] == col) {
            continue;
        }
        if !budget.tick() {
            return false;
        }
        colors[v] = col;
        // Only pairs containing the fresh color can become cyclic.
        let limit = (*max_used).max(col);
        for other in 1..=limit {
            if other != col && !pair_acyclic(g, colors, col, other) {
                colors[v] = 0;
                continue 'colors;
            }
        }
        let old_max = *max_used;
        *max_used = (*max_used).max(col);
        if decide_acyclic(g, order, idx + 1, c, colors, max_used, budget) {
            return true;
        }
        *max_used = old_max;
        colors[v] = 0;
        if budget.hit {
            return false;
        }
    }
    false
}

fn pair_acyclic(g: &Graph, colors: &[usize], a: usize, b: usize) -> bool {
    let members: Vec<usize> = g
        .vertices()
        .filter(|&v| colors[v] == a || colors[v] == b)
        .collect();
    let mut parent: BTreeMap<usize, usize> = members.iter().map(|&v| (v, v)).collect();
    fn find(parent: &mut BTreeMap<usize, usize>, mut x: usize) -> usize {
        while parent[&x] != x {
            let up = parent[&parent[&x]];
            parent.insert(x, up);
            x = up;
        }
        x
    }
    for &x in &members {
        for &y in g.neighbors(x) {
            if y > x && (colors[y] == a || colors[y] == b) {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx == ry {
                    return false;
                }
                parent.insert(rx, ry);
            }
        }
    }
    true
}

fn found(value: usize, certificate: ColoringCertificate, started: Instant, nodes: u64) -> ColoringResult {
    ColoringResult {
        outcome: ColoringOutcome::Found { value, certificate },
        stats: SearchStats {
            nodes,
            elapsed: started.elapsed(),
        },
    }
}

fn exhausted(lower: usize, upper: Option<usize>, started: Instant, nodes: u64) -> ColoringResult {
    ColoringResult {
        outcome: ColoringOutcome::BudgetExhausted { lower, upper },
        stats: SearchStats {
            nodes,
            elapsed: started.elapsed(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kn(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                pairs.push((u, v));
            }
        }
        Graph::from_pairs(n, &pairs).unwrap()
    }

    fn cn(n: usize) -> Graph {
        let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (v, v + 1)).collect();
        pairs.push((1, n));
        Graph::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn chromatic_basics() {
        assert_eq!(chromatic_number(&kn(4), Budget::default()).value(), Some(4));
        assert_eq!(chromatic_number(&cn(5), Budget::default()).value(), Some(3));
        assert_eq!(chromatic_number(&cn(6), Budget::default()).value(), Some(2));
    }

    #[test]
    fn edge_chromatic_of_complete_graphs() {
        // chi'(K_k) = k - 1 + (k mod 2).
        for k in 2..=6 {
            let expected = k - 1 + (k % 2);
            assert_eq!(
                edge_chromatic_number(&kn(k), Budget::default()).value(),
                Some(expected),
                "K_{k}"
            );
        }
    }

    #[test]
    fn acyclic_chromatic_values() {
        assert_eq!(
            acyclic_chromatic_number(&kn(4), Budget::default()).value(),
            Some(4)
        );
        // Two colors force the whole 4-cycle bichromatic.
        assert_eq!(
            acyclic_chromatic_number(&cn(4), Budget::default()).value(),
            Some(3)
        );
        assert_eq!(
            acyclic_chromatic_number(&cn(5), Budget::default()).value(),
            Some(3)
        );
    }

    #[test]
    fn subdivided_k4_is_bipartite() {
        // sd_1(K_4): branch vertices 1..4, one vertex on each edge.
        let k4 = kn(4);
        let mut pairs = Vec::new();
        for (i, e) in k4.edges().iter().enumerate() {
            let w = 4 + i + 1;
            pairs.push((e.u(), w));
            pairs.push((e.v(), w));
        }
        let g = Graph::from_pairs(10, &pairs).unwrap();
        assert_eq!(chromatic_number(&g, Budget::default()).value(), Some(2));
    }

    #[test]
    fn budget_exhaustion_reports_bounds() {
        let result = chromatic_number(
            &kn(6),
            Budget {
                max_nodes: 1,
                max_millis: 60_000,
            },
        );
        assert!(matches!(
            result.outcome,
            ColoringOutcome::BudgetExhausted { .. }
        ));
    }
}
