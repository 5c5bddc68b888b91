use arbor_core::Graph;

use crate::basic;
use crate::degenerate::degenerate_lb_graph;
use crate::error::Result;
use crate::gadget::prop2_gadget;
use crate::gk::gk;
use crate::random::{random_degenerate, random_interval};
use crate::wheels::{double_wheel, planar_ia_gadget};

/// A named family plus its integer parameters; `build` validates ranges and
/// returns the graph with optional role annotations for the sidecar file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Cycle { n: usize },
    Path { n: usize },
    PathPower { n: usize, p: usize },
    DoubleWheel { l: usize },
    Gk { k: usize },
    Prop2Gadget { k: usize },
    PlanarIaGadget,
    DegenerateLb { d: usize, n_override: Option<usize> },
    RandomDegenerate { n: usize, d: usize, seed: u64 },
    RandomInterval { n: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct GeneratedGraph {
    pub graph: Graph,
    pub roles: Vec<(usize, String)>,
    /// Human-readable notes (marked edges, truncation flags).
    pub notes: Vec<String>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<GeneratedGraph> {
        let plain = |graph: Graph| GeneratedGraph {
            graph,
            roles: Vec::new(),
            notes: Vec::new(),
        };
        Ok(match *self {
            FamilySpec::Complete { n } => plain(basic::complete(n)?),
            FamilySpec::CompleteBipartite { m, n } => {
                let graph = basic::complete_bipartite(m, n)?;
                let mut roles: Vec<(usize, String)> =
                    (1..=m).map(|v| (v, "left".to_string())).collect();
                roles.extend((m + 1..=m + n).map(|v| (v, "right".to_string())));
                GeneratedGraph {
                    graph,
                    roles,
                    notes: Vec::new(),
                }
            }
            FamilySpec::Cycle { n } => plain(basic::cycle(n)?),
            FamilySpec::Path { n } => plain(basic::path(n)?),
            FamilySpec::PathPower { n, p } => plain(basic::path_power(n, p)?),
            FamilySpec::DoubleWheel { l } => {
                let dw = double_wheel(l)?;
                let mut roles: Vec<(usize, String)> =
                    dw.rim.iter().map(|&v| (v, "rim".to_string())).collect();
                roles.push((dw.hub_x, "hub".to_string()));
                roles.push((dw.hub_y, "hub".to_string()));
                GeneratedGraph {
                    graph: dw.graph,
                    roles,
                    notes: Vec::new(),
                }
            }
            FamilySpec::Gk { k } => {
                let g = gk(k)?;
                let roles = g.roles();
                GeneratedGraph {
                    graph: g.graph,
                    roles,
                    notes: Vec::new(),
                }
            }
            FamilySpec::Prop2Gadget { k } => {
                let gadget = prop2_gadget(k)?;
                let mut roles = Vec::new();
                for &v in &gadget.left_small {
                    roles.push((v, "left-small".to_string()));
                }
                for &v in &gadget.left_large {
                    roles.push((v, "left-large".to_string()));
                }
                for &v in &gadget.right_small {
                    roles.push((v, "right-small".to_string()));
                }
                for &v in &gadget.right_large {
                    roles.push((v, "right-large".to_string()));
                }
                GeneratedGraph {
                    graph: gadget.graph,
                    roles,
                    notes: vec![format!("marked edge e = {}", gadget.e)],
                }
            }
            FamilySpec::PlanarIaGadget => {
                let gadget = planar_ia_gadget();
                let mut roles: Vec<(usize, String)> = gadget
                    .core_vertices
                    .iter()
                    .map(|&v| (v, "core".to_string()))
                    .collect();
                for (i, w) in gadget.wheels.iter().enumerate() {
                    for &v in &w.rim {
                        roles.push((v, format!("wheel:{}:rim", i + 1)));
                    }
                    roles.push((w.other_hub, format!("wheel:{}:hub", i + 1)));
                }
                GeneratedGraph {
                    graph: gadget.graph,
                    roles,
                    notes: Vec::new(),
                }
            }
            FamilySpec::DegenerateLb { d, n_override } => {
                let lb = degenerate_lb_graph(d, n_override)?;
                let mut roles: Vec<(usize, String)> =
                    lb.a.iter().map(|&v| (v, "a".to_string())).collect();
                roles.extend(lb.b.iter().map(|&v| (v, "b".to_string())));
                let mut notes = Vec::new();
                if !lb.faithful {
                    notes.push(format!(
                        "truncated to N = {} (full size uses N = {})",
                        lb.n_param,
                        (1usize << d) * d.pow(d as u32 + 1)
                    ));
                }
                GeneratedGraph {
                    graph: lb.graph,
                    roles,
                    notes,
                }
            }
            FamilySpec::RandomDegenerate { n, d, seed } => {
                plain(random_degenerate(n, d, seed)?)
            }
            FamilySpec::RandomInterval { n, seed } => plain(random_interval(n, seed)?),
        })
    }
}
