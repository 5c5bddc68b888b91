use arbor_core::{Edge, Graph};

use crate::error::{GenError, Result};

/// Double wheel DW_l: an l-cycle (the rim) plus two hubs adjacent to every
/// rim vertex and not to each other.
#[derive(Debug, Clone)]
pub struct DoubleWheel {
    pub graph: Graph,
    pub rim: Vec<usize>,
    pub hub_x: usize,
    pub hub_y: usize,
}

pub fn double_wheel(l: usize) -> Result<DoubleWheel> {
    if l < 3 {
        return Err(GenError::Parameter("double_wheel(l) needs l >= 3".into()));
    }
    let rim: Vec<usize> = (1..=l).collect();
    let hub_x = l + 1;
    let hub_y = l + 2;
    let mut edges: Vec<Edge> = (1..l).map(|v| Edge::new(v, v + 1)).collect();
    edges.push(Edge::new(1, l));
    for &r in &rim {
        edges.push(Edge::new(hub_x, r));
        edges.push(Edge::new(hub_y, r));
    }
    let graph = Graph::new(l + 2, edges)?;
    Ok(DoubleWheel {
        graph,
        rim,
        hub_x,
        hub_y,
    })
}

/// The 63-vertex planar graph assembled from one DW_5 on vertices v_1..v_7
/// and seven DW_7's, each sharing one hub with a distinct v_i.
#[derive(Debug, Clone)]
pub struct PlanarGadget {
    pub graph: Graph,
    /// v_1..v_7: the DW_5 copy (rim 1..5, hubs 6 and 7).
    pub core_vertices: Vec<usize>,
    /// Per v_i: rim of the attached DW_7 and its second hub.
    pub wheels: Vec<AttachedWheel>,
}

#[derive(Debug, Clone)]
pub struct AttachedWheel {
    pub shared_hub: usize,
    pub rim: Vec<usize>,
    pub other_hub: usize,
}

pub fn planar_ia_gadget() -> PlanarGadget {
    let core: Vec<usize> = (1..=7).collect();
    let mut edges: Vec<Edge> = (1..5).map(|v| Edge::new(v, v + 1)).collect();
    edges.push(Edge::new(1, 5));
    for r in 1..=5 {
        edges.push(Edge::new(6, r));
        edges.push(Edge::new(7, r));
    }

    let mut next = 8;
    let mut wheels = Vec::with_capacity(7);
    for &vi in &core {
        let rim: Vec<usize> = (next..next + 7).collect();
        let other_hub = next + 7;
        next += 8;
        for i in 0..7 {
            edges.push(Edge::new(rim[i], rim[(i + 1) % 7]));
            edges.push(Edge::new(vi, rim[i]));
            edges.push(Edge::new(other_hub, rim[i]));
        }
        wheels.push(AttachedWheel {
            shared_hub: vi,
            rim,
            other_hub,
        });
    }

    let graph = Graph::new(63, edges).expect("gadget is simple");
    PlanarGadget {
        graph,
        core_vertices: core,
        wheels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_wheel_counts() {
        for l in [3usize, 5, 7, 11] {
            let dw = double_wheel(l).unwrap();
            assert_eq!(dw.graph.n(), l + 2);
            assert_eq!(dw.graph.m(), 3 * l);
            assert!(!dw.graph.has_edge(dw.hub_x, dw.hub_y));
            for &r in &dw.rim {
                assert!(dw.graph.has_edge(dw.hub_x, r));
                assert!(dw.graph.has_edge(dw.hub_y, r));
            }
        }
        assert!(double_wheel(2).is_err());
    }

    #[test]
    fn gadget_counts_and_degrees() {
        let gadget = planar_ia_gadget();
        assert_eq!(gadget.graph.n(), 7 + 7 * 8);
        assert_eq!(gadget.graph.m(), 15 + 7 * 21);
        // Each v_i gains 7 rim edges from its DW_7 on top of its DW_5
        // degree: 4 for the five rim vertices, 5 for the two hubs.
        for &v in &gadget.core_vertices[..5] {
            assert_eq!(gadget.graph.degree(v), 4 + 7);
        }
        for &v in &gadget.core_vertices[5..] {
            assert_eq!(gadget.graph.degree(v), 5 + 7);
        }
    }
}
