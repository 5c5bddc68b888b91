use arbor_core::{Edge, Graph};

use crate::error::{GenError, Result};

/// Two disjoint copies of K_{k,k+1} joined by a single edge `e` between
/// their larger parts: the smallest graph whose optimal induced-forest cover
/// is not a partition.
#[derive(Debug, Clone)]
pub struct Prop2Gadget {
    pub graph: Graph,
    pub e: Edge,
    pub left_small: Vec<usize>,
    pub left_large: Vec<usize>,
    pub right_small: Vec<usize>,
    pub right_large: Vec<usize>,
}

pub fn prop2_gadget(k: usize) -> Result<Prop2Gadget> {
    if k < 2 {
        return Err(GenError::Parameter("prop2_gadget(k) needs k >= 2".into()));
    }
    let left_small: Vec<usize> = (1..=k).collect();
    let left_large: Vec<usize> = (k + 1..=2 * k + 1).collect();
    let right_small: Vec<usize> = (2 * k + 2..=3 * k + 1).collect();
    let right_large: Vec<usize> = (3 * k + 2..=4 * k + 2).collect();

    let mut edges = Vec::new();
    for &a in &left_small {
        for &b in &left_large {
            edges.push(Edge::new(a, b));
        }
    }
    for &a in &right_small {
        for &b in &right_large {
            edges.push(Edge::new(a, b));
        }
    }
    let e = Edge::new(left_large[0], right_large[0]);
    edges.push(e);

    let graph = Graph::new(4 * k + 2, edges)?;
    Ok(Prop2Gadget {
        graph,
        e,
        left_small,
        left_large,
        right_small,
        right_large,
    })
}
