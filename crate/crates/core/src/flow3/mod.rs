//! Nowhere-zero 3-flows, modulo-3-orientations and the predicates built on them.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::multigraph::{EdgeId, GraphError, Multigraph, VertexId};

pub mod kmn;
pub mod reduce;
pub mod solver;

pub use kmn::kmn_mod3_orientation;
pub use reduce::{
    is_edge_3_critical, is_vertex_3_critical, is_z3_connected, mincut_reduction, z3_subgraph_reduction,
};
pub use solver::{
    mod3_orientation, mod3_orientation_brute, near_mod3_orientation, nz3_flow, orientation_exists_cotree,
    orientation_with_targets, Mod3System,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("excess targets sum to {0} mod 3, expected 0")]
    TargetSum(u8),
    #[error("target given for unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("orientation does not match the graph")]
    Mismatch,
    #[error("K_{{m,n}} needs m, n >= 2 (got {0}, {1})")]
    TooSmall(usize, usize),
    #[error("the two distinguished vertices must differ")]
    SameVertex,
    #[error("subgraph on the given vertices is not Z3-connected")]
    NotZ3Connected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One direction bit per edge, indexed like `graph.edges()`. `true` means `u → v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub graph: Multigraph,
    pub forward: Vec<bool>,
}

impl Orientation {
    pub fn new(graph: Multigraph, forward: Vec<bool>) -> Result<Self, FlowError> {
        if forward.len() != graph.edge_count() {
            return Err(FlowError::Mismatch);
        }
        Ok(Orientation { graph, forward })
    }

    pub fn all_forward(graph: Multigraph) -> Self {
        let forward = vec![true; graph.edge_count()];
        Orientation { graph, forward }
    }

    /// Builds from explicit arcs `(edge, tail, head)`; every edge must appear once.
    pub fn from_arcs(graph: Multigraph, arcs: &[(EdgeId, VertexId, VertexId)]) -> Result<Self, FlowError> {
        let mut forward = vec![None; graph.edge_count()];
        for &(e, t, h) in arcs {
            let i = graph.edge_index(e).ok_or(FlowError::Graph(GraphError::UnknownEdge(e)))?;
            let edge = graph.edge_at(i).expect("index");
            let dir = if (edge.u, edge.v) == (t, h) {
                true
            } else if (edge.v, edge.u) == (t, h) {
                false
            } else {
                return Err(FlowError::Mismatch);
            };
            if forward[i].replace(dir).is_some() {
                return Err(FlowError::Mismatch);
            }
        }
        let forward = forward.into_iter().collect::<Option<Vec<_>>>().ok_or(FlowError::Mismatch)?;
        Ok(Orientation { graph, forward })
    }

    pub fn tail_head(&self, index: usize) -> (VertexId, VertexId) {
        let e = self.graph.edge_at(index).expect("edge index");
        if self.forward[index] {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        }
    }

    /// `(edge id, tail, head)` in edge order.
    pub fn arcs(&self) -> Vec<(EdgeId, VertexId, VertexId)> {
        (0..self.forward.len())
            .map(|i| {
                let (t, h) = self.tail_head(i);
                (self.graph.edge_at(i).expect("edge").id, t, h)
            })
            .collect()
    }

    /// Out-degree minus in-degree per vertex, in vertex order. Loops contribute nothing.
    pub fn excesses(&self) -> Vec<i64> {
        let mut exc = vec![0i64; self.graph.vertex_count()];
        for i in 0..self.forward.len() {
            let (t, h) = self.tail_head(i);
            if t != h {
                exc[self.graph.vertex_index(t).expect("tail")] += 1;
                exc[self.graph.vertex_index(h).expect("head")] -= 1;
            }
        }
        exc
    }

    pub fn excess(&self, v: VertexId) -> Option<i64> {
        self.graph.vertex_index(v).map(|i| self.excesses()[i])
    }

    pub fn is_mod3(&self) -> bool {
        self.excesses().iter().all(|x| x.rem_euclid(3) == 0)
    }

    pub fn meets(&self, t: &ExcessTarget) -> bool {
        let exc = self.excesses();
        self.graph.vertices().zip(exc).all(|(v, x)| x.rem_euclid(3) as u8 == t.get(v))
    }

    pub fn reversed(&self) -> Orientation {
        Orientation { graph: self.graph.clone(), forward: self.forward.iter().map(|b| !b).collect() }
    }
}

/// An orientation together with values in {1, 2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z3Flow {
    pub orientation: Orientation,
    pub values: Vec<u8>,
}

impl Z3Flow {
    /// Every arc carries value 1; valid exactly when the orientation is mod-3.
    pub fn from_orientation(o: Orientation) -> Self {
        let values = vec![1; o.forward.len()];
        Z3Flow { orientation: o, values }
    }

    /// Value-2 arcs become reversed value-1 arcs.
    pub fn to_orientation(&self) -> Orientation {
        let forward = self.orientation.forward.iter().zip(&self.values).map(|(&f, &x)| if x == 2 { !f } else { f }).collect();
        Orientation { graph: self.orientation.graph.clone(), forward }
    }

    pub fn is_valid(&self) -> bool {
        let g = &self.orientation.graph;
        if self.values.len() != g.edge_count() || self.values.iter().any(|&x| x != 1 && x != 2) {
            return false;
        }
        let mut net = vec![0i64; g.vertex_count()];
        for i in 0..self.values.len() {
            let (t, h) = self.orientation.tail_head(i);
            let x = self.values[i] as i64;
            net[g.vertex_index(h).expect("head")] += x;
            net[g.vertex_index(t).expect("tail")] -= x;
        }
        net.iter().all(|x| x.rem_euclid(3) == 0)
    }
}

/// Prescribed excess per vertex modulo 3; missing vertices default to 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExcessTarget {
    values: BTreeMap<VertexId, u8>,
}

impl ExcessTarget {
    pub fn zero() -> Self {
        ExcessTarget::default()
    }

    pub fn new(g: &Multigraph, values: impl IntoIterator<Item = (VertexId, i64)>) -> Result<Self, FlowError> {
        let mut map = BTreeMap::new();
        for (v, x) in values {
            if !g.contains_vertex(v) {
                return Err(FlowError::UnknownVertex(v));
            }
            let r = x.rem_euclid(3) as u8;
            if r != 0 {
                map.insert(v, r);
            }
        }
        let sum = map.values().map(|&x| x as u32).sum::<u32>() % 3;
        if sum != 0 {
            return Err(FlowError::TargetSum(sum as u8));
        }
        Ok(ExcessTarget { values: map })
    }

    pub fn get(&self, v: VertexId) -> u8 {
        self.values.get(&v).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }
}

/// Orientation whose excess is 0 mod 3 except at `u1` (≡ alpha) and `u2` (≡ −alpha).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearOrientation {
    pub orientation: Orientation,
    pub u1: VertexId,
    pub u2: VertexId,
    pub alpha: u8,
}

impl NearOrientation {
    pub fn reversed(&self) -> NearOrientation {
        NearOrientation { orientation: self.orientation.reversed(), u1: self.u1, u2: self.u2, alpha: 3 - self.alpha }
    }

    pub fn is_valid(&self) -> bool {
        let g = &self.orientation.graph;
        let Ok(t) = ExcessTarget::new(g, [(self.u1, self.alpha as i64), (self.u2, -(self.alpha as i64))]) else {
            return false;
        };
        self.u1 != self.u2 && (self.alpha == 1 || self.alpha == 2) && self.orientation.meets(&t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named::*;

    #[test]
    fn flow_orientation_round_trip() {
        let o = Orientation::all_forward(cycle(4));
        let f = Z3Flow::from_orientation(o.clone());
        assert!(f.is_valid());
        let g = Z3Flow { orientation: o.reversed(), values: vec![2; 4] };
        assert!(g.is_valid());
        assert_eq!(g.to_orientation(), o);
    }

    #[test]
    fn target_sum_checked() {
        let g = cycle(4);
        assert_eq!(ExcessTarget::new(&g, [(0, 1)]), Err(FlowError::TargetSum(1)));
        assert!(ExcessTarget::new(&g, [(0, 1), (1, 2)]).is_ok());
        assert!(ExcessTarget::new(&g, [(9, 0)]).is_err());
    }

    #[test]
    fn loops_do_not_count() {
        let mut g = Multigraph::with_vertices(1);
        g.add_edge(0, 0, 0).unwrap();
        let o = Orientation::all_forward(g);
        assert_eq!(o.excesses(), vec![0]);
        assert!(Z3Flow::from_orientation(o).is_valid());
    }

    #[test]
    fn arcs_round_trip() {
        let o = Orientation::new(complete(4), vec![true, false, true, false, true, false]).unwrap();
        let again = Orientation::from_arcs(complete(4), &o.arcs()).unwrap();
        assert_eq!(o, again);
    }
}
