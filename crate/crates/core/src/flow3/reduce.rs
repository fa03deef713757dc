//! Z3-connectivity, flow-criticality and the two reductions used to shrink flow problems.

use crate::multigraph::connectivity::small_bonds;
use crate::multigraph::{GraphError, Multigraph, VertexId};

use super::solver::{mod3_orientation, Mod3System};
use super::FlowError;

/// Whether every zero-sum excess prescription is realisable. Enumerates 3^(|V|−1) targets.
pub fn is_z3_connected(g: &Multigraph, guard: usize) -> Result<bool, GraphError> {
    let n = g.vertex_count();
    if n > guard {
        return Err(GraphError::GuardExceeded { what: "Z3-connectivity", limit: guard, actual: n });
    }
    if n <= 1 {
        return Ok(true);
    }
    let sys = Mod3System::new(g);
    let mut t = vec![0u8; n];
    loop {
        let s: u8 = t[..n - 1].iter().sum::<u8>() % 3;
        t[n - 1] = (3 - s) % 3;
        if sys.solve_indexed(&t).is_none() {
            return Ok(false);
        }
        // next target in base 3 over the first n − 1 entries
        let mut i = 0;
        loop {
            if i == n - 1 {
                return Ok(true);
            }
            t[i] += 1;
            if t[i] < 3 {
                break;
            }
            t[i] = 0;
            i += 1;
        }
    }
}

/// Not 3-flowable, while identifying any two vertices makes it 3-flowable.
pub fn is_vertex_3_critical(g: &Multigraph) -> bool {
    if mod3_orientation(g).is_some() {
        return false;
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let h = g.identify(&[vs[i], vs[j]]).expect("known vertices");
            if mod3_orientation(&h).is_none() {
                return false;
            }
        }
    }
    true
}

/// Not 3-flowable, while contracting any non-loop edge makes it 3-flowable.
pub fn is_edge_3_critical(g: &Multigraph) -> bool {
    if mod3_orientation(g).is_some() {
        return false;
    }
    g.edges()
        .filter(|e| !e.is_loop())
        .all(|e| mod3_orientation(&g.contract_edge(e.id).expect("non-loop")).is_some())
}

/// Splits along the lexicographically least bond of size ≤ 3 with at least two vertices on
/// each side, returning both contractions; the input is 3-flowable iff both are.
/// Returns `[g]` when no such bond exists.
pub fn mincut_reduction(g: &Multigraph) -> Vec<Multigraph> {
    let all: Vec<VertexId> = g.vertices().collect();
    let best = small_bonds(g, 3)
        .into_iter()
        .filter(|(_, side)| side.len() >= 2 && all.len() - side.len() >= 2)
        .min_by(|a, b| a.0.cmp(&b.0));
    let Some((_, side)) = best else { return vec![g.clone()] };
    let other: Vec<VertexId> = all.iter().copied().filter(|v| !side.contains(v)).collect();
    vec![g.identify(&side).expect("side"), g.identify(&other).expect("side")]
}

/// Contracts a Z3-connected vertex set; flowability is preserved both ways.
pub fn z3_subgraph_reduction(g: &Multigraph, h: &[VertexId], guard: usize) -> Result<Multigraph, FlowError> {
    if h.len() == 1 {
        if !g.contains_vertex(h[0]) {
            return Err(GraphError::UnknownVertex(h[0]).into());
        }
        return Ok(g.clone());
    }
    let sub = g.induced_subgraph(h)?;
    if !is_z3_connected(&sub, guard)? {
        return Err(FlowError::NotZ3Connected);
    }
    Ok(g.identify(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named::*;

    #[test]
    fn z3_connectivity() {
        assert!(is_z3_connected(&bundle(2), 10).unwrap());
        assert!(is_z3_connected(&complete(5), 10).unwrap());
        assert!(!is_z3_connected(&cycle(4), 10).unwrap());
        assert!(!is_z3_connected(&bundle(1), 10).unwrap());
        assert!(is_z3_connected(&cycle(20), 10).is_err());
    }

    #[test]
    fn criticality() {
        assert!(is_vertex_3_critical(&complete(4)));
        assert!(is_edge_3_critical(&complete(4)));
        assert!(!is_vertex_3_critical(&cycle(4)));
        let two = complete(4).disjoint_union(&complete(4));
        assert!(!is_edge_3_critical(&two));
        let mut looped = cycle(3);
        looped.add_edge(9, 0, 0).unwrap();
        assert!(!is_edge_3_critical(&looped));
    }

    fn two_k4s_joined() -> Multigraph {
        let mut g = complete(4).disjoint_union(&complete(4));
        // break one edge inside each K4 and reconnect across so both sides stay cubic-ish
        g.add_edge(100, 0, 4).unwrap();
        g.add_edge(101, 1, 5).unwrap();
        g.add_edge(102, 2, 6).unwrap();
        g
    }

    #[test]
    fn mincut_splits_equiflowably() {
        let g = two_k4s_joined();
        let parts = mincut_reduction(&g);
        assert_eq!(parts.len(), 2);
        let both = parts.iter().all(|p| mod3_orientation(p).is_some());
        assert_eq!(both, mod3_orientation(&g).is_some());
        assert_eq!(mincut_reduction(&complete(5)).len(), 1);
        let c6 = mincut_reduction(&cycle(6));
        assert_eq!(c6.len(), 2);
        assert!(c6.iter().all(|p| mod3_orientation(p).is_some()));
    }

    #[test]
    fn subgraph_reduction() {
        let mut g = cycle(5);
        g.add_edge(10, 0, 1).unwrap();
        let r = z3_subgraph_reduction(&g, &[0, 1], 10).unwrap();
        assert_eq!(r.vertex_count(), 4);
        assert_eq!(mod3_orientation(&r).is_some(), mod3_orientation(&g).is_some());
        assert_eq!(z3_subgraph_reduction(&g, &[3], 10).unwrap(), g);
        assert_eq!(z3_subgraph_reduction(&g, &[2, 3], 10), Err(FlowError::NotZ3Connected));
    }
}
