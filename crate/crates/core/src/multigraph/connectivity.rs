//! Edge cuts: global minimum cut (Stoer–Wagner), unit-capacity max-flow, small bonds.

use std::collections::{HashSet, VecDeque};

use super::{EdgeId, Multigraph, VertexId};

/// An edge cut together with the vertex bipartition it separates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub edges: Vec<EdgeId>,
    pub side: Vec<VertexId>,
    pub other: Vec<VertexId>,
}

impl CutWitness {
    /// Builds the witness for a vertex side; the cut is every edge leaving it.
    pub fn from_side(g: &Multigraph, side: &[VertexId]) -> Self {
        let inside: HashSet<VertexId> = side.iter().copied().collect();
        let other = g.vertices().filter(|v| !inside.contains(v)).collect();
        let edges = g
            .edges()
            .filter(|e| inside.contains(&e.u) != inside.contains(&e.v))
            .map(|e| e.id)
            .collect();
        let mut side = side.to_vec();
        side.sort_unstable();
        CutWitness { edges, side, other }
    }

    /// The sides partition V(g) into nonempty parts and `edges` is exactly the crossing set.
    pub fn verify(&self, g: &Multigraph) -> bool {
        if self.side.is_empty() || self.other.is_empty() {
            return false;
        }
        let mut all: Vec<VertexId> = self.side.iter().chain(&self.other).copied().collect();
        all.sort_unstable();
        let mut expected: Vec<VertexId> = g.vertices().collect();
        expected.sort_unstable();
        if all != expected {
            return false;
        }
        let inside: HashSet<VertexId> = self.side.iter().copied().collect();
        let mut crossing: Vec<EdgeId> = g
            .edges()
            .filter(|e| inside.contains(&e.u) != inside.contains(&e.v))
            .map(|e| e.id)
            .collect();
        let mut claimed = self.edges.clone();
        crossing.sort_unstable();
        claimed.sort_unstable();
        crossing == claimed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeConnectivity {
    Exact { lambda: usize, witness: CutWitness },
    /// Connectivity exceeds the ceiling that was asked about.
    AtLeast(usize),
}

impl EdgeConnectivity {
    /// A lower bound that is exact in the `Exact` case.
    pub fn lower_bound(&self) -> usize {
        match self {
            EdgeConnectivity::Exact { lambda, .. } => *lambda,
            EdgeConnectivity::AtLeast(k) => *k,
        }
    }

    pub fn is_at_least(&self, k: usize) -> bool {
        self.lower_bound() >= k
    }
}

/// Exact λ(g) when λ ≤ `ceiling`, otherwise `AtLeast(ceiling + 1)`.
/// Disconnected graphs give λ = 0 with a component as witness; graphs with
/// fewer than two vertices have no cut at all.
pub fn edge_connectivity(g: &Multigraph, ceiling: usize) -> EdgeConnectivity {
    if g.vertex_count() < 2 {
        return EdgeConnectivity::AtLeast(ceiling + 1);
    }
    let comps = g.components();
    if comps.len() > 1 {
        return EdgeConnectivity::Exact { lambda: 0, witness: CutWitness::from_side(g, &comps[0]) };
    }
    let (lambda, side) = stoer_wagner(g);
    if lambda <= ceiling {
        EdgeConnectivity::Exact { lambda, witness: CutWitness::from_side(g, &side) }
    } else {
        EdgeConnectivity::AtLeast(ceiling + 1)
    }
}

/// Global minimum cut of a connected graph with at least two vertices.
/// Returns the cut weight and one side.
pub fn stoer_wagner(g: &Multigraph) -> (usize, Vec<VertexId>) {
    let n = g.vertex_count();
    assert!(n >= 2, "minimum cut needs two vertices");
    let mut w = vec![vec![0usize; n]; n];
    for e in g.edges() {
        if e.is_loop() {
            continue;
        }
        let a = g.vertex_index(e.u).expect("endpoint");
        let b = g.vertex_index(e.v).expect("endpoint");
        w[a][b] += 1;
        w[b][a] += 1;
    }
    let mut members: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = (usize::MAX, Vec::new());
    while active.len() > 1 {
        let mut added = vec![false; n];
        let mut key = vec![0usize; n];
        let mut prev = usize::MAX;
        let mut last = usize::MAX;
        for _ in 0..active.len() {
            let next = *active
                .iter()
                .filter(|&&v| !added[v])
                .max_by(|&&a, &&b| key[a].cmp(&key[b]).then(b.cmp(&a)))
                .expect("unadded vertex");
            added[next] = true;
            prev = last;
            last = next;
            for &v in &active {
                if !added[v] {
                    key[v] += w[next][v];
                }
            }
        }
        if key[last] < best.0 {
            best = (key[last], members[last].clone());
        }
        // merge last into prev
        let moved = std::mem::take(&mut members[last]);
        members[prev].extend(moved);
        for &v in &active {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
        active.retain(|&v| v != last);
    }
    let side = best.1.into_iter().map(|i| g.vertex_at(i).expect("index")).collect();
    (best.0, side)
}

/// Up to `k` pairwise edge-disjoint `s`–`t` paths, each an edge-id sequence from `s`.
/// Returns `None` if fewer than `k` exist.
pub fn edge_disjoint_paths(
    g: &Multigraph,
    s: VertexId,
    t: VertexId,
    k: usize,
) -> Option<Vec<Vec<EdgeId>>> {
    let si = g.vertex_index(s)?;
    let ti = g.vertex_index(t)?;
    if si == ti {
        return None;
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let ends: Vec<(usize, usize)> = g
        .edges()
        .map(|e| (g.vertex_index(e.u).expect("endpoint"), g.vertex_index(e.v).expect("endpoint")))
        .collect();
    let adj = g.adjacency();
    // flow[e]: +1 if used u→v, -1 if used v→u, 0 unused
    let mut flow = vec![0i8; m];
    for _ in 0..k {
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[si] = true;
        let mut queue = VecDeque::from([si]);
        while let Some(x) = queue.pop_front() {
            if x == ti {
                break;
            }
            for &(ei, y) in &adj[x] {
                if seen[y] || x == y {
                    continue;
                }
                let forward = ends[ei].0 == x;
                let residual = if forward { flow[ei] < 1 } else { flow[ei] > -1 };
                if residual {
                    seen[y] = true;
                    pred[y] = Some((x, ei));
                    queue.push_back(y);
                }
            }
        }
        if !seen[ti] {
            return None;
        }
        let mut y = ti;
        while let Some((x, ei)) = pred[y] {
            flow[ei] += if ends[ei].0 == x { 1 } else { -1 };
            y = x;
        }
    }
    // decompose
    let mut used = vec![false; m];
    let mut paths = Vec::new();
    for _ in 0..k {
        let mut x = si;
        let mut path = Vec::new();
        let mut guard = 0;
        while x != ti {
            let (ei, y) = adj[x]
                .iter()
                .copied()
                .find(|&(ei, y)| {
                    !used[ei]
                        && y != x
                        && ((flow[ei] == 1 && ends[ei].0 == x) || (flow[ei] == -1 && ends[ei].1 == x))
                })
                .expect("flow decomposition");
            used[ei] = true;
            path.push(g.edge_at(ei).expect("index").id);
            x = y;
            guard += 1;
            assert!(guard <= m, "flow decomposition loops");
        }
        paths.push(path);
    }
    Some(paths)
}

/// Checks that the given edge sequences are pairwise edge-disjoint walks from `s` to `t`.
pub fn verify_disjoint_paths(g: &Multigraph, s: VertexId, t: VertexId, paths: &[Vec<EdgeId>]) -> bool {
    let mut used = HashSet::new();
    for path in paths {
        let mut x = s;
        for e in path {
            let Some(edge) = g.edge(*e) else { return false };
            if !used.insert(*e) || !edge.touches(x) {
                return false;
            }
            x = edge.other(x);
        }
        if x != t {
            return false;
        }
    }
    true
}

/// Every bond (minimal cut) with at most `max_size` edges in a connected graph,
/// as sorted edge-id lists with the side containing the first vertex.
pub fn small_bonds(g: &Multigraph, max_size: usize) -> Vec<(Vec<EdgeId>, Vec<VertexId>)> {
    let candidates: Vec<EdgeId> = g.edges().filter(|e| !e.is_loop()).map(|e| e.id).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        g: &Multigraph,
        cands: &[EdgeId],
        start: usize,
        max: usize,
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<(Vec<EdgeId>, Vec<VertexId>)>,
    ) {
        if !chosen.is_empty() {
            if let Some(side) = bond_side(g, chosen) {
                let mut ids = chosen.clone();
                ids.sort_unstable();
                out.push((ids, side));
            }
        }
        if chosen.len() == max {
            return;
        }
        for i in start..cands.len() {
            chosen.push(cands[i]);
            rec(g, cands, i + 1, max, chosen, out);
            chosen.pop();
        }
    }
    rec(g, &candidates, 0, max_size, &mut chosen, &mut out);
    out
}

/// If removing `cut` leaves exactly two components and every cut edge joins them,
/// returns the component containing the first vertex.
fn bond_side(g: &Multigraph, cut: &[EdgeId]) -> Option<Vec<VertexId>> {
    let mut h = g.clone();
    for &e in cut {
        h.remove_edge(e).ok()?;
    }
    let comps = h.components();
    if comps.len() != 2 {
        return None;
    }
    let side: HashSet<VertexId> = comps[0].iter().copied().collect();
    for &e in cut {
        let edge = g.edge(e)?;
        if side.contains(&edge.u) == side.contains(&edge.v) {
            return None;
        }
    }
    Some(comps[0].clone())
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    /// Minimum over all vertex bipartitions, by brute force.
    fn brute_lambda(g: &Multigraph) -> usize {
        let vs: Vec<VertexId> = g.vertices().collect();
        let n = vs.len();
        let mut best = usize::MAX;
        for mask in 1..(1u32 << n) - 1 {
            let side: Vec<VertexId> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
            best = best.min(CutWitness::from_side(g, &side).edges.len());
        }
        best
    }

    #[test]
    fn cycle_and_complete() {
        match edge_connectivity(&cycle(5), 4) {
            EdgeConnectivity::Exact { lambda, witness } => {
                assert_eq!(lambda, 2);
                assert!(witness.verify(&cycle(5)));
                assert_eq!(witness.edges.len(), 2);
            }
            other => panic!("{other:?}"),
        }
        let k5 = complete(5);
        let lam = edge_connectivity(&k5, 4);
        assert_eq!(lam.lower_bound(), brute_lambda(&k5));
        assert!(matches!(lam, EdgeConnectivity::Exact { lambda: 4, .. }));
        assert_eq!(edge_connectivity(&complete(6), 4), EdgeConnectivity::AtLeast(5));
        assert!(edge_connectivity(&petersen(), 4).lower_bound() <= 3);
    }

    #[test]
    fn disconnected_and_trivial() {
        let g = cycle(3).disjoint_union(&cycle(3));
        match edge_connectivity(&g, 3) {
            EdgeConnectivity::Exact { lambda: 0, witness } => assert!(witness.verify(&g)),
            other => panic!("{other:?}"),
        }
        assert_eq!(edge_connectivity(&empty(1), 2), EdgeConnectivity::AtLeast(3));
    }

    #[test]
    fn matches_brute_force_on_multigraphs() {
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (3, 0), (1, 3), (2, 2)])
            .unwrap();
        assert_eq!(stoer_wagner(&g).0, brute_lambda(&g));
    }

    #[test]
    fn menger_paths() {
        let k5 = complete(5);
        let paths = edge_disjoint_paths(&k5, 0, 3, 4).unwrap();
        assert!(verify_disjoint_paths(&k5, 0, 3, &paths));
        assert!(edge_disjoint_paths(&k5, 0, 3, 5).is_none());
    }

    #[test]
    fn bonds_of_a_cycle() {
        let bonds = small_bonds(&cycle(4), 2);
        assert_eq!(bonds.len(), 6);
        assert!(bonds.iter().all(|(c, _)| c.len() == 2));
    }
}
