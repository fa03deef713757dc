//! Minor testing for small simple patterns by delete/contract/keep branching.

use std::collections::{HashSet, VecDeque};

use super::{GraphError, Multigraph, VertexId};

/// Branch sets indexed like the pattern's vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub branch_sets: Vec<Vec<VertexId>>,
}

impl MinorWitness {
    /// Disjoint, nonempty, connected branch sets with an edge for every pattern edge.
    pub fn verify(&self, g: &Multigraph, pattern: &Multigraph) -> bool {
        if self.branch_sets.len() != pattern.vertex_count() {
            return false;
        }
        let mut owner = std::collections::HashMap::new();
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return false;
            }
            for &v in set {
                if !g.contains_vertex(v) || owner.insert(v, i).is_some() {
                    return false;
                }
            }
            match g.induced_subgraph(set) {
                Ok(h) if h.is_connected() => {}
                _ => return false,
            }
        }
        for pe in pattern.edges() {
            if pe.is_loop() {
                continue;
            }
            let a = pattern.vertex_index(pe.u).expect("endpoint");
            let b = pattern.vertex_index(pe.v).expect("endpoint");
            let linked = g.edges().any(|e| {
                let (x, y) = (owner.get(&e.u), owner.get(&e.v));
                (x == Some(&a) && y == Some(&b)) || (x == Some(&b) && y == Some(&a))
            });
            if !linked {
                return false;
            }
        }
        true
    }
}

/// Searches for `pattern` as a minor of `g`. The pattern must be simple with at most 8
/// vertices; `g` is limited to `guard` vertices (and 64 in any case).
pub fn has_minor(
    g: &Multigraph,
    pattern: &Multigraph,
    guard: usize,
) -> Result<Option<MinorWitness>, GraphError> {
    if !pattern.is_simple() {
        return Err(GraphError::PatternNotSimple);
    }
    let limit = guard.min(64);
    if g.vertex_count() > limit {
        return Err(GraphError::GuardExceeded { what: "minor", limit, actual: g.vertex_count() });
    }
    if pattern.vertex_count() > 8 {
        return Err(GraphError::GuardExceeded {
            what: "minor pattern",
            limit: 8,
            actual: pattern.vertex_count(),
        });
    }
    let pk = pattern.vertex_count();
    if pk == 0 {
        return Ok(Some(MinorWitness { branch_sets: Vec::new() }));
    }
    let mut pat_adj = vec![0u64; pk];
    for e in pattern.edges() {
        let a = pattern.vertex_index(e.u).expect("endpoint");
        let b = pattern.vertex_index(e.v).expect("endpoint");
        pat_adj[a] |= 1 << b;
        pat_adj[b] |= 1 << a;
    }
    let pat_min_deg = pat_adj.iter().map(|m| m.count_ones() as usize).min().unwrap_or(0);

    let n = g.vertex_count();
    let mut adj = vec![0u64; n];
    for e in g.edges() {
        if e.is_loop() {
            continue;
        }
        let a = g.vertex_index(e.u).expect("endpoint");
        let b = g.vertex_index(e.v).expect("endpoint");
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let alive = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let state = State { adj, kept: vec![0; n], alive, sets: (0..n).map(|i| vec![i]).collect() };
    let mut search = Search {
        pat_adj,
        pat_edges: pattern.edge_count(),
        pat_min_deg,
        memo: HashSet::new(),
    };
    let found = search.run(state);
    Ok(found.map(|sets| MinorWitness {
        branch_sets: sets
            .into_iter()
            .map(|s| {
                let mut vs: Vec<VertexId> = s.into_iter().map(|i| g.vertex_at(i).expect("index")).collect();
                vs.sort_unstable();
                vs
            })
            .collect(),
    }))
}

#[derive(Clone)]
struct State {
    adj: Vec<u64>,
    /// Edges committed to stay as inter-branch edges.
    kept: Vec<u64>,
    alive: u64,
    sets: Vec<Vec<usize>>,
}

impl State {
    fn degree(&self, v: usize) -> usize {
        (self.adj[v] & self.alive).count_ones() as usize
    }

    fn edge_count(&self) -> usize {
        bits(self.alive).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    fn delete_vertex(&mut self, v: usize) {
        for w in bits(self.adj[v]) {
            self.adj[w] &= !(1 << v);
            self.kept[w] &= !(1 << v);
        }
        self.adj[v] = 0;
        self.kept[v] = 0;
        self.alive &= !(1 << v);
    }

    /// Contracts `v` into `a`.
    fn merge(&mut self, v: usize, a: usize) {
        let moved = std::mem::take(&mut self.sets[v]);
        self.sets[a].extend(moved);
        let nv = self.adj[v];
        let kv = self.kept[v];
        for w in bits(nv) {
            self.adj[w] &= !(1 << v);
            self.kept[w] &= !(1 << v);
            if w != a {
                self.adj[w] |= 1 << a;
                if kv >> w & 1 == 1 {
                    self.kept[w] |= 1 << a;
                }
            }
        }
        self.adj[a] |= nv;
        self.kept[a] |= kv;
        self.adj[a] &= !(1 << a | 1 << v);
        self.kept[a] &= !(1 << a | 1 << v);
        self.adj[v] = 0;
        self.kept[v] = 0;
        self.alive &= !(1 << v);
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

struct Search {
    pat_adj: Vec<u64>,
    pat_edges: usize,
    pat_min_deg: usize,
    memo: HashSet<Vec<u64>>,
}

impl Search {
    fn run(&mut self, mut st: State) -> Option<Vec<Vec<usize>>> {
        if !self.reduce(&mut st) {
            return None;
        }
        let pk = self.pat_adj.len();
        if (st.alive.count_ones() as usize) < pk || st.edge_count() < self.pat_edges {
            return None;
        }
        if let Some(map) = self.embed(&st) {
            return Some(map.into_iter().map(|s| st.sets[s].clone()).collect());
        }
        let mut key = vec![st.alive];
        for v in bits(st.alive) {
            key.push(st.adj[v]);
            key.push(st.kept[v]);
        }
        if !self.memo.insert(key) {
            return None;
        }
        // branch on an undecided edge at a vertex of largest degree
        let u = bits(st.alive)
            .filter(|&v| st.adj[v] & !st.kept[v] & st.alive != 0)
            .max_by_key(|&v| (st.degree(v), std::cmp::Reverse(v)))?;
        let v = bits(st.adj[u] & !st.kept[u] & st.alive).next()?;

        let mut contracted = st.clone();
        contracted.merge(v, u);
        if let Some(found) = self.run(contracted) {
            return Some(found);
        }
        let mut deleted = st.clone();
        deleted.adj[u] &= !(1 << v);
        deleted.adj[v] &= !(1 << u);
        if let Some(found) = self.run(deleted) {
            return Some(found);
        }
        let mut kept = st;
        kept.kept[u] |= 1 << v;
        kept.kept[v] |= 1 << u;
        self.run(kept)
    }

    /// Removes vertices that cannot matter given the pattern's minimum degree and
    /// suppresses degree-2 vertices. Returns false if the state is infeasible.
    fn reduce(&self, st: &mut State) -> bool {
        loop {
            let mut changed = false;
            for v in bits(st.alive) {
                let d = st.degree(v);
                if (d == 0 && self.pat_min_deg >= 1) || (d == 1 && self.pat_min_deg >= 2) {
                    st.delete_vertex(v);
                    changed = true;
                } else if d == 2 && self.pat_min_deg >= 3 {
                    let free = st.adj[v] & !st.kept[v] & st.alive;
                    match bits(free).next() {
                        Some(a) => st.merge(v, a),
                        None => st.delete_vertex(v),
                    }
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Injective map pattern vertex → state vertex preserving pattern edges.
    fn embed(&self, st: &State) -> Option<Vec<usize>> {
        let pk = self.pat_adj.len();
        let mut order: Vec<usize> = (0..pk).collect();
        order.sort_by_key(|&p| std::cmp::Reverse(self.pat_adj[p].count_ones()));
        let mut map = vec![usize::MAX; pk];
        let mut used = 0u64;
        if self.embed_rec(st, &order, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn embed_rec(&self, st: &State, order: &[usize], i: usize, map: &mut [usize], used: &mut u64) -> bool {
        if i == order.len() {
            return true;
        }
        let p = order[i];
        let need = self.pat_adj[p].count_ones() as usize;
        for s in bits(st.alive & !*used) {
            if st.degree(s) < need {
                continue;
            }
            let ok = bits(self.pat_adj[p]).all(|q| map[q] == usize::MAX || st.adj[s] >> map[q] & 1 == 1);
            if !ok {
                continue;
            }
            map[p] = s;
            *used |= 1 << s;
            if self.embed_rec(st, order, i + 1, map, used) {
                return true;
            }
            *used &= !(1 << s);
            map[p] = usize::MAX;
        }
        false
    }
}

/// Brute-force oracle: tries every assignment of vertices to branch sets or "unused".
/// Exponential; intended for graphs with at most 8 vertices.
pub fn has_minor_brute(g: &Multigraph, pattern: &Multigraph) -> bool {
    let n = g.vertex_count();
    let k = pattern.vertex_count();
    let mut assign = vec![0usize; n];
    let vs: Vec<VertexId> = g.vertices().collect();
    loop {
        let mut sets = vec![Vec::new(); k];
        for (i, &a) in assign.iter().enumerate() {
            if a < k {
                sets[a].push(vs[i]);
            }
        }
        if (MinorWitness { branch_sets: sets }).verify(g, pattern) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            assign[i] += 1;
            if assign[i] <= k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Vertices reachable inside `set` from its first element; used by tests.
pub fn is_connected_set(g: &Multigraph, set: &[VertexId]) -> bool {
    let Some(&start) = set.first() else { return false };
    let inside: HashSet<VertexId> = set.iter().copied().collect();
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for e in g.edges() {
            if e.touches(x) {
                let y = e.other(x);
                if inside.contains(&y) && seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen.len() == inside.len()
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn k33_contains_itself() {
        let k33 = complete_bipartite(3, 3);
        let w = has_minor(&k33, &k33, 20).unwrap().unwrap();
        assert!(w.verify(&k33, &k33));
    }

    #[test]
    fn k5_has_no_k33_minor() {
        // five vertices cannot host six disjoint branch sets
        let k5 = complete(5);
        let k33 = complete_bipartite(3, 3);
        assert!(has_minor(&k5, &k33, 20).unwrap().is_none());
        assert!(!has_minor_brute(&k5, &k33));
    }

    #[test]
    fn petersen_has_both_kuratowski_minors() {
        let p = petersen();
        let k33 = complete_bipartite(3, 3);
        let w = has_minor(&p, &k33, 20).unwrap().unwrap();
        assert!(w.verify(&p, &k33));
        let w = has_minor(&p, &complete(5), 20).unwrap().unwrap();
        assert!(w.verify(&p, &complete(5)));
    }

    #[test]
    fn planar_graphs_have_none() {
        let k33 = complete_bipartite(3, 3);
        for g in [wheel(7), cycle(8), complete(4)] {
            assert!(has_minor(&g, &k33, 20).unwrap().is_none());
            assert!(has_minor(&g, &complete(5), 20).unwrap().is_none());
        }
    }

    #[test]
    fn agrees_with_brute_force_on_k4() {
        let k4 = complete(4);
        for g in [wheel(4), cycle(5), complete_bipartite(2, 3), k3n_plus(2), petersen().induced_subgraph(&[0, 1, 2, 3, 4, 5, 6]).unwrap()] {
            let fast = has_minor(&g, &k4, 20).unwrap();
            assert_eq!(fast.is_some(), has_minor_brute(&g, &k4), "{g:?}");
            if let Some(w) = fast {
                assert!(w.verify(&g, &k4));
                assert!(w.branch_sets.iter().all(|s| is_connected_set(&g, s)));
            }
        }
    }

    #[test]
    fn guard_and_pattern_checks() {
        let big = cycle(30);
        assert!(matches!(
            has_minor(&big, &complete(3), 20),
            Err(GraphError::GuardExceeded { .. })
        ));
        assert_eq!(has_minor(&cycle(4), &bundle(2), 20), Err(GraphError::PatternNotSimple));
    }
}
