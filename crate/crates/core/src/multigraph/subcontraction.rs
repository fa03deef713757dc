//! Subcontraction testing: is `pattern` obtainable from `g` by identifying vertex sets?
//!
//! Identification sets need not be connected, so this is a search over surjections
//! V(g) → V(pattern). Two readings of the edge condition are offered: `Exact` matches the
//! identification definition (class-to-class multiplicities must agree), `AtLeast` only
//! asks for enough edges between classes.

use std::collections::HashMap;

use super::{GraphError, Multigraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Exact,
    AtLeast,
}

/// Classes indexed like the pattern's vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcontractionWitness {
    pub classes: Vec<Vec<VertexId>>,
}

impl SubcontractionWitness {
    /// Recomputes the identification and compares it with `pattern`.
    pub fn verify(&self, g: &Multigraph, pattern: &Multigraph, mode: Multiplicity) -> bool {
        let Ok(class_of) = g.class_map(&self.classes) else { return false };
        if self.classes.len() != pattern.vertex_count() {
            return false;
        }
        let k = self.classes.len();
        let mut have = vec![vec![0usize; k]; k];
        let mut loops = vec![0usize; k];
        for e in g.edges() {
            let (a, b) = (class_of[&e.u], class_of[&e.v]);
            if e.is_loop() {
                loops[a] += 1;
            } else if a != b {
                have[a][b] += 1;
                have[b][a] += 1;
            }
        }
        let (want, want_loops) = pattern_matrix(pattern);
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                let ok = match mode {
                    Multiplicity::Exact => have[i][j] == want[i][j],
                    Multiplicity::AtLeast => have[i][j] >= want[i][j],
                };
                if !ok {
                    return false;
                }
            }
            if want_loops[i] > 0 {
                // loops survive only at a vertex that is never identified
                let single = self.classes[i].len() == 1;
                let ok = single
                    && match mode {
                        Multiplicity::Exact => loops[i] == want_loops[i],
                        Multiplicity::AtLeast => loops[i] >= want_loops[i],
                    };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

fn pattern_matrix(p: &Multigraph) -> (Vec<Vec<usize>>, Vec<usize>) {
    let k = p.vertex_count();
    let mut m = vec![vec![0usize; k]; k];
    let mut loops = vec![0usize; k];
    for e in p.edges() {
        let a = p.vertex_index(e.u).expect("endpoint");
        let b = p.vertex_index(e.v).expect("endpoint");
        if a == b {
            loops[a] += 1;
        } else {
            m[a][b] += 1;
            m[b][a] += 1;
        }
    }
    (m, loops)
}

/// Identification-based subcontraction (exact multiplicities).
pub fn has_subcontraction(
    g: &Multigraph,
    pattern: &Multigraph,
    guard: usize,
) -> Result<Option<SubcontractionWitness>, GraphError> {
    has_subcontraction_with(g, pattern, Multiplicity::Exact, guard)
}

pub fn has_subcontraction_with(
    g: &Multigraph,
    pattern: &Multigraph,
    mode: Multiplicity,
    guard: usize,
) -> Result<Option<SubcontractionWitness>, GraphError> {
    if g.vertex_count() > guard {
        return Err(GraphError::GuardExceeded { what: "subcontraction", limit: guard, actual: g.vertex_count() });
    }
    let n = g.vertex_count();
    let k = pattern.vertex_count();
    if k == 0 {
        return Ok((n == 0).then(|| SubcontractionWitness { classes: Vec::new() }));
    }
    if n < k {
        return Ok(None);
    }
    let (want, want_loops) = pattern_matrix(pattern);
    let pattern_edges: usize = want.iter().flatten().sum::<usize>() / 2;
    let non_loop_edges = g.edges().filter(|e| !e.is_loop()).count();
    if non_loop_edges < pattern_edges {
        return Ok(None);
    }

    // vertices by decreasing degree so that heavy vertices are placed first
    let degs = g.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(degs[i]), i));
    let mut pos = vec![0; n];
    for (p, &i) in order.iter().enumerate() {
        pos[i] = p;
    }
    // neighbours (with multiplicity) of each vertex, as order positions
    let mut nbrs = vec![Vec::new(); n];
    let mut loops = vec![0usize; n];
    for e in g.edges() {
        let a = pos[g.vertex_index(e.u).expect("endpoint")];
        let b = pos[g.vertex_index(e.v).expect("endpoint")];
        if a == b {
            loops[a] += 1;
        } else {
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
    }
    let mut s = Search {
        n,
        k,
        mode,
        want,
        want_loops,
        nbrs,
        loops,
        assign: vec![usize::MAX; n],
        have: vec![vec![0; k]; k],
        class_size: vec![0; k],
    };
    if !s.rec(0) {
        return Ok(None);
    }
    let mut classes = vec![Vec::new(); k];
    for p in 0..n {
        classes[s.assign[p]].push(g.vertex_at(order[p]).expect("index"));
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    Ok(Some(SubcontractionWitness { classes }))
}

struct Search {
    n: usize,
    k: usize,
    mode: Multiplicity,
    want: Vec<Vec<usize>>,
    want_loops: Vec<usize>,
    nbrs: Vec<Vec<usize>>,
    loops: Vec<usize>,
    assign: Vec<usize>,
    have: Vec<Vec<usize>>,
    class_size: Vec<usize>,
}

impl Search {
    fn rec(&mut self, p: usize) -> bool {
        if p == self.n {
            return self.complete();
        }
        let empty = self.class_size.iter().filter(|&&s| s == 0).count();
        if empty > self.n - p {
            return false;
        }
        for c in 0..self.k {
            // a class that must keep loops stays a singleton holding a looped vertex
            if self.want_loops[c] > 0 && (self.class_size[c] > 0 || !self.loops_ok(c, p)) {
                continue;
            }
            if !self.place(p, c) {
                self.unplace(p, c);
                continue;
            }
            if self.feasible(p + 1) && self.rec(p + 1) {
                return true;
            }
            self.unplace(p, c);
        }
        false
    }

    fn loops_ok(&self, c: usize, p: usize) -> bool {
        match self.mode {
            Multiplicity::Exact => self.loops[p] == self.want_loops[c],
            Multiplicity::AtLeast => self.loops[p] >= self.want_loops[c],
        }
    }

    /// Assigns `p` to class `c`; returns false if an exact count overflows.
    fn place(&mut self, p: usize, c: usize) -> bool {
        self.assign[p] = c;
        self.class_size[c] += 1;
        let mut ok = true;
        for i in 0..self.nbrs[p].len() {
            let q = self.nbrs[p][i];
            let d = self.assign[q];
            if q < p && d != c {
                self.have[c][d] += 1;
                self.have[d][c] += 1;
                if self.mode == Multiplicity::Exact && self.have[c][d] > self.want[c][d] {
                    ok = false;
                }
            }
        }
        // a looped class that receives a second vertex would lose its loops
        if self.class_size[c] > 1 && self.want_loops[c] > 0 {
            ok = false;
        }
        ok
    }

    fn unplace(&mut self, p: usize, c: usize) {
        for i in 0..self.nbrs[p].len() {
            let q = self.nbrs[p][i];
            let d = self.assign[q];
            if q < p && d != c {
                self.have[c][d] -= 1;
                self.have[d][c] -= 1;
            }
        }
        self.class_size[c] -= 1;
        self.assign[p] = usize::MAX;
    }

    /// Upper bound check: can every class pair still reach its required count?
    fn feasible(&self, next: usize) -> bool {
        let mut to_rest = vec![0usize; self.k];
        let mut rest_rest = 0usize;
        for p in next..self.n {
            for &q in &self.nbrs[p] {
                if q < next {
                    to_rest[self.assign[q]] += 1;
                } else if q > p {
                    rest_rest += 1;
                }
            }
        }
        for i in 0..self.k {
            for j in i + 1..self.k {
                if self.have[i][j] + to_rest[i] + to_rest[j] + rest_rest < self.want[i][j] {
                    return false;
                }
            }
        }
        true
    }

    fn complete(&self) -> bool {
        if self.class_size.iter().any(|&s| s == 0) {
            return false;
        }
        for i in 0..self.k {
            for j in i + 1..self.k {
                let ok = match self.mode {
                    Multiplicity::Exact => self.have[i][j] == self.want[i][j],
                    Multiplicity::AtLeast => self.have[i][j] >= self.want[i][j],
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// Exhaustive oracle over all surjections; intended for at most 7 vertices.
pub fn has_subcontraction_brute(g: &Multigraph, pattern: &Multigraph, mode: Multiplicity) -> bool {
    let n = g.vertex_count();
    let k = pattern.vertex_count();
    if n < k || k == 0 {
        return n == 0 && k == 0;
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut assign = vec![0usize; n];
    loop {
        let mut classes = vec![Vec::new(); k];
        for (i, &a) in assign.iter().enumerate() {
            classes[a].push(vs[i]);
        }
        if classes.iter().all(|c| !c.is_empty())
            && (SubcontractionWitness { classes }).verify(g, pattern, mode)
        {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            assign[i] += 1;
            if assign[i] < k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Class index per vertex for a witness; convenience for callers building quotients.
pub fn class_lookup(w: &SubcontractionWitness) -> HashMap<VertexId, usize> {
    let mut m = HashMap::new();
    for (i, c) in w.classes.iter().enumerate() {
        for &v in c {
            m.insert(v, i);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn k4_onto_w3_is_identity() {
        let w = has_subcontraction(&complete(4), &wheel(3), 16).unwrap().unwrap();
        assert!(w.verify(&complete(4), &wheel(3), Multiplicity::Exact));
        assert!(w.classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn k33_onto_k4_depends_on_reading() {
        let k33 = complete_bipartite(3, 3);
        let k4 = complete(4);
        // merging two vertices of one side doubles edges, so exact counts never match
        assert!(has_subcontraction(&k33, &k4, 16).unwrap().is_none());
        assert!(!has_subcontraction_brute(&k33, &k4, Multiplicity::Exact));
        let w = has_subcontraction_with(&k33, &k4, Multiplicity::AtLeast, 16).unwrap().unwrap();
        assert!(w.verify(&k33, &k4, Multiplicity::AtLeast));
        assert!(has_subcontraction_brute(&k33, &k4, Multiplicity::AtLeast));
    }

    #[test]
    fn c6_has_no_k4() {
        for mode in [Multiplicity::Exact, Multiplicity::AtLeast] {
            assert!(has_subcontraction_with(&cycle(6), &complete(4), mode, 16).unwrap().is_none());
            assert!(!has_subcontraction_brute(&cycle(6), &complete(4), mode));
        }
    }

    #[test]
    fn doubled_edge_blocks_exact_match() {
        let mut g = complete(4);
        g.add_edge(6, 0, 1).unwrap();
        assert!(has_subcontraction(&g, &complete(4), 16).unwrap().is_none());
        assert!(has_subcontraction_with(&g, &complete(4), Multiplicity::AtLeast, 16).unwrap().is_some());
    }

    #[test]
    fn odd_wheel_inside_petersen() {
        let p = petersen();
        let w = has_subcontraction(&p, &wheel(5), 16).unwrap().unwrap();
        assert!(w.verify(&p, &wheel(5), Multiplicity::Exact));
    }

    #[test]
    fn loops_need_singletons() {
        let mut pat = Multigraph::with_vertices(2);
        pat.add_edge(0, 0, 1).unwrap();
        pat.add_edge(1, 0, 0).unwrap();
        let mut g = path(3);
        assert!(has_subcontraction(&g, &pat, 16).unwrap().is_none());
        g.add_edge(5, 0, 0).unwrap();
        let w = has_subcontraction(&g, &pat, 16).unwrap().unwrap();
        assert!(w.verify(&g, &pat, Multiplicity::Exact));
    }

    #[test]
    fn guard() {
        assert!(matches!(
            has_subcontraction(&cycle(20), &complete(3), 16),
            Err(GraphError::GuardExceeded { .. })
        ));
    }
}
