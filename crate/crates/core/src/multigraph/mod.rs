//! Finite multigraphs with loops and parallel edges.
//!
//! Vertex and edge ids are caller-chosen integers that stay stable under
//! mutation. Insertion order is kept so that text round-trips are exact.

use std::collections::VecDeque;

use indexmap::{IndexMap, IndexSet};
use thiserror::Error;

pub mod connectivity;
pub mod iso;
pub mod minor;
pub mod named;
pub mod subcontraction;

pub use connectivity::{edge_connectivity, CutWitness, EdgeConnectivity};
pub use minor::{has_minor, MinorWitness};
pub use subcontraction::{has_subcontraction, has_subcontraction_with, Multiplicity, SubcontractionWitness};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("edge {0} is a loop and cannot be contracted")]
    LoopContraction(EdgeId),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("{what} search is limited to {limit} vertices, input has {actual}")]
    GuardExceeded { what: &'static str, limit: usize, actual: usize },
    #[error("pattern must be a simple graph")]
    PatternNotSimple,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite `w` (for loops, `w` itself).
    pub fn other(&self, w: VertexId) -> VertexId {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }
}

/// A two-coloring of the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multigraph {
    vertices: IndexSet<VertexId>,
    edges: IndexMap<EdgeId, Edge>,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Vertices `0..n`, no edges.
    pub fn with_vertices(n: usize) -> Self {
        Multigraph { vertices: (0..n).collect(), edges: IndexMap::new() }
    }

    /// Vertices `0..n` and edges numbered in the given order.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Self::with_vertices(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(i, u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, id: VertexId) -> Result<(), GraphError> {
        if !self.vertices.insert(id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        for w in [u, v] {
            if !self.vertices.contains(&w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        if self.edges.contains_key(&id) {
            return Err(GraphError::DuplicateEdge(id));
        }
        self.edges.insert(id, Edge { id, u, v });
        Ok(())
    }

    /// Adds a vertex with the next unused id.
    pub fn new_vertex(&mut self) -> VertexId {
        let id = self.vertices.iter().max().map_or(0, |m| m + 1);
        self.vertices.insert(id);
        id
    }

    /// Adds an edge with the next unused id.
    pub fn new_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        let id = self.edges.keys().max().map_or(0, |m| m + 1);
        self.add_edge(id, u, v)?;
        Ok(id)
    }

    pub fn remove_edge(&mut self, id: EdgeId) -> Result<Edge, GraphError> {
        self.edges.shift_remove(&id).ok_or(GraphError::UnknownEdge(id))
    }

    /// Removes `v` together with its incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        if !self.vertices.shift_remove(&v) {
            return Err(GraphError::UnknownVertex(v));
        }
        self.edges.retain(|_, e| !e.touches(v));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.values()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.get(&id)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    /// Position of `v` in insertion order.
    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.vertices.get_index_of(&v)
    }

    pub fn vertex_at(&self, index: usize) -> Option<VertexId> {
        self.vertices.get_index(index).copied()
    }

    /// Position of edge `e` in insertion order.
    pub fn edge_index(&self, e: EdgeId) -> Option<usize> {
        self.edges.get_index_of(&e)
    }

    pub fn edge_at(&self, index: usize) -> Option<&Edge> {
        self.edges.get_index(index).map(|(_, e)| e)
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.vertices.iter().max().copied()
    }

    pub fn max_edge_id(&self) -> Option<EdgeId> {
        self.edges.keys().max().copied()
    }

    fn check_vertex(&self, v: VertexId) -> Result<usize, GraphError> {
        self.vertices.get_index_of(&v).ok_or(GraphError::UnknownVertex(v))
    }

    /// Loops count twice.
    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .values()
            .map(|e| usize::from(e.u == v) + usize::from(e.v == v))
            .sum())
    }

    /// Degrees aligned with vertex insertion order.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in self.edges.values() {
            deg[self.vertices.get_index_of(&e.u).expect("endpoint")] += 1;
            deg[self.vertices.get_index_of(&e.v).expect("endpoint")] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Incident edge ids in edge order; a loop is listed once.
    pub fn incident_edges(&self, v: VertexId) -> Result<Vec<EdgeId>, GraphError> {
        self.check_vertex(v)?;
        Ok(self.edges.values().filter(|e| e.touches(v)).map(|e| e.id).collect())
    }

    /// Distinct neighbours other than `v` itself, in first-seen order.
    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        self.check_vertex(v)?;
        let mut out = IndexSet::new();
        for e in self.edges.values() {
            if e.touches(v) && !e.is_loop() {
                out.insert(e.other(v));
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Index-based adjacency: for each vertex index, `(edge index, other vertex index)`.
    /// Loops appear once.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (ei, e) in self.edges.values().enumerate() {
            let a = self.vertices.get_index_of(&e.u).expect("endpoint");
            let b = self.vertices.get_index_of(&e.v).expect("endpoint");
            adj[a].push((ei, b));
            if a != b {
                adj[b].push((ei, a));
            }
        }
        adj
    }

    /// Number of edges joining `u` and `v` (loops at `u` when `u == v`).
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.edges
            .values()
            .filter(|e| (e.u == u && e.v == v) || (e.u == v && e.v == u))
            .count()
    }

    pub fn loops_at(&self, v: VertexId) -> usize {
        self.multiplicity(v, v)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.values().any(Edge::is_loop)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for e in self.edges.values() {
            if e.is_loop() || !seen.insert((e.u.min(e.v), e.u.max(e.v))) {
                return false;
            }
        }
        true
    }

    /// Every vertex has even degree. Connectivity is not required.
    pub fn is_eulerian(&self) -> bool {
        self.degrees().iter().all(|d| d % 2 == 0)
    }

    pub fn is_cubic(&self) -> bool {
        self.vertex_count() > 0 && self.degrees().iter().all(|&d| d == 3)
    }

    /// Connected components as vertex lists, each in vertex order.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(_, y) in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        let mut out = vec![Vec::new(); count];
        for (i, &c) in comp.iter().enumerate() {
            out[c].push(self.vertices[i]);
        }
        out
    }

    /// Connected in the usual sense; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Cut edges, in edge order. Loops never qualify.
    pub fn bridges(&self) -> Vec<EdgeId> {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_bridge = vec![false; self.edges.len()];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, edge used to enter, next adjacency index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (x, via, ref mut next)) = stack.last_mut() {
                if *next < adj[x].len() {
                    let (ei, y) = adj[x][*next];
                    *next += 1;
                    if ei == via || x == y {
                        continue;
                    }
                    if disc[y] == usize::MAX {
                        disc[y] = timer;
                        low[y] = timer;
                        timer += 1;
                        stack.push((y, ei, 0));
                    } else {
                        low[x] = low[x].min(disc[y]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[x]);
                        if low[x] > disc[p] {
                            is_bridge[via] = true;
                        }
                    }
                }
            }
        }
        self.edges
            .values()
            .enumerate()
            .filter(|(i, _)| is_bridge[*i])
            .map(|(_, e)| e.id)
            .collect()
    }

    /// A proper two-coloring, if one exists. Loops rule it out.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let side = self.two_color()?;
        let mut b = Bipartition { left: Vec::new(), right: Vec::new() };
        for (i, v) in self.vertices.iter().enumerate() {
            if side[i] == 0 {
                b.left.push(*v);
            } else {
                b.right.push(*v);
            }
        }
        Some(b)
    }

    fn two_color(&self) -> Option<Vec<u8>> {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(_, y) in &adj[x] {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// A shortest odd cycle as a closed vertex sequence (first vertex not repeated),
    /// with the edges used between consecutive vertices. `None` for bipartite graphs.
    pub fn shortest_odd_cycle(&self) -> Option<(Vec<VertexId>, Vec<EdgeId>)> {
        if let Some(e) = self.edges.values().find(|e| e.is_loop()) {
            return Some((vec![e.u], vec![e.id]));
        }
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for s in 0..n {
            // BFS from s; an edge inside one BFS layer closes an odd walk through s
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![(usize::MAX, usize::MAX); n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            let mut order = Vec::new();
            while let Some(x) = queue.pop_front() {
                order.push(x);
                for &(ei, y) in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = (x, ei);
                        queue.push_back(y);
                    }
                }
            }
            for &x in &order {
                for &(ei, y) in &adj[x] {
                    if dist[y] != dist[x] || y <= x {
                        continue;
                    }
                    let len = 2 * dist[x] + 1;
                    if best.as_ref().is_some_and(|(c, _)| c.len() <= len) {
                        continue;
                    }
                    if let Some(cycle) = close_cycle(s, x, y, ei, &parent) {
                        best = Some(cycle);
                    }
                }
            }
        }
        best.map(|(vs, es)| {
            (
                vs.into_iter().map(|i| self.vertices[i]).collect(),
                es.into_iter().map(|i| self.edges[i].id).collect(),
            )
        })
    }

    /// G/X: vertices of X merge into the smallest id of X; edges inside X vanish.
    pub fn identify(&self, x: &[VertexId]) -> Result<Multigraph, GraphError> {
        if x.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        for &v in x {
            self.check_vertex(v)?;
        }
        let set: IndexSet<VertexId> = x.iter().copied().collect();
        let rep = *set.iter().min().expect("nonempty");
        let mut g = Multigraph::new();
        for &v in &self.vertices {
            if v == rep || !set.contains(&v) {
                g.vertices.insert(v);
            }
        }
        for e in self.edges.values() {
            let iu = set.contains(&e.u);
            let iv = set.contains(&e.v);
            if iu && iv {
                continue;
            }
            let u = if iu { rep } else { e.u };
            let v = if iv { rep } else { e.v };
            g.edges.insert(e.id, Edge { id: e.id, u, v });
        }
        Ok(g)
    }

    /// Identify the endpoints of a non-loop edge.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Multigraph, GraphError> {
        let edge = self.edge(e).ok_or(GraphError::UnknownEdge(e))?;
        if edge.is_loop() {
            return Err(GraphError::LoopContraction(e));
        }
        self.identify(&[edge.u, edge.v])
    }

    /// The subgraph induced on `x`, keeping ids.
    pub fn induced_subgraph(&self, x: &[VertexId]) -> Result<Multigraph, GraphError> {
        for &v in x {
            self.check_vertex(v)?;
        }
        let set: IndexSet<VertexId> = x.iter().copied().collect();
        let mut g = Multigraph::new();
        for &v in &self.vertices {
            if set.contains(&v) {
                g.vertices.insert(v);
            }
        }
        for e in self.edges.values() {
            if set.contains(&e.u) && set.contains(&e.v) {
                g.edges.insert(e.id, *e);
            }
        }
        Ok(g)
    }

    /// Quotient by a partition into classes; class `i` becomes vertex `i`.
    /// Every class is identified, so all edges inside a class vanish. Edge ids are kept.
    pub fn quotient(&self, classes: &[Vec<VertexId>]) -> Result<Multigraph, GraphError> {
        let class_of = self.class_map(classes)?;
        let mut g = Multigraph::with_vertices(classes.len());
        for e in self.edges.values() {
            let a = class_of[&e.u];
            let b = class_of[&e.v];
            if a != b {
                g.edges.insert(e.id, Edge { id: e.id, u: a, v: b });
            }
        }
        Ok(g)
    }

    /// Checks that `classes` partitions the vertex set into nonempty parts.
    pub fn class_map(
        &self,
        classes: &[Vec<VertexId>],
    ) -> Result<std::collections::HashMap<VertexId, usize>, GraphError> {
        let mut class_of = std::collections::HashMap::new();
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(GraphError::InvalidPartition(format!("class {i} is empty")));
            }
            for &v in class {
                self.check_vertex(v)?;
                if class_of.insert(v, i).is_some() {
                    return Err(GraphError::InvalidPartition(format!("vertex {v} listed twice")));
                }
            }
        }
        if class_of.len() != self.vertex_count() {
            return Err(GraphError::InvalidPartition("classes do not cover every vertex".into()));
        }
        Ok(class_of)
    }

    /// Drops loops and all but the first of each parallel class.
    pub fn simplified(&self) -> Multigraph {
        let mut g = Multigraph { vertices: self.vertices.clone(), edges: IndexMap::new() };
        let mut seen = std::collections::HashSet::new();
        for e in self.edges.values() {
            if !e.is_loop() && seen.insert((e.u.min(e.v), e.u.max(e.v))) {
                g.edges.insert(e.id, *e);
            }
        }
        g
    }

    /// Renumbers vertices to `0..n` and edges to `0..m` in insertion order.
    pub fn relabeled(&self) -> Multigraph {
        let mut g = Multigraph::with_vertices(self.vertex_count());
        for (i, e) in self.edges.values().enumerate() {
            let u = self.vertices.get_index_of(&e.u).expect("endpoint");
            let v = self.vertices.get_index_of(&e.v).expect("endpoint");
            g.edges.insert(i, Edge { id: i, u, v });
        }
        g
    }

    /// Disjoint union; vertex and edge ids of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let voff = self.max_vertex_id().map_or(0, |m| m + 1);
        let eoff = self.max_edge_id().map_or(0, |m| m + 1);
        let mut g = self.clone();
        for v in other.vertices() {
            g.vertices.insert(v + voff);
        }
        for e in other.edges() {
            let id = e.id + eoff;
            g.edges.insert(id, Edge { id, u: e.u + voff, v: e.v + voff });
        }
        g
    }
}

/// Joins the tree paths from `x` and `y` back to `s` plus the edge `x–y`,
/// returning `None` when the two paths meet before `s`.
fn close_cycle(
    s: usize,
    x: usize,
    y: usize,
    ei: usize,
    parent: &[(usize, usize)],
) -> Option<(Vec<usize>, Vec<usize>)> {
    let path = |mut w: usize| {
        let mut vs = vec![w];
        let mut es = Vec::new();
        while w != s {
            let (p, e) = parent[w];
            es.push(e);
            vs.push(p);
            w = p;
        }
        (vs, es)
    };
    let (px, ex) = path(x);
    let (py, ey) = path(y);
    // both paths end at s; they must be disjoint otherwise
    let sx: std::collections::HashSet<usize> = px[..px.len() - 1].iter().copied().collect();
    if py[..py.len() - 1].iter().any(|w| sx.contains(w)) {
        return None;
    }
    // cycle: s ... x (reverse of px), then y ... s (py without s)
    let mut vs: Vec<usize> = px.iter().rev().copied().collect();
    let mut es: Vec<usize> = ex.iter().rev().copied().collect();
    es.push(ei);
    vs.extend(py[..py.len() - 1].iter().copied());
    es.extend(ey.iter().copied());
    Some((vs, es))
}
