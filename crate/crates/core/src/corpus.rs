//! Graph and drawing generators for tests, experiments and the `gen` command.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::drawing::{circle_planarized, ingest_polylines, PlanarizedDrawing, PolylineDrawing};
use crate::geometry::Point;
use crate::multigraph::iso::canonical_form;
use crate::multigraph::{Multigraph, VertexId};

/// Connected multigraph on `n` vertices with `m >= n - 1` edges: a random tree plus random
/// extra edges (loops only when `loops` is set).
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, m: usize, loops: bool) -> Multigraph {
    let mut edges = Vec::with_capacity(m);
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    while edges.len() < m {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v || loops {
            edges.push((u.min(v), u.max(v)));
        }
    }
    Multigraph::from_edges(n, &edges).expect("valid endpoints")
}

/// Simple connected graph with edge probability `p`, retried until connected.
pub fn random_simple_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Multigraph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Multigraph::from_edges(n, &edges).expect("valid endpoints");
        if g.is_connected() {
            return g;
        }
    }
}

/// `count` connected multigraphs with at most `max_n` vertices and `max_m` edges, loops included.
pub fn small_multigraphs<R: Rng>(rng: &mut R, count: usize, max_n: usize, max_m: usize) -> Vec<Multigraph> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let m = rng.gen_range(n - 1..=max_m.max(n - 1));
            random_connected(rng, n, m, true)
        })
        .collect()
}

/// Bridgeless connected multigraph without loops.
pub fn random_bridgeless<R: Rng>(rng: &mut R, n: usize) -> Multigraph {
    loop {
        let m = rng.gen_range(n..=2 * n + 2);
        let g = random_connected(rng, n, m, false);
        if g.bridges().is_empty() {
            return g;
        }
    }
}

/// Multigraph of minimum degree at least 2 (possibly disconnected, possibly with loops).
pub fn random_leafless<R: Rng>(rng: &mut R, n: usize) -> Multigraph {
    loop {
        let m = rng.gen_range(n..=2 * n + 2);
        let mut edges = Vec::new();
        for _ in 0..m {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            edges.push((u.min(v), u.max(v)));
        }
        let g = Multigraph::from_edges(n, &edges).expect("valid endpoints");
        if g.min_degree() >= 2 {
            return g;
        }
    }
}

/// All connected simple cubic graphs on 4, 6, ..., `max_n` vertices up to isomorphism.
///
/// Cubic multigraphs with loops are grown from the two on two vertices by joining the midpoints of two
/// edges (or two points of one edge); the simple ones are kept at the end.
pub fn connected_cubic_graphs(max_n: usize) -> Vec<Vec<Multigraph>> {
    let mut level = vec![
        Multigraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).expect("theta"),
        Multigraph::from_edges(2, &[(0, 0), (0, 1), (1, 1)]).expect("dumbbell"),
    ];
    let mut out = Vec::new();
    let mut n = 2;
    while n + 2 <= max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let edges: Vec<(VertexId, VertexId)> = g.edges().map(|e| (e.u, e.v)).collect();
            for i in 0..edges.len() {
                for j in i..edges.len() {
                    let (a, b) = (n, n + 1);
                    let mut grown: Vec<(VertexId, VertexId)> = Vec::new();
                    for (k, &(u, v)) in edges.iter().enumerate() {
                        if k == i && k == j {
                            grown.extend([(u, a), (a, b), (b, v)]);
                        } else if k == i {
                            grown.extend([(u, a), (a, v)]);
                        } else if k == j {
                            grown.extend([(u, b), (b, v)]);
                        } else {
                            grown.push((u, v));
                        }
                    }
                    grown.push((a, b));
                    let h = Multigraph::from_edges(n + 2, &grown).expect("valid endpoints");
                    if seen.insert(canonical_form(&h)) {
                        next.push(h);
                    }
                }
            }
        }
        level = next;
        n += 2;
        out.push(level.iter().filter(|g| g.is_simple()).cloned().collect());
    }
    out
}

/// Random polyline drawing of `g` on the integer grid `[0, size]^2`, each edge with up to
/// `max_bends` bends (loops get at least two). Redraws until the drawing is valid.
pub fn random_polyline<R: Rng>(rng: &mut R, g: &Multigraph, size: i64, max_bends: usize) -> Option<(PolylineDrawing, PlanarizedDrawing)> {
    let pt = |rng: &mut R| Point::int(rng.gen_range(0..=size), rng.gen_range(0..=size));
    for _ in 0..2000 {
        let mut p = PolylineDrawing::default();
        let mut used = HashSet::new();
        for v in g.vertices() {
            let mut x = pt(rng);
            while !used.insert(x.clone()) {
                x = pt(rng);
            }
            p.vertices.insert(v, x);
        }
        for e in g.edges() {
            let lo = if e.is_loop() { 2 } else { 0 };
            let k = rng.gen_range(lo..=max_bends.max(lo));
            let bends = (0..k).map(|_| pt(rng)).collect();
            p.edges.insert(e.id, (e.u, e.v, bends));
        }
        if let Ok(d) = ingest_polylines(&p) {
            return Some((p, d));
        }
    }
    None
}

/// Convex-position drawing with a random vertex order.
pub fn random_circle<R: Rng>(rng: &mut R, g: &Multigraph) -> Option<PlanarizedDrawing> {
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.shuffle(rng);
    circle_planarized(g, &order).ok()
}

/// Drawing on a coarse grid, so touchings, crossings of three or more passes, repeated
/// crossings and crossing loops are frequent.
pub fn adversarial_drawing<R: Rng>(rng: &mut R) -> PlanarizedDrawing {
    loop {
        let n = rng.gen_range(2..=5);
        let m = rng.gen_range(n..=n + 4);
        let loops = rng.gen_bool(0.4);
        let g = random_connected(rng, n, m, loops);
        if let Some((_, d)) = random_polyline(rng, &g, 4, 2) {
            return d;
        }
    }
}
