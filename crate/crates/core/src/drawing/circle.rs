//! Convex-position drawings: vertices on a rational circle, edges as chords.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{q, qf, Point, Q};
use crate::multigraph::{Multigraph, VertexId};

use super::{ingest_polylines, DrawingError, PlanarizedDrawing, PolylineDrawing};

const MAX_ATTEMPTS: usize = 1000;

/// Rational point on the unit circle at parameter `t` (`t = tan(θ/2)`).
fn on_circle(t: &Q) -> Point {
    let t2 = t * t;
    let den = q(1) + &t2;
    Point::new((q(1) - &t2) / &den, (q(2) * t) / den)
}

/// Increasing circle parameters for `n` points, roughly evenly spread.
fn parameters(n: usize, attempt: usize) -> Vec<Q> {
    let den: i64 = 64 + 8 * attempt as i64;
    let fine: i64 = 97;
    let mut rng = ChaCha8Rng::seed_from_u64(attempt as u64);
    let mut out: Vec<Q> = Vec::with_capacity(n);
    for i in 0..n {
        let theta = -std::f64::consts::PI + 2.0 * std::f64::consts::PI * (i as f64 + 0.5) / n as f64;
        let base = ((theta / 2.0).tan() * den as f64).round() as i64 * fine;
        let jitter = if attempt == 0 { 0 } else { rng.gen_range(0..fine / 4) };
        let mut t = qf(base + jitter, den * fine);
        if let Some(prev) = out.last() {
            if t <= *prev {
                t = prev + qf(1, den * fine);
            }
        }
        out.push(t);
    }
    out
}

/// `n` points counter-clockwise on the unit circle; later attempts jitter them.
pub(crate) fn circle_points(n: usize, attempt: usize) -> Vec<Point> {
    parameters(n, attempt).iter().map(on_circle).collect()
}

fn layout(g: &Multigraph, order: &[VertexId], attempt: usize) -> PolylineDrawing {
    let n = order.len();
    let ts = parameters(n, attempt);
    let mut p = PolylineDrawing::default();
    let mut pos: HashMap<VertexId, Point> = HashMap::new();
    for (i, &v) in order.iter().enumerate() {
        pos.insert(v, on_circle(&ts[i]));
    }
    for v in g.vertices() {
        p.vertices.insert(v, pos[&v].clone());
    }
    let max_mult = g
        .edges()
        .map(|e| g.multiplicity(e.u, e.v))
        .max()
        .unwrap_or(1);
    let eps = qf(1, 8 * n.max(1) as i64);
    let mut copies: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for e in g.edges() {
        let key = (e.u.min(e.v), e.u.max(e.v));
        let j = *copies.entry(key).and_modify(|c| *c += 1).or_insert(0);
        let a = &pos[&e.u];
        if e.is_loop() {
            // a thin triangle outside the circle; later loops nest inside earlier ones
            let k = q(j as i64 + 1);
            let tangent = a.perp().scale(&(q(1) / &k));
            let r = &eps / &k;
            let p1 = a.add(&a.add(&tangent).scale(&r));
            let p2 = a.add(&a.sub(&tangent).scale(&r));
            p.edges.insert(e.id, (e.u, e.v, vec![p1, p2]));
        } else if j == 0 {
            p.edges.insert(e.id, (e.u, e.v, Vec::new()));
        } else {
            let b = &pos[&e.v];
            let mid = a.add(b).scale(&qf(1, 2));
            let mut normal = b.sub(a).perp();
            if crate::geometry::dot(&normal, &mid) > q(0) {
                normal = normal.neg();
            }
            let s = qf(j as i64, 4 * (max_mult as i64 + 1));
            p.edges.insert(e.id, (e.u, e.v, vec![mid.add(&normal.scale(&s))]));
        }
    }
    p
}

/// No crossing of three or more passes and no crossing at a bend point.
fn is_generic(p: &PolylineDrawing, d: &PlanarizedDrawing) -> bool {
    if d.crossings().any(|x| d.degree(x) != 4) {
        return false;
    }
    let bends: HashSet<&Point> = p.edges.values().flat_map(|(_, _, b)| b.iter()).collect();
    if bends.len() != p.edges.values().map(|(_, _, b)| b.len()).sum::<usize>() {
        return false;
    }
    bends.iter().all(|b| !bend_on_other_curve(p, b))
}

fn bend_on_other_curve(p: &PolylineDrawing, b: &Point) -> bool {
    let mut hits = 0;
    for &e in p.edges.keys() {
        let pts = p.polyline(e).expect("endpoints");
        for w in pts.windows(2) {
            if crate::geometry::on_segment(b, &w[0], &w[1]) {
                hits += 1;
            }
        }
    }
    // the bend itself lies on its two own pieces
    hits > 2
}

/// Places `order` counter-clockwise on a circle: straight chords, parallel copies bent
/// toward the centre, loops as small triangles outside. Perturbs positions until every
/// crossing involves exactly two passes.
pub fn circle_drawing(g: &Multigraph, order: &[VertexId]) -> Result<PolylineDrawing, DrawingError> {
    check_order(g, order)?;
    for attempt in 0..MAX_ATTEMPTS {
        let p = layout(g, order, attempt);
        if let Ok(d) = ingest_polylines(&p) {
            if is_generic(&p, &d) {
                return Ok(p);
            }
        } else if !g.is_connected() {
            return Err(DrawingError::Disconnected);
        }
    }
    Err(DrawingError::Perturbation(MAX_ATTEMPTS))
}

/// `circle_drawing` followed by ingestion.
pub fn circle_planarized(g: &Multigraph, order: &[VertexId]) -> Result<PlanarizedDrawing, DrawingError> {
    ingest_polylines(&circle_drawing(g, order)?)
}

fn check_order(g: &Multigraph, order: &[VertexId]) -> Result<(), DrawingError> {
    let mut a: Vec<VertexId> = order.to_vec();
    a.sort_unstable();
    let mut b: Vec<VertexId> = g.vertices().collect();
    b.sort_unstable();
    if a != b {
        return Err(DrawingError::BadOrder);
    }
    Ok(())
}
