//! Planarization of polyline drawings with exact intersection points.

use std::collections::HashMap;

use indexmap::IndexMap;

use crate::geometry::{intersect, on_segment, param, sort_clockwise, strictly_inside_ccw, Point, SegHit, Q};
use crate::multigraph::{EdgeId, Multigraph, VertexId};

use super::{DartId, DrawingError, PlanarizedDrawing, PvId, PvKind};

/// Vertex positions and, per edge, its endpoints and interior bend points.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PolylineDrawing {
    pub vertices: IndexMap<VertexId, Point>,
    pub edges: IndexMap<EdgeId, (VertexId, VertexId, Vec<Point>)>,
}

impl PolylineDrawing {
    pub fn graph(&self) -> Result<Multigraph, DrawingError> {
        let mut g = Multigraph::new();
        for &v in self.vertices.keys() {
            g.add_vertex(v)?;
        }
        for (&e, &(u, v, _)) in &self.edges {
            g.add_edge(e, u, v)?;
        }
        Ok(g)
    }

    /// Full point sequence of an edge, endpoints included.
    pub fn polyline(&self, e: EdgeId) -> Option<Vec<Point>> {
        let (u, v, bends) = self.edges.get(&e)?;
        let mut pts = vec![self.vertices.get(u)?.clone()];
        pts.extend(bends.iter().cloned());
        pts.push(self.vertices.get(v)?.clone());
        Some(pts)
    }

    /// Applies `p ↦ (a·x + b·y + c, d·x + e·y + f)` to every point.
    pub fn transformed(&self, m: [&Q; 6]) -> PolylineDrawing {
        let f = |p: &Point| Point::new(m[0] * &p.x + m[1] * &p.y + m[2], m[3] * &p.x + m[4] * &p.y + m[5]);
        PolylineDrawing {
            vertices: self.vertices.iter().map(|(&v, p)| (v, f(p))).collect(),
            edges: self.edges.iter().map(|(&e, (u, v, b))| (e, (*u, *v, b.iter().map(f).collect()))).collect(),
        }
    }
}

struct Piece {
    edge: usize,
    k: usize,
    a: Point,
    b: Point,
}

pub fn ingest_polylines(p: &PolylineDrawing) -> Result<PlanarizedDrawing, DrawingError> {
    let graph = p.graph()?;
    let mut at_point: HashMap<Point, VertexId> = HashMap::new();
    for (&v, pt) in &p.vertices {
        if let Some(&w) = at_point.get(pt) {
            return Err(DrawingError::SamePoint(w, v));
        }
        at_point.insert(pt.clone(), v);
    }
    let edge_ids: Vec<EdgeId> = p.edges.keys().copied().collect();
    let lines: Vec<Vec<Point>> = edge_ids.iter().map(|&e| p.polyline(e).expect("checked endpoints")).collect();
    let mut pieces = Vec::new();
    for (ei, pts) in lines.iter().enumerate() {
        for k in 0..pts.len() - 1 {
            if pts[k] == pts[k + 1] {
                return Err(DrawingError::Polyline(edge_ids[ei]));
            }
            pieces.push(Piece { edge: ei, k, a: pts[k].clone(), b: pts[k + 1].clone() });
        }
    }
    // no curve may pass through a vertex image except at its own ends
    for pc in &pieces {
        let last = lines[pc.edge].len() - 2;
        let (u, v, _) = p.edges[pc.edge];
        for (&w, pt) in &p.vertices {
            if on_segment(pt, &pc.a, &pc.b) {
                let ok = (*pt == pc.a && pc.k == 0 && w == u) || (*pt == pc.b && pc.k == last && w == v);
                if !ok {
                    return Err(DrawingError::CurveThroughVertex(edge_ids[pc.edge], w));
                }
            }
        }
    }
    // cut points per piece
    let mut cuts: Vec<Vec<Point>> = vec![Vec::new(); pieces.len()];
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            let (a, b) = (&pieces[i], &pieces[j]);
            match intersect(&a.a, &a.b, &b.a, &b.b) {
                SegHit::Disjoint => {}
                SegHit::Overlap => return Err(DrawingError::Overlap(edge_ids[a.edge], edge_ids[b.edge])),
                SegHit::Point(x) => {
                    if at_point.contains_key(&x) {
                        continue;
                    }
                    if a.edge == b.edge {
                        let n = lines[a.edge].len() - 1;
                        let consecutive = b.k == a.k + 1 || (a.k == 0 && b.k == n - 1 && n > 2);
                        if consecutive && (x == a.b || x == a.a) && (x == b.a || x == b.b) {
                            continue;
                        }
                    }
                    cuts[i].push(x.clone());
                    cuts[j].push(x);
                }
            }
        }
    }
    // a cut at the far end of a piece belongs to the next piece of the same curve
    let mut normalized: Vec<Vec<(Q, Point)>> = vec![Vec::new(); pieces.len()];
    for i in 0..pieces.len() {
        for x in std::mem::take(&mut cuts[i]) {
            let pc = &pieces[i];
            if x == pc.b {
                normalized[i + 1].push((Q::from_integer(0.into()), x));
            } else {
                normalized[i].push((param(&x, &pc.a, &pc.b), x));
            }
        }
    }
    for c in &mut normalized {
        c.sort();
        c.dedup();
    }

    let mut kinds: Vec<PvKind> = p.vertices.keys().map(|&v| PvKind::Normal(v)).collect();
    let mut pv_at: HashMap<Point, PvId> = p.vertices.values().enumerate().map(|(i, pt)| (pt.clone(), i)).collect();
    let mut segs: Vec<(PvId, PvId)> = Vec::new();
    let mut entries: Vec<Vec<(Point, DartId)>> = vec![Vec::new(); kinds.len()];
    let mut trails: IndexMap<EdgeId, Vec<DartId>> = IndexMap::new();
    // segment covering each bend point, for locating the outer face
    let mut bend_seg: HashMap<(usize, usize), usize> = HashMap::new();
    let mut piece_base = 0;
    for (ei, pts) in lines.iter().enumerate() {
        let (u, _, _) = p.edges[ei];
        let n = pts.len() - 1;
        let mut trail = Vec::new();
        let mut start_pv = pv_at[&p.vertices[&u]];
        let mut start_dir = pts[1].sub(&pts[0]);
        for k in 0..n {
            if k > 0 {
                // the open segment is the next one this walk closes
                bend_seg.insert((ei, k), segs.len());
            }
            for (_, x) in &normalized[piece_base + k] {
                let back = if *x == pts[k] { pts[k - 1].sub(x) } else { pts[k].sub(x) };
                let here = *pv_at.entry(x.clone()).or_insert_with(|| {
                    kinds.push(PvKind::Crossing);
                    entries.push(Vec::new());
                    kinds.len() - 1
                });
                let s = segs.len();
                segs.push((start_pv, here));
                entries[start_pv].push((start_dir.clone(), 2 * s));
                entries[here].push((back, 2 * s + 1));
                trail.push(2 * s);
                start_pv = here;
                start_dir = pts[k + 1].sub(x);
                if *x == pts[k] && k > 0 {
                    bend_seg.remove(&(ei, k));
                }
            }
        }
        let (_, v, _) = p.edges[ei];
        let end_pv = pv_at[&p.vertices[&v]];
        let s = segs.len();
        segs.push((start_pv, end_pv));
        entries[start_pv].push((start_dir, 2 * s));
        entries[end_pv].push((pts[n - 1].sub(&pts[n]), 2 * s + 1));
        trail.push(2 * s);
        trails.insert(edge_ids[ei], trail);
        piece_base += n;
    }
    let mut rot = Vec::with_capacity(entries.len());
    for mut ent in entries.iter().cloned() {
        sort_clockwise(&mut ent);
        let mut r: Vec<DartId> = ent.into_iter().map(|(_, d)| d).collect();
        if let Some(m) = r.iter().enumerate().min_by_key(|x| x.1).map(|x| x.0) {
            r.rotate_left(m);
        }
        rot.push(r);
    }

    let outer = if segs.is_empty() {
        None
    } else {
        Some(outer_dart(p, &lines, &pv_at, &entries, &bend_seg))
    };
    PlanarizedDrawing::from_parts(kinds, segs, rot, trails, graph, outer)
}

fn outer_dart(
    p: &PolylineDrawing,
    lines: &[Vec<Point>],
    pv_at: &HashMap<Point, PvId>,
    entries: &[Vec<(Point, DartId)>],
    bend_seg: &HashMap<(usize, usize), usize>,
) -> DartId {
    let mut best: Option<(Point, Option<(usize, usize)>)> = None;
    for pt in p.vertices.values() {
        if best.as_ref().map_or(true, |(b, _)| pt < b) {
            best = Some((pt.clone(), None));
        }
    }
    for (ei, pts) in lines.iter().enumerate() {
        for k in 1..pts.len() - 1 {
            if best.as_ref().map_or(true, |(b, _)| pts[k] < *b) {
                best = Some((pts[k].clone(), Some((ei, k))));
            }
        }
    }
    let (pt, bend) = best.expect("some point");
    let mut local: Vec<(Point, DartId)> = match (pv_at.get(&pt), bend) {
        (Some(&v), _) => entries[v].clone(),
        (None, Some((ei, k))) => {
            let s = bend_seg[&(ei, k)];
            let pts = &lines[ei];
            vec![(pts[k + 1].sub(&pt), 2 * s), (pts[k - 1].sub(&pt), 2 * s + 1)]
        }
        (None, None) => unreachable!("vertex points are planar vertices"),
    };
    sort_clockwise(&mut local);
    let west = Point::int(-1, 0);
    let n = local.len();
    for i in 0..n {
        let (d1, d2) = (&local[i], &local[(i + 1) % n]);
        // clockwise sweep d1 → d2 is the counter-clockwise sweep d2 → d1
        if strictly_inside_ccw(&d2.0, &d1.0, &west) {
            return d2.1;
        }
    }
    unreachable!("the westward direction lies in some wedge")
}
