//! Drawings as combinatorial maps of their planarization.
//!
//! Segment `s` owns darts `2s` (leaving its first end) and `2s + 1` (leaving its second end).
//! Rotations list the darts leaving each planar vertex in clockwise order. The face to the
//! left of dart `d` is traced by `succ(d) = cw_next(twin(d))`.

use std::collections::HashMap;

use indexmap::IndexMap;
use thiserror::Error;

use crate::multigraph::{EdgeId, GraphError, Multigraph, VertexId};

pub mod circle;
pub mod editor;
pub mod faces;
pub mod good;
pub mod ingest;
pub mod place;

pub use circle::{circle_drawing, circle_planarized};
pub use editor::MapEditor;
pub use faces::{DualGraph, FaceId, FaceStructure};
pub use good::{crossing_triples, find_violations, is_good_drawing, Violation, ViolationKind};
pub use ingest::{ingest_polylines, PolylineDrawing};
pub use place::place_vertex_at_crossing;

pub type PvId = usize;
pub type SegId = usize;
pub type DartId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PvKind {
    Normal(VertexId),
    Crossing,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("dart {0} is out of range")]
    BadDart(DartId),
    #[error("segment {0} refers to unknown planar vertex")]
    BadSegment(SegId),
    #[error("rotation at planar vertex {0} is not the set of darts leaving it")]
    Rotation(PvId),
    #[error("crossing vertex {0} has degree {1}, expected an even degree of at least 4")]
    CrossingDegree(PvId, usize),
    #[error("original vertex {0} has no unique normal planar vertex")]
    NormalVertex(VertexId),
    #[error("trail of edge {0} is broken")]
    TrailBroken(EdgeId),
    #[error("trail of edge {0} does not join its endpoints")]
    TrailEnds(EdgeId),
    #[error("trail of edge {0} passes through a normal vertex")]
    ThroughVertex(EdgeId),
    #[error("segment {0} is not covered by exactly one trail")]
    SegmentCover(SegId),
    #[error("planarization is disconnected")]
    Disconnected,
    #[error("Euler's formula fails: V={v}, E={e}, F={f}")]
    Euler { v: usize, e: usize, f: usize },
    #[error("outer face reference is invalid")]
    Outer,
    #[error("polyline of edge {0} is malformed")]
    Polyline(EdgeId),
    #[error("edges {0} and {1} overlap along a segment")]
    Overlap(EdgeId, EdgeId),
    #[error("edge {0} passes through the image of vertex {1}")]
    CurveThroughVertex(EdgeId, VertexId),
    #[error("vertices {0} and {1} are drawn at the same point")]
    SamePoint(VertexId, VertexId),
    #[error("planar vertex {0} is not a 4-valent crossing of two distinct edges")]
    NotSimpleCrossing(PvId),
    #[error("vertex order is not a permutation of the graph's vertices")]
    BadOrder,
    #[error("circle drawing did not settle after {0} perturbations")]
    Perturbation(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A validated combinatorial map of a drawing's planarization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarizedDrawing {
    kinds: Vec<PvKind>,
    segs: Vec<(PvId, PvId)>,
    rot: Vec<Vec<DartId>>,
    /// Darts along each original edge from the image of `u` to the image of `v`.
    trails: IndexMap<EdgeId, Vec<DartId>>,
    underlying: Multigraph,
    outer: Option<DartId>,
    pos: Vec<usize>,
    owner: Vec<(EdgeId, usize)>,
    normal_of: HashMap<VertexId, PvId>,
}

pub fn twin(d: DartId) -> DartId {
    d ^ 1
}

pub fn seg_of(d: DartId) -> SegId {
    d / 2
}

impl PlanarizedDrawing {
    /// Validates all map invariants. `outer` is any dart on the outer face (`None` only
    /// for a map without segments).
    pub fn from_parts(
        kinds: Vec<PvKind>,
        segs: Vec<(PvId, PvId)>,
        rot: Vec<Vec<DartId>>,
        trails: IndexMap<EdgeId, Vec<DartId>>,
        underlying: Multigraph,
        outer: Option<DartId>,
    ) -> Result<Self, DrawingError> {
        let p = kinds.len();
        let nd = 2 * segs.len();
        for (s, &(a, b)) in segs.iter().enumerate() {
            if a >= p || b >= p {
                return Err(DrawingError::BadSegment(s));
            }
        }
        if rot.len() != p {
            return Err(DrawingError::Rotation(rot.len().min(p)));
        }
        let origin = |d: DartId| if d % 2 == 0 { segs[d / 2].0 } else { segs[d / 2].1 };
        let mut pos = vec![usize::MAX; nd];
        for (v, r) in rot.iter().enumerate() {
            for (i, &d) in r.iter().enumerate() {
                if d >= nd {
                    return Err(DrawingError::BadDart(d));
                }
                if origin(d) != v || pos[d] != usize::MAX {
                    return Err(DrawingError::Rotation(v));
                }
                pos[d] = i;
            }
        }
        if let Some(d) = pos.iter().position(|&x| x == usize::MAX) {
            return Err(DrawingError::Rotation(origin(d)));
        }
        let mut normal_of = HashMap::new();
        for (v, k) in kinds.iter().enumerate() {
            match *k {
                PvKind::Normal(x) => {
                    if !underlying.contains_vertex(x) || normal_of.insert(x, v).is_some() {
                        return Err(DrawingError::NormalVertex(x));
                    }
                }
                PvKind::Crossing => {
                    let deg = rot[v].len();
                    if deg < 4 || deg % 2 != 0 {
                        return Err(DrawingError::CrossingDegree(v, deg));
                    }
                }
            }
        }
        if let Some(x) = underlying.vertices().find(|x| !normal_of.contains_key(x)) {
            return Err(DrawingError::NormalVertex(x));
        }
        let mut owner = vec![(usize::MAX, 0); nd];
        if trails.len() != underlying.edge_count() {
            return Err(DrawingError::TrailEnds(
                underlying.edges().map(|e| e.id).find(|e| !trails.contains_key(e)).unwrap_or(0),
            ));
        }
        for (&e, tr) in &trails {
            let edge = underlying.edge(e).ok_or(DrawingError::TrailEnds(e))?;
            if tr.is_empty() {
                return Err(DrawingError::TrailBroken(e));
            }
            for (i, &d) in tr.iter().enumerate() {
                if d >= nd {
                    return Err(DrawingError::BadDart(d));
                }
                if owner[d].0 != usize::MAX || owner[twin(d)].0 != usize::MAX {
                    return Err(DrawingError::SegmentCover(seg_of(d)));
                }
                owner[d] = (e, i);
                owner[twin(d)] = (e, i);
                if i > 0 {
                    let here = origin(d);
                    if origin(twin(tr[i - 1])) != here {
                        return Err(DrawingError::TrailBroken(e));
                    }
                    if kinds[here] != PvKind::Crossing {
                        return Err(DrawingError::ThroughVertex(e));
                    }
                }
            }
            let start = origin(tr[0]);
            let end = origin(twin(*tr.last().expect("non-empty")));
            if start != normal_of[&edge.u] || end != normal_of[&edge.v] {
                return Err(DrawingError::TrailEnds(e));
            }
        }
        if let Some(d) = owner.iter().position(|o| o.0 == usize::MAX) {
            return Err(DrawingError::SegmentCover(seg_of(d)));
        }
        let mut d = PlanarizedDrawing { kinds, segs, rot, trails, underlying, outer, pos, owner, normal_of };
        d.check_global()?;
        Ok(d)
    }

    fn check_global(&mut self) -> Result<(), DrawingError> {
        let p = self.kinds.len();
        // connectivity of the planarization
        let mut seen = vec![false; p];
        let mut stack = vec![0];
        if p > 0 {
            seen[0] = true;
        }
        while let Some(v) = stack.pop() {
            for &d in &self.rot[v] {
                let w = self.origin(twin(d));
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(DrawingError::Disconnected);
        }
        match self.outer {
            None if !self.segs.is_empty() => return Err(DrawingError::Outer),
            Some(d) if d >= self.dart_count() => return Err(DrawingError::Outer),
            _ => {}
        }
        let f = self.faces().len();
        let (v, e) = (p, self.segs.len());
        if v + f != e + 2 {
            return Err(DrawingError::Euler { v, e, f });
        }
        Ok(())
    }

    pub fn pv_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn seg_count(&self) -> usize {
        self.segs.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.segs.len()
    }

    pub fn kind(&self, v: PvId) -> PvKind {
        self.kinds[v]
    }

    pub fn kinds(&self) -> &[PvKind] {
        &self.kinds
    }

    pub fn segment(&self, s: SegId) -> (PvId, PvId) {
        self.segs[s]
    }

    pub fn segments(&self) -> &[(PvId, PvId)] {
        &self.segs
    }

    pub fn rotation(&self, v: PvId) -> &[DartId] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<DartId>] {
        &self.rot
    }

    pub fn trails(&self) -> &IndexMap<EdgeId, Vec<DartId>> {
        &self.trails
    }

    pub fn trail(&self, e: EdgeId) -> Option<&[DartId]> {
        self.trails.get(&e).map(|t| t.as_slice())
    }

    pub fn underlying(&self) -> &Multigraph {
        &self.underlying
    }

    pub fn outer_dart(&self) -> Option<DartId> {
        self.outer
    }

    pub fn degree(&self, v: PvId) -> usize {
        self.rot[v].len()
    }

    pub fn is_crossing(&self, v: PvId) -> bool {
        self.kinds[v] == PvKind::Crossing
    }

    pub fn crossings(&self) -> impl Iterator<Item = PvId> + '_ {
        (0..self.kinds.len()).filter(|&v| self.is_crossing(v))
    }

    pub fn normal_pv(&self, x: VertexId) -> Option<PvId> {
        self.normal_of.get(&x).copied()
    }

    pub fn origin(&self, d: DartId) -> PvId {
        let (a, b) = self.segs[d / 2];
        if d % 2 == 0 {
            a
        } else {
            b
        }
    }

    pub fn head(&self, d: DartId) -> PvId {
        self.origin(twin(d))
    }

    /// Position of `d` in the rotation at its origin.
    pub fn position(&self, d: DartId) -> usize {
        self.pos[d]
    }

    pub fn cw_next(&self, d: DartId) -> DartId {
        let r = &self.rot[self.origin(d)];
        r[(self.pos[d] + 1) % r.len()]
    }

    pub fn cw_prev(&self, d: DartId) -> DartId {
        let r = &self.rot[self.origin(d)];
        r[(self.pos[d] + r.len() - 1) % r.len()]
    }

    /// Next dart on the boundary of the face to the left of `d`.
    pub fn face_succ(&self, d: DartId) -> DartId {
        self.cw_next(twin(d))
    }

    /// The original edge whose trail uses the segment of `d`, and the segment's index in it.
    pub fn owner(&self, d: DartId) -> (EdgeId, usize) {
        self.owner[d]
    }

    /// Whether `d` points along its trail's direction.
    pub fn is_trail_forward(&self, d: DartId) -> bool {
        let (e, i) = self.owner[d];
        self.trails[&e][i] == d
    }

    /// The dart continuing the trail through the head of `d` (following `d`'s direction).
    pub fn trail_continue(&self, d: DartId) -> Option<DartId> {
        let (e, i) = self.owner[d];
        let tr = &self.trails[&e];
        if tr[i] == d {
            tr.get(i + 1).copied()
        } else if i > 0 {
            Some(twin(tr[i - 1]))
        } else {
            None
        }
    }

    /// Trail passes through a crossing vertex: pairs `(in, out)` of darts leaving `v`, where
    /// `in` leads back along the trail and `out` continues it.
    pub fn passes(&self, v: PvId) -> Vec<(EdgeId, DartId, DartId)> {
        let mut out = Vec::new();
        for &d in &self.rot[v] {
            let (e, i) = self.owner[d];
            let tr = &self.trails[&e];
            // d continues the trail from its position i; the arriving segment is i − 1
            if tr[i] == d && i > 0 {
                out.push((e, twin(tr[i - 1]), d));
            }
        }
        out
    }

    /// The planarization as an abstract multigraph: vertices are planar vertices, edges segments.
    pub fn planar_graph(&self) -> Multigraph {
        let mut g = Multigraph::with_vertices(self.kinds.len());
        for (s, &(a, b)) in self.segs.iter().enumerate() {
            g.add_edge(s, a, b).expect("fresh segment id");
        }
        g
    }

    pub fn faces(&self) -> FaceStructure {
        FaceStructure::of(self)
    }

    pub fn dual(&self) -> DualGraph {
        self.faces().dual(self)
    }

    /// Same map with a different outer face; `d` must be a dart of it.
    pub fn with_outer(&self, d: DartId) -> Result<Self, DrawingError> {
        if d >= self.dart_count() {
            return Err(DrawingError::Outer);
        }
        let mut out = self.clone();
        out.outer = Some(d);
        Ok(out)
    }

    pub fn into_parts(
        self,
    ) -> (Vec<PvKind>, Vec<(PvId, PvId)>, Vec<Vec<DartId>>, IndexMap<EdgeId, Vec<DartId>>, Multigraph, Option<DartId>)
    {
        (self.kinds, self.segs, self.rot, self.trails, self.underlying, self.outer)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::geometry::Point;

    /// Straight-line drawing from integer coordinates.
    pub fn straight(points: &[(i64, i64)], edges: &[(usize, usize)]) -> PlanarizedDrawing {
        let mut p = PolylineDrawing::default();
        for (i, &(x, y)) in points.iter().enumerate() {
            p.vertices.insert(i, Point::int(x, y));
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            p.edges.insert(i, (u, v, Vec::new()));
        }
        ingest_polylines(&p).expect("valid drawing")
    }

    pub fn square() -> PlanarizedDrawing {
        straight(&[(0, 0), (1, 0), (1, 1), (0, 1)], &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    /// K4 with the square's two diagonals crossing once.
    pub fn convex_k4() -> PlanarizedDrawing {
        straight(&[(0, 0), (2, 0), (2, 2), (0, 2)], &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    }

    /// A single loop drawn as a figure eight through its vertex.
    pub fn figure_eight() -> PlanarizedDrawing {
        let mut p = PolylineDrawing::default();
        p.vertices.insert(0, Point::int(-2, -3));
        let bends = [(2, 2), (2, -2), (-2, 2)].iter().map(|&(x, y)| Point::int(x, y)).collect();
        p.edges.insert(0, (0, 0, bends));
        ingest_polylines(&p).expect("valid drawing")
    }

    #[test]
    fn fixtures_validate() {
        assert_eq!(square().pv_count(), 4);
        let k4 = convex_k4();
        assert_eq!(k4.crossings().count(), 1);
        assert_eq!(k4.faces().len(), 5);
        let f8 = figure_eight();
        assert_eq!(f8.crossings().count(), 1);
        assert_eq!(f8.faces().len(), 3);
    }
}
