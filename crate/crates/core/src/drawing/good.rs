//! Good-drawing conditions, read off the map combinatorially.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::multigraph::EdgeId;

use super::{PlanarizedDrawing, PvId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationKind {
    MultiCrossing,
    Touching,
    SelfIntersection,
    AdjacentCrossing,
    DoubleCrossing,
    LoopCrossing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Crossing vertices involved (two or more for a double crossing).
    pub sites: Vec<PvId>,
    pub edges: Vec<EdgeId>,
}

/// Whether the two passes at a 4-valent crossing alternate in the rotation.
pub fn is_proper_crossing(d: &PlanarizedDrawing, x: PvId) -> bool {
    let passes = d.passes(x);
    if passes.len() != 2 {
        return false;
    }
    let (_, a, b) = passes[0];
    let gap = (d.position(a) as isize - d.position(b) as isize).rem_euclid(4);
    gap == 2
}

/// Every violation of the good-drawing conditions, ordered by site.
pub fn find_violations(d: &PlanarizedDrawing) -> Vec<Violation> {
    let g = d.underlying();
    let mut out = Vec::new();
    let mut pairs: BTreeMap<(EdgeId, EdgeId), Vec<PvId>> = BTreeMap::new();
    for x in d.crossings() {
        let passes = d.passes(x);
        let mut edges: Vec<EdgeId> = passes.iter().map(|p| p.0).collect();
        if passes.len() >= 3 {
            edges.sort_unstable();
            edges.dedup();
            out.push(Violation { kind: ViolationKind::MultiCrossing, sites: vec![x], edges });
            continue;
        }
        let (e1, e2) = (passes[0].0, passes[1].0);
        let kind = if !is_proper_crossing(d, x) {
            Some(ViolationKind::Touching)
        } else if e1 == e2 {
            Some(ViolationKind::SelfIntersection)
        } else {
            let (a, b) = (g.edge(e1).expect("edge"), g.edge(e2).expect("edge"));
            if a.is_loop() || b.is_loop() {
                Some(ViolationKind::LoopCrossing)
            } else if a.shares_endpoint(b) {
                Some(ViolationKind::AdjacentCrossing)
            } else {
                pairs.entry((e1.min(e2), e1.max(e2))).or_default().push(x);
                None
            }
        };
        if let Some(kind) = kind {
            edges.sort_unstable();
            edges.dedup();
            out.push(Violation { kind, sites: vec![x], edges });
        }
    }
    for ((e1, e2), sites) in pairs {
        if sites.len() >= 2 {
            out.push(Violation { kind: ViolationKind::DoubleCrossing, sites, edges: vec![e1, e2] });
        }
    }
    out
}

pub fn is_good_drawing(d: &PlanarizedDrawing) -> (bool, Vec<Violation>) {
    let v = find_violations(d);
    (v.is_empty(), v)
}

/// Pairs of passes meeting at crossing vertices: C(t, 2) for a vertex with t passes.
pub fn crossing_triples(d: &PlanarizedDrawing) -> usize {
    d.crossings()
        .map(|x| {
            let t = d.degree(x) / 2;
            t * (t - 1) / 2
        })
        .sum()
}

/// Number of crossing vertices where two passes touch without crossing.
pub fn touchings(d: &PlanarizedDrawing) -> usize {
    d.crossings().filter(|&x| d.degree(x) == 4 && !is_proper_crossing(d, x)).count()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn convex_k4_is_good() {
        let d = convex_k4();
        assert!(is_good_drawing(&d).0);
        assert_eq!(crossing_triples(&d), 1);
    }

    #[test]
    fn figure_eight_self_intersects() {
        let d = figure_eight();
        let (ok, v) = is_good_drawing(&d);
        assert!(!ok);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::SelfIntersection);
        assert_eq!(crossing_triples(&d), 1);
    }

    #[test]
    fn three_concurrent_segments() {
        // three chords of a hexagon through its centre
        let pts = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)];
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (2, 5)];
        let d = straight(&pts, &edges);
        let v = find_violations(&d);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::MultiCrossing);
        assert_eq!(crossing_triples(&d), 3);
    }

    #[test]
    fn double_crossing() {
        use crate::geometry::Point;
        let mut p = super::super::PolylineDrawing::default();
        for (i, &(x, y)) in [(0, 0), (10, 0), (0, 4), (10, 4)].iter().enumerate() {
            p.vertices.insert(i, Point::int(x, y));
        }
        p.edges.insert(0, (0, 1, Vec::new()));
        p.edges.insert(1, (2, 3, vec![Point::int(3, -2), Point::int(7, -2)]));
        p.edges.insert(2, (0, 2, Vec::new()));
        p.edges.insert(3, (1, 3, Vec::new()));
        let d = super::super::ingest_polylines(&p).unwrap();
        let v = find_violations(&d);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::DoubleCrossing);
        assert_eq!(v[0].sites.len(), 2);
    }
}
