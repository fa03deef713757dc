//! Replacing a crossing point of three or more passes by pairwise crossings.

use std::collections::HashSet;

use crate::drawing::circle::circle_points;
use crate::drawing::editor::Surgery;
use crate::drawing::{twin, DartId, MapEditor, PlanarizedDrawing, PvId, PvKind};
use crate::geometry::{intersect, param, sort_clockwise, Point, SegHit, Q};

use super::NormalizeError;

const ATTEMPTS: usize = 200;

/// A small disc around `x` meets the passes in 2t boundary points, clockwise in rotation
/// order. Each pass becomes a straight chord between its two points, so two passes cross
/// once inside the disc exactly when their points interleave. Passes whose points do not
/// interleave were touching at `x` and come apart.
pub fn split_multicrossing(d: &PlanarizedDrawing, x: PvId) -> Result<Surgery, NormalizeError> {
    if x >= d.pv_count() || !d.is_crossing(x) || d.degree(x) < 6 {
        return Err(NormalizeError::NotMultiCrossing(x));
    }
    let rot = d.rotation(x).to_vec();
    let n = rot.len();
    let passes = d.passes(x);
    // chord k runs from the point of its arriving dart to the point of its leaving dart
    let chords: Vec<(usize, usize)> = passes.iter().map(|&(_, a, b)| (d.position(a), d.position(b))).collect();
    let (points, cuts) = (0..ATTEMPTS)
        .find_map(|attempt| {
            // rotation position j sits clockwise, i.e. at counter-clockwise index n - 1 - j
            let ccw = circle_points(n, attempt);
            let pts: Vec<Point> = (0..n).map(|j| ccw[n - 1 - j].clone()).collect();
            arrangement(&pts, &chords).map(|c| (pts, c))
        })
        .ok_or(NormalizeError::Perturbation(x))?;

    let mut ed = MapEditor::new(d);
    // one new crossing vertex per crossing pair, and a waypoint list per chord
    let mut vertex_of = std::collections::HashMap::new();
    let mut route: Vec<Vec<(PvId, Point)>> = vec![Vec::new(); chords.len()];
    for (k, list) in cuts.iter().enumerate() {
        for (l, pt) in list {
            let key = (k.min(*l), k.max(*l));
            let v = *vertex_of.entry(key).or_insert_with(|| ed.new_pv(PvKind::Crossing));
            route[k].push((v, pt.clone()));
        }
    }
    // darts leaving each new vertex, with the direction they leave in
    let mut around: std::collections::HashMap<PvId, Vec<(Point, DartId)>> = Default::default();
    for (k, &(a, b)) in chords.iter().enumerate() {
        let (e, arrive, leave) = passes[k];
        let mut stops = route[k].clone();
        if stops.is_empty() {
            // no crossing on this chord: a temporary vertex, dissolved below
            let z = ed.new_pv(PvKind::Crossing);
            let mid = points[a].add(&points[b]).scale(&Q::new(1.into(), 2.into()));
            stops.push((z, mid));
        }
        let first = stops[0].0;
        ed.set_origin(arrive, first);
        around.entry(first).or_default().push((points[a].sub(&stops[0].1), arrive));
        let mut internal = Vec::new();
        for w in stops.windows(2) {
            let s = ed.new_segment(w[0].0, w[1].0);
            around.entry(w[0].0).or_default().push((w[1].1.sub(&w[0].1), 2 * s));
            around.entry(w[1].0).or_default().push((w[0].1.sub(&w[1].1), 2 * s + 1));
            internal.push(2 * s);
        }
        let last = stops.last().expect("non-empty").clone();
        ed.set_origin(leave, last.0);
        around.entry(last.0).or_default().push((points[b].sub(&last.1), leave));
        let tr = ed.trails.get_mut(&e).expect("trail");
        let at = tr.iter().position(|&y| y == leave).expect("pass on trail");
        debug_assert_eq!(twin(tr[at - 1]), arrive);
        tr.splice(at..at, internal);
    }
    ed.rot[x].clear();
    ed.kinds[x] = None;
    for (v, mut darts) in around {
        sort_clockwise(&mut darts);
        ed.rot[v] = darts.into_iter().map(|(_, dart)| dart).collect();
    }
    ed.tidy();
    Ok(ed.finish()?)
}

/// For every chord, the chords it crosses with the crossing points, ordered from its start.
/// `None` when three chords meet in a point.
fn arrangement(pts: &[Point], chords: &[(usize, usize)]) -> Option<Vec<Vec<(usize, Point)>>> {
    let mut cuts: Vec<Vec<(usize, Point)>> = vec![Vec::new(); chords.len()];
    let mut seen = HashSet::new();
    for k in 0..chords.len() {
        for l in k + 1..chords.len() {
            let (a, b) = (&pts[chords[k].0], &pts[chords[k].1]);
            let (c, e) = (&pts[chords[l].0], &pts[chords[l].1]);
            match intersect(a, b, c, e) {
                SegHit::Disjoint => {}
                SegHit::Point(p) => {
                    if !seen.insert(p.clone()) {
                        return None;
                    }
                    cuts[k].push((l, p.clone()));
                    cuts[l].push((k, p));
                }
                SegHit::Overlap => return None,
            }
        }
    }
    for (k, list) in cuts.iter_mut().enumerate() {
        let (a, b) = (&pts[chords[k].0], &pts[chords[k].1]);
        list.sort_by(|p, q| param(&p.1, a, b).cmp(&param(&q.1, a, b)));
    }
    Some(cuts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::fixtures::straight;
    use crate::drawing::{crossing_triples, find_violations};

    fn concurrent(t: usize) -> PlanarizedDrawing {
        // t long diagonals of a regular-ish 2t-gon through the origin
        let pts: Vec<(i64, i64)> = match t {
            3 => vec![(4, 0), (2, 4), (-2, 4), (-4, 0), (-2, -4), (2, -4)],
            4 => vec![(4, 0), (4, 4), (0, 4), (-4, 4), (-4, 0), (-4, -4), (0, -4), (4, -4)],
            _ => unreachable!(),
        };
        let m = pts.len();
        let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        edges.extend((0..t).map(|i| (i, i + t)));
        straight(&pts, &edges)
    }

    #[test]
    fn splits_into_pairwise_crossings() {
        for (t, pairs) in [(3, 3), (4, 6)] {
            let d = concurrent(t);
            let x = d.crossings().next().unwrap();
            assert_eq!(crossing_triples(&d), pairs);
            let s = split_multicrossing(&d, x).unwrap();
            assert_eq!(s.drawing.crossings().count(), pairs);
            assert_eq!(crossing_triples(&s.drawing), pairs);
            assert!(find_violations(&s.drawing).is_empty());
            assert!(s.dart_map.iter().all(Option::is_some));
            assert_eq!(s.drawing.underlying(), d.underlying());
        }
    }

    #[test]
    fn rejects_two_passes() {
        let d = crate::drawing::fixtures::convex_k4();
        let x = d.crossings().next().unwrap();
        assert_eq!(split_multicrossing(&d, x).unwrap_err(), NormalizeError::NotMultiCrossing(x));
    }
}
