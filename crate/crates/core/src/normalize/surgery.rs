//! The local redrawing moves. Each one edits the rotation system and the trails only.

use crate::drawing::good::is_proper_crossing;
use crate::drawing::{twin, DartId, MapEditor, PlanarizedDrawing, PvId, PvKind};
use crate::drawing::editor::Surgery;
use crate::multigraph::{EdgeId, VertexId};

use super::NormalizeError;

fn four_valent(d: &PlanarizedDrawing, x: PvId) -> Result<[(EdgeId, DartId, DartId); 2], NormalizeError> {
    if x >= d.pv_count() || !d.is_crossing(x) || d.degree(x) != 4 {
        return Err(NormalizeError::NotSimpleCrossing(x));
    }
    let p = d.passes(x);
    Ok([p[0], p[1]])
}

/// Darts of a trail walked backwards.
fn reversed(darts: &[DartId]) -> Vec<DartId> {
    darts.iter().rev().map(|&x| twin(x)).collect()
}

/// Position in `tr` of the dart that leaves `x` continuing the trail.
fn leaving_at(d: &PlanarizedDrawing, tr: &[DartId], x: PvId) -> Vec<usize> {
    (1..tr.len()).filter(|&i| d.origin(tr[i]) == x).collect()
}

/// Pulls apart the two passes of a touching. The faces between the passes merge.
pub fn remove_touching(d: &PlanarizedDrawing, x: PvId) -> Result<Surgery, NormalizeError> {
    let [_, (_, in2, out2)] = four_valent(d, x)?;
    if is_proper_crossing(d, x) {
        return Err(NormalizeError::NotTouching(x));
    }
    let mut ed = MapEditor::new(d);
    let y = ed.new_pv(PvKind::Crossing);
    ed.move_darts(&[in2, out2], y);
    ed.tidy();
    Ok(ed.finish()?)
}

/// Reverses the closed piece of a trail between its two visits of `x`; the self-crossing
/// becomes a self-touching.
pub fn reroute_self_intersection(d: &PlanarizedDrawing, x: PvId) -> Result<Surgery, NormalizeError> {
    let [(e1, ..), (e2, ..)] = four_valent(d, x)?;
    if e1 != e2 || !is_proper_crossing(d, x) {
        return Err(NormalizeError::WrongKind(x));
    }
    let tr = d.trail(e1).expect("trail");
    let at = leaving_at(d, tr, x);
    let (i, j) = (at[0], at[1]);
    let mut new = tr[..i].to_vec();
    new.extend(reversed(&tr[i..j]));
    new.extend_from_slice(&tr[j..]);
    let mut ed = MapEditor::new(d);
    ed.trails[&e1] = new;
    Ok(ed.finish()?)
}

/// Trail of `e` oriented away from `v`, and whether that is its own direction.
fn away_from(d: &PlanarizedDrawing, e: EdgeId, v: VertexId) -> (Vec<DartId>, bool) {
    let tr = d.trail(e).expect("trail");
    if d.underlying().edge(e).expect("edge").u == v {
        (tr.to_vec(), true)
    } else {
        (reversed(tr), false)
    }
}

/// Exchanges the pieces of two adjacent edges between their common end and the crossing `x`;
/// the crossing becomes a touching.
pub fn uncross_adjacent(d: &PlanarizedDrawing, x: PvId) -> Result<Surgery, NormalizeError> {
    let [(e1, ..), (e2, ..)] = four_valent(d, x)?;
    let g = d.underlying();
    let (a, b) = (g.edge(e1).expect("edge"), g.edge(e2).expect("edge"));
    if e1 == e2 || a.is_loop() || b.is_loop() || !a.shares_endpoint(b) || !is_proper_crossing(d, x) {
        return Err(NormalizeError::WrongKind(x));
    }
    let v = if b.touches(a.u) { a.u } else { a.v };
    let (t1, f1) = away_from(d, e1, v);
    let (t2, f2) = away_from(d, e2, v);
    let i = leaving_at(d, &t1, x)[0];
    let j = leaving_at(d, &t2, x)[0];
    let mut n1 = t2[..j].to_vec();
    n1.extend_from_slice(&t1[i..]);
    let mut n2 = t1[..i].to_vec();
    n2.extend_from_slice(&t2[j..]);
    let mut ed = MapEditor::new(d);
    ed.trails[&e1] = if f1 { n1 } else { reversed(&n1) };
    ed.trails[&e2] = if f2 { n2 } else { reversed(&n2) };
    Ok(ed.finish()?)
}

/// Proper crossings shared by exactly `e1` and `e2`, in the order `e1` meets them.
pub fn shared_crossings(d: &PlanarizedDrawing, e1: EdgeId, e2: EdgeId) -> Vec<PvId> {
    let Some(tr) = d.trail(e1) else { return Vec::new() };
    tr[1..]
        .iter()
        .map(|&x| d.origin(x))
        .filter(|&x| {
            d.degree(x) == 4 && is_proper_crossing(d, x) && {
                let p = d.passes(x);
                let mut es = [p[0].0, p[1].0];
                es.sort_unstable();
                es == [e1.min(e2), e1.max(e2)] && e1 != e2
            }
        })
        .collect()
}

/// Exchanges the pieces of `e1` and `e2` between the first two crossings they share along `e1`;
/// both crossings become touchings. Returns the surgery and the two sites.
pub fn uncross_double(d: &PlanarizedDrawing, e1: EdgeId, e2: EdgeId) -> Result<(Surgery, [PvId; 2]), NormalizeError> {
    let g = d.underlying();
    let (a, b) = match (g.edge(e1), g.edge(e2)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(NormalizeError::TooFewShared(e1, e2)),
    };
    if e1 == e2 || a.shares_endpoint(b) {
        return Err(NormalizeError::Adjacent(e1, e2));
    }
    let shared = shared_crossings(d, e1, e2);
    if shared.len() < 2 {
        return Err(NormalizeError::TooFewShared(e1, e2));
    }
    let (p1, p2) = (shared[0], shared[1]);
    let tr1 = d.trail(e1).expect("trail");
    let tr2 = d.trail(e2).expect("trail");
    let (i1, i2) = (leaving_at(d, tr1, p1)[0], leaving_at(d, tr1, p2)[0]);
    let (ja, jb) = (leaving_at(d, tr2, p1)[0], leaving_at(d, tr2, p2)[0]);
    let m1 = &tr1[i1..i2];
    // e2's piece from p1 to p2
    let m2 = if ja < jb { tr2[ja..jb].to_vec() } else { reversed(&tr2[jb..ja]) };
    let mut n1 = tr1[..i1].to_vec();
    n1.extend_from_slice(&m2);
    n1.extend_from_slice(&tr1[i2..]);
    let mut n2;
    if ja < jb {
        n2 = tr2[..ja].to_vec();
        n2.extend_from_slice(m1);
        n2.extend_from_slice(&tr2[jb..]);
    } else {
        n2 = tr2[..jb].to_vec();
        n2.extend(reversed(m1));
        n2.extend_from_slice(&tr2[ja..]);
    }
    let mut ed = MapEditor::new(d);
    ed.trails[&e1] = n1;
    ed.trails[&e2] = n2;
    Ok((ed.finish()?, [p1, p2]))
}

/// Deletes the loop `e` and redraws it without crossings inside the face at its vertex with
/// the longest boundary (ties: lowest face id).
pub fn isolate_loop(d: &PlanarizedDrawing, e: EdgeId) -> Result<Surgery, NormalizeError> {
    let edge = *d.underlying().edge(e).ok_or(NormalizeError::NotLoop(e))?;
    if !edge.is_loop() {
        return Err(NormalizeError::NotLoop(e));
    }
    let tr = d.trail(e).expect("trail").to_vec();
    if tr.len() == 1 {
        return Err(NormalizeError::LoopCrossingFree(e));
    }
    let v = d.normal_pv(edge.u).expect("vertex drawn");
    let mut ed = MapEditor::new(d);
    let segs: Vec<usize> = tr.iter().map(|&x| x / 2).collect();
    ed.trails[&e] = Vec::new();
    ed.remove_segments(&segs);
    ed.tidy();
    let mut best: Option<(usize, DartId, DartId)> = None;
    for &d1 in &ed.rot[v] {
        let orbit = ed.face_orbit(ed.cw_next(d1));
        let key = (orbit.len(), *orbit.iter().min().expect("orbit"));
        // longest orbit first, then the face that sorts first
        if best.map_or(true, |(len, min, _)| key.0 > len || (key.0 == len && key.1 < min)) {
            best = Some((key.0, key.1, d1));
        }
    }
    let s = ed.new_segment(v, v);
    let (out, back) = (2 * s, 2 * s + 1);
    match best {
        Some((_, _, d1)) => {
            ed.insert_after(Some(d1), back);
            ed.insert_after(Some(d1), out);
        }
        None => {
            ed.insert_after(None, out);
            ed.insert_after(Some(out), back);
        }
    }
    if ed.outer.is_none() {
        ed.outer = Some(out);
    }
    ed.trails[&e] = vec![out];
    for &x in &tr {
        ed.set_alias(x, out);
        ed.set_alias(twin(x), back);
    }
    Ok(ed.finish()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::fixtures::*;
    use crate::drawing::{crossing_triples, find_violations, ingest_polylines, PolylineDrawing, ViolationKind};
    use crate::geometry::Point;

    fn poly(vertices: &[(i64, i64)], edges: &[(usize, usize, &[(i64, i64)])]) -> PlanarizedDrawing {
        let mut p = PolylineDrawing::default();
        for (i, &(x, y)) in vertices.iter().enumerate() {
            p.vertices.insert(i, Point::int(x, y));
        }
        for (i, &(u, v, b)) in edges.iter().enumerate() {
            p.edges.insert(i, (u, v, b.iter().map(|&(x, y)| Point::int(x, y)).collect()));
        }
        ingest_polylines(&p).unwrap()
    }

    fn kinds(d: &PlanarizedDrawing) -> Vec<ViolationKind> {
        find_violations(d).into_iter().map(|v| v.kind).collect()
    }

    /// A 4-cycle in which edge 2-3 is bent to touch the diagonal edge 0-1 at (4, 4).
    pub fn touching() -> PlanarizedDrawing {
        poly(&[(0, 0), (8, 8), (8, 0), (2, 0)], &[(0, 1, &[]), (2, 3, &[(4, 4)]), (0, 3, &[]), (2, 1, &[])])
    }

    #[test]
    fn touching_removal() {
        let d = touching();
        assert_eq!(kinds(&d), vec![ViolationKind::Touching]);
        let x = d.crossings().next().unwrap();
        let before = crossing_triples(&d);
        let faces = d.faces().len();
        let s = remove_touching(&d, x).unwrap();
        assert_eq!(crossing_triples(&s.drawing), before - 1);
        assert_eq!(s.drawing.faces().len(), faces - 1);
        assert_eq!(s.drawing.underlying(), d.underlying());
        assert!(s.dart_map.iter().all(Option::is_some));
        // a proper crossing is refused
        let k4 = convex_k4();
        let x = k4.crossings().next().unwrap();
        assert_eq!(remove_touching(&k4, x).unwrap_err(), NormalizeError::NotTouching(x));
    }

    #[test]
    fn figure_eight_pipeline() {
        let d = figure_eight();
        let x = d.crossings().next().unwrap();
        let s = reroute_self_intersection(&d, x).unwrap();
        assert_eq!(kinds(&s.drawing), vec![ViolationKind::Touching]);
        assert_eq!(crossing_triples(&s.drawing), 1);
        let x = s.drawing.crossings().next().unwrap();
        let t = remove_touching(&s.drawing, x).unwrap();
        assert_eq!(crossing_triples(&t.drawing), 0);
        assert_eq!(t.drawing.faces().len(), 2);
        let k4 = convex_k4();
        let x = k4.crossings().next().unwrap();
        assert!(reroute_self_intersection(&k4, x).is_err());
    }

    #[test]
    fn self_crossing_path_edge() {
        // edge 0 -> 1 with a curl; a second edge closes the cycle
        let d = poly(&[(0, 0), (10, 0)], &[(0, 1, &[(6, 0), (6, 3), (4, 3), (4, -3)]), (1, 0, &[(10, 8), (0, 8)])]);
        assert_eq!(kinds(&d), vec![ViolationKind::SelfIntersection]);
        let x = d.crossings().next().unwrap();
        let s = reroute_self_intersection(&d, x).unwrap();
        let x = s.drawing.crossings().next().unwrap();
        let t = remove_touching(&s.drawing, x).unwrap();
        assert!(find_violations(&t.drawing).is_empty());
        assert_eq!(t.drawing.crossings().count(), 0);
    }

    #[test]
    fn adjacent_pipeline() {
        // edges 0-1 and 0-2 leave vertex 0 and cross once
        let d = poly(
            &[(0, 0), (4, 4), (4, -4), (8, 0)],
            &[(0, 1, &[(3, -1)]), (0, 2, &[(3, 1)]), (1, 3, &[]), (2, 3, &[])],
        );
        assert_eq!(kinds(&d), vec![ViolationKind::AdjacentCrossing]);
        let x = d.crossings().next().unwrap();
        let s = uncross_adjacent(&d, x).unwrap();
        assert_eq!(kinds(&s.drawing), vec![ViolationKind::Touching]);
        let t = remove_touching(&s.drawing, x).unwrap();
        assert!(find_violations(&t.drawing).is_empty());
        let k4 = convex_k4();
        let x = k4.crossings().next().unwrap();
        assert!(uncross_adjacent(&k4, x).is_err());
    }

    /// Edge 1 weaves across edge 0 `times` times.
    fn double(times: usize) -> PlanarizedDrawing {
        let len = 4 * times as i64 + 8;
        let side = |k: usize| if k % 2 == 1 { -2 } else { 6 };
        let bends: Vec<(i64, i64)> = (1..=times).map(|k| (4 * k as i64, side(k))).collect();
        poly(
            &[(0, 0), (len, 0), (0, 6), (len, side(times))],
            &[(0, 1, &[]), (2, 3, &bends), (0, 2, &[]), (1, 3, &[])],
        )
    }

    #[test]
    fn double_pipeline() {
        let d = double(2);
        assert_eq!(shared_crossings(&d, 0, 1).len(), 2);
        let (s, [p1, p2]) = uncross_double(&d, 0, 1).unwrap();
        assert_eq!(crossing_triples(&s.drawing), 2);
        assert_eq!(kinds(&s.drawing), vec![ViolationKind::Touching, ViolationKind::Touching]);
        let t = remove_touching(&s.drawing, p2.max(p1)).unwrap();
        let x = t.drawing.crossings().next().unwrap();
        let u = remove_touching(&t.drawing, x).unwrap();
        assert_eq!(shared_crossings(&u.drawing, 0, 1).len(), 0);
        assert!(find_violations(&u.drawing).is_empty());

        let d = double(3);
        assert_eq!(shared_crossings(&d, 0, 1).len(), 3);
        let (s, sites) = uncross_double(&d, 0, 1).unwrap();
        assert!(sites.iter().all(|&x| !is_proper_crossing(&s.drawing, x)));
        assert_eq!(uncross_double(&convex_k4(), 4, 5).unwrap_err(), NormalizeError::TooFewShared(4, 5));
        assert_eq!(uncross_double(&convex_k4(), 0, 1).unwrap_err(), NormalizeError::Adjacent(0, 1));
    }

    #[test]
    fn loop_isolation() {
        // a loop at vertex 0 swinging across the edge 1-2 twice
        let d = poly(
            &[(0, 0), (4, -4), (4, 4)],
            &[(0, 0, &[(8, -1), (8, 1)]), (1, 2, &[]), (0, 1, &[]), (0, 2, &[])],
        );
        assert_eq!(kinds(&d), vec![ViolationKind::LoopCrossing, ViolationKind::LoopCrossing]);
        let before = crossing_triples(&d);
        let s = isolate_loop(&d, 0).unwrap();
        assert!(crossing_triples(&s.drawing) < before);
        assert!(find_violations(&s.drawing).is_empty());
        assert_eq!(s.drawing.trail(0).unwrap().len(), 1);
        assert!(s.dart_map.iter().all(Option::is_some));
        let again = isolate_loop(&s.drawing, 0).unwrap_err();
        assert_eq!(again, NormalizeError::LoopCrossingFree(0));
        assert_eq!(isolate_loop(&d, 1).unwrap_err(), NormalizeError::NotLoop(1));
    }
}
