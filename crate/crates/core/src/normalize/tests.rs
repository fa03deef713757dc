use super::*;
use crate::drawing::fixtures::*;
use crate::drawing::{ingest_polylines, is_good_drawing, PolylineDrawing};
use crate::facecolor::color_faces_exact;
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

fn check(d: &PlanarizedDrawing) -> Normalized {
    let start = Measure::of(d);
    let n = normalize(d).unwrap();
    assert!(is_good_drawing(&n.drawing).0, "{:?}", find_violations(&n.drawing));
    assert_eq!(n.drawing.underlying(), d.underlying());
    let rounds = n.reports.iter().map(|r| r.round).max().unwrap_or(0);
    assert!(rounds <= start.triples + start.touchings + 1);
    for r in &n.reports {
        match r.operation {
            Operation::RemoveTouching => assert_eq!(r.after.triples + 1, r.before.triples),
            Operation::IsolateLoop => assert!(r.after.triples < r.before.triples),
            Operation::SplitMulticrossing => assert!(r.after.triples <= r.before.triples),
            _ => assert_eq!(r.after.triples, r.before.triples),
        }
    }
    if let Some(c) = color_faces_exact(&n.drawing, 3) {
        let back = n.transfer(&c).unwrap();
        assert!(back.is_proper(d));
    }
    n
}

#[test]
fn good_input_is_untouched() {
    let d = convex_k4();
    let n = check(&d);
    assert!(n.reports.is_empty());
    assert_eq!(n.drawing, d);
}

#[test]
fn figure_eight_becomes_simple() {
    let n = check(&figure_eight());
    assert_eq!(n.drawing.crossings().count(), 0);
    assert_eq!(n.drawing.faces().len(), 2);
    let ops: Vec<Operation> = n.reports.iter().map(|r| r.operation).collect();
    assert_eq!(ops, vec![Operation::RerouteSelfIntersection, Operation::RemoveTouching]);
}

#[test]
fn concurrent_segments() {
    // three chords of a hexagon through one point, plus the hexagon
    let d = straight(
        &[(4, 0), (2, 4), (-2, 4), (-4, 0), (-2, -4), (2, -4)],
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (2, 5)],
    );
    let n = check(&d);
    assert_eq!(n.reports[0].operation, Operation::SplitMulticrossing);
    assert_eq!(n.drawing.crossings().count(), 3);
}

#[test]
fn double_crossing_is_removed() {
    // edge 2-3 weaves across edge 0-1 twice
    let d = poly(&[(0, 0), (12, 0), (0, 6), (12, 6)], &[(0, 1, &[]), (2, 3, &[(4, -2), (8, -2)]), (0, 2, &[]), (1, 3, &[])]);
    assert_eq!(find_violations(&d)[0].kind, ViolationKind::DoubleCrossing);
    let n = check(&d);
    assert_eq!(n.drawing.crossings().count(), 0);
    let ops: Vec<Operation> = n.reports.iter().map(|r| r.operation).collect();
    assert_eq!(ops, vec![Operation::UncrossDouble, Operation::RemoveTouching, Operation::RemoveTouching]);
}

#[test]
fn crossing_loop_is_isolated() {
    // a loop at vertex 0 crossing the edge 1-2 twice
    let d = poly(&[(0, 0), (4, -4), (4, 4)], &[(0, 0, &[(6, -1), (6, 1)]), (1, 2, &[]), (0, 1, &[]), (0, 2, &[])]);
    assert!(find_violations(&d).iter().any(|v| v.kind == ViolationKind::LoopCrossing));
    let n = check(&d);
    assert_eq!(n.drawing.crossings().count(), 0);
    assert!(n.reports.iter().any(|r| r.operation == Operation::IsolateLoop));
}

#[test]
fn adjacent_crossing_is_removed() {
    // two edges at vertex 0 crossing once
    let d = poly(&[(0, 0), (6, 1), (6, -1)], &[(0, 1, &[(3, -1)]), (0, 2, &[(3, 1)]), (1, 2, &[])]);
    assert_eq!(find_violations(&d)[0].kind, ViolationKind::AdjacentCrossing);
    let n = check(&d);
    assert_eq!(n.drawing.crossings().count(), 0);
}

#[test]
fn reports_serialize() {
    let n = normalize(&figure_eight()).unwrap();
    let line = serde_json::to_string(&n.reports[0]).unwrap();
    assert!(line.contains("\"operation\":\"reroute_self_intersection\""));
}

#[test]
fn adversarial_drawings() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut kinds = std::collections::BTreeSet::new();
    for _ in 0..120 {
        let d = crate::corpus::adversarial_drawing(&mut rng);
        kinds.extend(find_violations(&d).into_iter().map(|v| v.kind));
        check(&d);
    }
    assert_eq!(kinds.len(), 6, "{kinds:?}");
}
