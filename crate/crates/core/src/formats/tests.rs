use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::corpus::{adversarial_drawing, random_connected, random_polyline};
use crate::drawing::fixtures;
use crate::drawing::{ingest_polylines, PlanarizedDrawing};
use crate::facecolor::color_faces_exact;
use crate::flow3::{kmn_mod3_orientation, nz3_flow};
use crate::multigraph::named;

fn syntax_line(r: Result<impl std::fmt::Debug, FormatError>) -> usize {
    match r {
        Err(FormatError::Syntax { line, .. }) => line,
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn graph_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let n = rng.gen_range(1..7);
        let m = rng.gen_range(n - 1..n + 6);
        let g = random_connected(&mut rng, n, m, true);
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_graph(&back), text);
    }
}

#[test]
fn graph_comments_and_errors() {
    let g = parse_graph("# triangle\nv 0\nv 1\n\nv 2 # last\ne 0 0 1\ne 1 1 2\ne 2 2 0\ne 3 2 2\n").unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (3, 4));
    assert_eq!(syntax_line(parse_graph("v 0\nv x\n")), 2);
    assert_eq!(syntax_line(parse_graph("v 0\n\nq 1\n")), 3);
    assert_eq!(syntax_line(parse_graph("v 0\ne 0 0 5\n")), 2);
    assert_eq!(syntax_line(parse_graph("v 0\nv 0\n")), 2);
    assert_eq!(syntax_line(parse_graph("v 0\ne 0 0\n")), 2);
}

#[test]
fn orientation_round_trip() {
    let o = kmn_mod3_orientation(3, 5).unwrap();
    let text = write_orientation(&o);
    let back = parse_orientation(&text, &o.graph).unwrap();
    assert_eq!(back, o);
    assert!(back.is_mod3());
    let f = nz3_flow(&named::petersen().disjoint_union(&named::complete(4)));
    assert!(f.is_none());
    let f = nz3_flow(&named::complete_bipartite(3, 3)).unwrap();
    let text = write_flow(&f);
    assert_eq!(parse_flow(&text, &f.orientation.graph).unwrap(), f);
    assert_eq!(write_flow(&parse_flow(&text, &f.orientation.graph).unwrap()), text);
}

#[test]
fn orientation_errors() {
    let g = named::cycle(3);
    assert!(parse_orientation("a 0 0 1\na 1 1 2\na 2 2 0\n", &g).is_ok());
    assert!(matches!(parse_orientation("a 0 0 1\na 1 1 2\n", &g), Err(FormatError::Flow(_))));
    assert!(matches!(parse_orientation("a 0 0 2\na 1 1 2\na 2 2 0\n", &g), Err(FormatError::Flow(_))));
    assert_eq!(syntax_line(parse_flow("a 0 0 1\nf 0 3\n", &g)), 2);
    assert!(matches!(parse_flow("a 0 0 1\na 1 1 2\na 2 2 0\nf 9 1\n", &g), Err(FormatError::Content(_))));
}

#[test]
fn poly_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut done = 0;
    while done < 30 {
        let g = random_connected(&mut rng, 4, 6, true);
        let Some((p, d)) = random_polyline(&mut rng, &g, 6, 2) else { continue };
        let text = write_poly(&p);
        let back = parse_poly(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(write_poly(&back), text);
        assert_eq!(ingest_polylines(&back).unwrap().faces().len(), d.faces().len());
        done += 1;
    }
    let p = parse_poly("v 0 1/2 -3\nv 1 0.25 4\ne 0 0 1 : 1,1 -1/3,2\ne 1 1 0\n").unwrap();
    assert_eq!(write_poly(&p), "v 0 1/2 -3\nv 1 1/4 4\ne 0 0 1 : 1,1 -1/3,2\ne 1 1 0\n");
    assert_eq!(syntax_line(parse_poly("v 0 0 0\nv 1 a 0\n")), 2);
    assert_eq!(syntax_line(parse_poly("v 0 0 0\ne 0 0 0 : 1;1\n")), 2);
    assert_eq!(syntax_line(parse_poly("e 0 0 0 1,1\n")), 1);
}

fn cmap_round_trip(d: &PlanarizedDrawing) {
    let text = write_cmap(d);
    let back = parse_cmap(&text).unwrap();
    assert_eq!(write_cmap(&back), text);
    assert_eq!(back.kinds(), d.kinds());
    assert_eq!(back.segments(), d.segments());
    assert_eq!(back.rotations(), d.rotations());
    assert_eq!(back.trails(), d.trails());
    assert_eq!(back.faces(), d.faces());
}

#[test]
fn cmap_round_trips() {
    cmap_round_trip(&fixtures::square());
    cmap_round_trip(&fixtures::convex_k4());
    cmap_round_trip(&fixtures::figure_eight());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let d = adversarial_drawing(&mut rng);
        cmap_round_trip(&d);
        let faces = d.faces();
        let other = d.with_outer(faces.orbits[faces.len() - 1][0]).unwrap();
        cmap_round_trip(&other);
    }
    let single = parse_cmap("pv 0 normal 7\nrot 0\n").unwrap();
    assert_eq!(single.pv_count(), 1);
    assert_eq!(write_cmap(&single), "pv 0 normal 7\nrot 0\nouter 0\n");
}

#[test]
fn cmap_errors() {
    let text = write_cmap(&fixtures::square());
    let body: String = text.lines().filter(|l| !l.starts_with("outer")).map(|l| format!("{l}\n")).collect();
    assert!(matches!(parse_cmap(&format!("{body}outer 9\n")), Err(FormatError::Content(_))));
    assert!(matches!(parse_cmap(&body), Err(FormatError::Content(_))));
    assert_eq!(syntax_line(parse_cmap("pv 1 crossing\n")), 1);
    assert_eq!(syntax_line(parse_cmap("pv 0 normal 0\nrot 0 3\n")), 2);
    assert_eq!(syntax_line(parse_cmap("pv 0 bogus\n")), 1);
    let swapped = text.replacen("rot 0 ", "rot 0 -9 ", 1);
    assert!(matches!(parse_cmap(&swapped), Err(FormatError::Drawing(_))));
}

#[test]
fn coloring_round_trip() {
    let d = fixtures::convex_k4();
    let c = color_faces_exact(&d, 4).unwrap();
    let text = write_coloring(&c);
    assert_eq!(parse_coloring(&text).unwrap(), c);
    assert_eq!(write_coloring(&parse_coloring(&text).unwrap()), text);
    assert!(matches!(parse_coloring("f 0 1\n"), Err(FormatError::Content(_))));
    assert!(matches!(parse_coloring("k 2\nf 0 2\n"), Err(FormatError::Content(_))));
    assert!(matches!(parse_coloring("k 3\nf 1 2\n"), Err(FormatError::Content(_))));
    assert_eq!(syntax_line(parse_coloring("k 3\nf 0 1\nf 0 2\n")), 3);
}
