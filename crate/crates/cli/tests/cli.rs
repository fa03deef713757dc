use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use facetint::decide::decide_facially_3_colorable;
use facetint::drawing::{circle_planarized, ingest_polylines, is_good_drawing};
use facetint::export::{to_dot, to_svg, Overlay};
use facetint::facecolor::{color_faces_exact, k3nplus_coloring};
use facetint::flow3::{kmn_mod3_orientation, mod3_orientation};
use facetint::formats::*;
use facetint::multigraph::named;
use facetint::normalize::normalize;
use tempfile::TempDir;

const SQUARE: &str = "v 0 0 0\nv 1 1 0\nv 2 1 1\nv 3 0 1\ne 0 0 1\ne 1 1 2\ne 2 2 3\ne 3 3 0\n";
const FIGURE_EIGHT: &str = "# a loop crossing itself\nv 0 -2 -3\ne 0 0 0 : 2,2 2,-2 -2,2\n";

fn facetint(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_facetint"));
    c.args(args).env_remove("FACETINT_GUARDS");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = facetint(args, &[]);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn put(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn flow3_on_k4_is_negative() {
    let dir = TempDir::new().unwrap();
    let k4 = put(&dir, "k4.g", &write_graph(&named::complete(4)));
    let out = facetint(&["flow3", s(&k4)], &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no modulo-3-orientation"));

    let k33 = put(&dir, "k33.g", &write_graph(&named::complete_bipartite(3, 3)));
    let text = ok(&["flow3", s(&k33)]);
    let g = named::complete_bipartite(3, 3);
    assert_eq!(text, write_orientation(&mod3_orientation(&g).unwrap()));
    assert!(parse_orientation(&text, &g).unwrap().is_mod3());
}

#[test]
fn square_planarizes_and_two_colours() {
    let dir = TempDir::new().unwrap();
    let poly = put(&dir, "square.poly", SQUARE);
    let cmap = dir.path().join("square.cmap");
    ok(&["planarize", s(&poly), "-o", s(&cmap)]);
    let text = fs::read_to_string(&cmap).unwrap();
    let d = ingest_polylines(&parse_poly(SQUARE).unwrap()).unwrap();
    assert_eq!(text, write_cmap(&d));
    assert_eq!(write_cmap(&parse_cmap(&text).unwrap()), text);

    let fc = ok(&["color", s(&cmap), "-k", "2"]);
    let c = parse_coloring(&fc).unwrap();
    assert_eq!(c.colors.len(), 2);
    assert_eq!(c, color_faces_exact(&d, 2).unwrap());
    assert_eq!(write_coloring(&c), fc);

    assert!(ok(&["faces", s(&cmap)]).starts_with("faces 2 outer "));
    let dual = parse_graph(&ok(&["dual", s(&cmap)])).unwrap();
    assert_eq!((dual.vertex_count(), dual.edge_count()), (2, 4));
}

#[test]
fn decide_petersen_json() {
    let dir = TempDir::new().unwrap();
    let p = put(&dir, "petersen.g", &write_graph(&named::petersen()));
    let out = facetint(&["decide", s(&p), "--json"], &[]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], "NO");
    assert_eq!(v["rule"], "cubic-bipartite");
    let lib = decide_facially_3_colorable(&named::petersen());
    assert_eq!(v["certificate"], serde_json::to_value(&lib.certificate).unwrap());

    let k33 = put(&dir, "k33.g", &write_graph(&named::complete_bipartite(3, 3)));
    assert_eq!(ok(&["decide", s(&k33)]), "YES mod3-orientation\n");
}

#[test]
fn generators_match_the_library() {
    assert_eq!(ok(&["gen", "kmn", "4", "3"]), write_graph(&named::complete_bipartite(4, 3)));
    assert_eq!(ok(&["gen", "kmn", "5", "2", "--orient"]), write_orientation(&kmn_mod3_orientation(5, 2).unwrap()));
    assert_eq!(ok(&["gen", "k3nplus", "5"]), write_graph(&named::k3n_plus(5)));

    let dir = TempDir::new().unwrap();
    let g = named::k3n_plus(4);
    let gp = put(&dir, "k.g", &write_graph(&g));
    let order = "0,3,1,4,2,5,6";
    let text = ok(&["gen", "circle", s(&gp), "--order", order]);
    let d = circle_planarized(&g, &[0, 3, 1, 4, 2, 5, 6]).unwrap();
    assert_eq!(text, write_cmap(&d));
    let cp = put(&dir, "k.cmap", &text);
    assert_eq!(ok(&["color-k3nplus", s(&cp)]), write_coloring(&k3nplus_coloring(&d).unwrap()));
    let c = parse_coloring(&ok(&["color-outer", s(&cp)])).unwrap();
    assert_eq!(c.colors.len(), d.faces().len());
}

#[test]
fn normalize_trace_writes_snapshots() {
    let dir = TempDir::new().unwrap();
    let poly = put(&dir, "f8.poly", FIGURE_EIGHT);
    let cmap = dir.path().join("f8.cmap");
    ok(&["planarize", s(&poly), "-o", s(&cmap)]);
    let out_path = dir.path().join("good.cmap");
    let lines = ok(&["normalize", s(&cmap), "--trace", "-o", s(&out_path)]);
    let d = parse_cmap(&fs::read_to_string(&cmap).unwrap()).unwrap();
    let lib = normalize(&d).unwrap();
    let reports: Vec<serde_json::Value> = lines.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(reports.len(), lib.reports.len());
    assert!(!reports.is_empty());
    for (k, r) in reports.iter().enumerate() {
        assert_eq!(r["schema"], 1);
        assert_eq!(r["step"], k);
        assert_eq!(r["operation"], serde_json::to_value(lib.reports[k].operation).unwrap());
        let snap = parse_cmap(&fs::read_to_string(r["snapshot"].as_str().unwrap()).unwrap()).unwrap();
        assert_eq!(snap.underlying(), d.underlying());
    }
    let good = parse_cmap(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert!(is_good_drawing(&good).0);
    assert_eq!(write_cmap(&good), write_cmap(&lib.drawing));
}

#[test]
fn exports_match_the_library() {
    let dir = TempDir::new().unwrap();
    let g = named::complete(4);
    let d = circle_planarized(&g, &[0, 1, 2, 3]).unwrap();
    let cp = put(&dir, "k4.cmap", &write_cmap(&d));
    let c = color_faces_exact(&d, 4).unwrap();
    let fc = put(&dir, "k4.fc", &write_coloring(&c));
    let o = facetint::flow3::Orientation::all_forward(g.clone());
    let or = put(&dir, "k4.or", &write_orientation(&o));
    let overlay = Overlay { coloring: Some(&c), orientation: Some(&o) };
    let args = ["--coloring", s(&fc), "--orientation", s(&or)];
    let svg = ok(&[&["export", "svg", s(&cp)], &args[..]].concat());
    assert_eq!(svg, to_svg(&d, overlay).unwrap());
    let dot = ok(&[&["export", "dot", s(&cp)], &args[..]].concat());
    assert_eq!(dot, to_dot(&d, overlay).unwrap());
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let k4 = put(&dir, "k4.g", &write_graph(&named::complete(4)));
    assert_eq!(facetint(&["flow3"], &[]).status.code(), Some(2));
    assert_eq!(facetint(&["critical", s(&k4), "sideways"], &[]).status.code(), Some(2));
    assert_eq!(facetint(&["z3conn", s(&k4)], &[("FACETINT_GUARDS", "bogus")]).status.code(), Some(2));

    let bad = put(&dir, "bad.g", "v 0\ne 0 0 1\n");
    let out = facetint(&["flow3", s(&bad)], &[]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(facetint(&["faces", s(&k4)], &[]).status.code(), Some(3));

    assert_eq!(facetint(&["z3conn", s(&k4)], &[("FACETINT_GUARDS", "z3conn=3")]).status.code(), Some(4));
    assert_eq!(facetint(&["critical", s(&k4), "edge"], &[("FACETINT_GUARDS", "critical=3")]).status.code(), Some(4));
    assert_eq!(facetint(&["critical", s(&k4), "vertex"], &[]).status.code(), Some(0));
}
