//! SVG and DOT renderings of planarized drawings, with optional face colours and arc
//! directions. Coordinates come from a barycentric layout and are for display only.

use std::collections::HashMap;
use std::fmt::Write;

use thiserror::Error;

use crate::drawing::{DartId, PlanarizedDrawing, PvKind};
use crate::facecolor::FaceColoring;
use crate::flow3::Orientation;
use crate::multigraph::EdgeId;

/// Colours 0, 1 and 2 are red, blue and green; the rest only need to differ from each other.
pub const PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#ff7f00", "#984ea3", "#ffff33", "#a65628", "#f781bf", "#66c2a5", "#999999",
    "#8dd3c7", "#fb8072",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExportError {
    #[error("colouring has {found} faces but the drawing has {expected}")]
    FaceCount { expected: usize, found: usize },
    #[error("colour {0} is outside the palette")]
    Color(u8),
    #[error("orientation does not cover edge {0} of the drawing")]
    Edge(EdgeId),
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Overlay<'a> {
    pub coloring: Option<&'a FaceColoring>,
    pub orientation: Option<&'a Orientation>,
}

impl Overlay<'_> {
    fn check(&self, d: &PlanarizedDrawing) -> Result<(), ExportError> {
        if let Some(c) = self.coloring {
            let expected = d.faces().len();
            if c.colors.len() != expected {
                return Err(ExportError::FaceCount { expected, found: c.colors.len() });
            }
            if let Some(&x) = c.colors.iter().find(|&&x| x as usize >= PALETTE.len()) {
                return Err(ExportError::Color(x));
            }
        }
        Ok(())
    }

    /// Per segment: whether its arc runs from the segment's first end to its second.
    fn directions(&self, d: &PlanarizedDrawing) -> Result<Option<Vec<bool>>, ExportError> {
        let Some(o) = self.orientation else { return Ok(None) };
        let mut along: HashMap<EdgeId, bool> = HashMap::new();
        for (i, (e, t, _)) in o.arcs().into_iter().enumerate() {
            let Some(edge) = d.underlying().edge(e) else { continue };
            along.insert(e, if edge.is_loop() { o.forward[i] } else { t == edge.u });
        }
        let mut dir = vec![true; d.seg_count()];
        for (&e, tr) in d.trails() {
            let fwd = *along.get(&e).ok_or(ExportError::Edge(e))?;
            for &x in tr {
                dir[x / 2] = (x % 2 == 0) == fwd;
            }
        }
        Ok(Some(dir))
    }
}

/// Positions in the unit disc: the outer face's vertices on the circle, every other planar
/// vertex at the mean of its neighbours.
pub fn layout(d: &PlanarizedDrawing) -> Vec<(f64, f64)> {
    let p = d.pv_count();
    let mut pos = vec![(0.0, 0.0); p];
    if d.seg_count() == 0 {
        return pos;
    }
    let faces = d.faces();
    let mut pinned = vec![false; p];
    let mut ring = Vec::new();
    for &x in faces.boundary(faces.outer) {
        let v = d.origin(x);
        if !pinned[v] {
            pinned[v] = true;
            ring.push(v);
        }
    }
    for (i, &v) in ring.iter().enumerate() {
        let a = std::f64::consts::TAU * i as f64 / ring.len() as f64;
        pos[v] = (a.cos(), -a.sin());
    }
    let nbrs: Vec<Vec<usize>> = (0..p)
        .map(|v| d.rotation(v).iter().map(|&x| d.head(x)).filter(|&w| w != v).collect())
        .collect();
    for _ in 0..4 * p.max(50) {
        for v in 0..p {
            if pinned[v] || nbrs[v].is_empty() {
                continue;
            }
            let n = nbrs[v].len() as f64;
            let (sx, sy) = nbrs[v].iter().fold((0.0, 0.0), |(a, b), &w| (a + pos[w].0, b + pos[w].1));
            pos[v] = (sx / n, sy / n);
        }
    }
    pos
}

const SIZE: f64 = 400.0;
const MARGIN: f64 = 30.0;

fn screen((x, y): (f64, f64)) -> (f64, f64) {
    (MARGIN + (x + 1.0) * SIZE / 2.0, MARGIN + (y + 1.0) * SIZE / 2.0)
}

pub fn to_svg(d: &PlanarizedDrawing, overlay: Overlay<'_>) -> Result<String, ExportError> {
    overlay.check(d)?;
    let dirs = overlay.directions(d)?;
    let pos: Vec<(f64, f64)> = layout(d).into_iter().map(screen).collect();
    let full = SIZE + 2.0 * MARGIN;
    let mut s = String::new();
    let w = &mut s;
    writeln!(w, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{full:.0}" height="{full:.0}" viewBox="0 0 {full:.0} {full:.0}">"#).unwrap();
    writeln!(w, r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="8" markerHeight="8" orient="auto"><path d="M0,0 L10,5 L0,10 z"/></marker></defs>"#).unwrap();
    let faces = d.faces();
    if let Some(c) = overlay.coloring {
        let outer = PALETTE[c.colors[faces.outer] as usize];
        writeln!(w, r#"<rect width="{full:.0}" height="{full:.0}" fill="{outer}" fill-opacity="0.35"/>"#).unwrap();
        for (f, orbit) in faces.orbits.iter().enumerate() {
            if f == faces.outer {
                continue;
            }
            let pts: Vec<String> = orbit.iter().map(|&x| {
                let (a, b) = pos[d.origin(x)];
                format!("{a:.2},{b:.2}")
            }).collect();
            let fill = PALETTE[c.colors[f] as usize];
            writeln!(w, r#"<polygon class="face" data-face="{f}" points="{}" fill="{fill}" fill-opacity="0.6"/>"#, pts.join(" ")).unwrap();
        }
    }
    for (sg, &(a, b)) in d.segments().iter().enumerate() {
        let (e, _) = d.owner(2 * sg);
        let (mut p, mut q) = (pos[a], pos[b]);
        let marker = match &dirs {
            Some(dir) => {
                if !dir[sg] {
                    std::mem::swap(&mut p, &mut q);
                }
                r#" marker-end="url(#arrow)""#
            }
            None => "",
        };
        if a == b {
            writeln!(w, r#"<circle class="seg" data-edge="{e}" cx="{:.2}" cy="{:.2}" r="12" fill="none" stroke="black"/>"#, p.0, p.1 - 12.0).unwrap();
        } else {
            writeln!(w, r#"<line class="seg" data-edge="{e}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1.5"{marker}/>"#, p.0, p.1, q.0, q.1).unwrap();
        }
    }
    for (v, k) in d.kinds().iter().enumerate() {
        let (x, y) = pos[v];
        match k {
            PvKind::Normal(id) => {
                writeln!(w, r#"<circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="6" fill="white" stroke="black"/>"#).unwrap();
                writeln!(w, r#"<text x="{x:.2}" y="{:.2}" font-size="9" text-anchor="middle">{id}</text>"#, y + 3.0).unwrap();
            }
            PvKind::Crossing => {
                writeln!(w, r#"<circle class="crossing" cx="{x:.2}" cy="{y:.2}" r="2.5" fill="black"/>"#).unwrap();
            }
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// The planarization as a DOT graph; crossings are points, faces (when coloured) are extra
/// filled nodes joined to the segments' endpoints by invisible edges.
pub fn to_dot(d: &PlanarizedDrawing, overlay: Overlay<'_>) -> Result<String, ExportError> {
    overlay.check(d)?;
    let dirs = overlay.directions(d)?;
    let mut s = String::from("graph drawing {\n  node [shape=circle];\n");
    let w = &mut s;
    for (v, k) in d.kinds().iter().enumerate() {
        match k {
            PvKind::Normal(id) => writeln!(w, "  p{v} [label=\"{id}\"];"),
            PvKind::Crossing => writeln!(w, "  p{v} [shape=point];"),
        }
        .unwrap();
    }
    for (sg, &(a, b)) in d.segments().iter().enumerate() {
        let (e, _) = d.owner(2 * sg);
        let dir = match &dirs {
            Some(dir) if dir[sg] => ", dir=forward",
            Some(_) => ", dir=back",
            None => "",
        };
        writeln!(w, "  p{a} -- p{b} [label=\"e{e}\"{dir}];").unwrap();
    }
    if let Some(c) = overlay.coloring {
        let faces = d.faces();
        for (f, orbit) in faces.orbits.iter().enumerate() {
            let fill = PALETTE[c.colors[f] as usize];
            let outer = if f == faces.outer { " (outer)" } else { "" };
            writeln!(w, "  f{f} [shape=box, style=filled, fillcolor=\"{fill}\", label=\"face {f}{outer}: {}\"];", c.colors[f]).unwrap();
            let first: DartId = orbit[0];
            writeln!(w, "  f{f} -- p{} [style=invis];", d.origin(first)).unwrap();
        }
    }
    s.push_str("}\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::fixtures;
    use crate::facecolor::color_faces_exact;
    use crate::flow3::mod3_orientation;
    use crate::multigraph::named;

    #[test]
    fn palette_separates_three_colours() {
        let mut first: Vec<_> = PALETTE[..3].to_vec();
        first.dedup();
        assert_eq!(first.len(), 3);
        let mut all = PALETTE.to_vec();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 12);
    }

    #[test]
    fn svg_has_one_polygon_per_inner_face() {
        let d = fixtures::convex_k4();
        let c = color_faces_exact(&d, 4).unwrap();
        let svg = to_svg(&d, Overlay { coloring: Some(&c), orientation: None }).unwrap();
        assert_eq!(svg.matches("class=\"face\"").count(), d.faces().len() - 1);
        assert_eq!(svg.matches("class=\"seg\"").count(), d.seg_count());
        assert_eq!(svg.matches("class=\"crossing\"").count(), 1);
        assert!(!svg.contains("NaN"));
    }

    #[test]
    fn orientation_arrows() {
        let d = fixtures::square();
        let o = mod3_orientation(d.underlying()).unwrap_or_else(|| Orientation::all_forward(d.underlying().clone()));
        let svg = to_svg(&d, Overlay { coloring: None, orientation: Some(&o) }).unwrap();
        assert_eq!(svg.matches("marker-end").count(), 4);
        let dot = to_dot(&d, Overlay { coloring: None, orientation: Some(&o) }).unwrap();
        assert_eq!(dot.matches("dir=").count(), 4);
        let wrong = Orientation::all_forward(named::cycle(3));
        assert!(matches!(to_dot(&d, Overlay { coloring: None, orientation: Some(&wrong) }), Err(ExportError::Edge(3))));
    }

    #[test]
    fn dot_lists_faces_and_rejects_short_colourings() {
        let d = fixtures::figure_eight();
        let c = color_faces_exact(&d, 2).unwrap();
        let dot = to_dot(&d, Overlay { coloring: Some(&c), orientation: None }).unwrap();
        assert_eq!(dot.matches("shape=box").count(), 3);
        let short = FaceColoring { k: 2, colors: vec![0] };
        assert!(to_dot(&d, Overlay { coloring: Some(&short), orientation: None }).is_err());
    }
}
