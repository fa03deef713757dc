use std::fmt::Write;

use indexmap::IndexMap;

use crate::drawing::{seg_of, twin, DartId, PlanarizedDrawing, PvKind};
use crate::multigraph::{EdgeId, Multigraph};

use super::{num, records, syntax, FormatError};

// Darts are written as signed segment ids: `+s` leaves the first end of segment `s`, `-s`
// the second.
fn dart(line: usize, s: &str) -> Result<DartId, FormatError> {
    let (sign, rest) = s.split_at(s.len().min(1));
    let seg: usize = num(line, rest)?;
    match sign {
        "+" => Ok(2 * seg),
        "-" => Ok(2 * seg + 1),
        _ => Err(syntax(line, format!("dart `{s}` needs a `+` or `-` sign"))),
    }
}

fn show(d: DartId) -> String {
    format!("{}{}", if d % 2 == 0 { '+' } else { '-' }, seg_of(d))
}

fn dense<T>(line: usize, what: &str, v: &mut Vec<T>, id: usize, x: T) -> Result<(), FormatError> {
    if id != v.len() {
        return Err(syntax(line, format!("{what} ids must be 0, 1, 2, ... in order; expected {}", v.len())));
    }
    v.push(x);
    Ok(())
}

/// Parses a combinatorial map. The underlying graph is read off the normal vertices and
/// the ends of each trail; `outer` names a face in min-dart order.
pub fn parse_cmap(text: &str) -> Result<PlanarizedDrawing, FormatError> {
    let mut kinds = Vec::new();
    let mut segs = Vec::new();
    let mut rot: Vec<Option<Vec<DartId>>> = Vec::new();
    let mut trails: IndexMap<EdgeId, Vec<DartId>> = IndexMap::new();
    let mut trail_lines = Vec::new();
    let mut outer = None;
    for (line, f) in records(text) {
        match f[0] {
            "pv" => {
                let kind = match (f.len(), f.get(2).copied()) {
                    (4, Some("normal")) => PvKind::Normal(num(line, f[3])?),
                    (3, Some("crossing")) => PvKind::Crossing,
                    _ => return Err(syntax(line, "expected `pv <id> normal <vertex>` or `pv <id> crossing`")),
                };
                dense(line, "pv", &mut kinds, num(line, f[1])?, kind)?;
            }
            "seg" => {
                if f.len() != 4 {
                    return Err(syntax(line, "expected `seg <id> <pv> <pv>`"));
                }
                let ends = (num(line, f[2])?, num(line, f[3])?);
                dense(line, "seg", &mut segs, num(line, f[1])?, ends)?;
            }
            "rot" => {
                if f.len() < 2 {
                    return Err(syntax(line, "expected `rot <pv> <darts>`"));
                }
                let v: usize = num(line, f[1])?;
                let darts = f[2..].iter().map(|s| dart(line, s)).collect::<Result<Vec<_>, _>>()?;
                if v >= rot.len() {
                    rot.resize(v + 1, None);
                }
                if rot[v].replace(darts).is_some() {
                    return Err(syntax(line, format!("repeated rotation at pv {v}")));
                }
            }
            "trail" => {
                if f.len() < 3 {
                    return Err(syntax(line, "expected `trail <edge> <darts>`"));
                }
                let e: EdgeId = num(line, f[1])?;
                let darts = f[2..].iter().map(|s| dart(line, s)).collect::<Result<Vec<_>, _>>()?;
                if trails.insert(e, darts).is_some() {
                    return Err(syntax(line, format!("repeated trail for edge {e}")));
                }
                trail_lines.push(line);
            }
            "outer" => {
                if f.len() != 2 || outer.replace(num::<usize>(line, f[1])?).is_some() {
                    return Err(syntax(line, "expected a single `outer <face>`"));
                }
            }
            t => return Err(syntax(line, format!("unknown record `{t}`"))),
        }
    }
    if rot.len() > kinds.len() {
        return Err(FormatError::Content(format!("rotation given for unknown pv {}", kinds.len())));
    }
    let mut rot: Vec<Vec<DartId>> = rot.into_iter().map(Option::unwrap_or_default).collect();
    rot.resize(kinds.len(), Vec::new());

    let mut g = Multigraph::new();
    for k in &kinds {
        if let PvKind::Normal(x) = *k {
            g.add_vertex(x)?;
        }
    }
    let nd = 2 * segs.len();
    let origin = |d: DartId| if d % 2 == 0 { segs[d / 2].0 } else { segs[d / 2].1 };
    for ((&e, tr), &line) in trails.iter().zip(&trail_lines) {
        if let Some(&d) = tr.iter().find(|&&d| d >= nd) {
            return Err(syntax(line, format!("dart {} refers to an unknown segment", show(d))));
        }
        let end_vertex = |pv: usize| match kinds.get(pv) {
            Some(PvKind::Normal(x)) => Ok(*x),
            _ => Err(syntax(line, format!("trail of edge {e} does not end at normal vertices"))),
        };
        let u = end_vertex(origin(tr[0]))?;
        let v = end_vertex(origin(twin(tr[tr.len() - 1])))?;
        g.add_edge(e, u, v).map_err(|err| syntax(line, err.to_string()))?;
    }
    let probe = (nd > 0).then_some(0);
    let d = PlanarizedDrawing::from_parts(kinds, segs, rot, trails, g, probe)?;
    if nd == 0 {
        return match outer {
            None | Some(0) => Ok(d),
            Some(i) => Err(FormatError::Content(format!("outer face {i} does not exist"))),
        };
    }
    let i = outer.ok_or_else(|| FormatError::Content("missing `outer` line".into()))?;
    let faces = d.faces();
    let orbit = faces.orbits.get(i).ok_or_else(|| FormatError::Content(format!("outer face {i} does not exist")))?;
    Ok(d.with_outer(orbit[0])?)
}

pub fn write_cmap(d: &PlanarizedDrawing) -> String {
    let mut s = String::new();
    for (v, k) in d.kinds().iter().enumerate() {
        match k {
            PvKind::Normal(x) => writeln!(s, "pv {v} normal {x}"),
            PvKind::Crossing => writeln!(s, "pv {v} crossing"),
        }
        .expect("string");
    }
    for (i, (a, b)) in d.segments().iter().enumerate() {
        writeln!(s, "seg {i} {a} {b}").expect("string");
    }
    let list = |ds: &[DartId]| ds.iter().map(|&x| format!(" {}", show(x))).collect::<String>();
    for (v, r) in d.rotations().iter().enumerate() {
        writeln!(s, "rot {v}{}", list(r)).expect("string");
    }
    for (e, tr) in d.trails() {
        writeln!(s, "trail {e}{}", list(tr)).expect("string");
    }
    writeln!(s, "outer {}", d.faces().outer).expect("string");
    s
}
