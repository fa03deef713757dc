use std::fmt::Write;

use crate::drawing::PolylineDrawing;
use crate::geometry::{format_rational, parse_rational, Point};

use super::{num, records, syntax, FormatError};

fn coord(line: usize, s: &str) -> Result<crate::geometry::Q, FormatError> {
    parse_rational(s).ok_or_else(|| syntax(line, format!("expected a rational, found `{s}`")))
}

/// `v <id> <x> <y>` and `e <id> <u> <v> [: <x,y> ...]`.
pub fn parse_poly(text: &str) -> Result<PolylineDrawing, FormatError> {
    let mut p = PolylineDrawing::default();
    for (line, f) in records(text) {
        match f[0] {
            "v" => {
                if f.len() != 4 {
                    return Err(syntax(line, "`v` takes an id and two coordinates"));
                }
                let id = num(line, f[1])?;
                let pt = Point::new(coord(line, f[2])?, coord(line, f[3])?);
                if p.vertices.insert(id, pt).is_some() {
                    return Err(syntax(line, format!("duplicate vertex {id}")));
                }
            }
            "e" => {
                if f.len() < 4 || (f.len() > 4 && f[4] != ":") {
                    return Err(syntax(line, "`e` takes an id, two endpoints and optional `: x,y ...` bends"));
                }
                let id = num(line, f[1])?;
                let mut bends = Vec::new();
                for b in f.iter().skip(5) {
                    let (x, y) = b.split_once(',').ok_or_else(|| syntax(line, format!("bend `{b}` is not `x,y`")))?;
                    bends.push(Point::new(coord(line, x)?, coord(line, y)?));
                }
                if p.edges.insert(id, (num(line, f[2])?, num(line, f[3])?, bends)).is_some() {
                    return Err(syntax(line, format!("duplicate edge {id}")));
                }
            }
            t => return Err(syntax(line, format!("unknown record `{t}`"))),
        }
    }
    Ok(p)
}

pub fn write_poly(p: &PolylineDrawing) -> String {
    let mut s = String::new();
    for (v, pt) in &p.vertices {
        writeln!(s, "v {v} {} {}", format_rational(&pt.x), format_rational(&pt.y)).expect("string");
    }
    for (e, (u, v, bends)) in &p.edges {
        write!(s, "e {e} {u} {v}").expect("string");
        if !bends.is_empty() {
            s.push_str(" :");
            for b in bends {
                write!(s, " {},{}", format_rational(&b.x), format_rational(&b.y)).expect("string");
            }
        }
        s.push('\n');
    }
    s
}
