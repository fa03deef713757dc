use std::collections::HashMap;
use std::fmt::Write;

use crate::flow3::{Orientation, Z3Flow};
use crate::multigraph::{EdgeId, Multigraph};

use super::{arity, num, records, syntax, FormatError};

/// `a <edge> <tail> <head>` for every edge of `g`; `f` lines are ignored.
pub fn parse_orientation(text: &str, g: &Multigraph) -> Result<Orientation, FormatError> {
    Ok(parse_flow(text, g)?.orientation)
}

/// Arcs plus optional `f <edge> <1|2>` values (1 where absent).
pub fn parse_flow(text: &str, g: &Multigraph) -> Result<Z3Flow, FormatError> {
    let mut arcs = Vec::new();
    let mut values: HashMap<EdgeId, u8> = HashMap::new();
    for (line, f) in records(text) {
        match f[0] {
            "a" => {
                arity(line, &f, 4)?;
                arcs.push((num(line, f[1])?, num(line, f[2])?, num(line, f[3])?));
            }
            "f" => {
                arity(line, &f, 3)?;
                let x: u8 = num(line, f[2])?;
                if x != 1 && x != 2 {
                    return Err(syntax(line, "flow values are 1 or 2"));
                }
                if values.insert(num(line, f[1])?, x).is_some() {
                    return Err(syntax(line, "repeated flow value"));
                }
            }
            t => return Err(syntax(line, format!("unknown record `{t}`"))),
        }
    }
    let orientation = Orientation::from_arcs(g.clone(), &arcs)?;
    if let Some(e) = values.keys().find(|e| !g.contains_edge(**e)) {
        return Err(FormatError::Content(format!("flow value for unknown edge {e}")));
    }
    let values = g.edges().map(|e| values.get(&e.id).copied().unwrap_or(1)).collect();
    Ok(Z3Flow { orientation, values })
}

pub fn write_orientation(o: &Orientation) -> String {
    let mut s = String::new();
    for (e, t, h) in o.arcs() {
        writeln!(s, "a {e} {t} {h}").expect("string");
    }
    s
}

pub fn write_flow(f: &Z3Flow) -> String {
    let mut s = write_orientation(&f.orientation);
    for (e, x) in f.orientation.graph.edges().zip(&f.values) {
        writeln!(s, "f {} {x}", e.id).expect("string");
    }
    s
}
