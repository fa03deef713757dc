use std::fmt::Write;

use crate::multigraph::Multigraph;

use super::{arity, num, records, syntax, FormatError};

/// `v <id>` and `e <id> <u> <v>` lines; edges may refer to vertices declared later.
pub fn parse_graph(text: &str) -> Result<Multigraph, FormatError> {
    let mut g = Multigraph::new();
    let mut edges = Vec::new();
    for (line, f) in records(text) {
        match f[0] {
            "v" => {
                arity(line, &f, 2)?;
                g.add_vertex(num(line, f[1])?).map_err(|e| syntax(line, e.to_string()))?;
            }
            "e" => {
                arity(line, &f, 4)?;
                edges.push((line, num(line, f[1])?, num(line, f[2])?, num(line, f[3])?));
            }
            t => return Err(syntax(line, format!("unknown record `{t}`"))),
        }
    }
    for (line, e, u, v) in edges {
        g.add_edge(e, u, v).map_err(|err| syntax(line, err.to_string()))?;
    }
    Ok(g)
}

pub fn write_graph(g: &Multigraph) -> String {
    let mut s = String::new();
    for v in g.vertices() {
        writeln!(s, "v {v}").expect("string");
    }
    for e in g.edges() {
        writeln!(s, "e {} {} {}", e.id, e.u, e.v).expect("string");
    }
    s
}
