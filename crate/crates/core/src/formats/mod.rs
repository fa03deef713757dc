//! Line-oriented text formats. Every line is `<tag> <fields...>`; `#` starts a comment and
//! blank lines are skipped. Serializers write the canonical form, which parses back to the
//! same value and re-serializes to the same bytes.

mod cmap;
mod coloring;
mod graph;
mod orientation;
mod poly;

pub use cmap::{parse_cmap, write_cmap};
pub use coloring::{parse_coloring, write_coloring};
pub use graph::{parse_graph, write_graph};
pub use orientation::{parse_flow, parse_orientation, write_flow, write_orientation};
pub use poly::{parse_poly, write_poly};

use thiserror::Error;

use crate::drawing::DrawingError;
use crate::flow3::FlowError;
use crate::multigraph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Content(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Flow(#[from] FlowError),
}

/// Non-empty lines with comments removed, as `(line number, fields)`.
pub(crate) fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

pub(crate) fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

pub(crate) fn num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T, FormatError> {
    s.parse().map_err(|_| syntax(line, format!("expected a number, found `{s}`")))
}

pub(crate) fn arity(line: usize, fields: &[&str], n: usize) -> Result<(), FormatError> {
    if fields.len() != n {
        return Err(syntax(line, format!("`{}` takes {} fields, found {}", fields[0], n - 1, fields.len() - 1)));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
