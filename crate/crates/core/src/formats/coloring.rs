use std::fmt::Write;

use crate::facecolor::FaceColoring;

use super::{arity, num, records, syntax, FormatError};

/// `k <k>` followed by one `f <face> <colour>` line per face, faces numbered 0, 1, ...
pub fn parse_coloring(text: &str) -> Result<FaceColoring, FormatError> {
    let mut k = None;
    let mut colors: Vec<Option<u8>> = Vec::new();
    for (line, f) in records(text) {
        match f[0] {
            "k" => {
                arity(line, &f, 2)?;
                if k.replace(num::<u8>(line, f[1])?).is_some() {
                    return Err(syntax(line, "repeated `k`"));
                }
            }
            "f" => {
                arity(line, &f, 3)?;
                let face: usize = num(line, f[1])?;
                let c: u8 = num(line, f[2])?;
                if face >= colors.len() {
                    colors.resize(face + 1, None);
                }
                if colors[face].replace(c).is_some() {
                    return Err(syntax(line, format!("face {face} coloured twice")));
                }
            }
            t => return Err(syntax(line, format!("unknown record `{t}`"))),
        }
    }
    let k = k.ok_or_else(|| FormatError::Content("missing `k` line".into()))?;
    let colors = colors
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| FormatError::Content(format!("face {i} has no colour"))))
        .collect::<Result<Vec<u8>, _>>()?;
    if let Some(c) = colors.iter().find(|&&c| c >= k) {
        return Err(FormatError::Content(format!("colour {c} is not below k = {k}")));
    }
    Ok(FaceColoring { k, colors })
}

pub fn write_coloring(c: &FaceColoring) -> String {
    let mut s = format!("k {}\n", c.k);
    for (f, col) in c.colors.iter().enumerate() {
        writeln!(s, "f {f} {col}").expect("string");
    }
    s
}
