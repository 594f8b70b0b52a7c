use std::collections::HashMap;
use std::io::Write;

use thiserror::Error;

use super::Color;
use crate::graph::{EdgeId, Graph};

#[derive(Debug, Error)]
pub enum ColoringFileError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {u}-{v} is not an edge of the graph")]
    UnknownEdge { u: usize, v: usize, line: usize },
    #[error("line {line}: edge {u}-{v} listed twice")]
    Repeated { u: usize, v: usize, line: usize },
}

/// One `u v c` line per edge in id order; `c = 0` marks an uncolored edge.
pub fn write_coloring<W: Write>(g: &Graph, colors: &[Option<Color>], mut out: W) -> std::io::Result<()> {
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(out, "{u} {v} {}", colors[e].unwrap_or(0))?;
    }
    Ok(())
}

/// Reads the `u v c` format back into an edge-indexed assignment. Edges not
/// listed stay uncolored. Orientation of `u v` does not matter.
pub fn read_coloring(g: &Graph, text: &str) -> Result<Vec<Option<Color>>, ColoringFileError> {
    let index: HashMap<(usize, usize), EdgeId> =
        g.edges().iter().enumerate().map(|(e, &(u, v))| ((u.min(v), u.max(v)), e)).collect();
    let mut colors = vec![None; g.m()];
    let mut listed = vec![false; g.m()];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks.len() != 3 {
            return Err(ColoringFileError::Parse { line, msg: format!("expected `u v c`, got `{}`", body.trim()) });
        }
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| ColoringFileError::Parse { line, msg: format!("bad number `{t}`") })
        };
        let (u, v, c) = (num(toks[0])?, num(toks[1])?, num(toks[2])?);
        let e = *index
            .get(&(u.min(v), u.max(v)))
            .ok_or(ColoringFileError::UnknownEdge { u, v, line })?;
        if std::mem::replace(&mut listed[e], true) {
            return Err(ColoringFileError::Repeated { u, v, line });
        }
        let c = Color::try_from(c)
            .map_err(|_| ColoringFileError::Parse { line, msg: format!("color {c} too large") })?;
        colors[e] = (c != 0).then_some(c);
    }
    Ok(colors)
}
