use std::io::{BufReader, Read, Write};
use std::str::FromStr;

use super::{Graph, GraphError};

/// On-disk graph formats.
///
/// * `EdgeList`: one `u v` pair per line, 0-based, `#` starts a comment. A
///   comment of the form `# n <count>` declares the vertex count (otherwise it
///   is `max id + 1`).
/// * `Dimacs`: `p edge <n> <m>` header, `e <u> <v>` lines with 1-based ids,
///   `c` comment lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl Format {
    /// DIMACS if the first meaningful line is a `p` or `c` line.
    pub fn detect(text: &str) -> Format {
        for line in text.lines() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return if t.starts_with("p ") || t.starts_with("c ") || t == "c" {
                Format::Dimacs
            } else {
                Format::EdgeList
            };
        }
        Format::EdgeList
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "el" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

pub fn load_graph<R: Read>(source: R, format: Format) -> Result<Graph, GraphError> {
    let mut text = String::new();
    BufReader::new(source).read_to_string(&mut text)?;
    parse_graph(&text, format)
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, GraphError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| GraphError::Parse { line, msg: format!("missing {what}") })?;
    tok.parse().map_err(|_| GraphError::Parse { line, msg: format!("bad {what} `{tok}`") })
}

fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared_n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            let mut toks = c.split_whitespace();
            if toks.next() == Some("n") {
                if let Some(Ok(n)) = toks.next().map(str::parse::<usize>) {
                    declared_n = Some(n);
                }
            }
        }
        let mut toks = body.split_whitespace();
        let Some(first) = toks.next() else { continue };
        let u = parse_num(Some(first), line, "vertex")?;
        let v = parse_num(toks.next(), line, "vertex")?;
        if let Some(extra) = toks.next() {
            return Err(GraphError::Parse { line, msg: format!("unexpected token `{extra}`") });
        }
        edges.push((u, v, line));
    }
    let n = declared_n
        .unwrap_or_else(|| edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_numbered(n, edges)
}

fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(GraphError::Parse { line, msg: "second `p` line".into() });
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(GraphError::Parse {
                            line,
                            msg: format!("expected `p edge`, got {other:?}"),
                        })
                    }
                }
                let n = parse_num(toks.next(), line, "vertex count")?;
                let m = parse_num(toks.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(GraphError::Parse { line, msg: "edge before `p` line".into() });
                };
                let u = parse_num(toks.next(), line, "vertex")?;
                let v = parse_num(toks.next(), line, "vertex")?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(GraphError::VertexOutOfRange { vertex: w, n, line });
                    }
                }
                edges.push((u - 1, v - 1, line));
            }
            Some(other) => {
                return Err(GraphError::Parse { line, msg: format!("unknown line type `{other}`") })
            }
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse { line: 0, msg: "missing `p edge` line".into() })?;
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_numbered(n, edges)
}

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "# n {}", g.n())?;
    writeln!(out, "# m {}", g.m())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn write_dimacs<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "p edge {} {}", g.n(), g.m())?;
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}
