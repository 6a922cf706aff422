//! Plain-text graph format: a header line `n <count>`, then one `u v` pair
//! per line (0-indexed). `#` starts a comment.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match g.as_mut() {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(Error::parse(line_no, "expected header `n <count>`"));
                }
                let n = fields[1].parse().map_err(|_| {
                    Error::parse(line_no, format!("bad vertex count `{}`", fields[1]))
                })?;
                g = Some(Graph::new(n));
            }
            Some(g) => {
                if fields.len() != 2 {
                    return Err(Error::parse(line_no, "expected edge `u v`"));
                }
                let parse_vertex = |s: &str| -> Result<usize> {
                    let v: usize = s
                        .parse()
                        .map_err(|_| Error::parse(line_no, format!("bad vertex `{s}`")))?;
                    if v >= g.order() {
                        return Err(Error::parse(
                            line_no,
                            format!("vertex {v} out of range for {} vertices", g.order()),
                        ));
                    }
                    Ok(v)
                };
                let u = parse_vertex(fields[0])?;
                let v = parse_vertex(fields[1])?;
                if u == v {
                    return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
                }
                if g.adjacent(u, v) {
                    return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
                }
                g.add_edge(u, v);
            }
        }
    }
    g.ok_or_else(|| Error::parse(1, "missing header `n <count>`"))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.order()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
