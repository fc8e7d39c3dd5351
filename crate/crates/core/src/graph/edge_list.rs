//! Hand-authored edge lists: a vertex count on the first line, then one
//! 0-based `u v` pair per line. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .split_inclusive('\n')
        .scan(0usize, |offset, line| {
            let start = *offset;
            *offset += line.len();
            Some((start, line))
        })
        .map(|(start, line)| (start, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (start, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(start, format!("vertex count `{header}` is not a nonnegative integer")))?;

    let mut edges = Vec::new();
    for (start, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(Error::parse(start, format!("expected `u v`, found `{line}`")));
        };
        let index = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(start, format!("vertex `{s}` is not a nonnegative integer")))
        };
        let (u, v) = (index(u)?, index(v)?);
        if u == v {
            return Err(Error::parse(start, format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::parse(start, format!("vertex index out of range 0..{n} in `{line}`")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
