use std::fs;
use std::io::{self, Read};
use std::path::Path;

use pathenergy::graph::{parse_edge_list, parse_graph6_stream};
use pathenergy::Graph;

/// Reads `path`, or standard input for `None` and `-`.
pub fn read_source(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(text)
        }
    }
}

/// True when the first nonblank line looks like graph6: only bytes in the
/// printable graph6 range, or the `>>graph6<<` header.
pub fn looks_like_graph6(text: &str) -> bool {
    let Some(line) = text.lines().map(str::trim).find(|l| !l.is_empty()) else {
        return false;
    };
    line.starts_with(">>graph6<<") || line.bytes().all(|b| (63..=126).contains(&b))
}

/// Decodes exactly one graph, graph6 or edge list by auto-detection.
pub fn parse_single_graph(text: &str) -> Result<Graph, String> {
    if looks_like_graph6(text) {
        let mut graphs = parse_graph6_stream(text).map_err(|e| e.to_string())?;
        match graphs.len() {
            1 => Ok(graphs.remove(0)),
            n => Err(format!("expected one graph6 graph, found {n}; use `verify` for batches")),
        }
    } else {
        parse_edge_list(text).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        assert!(looks_like_graph6("Bw\n"));
        assert!(looks_like_graph6("\n>>graph6<<Bw"));
        assert!(!looks_like_graph6("3\n0 1\n"));
        assert!(!looks_like_graph6(""));
    }

    #[test]
    fn single_graph() {
        assert_eq!(parse_single_graph("Bw").unwrap().edge_count(), 3);
        assert_eq!(parse_single_graph("3\n0 1\n").unwrap().edge_count(), 1);
        assert!(parse_single_graph("Bw\nA_\n").is_err());
        assert!(parse_single_graph("3\n0 0\n").is_err());
    }
}
