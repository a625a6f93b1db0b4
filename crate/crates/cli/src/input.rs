use std::path::Path;

use rexlab_core::io::{graph6_decode, parse_graph_text};
use rexlab_core::patterns::parse_pattern;
use rexlab_core::Graph;

use crate::error::{CliError, Result};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// A shorthand like `K3,3`, otherwise a graph6 or edge-list file.
pub fn pattern(arg: &str) -> Result<Graph> {
    if let Ok(g) = parse_pattern(arg) {
        return Ok(g);
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(CliError::Usage(format!("{arg:?} is neither a pattern shorthand nor a file")));
    }
    graph_file(path).and_then(|mut gs| match gs.len() {
        1 => Ok(gs.remove(0)),
        n => Err(CliError::Usage(format!("{arg}: expected one graph, found {n}"))),
    })
}

/// Every graph in a file: one graph6 string per line, or a single edge list.
pub fn graph_file(path: &Path) -> Result<Vec<Graph>> {
    let text = read(path)?;
    let bad = |e: rexlab_core::GraphError| CliError::Usage(format!("{}: {e}", path.display()));
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    if lines.len() > 1 {
        if let Ok(gs) = lines.iter().map(|l| graph6_decode(l)).collect::<std::result::Result<Vec<_>, _>>() {
            return Ok(gs);
        }
    }
    parse_graph_text(&text).map(|g| vec![g]).map_err(bad)
}

/// Inline JSON, or the path of a file holding it.
pub fn json_or_file(arg: &str) -> Result<String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        read(Path::new(arg))
    }
}
