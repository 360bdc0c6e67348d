use std::io::Read;
use std::path::Path;

use crate::family::{gen_co_cycles, gen_tpartite, named_graph, CoCycleSpec, PartiteSpec};
use crate::format::parse;
use crate::graph::Graph;

/// Resolves a graph source: `-` for standard input, a file path, or a
/// family spec (see [`family_graph`]).
pub fn load_graph(source: &str) -> Result<Graph, String> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading standard input: {e}"))?;
        return parse(&text).map_err(|e| format!("<stdin>: {e}"));
    }
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{source}: {e}"))?;
        return parse(&text).map_err(|e| format!("{source}: {e}"));
    }
    family_graph(source)
}

/// `3,3,3` (complete multipartite), `co:3,6` (complement of cycles), or a
/// named graph such as `c5`, `prism`, `k3,3`, `p4`, `k4`.
pub fn family_graph(spec: &str) -> Result<Graph, String> {
    let spec = spec.trim();
    if spec.starts_with("co:") {
        let s: CoCycleSpec = spec.parse().map_err(|e| format!("{e}"))?;
        return Ok(gen_co_cycles(&s));
    }
    if let Some(g) = named_graph(spec) {
        return Ok(g);
    }
    if !spec.is_empty() && spec.chars().all(|c| c.is_ascii_digit() || c == ',') {
        let s: PartiteSpec = spec.parse().map_err(|e| format!("{e}"))?;
        return Ok(gen_tpartite(&s).graph);
    }
    Err(format!(
        "{spec:?} is neither a readable file nor a graph spec"
    ))
}
