//! Complete multipartite graphs, complements of disjoint cycle unions
//! (the (n-3)-regular graphs), and a few named graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{full_mask, BitIter, Edge, Graph, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
}

fn invalid(msg: impl Into<String>) -> SpecError {
    SpecError::InvalidSpec(msg.into())
}

/// Part sizes of a complete multipartite graph, stored ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartiteSpec {
    parts: Vec<usize>,
}

impl PartiteSpec {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, SpecError> {
        if parts.len() < 2 {
            return Err(invalid(format!(
                "a complete multipartite graph needs at least 2 parts, got {}",
                parts.len()
            )));
        }
        if parts.contains(&0) {
            return Err(invalid("part sizes must be at least 1"));
        }
        let n: usize = parts.iter().sum();
        if n > MAX_VERTICES {
            return Err(invalid(format!("order {n} exceeds {MAX_VERTICES}")));
        }
        parts.sort_unstable();
        Ok(PartiteSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn t(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Smallest part size.
    pub fn min_part(&self) -> usize {
        self.parts[0]
    }

    /// Largest part size.
    pub fn max_part(&self) -> usize {
        self.parts[self.parts.len() - 1]
    }

    /// How many parts share the smallest size.
    pub fn min_multiplicity(&self) -> usize {
        self.parts
            .iter()
            .take_while(|&&p| p == self.parts[0])
            .count()
    }

    /// Vertex blocks in ascending order: part `j` gets the next `m_j` labels.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&size| {
                let block = (start..start + size).collect();
                start += size;
                block
            })
            .collect()
    }
}

impl fmt::Display for PartiteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

impl FromStr for PartiteSpec {
    type Err = SpecError;
    fn from_str(s: &str) -> Result<Self, SpecError> {
        PartiteSpec::new(parse_list(s)?)
    }
}

impl Serialize for PartiteSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Cycle lengths whose disjoint union is the complement of the graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoCycleSpec {
    lengths: Vec<usize>,
}

impl CoCycleSpec {
    pub fn new(mut lengths: Vec<usize>) -> Result<Self, SpecError> {
        if lengths.is_empty() {
            return Err(invalid("need at least one cycle"));
        }
        if let Some(&bad) = lengths.iter().find(|&&l| l < 3) {
            return Err(invalid(format!("cycle length {bad} is below 3")));
        }
        let n: usize = lengths.iter().sum();
        if n > MAX_VERTICES {
            return Err(invalid(format!("order {n} exceeds {MAX_VERTICES}")));
        }
        lengths.sort_unstable();
        Ok(CoCycleSpec { lengths })
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn n(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// True for (3,3,...,3): the complement is a union of triangles.
    pub fn is_all_threes(&self) -> bool {
        self.lengths.iter().all(|&l| l == 3)
    }

    /// Consecutive vertex runs, one per cycle.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut start = 0;
        self.lengths
            .iter()
            .map(|&len| {
                let run = (start..start + len).collect();
                start += len;
                run
            })
            .collect()
    }
}

impl fmt::Display for CoCycleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("co:")?;
        write_list(f, &self.lengths)
    }
}

impl FromStr for CoCycleSpec {
    type Err = SpecError;
    fn from_str(s: &str) -> Result<Self, SpecError> {
        let body = s.strip_prefix("co:").unwrap_or(s);
        CoCycleSpec::new(parse_list(body)?)
    }
}

impl Serialize for CoCycleSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<usize>, SpecError> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| invalid(format!("bad size {tok:?} in {s:?}")))
        })
        .collect()
}

/// A complete multipartite graph together with its parts.
#[derive(Debug, Clone)]
pub struct PartiteGraph {
    pub graph: Graph,
    pub parts: Vec<Vec<usize>>,
}

/// Complete multipartite graph: `uv` is an edge iff `u` and `v` lie in
/// different parts.
pub fn gen_tpartite(spec: &PartiteSpec) -> PartiteGraph {
    let n = spec.n();
    let parts = spec.blocks();
    let all = full_mask(n);
    let mut rows = vec![0u64; n];
    for block in &parts {
        let mask = VertexSet::from_vertices(block.iter().copied()).0;
        for &v in block {
            rows[v] = all & !mask;
        }
    }
    PartiteGraph {
        graph: Graph::from_rows(rows),
        parts,
    }
}

/// Disjoint union of cycles with the given lengths; a length-3 cycle is a
/// triangle.
pub fn cycle_union(spec: &CoCycleSpec) -> Graph {
    let n = spec.n();
    let mut edges = Vec::with_capacity(n);
    for run in spec.cycles() {
        for k in 0..run.len() {
            edges.push(Edge::new(run[k], run[(k + 1) % run.len()]));
        }
    }
    Graph::from_edges(n, edges).expect("cycle runs are disjoint")
}

/// Complement of the disjoint union of cycles; (n-3)-regular.
pub fn gen_co_cycles(spec: &CoCycleSpec) -> Graph {
    cycle_union(spec).complement()
}

/// One spec per isomorphism class of (n-3)-regular graphs of order `n`:
/// the partitions of `n` into parts of size at least 3, each ascending,
/// listed in lexicographic order.
pub fn enum_n_minus_3_regular(n: usize) -> Vec<CoCycleSpec> {
    partitions_with_min_part(n, 3, 1)
        .into_iter()
        .map(|p| CoCycleSpec::new(p).expect("parts are >= 3"))
        .collect()
}

/// Every complete multipartite spec with at least two parts and order at
/// most `max_n`, ordered by `n` and then lexicographically.
pub fn enum_tpartite_specs(max_n: usize) -> Vec<PartiteSpec> {
    (2..=max_n.min(MAX_VERTICES))
        .flat_map(|n| partitions_with_min_part(n, 1, 2))
        .map(|p| PartiteSpec::new(p).expect("at least two positive parts"))
        .collect()
}

/// Ascending partitions of `n` with every part `>= min_part` and at least
/// `min_parts` parts, in lexicographic order.
fn partitions_with_min_part(n: usize, min_part: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in lo..=rest {
            // the remainder must either vanish or fit at least one more part
            if rest - p != 0 && rest - p < p {
                continue;
            }
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, min_part.max(1), &mut Vec::new(), &mut out);
    }
    out.retain(|p| p.len() >= min_parts);
    out
}

/// `Some(t)` when the complement is a disjoint union of `t` triangles,
/// i.e. the graph is `K_{3,3,...,3}` with `t` parts.
pub fn is_all_threes(g: &Graph) -> Option<usize> {
    if !g.n().is_multiple_of(3) {
        return None;
    }
    let comp = g.complement();
    let comps = comp.components();
    comps
        .iter()
        .all(|c| c.len() == 3 && comp.induced_edge_count(*c) == 3)
        .then_some(comps.len())
}

/// Recovers the parts of a complete multipartite graph (with at least two
/// parts), sorted by size and then by smallest vertex.
pub fn recognize_tpartite(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let all = full_mask(n);
    let mut seen = 0u64;
    let mut parts = Vec::new();
    for v in 0..n {
        if seen >> v & 1 == 1 {
            continue;
        }
        let class = !g.rows()[v] & all;
        if BitIter(class).any(|u| !g.rows()[u] & all != class) {
            return None;
        }
        seen |= class;
        parts.push(BitIter(class).collect::<Vec<_>>());
    }
    if parts.len() < 2 {
        return None;
    }
    parts.sort_by_key(|p| (p.len(), p[0]));
    Some(parts)
}

/// For an (n-3)-regular graph, walks each complement cycle and returns the
/// vertex sequences, ordered by smallest vertex.
pub fn recognize_co_cycles(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if n < 3 || g.regular_degree() != Some(n - 3) {
        return None;
    }
    let comp = g.complement();
    let mut seen = 0u64;
    let mut cycles = Vec::new();
    for s in 0..n {
        if seen >> s & 1 == 1 {
            continue;
        }
        let mut cycle = vec![s];
        let mut prev = s;
        let mut cur = BitIter(comp.rows()[s]).next()?;
        while cur != s {
            cycle.push(cur);
            let next = BitIter(comp.rows()[cur] & !(1u64 << prev)).next()?;
            prev = cur;
            cur = next;
        }
        for &v in &cycle {
            seen |= 1u64 << v;
        }
        cycles.push(cycle);
    }
    Some(cycles)
}

/// Named graphs used by the command line: `cN` (cycle), `pN` (path), `kN`
/// (complete), `k<a,b,...>` (complete multipartite) and `prism`.
pub fn named_graph(name: &str) -> Option<Graph> {
    let name = name.trim().to_ascii_lowercase();
    if name == "prism" {
        return Some(gen_co_cycles(&CoCycleSpec::new(vec![6]).ok()?));
    }
    let (kind, rest) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
    match kind {
        "c" => {
            let n: usize = rest.parse().ok()?;
            if !(3..=MAX_VERTICES).contains(&n) {
                return None;
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).ok()
        }
        "p" => {
            let n: usize = rest.parse().ok()?;
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).ok()
        }
        "k" if rest.contains(',') => Some(gen_tpartite(&rest.parse().ok()?).graph),
        "k" => {
            let n: usize = rest.parse().ok()?;
            if n == 1 {
                return Graph::edgeless(1).ok();
            }
            let spec = PartiteSpec::new(vec![1; n]).ok()?;
            Some(gen_tpartite(&spec).graph)
        }
        _ => None,
    }
}
