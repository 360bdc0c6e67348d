//! Exact Roman domination number and classical domination number.
//!
//! A minimum Roman dominating function is determined by its set `S` of
//! 2-labeled vertices: vertices in `N(S) \ S` take 0 and everything not
//! dominated by `S` takes 1, so
//!
//! ```text
//! gamma_R(G) = min over S of 2|S| + |V \ N[S]|.
//! ```
//!
//! Both solvers enumerate `S` by increasing size over a degree-ordered
//! candidate list and cut branches whose lower bound exceeds the best weight
//! found so far.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{full_mask, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RomanError {
    #[error("assignment has {got} labels, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("label {label} at vertex {vertex} is not in {{0,1,2}}")]
    InvalidLabel { vertex: usize, label: u8 },
}

/// A labeling `V -> {0,1,2}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RomanAssignment(Vec<u8>);

impl RomanAssignment {
    pub fn new(values: Vec<u8>) -> Result<Self, RomanError> {
        if let Some((vertex, &label)) = values.iter().enumerate().find(|(_, &l)| l > 2) {
            return Err(RomanError::InvalidLabel { vertex, label });
        }
        Ok(RomanAssignment(values))
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `f(V)`.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    /// `f(S)` for a vertex subset.
    pub fn weight_of<I: IntoIterator<Item = usize>>(&self, vertices: I) -> usize {
        vertices.into_iter().map(|v| self.0[v] as usize).sum()
    }

    /// Vertices labeled 2, as a bit row.
    pub fn twos(&self) -> u64 {
        self.mask_of(2)
    }

    fn mask_of(&self, label: u8) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == label)
            .fold(0, |acc, (v, _)| acc | 1u64 << v)
    }

    /// The assignment induced by a 2-set: 2 on `twos`, 0 on vertices they
    /// dominate, 1 elsewhere.
    pub(crate) fn from_twos(rows: &[u64], twos: u64) -> Self {
        let dominated = closed_union(rows, twos);
        RomanAssignment(
            (0..rows.len())
                .map(|v| {
                    if twos >> v & 1 == 1 {
                        2
                    } else if dominated >> v & 1 == 1 {
                        0
                    } else {
                        1
                    }
                })
                .collect(),
        )
    }
}

impl fmt::Display for RomanAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Optimal Roman dominating function with its weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaResult {
    pub value: usize,
    pub witness: RomanAssignment,
    pub nodes_explored: u64,
}

/// Minimum dominating set with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
}

/// True iff every 0-labeled vertex has a 2-labeled neighbor.
pub fn is_valid_rdf(g: &Graph, f: &RomanAssignment) -> Result<bool, RomanError> {
    if f.len() != g.n() {
        return Err(RomanError::LengthMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    let twos = f.twos();
    Ok(f.0
        .iter()
        .enumerate()
        .all(|(v, &l)| l != 0 || g.rows()[v] & twos != 0))
}

#[inline]
fn closed_union(rows: &[u64], set: u64) -> u64 {
    let mut acc = set;
    let mut s = set;
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        s &= s - 1;
        acc |= rows[v];
    }
    acc
}

/// Candidate 2-vertices (non-isolated, by descending degree then index)
/// with their closed neighborhoods, plus the largest closed-neighborhood
/// size over every suffix of the list.
struct Candidates {
    vertices: Vec<usize>,
    closed: Vec<u64>,
    suffix_cover: Vec<u32>,
}

impl Candidates {
    fn by_degree(rows: &[u64]) -> Self {
        let mut vertices: Vec<usize> = (0..rows.len()).filter(|&v| rows[v] != 0).collect();
        vertices.sort_by_key(|&v| (std::cmp::Reverse(rows[v].count_ones()), v));
        Self::from_order(rows, vertices)
    }

    fn by_index(rows: &[u64]) -> Self {
        Self::from_order(rows, (0..rows.len()).collect())
    }

    fn from_order(rows: &[u64], vertices: Vec<usize>) -> Self {
        let closed: Vec<u64> = vertices.iter().map(|&v| rows[v] | 1u64 << v).collect();
        let mut suffix_cover = vec![0u32; closed.len() + 1];
        for i in (0..closed.len()).rev() {
            suffix_cover[i] = suffix_cover[i + 1].max(closed[i].count_ones());
        }
        Candidates {
            vertices,
            closed,
            suffix_cover,
        }
    }

    fn len(&self) -> usize {
        self.vertices.len()
    }
}

/// Exact Roman domination number. Among all optimal labelings the
/// lexicographically least value vector is returned.
pub fn gamma_roman(g: &Graph) -> GammaResult {
    let rows = g.rows();
    let n = g.n();
    let mut search = RomanOptimizer {
        rows,
        all: full_mask(n),
        cand: Candidates::by_degree(rows),
        size: 0,
        best_weight: n,
        best: RomanAssignment(vec![1; n]),
        nodes: 1,
    };
    for size in 1..=search.cand.len() {
        // ties at 2|S| == best can still give a lexicographically smaller vector
        if 2 * size > search.best_weight {
            break;
        }
        search.size = size;
        search.descend(0, size, 0, 0);
    }
    debug_assert_eq!(search.best.weight(), search.best_weight);
    GammaResult {
        value: search.best_weight,
        witness: search.best,
        nodes_explored: search.nodes,
    }
}

struct RomanOptimizer<'a> {
    rows: &'a [u64],
    all: u64,
    cand: Candidates,
    size: usize,
    best_weight: usize,
    best: RomanAssignment,
    nodes: u64,
}

impl RomanOptimizer<'_> {
    fn descend(&mut self, start: usize, remaining: usize, dominated: u64, chosen: u64) {
        self.nodes += 1;
        let undominated = (self.all & !dominated).count_ones() as usize;
        if remaining == 0 {
            let weight = 2 * self.size + undominated;
            if weight > self.best_weight {
                return;
            }
            let candidate = RomanAssignment::from_twos(self.rows, chosen);
            let better = match weight.cmp(&self.best_weight) {
                Ordering::Less => true,
                Ordering::Equal => candidate < self.best,
                Ordering::Greater => false,
            };
            if better {
                self.best_weight = weight;
                self.best = candidate;
            }
            return;
        }
        let reach = remaining * self.cand.suffix_cover[start] as usize;
        if 2 * self.size + undominated.saturating_sub(reach) > self.best_weight {
            return;
        }
        for i in start..=self.cand.len() - remaining {
            let v = self.cand.vertices[i];
            self.descend(
                i + 1,
                remaining - 1,
                dominated | self.cand.closed[i],
                chosen | 1u64 << v,
            );
        }
    }
}

/// Decides `gamma_R <= k` for the graph given by its neighbor rows.
pub fn roman_at_most(rows: &[u64], k: usize) -> bool {
    let n = rows.len();
    if n <= k {
        return true;
    }
    let cand = Candidates::by_degree(rows);
    let all = full_mask(n);
    (1..=(k / 2).min(cand.len())).any(|size| {
        let slack = k - 2 * size;
        exists_cover(&cand, all, 0, size, 0, slack)
    })
}

/// Is there a choice of `remaining` more candidates from `start` leaving at
/// most `slack` vertices undominated?
fn exists_cover(
    cand: &Candidates,
    all: u64,
    start: usize,
    remaining: usize,
    dominated: u64,
    slack: usize,
) -> bool {
    let undominated = (all & !dominated).count_ones() as usize;
    if remaining == 0 {
        return undominated <= slack;
    }
    let reach = remaining * cand.suffix_cover[start] as usize;
    if undominated > slack + reach {
        return false;
    }
    (start..=cand.len() - remaining).any(|i| {
        exists_cover(
            cand,
            all,
            i + 1,
            remaining - 1,
            dominated | cand.closed[i],
            slack,
        )
    })
}

/// Exact Roman domination number from neighbor rows, without a witness.
pub fn roman_value(rows: &[u64]) -> usize {
    let n = rows.len();
    (0..=n).find(|&k| roman_at_most(rows, k)).unwrap_or(n)
}

/// Exact domination number. The witness is the first minimum dominating
/// set in lexicographic order of sorted vertex lists.
pub fn gamma(g: &Graph) -> DominationResult {
    let rows = g.rows();
    let n = g.n();
    let cand = Candidates::by_index(rows);
    let all = full_mask(n);
    let mut nodes = 0u64;
    for size in 1..=n {
        let mut chosen = Vec::with_capacity(size);
        if first_dominating(&cand, all, 0, size, 0, &mut chosen, &mut nodes) {
            return DominationResult {
                value: size,
                witness: chosen,
                nodes_explored: nodes,
            };
        }
    }
    unreachable!("V dominates itself")
}

fn first_dominating(
    cand: &Candidates,
    all: u64,
    start: usize,
    remaining: usize,
    dominated: u64,
    chosen: &mut Vec<usize>,
    nodes: &mut u64,
) -> bool {
    *nodes += 1;
    let undominated = (all & !dominated).count_ones() as usize;
    if remaining == 0 {
        return undominated == 0;
    }
    if undominated > remaining * cand.suffix_cover[start] as usize {
        return false;
    }
    for i in start..=cand.len() - remaining {
        chosen.push(cand.vertices[i]);
        if first_dominating(
            cand,
            all,
            i + 1,
            remaining - 1,
            dominated | cand.closed[i],
            chosen,
            nodes,
        ) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Decides `gamma <= k` for the graph given by its neighbor rows.
pub fn dominating_at_most(rows: &[u64], k: usize) -> bool {
    let n = rows.len();
    if n <= k {
        return true;
    }
    // isolated vertices are not candidates and must dominate themselves
    let cand = Candidates::by_degree(rows);
    let isolated = n - cand.len();
    if isolated > k {
        return false;
    }
    let all = full_mask(n);
    (0..=(k - isolated).min(cand.len())).any(|size| exists_cover(&cand, all, 0, size, 0, isolated))
}

/// Exact domination number from neighbor rows, without a witness.
pub fn domination_value(rows: &[u64]) -> usize {
    let n = rows.len();
    (1..=n).find(|&k| dominating_at_most(rows, k)).unwrap_or(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{gen_tpartite, named_graph, PartiteSpec};

    fn rdf(v: &[u8]) -> RomanAssignment {
        RomanAssignment::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rdf_validity() {
        let k3 = named_graph("k3").unwrap();
        let c5 = named_graph("c5").unwrap();
        let e3 = Graph::edgeless(3).unwrap();
        assert_eq!(is_valid_rdf(&k3, &rdf(&[2, 0, 0])), Ok(true));
        assert_eq!(is_valid_rdf(&c5, &rdf(&[2, 0, 0, 0, 2])), Ok(false));
        assert_eq!(is_valid_rdf(&e3, &rdf(&[1, 1, 1])), Ok(true));
        assert_eq!(is_valid_rdf(&e3, &rdf(&[0, 1, 1])), Ok(false));
        assert_eq!(
            is_valid_rdf(&e3, &rdf(&[1, 1])),
            Err(RomanError::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
        assert!(RomanAssignment::new(vec![0, 3]).is_err());
    }

    #[test]
    fn roman_numbers_of_small_graphs() {
        assert_eq!(gamma_roman(&named_graph("c5").unwrap()).value, 4);
        let k23 = gen_tpartite(&PartiteSpec::new(vec![2, 3]).unwrap()).graph;
        assert_eq!(gamma_roman(&k23).value, 3);
        for n in 1..=6 {
            let r = gamma_roman(&Graph::edgeless(n).unwrap());
            assert_eq!(r.value, n);
            assert_eq!(r.witness.values(), vec![1; n].as_slice());
        }
        assert_eq!(gamma_roman(&named_graph("p4").unwrap()).value, 3);
        assert_eq!(gamma_roman(&named_graph("k1").unwrap()).value, 1);
        assert_eq!(gamma_roman(&named_graph("p2").unwrap()).value, 2);
    }

    #[test]
    fn lexicographically_least_witness() {
        // K3: [0,0,2] < [0,2,0] < [2,0,0]
        let r = gamma_roman(&named_graph("k3").unwrap());
        assert_eq!(r.witness.values(), &[0, 0, 2]);
        // P4 0-1-2-3, weight 3: candidates include [0,2,0,1] and [1,0,2,0]
        let r = gamma_roman(&named_graph("p4").unwrap());
        assert_eq!(r.witness.values(), &[0, 2, 0, 1]);
        // K2: [0,2] beats [1,1] and [2,0]
        let r = gamma_roman(&named_graph("p2").unwrap());
        assert_eq!(r.witness.values(), &[0, 2]);
    }

    #[test]
    fn domination_numbers() {
        for n in 1..=6 {
            assert_eq!(gamma(&named_graph(&format!("k{n}")).unwrap()).value, 1);
            assert_eq!(gamma(&Graph::edgeless(n).unwrap()).value, n);
        }
        let r = gamma(&named_graph("c5").unwrap());
        assert_eq!(r.value, 2);
        assert_eq!(r.witness, vec![0, 2]);
    }

    #[test]
    fn isolated_vertices_count_toward_domination() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 4), (2, 5)]).unwrap();
        assert_eq!(gamma(&g).value, 3);
        assert_eq!(domination_value(g.rows()), 3);
        assert!(!dominating_at_most(g.rows(), 2));
        assert!(dominating_at_most(Graph::edgeless(3).unwrap().rows(), 3));
    }

    #[test]
    fn decision_procedures_agree_with_optimizers() {
        for name in ["c5", "p4", "k3,3", "prism", "k1,1,2", "c7", "p7"] {
            let g = named_graph(name).unwrap();
            let gr = gamma_roman(&g).value;
            assert_eq!(roman_value(g.rows()), gr, "{name}");
            assert!(roman_at_most(g.rows(), gr));
            assert!(!roman_at_most(g.rows(), gr - 1));
            assert_eq!(domination_value(g.rows()), gamma(&g).value, "{name}");
        }
    }
}
