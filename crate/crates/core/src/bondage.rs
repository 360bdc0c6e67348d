//! Exact Roman bondage number and classical bondage number.
//!
//! The search deepens on the removal size `k = 1, 2, ...` and, inside each
//! level, walks `k`-subsets of the sorted edge list in lexicographic order
//! on a mutable copy of the adjacency rows. The first subset that raises
//! the invariant is the witness, so the result is the minimum in
//! `(k, lexicographic)` order regardless of how many workers run.
//!
//! Level `k` is split across workers by the index of the subset's first
//! edge. A shared bound records the smallest first index that has
//! succeeded; workers with a larger first index abandon their subtree.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::family::{recognize_co_cycles, recognize_tpartite};
use crate::graph::{Edge, EdgeSet, Graph};
use crate::roman::{dominating_at_most, domination_value, roman_at_most, roman_value};
use crate::witness;

/// A graph invariant that edge removal can only increase.
pub trait Invariant: Sync {
    fn name(&self) -> &'static str;
    /// Exact value for the graph with these neighbor rows.
    fn value(&self, rows: &[u64]) -> usize;
    /// Decides `value(rows) <= k`.
    fn at_most(&self, rows: &[u64], k: usize) -> bool;
}

/// Roman domination number.
#[derive(Debug, Clone, Copy, Default)]
pub struct RomanDomination;

impl Invariant for RomanDomination {
    fn name(&self) -> &'static str {
        "gamma_R"
    }
    fn value(&self, rows: &[u64]) -> usize {
        roman_value(rows)
    }
    fn at_most(&self, rows: &[u64], k: usize) -> bool {
        roman_at_most(rows, k)
    }
}

/// Classical domination number.
#[derive(Debug, Clone, Copy, Default)]
pub struct Domination;

impl Invariant for Domination {
    fn name(&self) -> &'static str {
        "gamma"
    }
    fn value(&self, rows: &[u64]) -> usize {
        domination_value(rows)
    }
    fn at_most(&self, rows: &[u64], k: usize) -> bool {
        dominating_at_most(rows, k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BondageError {
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("no edge removal can raise {invariant} above {base} (it already equals n)")]
    NoBondageSet {
        invariant: &'static str,
        base: usize,
    },
    #[error("no bondage set of size at most {budget}")]
    BudgetExhausted { budget: usize },
    #[error("edge-cover pruning requires a verified (n-3)-regular graph with n >= 5: {reason}")]
    PruningNotApplicable { reason: String },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest removal size to try.
    pub budget: Option<usize>,
    /// Only enumerate edge covers, starting at `k = ceil(n/2)`. Valid only
    /// for (n-3)-regular graphs with `n >= 5`, where every Roman bondage
    /// set touches every vertex.
    pub prune_edge_cover: bool,
    /// Cap the deepening with a constructed witness when the graph is
    /// recognized as complete multipartite or (n-3)-regular.
    pub seed_upper_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BondageResult {
    pub value: usize,
    pub witness: EdgeSet,
    /// Invariant of `G`.
    pub base: usize,
    /// Invariant of `G - witness`.
    pub raised: usize,
    pub subsets_tested: u64,
    /// Size of the constructed witness used to cap the search, if any.
    pub upper_bound: Option<usize>,
}

/// Roman bondage number `b_R(G)` with the first minimum bondage set in
/// lexicographic order.
pub fn bondage_roman(g: &Graph, opts: &SearchOptions) -> Result<BondageResult, BondageError> {
    bondage(g, &RomanDomination, opts)
}

/// Classical bondage number `b(G)`.
pub fn bondage_classical(g: &Graph, opts: &SearchOptions) -> Result<BondageResult, BondageError> {
    if opts.prune_edge_cover {
        return Err(BondageError::PruningNotApplicable {
            reason: "edge-cover pruning only holds for the Roman invariant".into(),
        });
    }
    bondage(g, &Domination, opts)
}

pub fn bondage<I: Invariant>(
    g: &Graph,
    inv: &I,
    opts: &SearchOptions,
) -> Result<BondageResult, BondageError> {
    let plan = Plan::new(g, inv, opts)?;
    plan.run(g)
}

impl<I: Invariant> Plan<'_, I> {
    fn run(&self, g: &Graph) -> Result<BondageResult, BondageError> {
        let plan = self;
        let inv = self.inv;
        let mut tested = 0u64;
        for k in plan.first_level..=plan.last_level {
            let level = plan.search_level(k);
            tested += level.tested;
            if let Some(indices) = level.found {
                let witness: EdgeSet = indices.iter().map(|&i| plan.edges[i]).collect();
                let raised = inv.value(g.remove_edges(&witness).expect("edges of g").rows());
                debug_assert!(raised > plan.base);
                return Ok(BondageResult {
                    value: k,
                    witness,
                    base: plan.base,
                    raised,
                    subsets_tested: tested,
                    upper_bound: plan.upper_bound,
                });
            }
        }
        Err(BondageError::BudgetExhausted {
            budget: plan.last_level,
        })
    }
}

/// Lists up to `max` minimum bondage sets in lexicographic order.
pub fn minimum_bondage_sets<I: Invariant>(
    g: &Graph,
    inv: &I,
    opts: &SearchOptions,
    max: usize,
) -> Result<(BondageResult, Vec<EdgeSet>), BondageError> {
    let plan = Plan::new(g, inv, opts)?;
    let first = plan.run(g)?;
    let mut found = Vec::new();
    if max > 0 {
        let mut rows = g.rows().to_vec();
        let mut chosen = Vec::with_capacity(first.value);
        let mut walker = Walker::new(&plan, first.value);
        walker.collect_all(&mut rows, 0, &mut chosen, &mut |idx| {
            found.push(idx.iter().map(|&i| plan.edges[i]).collect());
            found.len() < max
        });
    }
    Ok((first, found))
}

/// Does removing `b` raise the invariant?
pub fn raises<I: Invariant>(g: &Graph, inv: &I, b: &EdgeSet) -> bool {
    match g.remove_edges(b) {
        Ok(h) => !inv.at_most(h.rows(), inv.value(g.rows())),
        Err(_) => false,
    }
}

struct Plan<'a, I: Invariant> {
    inv: &'a I,
    edges: Vec<Edge>,
    base_rows: Vec<u64>,
    n: usize,
    base: usize,
    first_level: usize,
    last_level: usize,
    upper_bound: Option<usize>,
    cover: Option<CoverIndex>,
}

/// For each vertex, the index of its last incident edge in the sorted edge
/// list, so a partial subset can tell when a vertex can no longer be
/// covered.
struct CoverIndex {
    last_edge: Vec<usize>,
}

struct LevelOutcome {
    found: Option<Vec<usize>>,
    tested: u64,
}

impl<'a, I: Invariant> Plan<'a, I> {
    fn new(g: &Graph, inv: &'a I, opts: &SearchOptions) -> Result<Self, BondageError> {
        if g.m() == 0 {
            return Err(BondageError::EmptyGraph);
        }
        let n = g.n();
        let base = inv.value(g.rows());
        if base >= n {
            return Err(BondageError::NoBondageSet {
                invariant: inv.name(),
                base,
            });
        }
        let edges = g.edges();

        let mut first_level = 1;
        let mut cover = None;
        if opts.prune_edge_cover {
            if n < 5 || g.regular_degree() != Some(n - 3) {
                return Err(BondageError::PruningNotApplicable {
                    reason: format!("graph on {n} vertices is not (n-3)-regular with n >= 5"),
                });
            }
            first_level = n.div_ceil(2);
            let mut last_edge = vec![0usize; n];
            for (i, e) in edges.iter().enumerate() {
                last_edge[e.u] = i;
                last_edge[e.v] = i;
            }
            cover = Some(CoverIndex { last_edge });
        }

        let mut last_level = edges.len();
        let mut upper_bound = None;
        if opts.seed_upper_bound {
            if let Some(w) = seeded_witness(g) {
                if raises(g, inv, &w) {
                    upper_bound = Some(w.len());
                    last_level = last_level.min(w.len());
                }
            }
        }
        if let Some(budget) = opts.budget {
            last_level = last_level.min(budget);
        }

        Ok(Plan {
            inv,
            edges,
            base_rows: g.rows().to_vec(),
            n,
            base,
            first_level,
            last_level,
            upper_bound,
            cover,
        })
    }

    fn search_level(&self, k: usize) -> LevelOutcome {
        let m = self.edges.len();
        if k == 0 || k > m {
            return LevelOutcome {
                found: None,
                tested: 0,
            };
        }
        let best_first = AtomicUsize::new(usize::MAX);
        let counts: Vec<AtomicU64> = (0..=m - k).map(|_| AtomicU64::new(0)).collect();
        let hits: Vec<Option<Vec<usize>>> = (0..=m - k)
            .into_par_iter()
            .map(|first| {
                if first > best_first.load(Ordering::Relaxed) {
                    return None;
                }
                let mut walker = Walker::new(self, k);
                walker.abort_above = Some((&best_first, first));
                let mut rows = self.base_rows.clone();
                let mut chosen = Vec::with_capacity(k);
                let hit = walker.first_with_head(&mut rows, first, &mut chosen);
                counts[first].store(walker.tested, Ordering::Relaxed);
                if hit {
                    best_first.fetch_min(first, Ordering::Relaxed);
                    Some(chosen)
                } else {
                    None
                }
            })
            .collect();
        let winner = hits.iter().position(Option::is_some);
        let cutoff = winner.unwrap_or(m - k);
        let tested = counts[..=cutoff]
            .iter()
            .map(|c| c.load(Ordering::Relaxed))
            .sum();
        LevelOutcome {
            found: winner.and_then(|w| hits[w].clone()),
            tested,
        }
    }
}

fn seeded_witness(g: &Graph) -> Option<EdgeSet> {
    if let Some(parts) = recognize_tpartite(g) {
        return witness::tpartite_witness(g, &parts).ok();
    }
    if let Some(cycles) = recognize_co_cycles(g) {
        return witness::co_cycle_witness(g, &cycles).ok();
    }
    None
}

/// Depth-first walk over `k`-subsets of the edge list on an adjacency
/// overlay: edges are removed on the way down and restored on backtrack.
struct Walker<'a, I: Invariant> {
    plan: &'a Plan<'a, I>,
    k: usize,
    tested: u64,
    abort_above: Option<(&'a AtomicUsize, usize)>,
    steps: u32,
}

impl<'a, I: Invariant> Walker<'a, I> {
    fn new(plan: &'a Plan<'a, I>, k: usize) -> Self {
        Walker {
            plan,
            k,
            tested: 0,
            abort_above: None,
            steps: 0,
        }
    }

    fn first_with_head(&mut self, rows: &mut [u64], head: usize, chosen: &mut Vec<usize>) -> bool {
        let e = self.plan.edges[head];
        toggle(rows, e);
        chosen.push(head);
        let covered = 1u64 << e.u | 1u64 << e.v;
        let hit = self.first(rows, head + 1, covered, chosen);
        if !hit {
            chosen.pop();
            toggle(rows, e);
        }
        hit
    }

    fn first(
        &mut self,
        rows: &mut [u64],
        next: usize,
        covered: u64,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let remaining = self.k - chosen.len();
        if remaining == 0 {
            return self.test(rows, covered);
        }
        if self.cannot_cover(next, remaining, covered) || self.aborted() {
            return false;
        }
        let edges = &self.plan.edges;
        for (i, &e) in edges[..=edges.len() - remaining]
            .iter()
            .enumerate()
            .skip(next)
        {
            toggle(rows, e);
            chosen.push(i);
            if self.first(rows, i + 1, covered | 1u64 << e.u | 1u64 << e.v, chosen) {
                return true;
            }
            chosen.pop();
            toggle(rows, e);
        }
        false
    }

    /// Visits every successful subset in order; `sink` returns false to stop.
    fn collect_all(
        &mut self,
        rows: &mut [u64],
        next: usize,
        chosen: &mut Vec<usize>,
        sink: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let remaining = self.k - chosen.len();
        let covered = chosen.iter().fold(0u64, |acc, &i| {
            let e = self.plan.edges[i];
            acc | 1u64 << e.u | 1u64 << e.v
        });
        if remaining == 0 {
            return !self.test(rows, covered) || sink(chosen);
        }
        if self.cannot_cover(next, remaining, covered) {
            return true;
        }
        let edges = &self.plan.edges;
        for (i, &e) in edges[..=edges.len() - remaining]
            .iter()
            .enumerate()
            .skip(next)
        {
            toggle(rows, e);
            chosen.push(i);
            let go_on = self.collect_all(rows, i + 1, chosen, sink);
            chosen.pop();
            toggle(rows, e);
            if !go_on {
                return false;
            }
        }
        true
    }

    #[inline]
    fn test(&mut self, rows: &[u64], covered: u64) -> bool {
        if self.plan.cover.is_some() && covered.count_ones() as usize != self.plan.n {
            return false;
        }
        self.tested += 1;
        !self.plan.inv.at_most(rows, self.plan.base)
    }

    /// With cover pruning on: can the uncovered vertices still be reached by
    /// `remaining` edges with index `>= next`?
    fn cannot_cover(&self, next: usize, remaining: usize, covered: u64) -> bool {
        let Some(cover) = &self.plan.cover else {
            return false;
        };
        let uncovered = crate::graph::full_mask(self.plan.n) & !covered;
        if uncovered.count_ones() as usize > 2 * remaining {
            return true;
        }
        crate::graph::BitIter(uncovered).any(|v| cover.last_edge[v] < next)
    }

    fn aborted(&mut self) -> bool {
        let Some((bound, mine)) = self.abort_above else {
            return false;
        };
        self.steps = self.steps.wrapping_add(1);
        self.steps.is_multiple_of(256) && bound.load(Ordering::Relaxed) < mine
    }
}

#[inline]
fn toggle(rows: &mut [u64], e: Edge) {
    rows[e.u] ^= 1u64 << e.v;
    rows[e.v] ^= 1u64 << e.u;
}
