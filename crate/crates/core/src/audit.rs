//! Structural checks on Roman bondage sets of (n-3)-regular graphs, and an
//! audit that runs them over enumerated minimum bondage sets.
//!
//! In an (n-3)-regular graph every vertex `x` has exactly two
//! non-neighbors, written `y` and `z` below. When `x` meets exactly one
//! edge `xw` of the bondage set `B`, `w` is that edge's other end.
//!
//! Each predicate verifies its own preconditions, including that `B`
//! really raises `gamma_R`, and reports `NotApplicable` with the reason
//! instead of a verdict when they fail.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bondage::{minimum_bondage_sets, BondageError, RomanDomination, SearchOptions};
use crate::family::{gen_co_cycles, is_all_threes, CoCycleSpec};
use crate::format::serialize;
use crate::graph::{full_mask, BitIter, Edge, EdgeSet, Graph, VertexSet};
use crate::roman::roman_at_most;
use crate::roman::roman_value;

/// Which precondition failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Precondition {
    OrderTooSmall { n: usize, min: usize },
    NotRegular { n: usize },
    VertexOutOfRange { vertex: usize },
    EdgeNotInGraph { edge: Edge },
    NotBondageSet { base: usize },
    IncidentBondageEdges { vertex: usize, count: usize },
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::OrderTooSmall { n, min } => write!(f, "order {n} below {min}"),
            Precondition::NotRegular { n } => {
                write!(f, "graph is not {}-regular", n.saturating_sub(3))
            }
            Precondition::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            Precondition::EdgeNotInGraph { edge } => write!(f, "edge {edge} not in graph"),
            Precondition::NotBondageSet { base } => {
                write!(f, "removing B leaves gamma_R at {base}")
            }
            Precondition::IncidentBondageEdges { vertex, count } => {
                write!(
                    f,
                    "vertex {vertex} meets {count} edges of B, expected exactly 1"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("not applicable: {0}")]
    NotApplicable(Precondition),
    #[error(transparent)]
    Bondage(#[from] BondageError),
}

/// The four structural statements the audit checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Lemma {
    /// Every vertex meets `B`.
    #[serde(rename = "lemma2.5")]
    EdgeCover,
    /// If `E(x) ∩ B = {xw}`, every `x'` outside `{x,y,z,w}` adjacent to all
    /// of `y, z, w` has a `B`-edge into `{y, z, w}`.
    #[serde(rename = "lemma2.6")]
    CommonNeighborHit,
    /// A pairwise non-adjacent triple whose vertices each meet exactly one
    /// `B`-edge forces `|B| >= n-2`, and `|B| >= n-1` on `K_{3,...,3}`.
    #[serde(rename = "lemma2.7")]
    IndependentTriple,
    /// If `E(x) ∩ B = {xw}`, `G - B` has at most one edge inside `{y, z, w}`.
    #[serde(rename = "lemma2.8")]
    SparseTriple,
}

impl Lemma {
    pub const ALL: [Lemma; 4] = [
        Lemma::EdgeCover,
        Lemma::CommonNeighborHit,
        Lemma::IndependentTriple,
        Lemma::SparseTriple,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Lemma::EdgeCover => "lemma2.5",
            Lemma::CommonNeighborHit => "lemma2.6",
            Lemma::IndependentTriple => "lemma2.7",
            Lemma::SparseTriple => "lemma2.8",
        }
    }

    /// Smallest order the statement is made for.
    pub fn min_order(&self) -> usize {
        match self {
            Lemma::IndependentTriple => 6,
            _ => 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Strict,
    #[cfg(test)]
    Relaxed,
}

struct Context<'a> {
    g: &'a Graph,
    b: &'a EdgeSet,
    reduced: Graph,
}

impl<'a> Context<'a> {
    fn new(g: &'a Graph, b: &'a EdgeSet, min_n: usize, mode: Mode) -> Result<Self, Precondition> {
        let n = g.n();
        if n < min_n {
            return Err(Precondition::OrderTooSmall { n, min: min_n });
        }
        if g.regular_degree() != Some(n - 3) {
            return Err(Precondition::NotRegular { n });
        }
        let reduced = g.remove_edges(b).map_err(|_| {
            let edge = *b
                .iter()
                .find(|e| !g.has_edge(e.u, e.v))
                .expect("a missing edge");
            Precondition::EdgeNotInGraph { edge }
        })?;
        if mode == Mode::Strict {
            let base = roman_value(g.rows());
            if roman_at_most(reduced.rows(), base) {
                return Err(Precondition::NotBondageSet { base });
            }
        }
        Ok(Context { g, b, reduced })
    }

    /// `(w, y, z)` for a vertex meeting exactly one `B`-edge `xw`.
    fn single_edge_binding(&self, x: usize) -> Result<(usize, usize, usize), Precondition> {
        if x >= self.g.n() {
            return Err(Precondition::VertexOutOfRange { vertex: x });
        }
        let mut at_x = self.b.iter().filter(|e| e.touches(x));
        let (first, count) = (at_x.next().copied(), 1 + at_x.count());
        match first {
            Some(e) if count == 1 => {
                let (y, z) = self.non_neighbors(x);
                Ok((e.other(x), y, z))
            }
            _ => Err(Precondition::IncidentBondageEdges {
                vertex: x,
                count: if first.is_none() { 0 } else { count },
            }),
        }
    }

    fn non_neighbors(&self, x: usize) -> (usize, usize) {
        let mut it = BitIter(!self.g.rows()[x] & full_mask(self.g.n()) & !(1u64 << x));
        (
            it.next().expect("degree n-3"),
            it.next().expect("degree n-3"),
        )
    }

    fn b_edges_at(&self, x: usize) -> usize {
        self.b.incident_count(x)
    }
}

/// Bindings of a failed check.
pub type Bindings = BTreeMap<&'static str, usize>;

fn edge_cover_violation(cx: &Context) -> Option<Bindings> {
    (0..cx.g.n())
        .find(|&x| cx.b_edges_at(x) == 0)
        .map(|x| Bindings::from([("x", x)]))
}

fn common_neighbor_violation(cx: &Context, x: usize) -> Result<Option<Bindings>, Precondition> {
    let (w, y, z) = cx.single_edge_binding(x)?;
    let triple = VertexSet::from_vertices([y, z, w]).0;
    let excluded = triple | 1u64 << x;
    let rows = cx.g.rows();
    let reduced = cx.reduced.rows();
    let violation = (0..cx.g.n()).find(|&xp| {
        excluded >> xp & 1 == 0
            && rows[xp] & triple == triple
            // every G-edge into the triple survived removal
            && reduced[xp] & triple == triple
    });
    Ok(violation
        .map(|xp| Bindings::from([("x", x), ("w", w), ("y", y), ("z", z), ("x_prime", xp)])))
}

fn independent_triple_violation(cx: &Context) -> Option<Bindings> {
    let n = cx.g.n();
    let need = if is_all_threes(cx.g).is_some() {
        n - 1
    } else {
        n - 2
    };
    if cx.b.len() >= need {
        return None;
    }
    let rows = cx.g.rows();
    let single: Vec<usize> = (0..n).filter(|&v| cx.b_edges_at(v) == 1).collect();
    for (i, &a) in single.iter().enumerate() {
        for (j, &b) in single.iter().enumerate().skip(i + 1) {
            if rows[a] >> b & 1 == 1 {
                continue;
            }
            for &c in &single[j + 1..] {
                if rows[a] >> c & 1 == 0 && rows[b] >> c & 1 == 0 {
                    return Some(Bindings::from([("x", a), ("y", b), ("z", c)]));
                }
            }
        }
    }
    None
}

fn sparse_triple_violation(cx: &Context, x: usize) -> Result<Option<Bindings>, Precondition> {
    let (w, y, z) = cx.single_edge_binding(x)?;
    let triple = VertexSet::from_vertices([y, z, w]);
    Ok((cx.reduced.induced_edge_count(triple) > 1)
        .then(|| Bindings::from([("x", x), ("w", w), ("y", y), ("z", z)])))
}

fn verdict<T>(r: Result<Option<T>, Precondition>) -> Result<bool, AuditError> {
    r.map(|v| v.is_none()).map_err(AuditError::NotApplicable)
}

/// Every vertex meets at least one edge of the bondage set.
pub fn check_edge_cover(g: &Graph, b: &EdgeSet) -> Result<bool, AuditError> {
    verdict(Context::new(g, b, 5, Mode::Strict).map(|cx| edge_cover_violation(&cx)))
}

/// With `E(x) ∩ B = {xw}`: every vertex outside `{x,y,z,w}` adjacent to
/// all of `y, z, w` loses at least one of those edges.
pub fn check_common_neighbor_hit(g: &Graph, b: &EdgeSet, x: usize) -> Result<bool, AuditError> {
    verdict(Context::new(g, b, 5, Mode::Strict).and_then(|cx| common_neighbor_violation(&cx, x)))
}

/// Pairwise non-adjacent triples meeting one `B`-edge each force
/// `|B| >= n-2` (`n-1` on `K_{3,...,3}`). Vacuously true without such a
/// triple.
pub fn check_independent_triple(g: &Graph, b: &EdgeSet) -> Result<bool, AuditError> {
    verdict(Context::new(g, b, 6, Mode::Strict).map(|cx| independent_triple_violation(&cx)))
}

/// With `E(x) ∩ B = {xw}`: at most one edge of `G - B` inside `{y, z, w}`.
pub fn check_sparse_triple(g: &Graph, b: &EdgeSet, x: usize) -> Result<bool, AuditError> {
    verdict(Context::new(g, b, 5, Mode::Strict).and_then(|cx| sparse_triple_violation(&cx, x)))
}

/// A failed check, replayable from the serialized graph, `B` and bindings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph: String,
    pub bondage_set: EdgeSet,
    pub bindings: Bindings,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaTally {
    pub lemma: Lemma,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    pub first_failure: Option<Counterexample>,
}

impl LemmaTally {
    fn new(lemma: Lemma) -> Self {
        LemmaTally {
            lemma,
            checked: 0,
            passed: 0,
            failed: 0,
            not_applicable: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, outcome: Outcome, g: &Graph, b: &EdgeSet) {
        match outcome {
            Outcome::Pass => {
                self.checked += 1;
                self.passed += 1;
            }
            Outcome::Fail(bindings) => {
                self.checked += 1;
                self.failed += 1;
                self.first_failure.get_or_insert_with(|| Counterexample {
                    graph: serialize(g),
                    bondage_set: b.clone(),
                    bindings,
                });
            }
            Outcome::NotApplicable => self.not_applicable += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub spec: CoCycleSpec,
    pub n: usize,
    pub bondage_number: usize,
    pub sets_examined: usize,
    pub max_witnesses: usize,
    /// True when enumeration stopped at `max_witnesses`.
    pub cap_reached: bool,
    pub lemmas: Vec<LemmaTally>,
}

impl AuditReport {
    pub fn violations(&self) -> usize {
        self.lemmas.iter().map(|t| t.failed).sum()
    }

    pub fn tally(&self, lemma: Lemma) -> &LemmaTally {
        self.lemmas
            .iter()
            .find(|t| t.lemma == lemma)
            .expect("all lemmas tallied")
    }
}

enum Outcome {
    Pass,
    Fail(Bindings),
    NotApplicable,
}

impl From<Result<Option<Bindings>, Precondition>> for Outcome {
    fn from(r: Result<Option<Bindings>, Precondition>) -> Self {
        match r {
            Ok(None) => Outcome::Pass,
            Ok(Some(b)) => Outcome::Fail(b),
            Err(_) => Outcome::NotApplicable,
        }
    }
}

/// Checks all four statements on one verified bondage set.
fn audit_set(g: &Graph, b: &EdgeSet) -> Result<Vec<(Lemma, Outcome)>, Precondition> {
    let cx = Context::new(g, b, 5, Mode::Strict)?;
    let n = g.n();
    let mut out = vec![(
        Lemma::EdgeCover,
        Outcome::from(Ok(edge_cover_violation(&cx))),
    )];
    for x in 0..n {
        out.push((
            Lemma::CommonNeighborHit,
            common_neighbor_violation(&cx, x).into(),
        ));
        out.push((Lemma::SparseTriple, sparse_triple_violation(&cx, x).into()));
    }
    let triple = if n >= Lemma::IndependentTriple.min_order() {
        Ok(independent_triple_violation(&cx)).into()
    } else {
        Outcome::NotApplicable
    };
    out.push((Lemma::IndependentTriple, triple));
    Ok(out)
}

/// Enumerates up to `max_witnesses` minimum Roman bondage sets of the
/// (n-3)-regular graph for `spec` in lexicographic order and checks every
/// applicable binding of each statement.
pub fn audit(spec: &CoCycleSpec, max_witnesses: usize) -> Result<AuditReport, AuditError> {
    let n = spec.n();
    if n < 5 {
        return Err(AuditError::NotApplicable(Precondition::OrderTooSmall {
            n,
            min: 5,
        }));
    }
    let g = gen_co_cycles(spec);
    // No edge-cover pruning here: it would make the cover check circular.
    let (first, sets) = minimum_bondage_sets(
        &g,
        &RomanDomination,
        &SearchOptions::default(),
        max_witnesses,
    )?;
    let per_set: Vec<Result<Vec<(Lemma, Outcome)>, Precondition>> =
        sets.par_iter().map(|b| audit_set(&g, b)).collect();

    let mut tallies: Vec<LemmaTally> = Lemma::ALL.iter().map(|&l| LemmaTally::new(l)).collect();
    for (b, outcomes) in sets.iter().zip(per_set) {
        let outcomes = outcomes.map_err(AuditError::NotApplicable)?;
        for (lemma, outcome) in outcomes {
            let slot = tallies
                .iter_mut()
                .find(|t| t.lemma == lemma)
                .expect("tally");
            slot.record(outcome, &g, b);
        }
    }
    Ok(AuditReport {
        spec: spec.clone(),
        n,
        bondage_number: first.value,
        sets_examined: sets.len(),
        max_witnesses,
        cap_reached: sets.len() >= max_witnesses,
        lemmas: tallies,
    })
}
