//! Sweeps that compare closed-form values with exact search.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bondage::{bondage_roman, SearchOptions};
use crate::family::{
    enum_n_minus_3_regular, enum_tpartite_specs, gen_co_cycles, gen_tpartite, CoCycleSpec,
    PartiteSpec,
};
use crate::format::serialize;
use crate::graph::{Edge, Graph};
use crate::oracle::{
    b_roman_n_minus_3_regular, b_roman_tpartite, b_roman_universal, gamma_roman_is_3,
    gamma_roman_n_minus_3_regular, gamma_roman_tpartite, FormulaValue,
};
use crate::roman::gamma_roman;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum, Serialize)]
pub enum Target {
    #[value(name = "lemma2.1")]
    #[serde(rename = "lemma2.1")]
    TpartiteRoman,
    #[value(name = "lemma2.2")]
    #[serde(rename = "lemma2.2")]
    UniversalBondage,
    #[value(name = "lemma2.3")]
    #[serde(rename = "lemma2.3")]
    RomanThree,
    #[value(name = "lemma2.4")]
    #[serde(rename = "lemma2.4")]
    RegularRoman,
    #[value(name = "thm3.1")]
    #[serde(rename = "thm3.1")]
    TpartiteBondage,
    #[value(name = "thm4.1")]
    #[serde(rename = "thm4.1")]
    RegularBondage,
}

impl Target {
    pub fn id(&self) -> &'static str {
        match self {
            Target::TpartiteRoman => "lemma2.1",
            Target::UniversalBondage => "lemma2.2",
            Target::RomanThree => "lemma2.3",
            Target::RegularRoman => "lemma2.4",
            Target::TpartiteBondage => "thm3.1",
            Target::RegularBondage => "thm4.1",
        }
    }

    /// Supported `--max-n` range.
    pub fn max_n_range(&self) -> (usize, usize) {
        match self {
            Target::TpartiteRoman => (2, 24),
            Target::UniversalBondage => (3, 8),
            Target::RomanThree => (3, 8),
            Target::RegularRoman => (4, 24),
            Target::TpartiteBondage => (3, 10),
            Target::RegularBondage => (5, 10),
        }
    }

    pub fn default_max_n(&self) -> usize {
        match self {
            Target::RomanThree => 6,
            Target::TpartiteRoman | Target::RegularRoman => 10,
            _ => 8,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub seed: u64,
    /// Random graphs per order above the exhaustive range (lemma2.3).
    pub random_graphs: usize,
    pub prune_regular: bool,
}

/// One compared instance (or, for lemma2.3, one order).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRow {
    pub family: String,
    pub formula: usize,
    pub case_tag: String,
    pub search: Option<usize>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub runtime_ms: f64,
    pub subsets_tested: Option<u64>,
}

impl VerificationRow {
    fn new(family: String, f: &FormulaValue, search: Option<usize>, start: Instant) -> Self {
        VerificationRow {
            family,
            formula: f.value,
            case_tag: f.case_tag.to_string(),
            search,
            matched: search == Some(f.value),
            runtime_ms: start.elapsed().as_secs_f64() * 1e3,
            subsets_tested: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub target: Target,
    pub max_n: usize,
    pub seed: u64,
    pub rows: Vec<VerificationRow>,
    pub all_match: bool,
    /// Edge list of the first mismatching graph.
    pub counterexample: Option<String>,
    pub note: Option<String>,
}

pub fn verify(target: Target, opts: &VerifyOptions) -> Result<VerificationReport, String> {
    let (lo, hi) = target.max_n_range();
    if !(lo..=hi).contains(&opts.max_n) {
        return Err(format!(
            "--max-n {} outside the supported range {lo}..={hi} for {target}",
            opts.max_n
        ));
    }
    let (rows, counterexample) = match target {
        Target::TpartiteRoman => tpartite_roman(opts),
        Target::UniversalBondage => universal_bondage(opts),
        Target::RomanThree => roman_three(opts),
        Target::RegularRoman => regular_roman(opts),
        Target::TpartiteBondage => tpartite_bondage(opts),
        Target::RegularBondage => regular_bondage(opts),
    };
    let all_match = rows.iter().all(|r| r.matched);
    let note = match target {
        Target::UniversalBondage | Target::TpartiteBondage => Some(floor_note(&rows)),
        _ => None,
    };
    Ok(VerificationReport {
        target,
        max_n: opts.max_n,
        seed: opts.seed,
        rows,
        all_match,
        counterexample,
        note,
    })
}

/// The `m_i = 1` value is sometimes printed as `floor(i/2)`; count the rows
/// where that reading disagrees with the search.
fn floor_note(rows: &[VerificationRow]) -> String {
    let ones: Vec<&VerificationRow> = rows
        .iter()
        .filter(|r| r.case_tag == "m_i=1" || r.case_tag == "t>=1")
        .collect();
    let misses = ones
        .iter()
        .filter(|r| {
            let spec: PartiteSpec = r.family.parse().expect("row family is a partite spec");
            r.search != Some(spec.min_multiplicity() / 2)
        })
        .count();
    format!(
        "ceil(i/2) used for m_i = 1; floor(i/2) disagrees with the search on {misses} of {} such rows",
        ones.len()
    )
}

type Sweep = (Vec<VerificationRow>, Option<String>);

/// Runs `check` over `items` in parallel, keeping input order, and records
/// the first mismatching graph.
fn sweep<T, F>(items: Vec<T>, check: F) -> Sweep
where
    T: Send + Sync,
    F: Fn(&T) -> (VerificationRow, Graph) + Sync,
{
    let out: Vec<(VerificationRow, Graph)> = items.par_iter().map(&check).collect();
    let counterexample = out
        .iter()
        .find(|(r, _)| !r.matched)
        .map(|(_, g)| serialize(g));
    (out.into_iter().map(|(r, _)| r).collect(), counterexample)
}

fn search_options(g: &Graph, prune_regular: bool) -> SearchOptions {
    let n = g.n();
    SearchOptions {
        budget: None,
        prune_edge_cover: prune_regular && n >= 5 && g.regular_degree() == Some(n - 3),
        seed_upper_bound: true,
    }
}

fn bondage_row(
    family: String,
    f: &FormulaValue,
    g: &Graph,
    prune: bool,
    start: Instant,
) -> VerificationRow {
    let result = bondage_roman(g, &search_options(g, prune));
    let mut row = VerificationRow::new(family, f, result.as_ref().ok().map(|r| r.value), start);
    row.subsets_tested = result.ok().map(|r| r.subsets_tested);
    row
}

fn tpartite_roman(opts: &VerifyOptions) -> Sweep {
    sweep(enum_tpartite_specs(opts.max_n), |spec: &PartiteSpec| {
        let start = Instant::now();
        let g = gen_tpartite(spec).graph;
        let f = gamma_roman_tpartite(spec);
        let got = gamma_roman(&g).value;
        (
            VerificationRow::new(spec.to_string(), &f, Some(got), start),
            g,
        )
    })
}

fn universal_bondage(opts: &VerifyOptions) -> Sweep {
    let specs: Vec<PartiteSpec> = enum_tpartite_specs(opts.max_n)
        .into_iter()
        .filter(|s| s.min_part() == 1 && s.n() >= 3)
        .collect();
    sweep(specs, |spec| {
        let start = Instant::now();
        let g = gen_tpartite(spec).graph;
        let n = g.n();
        let universal = g.degrees().iter().filter(|&&d| d == n - 1).count();
        let f = b_roman_universal(universal, n).expect("m_1 = 1 gives a universal vertex");
        (bondage_row(spec.to_string(), &f, &g, false, start), g)
    })
}

fn regular_roman(opts: &VerifyOptions) -> Sweep {
    let specs: Vec<CoCycleSpec> = (4..=opts.max_n).flat_map(enum_n_minus_3_regular).collect();
    sweep(specs, |spec| {
        let start = Instant::now();
        let g = gen_co_cycles(spec);
        let f = gamma_roman_n_minus_3_regular(spec.n()).expect("n >= 4");
        let got = gamma_roman(&g).value;
        (
            VerificationRow::new(spec.to_string(), &f, Some(got), start),
            g,
        )
    })
}

fn tpartite_bondage(opts: &VerifyOptions) -> Sweep {
    let specs: Vec<PartiteSpec> = enum_tpartite_specs(opts.max_n)
        .into_iter()
        .filter(|s| s.n() >= 3)
        .collect();
    sweep(specs, |spec| {
        let start = Instant::now();
        let g = gen_tpartite(spec).graph;
        let f = b_roman_tpartite(spec).expect("n >= 3");
        (
            bondage_row(spec.to_string(), &f, &g, opts.prune_regular, start),
            g,
        )
    })
}

fn regular_bondage(opts: &VerifyOptions) -> Sweep {
    let specs: Vec<CoCycleSpec> = (5..=opts.max_n).flat_map(enum_n_minus_3_regular).collect();
    sweep(specs, |spec| {
        let start = Instant::now();
        let g = gen_co_cycles(spec);
        let f = b_roman_n_minus_3_regular(spec).expect("n >= 5");
        (
            bondage_row(spec.to_string(), &f, &g, opts.prune_regular, start),
            g,
        )
    })
}

/// Graphs on `n` vertices where each of the `C(n,2)` edges is present
/// independently with probability 1/2, skipping the edgeless graph.
pub fn random_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let edges: Vec<Edge> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        if !edges.is_empty() {
            out.push(Graph::from_edges(n, edges).expect("simple"));
        }
    }
    out
}

/// Graph number `mask` among all labeled graphs on `n` vertices: bit `k`
/// selects the `k`-th pair in lexicographic order.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).expect("simple")
}

fn roman_three(opts: &VerifyOptions) -> Sweep {
    const EXHAUSTIVE_MAX: usize = 6;
    let agrees =
        |g: &Graph| gamma_roman_is_3(g).expect("nonempty, n >= 3") == (gamma_roman(g).value == 3);
    let mut rows = Vec::new();
    let mut counterexample = None;
    for n in 3..=opts.max_n {
        let start = Instant::now();
        let (label, total, bad) = if n <= EXHAUSTIVE_MAX {
            let pairs = n * (n - 1) / 2;
            let total = (1u64 << pairs) - 1;
            let bad: Vec<u64> = (1..=total)
                .into_par_iter()
                .filter(|&mask| !agrees(&labeled_graph(n, mask)))
                .collect();
            let first = bad.first().map(|&m| labeled_graph(n, m));
            (
                format!("all labeled, n={n}"),
                total as usize,
                (bad.len(), first),
            )
        } else {
            let graphs = random_graphs(n, opts.random_graphs, opts.seed);
            let bad: Vec<&Graph> = graphs.par_iter().filter(|g| !agrees(g)).collect();
            let first = bad.first().map(|&g| g.clone());
            (format!("random, n={n}"), graphs.len(), (bad.len(), first))
        };
        let f = FormulaValue {
            value: total,
            case_tag: "iff",
            source: "lemma2.3",
        };
        rows.push(VerificationRow::new(label, &f, Some(total - bad.0), start));
        if counterexample.is_none() {
            counterexample = bad.1.map(|g| serialize(&g));
        }
    }
    (rows, counterexample)
}
