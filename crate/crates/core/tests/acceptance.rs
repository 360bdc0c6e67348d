//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every check is an exact match.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use roman_bondage::bondage::{raises, RomanDomination};
use roman_bondage::cli::verify::random_graphs;
use roman_bondage::cli::{run, Cli};
use roman_bondage::family::{
    enum_n_minus_3_regular, enum_tpartite_specs, gen_co_cycles, gen_tpartite, named_graph,
};
use roman_bondage::oracle::{
    b_roman_n_minus_3_regular, b_roman_tpartite, gamma_roman_is_3, gamma_roman_tpartite,
};
use roman_bondage::witness::{construct_bondage_witness, Family};
use roman_bondage::{bondage_roman, gamma_roman, Graph, PartiteSpec, SearchOptions};

const SEED: u64 = 2024;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn exact() -> SearchOptions {
    SearchOptions::default()
}

fn b_r(g: &Graph, opts: &SearchOptions) -> Result<usize, String> {
    bondage_roman(g, opts)
        .map(|r| r.value)
        .map_err(|e| e.to_string())
}

fn tpartite_roman() -> Outcome {
    let specs = enum_tpartite_specs(10);
    for spec in &specs {
        let got = gamma_roman(&gen_tpartite(spec).graph).value;
        let want = gamma_roman_tpartite(spec).value;
        if got != want {
            return Err(format!("K_{{{spec}}}: search {got}, formula {want}"));
        }
    }
    Ok(format!("{} specs with n <= 10", specs.len()))
}

fn roman_three() -> Outcome {
    let check = |g: &Graph| -> Result<(), String> {
        let by_degree = gamma_roman_is_3(g).map_err(|e| e.to_string())?;
        let by_search = gamma_roman(g).value == 3;
        if by_degree == by_search {
            Ok(())
        } else {
            Err(format!(
                "{g:?}: Delta = n-2 is {by_degree}, gamma_R = 3 is {by_search}"
            ))
        }
    };
    let mut total = 0usize;
    for n in 3..=6 {
        for mask in 1..1u64 << (n * (n - 1) / 2) {
            check(&common::labeled(n, mask))?;
            total += 1;
        }
    }
    for n in [7, 8] {
        for g in random_graphs(n, 500, SEED) {
            check(&g)?;
            total += 1;
        }
    }
    Ok(format!("{total} graphs"))
}

fn regular_roman() -> Outcome {
    let mut total = 0;
    for n in 4..=10 {
        for spec in enum_n_minus_3_regular(n) {
            let got = gamma_roman(&gen_co_cycles(&spec)).value;
            if got != 4 {
                return Err(format!("{spec}: gamma_R = {got}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} specs, 4 <= n <= 10"))
}

fn tpartite_bondage() -> Outcome {
    let specs: Vec<PartiteSpec> = enum_tpartite_specs(8)
        .into_iter()
        .filter(|s| s.n() >= 3)
        .collect();
    let mut tags = std::collections::BTreeSet::new();
    for spec in &specs {
        let f = b_roman_tpartite(spec).map_err(|e| e.to_string())?;
        let got = b_r(&gen_tpartite(spec).graph, &exact())?;
        if got != f.value {
            return Err(format!("K_{{{spec}}}: search {got}, formula {}", f.value));
        }
        tags.insert(f.case_tag);
    }
    Ok(format!(
        "{} specs, cases {}",
        specs.len(),
        tags.into_iter().collect::<Vec<_>>().join(" | ")
    ))
}

fn three_partite_threes() -> Outcome {
    let spec = PartiteSpec::new(vec![3, 3, 3]).unwrap();
    let g = gen_tpartite(&spec).graph;
    let opts = SearchOptions {
        prune_edge_cover: true,
        ..exact()
    };
    let got = b_r(&g, &opts)?;
    if got != 8 || got != g.n() - 1 {
        return Err(format!("search gave {got}, expected 8"));
    }
    let start = Instant::now();
    let w = construct_bondage_witness(&Family::Partite(spec)).map_err(|e| e.to_string())?;
    if w.len() != 8 || !raises(&g, &RomanDomination, &w) {
        return Err(format!("constructed set {w} does not certify 8"));
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 1.0 {
        return Err(format!("witness check took {secs:.2}s"));
    }
    Ok(format!(
        "b_R = 8, witness {w} checked in {:.1} ms",
        secs * 1e3
    ))
}

fn regular_bondage() -> Outcome {
    let expected = [
        ("co:5", 3),
        ("co:6", 4),
        ("co:3,3", 4),
        ("co:7", 5),
        ("co:3,4", 5),
        ("co:8", 6),
        ("co:3,5", 6),
        ("co:4,4", 6),
    ];
    let mut seen = 0;
    for n in 5..=8 {
        for spec in enum_n_minus_3_regular(n) {
            let f = b_roman_n_minus_3_regular(&spec)
                .map_err(|e| e.to_string())?
                .value;
            let got = b_r(&gen_co_cycles(&spec), &exact())?;
            let listed = expected
                .iter()
                .find(|(name, _)| *name == spec.to_string())
                .map(|&(_, v)| v);
            if got != f || listed != Some(got) {
                return Err(format!(
                    "{spec}: search {got}, formula {f}, listed {listed:?}"
                ));
            }
            seen += 1;
        }
    }
    if seen != expected.len() {
        return Err(format!(
            "{seen} specs enumerated, {} listed",
            expected.len()
        ));
    }
    Ok(format!("{seen} specs, 5 <= n <= 8"))
}

fn universal_vertices() -> Outcome {
    let mut floor_misses = 0;
    for name in ["p3", "k3", "k4", "k1,3", "k1,1,2", "k1,1,1,2"] {
        let g = named_graph(name).unwrap();
        let t = g.degrees().iter().filter(|&&d| d == g.n() - 1).count();
        let got = b_r(&g, &exact())?;
        if got != t.div_ceil(2) {
            return Err(format!(
                "{name}: b_R = {got}, ceil({t}/2) = {}",
                t.div_ceil(2)
            ));
        }
        if got != t / 2 {
            floor_misses += 1;
        }
    }
    Ok(format!(
        "6 graphs match ceil(t/2); floor(t/2) is wrong on {floor_misses} of them"
    ))
}

fn lemma_audit() -> Outcome {
    let cli = Cli::try_parse_from([
        "rbond",
        "audit",
        "--n",
        "5..8",
        "--max-witnesses",
        "50",
        "--json",
    ])
    .map_err(|e| e.to_string())?;
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(cli, &mut out, &mut err);
    if code != 0 {
        return Err(format!("exit {code}: {}", String::from_utf8_lossy(&err)));
    }
    let v: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let reports = v["reports"].as_array().ok_or("no reports")?;
    let specs: usize = (5..=8).map(|n| enum_n_minus_3_regular(n).len()).sum();
    if reports.len() != specs {
        return Err(format!("{} reports for {specs} specs", reports.len()));
    }
    let sets: u64 = reports
        .iter()
        .map(|r| r["sets_examined"].as_u64().unwrap_or(0))
        .sum();
    let checked: u64 = reports
        .iter()
        .flat_map(|r| r["lemmas"].as_array().into_iter().flatten())
        .map(|t| t["checked"].as_u64().unwrap_or(0))
        .sum();
    match v["violations"].as_u64() {
        Some(0) => Ok(format!(
            "{specs} graphs, {sets} bondage sets, {checked} checks, 0 violations"
        )),
        other => Err(format!("violations = {other:?}")),
    }
}

fn oracle_independence() -> Outcome {
    let mut roman = 0;
    for n in 1..=5 {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = common::labeled(n, mask);
            let (got, want) = (gamma_roman(&g).value, common::gamma_roman_brute(&g));
            if got != want {
                return Err(format!("{g:?}: gamma_R {got}, brute force {want}"));
            }
            roman += 1;
        }
    }
    for g in random_graphs(6, 200, SEED) {
        let (got, want) = (gamma_roman(&g).value, common::gamma_roman_brute(&g));
        if got != want {
            return Err(format!("{g:?}: gamma_R {got}, brute force {want}"));
        }
        roman += 1;
    }

    let compare = |g: &Graph| -> Result<(), String> {
        let got = bondage_roman(g, &exact()).ok().map(|r| r.value);
        let want = common::bondage_brute(g, common::gamma_roman_brute);
        if got == want {
            Ok(())
        } else {
            Err(format!("{g:?}: b_R {got:?}, subset enumeration {want:?}"))
        }
    };
    let mut regular = 0;
    for n in 3..=6 {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = common::labeled(n, mask);
            if g.m() > 0 && g.regular_degree() == Some(n - 3) {
                compare(&g)?;
                regular += 1;
            }
        }
    }
    let mut random = 0;
    'fill: for round in 0.. {
        for n in 3..=6 {
            for g in random_graphs(n, 4, SEED + round) {
                if g.m() <= 10 {
                    compare(&g)?;
                    random += 1;
                    if random == 50 {
                        break 'fill;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{roman} gamma_R checks, {regular} labeled (n-3)-regular and {random} random bondage checks"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("complete multipartite gamma_R, n <= 10", tpartite_roman),
        ("gamma_R = 3 iff max degree n-2", roman_three),
        ("(n-3)-regular gamma_R = 4, 4 <= n <= 10", regular_roman),
        ("complete multipartite b_R, 3 <= n <= 8", tpartite_bondage),
        (
            "b_R(K_{3,3,3}) = 8 with edge-cover pruning",
            three_partite_threes,
        ),
        ("(n-3)-regular b_R, 5 <= n <= 8", regular_bondage),
        ("universal vertices b_R = ceil(t/2)", universal_vertices),
        ("bondage set audit, 5 <= n <= 8, 50 witnesses", lemma_audit),
        ("solver vs brute-force oracles", oracle_independence),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}; {secs:.2}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({detail}; {secs:.2}s)", k + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
