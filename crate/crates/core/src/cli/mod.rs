//! The `rbond` command line.
//!
//! Exit codes: 0 success, 2 input error, 3 no bondage set exists,
//! 4 budget exhausted, 5 verification or audit mismatch.

pub mod source;
pub mod verify;

use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::audit::{audit, AuditReport, Lemma};
use crate::bondage::{
    bondage_classical, bondage_roman, BondageError, BondageResult, SearchOptions,
};
use crate::family::enum_n_minus_3_regular;
use crate::format::serialize;
use crate::roman::{gamma, gamma_roman};

pub use source::{family_graph, load_graph};
pub use verify::{Target, VerificationReport, VerificationRow, VerifyOptions};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NO_BONDAGE_SET: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

/// Edge count above which `bondage` wants `--budget` or `--force`.
pub const EDGE_GUARDRAIL: usize = 40;

#[derive(Debug, Parser)]
#[command(
    name = "rbond",
    version,
    about = "Exact Roman domination and Roman bondage numbers"
)]
pub struct Cli {
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Roman domination and domination numbers with witnesses.
    Solve {
        /// File, `-` for stdin, or a spec like `c5`, `3,3`, `co:3,6`.
        source: String,
        #[arg(long)]
        json: bool,
    },
    /// Minimum edge set whose removal raises gamma_R (or gamma).
    Bondage {
        source: String,
        /// Largest removal size to try.
        #[arg(long)]
        budget: Option<usize>,
        /// Enumerate only edge covers; requires an (n-3)-regular graph, n >= 5.
        #[arg(long)]
        prune_regular: bool,
        /// Run even when the graph has more than 40 edges and no budget.
        #[arg(long)]
        force: bool,
        /// Classical bondage number instead of the Roman one.
        #[arg(long)]
        classical: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print a family graph as an edge list.
    Gen {
        /// `3,3,3`, `co:3,6`, `c5`, `prism`, `k3,3`, ...
        spec: String,
    },
    /// Compare closed forms with exact search over a family sweep.
    Verify {
        target: Target,
        #[arg(long)]
        max_n: Option<usize>,
        /// Seed for the random graphs at n = 7, 8 (lemma2.3).
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Random graphs per order beyond the exhaustive range.
        #[arg(long, default_value_t = 500)]
        random: usize,
        /// Use edge-cover pruning on (n-3)-regular members.
        #[arg(long)]
        prune_regular: bool,
        /// Show per-row runtimes in the table.
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the structural statements on minimum bondage sets of every
    /// (n-3)-regular graph with n in the given range.
    Audit {
        /// `5..8` (inclusive) or a single order.
        #[arg(long = "n", value_parser = parse_range)]
        orders: RangeInclusive<usize>,
        #[arg(long, default_value_t = 50)]
        max_witnesses: usize,
        #[arg(long)]
        json: bool,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad order {t:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => {
            let a = num(s)?;
            Ok(a..=a)
        }
    }
}

/// Runs a parsed command line, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let go = |out: &mut dyn Write, err: &mut dyn Write| match cli.command {
        Command::Solve { source, json } => cmd_solve(&source, json, out, err),
        Command::Bondage {
            source,
            budget,
            prune_regular,
            force,
            classical,
            json,
        } => {
            let opts = SearchOptions {
                budget,
                prune_edge_cover: prune_regular,
                seed_upper_bound: !classical,
            };
            cmd_bondage(&source, &opts, force, classical, json, out, err)
        }
        Command::Gen { spec } => cmd_gen(&spec, out, err),
        Command::Verify {
            target,
            max_n,
            seed,
            random,
            prune_regular,
            timings,
            json,
        } => {
            let opts = VerifyOptions {
                max_n: max_n.unwrap_or(target.default_max_n()),
                seed,
                random_graphs: random,
                prune_regular,
            };
            cmd_verify(target, &opts, timings, json, out, err)
        }
        Command::Audit {
            orders,
            max_witnesses,
            json,
        } => cmd_audit(orders, max_witnesses, json, out, err),
    };
    let code = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => {
                let (code, o, e) = pool.install(|| {
                    let (mut o, mut e) = (Vec::new(), Vec::new());
                    (go(&mut o, &mut e), o, e)
                });
                let _ = out.write_all(&o);
                let _ = err.write_all(&e);
                code
            }
            Err(e) => {
                let _ = writeln!(err, "error: thread pool: {e}");
                EXIT_INPUT
            }
        },
        None => go(out, err),
    };
    let _ = out.flush();
    code
}

fn emit_json<T: Serialize>(out: &mut dyn Write, doc: &T) {
    let _ = serde_json::to_writer_pretty(&mut *out, doc);
    let _ = writeln!(out);
}

pub fn cmd_solve(source: &str, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let g = match load_graph(source) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let r = gamma_roman(&g);
    let d = gamma(&g);
    if json {
        emit_json(
            out,
            &json!({
                "schema_version": SCHEMA_VERSION,
                "command": "solve",
                "n": g.n(),
                "m": g.m(),
                "gamma_roman": r,
                "gamma": d,
            }),
        );
    } else {
        let _ = writeln!(out, "n = {}, m = {}", g.n(), g.m());
        let _ = writeln!(out, "gamma_R = {}", r.value);
        let _ = writeln!(out, "roman_function = {}", r.witness);
        let _ = writeln!(out, "gamma = {}", d.value);
        let set: Vec<String> = d.witness.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "dominating_set = {{{}}}", set.join(","));
    }
    EXIT_OK
}

pub fn cmd_bondage(
    source: &str,
    opts: &SearchOptions,
    force: bool,
    classical: bool,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let g = match load_graph(source) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    if g.m() > EDGE_GUARDRAIL && opts.budget.is_none() && !force {
        let _ = writeln!(
            err,
            "error: graph has {} edges (> {EDGE_GUARDRAIL}); pass --budget or --force",
            g.m()
        );
        return EXIT_INPUT;
    }
    let result = if classical {
        bondage_classical(&g, opts)
    } else {
        bondage_roman(&g, opts)
    };
    let (b, inv) = if classical {
        ("b", "gamma")
    } else {
        ("b_R", "gamma_R")
    };
    match result {
        Ok(r) => {
            if json {
                emit_json(out, &bondage_doc(&r, classical));
            } else {
                print_bondage(out, &r, b, inv);
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                BondageError::NoBondageSet { .. } => EXIT_NO_BONDAGE_SET,
                BondageError::BudgetExhausted { .. } => EXIT_BUDGET,
                BondageError::EmptyGraph | BondageError::PruningNotApplicable { .. } => EXIT_INPUT,
            }
        }
    }
}

fn bondage_doc(r: &BondageResult, classical: bool) -> serde_json::Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": "bondage",
        "invariant": if classical { "gamma" } else { "gamma_R" },
        "result": r,
    })
}

fn print_bondage(out: &mut dyn Write, r: &BondageResult, b: &str, inv: &str) {
    let _ = writeln!(out, "{b} = {}", r.value);
    let _ = writeln!(out, "witness = {}", r.witness);
    let _ = writeln!(out, "{inv}(G) = {}", r.base);
    let _ = writeln!(out, "{inv}(G - B) = {}", r.raised);
    let _ = writeln!(out, "subsets_tested = {}", r.subsets_tested);
}

pub fn cmd_gen(spec: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match family_graph(spec) {
        Ok(g) => {
            let _ = out.write_all(serialize(&g).as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn cmd_verify(
    target: Target,
    opts: &VerifyOptions,
    timings: bool,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let report = match verify::verify(target, opts) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    if json {
        emit_json(
            out,
            &json!({
                "schema_version": SCHEMA_VERSION,
                "command": "verify",
                "report": report,
            }),
        );
    } else {
        print_verification(out, &report, timings);
    }
    if report.all_match {
        EXIT_OK
    } else {
        if let Some(g) = &report.counterexample {
            let _ = writeln!(err, "mismatch; counterexample graph:\n{g}");
        }
        EXIT_MISMATCH
    }
}

fn print_verification(out: &mut dyn Write, r: &VerificationReport, timings: bool) {
    let _ = writeln!(out, "verify {} (max n = {})", r.target, r.max_n);
    let width = r
        .rows
        .iter()
        .map(|row| row.family.len())
        .max()
        .unwrap_or(6)
        .max(6);
    let _ = write!(
        out,
        "{:<width$}  {:>7}  {:>7}  {:<5}  {:<16}  {:>12}",
        "family", "formula", "search", "match", "case", "subsets"
    );
    let _ = writeln!(out, "{}", if timings { "  runtime_ms" } else { "" });
    for row in &r.rows {
        let search = row.search.map_or("-".to_string(), |v| v.to_string());
        let subsets = row
            .subsets_tested
            .map_or("-".to_string(), |v| v.to_string());
        let _ = write!(
            out,
            "{:<width$}  {:>7}  {:>7}  {:<5}  {:<16}  {:>12}",
            row.family,
            row.formula,
            search,
            if row.matched { "yes" } else { "NO" },
            row.case_tag,
            subsets
        );
        if timings {
            let _ = write!(out, "  {:>10.1}", row.runtime_ms);
        }
        let _ = writeln!(out);
    }
    let matched = r.rows.iter().filter(|row| row.matched).count();
    let _ = writeln!(out, "{matched}/{} rows match", r.rows.len());
    if let Some(note) = &r.note {
        let _ = writeln!(out, "note: {note}");
    }
}

pub fn cmd_audit(
    orders: RangeInclusive<usize>,
    max_witnesses: usize,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if *orders.start() < 5 {
        let _ = writeln!(err, "error: audit needs n >= 5, got {}", orders.start());
        return EXIT_INPUT;
    }
    if *orders.end() > 12 {
        let _ = writeln!(err, "error: audit supports n <= 12, got {}", orders.end());
        return EXIT_INPUT;
    }
    let mut reports: Vec<AuditReport> = Vec::new();
    for n in orders {
        for spec in enum_n_minus_3_regular(n) {
            match audit(&spec, max_witnesses) {
                Ok(r) => reports.push(r),
                Err(e) => {
                    let _ = writeln!(err, "error: {spec}: {e}");
                    return EXIT_INPUT;
                }
            }
        }
    }
    let violations: usize = reports.iter().map(AuditReport::violations).sum();
    if json {
        emit_json(
            out,
            &json!({
                "schema_version": SCHEMA_VERSION,
                "command": "audit",
                "max_witnesses": max_witnesses,
                "violations": violations,
                "reports": reports,
            }),
        );
    } else {
        print_audit(out, &reports);
    }
    if violations == 0 {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn print_audit(out: &mut dyn Write, reports: &[AuditReport]) {
    let _ = write!(
        out,
        "{:<10}  {:>3}  {:>4}  {:>5}",
        "spec", "n", "b_R", "sets"
    );
    for l in Lemma::ALL {
        let _ = write!(out, "  {:>16}", format!("{} p/f/na", l.id()));
    }
    let _ = writeln!(out);
    for r in reports {
        let sets = format!(
            "{}{}",
            r.sets_examined,
            if r.cap_reached { "+" } else { "" }
        );
        let _ = write!(
            out,
            "{:<10}  {:>3}  {:>4}  {:>5}",
            r.spec.to_string(),
            r.n,
            r.bondage_number,
            sets
        );
        for t in &r.lemmas {
            let _ = write!(
                out,
                "  {:>16}",
                format!("{}/{}/{}", t.passed, t.failed, t.not_applicable)
            );
        }
        let _ = writeln!(out);
        for t in r.lemmas.iter().filter(|t| t.first_failure.is_some()) {
            let cx = t.first_failure.as_ref().expect("filtered");
            let _ = writeln!(
                out,
                "  VIOLATION {}: B = {}, bindings = {:?}",
                t.lemma.id(),
                cx.bondage_set,
                cx.bindings
            );
        }
    }
    let total: usize = reports.iter().map(AuditReport::violations).sum();
    let _ = writeln!(out, "{} graphs audited, {total} violations", reports.len());
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("5..7"), Ok(5..=7));
        assert_eq!(parse_range("5..=7"), Ok(5..=7));
        assert_eq!(parse_range("9"), Ok(9..=9));
        assert!(parse_range("7..5").is_err());
        assert!(parse_range("x").is_err());
    }

    fn capture(args: &[&str]) -> (i32, String, String) {
        let cli =
            Cli::try_parse_from(std::iter::once("rbond").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(cli, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn solve_and_bondage_text() {
        let (code, out, _) = capture(&["solve", "c5"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("gamma_R = 4\n"));
        let (code, out, _) = capture(&["bondage", "k3,3"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("b_R = 4\n"));
        let (code, _, _) = capture(&["bondage", "--budget", "2", "c5"]);
        assert_eq!(code, EXIT_BUDGET);
        let (code, _, _) = capture(&["bondage", "p2"]);
        assert_eq!(code, EXIT_NO_BONDAGE_SET);
    }

    #[test]
    fn guardrail_refuses_large_graphs() {
        // K_{1,...,1} on 10 vertices has 45 edges
        let (code, _, err) = capture(&["bondage", "k10"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("--budget"));
    }

    #[test]
    fn gen_and_audit_inputs() {
        let (code, out, _) = capture(&["gen", "3,3"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("6 9\n"));
        assert_eq!(capture(&["gen", "1"]).0, EXIT_INPUT);
        assert_eq!(capture(&["audit", "--n", "4"]).0, EXIT_INPUT);
    }
}
