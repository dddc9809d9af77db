//! `polyfam`: every verification in the library behind one binary with
//! machine-readable output.
//!
//! Exit codes: 0 when the requested checks all hold, 2 when a verdict fails
//! (or a computation aborts), 1 on usage errors. JSON output is
//! deterministic for a given configuration: keys are sorted and rationals
//! are rendered as exact "p/q" strings (floats appear only in monodromy
//! diagnostics).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num::ToPrimitive;
use num::Zero;
use serde_json::{json, Value};

use polyfam::perm::DEFAULT_CAP;
use polyfam::{catalog, certify, genus, laguerre, modular, monodromy, scan, simplecover};

#[derive(Parser)]
#[command(
    name = "polyfam",
    version,
    about = "Verification toolkit for a one-parameter polynomial family: \
             discriminants, branch geometry, genus bounds, monodromy, \
             modular-curve tables, and Galois-group scans.",
    after_help = "Environment: POLYFAM_CAP overrides the group-closure \
                  enumeration cap (default 4000000) used by `simple-cover --muller`."
)]
struct Cli {
    /// Worker threads for parallel subcommands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Verify construction identities: recurrences, the discriminant closed
    /// form, branch-fiber shapes, and affine smoothness, up to --max-n.
    LaguerreVerify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Certify genus lower bounds > 1 for every maximal-subgroup case at
    /// degree --n, with the hand-recorded-value discrepancy ledger.
    Certify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Scan specializations α = a/b of bounded height, classify each Galois
    /// group, and report the exceptional set.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        height: u64,
        /// Good primes sampled per specialization.
        #[arg(long, default_value_t = scan::DEFAULT_PRIME_BUDGET)]
        budget: usize,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV table of X₀(n) invariants (psi, elliptic counts, cusps, genus).
    ModularTable {
        #[arg(long, default_value_t = 52)]
        max: u64,
    },
    /// Simple-cover combinatorics: feasibility scan, the palindromic
    /// transposition datum, and the specialization decision.
    SimpleCover {
        /// Feasible (n, j, genus) triples with n ≤ N_MAX, g ≤ G_MAX.
        #[arg(long, num_args = 2, value_names = ["N_MAX", "G_MAX"])]
        scan: Option<Vec<u64>>,
        /// Build and check the 2n−2 transposition datum at degree N.
        #[arg(long, value_name = "N")]
        muller: Option<usize>,
        /// Which conclusions hold for covers of genus G and degree N.
        #[arg(long, num_args = 2, value_names = ["G", "N"])]
        decision: Option<Vec<u64>>,
    },
    /// Track monodromy loops of the degree-n family numerically; with
    /// --all, add the loop at infinity, the product relation, and the
    /// measured genus.
    Monodromy {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        all: bool,
    },
    /// List the maximal-subgroup catalog (n = 6..9, or one degree via --n).
    Catalog {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Evaluate the coset-count genus lower bound for an index and
    /// ramification data V given as m:c1 pairs, e.g. --v 9:0,8:0,7:4,6:0.
    GenusBound {
        #[arg(long)]
        index: u64,
        #[arg(long)]
        v: String,
    },
}

enum Failure {
    Usage(String),
    Verdict(String),
    Error(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Error(e)
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

enum Rendered {
    Json(Value),
    Text(String),
}

/// Sorted-key, pretty JSON with a trailing newline — byte-identical for a
/// given configuration.
fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

fn cap_from_env() -> Result<usize, Failure> {
    match std::env::var("POLYFAM_CAP") {
        Ok(s) => s.parse::<usize>().map_err(|_| {
            Failure::Usage(format!("POLYFAM_CAP must be a positive integer, got {s:?}"))
        }),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn cmd_laguerre_verify(max_n: usize) -> Result<(Rendered, bool), Failure> {
    if !(2..=12).contains(&max_n) {
        return usage("--max-n must lie in 2..=12");
    }
    let discriminant = (2..=max_n).all(laguerre::disc_matches_closed_form);
    let derivative = laguerre::derivative_recurrence_holds(max_n);
    let three_term = laguerre::three_term_recurrence_holds(max_n);
    let dehomogenization = (1..=max_n).all(laguerre::dehomogenization_matches);
    let mu_zero = (1..=max_n).all(laguerre::mu_zero_collapses_to_power);
    let mut fibers = true;
    let mut smooth = true;
    for n in 3..=max_n {
        for nu in laguerre::branch_locus(n) {
            match laguerre::fiber_shape(n, &nu).unique_rational_repeated_root() {
                Some((root, mult)) if root.is_zero() && mult == (-&nu).to_usize().unwrap() => {}
                _ => fibers = false,
            }
            smooth &= laguerre::affine_smooth_at(n, &nu);
        }
    }
    let all_hold =
        discriminant && derivative && three_term && dehomogenization && mu_zero && fibers && smooth;
    let value = json!({
        "max_n": max_n,
        "checks": {
            "discriminant_closed_form": discriminant,
            "derivative_recurrence": derivative,
            "three_term_recurrence": three_term,
            "dehomogenization": dehomogenization,
            "mu_zero_power_collapse": mu_zero,
            "branch_fiber_shapes": fibers,
            "affine_smoothness": smooth,
        },
        "all_hold": all_hold,
    });
    Ok((Rendered::Json(value), all_hold))
}

fn cmd_certify(n: usize, format: Format) -> Result<(Rendered, bool), Failure> {
    if !(6..=9).contains(&n) {
        return usage("--n must lie in 6..=9 (the catalogued degrees)");
    }
    let cases = certify::certify_all(n)
        .map_err(|e| Failure::Verdict(format!("certification aborted: {e}")))?;
    let all_hold = cases.iter().all(|c| c.verdict);
    match format {
        Format::Json => {
            let value = json!({
                "n": n,
                "cases": serde_json::to_value(&cases).expect("cases serialize"),
                "all_verdicts_hold": all_hold,
            });
            Ok((Rendered::Json(value), all_hold))
        }
        Format::Csv => {
            let mut s =
                String::from("n,name,family,order,index,extended_v,bound,verdict,discrepancies\n");
            for c in &cases {
                let order = c.order.map(|o| o.to_string()).unwrap_or_default();
                s.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    c.n,
                    c.name,
                    c.family,
                    order,
                    c.index,
                    c.extended_v,
                    c.bound,
                    c.verdict,
                    c.discrepancies.len()
                ));
            }
            Ok((Rendered::Text(s), all_hold))
        }
    }
}

fn cmd_scan(
    n: usize,
    height: u64,
    budget: usize,
    out: Option<PathBuf>,
) -> Result<(Rendered, bool), Failure> {
    // Factoring is capped at degree 16; the scanner is honest only below it.
    if !(1..=16).contains(&n) {
        return usage("--n must lie in 1..=16");
    }
    if height == 0 || budget == 0 {
        return usage("--height and --budget must be positive");
    }
    let report = scan::scan(n, height, budget);
    let value = serde_json::to_value(&report).expect("scan report serializes");
    if let Some(path) = out {
        fs::write(&path, render_json(&value))
            .map_err(|e| Failure::Error(anyhow::anyhow!("writing {}: {e}", path.display())))?;
        let note = format!(
            "wrote {} specialization reports ({} exceptional) to {}\n",
            value["counts"]["s_n"].as_u64().unwrap_or(0) + report.exceptions.len() as u64,
            report.exceptions.len(),
            path.display()
        );
        Ok((Rendered::Text(note), true))
    } else {
        Ok((Rendered::Json(value), true))
    }
}

fn cmd_modular_table(max: u64) -> Result<(Rendered, bool), Failure> {
    if max == 0 {
        return usage("--max must be positive");
    }
    let mut s = String::from("n,psi,nu2,nu3,cusps,genus\n");
    for n in 1..=max {
        let row = modular::genus_x0(n);
        s.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.n, row.psi, row.nu2, row.nu3, row.cusps, row.genus
        ));
    }
    Ok((Rendered::Text(s), true))
}

fn cmd_simple_cover(
    scan_args: Option<Vec<u64>>,
    muller: Option<usize>,
    decision: Option<Vec<u64>>,
) -> Result<(Rendered, bool), Failure> {
    if scan_args.is_none() && muller.is_none() && decision.is_none() {
        return usage("provide at least one of --scan, --muller, --decision");
    }
    let mut obj = serde_json::Map::new();
    let mut all_hold = true;
    if let Some(args) = scan_args {
        let (n_max, g_max) = (args[0], args[1]);
        if n_max < 5 {
            return usage("--scan N_MAX must be ≥ 5");
        }
        let rows = simplecover::feasibility_scan(n_max, g_max);
        obj.insert(
            "feasible".into(),
            json!(rows.iter().map(|&(n, j, g)| [n, j, g]).collect::<Vec<_>>()),
        );
    }
    if let Some(n) = muller {
        if !(3..=16).contains(&n) {
            return usage("--muller N must lie in 3..=16");
        }
        let cap = cap_from_env()?;
        let datum = simplecover::muller_example_with_cap(n, cap)
            .map_err(|e| Failure::Error(anyhow::anyhow!("transposition datum: {e}")))?;
        all_hold &= datum.product_is_identity && datum.generates_symmetric && datum.genus == 0;
        obj.insert(
            "muller".into(),
            json!({
                "n": datum.n,
                "transpositions": datum
                    .transpositions
                    .iter()
                    .map(|p| p.images().to_vec())
                    .collect::<Vec<_>>(),
                "product_is_identity": datum.product_is_identity,
                "generates_symmetric": datum.generates_symmetric,
                "justification": datum.generation_justification,
                "genus": datum.genus,
            }),
        );
    }
    if let Some(args) = decision {
        let (g, n) = (args[0], args[1]);
        let conclusions = simplecover::theorem_decision(g, n)
            .map_err(|e| Failure::Verdict(format!("decision at (g, n) = ({g}, {n}): {e}")))?;
        obj.insert(
            "decision".into(),
            json!({
                "g": g,
                "n": n,
                "conclusions": conclusions
                    .iter()
                    .map(|c| json!({"clause": c.tag().to_string(), "statement": c.to_string()}))
                    .collect::<Vec<_>>(),
            }),
        );
    }
    Ok((Rendered::Json(Value::Object(obj)), all_hold))
}

fn cmd_monodromy(n: usize, all: bool) -> Result<(Rendered, bool), Failure> {
    if !(2..=10).contains(&n) {
        return usage("--n must lie in 2..=10 (numerically tracked range)");
    }
    let rows = monodromy::verify_lemma_ev(n)
        .map_err(|e| Failure::Verdict(format!("branch-loop tracking failed: {e}")))?;
    let mut obj = serde_json::Map::new();
    obj.insert("n".into(), json!(n));
    obj.insert(
        "branch_loops".into(),
        json!(rows
            .iter()
            .map(|r| {
                json!({
                    "nu": r.nu,
                    "cycle_type": r.cycle_type.parts,
                    "min_separation": r.min_separation,
                    "max_step_drift": r.max_step_drift,
                    "steps_used": r.steps_used,
                })
            })
            .collect::<Vec<_>>()),
    );
    let mut all_hold = true;
    if all {
        let profile = monodromy::infinity_profile(n)
            .map_err(|e| Failure::Verdict(format!("infinity loop failed: {e}")))?;
        obj.insert(
            "infinity".into(),
            json!({
                "cycle_type": profile.cycle_type.parts,
                "delta": profile.delta_inf,
                "min_separation": profile.result.min_separation,
                "max_step_drift": profile.result.max_step_drift,
                "steps_used": profile.result.steps_used,
            }),
        );
        let (finite, infinity) = monodromy::all_loop_permutations(n)
            .map_err(|e| Failure::Verdict(format!("loop system failed: {e}")))?;
        let defect = monodromy::composition_defect(&finite, &infinity)
            .map_err(|e| Failure::Verdict(format!("composition failed: {e}")))?;
        let identity = defect.is_identity();
        obj.insert("product_is_identity".into(), json!(identity));
        let measured = monodromy::exact_genus_via_monodromy(n)
            .map_err(|e| Failure::Verdict(format!("genus computation failed: {e}")))?;
        let formula = (n - 2) * (n - 2) / 4;
        obj.insert("exact_genus".into(), json!(measured));
        obj.insert("genus_formula_value".into(), json!(formula));
        all_hold = identity && measured == formula;
    }
    Ok((Rendered::Json(Value::Object(obj)), all_hold))
}

fn cmd_catalog(n: Option<usize>) -> Result<(Rendered, bool), Failure> {
    let degrees: Vec<usize> = match n {
        Some(v) if (6..=9).contains(&v) => vec![v],
        Some(_) => return usage("--n must lie in 6..=9"),
        None => (6..=9).collect(),
    };
    let mut rows = Vec::new();
    for degree in degrees {
        let mut entries = catalog::symmetric_maximals(degree)
            .map_err(|e| Failure::Error(anyhow::anyhow!("catalog: {e}")))?;
        entries.extend(
            catalog::alternating_maximals(degree)
                .map_err(|e| Failure::Error(anyhow::anyhow!("catalog: {e}")))?,
        );
        for entry in entries {
            rows.push(json!({
                "n": entry.degree,
                "name": entry.name,
                "family": entry.family.to_string(),
                "order": entry.expected_order,
                "index": entry.index_in_symmetric(),
            }));
        }
    }
    Ok((Rendered::Json(json!({ "entries": rows })), true))
}

fn cmd_genus_bound(index: u64, v: &str) -> Result<(Rendered, bool), Failure> {
    if index == 0 {
        return usage("--index must be positive");
    }
    let mut pairs = Vec::new();
    for part in v.split(',') {
        let Some((m, c1)) = part.split_once(':') else {
            return usage(format!("--v entries must be m:c1 pairs, got {part:?}"));
        };
        let (Ok(m), Ok(c1)) = (m.trim().parse::<u64>(), c1.trim().parse::<u64>()) else {
            return usage(format!("--v entry {part:?} is not a pair of integers"));
        };
        pairs.push((m, c1));
    }
    if pairs.is_empty() {
        return usage("--v must contain at least one m:c1 pair");
    }
    let bound = genus::genus_lower_bound_small(index, &pairs)
        .map_err(|e| Failure::Usage(format!("invalid ramification data: {e}")))?;
    Ok((Rendered::Text(format!("{bound}\n")), true))
}

fn run(command: Command) -> Result<(Rendered, bool), Failure> {
    match command {
        Command::LaguerreVerify { max_n } => cmd_laguerre_verify(max_n),
        Command::Certify { n, format } => cmd_certify(n, format),
        Command::Scan {
            n,
            height,
            budget,
            out,
        } => cmd_scan(n, height, budget, out),
        Command::ModularTable { max } => cmd_modular_table(max),
        Command::SimpleCover {
            scan,
            muller,
            decision,
        } => cmd_simple_cover(scan, muller, decision),
        Command::Monodromy { n, all } => cmd_monodromy(n, all),
        Command::Catalog { n } => cmd_catalog(n),
        Command::GenusBound { index, v } => cmd_genus_bound(index, &v),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        // Ignore "already initialized": only the first configuration wins.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(cli.command) {
        Ok((rendered, verdicts_hold)) => {
            match rendered {
                Rendered::Json(v) => print!("{}", render_json(&v)),
                Rendered::Text(s) => print!("{s}"),
            }
            if verdicts_hold {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verdict(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
