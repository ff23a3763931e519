use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use foliation_index::chern::{self, BoundContext, GlobalData, Verdict};
use foliation_index::localalgebra::DEFAULT_N_MAX;
use foliation_index::parser::parse_scenario;
use foliation_index::verify::{numbers_as_strings, run_scenario, IndexReport, Scenario};
use foliation_index::BigInt;

use serde_json::{json, Value};

const EXIT_PARSE: u8 = 1;
const EXIT_REFUSED: u8 = 2;
const EXIT_VERDICT: u8 = 3;

/// Local indices of holomorphic foliations along invariant hypersurfaces,
/// and the global identities they satisfy on projective space.
#[derive(Parser)]
#[command(name = "foliation-index", version)]
struct Cli {
    /// Emit a JSON document instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Local indices at every point of a germ or scenario file.
    Indices(FileArgs),
    /// Check a scenario against the global identities.
    Verify(FileArgs),
    /// Global Chern numbers and degree bounds for given degrees.
    Chern(ChernArgs),
    /// Check the closed-form identities over a box of (n, d, k).
    Sweep(SweepArgs),
}

#[derive(Args)]
struct FileArgs {
    file: PathBuf,
    /// Largest truncation order tried when certifying a local dimension.
    #[arg(long, default_value_t = DEFAULT_N_MAX, value_parser = clap::value_parser!(u32).range(2..))]
    nmax: u32,
}

#[derive(Args)]
struct ChernArgs {
    /// Dimension of the projective space.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Degree of the foliation.
    #[arg(long)]
    d: u64,
    /// Degree of the hypersurface.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Milnor numbers of the singular points of the hypersurface.
    #[arg(long, value_delimiter = ',')]
    mu: Vec<u64>,
    /// Foliation singularities at smooth points of the hypersurface.
    #[arg(long, default_value_t = 0)]
    s2: usize,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest dimension.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..))]
    nmax: u32,
    /// Largest foliation degree.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(2..))]
    dmax: u64,
    /// Largest hypersurface degree.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(2..))]
    kmax: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE } else { 0 });
        }
    };
    let code = match cli.command {
        Command::Indices(args) => cmd_indices(&args, cli.json),
        Command::Verify(args) => cmd_verify(&args, cli.json),
        Command::Chern(args) => cmd_chern(&args, cli.json),
        Command::Sweep(args) => cmd_sweep(&args, cli.json),
    };
    ExitCode::from(code)
}

fn load(path: &Path) -> Result<Scenario, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_PARSE
    })?;
    parse_scenario(&text).map_err(|e| {
        eprintln!("error: {}:{e}", path.display());
        EXIT_PARSE
    })
}

fn print_json(v: Value) {
    println!("{}", serde_json::to_string_pretty(&numbers_as_strings(v)).expect("valid JSON"));
}

fn report_refusals(report: &IndexReport) {
    for p in report.points.iter().filter(|p| p.refused) {
        eprintln!("error: point {}: {}", p.label, p.error.as_deref().unwrap_or("refused"));
    }
}

fn cmd_indices(args: &FileArgs, json: bool) -> u8 {
    let scenario = match load(&args.file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let report = run_scenario(&scenario, args.nmax);
    if json {
        print_json(json!({ "n": report.n, "points": report.points }));
    } else {
        print!("{}", report.points_table());
    }
    report_refusals(&report);
    if report.points.iter().any(|p| p.refused) {
        EXIT_REFUSED
    } else {
        0
    }
}

fn cmd_verify(args: &FileArgs, json: bool) -> u8 {
    let scenario = match load(&args.file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let report = run_scenario(&scenario, args.nmax);
    if json {
        print!("{}", report.to_json_string());
    } else {
        print!("{}", report.to_table());
    }
    report_refusals(&report);
    report.exit_code()
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::HypothesesNotMet => "hypotheses-not-met",
    }
}

fn cmd_chern(args: &ChernArgs, json: bool) -> u8 {
    let g = match GlobalData::new(args.n, args.d, args.k, args.mu.clone()) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let values = (|| -> Result<_, chern::ChernError> {
        Ok((
            chern::integral_x(&g)?,
            chern::gsv_total(&g)?,
            chern::schwartz_total(&g)?,
            chern::schwartz_total_via_integrals(&g)?,
        ))
    })();
    let (integral_x, gsv_total, schwartz_total, _) = match values {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VERDICT;
        }
    };
    let baum_bott = chern::baum_bott_total(g.n, g.d);
    let chi = chern::euler_char_hypersurface(g.n, g.k, &g.mu_list);
    let sum = chern::lemma51_sum(g.n, g.d, g.k);
    let negativity = if g.k <= g.d + 2 {
        "not-applicable"
    } else if sum < BigInt::from(0) {
        "negative"
    } else {
        "nonnegative"
    };
    let ctx = BoundContext { s1: g.mu_list.len(), s2: args.s2, sing_d_in_sing_f: true };
    let b = chern::poincare_bound_checks(&g, &ctx);

    if json {
        print_json(json!({
            "n": g.n, "d": g.d, "k": g.k, "mu": g.mu_list,
            "integral_X": integral_x.to_string(),
            "baum_bott_total": baum_bott.to_string(),
            "gsv_total": gsv_total.to_string(),
            "schwartz_total": schwartz_total.to_string(),
            "chi_D": chi.to_string(),
            "negativity_sum": sum.to_string(),
            "negativity": negativity,
            "bounds": b,
        }));
    } else {
        println!("integral_X       {integral_x}");
        println!("baum_bott_total  {baum_bott}");
        println!("gsv_total        {gsv_total}");
        println!("schwartz_total   {schwartz_total}");
        println!("chi_D            {chi}");
        let note = match negativity {
            "not-applicable" => " (k <= d + 2)".to_string(),
            "nonnegative" if g.n % 2 == 1 => " (odd n: the bound only holds for even n)".to_string(),
            _ => String::new(),
        };
        println!("negativity_sum   {sum}  {negativity}{note}");
        println!("degree_bound     {}  (k={} vs d+2={})", verdict_name(b.degree_bound), g.k, g.d + 2);
        println!(
            "binomial_bound   {}  ({} vs {})",
            verdict_name(b.binomial_bound),
            b.binomial_lhs,
            b.binomial_rhs
        );
        println!(
            "euler_bound      {}  (chi_D={} vs s1+s2={})",
            verdict_name(b.euler_bound),
            b.euler_characteristic,
            ctx.s1 + ctx.s2
        );
    }
    0
}

fn cmd_sweep(args: &SweepArgs, json: bool) -> u8 {
    let r = chern::identity_sweep(args.nmax, args.dmax, args.kmax);
    if json {
        let mut v = serde_json::to_value(&r).expect("sweep serializes");
        v["passed"] = Value::Bool(r.passed());
        print_json(v);
    } else {
        println!("box n=2..{} d=0..{} k=1..{}: {} triples", r.n_max, r.d_max, r.k_max, r.triples);
        for id in chern::Identity::ALL {
            let fails = r.failures_of(id).count();
            println!("{:<20} {}", format!("{id:?}"), if fails == 0 { "pass".to_string() } else { format!("{fails} failure(s)") });
        }
        for f in &r.failures {
            println!("  counterexample {:?} n={} d={} k={}: {} != {}", f.identity, f.n, f.d, f.k, f.lhs, f.rhs);
        }
        let even: Vec<_> = r.even_negativity_violations().collect();
        let odd: Vec<_> = r.odd_negativity_violations().collect();
        println!(
            "{:<20} {} ({} even-n triples with k > d + 2)",
            "NegativeGsvTotal",
            if even.is_empty() { "pass".to_string() } else { format!("{} failure(s)", even.len()) },
            r.negativity_cases_even
        );
        for v in &even {
            println!("  counterexample n={} d={} k={}: sum {}", v.n, v.d, v.k, v.sum);
        }
        if !odd.is_empty() {
            println!(
                "odd n: the negativity bound fails at {} of {} triple(s)",
                odd.len(),
                r.negativity_cases_odd
            );
            for v in &odd {
                println!("  n={} d={} k={}: sum {}", v.n, v.d, v.k, v.sum);
            }
        }
    }
    if r.passed() {
        0
    } else {
        EXIT_VERDICT
    }
}
