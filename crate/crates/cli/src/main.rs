//! `radsq` — analyze radical-square-zero algebras given by their quivers.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a computed
//! counterexample to one of the verified laws (the counterexample is
//! serialized to stderr).

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use radsq_core::error::{CheckError, Violation};
use radsq_core::ext;
use radsq_core::harness::{
    enumerate_connected, run_all_checks, CorpusMode, CorpusSpec, OracleConfig,
};
use radsq_core::rep;
use radsq_core::Quiver;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "radsq", version, about = "Homological analysis of radical-square-zero algebras over their Gabriel quivers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full analysis of one quiver file: shape detection, Ext profiles,
    /// vanishing bounds, syzygy chains, and the engine cross-check.
    Analyze {
        /// Quiver file (first line n, then the n adjacency rows).
        file: PathBuf,
        /// Ext-profile depth to print (default n + 1).
        #[arg(long)]
        depth: Option<usize>,
        /// Emit the full report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print the syzygy vectors of one simple and the Ext dimensions
    /// against the algebra, degree by degree.
    Resolve {
        file: PathBuf,
        /// Start vertex j (the simple S(j)).
        #[arg(long)]
        vertex: usize,
        /// Number of syzygy steps to print.
        #[arg(long)]
        steps: usize,
    },
    /// Construct the distinguished module τ⁻¹S(start) on a Δ-shaped
    /// quiver and verify its homological profile.
    Taurinv {
        file: PathBuf,
        /// Prime field to compute over.
        #[arg(long, default_value_t = 5)]
        field: u64,
    },
    /// Sweep connected quivers, run every check on each, and stream one
    /// JSON report per line.
    Enumerate {
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Largest arrow multiplicity per vertex pair.
        #[arg(long)]
        maxmult: u32,
        /// "exhaustive" (default) or "random".
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        /// Number of quivers to sample (random mode).
        #[arg(long)]
        count: Option<usize>,
        /// RNG seed (mandatory in random mode).
        #[arg(long)]
        seed: Option<u64>,
        /// Write reports here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Δ cycle quiver with m closing arrows in file format.
    Delta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
    },
}

enum AppError {
    Usage(String),
    Violation(Violation),
}

impl From<CheckError> for AppError {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::Usage(u) => AppError::Usage(u.to_string()),
            CheckError::Violation(v) => AppError::Violation(v),
        }
    }
}

impl From<radsq_core::UsageError> for AppError {
    fn from(e: radsq_core::UsageError) -> Self {
        AppError::Usage(e.to_string())
    }
}

fn exit_code(result: Result<(), AppError>) -> ExitCode {
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Violation(v)) => {
            eprintln!("law violation: {v}");
            if let Ok(json) = serde_json::to_string(&v) {
                eprintln!("{json}");
            }
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are successes, everything else is usage.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    exit_code(run(cli))
}

fn oracle_config() -> OracleConfig {
    let mut config = OracleConfig::default();
    if let Ok(value) = std::env::var("RADSQ_ORACLE_BUDGET") {
        if let Ok(budget) = value.trim().parse::<usize>() {
            config.dim_budget = budget;
        }
    }
    config
}

fn load_quiver(path: &PathBuf) -> Result<Quiver, AppError> {
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))?;
    Quiver::parse(&text).map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.cmd {
        Cmd::Analyze { file, depth, json } => analyze(&file, depth, json),
        Cmd::Resolve {
            file,
            vertex,
            steps,
        } => resolve(&file, vertex, steps),
        Cmd::Taurinv { file, field } => taurinv(&file, field),
        Cmd::Enumerate {
            n,
            maxmult,
            mode,
            count,
            seed,
            out,
        } => enumerate(n, maxmult, &mode, count, seed, out),
        Cmd::Delta { n, m } => {
            if n < 1 || m < 1 {
                return Err(AppError::Usage("delta needs n >= 1 and m >= 1".into()));
            }
            print!("{}", Quiver::delta(n, m).to_text());
            Ok(())
        }
    }
}

fn analyze(file: &PathBuf, depth: Option<usize>, json: bool) -> Result<(), AppError> {
    let q = load_quiver(file)?;
    let mut report = run_all_checks(&q, &oracle_config())?;
    if let Some(d) = depth {
        let mut profiles = Vec::with_capacity(q.n());
        for j in 0..q.n() {
            profiles.push(ext::ext_profile(&q, j, d)?);
        }
        report.profiles = profiles;
    }
    if json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serialization")
        );
        return Ok(());
    }

    let n = q.n();
    println!("quiver: {n} vertices, {} arrows", q.arrow_count());
    match &report.delta {
        Some(s) => {
            let cycle: Vec<String> = s.cycle.iter().map(|v| v.to_string()).collect();
            println!(
                "shape: Δ(n={}, t={}) with bundle multiplicity m={}, cycle {}",
                s.n,
                s.t,
                s.m,
                cycle.join(" -> ")
            );
        }
        None => println!("shape: not a Δ cycle"),
    }
    println!(
        "self-injective: {}   simple ring: {}",
        yes_no(report.self_injective),
        yes_no(report.simple_ring)
    );
    println!("Ext profiles against Λ:");
    for profile in &report.profiles {
        println!(
            "  S({}): {:?}   (first nonzero degree: {})",
            profile.vertex, profile.dims, report.nakayama_bounds[profile.vertex]
        );
    }
    println!(
        "self-injectivity equivalence: shape says {}, vanishing witness {}",
        yes_no(report.classification.self_injective_not_simple),
        match report.classification.witness {
            Some(j) => format!("S({j})"),
            None => "none".to_string(),
        }
    );
    if !report.chains.is_empty() {
        println!("syzygy chains (in-count on the left, out-count on the right):");
        for chain in &report.chains {
            println!("  {}", render_chain(&q, chain));
        }
    }
    if let Some(u) = &report.vanishing_uniqueness {
        println!(
            "unique deep-vanishing simple: S({}) with dim Ext^{}(S, Λ) = {}",
            u.expected_vertex, n, u.top_degree_dim
        );
    }
    if report.oracle.ran {
        let primes: Vec<String> = report.oracle.primes.iter().map(|p| format!("F{p}")).collect();
        println!(
            "oracle: agreed over {} (profile depth per vertex {:?})",
            primes.join(", "),
            report.oracle.profile_depth
        );
    } else {
        println!("oracle: skipped (Λ exceeds the dimension budget)");
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// One syzygy chain as aligned text: extra in-arrows of the start on the
/// left, out-arrows of the end on the right, unit steps in between.
fn render_chain(q: &Quiver, chain: &ext::ChainReport) -> String {
    let start = chain.chain[0];
    let end = *chain.chain.last().unwrap();
    let mut s = format!("[{} in] ", q.in_degree(start));
    let steps: Vec<String> = chain.chain.iter().map(|v| format!("S({v})")).collect();
    s.push_str(&steps.join(" -1-> "));
    s.push_str(&format!(" [{} out]", q.out_degree(end)));
    if !chain.cover_injective.is_empty() {
        let covers: Vec<String> = chain.chain[..chain.chain.len() - 1]
            .iter()
            .map(|v| format!("P({v})"))
            .collect();
        s.push_str(&format!("   injective covers: {}", covers.join(" ")));
    }
    s
}

fn resolve(file: &PathBuf, vertex: usize, steps: usize) -> Result<(), AppError> {
    let q = load_quiver(file)?;
    if vertex >= q.n() {
        return Err(AppError::Usage(format!(
            "vertex {vertex} out of range for a {}-vertex quiver",
            q.n()
        )));
    }
    let profile = ext::ext_profile(&q, vertex, steps)?;
    let mut w = ext::SimpleVector::unit(q.n(), vertex);
    for i in 0..=steps {
        println!(
            "step {i}: Ω^{i} S({vertex}) = {:?}   dim Ext^{i}(S({vertex}), Λ) = {}",
            w.0, profile.dims[i]
        );
        if i < steps {
            w = ext::syzygy_vector(&q, &w)?;
        }
    }
    Ok(())
}

fn taurinv(file: &PathBuf, field: u64) -> Result<(), AppError> {
    let q = load_quiver(file)?;
    if !q.is_connected() {
        return Err(AppError::Usage("the quiver must be connected".into()));
    }
    let shape = q
        .detect_delta_shape()
        .filter(|s| s.t > 1)
        .ok_or_else(|| {
            AppError::Usage("τ⁻¹ construction needs a Δ-shaped quiver with t > 1".into())
        })?;
    let dm = rep::distinguished_module(&q, &shape, field)?;
    println!(
        "Δ(n={}, t={}) with m={}, start S({}), end S({}), field F{}",
        shape.n,
        shape.t,
        shape.m,
        shape.start(),
        shape.end(),
        field
    );
    println!("M = τ⁻¹ S({}):", shape.start());
    println!("  dims per vertex: {:?}", dm.module.dims());
    println!("  length: {}", dm.length);
    println!(
        "  Ω M = S({})^c with c = {}   top M = S({})^d with d = {}",
        shape.start(),
        dm.syzygy_multiplicity,
        shape.end(),
        dm.top_multiplicity
    );
    println!("checks:");
    println!(
        "  Ext^1..{}(M, Λ) = 0: {}",
        shape.n,
        yes_no(dm.checks.ext_vanishing_through_n)
    );
    println!(
        "  Ext^{}(M, Λ) != 0: {}",
        shape.n + 1,
        yes_no(dm.checks.ext_next_degree_nonzero)
    );
    println!(
        "  syzygy concentrated at the start simple: {}",
        yes_no(dm.checks.syzygy_is_start_power)
    );
    println!(
        "  top concentrated at the end simple: {}",
        yes_no(dm.checks.top_at_cycle_end)
    );
    println!(
        "  τ M recovers S({}): {}",
        shape.start(),
        yes_no(dm.checks.tau_recovers_start_simple)
    );
    println!(
        "length audit: cokernel dimension of the dualized presentation = {} ({} the module length)",
        dm.presentation_coker_dim,
        if dm.presentation_coker_dim == dm.length {
            "equals"
        } else {
            "DIFFERS FROM"
        }
    );
    println!(
        "closed-form claim t^2 + t - 1 = {}: {} (measured {}; the m-arrow realization gives m^2 + m - 1 = {})",
        dm.claimed_length,
        if dm.length_matches_claim() {
            "matches"
        } else {
            "disagrees"
        },
        dm.length,
        shape.m as u64 * shape.m as u64 + shape.m as u64 - 1
    );
    if !dm.checks.all_pass() {
        return Err(AppError::Violation(
            Violation::new(
                "distinguished-module",
                format!("failed checks: {:?}", dm.checks),
            )
            .on_quiver(q.adj().to_vec()),
        ));
    }
    if dm.presentation_coker_dim != dm.length {
        return Err(AppError::Violation(
            Violation::new(
                "distinguished-module-length",
                format!(
                    "module length {} vs dual presentation cokernel {}",
                    dm.length, dm.presentation_coker_dim
                ),
            )
            .on_quiver(q.adj().to_vec()),
        ));
    }
    Ok(())
}

fn enumerate(
    n: usize,
    maxmult: u32,
    mode: &str,
    count: Option<usize>,
    seed: Option<u64>,
    out: Option<PathBuf>,
) -> Result<(), AppError> {
    let mode = match mode {
        "exhaustive" => CorpusMode::Exhaustive,
        "random" => {
            let count =
                count.ok_or_else(|| AppError::Usage("random mode needs --count".into()))?;
            let seed = seed.ok_or_else(|| AppError::Usage("random mode needs --seed".into()))?;
            CorpusMode::Random { count, seed }
        }
        other => {
            return Err(AppError::Usage(format!(
                "unknown mode {other:?}; use exhaustive or random"
            )))
        }
    };
    let spec = CorpusSpec {
        n,
        max_entry: maxmult,
        mode,
    };
    let quivers = enumerate_connected(&spec)?;
    let config = oracle_config();
    let mut sink: Box<dyn Write> = match &out {
        Some(path) => Box::new(
            fs::File::create(path)
                .map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))?,
        ),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut written = 0usize;
    for q in quivers {
        let report = run_all_checks(&q, &config)?;
        let line = serde_json::to_string(&report).expect("report serialization");
        writeln!(sink, "{line}").map_err(|e| AppError::Usage(format!("write failed: {e}")))?;
        written += 1;
    }
    sink.flush()
        .map_err(|e| AppError::Usage(format!("write failed: {e}")))?;
    eprintln!("{written} reports written");
    Ok(())
}
