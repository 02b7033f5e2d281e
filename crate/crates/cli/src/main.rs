//! `domkit`: compute domination parameters, build double-dominating sets,
//! scan bounds and generate the extremal families.
//!
//! Exit status: 0 success, 1 input error, 2 parameter or precondition not
//! satisfiable on the given graph (or scan budget exceeded), 3 a check failed
//! (bound violation or invalid certificate).

mod input;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use domkit::constructions::{certify, ConstructionTheorem};
use domkit::families::{generate, ExpectedValues, FamilySpec};
use domkit::graph::{format_edge_list, Graph};
use domkit::solvers::{compute, ParameterKind};
use domkit::verifier::{
    family_sweep, run_with_jobs, scan_exhaustive, scan_random, scan_random_trees, EdgeProb,
};
use domkit::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "domkit",
    version,
    about = "Double domination toolkit for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact parameter values with lexicographically least witnesses.
    Compute {
        /// Edge-list or graph6 file, `-` for stdin.
        input: String,
        /// Comma-separated parameters: gamma, gammaK, xK, gammat, i, alpha, beta
        /// (or the symbols γ, γ₂, γ×2, γt, α, β).
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "x2,gamma,gamma2,gammat,i,alpha,beta"
        )]
        params: Vec<ParameterKind>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Build a double dominating set from optimal witness sets and check it.
    Certify {
        input: String,
        #[arg(long, value_parser = parse_theorem)]
        theorem: ConstructionTheorem,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Check every bound on a set of graphs and write a JSON report.
    Verify {
        /// Report path; stdout when omitted.
        #[arg(long, global = true)]
        out: Option<String>,
        /// Worker threads; defaults to one per CPU. Results do not depend on it.
        #[arg(long, global = true)]
        jobs: Option<usize>,
        /// Seed for random modes when not given positionally.
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
        #[command(subcommand)]
        mode: VerifyMode,
    },
    /// Emit a member of one of the named graph families.
    Family {
        #[arg(value_enum, ignore_case = true)]
        kind: FamilyKind,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
}

#[derive(Subcommand)]
enum VerifyMode {
    /// Every labelled graph on N vertices.
    Exhaustive { n: usize },
    /// COUNT samples of G(N, PROB); PROB as `a/b` or a decimal.
    Random {
        n: usize,
        count: u64,
        prob: EdgeProb,
        seed: Option<u64>,
    },
    /// COUNT uniformly random labelled trees on N vertices.
    Trees {
        n: usize,
        count: u64,
        seed: Option<u64>,
    },
    /// Closed forms and bounds on the H(t, r) and H'(r) families.
    FamilySweep,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    H,
    Hprime,
    Complete,
    Star,
    Path,
    Cycle,
    Pendant,
    Figure3,
}

fn parse_theorem(s: &str) -> Result<ConstructionTheorem, String> {
    s.parse()
}

enum Failure {
    Input(String),
    Domain(String),
    Check(String),
}

impl Failure {
    fn from_core(e: Error) -> Failure {
        match e {
            Error::OrderTooLarge(_)
            | Error::EmptyGraph
            | Error::VertexOutOfRange { .. }
            | Error::SelfLoop(_)
            | Error::VertexNotInSet { .. }
            | Error::Graph6(_)
            | Error::Parse { .. } => Failure::Input(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Compute {
            input,
            params,
            format,
        } => cmd_compute(&input, &params, format),
        Command::Certify {
            input,
            theorem,
            format,
        } => cmd_certify(&input, theorem, format),
        Command::Verify {
            out,
            jobs,
            seed,
            mode,
        } => run_with_jobs(jobs, || cmd_verify(mode, seed, out.as_deref())),
        Command::Family {
            kind,
            t,
            r,
            n,
            format,
        } => cmd_family(kind, t, r, n, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
    }
}

fn load(path: &str) -> Result<Graph, Failure> {
    input::read_graph(path).map_err(Failure::Input)
}

fn set_json(set: domkit::VertexSet) -> Value {
    json!(set.to_vec())
}

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.order(), "m": g.edge_count(), "graph6": g.to_graph6() })
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("json value serializes")
    );
}

fn cmd_compute(path: &str, params: &[ParameterKind], format: Format) -> Outcome {
    let g = load(path)?;
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    let mut undefined = Vec::new();
    for &kind in params {
        match compute(kind, &g) {
            Ok(r) => {
                lines.push(format!("{kind} = {}  witness {}", r.value, r.witness));
                rows.push(json!({
                    "parameter": kind,
                    "symbol": kind.to_string(),
                    "value": r.value,
                    "witness": set_json(r.witness),
                }));
            }
            Err(Error::InfeasibleParameter { kind, reason }) => {
                undefined.push(format!("{reason}: {kind} undefined"));
                rows.push(json!({
                    "parameter": kind,
                    "symbol": kind.to_string(),
                    "error": reason,
                }));
            }
            Err(e) => return Err(Failure::from_core(e)),
        }
    }
    match format {
        Format::Json => print_json(&json!({ "graph": graph_json(&g), "parameters": rows })),
        Format::Human => {
            println!(
                "n = {}, m = {}, graph6 {}",
                g.order(),
                g.edge_count(),
                g.to_graph6()
            );
            for line in &lines {
                println!("{line}");
            }
        }
    }
    if undefined.is_empty() {
        Ok(())
    } else {
        Err(Failure::Domain(undefined.join("; ")))
    }
}

fn cmd_certify(path: &str, theorem: ConstructionTheorem, format: Format) -> Outcome {
    let g = load(path)?;
    let cert = certify(theorem, &g).map_err(|e| match e {
        Error::PreconditionViolated(msg) => {
            Failure::Domain(format!("{theorem} does not apply: {msg}"))
        }
        other => Failure::from_core(other),
    })?;
    let verdict = cert.validate(&g);
    let (s_kind, d_kind) = theorem.witness_kinds();
    match format {
        Format::Json => {
            let mut doc = serde_json::to_value(&cert).expect("certificate serializes");
            doc["graph"] = graph_json(&g);
            doc["valid"] = json!(verdict.is_ok());
            if let Err(e) = &verdict {
                doc["failure"] = json!(e.to_string());
            }
            print_json(&doc);
        }
        Format::Human => {
            let mut out = String::new();
            let _ = writeln!(out, "theorem: {theorem}");
            let _ = writeln!(out, "S ({s_kind}): {}", cert.input_s);
            let _ = writeln!(out, "D ({d_kind}): {}", cert.input_d);
            if !cert.forced.is_empty() {
                let _ = writeln!(out, "forced: {}", cert.forced);
            }
            let _ = writeln!(out, "added: {}", cert.augmented);
            let _ = writeln!(out, "W′: {}  (size {})", cert.result_w, cert.result_w.len());
            let _ = writeln!(out, "bound: {}", cert.size_bound);
            match &verdict {
                Ok(()) => {
                    let _ = writeln!(out, "verdict: OK");
                }
                Err(e) => {
                    let _ = writeln!(out, "verdict: FAILED ({e})");
                }
            }
            print!("{out}");
        }
    }
    verdict.map_err(|e| Failure::Check(format!("certificate check failed: {e}")))
}

fn cmd_verify(mode: VerifyMode, default_seed: u64, out: Option<&str>) -> Outcome {
    let (json, passed, summary) = match mode {
        VerifyMode::Exhaustive { n } => {
            let r = scan_exhaustive(n).map_err(Failure::from_core)?;
            let summary = format!(
                "exhaustive n={n}: {} graphs, {} violations",
                r.meta.count,
                r.violation_count()
            );
            (r.to_json(), r.passed(), summary)
        }
        VerifyMode::Random {
            n,
            count,
            prob,
            seed,
        } => {
            let seed = seed.unwrap_or(default_seed);
            let r = scan_random(n, count, prob, seed).map_err(Failure::from_core)?;
            let summary = format!(
                "random n={n} p={prob} seed={seed}: {} graphs, {} violations",
                r.meta.count,
                r.violation_count()
            );
            (r.to_json(), r.passed(), summary)
        }
        VerifyMode::Trees { n, count, seed } => {
            let seed = seed.unwrap_or(default_seed);
            let r = scan_random_trees(n, count, seed).map_err(Failure::from_core)?;
            let summary = format!(
                "trees n={n} seed={seed}: {} trees, {} violations",
                r.meta.count,
                r.violation_count()
            );
            (r.to_json(), r.passed(), summary)
        }
        VerifyMode::FamilySweep => {
            let r = family_sweep().map_err(Failure::from_core)?;
            let mismatches: usize = r.families.iter().map(|f| f.mismatches.len()).sum();
            let violations: usize = r.theorems.iter().map(|t| t.violations.len()).sum();
            let summary = format!(
                "family sweep: {} instances, {mismatches} mismatches, {violations} violations",
                r.families.len()
            );
            (r.to_json(), r.passed(), summary)
        }
    };
    match out {
        Some(path) => {
            std::fs::write(path, format!("{json}\n"))
                .map_err(|e| Failure::Input(format!("{path}: {e}")))?;
            println!("{summary}");
        }
        None => {
            println!("{json}");
            eprintln!("{summary}");
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Check("violations found".into()))
    }
}

fn cmd_family(
    kind: FamilyKind,
    t: Option<usize>,
    r: Option<usize>,
    n: Option<usize>,
    format: GraphFormat,
) -> Outcome {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::Input(format!("this family needs --{flag}")))
    };
    let spec = match kind {
        FamilyKind::H => FamilySpec::H {
            t: need(t, "t")?,
            r: need(r, "r")?,
        },
        FamilyKind::Hprime => FamilySpec::HPrime { r: need(r, "r")? },
        FamilyKind::Complete => FamilySpec::Complete { n: need(n, "n")? },
        FamilyKind::Star => FamilySpec::Star { n: need(n, "n")? },
        FamilyKind::Path => FamilySpec::Path { n: need(n, "n")? },
        FamilyKind::Cycle => FamilySpec::Cycle { n: need(n, "n")? },
        FamilyKind::Pendant => FamilySpec::CompletePlusPendant { n: need(n, "n")? },
        FamilyKind::Figure3 => FamilySpec::Figure3,
    };
    let (g, expected) = generate(spec).map_err(Failure::from_core)?;
    match format {
        GraphFormat::Json => print_json(&json!({
            "spec": spec,
            "name": spec.to_string(),
            "graph": graph_json(&g),
            "edges": g.edges(),
            "expected": expected,
        })),
        GraphFormat::Graph6 => println!("{}{}", comment_block(spec, &g, &expected), g.to_graph6()),
        GraphFormat::Edgelist => print!(
            "{}{}",
            comment_block(spec, &g, &expected),
            format_edge_list(&g)
        ),
    }
    Ok(())
}

fn comment_block(spec: FamilySpec, g: &Graph, expected: &ExpectedValues) -> String {
    let mut s = format!("# {spec}: n = {}, m = {}\n", g.order(), g.edge_count());
    for (kind, value) in expected.parameters() {
        let _ = writeln!(s, "# {kind} = {value}");
    }
    if let Some(l) = expected.leaves {
        let _ = writeln!(s, "# leaves = {l}");
    }
    if let Some(sup) = expected.supports {
        let _ = writeln!(s, "# supports = {sup}");
    }
    s
}
