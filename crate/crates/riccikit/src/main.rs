//! riccikit command line: dataset runs, flow traces, bound verification,
//! and machine-readable reports.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use riccikit::centrality::{centrality, connected_top_k, CentralityMethod};
use riccikit::curvature::{curvature_field, CurvatureKind};
use riccikit::detect::{detect_core, CoreConfig};
use riccikit::ensemble::{
    run_suite_row, suite_csv, suite_rows, DEFAULT_SUITE_GRAPHS, DEFAULT_SUITE_ITERATIONS,
    DEFAULT_SUITE_SEED, DEFAULT_SUITE_THETA,
};
use riccikit::error::Error;
use riccikit::flow::{
    iteration_budget, run_flow, trajectory_csv, FlowConfig, FlowVariant,
};
use riccikit::graph::{largest_connected_component, load_edge_list, WeightedGraph};
use riccikit::metrics::metrics_report;
use riccikit::report::{
    dataset_stats, reference_dataset, MethodRow, RunMeta, RunReport,
};

const EXIT_INPUT: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_SUITE: u8 = 3;

#[derive(Parser)]
#[command(name = "riccikit", version, about = "Discrete Ricci curvature flows and core detection on weighted graphs")]
struct Cli {
    /// JSON config file mirroring the flags; explicit flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Cap on worker threads (default: all cores). Results do not depend
    /// on this value.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Detect a core subgraph via the Ricci flow pipeline and report metrics.
    Detect(DetectArgs),
    /// Size-matched connected groups from centrality baselines, with metrics.
    Baseline(BaselineArgs),
    /// Metrics for an explicit core node list.
    Metrics(MetricsArgs),
    /// Per-iteration flow trace as CSV.
    FlowTrace(FlowTraceArgs),
    /// Per-edge curvature of the input graph as CSV.
    Curvature(CurvatureArgs),
    /// Run the weight-envelope property suite (or the budget calculator).
    VerifyBounds(VerifyBoundsArgs),
    /// Re-run a packaged dataset configuration and diff against reference
    /// expectations.
    Reproduce(ReproduceArgs),
}

#[derive(Args, Clone)]
struct DetectArgs {
    /// Edge-list file ("u v [w]" rows; '#'/'%' comments).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    default_weight: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    step: Option<f64>,
    #[arg(long)]
    iters: Option<u32>,
    /// Fraction of edges to remove after the flow, in [0, 1].
    #[arg(long)]
    remove_frac: Option<f64>,
    /// Target core size; defaults to floor(n / 2).
    #[arg(long)]
    core_budget: Option<usize>,
    /// Report JSON path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also write the core node labels, one per line.
    #[arg(long)]
    nodes_out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct BaselineArgs {
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    default_weight: Option<f64>,
    /// degree | betweenness | closeness | pagerank | all
    #[arg(long)]
    method: Option<String>,
    /// Group size; defaults to the core size of --from-report.
    #[arg(long)]
    size: Option<usize>,
    /// Prior detect report to take the target size from.
    #[arg(long)]
    from_report: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct MetricsArgs {
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    default_weight: Option<f64>,
    /// File with one core node label per line.
    #[arg(long)]
    core_file: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct FlowTraceArgs {
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    default_weight: Option<f64>,
    /// rho-driven | quasi-normalized | weight-driven | normalized | ni-reset
    #[arg(long)]
    variant: Option<String>,
    /// ollivier | lly
    #[arg(long)]
    curvature: Option<String>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    step: Option<f64>,
    #[arg(long)]
    iters: Option<u32>,
    /// Enables theta-surgery after each iteration.
    #[arg(long)]
    theta: Option<f64>,
    /// Check theorem envelopes each iteration (requires s in range).
    #[arg(long)]
    envelope_check: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct CurvatureArgs {
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    default_weight: Option<f64>,
    /// ollivier | lly
    #[arg(long)]
    curvature: Option<String>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct VerifyBoundsArgs {
    #[arg(long)]
    seed: Option<u64>,
    /// Graphs per (variant, curvature) row.
    #[arg(long)]
    graphs: Option<usize>,
    #[arg(long)]
    iters: Option<u32>,
    /// Restrict to one flow variant.
    #[arg(long)]
    variant: Option<String>,
    /// Restrict to one curvature kind: ollivier | lly.
    #[arg(long)]
    curvature: Option<String>,
    #[arg(long)]
    theta: Option<f64>,
    /// Per-run slack CSV path.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Budget mode: print the iteration budget instead of running the suite.
    #[arg(long)]
    budget: bool,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    threshold: Option<f64>,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args, Clone)]
struct ReproduceArgs {
    /// cora | citeseer | bio-ce-ht | all
    #[arg(long)]
    dataset: Option<String>,
    /// Directory holding the dataset edge lists.
    #[arg(long)]
    data_dir: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Flat mirror of every flag; any subset may appear in --config JSON.
#[derive(Deserialize, Default, Clone)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    input: Option<PathBuf>,
    default_weight: Option<f64>,
    alpha: Option<f64>,
    step: Option<f64>,
    iters: Option<u32>,
    remove_frac: Option<f64>,
    core_budget: Option<usize>,
    output: Option<PathBuf>,
    nodes_out: Option<PathBuf>,
    method: Option<String>,
    size: Option<usize>,
    from_report: Option<PathBuf>,
    core_file: Option<PathBuf>,
    variant: Option<String>,
    curvature: Option<String>,
    theta: Option<f64>,
    envelope_check: Option<bool>,
    seed: Option<u64>,
    graphs: Option<usize>,
    budget: Option<bool>,
    eps: Option<f64>,
    threshold: Option<f64>,
    s: Option<f64>,
    m: Option<usize>,
    dataset: Option<String>,
    data_dir: Option<PathBuf>,
    threads: Option<usize>,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::Io(_) => EXIT_INPUT,
        Error::Config(_) | Error::Domain(_) | Error::EmptyGraph => EXIT_CONFIG,
        Error::AtIteration { source, .. } | Error::OnEdge { source, .. } => exit_code_for(source),
        _ => EXIT_CONFIG,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file_config = match load_file_config(cli.config.as_deref()) {
        Ok(c) => c,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_INPUT);
        }
    };

    let threads = cli.threads.or(file_config.threads);
    let run = || match run_command(cli.command, &file_config) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    };
    match threads {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(k).build();
            match pool {
                Ok(pool) => pool.install(run),
                Err(err) => {
                    eprintln!("error: {err}");
                    ExitCode::from(EXIT_CONFIG)
                }
            }
        }
        None => run(),
    }
}

fn load_file_config(path: Option<&Path>) -> Result<FileConfig, Error> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Config(format!("config file: {e}")))
}

fn run_command(command: Command, file: &FileConfig) -> Result<ExitCode, Error> {
    match command {
        Command::Detect(args) => cmd_detect(args, file),
        Command::Baseline(args) => cmd_baseline(args, file),
        Command::Metrics(args) => cmd_metrics(args, file),
        Command::FlowTrace(args) => cmd_flow_trace(args, file),
        Command::Curvature(args) => cmd_curvature(args, file),
        Command::VerifyBounds(args) => cmd_verify_bounds(args, file),
        Command::Reproduce(args) => cmd_reproduce(args, file),
    }
}

fn require_input(
    flag: Option<PathBuf>,
    file: &FileConfig,
    default_weight: Option<f64>,
) -> Result<(WeightedGraph, PathBuf), Error> {
    let path = flag
        .or_else(|| file.input.clone())
        .ok_or_else(|| Error::Config("--input is required".into()))?;
    let dw = default_weight.or(file.default_weight).unwrap_or(1.0);
    let raw = load_edge_list(&path, dw)?;
    // datasets are reduced to their largest connected component at load time
    let g = largest_connected_component(&raw)?;
    Ok((g, path))
}

fn write_or_print(output: Option<&Path>, content: &str) -> Result<(), Error> {
    match output {
        Some(path) => {
            std::fs::write(path, content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parse_curvature(kind: Option<&str>, alpha: Option<f64>) -> Result<CurvatureKind, Error> {
    match kind.unwrap_or("ollivier") {
        "ollivier" => Ok(CurvatureKind::Ollivier { alpha: alpha.unwrap_or(0.1) }),
        "lly" | "lin-lu-yau" => Ok(CurvatureKind::LinLuYau),
        other => Err(Error::Config(format!("unknown curvature kind '{other}'"))),
    }
}

fn cmd_detect(args: DetectArgs, file: &FileConfig) -> Result<ExitCode, Error> {
    let started = Instant::now();
    let (g, input_path) = require_input(args.input.clone(), file, args.default_weight)?;
    let config = CoreConfig {
        iterations: args.iters.or(file.iters).unwrap_or(50),
        removal_fraction: args.remove_frac.or(file.remove_frac).unwrap_or(0.8),
        step_size: args.step.or(file.step).unwrap_or(0.1),
        alpha: args.alpha.or(file.alpha).unwrap_or(0.1),
        core_budget: args.core_budget.or(file.core_budget),
    };
    let load_seconds = started.elapsed().as_secs_f64();

    let flow_started = Instant::now();
    let result = detect_core(&g, &config)?;
    let flow_seconds = flow_started.elapsed().as_secs_f64();

    let metrics_started = Instant::now();
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    if result.core_nodes.is_empty() {
        notes.push("detected core is empty; metrics skipped".to_string());
    } else {
        let metrics = metrics_report(&g, &result.core_nodes)?;
        rows.push(MethodRow::new("ricci-flow", &metrics));
    }
    let metrics_seconds = metrics_started.elapsed().as_secs_f64();

    let mut run = RunMeta::now();
    run.record("load", load_seconds);
    run.record("flow", flow_seconds);
    run.record("metrics", metrics_seconds);

    let report = RunReport {
        run,
        config: serde_json::json!({
            "command": "detect",
            "input": input_path,
            "iterations": config.iterations,
            "removal_fraction": config.removal_fraction,
            "step_size": config.step_size,
            "alpha": config.alpha,
            "core_budget": config.core_budget,
        }),
        dataset: dataset_stats(&g),
        rows,
        core_result: Some(result.export(&g, &config)),
        notes: (!notes.is_empty()).then_some(notes),
    };
    if let Some(nodes_out) = args.nodes_out.as_deref().or(file.nodes_out.as_deref()) {
        std::fs::write(nodes_out, result.node_list_text(&g))?;
    }
    write_or_print(args.output.as_deref().or(file.output.as_deref()), &report.to_json_pretty())?;
    Ok(ExitCode::SUCCESS)
}

fn baseline_methods(selector: &str) -> Result<Vec<CentralityMethod>, Error> {
    if selector == "all" {
        Ok(vec![
            CentralityMethod::Degree,
            CentralityMethod::Betweenness,
            CentralityMethod::Closeness,
            CentralityMethod::pagerank_default(),
        ])
    } else {
        Ok(vec![CentralityMethod::parse(selector)?])
    }
}

fn cmd_baseline(args: BaselineArgs, file: &FileConfig) -> Result<ExitCode, Error> {
    let (g, input_path) = require_input(args.input.clone(), file, args.default_weight)?;
    let size = match args.size.or(file.size) {
        Some(k) => k,
        None => {
            let report_path = args
                .from_report
                .clone()
                .or_else(|| file.from_report.clone())
                .ok_or_else(|| Error::Config("provide --size or --from-report".into()))?;
            core_size_from_report(&report_path)?
        }
    };
    let selector = args.method.clone().or_else(|| file.method.clone()).unwrap_or_else(|| "all".into());
    let methods = baseline_methods(&selector)?;

    let mut run = RunMeta::now();
    let mut rows = Vec::new();
    for method in methods {
        let started = Instant::now();
        let scores = centrality(&g, method)?;
        let group = connected_top_k(&g, &scores, size)?;
        let metrics = metrics_report(&g, &group)?;
        rows.push(MethodRow::new(method.name(), &metrics));
        run.record(method.name(), started.elapsed().as_secs_f64());
    }

    let report = RunReport {
        run,
        config: serde_json::json!({
            "command": "baseline",
            "input": input_path,
            "method": selector,
            "size": size,
        }),
        dataset: dataset_stats(&g),
        rows,
        core_result: None,
        notes: None,
    };
    write_or_print(args.output.as_deref().or(file.output.as_deref()), &report.to_json_pretty())?;
    Ok(ExitCode::SUCCESS)
}

fn core_size_from_report(path: &Path) -> Result<usize, Error> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Config(format!("report file: {e}")))?;
    value
        .pointer("/core_result/core_nodes")
        .and_then(|v| v.as_array())
        .map(|a| a.len())
        .ok_or_else(|| Error::Config("report lacks core_result.core_nodes".into()))
}

fn cmd_metrics(args: MetricsArgs, file: &FileConfig) -> Result<ExitCode, Error> {
    let (g, _) = require_input(args.input.clone(), file, args.default_weight)?;
    let core_file = args
        .core_file
        .clone()
        .or_else(|| file.core_file.clone())
        .ok_or_else(|| Error::Config("--core-file is required".into()))?;
    let text = std::fs::read_to_string(&core_file)?;
    let mut core = BTreeSet::new();
    for (lineno, line) in text.lines().enumerate() {
        let label = line.trim();
        if label.is_empty() {
            continue;
        }
        let node = g.node_by_label(label).ok_or_else(|| Error::Parse {
            line: lineno + 1,
            msg: format!("unknown node label '{label}'"),
        })?;
        core.insert(node);
    }
    let metrics = metrics_report(&g, &core)?;
    let json = serde_json::to_string_pretty(&metrics).expect("metrics serialize") + "\n";
    write_or_print(args.output.as_deref().or(file.output.as_deref()), &json)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_flow_trace(args: FlowTraceArgs, file: &FileConfig) -> Result<ExitCode, Error> {
    let (g, _) = require_input(args.input.clone(), file, args.default_weight)?;
    let variant = FlowVariant::parse(
        args.variant
            .as_deref()
            .or(file.variant.as_deref())
            .unwrap_or("rho-driven"),
    )?;
    let curvature = parse_curvature(
        args.curvature.as_deref().or(file.curvature.as_deref()),
        args.alpha.or(file.alpha),
    )?;
    let mut config = FlowConfig::new(
        variant,
        curvature,
        args.step.or(file.step).unwrap_or(0.1),
        args.iters.or(file.iters).unwrap_or(1),
    )
    .with_envelope_check(args.envelope_check || file.envelope_check.unwrap_or(false));
    if let Some(theta) = args.theta.or(file.theta) {
        config = config.with_surgery(theta);
    }
    let trajectory = run_flow(&g, &config)?;
    let csv = trajectory_csv(&trajectory);
    write_or_print(args.output.as_deref().or(file.output.as_deref()), &csv)?;
    if !trajectory.envelope_ok() {
        eprintln!("envelope violation detected");
        return Ok(ExitCode::from(EXIT_SUITE));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_curvature(args: CurvatureArgs, file: &FileConfig) -> Result<ExitCode, Error> {
    let (g, _) = require_input(args.input.clone(), file, args.default_weight)?;
    let kind = parse_curvature(
        args.curvature.as_deref().or(file.curvature.as_deref()),
        args.alpha.or(file.alpha),
    )?;
    let field = curvature_field(&g, kind, 0)?;
    let mut csv = String::from("edge_id,u_label,v_label,weight,rho,kappa\n");
    for c in field.entries() {
        let (u, v) = g.endpoints(c.edge);
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            c.edge,
            g.label(u),
            g.label(v),
            g.weight(c.edge),
            c.rho,
            c.kappa
        ));
    }
    write_or_print(args.output.as_deref().or(file.output.as_deref()), &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_bounds(args: VerifyBoundsArgs, file: &FileConfig) -> Result<ExitCode, Error> {
    if args.budget || file.budget.unwrap_or(false) {
        let eps = args.eps.or(file.eps).ok_or_else(|| Error::Config("--eps is required".into()))?;
        let threshold = args
            .threshold
            .or(file.threshold)
            .ok_or_else(|| Error::Config("--threshold is required".into()))?;
        let s = args.s.or(file.s).ok_or_else(|| Error::Config("--s is required".into()))?;
        let m = args.m.or(file.m).ok_or_else(|| Error::Config("--m is required".into()))?;
        let w0 = vec![1.0; m];
        let (under, over) = iteration_budget(eps, threshold, s, m, &w0)?;
        println!("({under}, {over})");
        return Ok(ExitCode::SUCCESS);
    }

    let seed = args.seed.or(file.seed).unwrap_or(DEFAULT_SUITE_SEED);
    let graphs = args.graphs.or(file.graphs).unwrap_or(DEFAULT_SUITE_GRAPHS);
    let iterations = args.iters.or(file.iters).unwrap_or(DEFAULT_SUITE_ITERATIONS);
    let theta = args.theta.or(file.theta).unwrap_or(DEFAULT_SUITE_THETA);
    let variant_filter = match args.variant.as_deref().or(file.variant.as_deref()) {
        Some(name) => Some(FlowVariant::parse(name)?),
        None => None,
    };
    let curvature_filter = match args.curvature.as_deref().or(file.curvature.as_deref()) {
        Some("ollivier") => Some(false),
        Some("lly") | Some("lin-lu-yau") => Some(true),
        Some(other) => return Err(Error::Config(format!("unknown curvature kind '{other}'"))),
        None => None,
    };

    let mut all_runs = Vec::new();
    let mut failures = 0usize;
    for row in suite_rows(theta) {
        if variant_filter.map(|v| v != row.variant).unwrap_or(false) {
            continue;
        }
        if curvature_filter.map(|l| l != row.lly).unwrap_or(false) {
            continue;
        }
        let runs = run_suite_row(row, seed, graphs, iterations)?;
        let bad: Vec<&riccikit::ensemble::EnvelopeRun> = runs.iter().filter(|r| !r.ok()).collect();
        let status = if bad.is_empty() { "pass" } else { "FAIL" };
        println!(
            "{:<16} {:<11} graphs={:<3} violations={:<3} step_errors={:<2} {}",
            row.variant.name(),
            if row.lly { "lin-lu-yau" } else { "ollivier" },
            runs.len(),
            runs.iter().map(|r| r.violations).sum::<usize>(),
            runs.iter().map(|r| r.step_errors).sum::<usize>(),
            status
        );
        for r in bad {
            failures += 1;
            eprintln!(
                "  violation: variant={} curvature={} seed={} graph={} error={:?}",
                r.variant, r.curvature, seed, r.graph_index, r.error
            );
        }
        all_runs.extend(runs);
    }
    if let Some(path) = args.output.as_deref().or(file.output.as_deref()) {
        std::fs::write(path, suite_csv(&all_runs))?;
    }
    if failures > 0 {
        return Ok(ExitCode::from(EXIT_SUITE));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reproduce(args: ReproduceArgs, file: &FileConfig) -> Result<ExitCode, Error> {
    let selector = args
        .dataset
        .clone()
        .or_else(|| file.dataset.clone())
        .unwrap_or_else(|| "all".into());
    let data_dir = args
        .data_dir
        .clone()
        .or_else(|| file.data_dir.clone())
        .unwrap_or_else(|| PathBuf::from("data"));
    let names: Vec<&str> = if selector == "all" {
        vec!["cora", "citeseer", "bio-ce-ht"]
    } else {
        vec![selector.as_str()]
    };

    let mut out = String::new();
    for name in names {
        let reference = reference_dataset(name)
            .ok_or_else(|| Error::Config(format!("unknown dataset '{name}'")))?;
        let path = data_dir.join(reference.file);
        if !path.exists() {
            return Err(Error::Config(format!(
                "dataset file {} not found; see README for acquisition instructions",
                path.display()
            )));
        }
        let raw = load_edge_list(&path, 1.0)?;
        let g = largest_connected_component(&raw)?;
        let stats = dataset_stats(&g);
        out.push_str(&format!(
            "[{name}] nodes={} (expected {}) edges={} (expected {}) avg_degree={:.2} density={:.3} diameter={:?} (expected {})\n",
            stats.nodes,
            reference.nodes,
            stats.edges,
            reference.edges,
            stats.avg_degree,
            stats.density,
            stats.diameter,
            reference.diameter,
        ));
        if stats.nodes != reference.nodes || stats.edges != reference.edges {
            out.push_str("  note: size differs from the reference expectations\n");
        }

        let config = CoreConfig {
            iterations: reference.iterations,
            removal_fraction: reference.removal_fraction,
            step_size: reference.step_size,
            alpha: reference.alpha,
            core_budget: None,
        };
        let started = Instant::now();
        let result = detect_core(&g, &config)?;
        let metrics = metrics_report(&g, &result.core_nodes)?;
        out.push_str(&format!(
            "  ricci-flow: core_nodes={} core_edges={} r_d={:.4} r_s={} ({:.1}s)\n",
            metrics.core_nodes,
            metrics.core_edges,
            metrics.r_d,
            metrics
                .r_s
                .map(|v| format!("{v:.4}"))
                .unwrap_or_else(|| "invalid".into()),
            started.elapsed().as_secs_f64(),
        ));
        let k = metrics.core_nodes;
        for method in baseline_methods("all")? {
            let scores = centrality(&g, method)?;
            let group = connected_top_k(&g, &scores, k)?;
            let m = metrics_report(&g, &group)?;
            out.push_str(&format!(
                "  {}: core_nodes={} core_edges={} r_d={:.4} r_s={}\n",
                method.name(),
                m.core_nodes,
                m.core_edges,
                m.r_d,
                m.r_s
                    .map(|v| format!("{v:.4}"))
                    .unwrap_or_else(|| "invalid".into()),
            ));
        }
        out.push_str("  reference rows:\n");
        for row in reference.rows {
            out.push_str(&format!(
                "    {}: core_nodes={} core_edges={} r_d={:.2} r_s={:.2}\n",
                row.method, row.core_nodes, row.core_edges, row.r_d, row.r_s
            ));
        }
    }
    write_or_print(args.output.as_deref().or(file.output.as_deref()), &out)?;
    Ok(ExitCode::SUCCESS)
}
