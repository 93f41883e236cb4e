//! Seeded random graph generation and the theorem-envelope property suite.
//!
//! The suite drives every (variant, curvature) pair over a deterministic
//! ensemble of small connected graphs and checks that all live weights stay
//! inside their per-iteration envelopes. Both the CLI `verify-bounds`
//! subcommand and the acceptance tests run through this module so they
//! exercise the exact same ensemble.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curvature::CurvatureKind;
use crate::error::Result;
use crate::flow::{run_flow, step_size_bound, FlowConfig, FlowVariant};
use crate::graph::{NodeId, WeightedGraph};

pub const DEFAULT_SUITE_SEED: u64 = 7;
pub const DEFAULT_SUITE_GRAPHS: usize = 50;
pub const DEFAULT_SUITE_ITERATIONS: u32 = 30;
pub const DEFAULT_SUITE_THETA: f64 = 4.0;

/// Connected graph with 3..=max_n nodes: a random spanning tree plus a few
/// extra edges, weights uniform in [0.5, 2].
pub fn random_connected_graph(rng: &mut ChaCha8Rng, max_n: usize) -> WeightedGraph {
    let n = rng.gen_range(3..=max_n.max(3));
    let mut g = WeightedGraph::from_edges(n, &[]).expect("empty graph");
    let weight = |rng: &mut ChaCha8Rng| rng.gen_range(0.5..=2.0);
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        let w = weight(rng);
        g.add_edge(NodeId(parent as u32), NodeId(v as u32), w)
            .expect("tree edge");
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let (u, v) = (NodeId(u as u32), NodeId(v as u32));
        if g.find_edge(u, v).is_none() {
            let w = weight(rng);
            g.add_edge(u, v, w).expect("extra edge");
        }
    }
    g
}

/// One (variant, curvature) row of the envelope suite. Surgery applies to
/// the rows whose bounds are stated up to theta-surgeries.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SuiteRow {
    pub variant: FlowVariant,
    pub lly: bool,
    pub theta: Option<f64>,
}

pub fn suite_rows(theta: f64) -> Vec<SuiteRow> {
    let mut rows = Vec::with_capacity(10);
    for variant in FlowVariant::ALL {
        let needs_surgery = matches!(
            variant,
            FlowVariant::WeightDriven | FlowVariant::Normalized | FlowVariant::NiReset
        );
        for lly in [false, true] {
            rows.push(SuiteRow {
                variant,
                lly,
                theta: needs_surgery.then_some(theta),
            });
        }
    }
    rows
}

#[derive(Debug, Clone, Serialize)]
pub struct EnvelopeRun {
    pub variant: &'static str,
    pub curvature: &'static str,
    pub graph_index: usize,
    pub nodes: usize,
    pub edges: usize,
    pub step_size: f64,
    pub theta: Option<f64>,
    pub iterations_applied: u32,
    pub min_lower_slack: f64,
    pub min_upper_slack: f64,
    /// Largest per-step relative drift of the total weight (normalized
    /// variant only; conserved flows must stay at 1e-9 or below).
    pub max_conservation_drift: f64,
    pub violations: usize,
    /// Count of positivity-guard failures (always expected to be 0 when the
    /// step size is inside its validity range).
    pub step_errors: usize,
    pub error: Option<String>,
}

impl EnvelopeRun {
    pub fn ok(&self) -> bool {
        self.violations == 0 && self.step_errors == 0 && self.error.is_none()
    }
}

/// Runs `graphs` random graphs for one suite row with s at half the
/// validity bound.
pub fn run_suite_row(
    row: SuiteRow,
    seed: u64,
    graphs: usize,
    iterations: u32,
) -> Result<Vec<EnvelopeRun>> {
    let curvature_name = if row.lly { "lin-lu-yau" } else { "ollivier" };
    let mut out = Vec::with_capacity(graphs);
    for index in 0..graphs {
        // one seed stream per (row, graph) so rows are independently
        // reproducible
        let mut rng = ChaCha8Rng::seed_from_u64(
            seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
                ^ (row_tag(&row) as u64) << 48,
        );
        let g = random_connected_graph(&mut rng, 12);
        let m = g.live_edge_count();
        let curvature = if row.lly {
            CurvatureKind::LinLuYau
        } else {
            CurvatureKind::Ollivier { alpha: 0.1 }
        };
        let bound = step_size_bound(row.variant, curvature, m, row.theta)?;
        let s = bound / 2.0;
        let mut config = FlowConfig::new(row.variant, curvature, s, iterations)
            .with_envelope_check(true);
        if let Some(theta) = row.theta {
            config = config.with_surgery(theta);
        }

        let mut run = EnvelopeRun {
            variant: row.variant.name(),
            curvature: curvature_name,
            graph_index: index,
            nodes: g.node_count(),
            edges: m,
            step_size: s,
            theta: row.theta,
            iterations_applied: 0,
            min_lower_slack: f64::INFINITY,
            min_upper_slack: f64::INFINITY,
            max_conservation_drift: 0.0,
            violations: 0,
            step_errors: 0,
            error: None,
        };
        match run_flow(&g, &config) {
            Ok(trajectory) => {
                run.iterations_applied = trajectory.iterations_applied();
                for step in &trajectory.steps {
                    if let Some(v) = &step.envelope {
                        run.min_lower_slack = run.min_lower_slack.min(v.min_lower_slack);
                        run.min_upper_slack = run.min_upper_slack.min(v.min_upper_slack);
                        run.violations += v.violations.len();
                    }
                    if row.variant == FlowVariant::Normalized {
                        let drift = (step.total_weight_after_step - step.total_weight_before)
                            .abs()
                            / step.total_weight_before;
                        run.max_conservation_drift = run.max_conservation_drift.max(drift);
                    }
                }
            }
            Err(err) => {
                if matches!(
                    err,
                    crate::error::Error::AtIteration { .. } | crate::error::Error::StepTooLarge { .. }
                ) {
                    run.step_errors += 1;
                }
                run.error = Some(err.to_string());
            }
        }
        out.push(run);
    }
    Ok(out)
}

fn row_tag(row: &SuiteRow) -> u16 {
    let v = match row.variant {
        FlowVariant::RhoDriven => 0u16,
        FlowVariant::QuasiNormalized => 1,
        FlowVariant::WeightDriven => 2,
        FlowVariant::Normalized => 3,
        FlowVariant::NiReset => 4,
    };
    v * 2 + row.lly as u16
}

pub fn suite_csv(runs: &[EnvelopeRun]) -> String {
    let mut out = String::from(
        "variant,curvature,graph_index,nodes,edges,step_size,theta,iterations,min_lower_slack,min_upper_slack,max_conservation_drift,violations,step_errors,error\n",
    );
    for r in runs {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.variant,
            r.curvature,
            r.graph_index,
            r.nodes,
            r.edges,
            r.step_size,
            r.theta.map(|t| t.to_string()).unwrap_or_default(),
            r.iterations_applied,
            r.min_lower_slack,
            r.min_upper_slack,
            r.max_conservation_drift,
            r.violations,
            r.step_errors,
            r.error.as_deref().unwrap_or(""),
        ));
    }
    out
}
