//! Discrete Ricci curvature flow variants, theta-surgery, weight envelopes,
//! and the iteration-budget calculator.
//!
//! All five update rules apply simultaneously to every live edge (the
//! right-hand side is evaluated entirely on the pre-step snapshot). Surgery
//! likewise evaluates every ratio on the pre-surgery snapshot and removes
//! all violators in one batch, which keeps trajectories order-independent.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::curvature::{curvature_field, CurvatureField, CurvatureKind};
use crate::error::{Error, Result};
use crate::graph::{DijkstraWorkspace, EdgeId, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlowVariant {
    /// w' = w - s * kappa * rho
    RhoDriven,
    /// w' = w + s * (-kappa + sum(kappa*rho)/sum(w)) * rho
    QuasiNormalized,
    /// w' = w - s * kappa * w
    WeightDriven,
    /// w' = w + s * (-kappa + sum(kappa*w)/sum(w)) * w; conserves sum(w)
    Normalized,
    /// w' = rho - s * kappa * rho
    NiReset,
}

impl FlowVariant {
    pub const ALL: [FlowVariant; 5] = [
        FlowVariant::RhoDriven,
        FlowVariant::QuasiNormalized,
        FlowVariant::WeightDriven,
        FlowVariant::Normalized,
        FlowVariant::NiReset,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FlowVariant::RhoDriven => "rho-driven",
            FlowVariant::QuasiNormalized => "quasi-normalized",
            FlowVariant::WeightDriven => "weight-driven",
            FlowVariant::Normalized => "normalized",
            FlowVariant::NiReset => "ni-reset",
        }
    }

    pub fn parse(name: &str) -> Result<FlowVariant> {
        match name {
            "rho-driven" => Ok(FlowVariant::RhoDriven),
            "quasi-normalized" => Ok(FlowVariant::QuasiNormalized),
            "weight-driven" => Ok(FlowVariant::WeightDriven),
            "normalized" => Ok(FlowVariant::Normalized),
            "ni-reset" => Ok(FlowVariant::NiReset),
            other => Err(Error::Config(format!("unknown flow variant '{other}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FlowConfig {
    pub variant: FlowVariant,
    pub step_size: f64,
    pub curvature: CurvatureKind,
    pub iterations: u32,
    /// Some(theta) enables a surgery pass after every update.
    pub surgery_theta: Option<f64>,
    pub envelope_check: bool,
    pub positivity_guard: bool,
}

impl FlowConfig {
    pub fn new(variant: FlowVariant, curvature: CurvatureKind, step_size: f64, iterations: u32) -> Self {
        Self {
            variant,
            step_size,
            curvature,
            iterations,
            surgery_theta: None,
            envelope_check: false,
            positivity_guard: true,
        }
    }

    pub fn with_surgery(mut self, theta: f64) -> Self {
        self.surgery_theta = Some(theta);
        self
    }

    pub fn with_envelope_check(mut self, check: bool) -> Self {
        self.envelope_check = check;
        self
    }
}

/// Upper end of the open step-size validity interval (0, bound) for the
/// given variant and curvature kind. `theta` is required for the normalized
/// variant, whose bound depends on it.
pub fn step_size_bound(
    variant: FlowVariant,
    curvature: CurvatureKind,
    m: usize,
    theta: Option<f64>,
) -> Result<f64> {
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = m as f64;
    let lly = curvature.is_lly();
    let bound = match variant {
        FlowVariant::RhoDriven | FlowVariant::WeightDriven | FlowVariant::NiReset => {
            if lly {
                0.5
            } else {
                1.0
            }
        }
        FlowVariant::QuasiNormalized => {
            if lly {
                1.0 / (2.0 * m + 2.0)
            } else {
                1.0 / (m + 1.0)
            }
        }
        FlowVariant::Normalized => {
            let theta = theta.ok_or_else(|| {
                Error::Config("normalized variant requires theta for its step-size bound".into())
            })?;
            if theta <= 1.0 {
                return Err(Error::Config(format!("theta must exceed 1, got {theta}")));
            }
            if lly {
                1.0 / (m * theta + 2.0)
            } else {
                1.0 / (m * theta)
            }
        }
    };
    Ok(bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UpperScale {
    PerEdgeInitial,
    SumOfInitial,
}

/// Per-iteration weight bounds: lower_factor^j * w0_e below, and
/// upper_factor^j times either w0_e or the initial total above.
#[derive(Debug, Clone, Serialize)]
pub struct BoundEnvelope {
    pub lower_factor: f64,
    pub upper_factor: f64,
    pub upper_scale: UpperScale,
    pub baseline_sum: f64,
    /// Set for rows whose per-edge upper form is unsupported and the
    /// sum-of-initial-weights scale is used instead.
    pub note: Option<&'static str>,
}

impl BoundEnvelope {
    pub fn lower(&self, j: u32, w0_e: f64) -> f64 {
        self.lower_factor.powi(j as i32) * w0_e
    }

    pub fn upper(&self, j: u32, w0_e: f64) -> f64 {
        let scale = match self.upper_scale {
            UpperScale::PerEdgeInitial => w0_e,
            UpperScale::SumOfInitial => self.baseline_sum,
        };
        self.upper_factor.powi(j as i32) * scale
    }
}

/// Envelope for the configured (variant, curvature) pair with `m0` initial
/// live edges. `m0` stays fixed even when surgery later removes edges.
pub fn envelope(config: &FlowConfig, m0: usize, w0: &[f64]) -> Result<BoundEnvelope> {
    let bound = step_size_bound(config.variant, config.curvature, m0, config.surgery_theta)?;
    let s = config.step_size;
    if !(s > 0.0 && s < bound) {
        return Err(Error::Config(format!(
            "step size {s} outside validity range (0, {bound}) for {} with {}",
            config.variant.name(),
            config.curvature
        )));
    }
    let m = m0 as f64;
    let baseline_sum: f64 = w0.iter().sum();
    let lly = config.curvature.is_lly();
    let theta = config.surgery_theta;
    let needs_theta = || -> Result<f64> {
        theta.ok_or_else(|| {
            Error::Config(format!(
                "{} envelope requires a surgery theta",
                config.variant.name()
            ))
        })
    };
    let (lower_factor, upper_factor, note) = match (config.variant, lly) {
        (FlowVariant::RhoDriven, false) => (1.0 - s, 1.0 + m * s, None),
        (FlowVariant::RhoDriven, true) => (1.0 - 2.0 * s, 1.0 + 2.0 * m * s, None),
        (FlowVariant::QuasiNormalized, false) => (1.0 - (m + 1.0) * s, 1.0 + m * s, None),
        (FlowVariant::QuasiNormalized, true) => {
            (1.0 - 2.0 * (m + 1.0) * s, 1.0 + 2.0 * (m + 1.0) * s, None)
        }
        (FlowVariant::WeightDriven, false) => {
            let t = needs_theta()?;
            (1.0 - s, 1.0 - s + m * t * s, None)
        }
        (FlowVariant::WeightDriven, true) => {
            let t = needs_theta()?;
            (1.0 - 2.0 * s, 1.0 + 2.0 * m * t * s, None)
        }
        (FlowVariant::Normalized, false) => {
            let t = needs_theta()?;
            (1.0 - m * t * s, 1.0, None)
        }
        (FlowVariant::Normalized, true) => {
            let t = needs_theta()?;
            (1.0 - (m * t + 2.0) * s, 1.0, None)
        }
        (FlowVariant::NiReset, false) => {
            let t = needs_theta()?;
            (
                (1.0 - s) / t,
                1.0 + m * s,
                Some("upper bound uses the sum-of-initial-weights scale"),
            )
        }
        (FlowVariant::NiReset, true) => {
            let t = needs_theta()?;
            (
                (1.0 - 2.0 * s) / t,
                1.0 + 2.0 * m * s,
                Some("upper bound uses the sum-of-initial-weights scale"),
            )
        }
    };
    Ok(BoundEnvelope {
        lower_factor,
        upper_factor,
        upper_scale: UpperScale::SumOfInitial,
        baseline_sum,
        note,
    })
}

/// One simultaneous update of all live edges by the selected rule. The
/// curvature field must come from the graph's current snapshot.
pub fn flow_step(g: &mut WeightedGraph, field: &CurvatureField, config: &FlowConfig) -> Result<()> {
    let live: Vec<EdgeId> = g.live_edges().collect();
    let s = config.step_size;

    let mut sum_w = 0.0;
    let mut sum_kr = 0.0;
    let mut sum_kw = 0.0;
    for &e in &live {
        let c = field
            .get(e)
            .ok_or_else(|| Error::Config(format!("curvature field misses live edge {e}")))?;
        let w = g.weight(e);
        sum_w += w;
        sum_kr += c.kappa * c.rho;
        sum_kw += c.kappa * w;
    }

    let mut updates = Vec::with_capacity(live.len());
    for &e in &live {
        let c = field.get(e).expect("checked above");
        let w = g.weight(e);
        let next = match config.variant {
            FlowVariant::RhoDriven => w - s * c.kappa * c.rho,
            FlowVariant::QuasiNormalized => w + s * (-c.kappa + sum_kr / sum_w) * c.rho,
            FlowVariant::WeightDriven => w - s * c.kappa * w,
            FlowVariant::Normalized => w + s * (-c.kappa + sum_kw / sum_w) * w,
            FlowVariant::NiReset => c.rho - s * c.kappa * c.rho,
        };
        updates.push((e, next));
    }

    if config.positivity_guard {
        for &(e, next) in &updates {
            if !(next.is_finite() && next > 0.0) {
                return Err(Error::StepTooLarge { edge: e.0, weight: next });
            }
        }
    }
    for (e, next) in updates {
        g.set_weight(e, next)?;
    }
    Ok(())
}

/// Removes every live edge whose weight exceeds theta times the endpoint
/// distance, all ratios evaluated against the pre-surgery snapshot. Returns
/// the removed ids in ascending order.
pub fn theta_surgery(g: &mut WeightedGraph, theta: f64) -> Result<Vec<EdgeId>> {
    if !(theta > 1.0) {
        return Err(Error::Config(format!("theta must exceed 1, got {theta}")));
    }
    let mut ws = DijkstraWorkspace::new(g.node_count());
    let mut violators = Vec::new();
    for e in g.live_edges().collect::<Vec<_>>() {
        let (x, y) = g.endpoints(e);
        let rho = ws.distance(g, x, y);
        if g.weight(e) / rho > theta {
            violators.push(e);
        }
    }
    for &e in &violators {
        g.remove_edge(e)?;
    }
    Ok(violators)
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeTraceRow {
    pub edge: EdgeId,
    /// Weight after the update (for surgery removals: the value the edge
    /// held when it was cut).
    pub weight: f64,
    pub kappa: f64,
    pub rho: f64,
    pub removed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnvelopeVerdict {
    pub ok: bool,
    /// Smallest w - lower over live edges this iteration.
    pub min_lower_slack: f64,
    /// Smallest upper - w over live edges this iteration.
    pub min_upper_slack: f64,
    pub violations: Vec<EdgeId>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IterationRecord {
    pub iteration: u32,
    pub rows: Vec<EdgeTraceRow>,
    pub kappa_min: f64,
    pub kappa_max: f64,
    pub removed: Vec<EdgeId>,
    pub total_weight_before: f64,
    /// Total weight after the update but before any surgery.
    pub total_weight_after_step: f64,
    pub total_weight_after_surgery: f64,
    pub envelope: Option<EnvelopeVerdict>,
    /// New constant-upper baseline when surgery re-based it.
    pub rebased_baseline: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct FlowTrajectory {
    pub initial_weights: Vec<(EdgeId, f64)>,
    pub steps: Vec<IterationRecord>,
    pub terminal: WeightedGraph,
    pub envelope: Option<BoundEnvelope>,
}

impl FlowTrajectory {
    pub fn iterations_applied(&self) -> u32 {
        self.steps.len() as u32
    }

    pub fn envelope_ok(&self) -> bool {
        self.steps
            .iter()
            .all(|s| s.envelope.as_ref().map(|v| v.ok).unwrap_or(true))
    }
}

/// Relative slack allowed when checking envelope inequalities, to absorb
/// floating-point rounding of the trajectory and the bound factors.
const ENVELOPE_REL_TOL: f64 = 1e-9;

/// Runs `iterations` rounds of curvature -> update -> optional surgery ->
/// optional envelope check. Stops early only if surgery removes the last
/// live edge.
pub fn run_flow(g: &WeightedGraph, config: &FlowConfig) -> Result<FlowTrajectory> {
    if !(config.step_size > 0.0 && config.step_size.is_finite()) {
        return Err(Error::Config(format!(
            "step size must be positive, got {}",
            config.step_size
        )));
    }
    if let CurvatureKind::Ollivier { alpha } = config.curvature {
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::Config(format!("alpha must lie in [0, 1), got {alpha}")));
        }
    }
    if let Some(theta) = config.surgery_theta {
        if !(theta > 1.0) {
            return Err(Error::Config(format!("theta must exceed 1, got {theta}")));
        }
    }

    let mut working = g.clone();
    let initial_weights = working.live_weights();
    let m0 = initial_weights.len();
    let mut w0_by_edge: BTreeMap<EdgeId, f64> = initial_weights.iter().copied().collect();

    let mut env = None;
    if config.envelope_check {
        if m0 == 0 {
            return Err(Error::EmptyGraph);
        }
        let w0: Vec<f64> = initial_weights.iter().map(|&(_, w)| w).collect();
        env = Some(envelope(config, m0, &w0)?);
    }

    let mut steps = Vec::with_capacity(config.iterations as usize);
    for j in 1..=config.iterations {
        if working.live_edge_count() == 0 {
            break;
        }
        let field = curvature_field(&working, config.curvature, j - 1)
            .map_err(|e| e.at_iteration(j))?;
        let total_before = working.total_weight();
        flow_step(&mut working, &field, config).map_err(|e| e.at_iteration(j))?;
        let total_after_step = working.total_weight();

        let removed = match config.surgery_theta {
            Some(theta) => theta_surgery(&mut working, theta).map_err(|e| e.at_iteration(j))?,
            None => Vec::new(),
        };
        let total_after_surgery = working.total_weight();

        let mut rebased = None;
        if let Some(env) = env.as_mut() {
            if config.variant == FlowVariant::Normalized
                && !removed.is_empty()
                && env.upper_factor == 1.0
            {
                env.baseline_sum = total_after_surgery;
                rebased = Some(total_after_surgery);
            }
        }

        let verdict = env.as_ref().map(|env| {
            let mut ok = true;
            let mut min_lower = f64::INFINITY;
            let mut min_upper = f64::INFINITY;
            let mut violations = Vec::new();
            for e in working.live_edges() {
                let w = working.weight(e);
                let w0_e = w0_by_edge[&e];
                let lo = env.lower(j, w0_e);
                let hi = env.upper(j, w0_e);
                let tol = ENVELOPE_REL_TOL * hi.abs().max(1.0);
                min_lower = min_lower.min(w - lo);
                min_upper = min_upper.min(hi - w);
                if w < lo - tol || w > hi + tol {
                    ok = false;
                    violations.push(e);
                }
            }
            EnvelopeVerdict { ok, min_lower_slack: min_lower, min_upper_slack: min_upper, violations }
        });

        let (kappa_min, kappa_max) = field.kappa_range().unwrap_or((f64::NAN, f64::NAN));
        let mut rows = Vec::with_capacity(field.len());
        for c in field.entries() {
            // tombstoned records keep their post-step weight, so this also
            // reports the value a removed edge held when it was cut
            rows.push(EdgeTraceRow {
                edge: c.edge,
                weight: working.weight(c.edge),
                kappa: c.kappa,
                rho: c.rho,
                removed: removed.contains(&c.edge),
            });
        }
        // drop removed edges from the w0 ledger so later verdicts skip them
        for e in &removed {
            w0_by_edge.remove(e);
        }
        steps.push(IterationRecord {
            iteration: j,
            rows,
            kappa_min,
            kappa_max,
            removed,
            total_weight_before: total_before,
            total_weight_after_step: total_after_step,
            total_weight_after_surgery: total_after_surgery,
            envelope: verdict,
            rebased_baseline: rebased,
        });
    }

    Ok(FlowTrajectory {
        initial_weights,
        steps,
        terminal: working,
        envelope: env,
    })
}

/// Trajectory trace as CSV: one row per (iteration, stepped edge), or the
/// initial weights when no step was applied.
pub fn trajectory_csv(trajectory: &FlowTrajectory) -> String {
    let g = &trajectory.terminal;
    let mut out = String::from("iteration,edge_id,u_label,v_label,weight,kappa,rho,removed_flag\n");
    if trajectory.steps.is_empty() {
        for &(e, w) in &trajectory.initial_weights {
            let (u, v) = g.endpoints(e);
            out.push_str(&format!(
                "0,{},{},{},{},,,false\n",
                e,
                g.label(u),
                g.label(v),
                w
            ));
        }
        return out;
    }
    for step in &trajectory.steps {
        for row in &step.rows {
            let (u, v) = g.endpoints(row.edge);
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                step.iteration,
                row.edge,
                g.label(u),
                g.label(v),
                row.weight,
                row.kappa,
                row.rho,
                row.removed
            ));
        }
    }
    out
}

/// Largest iteration counts for which the closed-form bounds keep every
/// weight at or above `eps0` and at or below `overflow_threshold`.
pub fn iteration_budget(
    eps0: f64,
    overflow_threshold: f64,
    s: f64,
    m: usize,
    w0: &[f64],
) -> Result<(u64, u64)> {
    if w0.is_empty() || m == 0 {
        return Err(Error::EmptyGraph);
    }
    let min_w0 = w0.iter().copied().fold(f64::INFINITY, f64::min);
    let sum_w0: f64 = w0.iter().sum();
    if !(eps0 > 0.0 && eps0 < min_w0) {
        return Err(Error::Domain(format!(
            "eps0 must lie in (0, min w0) = (0, {min_w0}), got {eps0}"
        )));
    }
    if !(overflow_threshold >= sum_w0) {
        return Err(Error::Domain(format!(
            "overflow threshold must be at least sum w0 = {sum_w0}, got {overflow_threshold}"
        )));
    }
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain(format!("step size must lie in (0, 1), got {s}")));
    }
    let under = ((eps0 / min_w0).ln() / (1.0 - s).ln()).floor();
    let over = ((overflow_threshold / sum_w0).ln() / (1.0 + m as f64 * s).ln()).floor();
    Ok((under as u64, over as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NodeId;

    fn star6() -> WeightedGraph {
        let mut g = WeightedGraph::from_edges(7, &[]).unwrap();
        for i in 1..7u32 {
            g.add_edge(NodeId(0), NodeId(i), 1.0).unwrap();
        }
        g
    }

    fn figure2() -> WeightedGraph {
        WeightedGraph::from_edges(
            6,
            &[
                (0, 1, 1.0),
                (1, 2, 1.0),
                (0, 2, 1.0),
                (3, 4, 1.0),
                (4, 5, 1.0),
                (3, 5, 1.0),
                (2, 3, 1.0),
            ],
        )
        .unwrap()
    }

    fn figure4() -> WeightedGraph {
        let mut edges = Vec::new();
        for k in 0..4u32 {
            let (a, b) = (1 + 2 * k, 2 + 2 * k);
            edges.push((0, a, 1.0));
            edges.push((0, b, 1.0));
            edges.push((a, b, 1.0));
        }
        WeightedGraph::from_edges(9, &edges).unwrap()
    }

    #[test]
    fn step_size_bounds() {
        let oll = CurvatureKind::Ollivier { alpha: 0.1 };
        let lly = CurvatureKind::LinLuYau;
        assert_eq!(step_size_bound(FlowVariant::QuasiNormalized, oll, 9, None).unwrap(), 0.1);
        assert_eq!(
            step_size_bound(FlowVariant::Normalized, lly, 10, Some(2.0)).unwrap(),
            1.0 / 22.0
        );
        assert_eq!(step_size_bound(FlowVariant::RhoDriven, oll, 1, None).unwrap(), 1.0);
        assert_eq!(step_size_bound(FlowVariant::RhoDriven, lly, 1, None).unwrap(), 0.5);
        assert_eq!(step_size_bound(FlowVariant::WeightDriven, oll, 5, None).unwrap(), 1.0);
        assert_eq!(step_size_bound(FlowVariant::NiReset, lly, 5, None).unwrap(), 0.5);
        assert_eq!(
            step_size_bound(FlowVariant::QuasiNormalized, lly, 4, None).unwrap(),
            0.1
        );
        assert!(matches!(
            step_size_bound(FlowVariant::RhoDriven, oll, 0, None),
            Err(Error::EmptyGraph)
        ));
        assert!(step_size_bound(FlowVariant::Normalized, oll, 5, None).is_err());
    }

    #[test]
    fn star_one_step_gives_098() {
        let g = star6();
        let config = FlowConfig::new(
            FlowVariant::RhoDriven,
            CurvatureKind::Ollivier { alpha: 0.1 },
            0.1,
            1,
        );
        let traj = run_flow(&g, &config).unwrap();
        for e in traj.terminal.live_edges() {
            assert!((traj.terminal.weight(e) - 0.98).abs() < 1e-9);
        }
    }

    #[test]
    fn figure4_one_step_values() {
        let g = figure4();
        let config = FlowConfig::new(
            FlowVariant::RhoDriven,
            CurvatureKind::Ollivier { alpha: 0.1 },
            0.1,
            1,
        );
        let traj = run_flow(&g, &config).unwrap();
        let t = &traj.terminal;
        for e in t.live_edges() {
            let (u, v) = t.endpoints(e);
            let w = t.weight(e);
            if u == NodeId(0) || v == NodeId(0) {
                assert!((w - 1.00125).abs() < 1e-9, "spoke {w}");
            } else {
                assert!((w - 0.935).abs() < 1e-9, "outer {w}");
            }
        }
    }

    #[test]
    fn k3_one_step_nonlazy() {
        let g = WeightedGraph::from_edges(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let config = FlowConfig::new(
            FlowVariant::RhoDriven,
            CurvatureKind::Ollivier { alpha: 0.0 },
            0.1,
            1,
        );
        let traj = run_flow(&g, &config).unwrap();
        for e in traj.terminal.live_edges() {
            assert!((traj.terminal.weight(e) - 0.95).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_iterations_is_identity() {
        let g = figure2();
        let config = FlowConfig::new(
            FlowVariant::RhoDriven,
            CurvatureKind::Ollivier { alpha: 0.1 },
            0.1,
            0,
        );
        let traj = run_flow(&g, &config).unwrap();
        assert_eq!(traj.iterations_applied(), 0);
        for (e, w) in traj.initial_weights {
            assert_eq!(traj.terminal.weight(e), w);
        }
    }

    #[test]
    fn figure2_bridge_dominates_after_five_steps() {
        let g = figure2();
        let config = FlowConfig::new(
            FlowVariant::RhoDriven,
            CurvatureKind::Ollivier { alpha: 0.1 },
            0.1,
            5,
        );
        let traj = run_flow(&g, &config).unwrap();
        let t = &traj.terminal;
        let bridge = t.find_edge(NodeId(2), NodeId(3)).unwrap();
        let bridge_w = t.weight(bridge);
        assert!(bridge_w > 1.0, "bridge weight {bridge_w}");
        for e in t.live_edges() {
            if e != bridge {
                let w = t.weight(e);
                assert!(w < 1.0, "triangle weight {w}");
                assert!(w < bridge_w);
            }
        }
    }

    #[test]
    fn surgery_removes_detoured_heavy_edge() {
        let mut g =
            WeightedGraph::from_edges(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 5.0)]).unwrap();
        // rho of the heavy edge is 2 via the two-hop detour, ratio 2.5
        let removed = theta_surgery(&mut g.clone(), 3.0).unwrap();
        assert!(removed.is_empty());
        let removed = theta_surgery(&mut g, 2.0).unwrap();
        assert_eq!(removed.len(), 1);
        let (u, v) = g.endpoints(removed[0]);
        assert_eq!((u, v), (NodeId(0), NodeId(2)));
    }

    #[test]
    fn surgery_no_op_when_every_edge_is_geodesic() {
        let mut g = star6();
        let removed = theta_surgery(&mut g, 1.5).unwrap();
        assert!(removed.is_empty());
        assert_eq!(g.live_edge_count(), 6);
    }

    #[test]
    fn surgery_removes_violators_in_one_batch() {
        // two disjoint triangles, each with one heavy detoured edge
        let mut g = WeightedGraph::from_edges(
            6,
            &[
                (0, 1, 1.0),
                (1, 2, 1.0),
                (0, 2, 5.0),
                (3, 4, 1.0),
                (4, 5, 1.0),
                (3, 5, 5.0),
            ],
        )
        .unwrap();
        let removed = theta_surgery(&mut g, 2.0).unwrap();
        assert_eq!(removed.len(), 2);
    }

    #[test]
    fn run_flow_with_surgery_records_removal() {
        // the heavy edge has a two-hop detour of length ~2, ratio ~2.5 > 2
        let g = WeightedGraph::from_edges(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 5.0)]).unwrap();
        let config = FlowConfig::new(
            FlowVariant::WeightDriven,
            CurvatureKind::Ollivier { alpha: 0.1 },
            0.05,
            3,
        )
        .with_surgery(2.0);
        let traj = run_flow(&g, &config).unwrap();
        let heavy = g.find_edge(NodeId(0), NodeId(2)).unwrap();
        assert_eq!(traj.steps[0].removed, vec![heavy]);
        assert!(!traj.terminal.is_live(heavy));
        let row = traj.steps[0]
            .rows
            .iter()
            .find(|r| r.edge == heavy)
            .unwrap();
        assert!(row.removed);
        let csv = trajectory_csv(&traj);
        assert!(csv.lines().any(|l| l.ends_with(",true")), "{csv}");
        // later iterations step only the two survivors
        assert_eq!(traj.steps[2].rows.len(), 2);
    }

    #[test]
    fn envelope_factors_thm_21() {
        let config = FlowConfig::new(
            FlowVariant::RhoDriven,
            CurvatureKind::Ollivier { alpha: 0.1 },
            0.1,
            1,
        );
        let env = envelope(&config, 3, &[1.0, 1.0, 1.0]).unwrap();
        assert!((env.lower_factor - 0.9).abs() < 1e-15);
        assert!((env.upper_factor - 1.3).abs() < 1e-15);
        assert_eq!(env.baseline_sum, 3.0);
        // j = 0 brackets the initial weight
        assert_eq!(env.lower(0, 1.0), 1.0);
        assert!(env.upper(0, 1.0) >= 1.0);
        // j = 2: 0.81 and 1.69 * 3
        assert!((env.lower(2, 1.0) - 0.81).abs() < 1e-12);
        assert!((env.upper(2, 1.0) - 1.69 * 3.0).abs() < 1e-12);
    }

    #[test]
    fn envelope_constant_upper_for_normalized() {
        let mut config = FlowConfig::new(
            FlowVariant::Normalized,
            CurvatureKind::Ollivier { alpha: 0.1 },
            0.01,
            1,
        )
        .with_surgery(4.0);
        let env = envelope(&config, 5, &[1.0; 5]).unwrap();
        assert_eq!(env.upper_factor, 1.0);
        assert_eq!(env.upper(17, 1.0), 5.0);
        config.step_size = 0.2; // above 1/(5*4)
        assert!(envelope(&config, 5, &[1.0; 5]).is_err());
    }

    #[test]
    fn budget_reference_values() {
        let w0 = vec![1.0; 100];
        let (under, over) = iteration_budget(1e-7, 1e7, 0.01, 100, &w0).unwrap();
        assert_eq!((under, over), (1603, 16));
    }

    #[test]
    fn budget_boundary_and_monotonicity() {
        let w0 = vec![1.0; 10];
        let (under, _) = iteration_budget(1.0 - 1e-12, 20.0, 0.1, 10, &w0).unwrap();
        assert_eq!(under, 0);
        let (u1, o1) = iteration_budget(1e-6, 1e6, 0.02, 10, &w0).unwrap();
        let (u2, o2) = iteration_budget(1e-6, 1e6, 0.01, 10, &w0).unwrap();
        assert!(u2 >= u1);
        assert!(o2 >= o1);
        assert!(iteration_budget(2.0, 1e6, 0.01, 10, &w0).is_err());
        assert!(iteration_budget(1e-6, 1.0, 0.01, 10, &w0).is_err());
    }

    #[test]
    fn positivity_guard_names_edge() {
        let g = WeightedGraph::from_edges(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        // kappa = 1/2, rho = 1 at alpha = 0; s = 2.5 drives w to -0.25
        let config = FlowConfig::new(
            FlowVariant::RhoDriven,
            CurvatureKind::Ollivier { alpha: 0.0 },
            2.5,
            1,
        );
        let err = run_flow(&g, &config).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("iteration 1"), "{text}");
        assert!(text.contains("non-positive weight"), "{text}");
    }

    #[test]
    fn normalized_flow_conserves_total_weight() {
        let g = figure2();
        let config = FlowConfig::new(
            FlowVariant::Normalized,
            CurvatureKind::Ollivier { alpha: 0.1 },
            0.01,
            10,
        );
        let traj = run_flow(&g, &config).unwrap();
        for step in &traj.steps {
            let rel = (step.total_weight_after_step - step.total_weight_before).abs()
                / step.total_weight_before;
            assert!(rel <= 1e-9, "relative drift {rel}");
        }
    }

    #[test]
    fn trace_csv_shape() {
        let g = star6();
        let config = FlowConfig::new(
            FlowVariant::RhoDriven,
            CurvatureKind::Ollivier { alpha: 0.1 },
            0.1,
            1,
        );
        let traj = run_flow(&g, &config).unwrap();
        let csv = trajectory_csv(&traj);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 7, "{csv}");
        assert!(lines[0].starts_with("iteration,edge_id"));
        assert!(lines[1..].iter().all(|l| l.contains("0.98")));

        let config0 = FlowConfig::new(
            FlowVariant::RhoDriven,
            CurvatureKind::Ollivier { alpha: 0.1 },
            0.1,
            0,
        );
        let traj0 = run_flow(&g, &config0).unwrap();
        let csv0 = trajectory_csv(&traj0);
        assert_eq!(csv0.lines().count(), 7);
        assert!(csv0.lines().nth(1).unwrap().starts_with("0,"));
    }
}
