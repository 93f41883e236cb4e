//! Core-subgraph detection: flow evolution, top-weight edge removal,
//! isolated-node backfill by original degree, and largest-component
//! extraction from the original graph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::curvature::CurvatureKind;
use crate::error::{Error, Result};
use crate::flow::{run_flow, FlowConfig, FlowVariant};
use crate::graph::{
    connected_components, induced_subgraph_with_map, EdgeId, NodeId, WeightedGraph,
};

#[derive(Debug, Clone, Serialize)]
pub struct CoreConfig {
    pub iterations: u32,
    /// Fraction of edges removed after the flow, in [0, 1].
    pub removal_fraction: f64,
    pub step_size: f64,
    pub alpha: f64,
    /// Target core size; defaults to floor(n / 2).
    pub core_budget: Option<usize>,
}

impl CoreConfig {
    pub fn new(iterations: u32, removal_fraction: f64, step_size: f64, alpha: f64) -> Self {
        Self {
            iterations,
            removal_fraction,
            step_size,
            alpha,
            core_budget: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.removal_fraction) {
            return Err(Error::Config(format!(
                "removal fraction must lie in [0, 1], got {}",
                self.removal_fraction
            )));
        }
        if !(self.step_size > 0.0 && self.step_size < 1.0) {
            return Err(Error::Config(format!(
                "step size must lie in (0, 1), got {}",
                self.step_size
            )));
        }
        if !(0.0..1.0).contains(&self.alpha) {
            return Err(Error::Config(format!(
                "alpha must lie in [0, 1), got {}",
                self.alpha
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct CoreResult {
    /// Nodes still covered by an edge after removal.
    pub non_isolated: BTreeSet<NodeId>,
    pub isolated: BTreeSet<NodeId>,
    /// Isolated nodes reinstated by original degree, in pick order.
    pub backfill: Vec<NodeId>,
    /// Candidate core set: non-isolated plus backfill.
    pub candidates: BTreeSet<NodeId>,
    /// Largest connected component of the candidate set induced on the
    /// original graph, in original node ids.
    pub core_nodes: BTreeSet<NodeId>,
    /// The core as its own graph (labels preserved).
    pub core: WeightedGraph,
    /// Edges cut after the flow, heaviest first.
    pub removed_edges: Vec<EdgeId>,
    /// Final flow weights of every live edge, for reporting.
    pub final_weights: Vec<(EdgeId, f64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoreResultExport {
    pub core_nodes: Vec<String>,
    pub core_edges: Vec<(String, String, f64)>,
    #[serde(rename = "S")]
    pub s: Vec<String>,
    #[serde(rename = "I_backfill")]
    pub i_backfill: Vec<String>,
    pub removed_edges: Vec<u32>,
    pub config: CoreConfig,
}

impl CoreResult {
    pub fn export(&self, g: &WeightedGraph, config: &CoreConfig) -> CoreResultExport {
        CoreResultExport {
            core_nodes: self.core_nodes.iter().map(|&n| g.label(n).to_owned()).collect(),
            core_edges: self
                .core
                .live_edges()
                .map(|e| {
                    let (u, v) = self.core.endpoints(e);
                    (
                        self.core.label(u).to_owned(),
                        self.core.label(v).to_owned(),
                        self.core.weight(e),
                    )
                })
                .collect(),
            s: self.non_isolated.iter().map(|&n| g.label(n).to_owned()).collect(),
            i_backfill: self.backfill.iter().map(|&n| g.label(n).to_owned()).collect(),
            removed_edges: self.removed_edges.iter().map(|e| e.0).collect(),
            config: config.clone(),
        }
    }

    pub fn node_list_text(&self, g: &WeightedGraph) -> String {
        let mut out = String::new();
        for &n in &self.core_nodes {
            out.push_str(g.label(n));
            out.push('\n');
        }
        out
    }
}

/// Runs the detection pipeline on a connected graph:
/// 1. evolve weights with the rho-driven flow (no surgery),
/// 2. cut the top floor(removal_fraction * m) edges by final weight
///    (ties by ascending edge id),
/// 3. classify isolated nodes and backfill the highest-original-degree ones
///    up to the core budget,
/// 4. induce the candidate set on the original graph and keep its largest
///    connected component.
pub fn detect_core(g: &WeightedGraph, config: &CoreConfig) -> Result<CoreResult> {
    config.validate()?;
    if g.node_count() == 0 {
        return Err(Error::Domain("cannot detect a core in an empty graph".into()));
    }
    if connected_components(g).len() != 1 {
        return Err(Error::Config(
            "core detection expects a connected graph; extract a component first".into(),
        ));
    }

    let flow_config = FlowConfig::new(
        FlowVariant::RhoDriven,
        CurvatureKind::Ollivier { alpha: config.alpha },
        config.step_size,
        config.iterations,
    );
    let trajectory = run_flow(g, &flow_config)?;
    let mut flowed = trajectory.terminal;

    let mut by_weight: Vec<(EdgeId, f64)> = flowed.live_weights();
    by_weight.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let remove_count = (config.removal_fraction * by_weight.len() as f64).floor() as usize;
    let removed_edges: Vec<EdgeId> = by_weight[..remove_count].iter().map(|&(e, _)| e).collect();
    for &e in &removed_edges {
        flowed.remove_edge(e)?;
    }

    let mut non_isolated = BTreeSet::new();
    let mut isolated = BTreeSet::new();
    for n in g.nodes() {
        if flowed.degree(n) >= 1 {
            non_isolated.insert(n);
        } else {
            isolated.insert(n);
        }
    }

    let budget = config.core_budget.unwrap_or(g.node_count() / 2);
    let backfill_count = budget.saturating_sub(non_isolated.len());
    let mut ranked: Vec<NodeId> = isolated.iter().copied().collect();
    ranked.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then_with(|| a.cmp(&b)));
    let backfill: Vec<NodeId> = ranked.into_iter().take(backfill_count).collect();

    let mut candidates = non_isolated.clone();
    candidates.extend(backfill.iter().copied());

    let (core_nodes, core) = if candidates.is_empty() {
        (BTreeSet::new(), WeightedGraph::new())
    } else {
        let (induced, map) = induced_subgraph_with_map(g, &candidates);
        let components = connected_components(&induced);
        let mut best = &components[0];
        for c in &components[1..] {
            if c.len() > best.len() {
                best = c;
            }
        }
        let chosen: BTreeSet<NodeId> = best.iter().map(|&n| map[n.index()]).collect();
        let (core, _) = induced_subgraph_with_map(g, &chosen);
        (chosen, core)
    };

    Ok(CoreResult {
        non_isolated,
        isolated,
        backfill,
        candidates,
        core_nodes,
        core,
        removed_edges,
        final_weights: by_weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{core_cohesiveness, metrics_report};

    fn figure1() -> WeightedGraph {
        WeightedGraph::from_edges(
            6,
            &[
                (0, 1, 1.0),
                (1, 2, 1.0),
                (0, 2, 1.0),
                (0, 3, 1.0),
                (1, 4, 1.0),
                (2, 5, 1.0),
            ],
        )
        .unwrap()
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

    fn star6() -> WeightedGraph {
        let mut g = WeightedGraph::from_edges(7, &[]).unwrap();
        for i in 1..7u32 {
            g.add_edge(NodeId(0), NodeId(i), 1.0).unwrap();
        }
        g
    }

    #[test]
    fn figure1_detects_inner_triangle() {
        let g = figure1();
        let config = CoreConfig::new(1, 0.5, 0.1, 0.1);
        let result = detect_core(&g, &config).unwrap();
        // spokes end at 0.98 > triangle 0.97, so the three spokes go
        assert_eq!(result.removed_edges.len(), 3);
        let expected: BTreeSet<NodeId> = [NodeId(0), NodeId(1), NodeId(2)].into();
        assert_eq!(result.core_nodes, expected);
        assert!(result.backfill.is_empty());
        let r_d = core_cohesiveness(&g, &result.core_nodes).unwrap();
        assert!((r_d - 2.0 / 3.0).abs() < 1e-12, "r_d {r_d}");
    }

    #[test]
    fn figure2_bridge_removal_keeps_whole_graph_core() {
        let g = figure2();
        // remove exactly the single heaviest edge: floor(0.15 * 7) = 1
        let config = CoreConfig::new(5, 0.15, 0.1, 0.1);
        let result = detect_core(&g, &config).unwrap();
        assert_eq!(result.removed_edges.len(), 1);
        let (u, v) = g.endpoints(result.removed_edges[0]);
        assert_eq!((u, v), (NodeId(2), NodeId(3)));
        // every node keeps an edge, so the candidate set is all six nodes;
        // inducing on the original graph restores the bridge
        assert_eq!(result.candidates.len(), 6);
        assert_eq!(result.core_nodes.len(), 6);
        assert_eq!(result.core.live_edge_count(), 7);
        let report = metrics_report(&g, &result.core_nodes).unwrap();
        assert!((report.r_d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn star_full_removal_backfills_by_original_degree() {
        let g = star6();
        let config = CoreConfig::new(1, 1.0, 0.1, 0.1);
        let result = detect_core(&g, &config).unwrap();
        assert_eq!(result.removed_edges.len(), 6);
        assert_eq!(result.non_isolated.len(), 0);
        assert_eq!(result.isolated.len(), 7);
        // budget floor(7/2) = 3: hub first, then the two smallest-id leaves
        assert_eq!(result.backfill, vec![NodeId(0), NodeId(1), NodeId(2)]);
        assert!(result.core_nodes.contains(&NodeId(0)));
        assert_eq!(result.core_nodes.len(), 3);
    }

    #[test]
    fn zero_iterations_zero_removal_keeps_everything() {
        let g = figure1();
        let config = CoreConfig::new(0, 0.0, 0.1, 0.1);
        let result = detect_core(&g, &config).unwrap();
        assert!(result.removed_edges.is_empty());
        assert_eq!(result.core_nodes.len(), g.node_count());
        let report = metrics_report(&g, &result.core_nodes).unwrap();
        assert!((report.r_d - 1.0).abs() < 1e-15);
    }

    #[test]
    fn removal_count_is_exact_floor() {
        let g = figure2(); // 7 edges
        for (tau, expect) in [(0.0, 0), (0.15, 1), (0.5, 3), (1.0, 7)] {
            let config = CoreConfig::new(0, tau, 0.1, 0.1);
            let result = detect_core(&g, &config).unwrap();
            assert_eq!(result.removed_edges.len(), expect, "tau {tau}");
        }
    }

    #[test]
    fn no_backfill_when_enough_survivors() {
        let g = figure2();
        let config = CoreConfig::new(0, 0.15, 0.1, 0.1);
        let result = detect_core(&g, &config).unwrap();
        assert!(result.non_isolated.len() >= 3);
        assert!(result.backfill.is_empty());
    }

    #[test]
    fn determinism() {
        let g = figure2();
        let config = CoreConfig::new(3, 0.3, 0.1, 0.1);
        let a = detect_core(&g, &config).unwrap();
        let b = detect_core(&g, &config).unwrap();
        assert_eq!(a.core_nodes, b.core_nodes);
        assert_eq!(a.removed_edges, b.removed_edges);
        assert_eq!(a.backfill, b.backfill);
    }

    #[test]
    fn rejects_disconnected_input() {
        let g = WeightedGraph::from_edges(4, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        let config = CoreConfig::new(1, 0.5, 0.1, 0.1);
        assert!(matches!(detect_core(&g, &config), Err(Error::Config(_))));
    }

    #[test]
    fn export_shape() {
        let g = figure1();
        let config = CoreConfig::new(1, 0.5, 0.1, 0.1);
        let result = detect_core(&g, &config).unwrap();
        let export = result.export(&g, &config);
        assert_eq!(export.core_nodes.len(), 3);
        assert_eq!(export.core_edges.len(), 3);
        assert_eq!(export.removed_edges.len(), 3);
        let json = serde_json::to_string(&export).unwrap();
        assert!(json.contains("\"S\""));
        assert!(json.contains("\"I_backfill\""));
        let text = result.node_list_text(&g);
        assert_eq!(text.lines().count(), 3);
    }
}
