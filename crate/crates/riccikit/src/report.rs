//! Machine-readable run reports: dataset statistics, per-method metric
//! rows, and JSON serialization.
//!
//! Reports are schema-stable: struct field order fixes the JSON layout, and
//! everything that varies between identical runs (wall-clock data) lives
//! under the single `run` field.

use std::collections::BTreeMap;
use std::time::{SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{bfs_hops, unweighted_adjacency, WeightedGraph};
use crate::metrics::MetricsReport;

#[derive(Debug, Clone, Serialize)]
pub struct DatasetStats {
    pub nodes: usize,
    pub edges: usize,
    pub avg_degree: f64,
    pub density: f64,
    /// Hop diameter; None for graphs with under two nodes.
    pub diameter: Option<u32>,
}

pub fn dataset_stats(g: &WeightedGraph) -> DatasetStats {
    let n = g.node_count();
    let m = g.live_edge_count();
    let avg_degree = if n == 0 { 0.0 } else { 2.0 * m as f64 / n as f64 };
    let density = if n <= 1 {
        0.0
    } else {
        2.0 * m as f64 / (n as f64 * (n - 1) as f64)
    };
    let diameter = hop_diameter(g);
    DatasetStats { nodes: n, edges: m, avg_degree, density, diameter }
}

/// Largest finite hop distance over all pairs.
pub fn hop_diameter(g: &WeightedGraph) -> Option<u32> {
    let n = g.node_count();
    if n < 2 {
        return None;
    }
    let adj = unweighted_adjacency(g);
    let per_source: Vec<u32> = (0..n)
        .into_par_iter()
        .map(|s| {
            bfs_hops(&adj, s)
                .into_iter()
                .filter(|&d| d != u32::MAX)
                .max()
                .unwrap_or(0)
        })
        .collect();
    per_source.into_iter().max()
}

#[derive(Debug, Clone, Serialize)]
pub struct MethodRow {
    pub method: String,
    pub core_nodes: usize,
    pub core_edges: usize,
    pub r_d: f64,
    pub r_s: Option<f64>,
    pub r_s_valid: bool,
    pub xi: u64,
}

impl MethodRow {
    pub fn new(method: impl Into<String>, metrics: &MetricsReport) -> Self {
        Self {
            method: method.into(),
            core_nodes: metrics.core_nodes,
            core_edges: metrics.core_edges,
            r_d: metrics.r_d,
            r_s: metrics.r_s,
            r_s_valid: metrics.r_s_valid,
            xi: metrics.xi,
        }
    }
}

/// Wall-clock data, the only part of a report that differs between
/// identical runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunMeta {
    pub timestamp_unix: u64,
    pub elapsed_seconds: BTreeMap<String, f64>,
}

impl RunMeta {
    pub fn now() -> Self {
        Self {
            timestamp_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            elapsed_seconds: BTreeMap::new(),
        }
    }

    pub fn record(&mut self, phase: &str, seconds: f64) {
        self.elapsed_seconds.insert(phase.to_string(), seconds);
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub run: RunMeta,
    pub config: serde_json::Value,
    pub dataset: DatasetStats,
    pub rows: Vec<MethodRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core_result: Option<crate::detect::CoreResultExport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<Vec<String>>,
}

impl RunReport {
    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Published reference rows used by the `reproduce` subcommand to report
/// deviations. Values are reference expectations, never assertions.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceRow {
    pub method: &'static str,
    pub core_nodes: usize,
    pub core_edges: usize,
    pub r_d: f64,
    pub r_s: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct ReferenceDataset {
    pub name: &'static str,
    pub file: &'static str,
    pub nodes: usize,
    pub edges: usize,
    pub avg_degree: f64,
    pub density: f64,
    pub diameter: u32,
    pub iterations: u32,
    pub alpha: f64,
    pub step_size: f64,
    pub removal_fraction: f64,
    pub rows: &'static [ReferenceRow],
}

pub const CORA: ReferenceDataset = ReferenceDataset {
    name: "cora",
    file: "cora.txt",
    nodes: 2485,
    edges: 5069,
    avg_degree: 4.08,
    density: 0.002,
    diameter: 19,
    iterations: 50,
    alpha: 0.8,
    step_size: 0.1,
    removal_fraction: 0.8,
    rows: &[
        ReferenceRow { method: "ricci-flow", core_nodes: 894, core_edges: 1724, r_d: 0.80, r_s: 2.17 },
        ReferenceRow { method: "pagerank", core_nodes: 894, core_edges: 1874, r_d: 0.62, r_s: 1.00 },
        ReferenceRow { method: "degree", core_nodes: 894, core_edges: 2066, r_d: 0.68, r_s: 1.02 },
        ReferenceRow { method: "betweenness", core_nodes: 894, core_edges: 1743, r_d: 0.64, r_s: 1.34 },
        ReferenceRow { method: "closeness", core_nodes: 894, core_edges: 1960, r_d: 0.78, r_s: 2.03 },
    ],
};

pub const CITESEER: ReferenceDataset = ReferenceDataset {
    name: "citeseer",
    file: "citeseer.txt",
    nodes: 2120,
    edges: 3679,
    avg_degree: 3.47,
    density: 0.002,
    diameter: 28,
    iterations: 12,
    alpha: 0.1,
    step_size: 0.1,
    removal_fraction: 0.8,
    rows: &[
        ReferenceRow { method: "ricci-flow", core_nodes: 343, core_edges: 860, r_d: 0.75, r_s: 1.67 },
        ReferenceRow { method: "pagerank", core_nodes: 343, core_edges: 782, r_d: 0.51, r_s: 1.11 },
        ReferenceRow { method: "degree", core_nodes: 343, core_edges: 925, r_d: 0.58, r_s: 1.17 },
        ReferenceRow { method: "betweenness", core_nodes: 343, core_edges: 531, r_d: 0.54, r_s: 1.56 },
        ReferenceRow { method: "closeness", core_nodes: 343, core_edges: 895, r_d: 0.73, r_s: 1.36 },
    ],
};

pub const BIO_CE_HT: ReferenceDataset = ReferenceDataset {
    name: "bio-ce-ht",
    file: "bio-ce-ht.txt",
    nodes: 2617,
    edges: 2985,
    avg_degree: 2.28,
    density: 0.001,
    diameter: 20,
    iterations: 30,
    alpha: 0.8,
    step_size: 0.1,
    removal_fraction: 0.8,
    rows: &[
        ReferenceRow { method: "ricci-flow", core_nodes: 542, core_edges: 621, r_d: 0.74, r_s: 1.80 },
        ReferenceRow { method: "pagerank", core_nodes: 543, core_edges: 688, r_d: 0.55, r_s: 1.00 },
        ReferenceRow { method: "degree", core_nodes: 542, core_edges: 596, r_d: 0.59, r_s: 1.00 },
        ReferenceRow { method: "betweenness", core_nodes: 542, core_edges: 753, r_d: 0.64, r_s: 1.00 },
        ReferenceRow { method: "closeness", core_nodes: 542, core_edges: 786, r_d: 0.73, r_s: 1.20 },
    ],
};

pub const REFERENCE_DATASETS: [&ReferenceDataset; 3] = [&CORA, &CITESEER, &BIO_CE_HT];

pub fn reference_dataset(name: &str) -> Option<&'static ReferenceDataset> {
    REFERENCE_DATASETS.iter().copied().find(|d| d.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_of_triangle_with_tail() {
        let g = WeightedGraph::from_edges(4, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0), (2, 3, 1.0)])
            .unwrap();
        let stats = dataset_stats(&g);
        assert_eq!(stats.nodes, 4);
        assert_eq!(stats.edges, 4);
        assert!((stats.avg_degree - 2.0).abs() < 1e-15);
        assert_eq!(stats.diameter, Some(2));
    }

    #[test]
    fn report_serializes_with_stable_field_order() {
        let g = WeightedGraph::from_edges(2, &[(0, 1, 1.0)]).unwrap();
        let report = RunReport {
            run: RunMeta { timestamp_unix: 0, elapsed_seconds: BTreeMap::new() },
            config: serde_json::json!({"alpha": 0.1}),
            dataset: dataset_stats(&g),
            rows: vec![],
            core_result: None,
            notes: None,
        };
        let json = report.to_json_pretty();
        let run_pos = json.find("\"run\"").unwrap();
        let cfg_pos = json.find("\"config\"").unwrap();
        let data_pos = json.find("\"dataset\"").unwrap();
        assert!(run_pos < cfg_pos && cfg_pos < data_pos);
    }
}
