//! Core-quality metrics: cohesiveness r_d and residual distance stretch r_s.
//!
//! Both metrics are combinatorial: degrees count neighbors and distances
//! count hops, so edge weights play no role here.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_hops, unweighted_adjacency, NodeId, WeightedGraph};

#[derive(Debug, Clone, Serialize)]
pub struct MetricsReport {
    pub r_d: f64,
    /// None when no residual pair stays connected (xi = 0).
    pub r_s: Option<f64>,
    pub r_s_valid: bool,
    /// Number of residual pairs still connected after removing the core.
    pub xi: u64,
    pub core_nodes: usize,
    pub core_edges: usize,
}

/// Mean over core nodes of (degree inside the core) / (degree in g).
pub fn core_cohesiveness(g: &WeightedGraph, core: &BTreeSet<NodeId>) -> Result<f64> {
    if core.is_empty() {
        return Err(Error::Domain("core node set is empty".into()));
    }
    let mut sum = 0.0;
    for &x in core {
        if x.index() >= g.node_count() {
            return Err(Error::Domain(format!("core node {x} is not in the graph")));
        }
        let deg_g = g.degree(x);
        if deg_g == 0 {
            return Err(Error::Domain(format!(
                "core node {x} has degree 0; cohesiveness ratio undefined"
            )));
        }
        let deg_core = g.neighbors(x).filter(|(z, _, _)| core.contains(z)).count();
        sum += deg_core as f64 / deg_g as f64;
    }
    Ok(sum / core.len() as f64)
}

/// Average over still-connected residual pairs of the ratio of hop distance
/// in the residual graph to hop distance in g. Returns (None, 0) when no
/// residual pair remains connected.
pub fn distance_stretch(g: &WeightedGraph, core: &BTreeSet<NodeId>) -> (Option<f64>, u64) {
    let residual: Vec<NodeId> = g.nodes().filter(|n| !core.contains(n)).collect();
    if residual.len() < 2 {
        return (None, 0);
    }
    let full_adj = unweighted_adjacency(g);
    let mut residual_adj = vec![Vec::new(); g.node_count()];
    for e in g.live_edges() {
        let (u, v) = g.endpoints(e);
        if !core.contains(&u) && !core.contains(&v) {
            residual_adj[u.index()].push(v.index());
            residual_adj[v.index()].push(u.index());
        }
    }

    // one pass per residual source; pairs are unordered so each source only
    // pairs with larger residual nodes
    let contributions: Vec<(f64, u64)> = residual
        .par_iter()
        .map(|&u| {
            let d_res = bfs_hops(&residual_adj, u.index());
            let d_full = bfs_hops(&full_adj, u.index());
            let mut sum = 0.0;
            let mut count = 0u64;
            for &v in &residual {
                if v <= u {
                    continue;
                }
                let dr = d_res[v.index()];
                if dr == u32::MAX {
                    continue;
                }
                let df = d_full[v.index()];
                debug_assert!(df != u32::MAX && df <= dr);
                sum += dr as f64 / df as f64;
                count += 1;
            }
            (sum, count)
        })
        .collect();

    let mut total = 0.0;
    let mut xi = 0u64;
    for (s, c) in contributions {
        total += s;
        xi += c;
    }
    if xi == 0 {
        (None, 0)
    } else {
        (Some(total / xi as f64), xi)
    }
}

pub fn core_edge_count(g: &WeightedGraph, core: &BTreeSet<NodeId>) -> usize {
    g.live_edges()
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            core.contains(&u) && core.contains(&v)
        })
        .count()
}

pub fn metrics_report(g: &WeightedGraph, core: &BTreeSet<NodeId>) -> Result<MetricsReport> {
    let r_d = core_cohesiveness(g, core)?;
    let (r_s, xi) = distance_stretch(g, core);
    Ok(MetricsReport {
        r_d,
        r_s,
        r_s_valid: r_s.is_some(),
        xi,
        core_nodes: core.len(),
        core_edges: core_edge_count(g, core),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;

    /// x1..x7 as nodes 0..6.
    fn example1() -> WeightedGraph {
        WeightedGraph::from_edges(
            7,
            &[
                (0, 1, 1.0),
                (1, 2, 1.0),
                (2, 3, 1.0),
                (3, 4, 1.0),
                (4, 5, 1.0),
                (5, 6, 1.0),
                (0, 2, 1.0),
                (2, 6, 1.0),
            ],
        )
        .unwrap()
    }

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

    fn ids(list: &[u32]) -> BTreeSet<NodeId> {
        list.iter().map(|&i| NodeId(i)).collect()
    }

    #[test]
    fn example1_first_core() {
        let g = example1();
        let core = ids(&[0, 1, 2]);
        let r_d = core_cohesiveness(&g, &core).unwrap();
        assert!((r_d - 5.0 / 6.0).abs() < 1e-12, "r_d {r_d}");
        let (r_s, xi) = distance_stretch(&g, &core);
        assert_eq!(xi, 6);
        assert!((r_s.unwrap() - 13.0 / 12.0).abs() < 1e-12, "r_s {:?}", r_s);
    }

    #[test]
    fn example1_second_core() {
        let g = example1();
        let core = ids(&[2, 3, 4, 5, 6]);
        let r_d = core_cohesiveness(&g, &core).unwrap();
        assert!((r_d - 0.9).abs() < 1e-12, "r_d {r_d}");
        let (r_s, xi) = distance_stretch(&g, &core);
        assert_eq!(xi, 1);
        assert!((r_s.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn whole_graph_core() {
        let g = example1();
        let core: BTreeSet<NodeId> = g.nodes().collect();
        assert!((core_cohesiveness(&g, &core).unwrap() - 1.0).abs() < 1e-15);
        let (r_s, xi) = distance_stretch(&g, &core);
        assert_eq!((r_s, xi), (None, 0));
    }

    #[test]
    fn figure1_residual_is_disconnected() {
        let g = figure1();
        let core = ids(&[0, 1, 2]);
        let (r_s, xi) = distance_stretch(&g, &core);
        assert_eq!((r_s, xi), (None, 0));
        let report = metrics_report(&g, &core).unwrap();
        assert!(!report.r_s_valid);
        assert!((report.r_d - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(report.core_edges, 3);
    }

    #[test]
    fn empty_core_gives_unit_stretch() {
        let g = example1();
        let core = BTreeSet::new();
        let (r_s, xi) = distance_stretch(&g, &core);
        let n = g.node_count() as u64;
        assert_eq!(xi, n * (n - 1) / 2);
        assert_eq!(r_s, Some(1.0));
        assert!(core_cohesiveness(&g, &core).is_err());
    }

    #[test]
    fn degree_zero_core_node_is_an_error() {
        let g = WeightedGraph::from_edges(3, &[(0, 1, 1.0)]).unwrap();
        let err = core_cohesiveness(&g, &ids(&[2])).unwrap_err();
        assert!(err.to_string().contains("degree 0"), "{err}");
    }

    #[test]
    fn r_d_ignores_weights() {
        let g = example1();
        let mut reweighted = g.clone();
        for e in reweighted.live_edges().collect::<Vec<_>>() {
            reweighted.set_weight(e, 17.0).unwrap();
        }
        let core = ids(&[0, 1, 2]);
        assert_eq!(
            core_cohesiveness(&g, &core).unwrap(),
            core_cohesiveness(&reweighted, &core).unwrap()
        );
    }
}
