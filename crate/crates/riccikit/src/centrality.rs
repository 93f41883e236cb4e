//! Baseline node centralities and size-matched connected group selection.
//!
//! All four measures treat the graph as unweighted: flow weights never
//! influence the baselines they are compared against.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_hops, unweighted_adjacency, NodeId, WeightedGraph};

pub const PAGERANK_DAMPING: f64 = 0.85;
pub const PAGERANK_TOLERANCE: f64 = 1e-10;
pub const PAGERANK_MAX_ROUNDS: u32 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentralityMethod {
    Degree,
    Betweenness,
    Closeness,
    PageRank { damping: f64, tolerance: f64 },
}

impl CentralityMethod {
    pub fn pagerank_default() -> Self {
        CentralityMethod::PageRank {
            damping: PAGERANK_DAMPING,
            tolerance: PAGERANK_TOLERANCE,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CentralityMethod::Degree => "degree",
            CentralityMethod::Betweenness => "betweenness",
            CentralityMethod::Closeness => "closeness",
            CentralityMethod::PageRank { .. } => "pagerank",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "degree" => Ok(CentralityMethod::Degree),
            "betweenness" => Ok(CentralityMethod::Betweenness),
            "closeness" => Ok(CentralityMethod::Closeness),
            "pagerank" => Ok(CentralityMethod::pagerank_default()),
            other => Err(Error::Config(format!("unknown centrality method '{other}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CentralityScores {
    pub method: CentralityMethod,
    /// Indexed by node id.
    pub scores: Vec<f64>,
}

impl CentralityScores {
    pub fn get(&self, node: NodeId) -> f64 {
        self.scores[node.index()]
    }

    /// (label, score) rows sorted by descending score, ties by node id.
    pub fn ranked_csv(&self, g: &WeightedGraph) -> String {
        let mut order: Vec<NodeId> = g.nodes().collect();
        order.sort_by(|&a, &b| {
            self.get(b)
                .total_cmp(&self.get(a))
                .then_with(|| a.cmp(&b))
        });
        let mut out = String::from("label,score\n");
        for n in order {
            out.push_str(&format!("{},{}\n", g.label(n), self.get(n)));
        }
        out
    }
}

pub fn centrality(g: &WeightedGraph, method: CentralityMethod) -> Result<CentralityScores> {
    let scores = match method {
        CentralityMethod::Degree => degree_scores(g),
        CentralityMethod::Betweenness => betweenness_scores(g),
        CentralityMethod::Closeness => closeness_scores(g)?,
        CentralityMethod::PageRank { damping, tolerance } => {
            pagerank_scores(g, damping, tolerance, PAGERANK_MAX_ROUNDS)?
        }
    };
    Ok(CentralityScores { method, scores })
}

fn degree_scores(g: &WeightedGraph) -> Vec<f64> {
    let n = g.node_count();
    if n <= 1 {
        return vec![0.0; n];
    }
    let denom = (n - 1) as f64;
    g.nodes().map(|v| g.degree(v) as f64 / denom).collect()
}

/// Brandes' exact algorithm on hop distances, pairs counted once and
/// normalized by (n-1)(n-2)/2. Sources run in parallel but their
/// contributions are folded in source order, so results do not depend on
/// the number of worker threads.
fn betweenness_scores(g: &WeightedGraph) -> Vec<f64> {
    let n = g.node_count();
    if n < 3 {
        return vec![0.0; n];
    }
    let adj = unweighted_adjacency(g);
    let mut raw = vec![0.0f64; n];
    let chunk = 64;
    let sources: Vec<usize> = (0..n).collect();
    for block in sources.chunks(chunk) {
        let partials: Vec<Vec<f64>> = block
            .par_iter()
            .map(|&s| brandes_dependencies(&adj, s))
            .collect();
        for partial in partials {
            for (v, d) in partial.into_iter().enumerate() {
                raw[v] += d;
            }
        }
    }
    let norm = ((n - 1) * (n - 2)) as f64 / 2.0;
    // each unordered pair was visited from both endpoints
    raw.iter().map(|&x| x / 2.0 / norm).collect()
}

fn brandes_dependencies(adj: &[Vec<usize>], source: usize) -> Vec<f64> {
    let n = adj.len();
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![i64::MAX; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();

    sigma[source] = 1.0;
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in &adj[u] {
            if dist[v] == i64::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
            if dist[v] == dist[u] + 1 {
                sigma[v] += sigma[u];
                preds[v].push(u);
            }
        }
    }

    let mut delta = vec![0.0f64; n];
    for &w in order.iter().rev() {
        for &p in &preds[w] {
            delta[p] += sigma[p] / sigma[w] * (1.0 + delta[w]);
        }
    }
    delta[source] = 0.0;
    delta
}

fn closeness_scores(g: &WeightedGraph) -> Result<Vec<f64>> {
    let n = g.node_count();
    if n <= 1 {
        return Ok(vec![0.0; n]);
    }
    let adj = unweighted_adjacency(g);
    let per_node: Vec<Result<f64>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let hops = bfs_hops(&adj, v);
            let mut sum = 0u64;
            for (u, &d) in hops.iter().enumerate() {
                if u == v {
                    continue;
                }
                if d == u32::MAX {
                    return Err(Error::Config(
                        "closeness centrality expects a connected graph".into(),
                    ));
                }
                sum += d as u64;
            }
            Ok((n - 1) as f64 / sum as f64)
        })
        .collect();
    per_node.into_iter().collect()
}

fn pagerank_scores(
    g: &WeightedGraph,
    damping: f64,
    tolerance: f64,
    max_rounds: u32,
) -> Result<Vec<f64>> {
    let n = g.node_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = unweighted_adjacency(g);
    let inv_n = 1.0 / n as f64;
    let mut rank = vec![inv_n; n];
    let mut next = vec![0.0f64; n];
    for _round in 0..max_rounds {
        let mut dangling = 0.0;
        for (v, r) in rank.iter().enumerate() {
            if adj[v].is_empty() {
                dangling += r;
            }
        }
        let base = (1.0 - damping) * inv_n + damping * dangling * inv_n;
        next.iter_mut().for_each(|x| *x = base);
        for v in 0..n {
            let deg = adj[v].len();
            if deg == 0 {
                continue;
            }
            let share = damping * rank[v] / deg as f64;
            for &u in &adj[v] {
                next[u] += share;
            }
        }
        let l1: f64 = rank
            .iter()
            .zip(next.iter())
            .map(|(a, b)| (a - b).abs())
            .sum();
        std::mem::swap(&mut rank, &mut next);
        if l1 <= tolerance {
            return Ok(rank);
        }
    }
    Err(Error::NonConvergence { rounds: max_rounds })
}

#[derive(Copy, Clone, PartialEq)]
struct Scored {
    score: f64,
    node: NodeId,
}

impl Eq for Scored {}

impl Ord for Scored {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // max-heap on score, ties to the smaller node id
        self.score
            .total_cmp(&other.score)
            .then_with(|| Reverse(self.node).cmp(&Reverse(other.node)))
    }
}

impl PartialOrd for Scored {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Greedy connected group of size `k`: seed at the top-ranked node, then
/// repeatedly absorb the highest-scoring node adjacent to the group. If a
/// seed's component is exhausted early, the next unused seed is tried; the
/// largest stalled group is returned when no attempt reaches `k`.
pub fn connected_top_k(
    g: &WeightedGraph,
    scores: &CentralityScores,
    k: usize,
) -> Result<BTreeSet<NodeId>> {
    let n = g.node_count();
    if k == 0 || k > n {
        return Err(Error::Config(format!(
            "group size must lie in [1, {n}], got {k}"
        )));
    }
    let mut seeds: Vec<NodeId> = g.nodes().collect();
    seeds.sort_by(|&a, &b| {
        scores
            .get(b)
            .total_cmp(&scores.get(a))
            .then_with(|| a.cmp(&b))
    });

    let mut used = vec![false; n];
    let mut best: BTreeSet<NodeId> = BTreeSet::new();
    for &seed in &seeds {
        if used[seed.index()] {
            continue;
        }
        let mut group = BTreeSet::from([seed]);
        let mut heap = BinaryHeap::new();
        for (z, _, _) in g.neighbors(seed) {
            heap.push(Scored { score: scores.get(z), node: z });
        }
        while group.len() < k {
            let Some(Scored { node, .. }) = heap.pop() else {
                break;
            };
            if group.contains(&node) {
                continue;
            }
            group.insert(node);
            for (z, _, _) in g.neighbors(node) {
                if !group.contains(&z) {
                    heap.push(Scored { score: scores.get(z), node: z });
                }
            }
        }
        if group.len() == k {
            return Ok(group);
        }
        for &nd in &group {
            used[nd.index()] = true;
        }
        if group.len() > best.len() {
            best = group;
        }
    }
    Ok(best)
}
