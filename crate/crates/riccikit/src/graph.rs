//! Undirected weighted graph with stable edge identifiers.
//!
//! Edge ids are dense and never reused: removing an edge tombstones its
//! record so that trajectories and reports can keep referring to it after
//! surgery. Node ids are dense integers assigned in first-appearance order
//! of their labels, which fixes every downstream tie-break.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Stable across weight updates; retired (never reused) on removal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone)]
struct EdgeRecord {
    u: NodeId,
    v: NodeId,
    weight: f64,
    alive: bool,
}

#[derive(Debug, Clone, Default)]
pub struct WeightedGraph {
    labels: Vec<String>,
    label_index: HashMap<String, NodeId>,
    edges: Vec<EdgeRecord>,
    adjacency: Vec<Vec<EdgeId>>,
    live_edges: usize,
}

impl WeightedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns `label`, returning the existing id when already present.
    pub fn add_node(&mut self, label: impl Into<String>) -> NodeId {
        let label = label.into();
        if let Some(&id) = self.label_index.get(&label) {
            return id;
        }
        let id = NodeId(self.labels.len() as u32);
        self.label_index.insert(label.clone(), id);
        self.labels.push(label);
        self.adjacency.push(Vec::new());
        id
    }

    /// Builds a graph on `n` nodes labeled "0".."n-1" from (u, v, w) triples.
    pub fn from_edges(n: usize, edges: &[(u32, u32, f64)]) -> Result<Self> {
        let mut g = Self::new();
        for i in 0..n {
            g.add_node(i.to_string());
        }
        for &(u, v, w) in edges {
            g.add_edge(NodeId(u), NodeId(v), w)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: NodeId, v: NodeId, weight: f64) -> Result<EdgeId> {
        if u == v {
            return Err(Error::Domain(format!("self-loop at node {u}")));
        }
        if u.index() >= self.node_count() || v.index() >= self.node_count() {
            return Err(Error::Domain(format!("edge {u}-{v} references unknown node")));
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::Domain(format!("edge {u}-{v} has non-positive weight {weight}")));
        }
        if self.find_edge(u, v).is_some() {
            return Err(Error::Domain(format!("duplicate edge {u}-{v}")));
        }
        let id = EdgeId(self.edges.len() as u32);
        self.edges.push(EdgeRecord { u, v, weight, alive: true });
        self.adjacency[u.index()].push(id);
        self.adjacency[v.index()].push(id);
        self.live_edges += 1;
        Ok(id)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn live_edge_count(&self) -> usize {
        self.live_edges
    }

    pub fn label(&self, node: NodeId) -> &str {
        &self.labels[node.index()]
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.label_index.get(label).copied()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.labels.len() as u32).map(NodeId)
    }

    /// Live edge ids in ascending order.
    pub fn live_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.alive)
            .map(|(i, _)| EdgeId(i as u32))
    }

    pub fn is_live(&self, e: EdgeId) -> bool {
        self.edges.get(e.index()).map(|r| r.alive).unwrap_or(false)
    }

    /// Endpoints are retained for tombstoned edges as well.
    pub fn endpoints(&self, e: EdgeId) -> (NodeId, NodeId) {
        let r = &self.edges[e.index()];
        (r.u, r.v)
    }

    pub fn weight(&self, e: EdgeId) -> f64 {
        self.edges[e.index()].weight
    }

    pub fn set_weight(&mut self, e: EdgeId, weight: f64) -> Result<()> {
        if !self.is_live(e) {
            return Err(Error::Domain(format!("edge {e} is not live")));
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::StepTooLarge { edge: e.0, weight });
        }
        self.edges[e.index()].weight = weight;
        Ok(())
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<()> {
        if !self.is_live(e) {
            return Err(Error::Domain(format!("edge {e} is not live")));
        }
        let (u, v) = self.endpoints(e);
        self.edges[e.index()].alive = false;
        self.adjacency[u.index()].retain(|&x| x != e);
        self.adjacency[v.index()].retain(|&x| x != e);
        self.live_edges -= 1;
        Ok(())
    }

    /// Live incident edges of `node` as (neighbor, edge, weight).
    pub fn neighbors(&self, node: NodeId) -> impl Iterator<Item = (NodeId, EdgeId, f64)> + '_ {
        self.adjacency[node.index()].iter().map(move |&e| {
            let r = &self.edges[e.index()];
            let other = if r.u == node { r.v } else { r.u };
            (other, e, r.weight)
        })
    }

    pub fn degree(&self, node: NodeId) -> usize {
        self.adjacency[node.index()].len()
    }

    pub fn find_edge(&self, u: NodeId, v: NodeId) -> Option<EdgeId> {
        self.adjacency[u.index()]
            .iter()
            .copied()
            .find(|&e| {
                let r = &self.edges[e.index()];
                r.u == v || r.v == v
            })
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().filter(|r| r.alive).map(|r| r.weight).sum()
    }

    pub fn live_weights(&self) -> Vec<(EdgeId, f64)> {
        self.live_edges().map(|e| (e, self.weight(e))).collect()
    }
}

/// Parses "u v [w]" lines into a graph. Lines starting with '#' or '%' are
/// comments; duplicate pairs collapse keeping the first weight.
pub fn parse_edge_list(text: &str, default_weight: f64) -> Result<WeightedGraph> {
    if !(default_weight.is_finite() && default_weight > 0.0) {
        return Err(Error::Config(format!("default weight must be positive, got {default_weight}")));
    }
    let mut g = WeightedGraph::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() < 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected \"u v [w]\", got {} token(s)", tokens.len()),
            });
        }
        if tokens.len() > 3 {
            return Err(Error::Parse {
                line,
                msg: format!("expected \"u v [w]\", got {} tokens", tokens.len()),
            });
        }
        if tokens[0] == tokens[1] {
            return Err(Error::Parse {
                line,
                msg: format!("self-loop at '{}'", tokens[0]),
            });
        }
        let weight = match tokens.get(2) {
            Some(tok) => match tok.parse::<f64>() {
                Ok(w) if w.is_finite() && w > 0.0 => w,
                Ok(w) => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("weight must be positive, got {w}"),
                    })
                }
                Err(_) => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("non-numeric weight '{tok}'"),
                    })
                }
            },
            None => default_weight,
        };
        let u = g.add_node(tokens[0]);
        let v = g.add_node(tokens[1]);
        if g.find_edge(u, v).is_none() {
            g.add_edge(u, v, weight)?;
        }
    }
    Ok(g)
}

pub fn load_edge_list(path: &std::path::Path, default_weight: f64) -> Result<WeightedGraph> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text, default_weight)
}

/// Partition of the nodes into connected components, ordered by smallest
/// contained id; nodes within each component are ascending.
pub fn connected_components(g: &WeightedGraph) -> Vec<Vec<NodeId>> {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in g.nodes() {
        if seen[start.index()] {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        seen[start.index()] = true;
        let mut members = vec![start];
        while let Some(u) = queue.pop_front() {
            for (v, _, _) in g.neighbors(u) {
                if !seen[v.index()] {
                    seen[v.index()] = true;
                    members.push(v);
                    queue.push_back(v);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// Induced subgraph on the largest component, nodes re-indexed densely in
/// ascending original order; size ties go to the component containing the
/// smallest original id.
pub fn largest_connected_component(g: &WeightedGraph) -> Result<WeightedGraph> {
    if g.node_count() == 0 {
        return Err(Error::Domain("empty graph has no components".into()));
    }
    let components = connected_components(g);
    let mut best = &components[0];
    for c in &components[1..] {
        if c.len() > best.len() {
            best = c;
        }
    }
    let nodes: BTreeSet<NodeId> = best.iter().copied().collect();
    Ok(induced_subgraph(g, &nodes))
}

/// Keeps exactly the live edges with both endpoints in `nodes`; isolated
/// members are retained as degree-0 vertices. Weights and labels carry over.
pub fn induced_subgraph(g: &WeightedGraph, nodes: &BTreeSet<NodeId>) -> WeightedGraph {
    induced_subgraph_with_map(g, nodes).0
}

/// As [`induced_subgraph`], also returning new-id -> original-id.
pub fn induced_subgraph_with_map(
    g: &WeightedGraph,
    nodes: &BTreeSet<NodeId>,
) -> (WeightedGraph, Vec<NodeId>) {
    let mut sub = WeightedGraph::new();
    let mut map = Vec::with_capacity(nodes.len());
    let mut new_id = HashMap::with_capacity(nodes.len());
    for &orig in nodes {
        let id = sub.add_node(g.label(orig));
        new_id.insert(orig, id);
        map.push(orig);
    }
    for e in g.live_edges() {
        let (u, v) = g.endpoints(e);
        if let (Some(&nu), Some(&nv)) = (new_id.get(&u), new_id.get(&v)) {
            sub.add_edge(nu, nv, g.weight(e))
                .expect("induced edges are valid by construction");
        }
    }
    (sub, map)
}

/// Single-source shortest-path lengths; unreachable nodes hold infinity.
#[derive(Debug, Clone)]
pub struct DistanceOracle {
    pub source: NodeId,
    dist: Vec<f64>,
}

impl DistanceOracle {
    pub fn distance(&self, node: NodeId) -> Option<f64> {
        let d = self.dist[node.index()];
        d.is_finite().then_some(d)
    }

    pub fn raw(&self) -> &[f64] {
        &self.dist
    }
}

#[derive(Copy, Clone, PartialEq)]
struct HeapItem {
    dist: f64,
    node: NodeId,
}

impl Eq for HeapItem {}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on (dist, node)
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn shortest_path_distances(
    g: &WeightedGraph,
    source: NodeId,
    unit_weights: bool,
) -> DistanceOracle {
    let n = g.node_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut ws = DijkstraWorkspace::new(n);
    ws.run(g, source, unit_weights, None, |node, d| {
        dist[node.index()] = d;
    });
    DistanceOracle { source, dist }
}

/// Reusable single-source shortest-path state. Buffers are generation
/// stamped instead of cleared, so one run costs only the region it actually
/// explores; this is what keeps per-edge curvature local on large graphs.
pub(crate) struct DijkstraWorkspace {
    dist: Vec<f64>,
    stamp: Vec<u32>,
    settled: Vec<u32>,
    target: Vec<u32>,
    generation: u32,
    heap: BinaryHeap<HeapItem>,
}

impl DijkstraWorkspace {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            dist: vec![f64::INFINITY; n],
            stamp: vec![0; n],
            settled: vec![0; n],
            target: vec![0; n],
            generation: 0,
            heap: BinaryHeap::new(),
        }
    }

    fn grow(&mut self, n: usize) {
        if self.dist.len() < n {
            self.dist.resize(n, f64::INFINITY);
            self.stamp.resize(n, 0);
            self.settled.resize(n, 0);
            self.target.resize(n, 0);
        }
    }

    /// Runs Dijkstra from `source`, invoking `on_settle` for every settled
    /// node. With `targets` given, stops once all of them are settled.
    pub(crate) fn run(
        &mut self,
        g: &WeightedGraph,
        source: NodeId,
        unit_weights: bool,
        targets: Option<&[NodeId]>,
        mut on_settle: impl FnMut(NodeId, f64),
    ) {
        self.grow(g.node_count());
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.fill(0);
            self.settled.fill(0);
            self.target.fill(0);
            self.generation = 1;
        }
        let generation = self.generation;
        self.heap.clear();

        let mut pending = 0usize;
        if let Some(targets) = targets {
            for &t in targets {
                if self.target[t.index()] != generation {
                    self.target[t.index()] = generation;
                    pending += 1;
                }
            }
        }

        self.dist[source.index()] = 0.0;
        self.stamp[source.index()] = generation;
        self.heap.push(HeapItem { dist: 0.0, node: source });
        while let Some(HeapItem { dist: d, node: u }) = self.heap.pop() {
            if self.settled[u.index()] == generation {
                continue;
            }
            self.settled[u.index()] = generation;
            on_settle(u, d);
            if targets.is_some() && self.target[u.index()] == generation {
                pending -= 1;
                if pending == 0 {
                    return;
                }
            }
            for (v, _, w) in g.neighbors(u) {
                let step = if unit_weights { 1.0 } else { w };
                let nd = d + step;
                if self.stamp[v.index()] != generation || nd < self.dist[v.index()] {
                    self.dist[v.index()] = nd;
                    self.stamp[v.index()] = generation;
                    self.heap.push(HeapItem { dist: nd, node: v });
                }
            }
        }
    }

    /// Distance from `source` to a single target.
    pub(crate) fn distance(
        &mut self,
        g: &WeightedGraph,
        source: NodeId,
        target: NodeId,
    ) -> f64 {
        let mut found = f64::INFINITY;
        self.run(g, source, false, Some(&[target]), |node, d| {
            if node == target {
                found = d;
            }
        });
        found
    }
}

/// Hop distances from `source` (every edge length 1); u32::MAX = unreachable.
pub(crate) fn bfs_hops(adjacency: &[Vec<usize>], source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adjacency.len()];
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;
    while let Some(u) = queue.pop_front() {
        for &v in &adjacency[u] {
            if dist[v] == u32::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Plain usize adjacency lists over live edges, for hop-count algorithms.
pub(crate) fn unweighted_adjacency(g: &WeightedGraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.node_count()];
    for e in g.live_edges() {
        let (u, v) = g.endpoints(e);
        adj[u.index()].push(v.index());
        adj[v.index()].push(u.index());
    }
    adj
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1() -> WeightedGraph {
        // x1..x7 as 0..6: edges x1x3, x3x7 and the path x_i x_{i+1}
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

    #[test]
    fn parse_triangle() {
        let g = parse_edge_list("a b\nb c\na c", 1.0).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.live_edge_count(), 3);
        assert!(g.live_edges().all(|e| g.weight(e) == 1.0));
    }

    #[test]
    fn parse_duplicate_keeps_first_weight() {
        let g = parse_edge_list("a b 2.5\na b 3.0", 1.0).unwrap();
        assert_eq!(g.live_edge_count(), 1);
        let e = g.live_edges().next().unwrap();
        assert_eq!(g.weight(e), 2.5);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_edge_list("a b\nc\n", 1.0).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("a b\nb c x\n", 1.0).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("a b -1", 1.0).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_edge_list("a b 0", 1.0).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_edge_list("a a", 1.0).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_edge_list("a b nan", 1.0).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn parse_skips_comments_and_mixed_rows() {
        let g = parse_edge_list("# header\n% more\na b 2.0\n\nb c\n", 0.5).unwrap();
        assert_eq!(g.live_edge_count(), 2);
        let ab = g
            .find_edge(g.node_by_label("a").unwrap(), g.node_by_label("b").unwrap())
            .unwrap();
        let bc = g
            .find_edge(g.node_by_label("b").unwrap(), g.node_by_label("c").unwrap())
            .unwrap();
        assert_eq!(g.weight(ab), 2.0);
        assert_eq!(g.weight(bc), 0.5);
    }

    #[test]
    fn lcc_picks_larger_component() {
        let g = parse_edge_list("a b\nb c\na c\nx y", 1.0).unwrap();
        let lcc = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.node_count(), 3);
        assert_eq!(lcc.live_edge_count(), 3);
        assert!(lcc.node_by_label("a").is_some());
        assert!(lcc.node_by_label("x").is_none());
    }

    #[test]
    fn lcc_of_connected_graph_is_identity() {
        let g = example1();
        let lcc = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.node_count(), g.node_count());
        assert_eq!(lcc.live_edge_count(), g.live_edge_count());
    }

    #[test]
    fn lcc_tie_breaks_by_smallest_original_id() {
        // two K2 components; the one containing node 0 wins
        let g = WeightedGraph::from_edges(4, &[(2, 3, 1.0), (0, 1, 1.0)]).unwrap();
        let lcc = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.node_count(), 2);
        assert!(lcc.node_by_label("0").is_some());
    }

    #[test]
    fn components_deterministic_order() {
        let g = parse_edge_list("a b\nb c\na c\nx y", 1.0).unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].len(), 3);
        assert_eq!(comps[1].len(), 2);
        assert!(comps[0][0] < comps[1][0]);
    }

    #[test]
    fn six_isolated_nodes_are_six_singletons() {
        let mut g = WeightedGraph::from_edges(7, &[]).unwrap();
        let hub = NodeId(0);
        for i in 1..7u32 {
            g.add_edge(hub, NodeId(i), 1.0).unwrap();
        }
        for e in g.live_edges().collect::<Vec<_>>() {
            g.remove_edge(e).unwrap();
        }
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 7);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn distances_on_example1() {
        let g = example1();
        // source x4 (index 3): dist to x7 (index 6) is 2 via x3
        let oracle = shortest_path_distances(&g, NodeId(3), true);
        assert_eq!(oracle.distance(NodeId(6)), Some(2.0));
        assert_eq!(oracle.distance(NodeId(3)), Some(0.0));
    }

    #[test]
    fn distances_sum_weights() {
        let g = WeightedGraph::from_edges(3, &[(0, 1, 2.0), (1, 2, 2.0)]).unwrap();
        let oracle = shortest_path_distances(&g, NodeId(0), false);
        assert_eq!(oracle.distance(NodeId(2)), Some(4.0));
    }

    #[test]
    fn unreachable_is_none() {
        let g = WeightedGraph::from_edges(3, &[(0, 1, 1.0)]).unwrap();
        let oracle = shortest_path_distances(&g, NodeId(0), false);
        assert_eq!(oracle.distance(NodeId(2)), None);
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = example1();
        let tri: BTreeSet<NodeId> = [NodeId(0), NodeId(1), NodeId(2)].into();
        let sub = induced_subgraph(&g, &tri);
        assert_eq!(sub.node_count(), 3);
        assert_eq!(sub.live_edge_count(), 3);

        let all: BTreeSet<NodeId> = g.nodes().collect();
        let whole = induced_subgraph(&g, &all);
        assert_eq!(whole.live_edge_count(), g.live_edge_count());

        let path: BTreeSet<NodeId> = [NodeId(3), NodeId(4), NodeId(5), NodeId(6)].into();
        let sub = induced_subgraph(&g, &path);
        assert_eq!(sub.live_edge_count(), 3);
    }

    #[test]
    fn induced_subgraph_keeps_isolated_members() {
        let g = WeightedGraph::from_edges(3, &[(0, 1, 1.0)]).unwrap();
        let nodes: BTreeSet<NodeId> = [NodeId(0), NodeId(2)].into();
        let sub = induced_subgraph(&g, &nodes);
        assert_eq!(sub.node_count(), 2);
        assert_eq!(sub.live_edge_count(), 0);
    }

    #[test]
    fn edge_ids_are_tombstoned_not_reused() {
        let mut g = WeightedGraph::from_edges(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        g.remove_edge(EdgeId(0)).unwrap();
        assert!(!g.is_live(EdgeId(0)));
        let e = g.add_edge(NodeId(0), NodeId(2), 1.0).unwrap();
        assert_eq!(e, EdgeId(2));
        assert_eq!(g.endpoints(EdgeId(0)), (NodeId(0), NodeId(1)));
        assert!(g.remove_edge(EdgeId(0)).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = WeightedGraph::from_edges(2, &[]).unwrap();
        assert!(g.add_edge(NodeId(0), NodeId(0), 1.0).is_err());
        assert!(g.add_edge(NodeId(0), NodeId(1), 0.0).is_err());
        assert!(g.add_edge(NodeId(0), NodeId(1), f64::NAN).is_err());
        g.add_edge(NodeId(0), NodeId(1), 1.0).unwrap();
        assert!(g.add_edge(NodeId(1), NodeId(0), 2.0).is_err());
    }
}
