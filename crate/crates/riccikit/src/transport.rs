//! Probability measures of the lazy walk and exact Wasserstein-1 distance.
//!
//! The primary solver is a transportation simplex with Bland-style
//! tie-breaking, so plans are deterministic under a fixed input ordering.
//! [`wasserstein_oracle`] solves the same problem by successive shortest
//! augmenting paths on the bipartite flow network and shares no code with
//! the simplex; it exists to cross-check the primary solver in tests.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph::{DijkstraWorkspace, NodeId, WeightedGraph};

/// Probability distribution on nodes; entries are strictly positive and
/// sorted by node id, total mass 1 within 1e-12.
#[derive(Debug, Clone, PartialEq)]
pub struct Measure {
    entries: Vec<(NodeId, f64)>,
}

impl Measure {
    pub fn new(mut entries: Vec<(NodeId, f64)>) -> Result<Self> {
        entries.retain(|&(_, m)| m != 0.0);
        entries.sort_by_key(|&(n, _)| n);
        let mut total = 0.0;
        for window in entries.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(Error::Domain(format!(
                    "duplicate support node {} in measure",
                    window[0].0
                )));
            }
        }
        for &(_, m) in &entries {
            if !(m.is_finite() && m > 0.0) {
                return Err(Error::InfeasibleMeasure { total: m });
            }
            total += m;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InfeasibleMeasure { total });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(NodeId, f64)] {
        &self.entries
    }

    pub fn mass(&self, node: NodeId) -> f64 {
        self.entries
            .binary_search_by_key(&node, |&(n, _)| n)
            .map(|i| self.entries[i].1)
            .unwrap_or(0.0)
    }

    pub fn support(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.entries.iter().map(|&(n, _)| n)
    }
}

/// One-step distribution of the alpha-lazy walk at `x`: mass `alpha` stays,
/// the rest spreads over neighbors proportionally to edge weight.
pub fn lazy_measure(g: &WeightedGraph, x: NodeId, alpha: f64) -> Result<Measure> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Config(format!("alpha must lie in [0, 1], got {alpha}")));
    }
    let degree = g.degree(x);
    if degree == 0 {
        if alpha == 1.0 {
            return Measure::new(vec![(x, 1.0)]);
        }
        return Err(Error::UndefinedWalk { node: x.0 });
    }
    let weight_sum: f64 = g.neighbors(x).map(|(_, _, w)| w).sum();
    let mut entries = Vec::with_capacity(degree + 1);
    if alpha > 0.0 {
        entries.push((x, alpha));
    }
    for (z, _, w) in g.neighbors(x) {
        entries.push((z, (1.0 - alpha) * w / weight_sum));
    }
    Measure::new(entries)
}

/// Dense shortest-path distances from a row set to a column set.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    rows: Vec<NodeId>,
    cols: Vec<NodeId>,
    row_index: HashMap<NodeId, usize>,
    col_index: HashMap<NodeId, usize>,
    dist: Vec<f64>,
}

fn dedup_sorted(mut nodes: Vec<NodeId>) -> Vec<NodeId> {
    nodes.sort_unstable();
    nodes.dedup();
    nodes
}

impl DistanceMatrix {
    /// Square matrix over one node set: a single-source run from every
    /// listed node, early-stopped once the whole set is settled.
    pub fn for_nodes(g: &WeightedGraph, nodes: impl IntoIterator<Item = NodeId>) -> Self {
        let nodes: Vec<NodeId> = nodes.into_iter().collect();
        let mut ws = DijkstraWorkspace::new(g.node_count());
        Self::from_sources_with(&mut ws, g, nodes.clone(), nodes)
    }

    /// Rectangular matrix: one single-source run per row node, early-stopped
    /// once every column node is settled.
    pub fn from_sources(
        g: &WeightedGraph,
        rows: impl IntoIterator<Item = NodeId>,
        cols: impl IntoIterator<Item = NodeId>,
    ) -> Self {
        let mut ws = DijkstraWorkspace::new(g.node_count());
        Self::from_sources_with(&mut ws, g, rows.into_iter().collect(), cols.into_iter().collect())
    }

    pub(crate) fn from_sources_with(
        ws: &mut DijkstraWorkspace,
        g: &WeightedGraph,
        rows: Vec<NodeId>,
        cols: Vec<NodeId>,
    ) -> Self {
        let rows = dedup_sorted(rows);
        let cols = dedup_sorted(cols);
        let row_index: HashMap<NodeId, usize> =
            rows.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let col_index: HashMap<NodeId, usize> =
            cols.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let nc = cols.len();
        let mut dist = vec![f64::INFINITY; rows.len() * nc];
        for (i, &source) in rows.iter().enumerate() {
            let row = &mut dist[i * nc..(i + 1) * nc];
            ws.run(g, source, false, Some(&cols), |node, d| {
                if let Some(&j) = col_index.get(&node) {
                    row[j] = d;
                }
            });
        }
        Self { rows, cols, row_index, col_index, dist }
    }

    pub fn from_fn(nodes: Vec<NodeId>, f: impl Fn(NodeId, NodeId) -> f64) -> Self {
        let nodes = dedup_sorted(nodes);
        let index: HashMap<NodeId, usize> =
            nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let k = nodes.len();
        let mut dist = vec![f64::INFINITY; k * k];
        for i in 0..k {
            for j in 0..k {
                dist[i * k + j] = f(nodes[i], nodes[j]);
            }
        }
        Self {
            rows: nodes.clone(),
            cols: nodes,
            row_index: index.clone(),
            col_index: index,
            dist,
        }
    }

    pub fn get(&self, u: NodeId, v: NodeId) -> Option<f64> {
        let i = *self.row_index.get(&u)?;
        let j = *self.col_index.get(&v)?;
        Some(self.dist[i * self.cols.len() + j])
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.rows
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransportFlow {
    pub from: NodeId,
    pub to: NodeId,
    pub mass: f64,
}

#[derive(Debug, Clone)]
pub struct TransportPlan {
    pub flows: Vec<TransportFlow>,
    pub cost: f64,
}

/// Threshold below which a reduced cost counts as zero.
const REDUCED_COST_EPS: f64 = 1e-12;
/// Flows smaller than this are treated as empty when assembling plans.
const FLOW_EPS: f64 = 1e-15;
const MAX_PIVOTS: usize = 100_000;

fn cost_table(dist: &DistanceMatrix, mu1: &Measure, mu2: &Measure) -> Result<Vec<f64>> {
    let nr = mu1.entries().len();
    let nc = mu2.entries().len();
    if nr == 0 || nc == 0 {
        return Err(Error::InfeasibleMeasure { total: 0.0 });
    }
    let mut cost = vec![0.0; nr * nc];
    for (i, &(u, _)) in mu1.entries().iter().enumerate() {
        for (j, &(v, _)) in mu2.entries().iter().enumerate() {
            let d = dist.get(u, v).ok_or_else(|| {
                Error::Config(format!("distance matrix does not cover pair {u}-{v}"))
            })?;
            if !d.is_finite() {
                return Err(Error::DisconnectedSupport);
            }
            cost[i * nc + j] = d;
        }
    }
    Ok(cost)
}

/// Exact optimal transport between `mu1` and `mu2` under the supplied
/// distances. Returns the optimal cost and a plan whose marginals reproduce
/// the two measures.
pub fn wasserstein(
    dist: &DistanceMatrix,
    mu1: &Measure,
    mu2: &Measure,
) -> Result<(f64, TransportPlan)> {
    let cost = cost_table(dist, mu1, mu2)?;
    let supplies: Vec<f64> = mu1.entries().iter().map(|&(_, m)| m).collect();
    let demands: Vec<f64> = mu2.entries().iter().map(|&(_, m)| m).collect();
    let basis = transportation_simplex(&supplies, &demands, &cost)?;

    let nc = demands.len();
    let mut flows = Vec::new();
    let mut total = 0.0;
    for (&(i, j), &f) in &basis {
        total += f * cost[i * nc + j];
        if f > FLOW_EPS {
            flows.push(TransportFlow {
                from: mu1.entries()[i].0,
                to: mu2.entries()[j].0,
                mass: f,
            });
        }
    }
    Ok((total, TransportPlan { flows, cost: total }))
}

/// Transportation simplex over the dense bipartite problem. Basic cells are
/// kept in a `BTreeMap` so iteration order, and therefore the returned plan,
/// is deterministic. Entering cells follow Bland's rule (first negative
/// reduced cost in row-major order).
fn transportation_simplex(
    supplies: &[f64],
    demands: &[f64],
    cost: &[f64],
) -> Result<BTreeMap<(usize, usize), f64>> {
    let nr = supplies.len();
    let nc = demands.len();

    // Northwest-corner initial basis: a staircase walk visiting exactly
    // nr + nc - 1 cells, possibly with zero flow on degenerate steps.
    let mut basis: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    {
        let mut a = supplies.to_vec();
        let mut b = demands.to_vec();
        let (mut i, mut j) = (0usize, 0usize);
        loop {
            let f = a[i].min(b[j]);
            basis.insert((i, j), f);
            a[i] -= f;
            b[j] -= f;
            if i == nr - 1 && j == nc - 1 {
                break;
            }
            if a[i] <= 0.0 && i + 1 < nr {
                i += 1;
            } else {
                j += 1;
            }
        }
    }

    for _pivot in 0..MAX_PIVOTS {
        // Dual potentials from the basis tree (u[0] = 0).
        let (urow, vcol) = potentials(&basis, cost, nr, nc)?;

        // Entering cell: first strictly improving reduced cost.
        let mut entering = None;
        'scan: for i in 0..nr {
            for j in 0..nc {
                if basis.contains_key(&(i, j)) {
                    continue;
                }
                if cost[i * nc + j] - urow[i] - vcol[j] < -REDUCED_COST_EPS {
                    entering = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((ei, ej)) = entering else {
            return Ok(basis);
        };

        // Unique cycle: entering cell plus the tree path from its column
        // back to its row. Cells at odd path positions give up flow.
        let path = tree_path(&basis, nr, ej, ei);
        let mut theta = f64::INFINITY;
        let mut leaving = None;
        for (pos, &cell) in path.iter().enumerate() {
            if pos % 2 == 0 {
                let f = basis[&cell];
                if f < theta {
                    theta = f;
                    leaving = Some(cell);
                }
            }
        }
        let leaving = leaving.ok_or_else(|| Error::Domain("degenerate transport cycle".into()))?;

        for (pos, &cell) in path.iter().enumerate() {
            let entry = basis.get_mut(&cell).expect("path cells are basic");
            if pos % 2 == 0 {
                *entry -= theta;
                if *entry < 0.0 {
                    *entry = 0.0;
                }
            } else {
                *entry += theta;
            }
        }
        basis.remove(&leaving);
        basis.insert((ei, ej), theta);
    }
    Err(Error::Domain("transport solver exceeded pivot budget".into()))
}

/// Solves u_i + v_j = c_ij over the basis tree by breadth-first traversal.
fn potentials(
    basis: &BTreeMap<(usize, usize), f64>,
    cost: &[f64],
    nr: usize,
    nc: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut row_cells: Vec<Vec<usize>> = vec![Vec::new(); nr];
    let mut col_cells: Vec<Vec<usize>> = vec![Vec::new(); nc];
    for &(i, j) in basis.keys() {
        row_cells[i].push(j);
        col_cells[j].push(i);
    }
    let mut urow = vec![f64::NAN; nr];
    let mut vcol = vec![f64::NAN; nc];
    urow[0] = 0.0;
    // nodes: rows 0..nr, cols nr..nr+nc
    let mut stack = vec![0usize];
    while let Some(node) = stack.pop() {
        if node < nr {
            for &j in &row_cells[node] {
                if vcol[j].is_nan() {
                    vcol[j] = cost[node * nc + j] - urow[node];
                    stack.push(nr + j);
                }
            }
        } else {
            let j = node - nr;
            for &i in &col_cells[j] {
                if urow[i].is_nan() {
                    urow[i] = cost[i * nc + j] - vcol[j];
                    stack.push(i);
                }
            }
        }
    }
    if urow.iter().any(|u| u.is_nan()) || vcol.iter().any(|v| v.is_nan()) {
        return Err(Error::Domain("transport basis is not spanning".into()));
    }
    Ok((urow, vcol))
}

/// Path of basic cells from column `start_col` to row `end_row` in the basis
/// tree. The first cell shares `start_col`; consecutive cells alternate
/// sharing a row and a column.
fn tree_path(
    basis: &BTreeMap<(usize, usize), f64>,
    nr: usize,
    start_col: usize,
    end_row: usize,
) -> Vec<(usize, usize)> {
    let mut row_cells: Vec<Vec<usize>> = vec![Vec::new(); nr];
    let mut col_cells: Vec<Vec<usize>> = Vec::new();
    for &(i, j) in basis.keys() {
        row_cells[i].push(j);
        if col_cells.len() <= j {
            col_cells.resize(j + 1, Vec::new());
        }
        col_cells[j].push(i);
    }
    let nc = col_cells.len();
    // nodes: rows 0..nr, cols nr..nr+nc; parent edge = basic cell used
    let total = nr + nc;
    let mut parent: Vec<Option<(usize, (usize, usize))>> = vec![None; total];
    let mut seen = vec![false; total];
    let start = nr + start_col;
    seen[start] = true;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(node) = queue.pop_front() {
        if node == end_row {
            break;
        }
        if node < nr {
            for &j in &row_cells[node] {
                let next = nr + j;
                if !seen[next] {
                    seen[next] = true;
                    parent[next] = Some((node, (node, j)));
                    queue.push_back(next);
                }
            }
        } else {
            let j = node - nr;
            for &i in &col_cells[j] {
                if !seen[i] {
                    seen[i] = true;
                    parent[i] = Some((node, (i, j)));
                    queue.push_back(i);
                }
            }
        }
    }
    let mut path = Vec::new();
    let mut node = end_row;
    while node != start {
        let (prev, cell) = parent[node].expect("basis tree is connected");
        path.push(cell);
        node = prev;
    }
    path.reverse();
    path
}

/// Independent exact solver: successive shortest augmenting paths with
/// Johnson potentials on the bipartite flow network. Used to cross-check
/// [`wasserstein`]; returns the optimal cost only.
pub fn wasserstein_oracle(dist: &DistanceMatrix, mu1: &Measure, mu2: &Measure) -> Result<f64> {
    let cost = cost_table(dist, mu1, mu2)?;
    let nr = mu1.entries().len();
    let nc = mu2.entries().len();
    let source = nr + nc;
    let sink = nr + nc + 1;
    let nodes = nr + nc + 2;

    struct Arc {
        to: usize,
        cap: f64,
        cost: f64,
        flow: f64,
    }
    let mut arcs: Vec<Arc> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let add_arc = |arcs: &mut Vec<Arc>, adj: &mut Vec<Vec<usize>>, u: usize, v: usize, cap: f64, cost: f64| {
        adj[u].push(arcs.len());
        arcs.push(Arc { to: v, cap, cost, flow: 0.0 });
        adj[v].push(arcs.len());
        arcs.push(Arc { to: u, cap: 0.0, cost: -cost, flow: 0.0 });
    };

    for (i, &(_, m)) in mu1.entries().iter().enumerate() {
        add_arc(&mut arcs, &mut adj, source, i, m, 0.0);
    }
    for (j, &(_, m)) in mu2.entries().iter().enumerate() {
        add_arc(&mut arcs, &mut adj, nr + j, sink, m, 0.0);
    }
    for i in 0..nr {
        for j in 0..nc {
            add_arc(&mut arcs, &mut adj, i, nr + j, f64::INFINITY, cost[i * nc + j]);
        }
    }

    let mut potential = vec![0.0f64; nodes];
    let mut remaining = 1.0f64;
    for _round in 0..MAX_PIVOTS {
        if remaining <= 1e-12 {
            break;
        }
        // Dijkstra over reduced costs; graphs here are tiny, so the dense
        // O(V^2) scan is fine.
        let mut dist_to = vec![f64::INFINITY; nodes];
        let mut settled = vec![false; nodes];
        let mut via: Vec<Option<usize>> = vec![None; nodes];
        dist_to[source] = 0.0;
        loop {
            let mut best = None;
            let mut best_d = f64::INFINITY;
            for v in 0..nodes {
                if !settled[v] && dist_to[v] < best_d {
                    best_d = dist_to[v];
                    best = Some(v);
                }
            }
            let Some(u) = best else { break };
            settled[u] = true;
            for &ai in &adj[u] {
                let arc = &arcs[ai];
                if arc.cap - arc.flow <= FLOW_EPS {
                    continue;
                }
                let reduced = arc.cost + potential[u] - potential[arc.to];
                let nd = dist_to[u] + reduced.max(0.0);
                if nd < dist_to[arc.to] {
                    dist_to[arc.to] = nd;
                    via[arc.to] = Some(ai);
                }
            }
        }
        if !dist_to[sink].is_finite() {
            return Err(Error::DisconnectedSupport);
        }
        for v in 0..nodes {
            if dist_to[v].is_finite() {
                potential[v] += dist_to[v];
            }
        }
        let mut bottleneck = remaining;
        let mut v = sink;
        while v != source {
            let ai = via[v].expect("path exists");
            bottleneck = bottleneck.min(arcs[ai].cap - arcs[ai].flow);
            v = arcs[ai ^ 1].to;
        }
        let mut v = sink;
        while v != source {
            let ai = via[v].expect("path exists");
            arcs[ai].flow += bottleneck;
            arcs[ai ^ 1].flow -= bottleneck;
            v = arcs[ai ^ 1].to;
        }
        remaining -= bottleneck;
    }
    if remaining > 1e-9 {
        return Err(Error::Domain("oracle failed to route all mass".into()));
    }
    let total = arcs
        .iter()
        .step_by(2)
        .map(|a| a.flow.max(0.0) * a.cost)
        .sum();
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;

    fn figure1() -> WeightedGraph {
        // inner triangle 0,1,2 with spokes 0-3, 1-4, 2-5
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

    fn figure4() -> WeightedGraph {
        // hub 0; pairs (1,2), (3,4), (5,6), (7,8) joined to the hub and
        // to each other
        let mut edges = Vec::new();
        for k in 0..4u32 {
            let a = 1 + 2 * k;
            let b = 2 + 2 * k;
            edges.push((0, a, 1.0));
            edges.push((0, b, 1.0));
            edges.push((a, b, 1.0));
        }
        WeightedGraph::from_edges(9, &edges).unwrap()
    }

    fn matrix_for(g: &WeightedGraph, mus: &[&Measure]) -> DistanceMatrix {
        let nodes: Vec<NodeId> = mus.iter().flat_map(|m| m.support()).collect();
        DistanceMatrix::for_nodes(g, nodes)
    }

    #[test]
    fn lazy_measure_k2() {
        let g = WeightedGraph::from_edges(2, &[(0, 1, 1.0)]).unwrap();
        let mu = lazy_measure(&g, NodeId(0), 0.1).unwrap();
        assert_eq!(mu.entries(), &[(NodeId(0), 0.1), (NodeId(1), 0.9)]);
    }

    #[test]
    fn lazy_measure_star_center() {
        let mut g = WeightedGraph::from_edges(7, &[]).unwrap();
        for i in 1..7u32 {
            g.add_edge(NodeId(0), NodeId(i), 1.0).unwrap();
        }
        let mu = lazy_measure(&g, NodeId(0), 0.1).unwrap();
        assert!((mu.mass(NodeId(0)) - 0.1).abs() < 1e-15);
        for i in 1..7u32 {
            assert!((mu.mass(NodeId(i)) - 0.15).abs() < 1e-15);
        }
    }

    #[test]
    fn lazy_measure_weight_proportional() {
        let g = WeightedGraph::from_edges(3, &[(0, 1, 1.0), (1, 2, 3.0)]).unwrap();
        let mu = lazy_measure(&g, NodeId(1), 0.0).unwrap();
        assert!((mu.mass(NodeId(0)) - 0.25).abs() < 1e-15);
        assert!((mu.mass(NodeId(2)) - 0.75).abs() < 1e-15);
        assert_eq!(mu.mass(NodeId(1)), 0.0);
    }

    #[test]
    fn lazy_measure_degree_zero() {
        let g = WeightedGraph::from_edges(1, &[]).unwrap();
        assert!(matches!(
            lazy_measure(&g, NodeId(0), 0.5),
            Err(Error::UndefinedWalk { node: 0 })
        ));
        let mu = lazy_measure(&g, NodeId(0), 1.0).unwrap();
        assert_eq!(mu.entries(), &[(NodeId(0), 1.0)]);
    }

    #[test]
    fn wasserstein_identity_is_zero() {
        let g = figure1();
        let mu = lazy_measure(&g, NodeId(0), 0.1).unwrap();
        let dist = matrix_for(&g, &[&mu]);
        let (cost, plan) = wasserstein(&dist, &mu, &mu).unwrap();
        assert!(cost.abs() < 1e-12, "cost {cost}");
        for f in &plan.flows {
            assert_eq!(f.from, f.to);
        }
    }

    #[test]
    fn wasserstein_figure1_edge() {
        let g = figure1();
        let mu1 = lazy_measure(&g, NodeId(0), 0.1).unwrap();
        let mu2 = lazy_measure(&g, NodeId(1), 0.1).unwrap();
        let dist = matrix_for(&g, &[&mu1, &mu2]);
        let (cost, _) = wasserstein(&dist, &mu1, &mu2).unwrap();
        assert!((cost - 0.7).abs() < 1e-12, "cost {cost}");
        let oracle = wasserstein_oracle(&dist, &mu1, &mu2).unwrap();
        assert!((oracle - 0.7).abs() < 1e-12, "oracle {oracle}");
    }

    #[test]
    fn wasserstein_figure4_outer_edge() {
        let g = figure4();
        let mu1 = lazy_measure(&g, NodeId(1), 0.1).unwrap();
        let mu2 = lazy_measure(&g, NodeId(2), 0.1).unwrap();
        let dist = matrix_for(&g, &[&mu1, &mu2]);
        let (cost, _) = wasserstein(&dist, &mu1, &mu2).unwrap();
        assert!((cost - 0.35).abs() < 1e-12, "cost {cost}");
        let oracle = wasserstein_oracle(&dist, &mu1, &mu2).unwrap();
        assert!((oracle - cost).abs() < 1e-12);
    }

    #[test]
    fn point_masses_cost_their_distance() {
        let g = WeightedGraph::from_edges(3, &[(0, 1, 2.0), (1, 2, 2.0)]).unwrap();
        let mu1 = Measure::new(vec![(NodeId(0), 1.0)]).unwrap();
        let mu2 = Measure::new(vec![(NodeId(2), 1.0)]).unwrap();
        let dist = DistanceMatrix::for_nodes(&g, [NodeId(0), NodeId(2)]);
        let (cost, plan) = wasserstein(&dist, &mu1, &mu2).unwrap();
        assert!((cost - 4.0).abs() < 1e-12);
        assert_eq!(plan.flows.len(), 1);
        assert!((wasserstein_oracle(&dist, &mu1, &mu2).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn disconnected_support_errors() {
        let g = WeightedGraph::from_edges(4, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        let mu1 = Measure::new(vec![(NodeId(0), 1.0)]).unwrap();
        let mu2 = Measure::new(vec![(NodeId(2), 1.0)]).unwrap();
        let dist = DistanceMatrix::for_nodes(&g, [NodeId(0), NodeId(2)]);
        assert!(matches!(
            wasserstein(&dist, &mu1, &mu2),
            Err(Error::DisconnectedSupport)
        ));
        assert!(matches!(
            wasserstein_oracle(&dist, &mu1, &mu2),
            Err(Error::DisconnectedSupport)
        ));
    }

    #[test]
    fn measure_rejects_bad_mass() {
        assert!(Measure::new(vec![(NodeId(0), 0.5)]).is_err());
        assert!(Measure::new(vec![(NodeId(0), -0.2), (NodeId(1), 1.2)]).is_err());
        assert!(Measure::new(vec![(NodeId(0), 0.5), (NodeId(0), 0.5)]).is_err());
    }

    #[test]
    fn plan_marginals_match_measures() {
        let g = figure1();
        let mu1 = lazy_measure(&g, NodeId(0), 0.1).unwrap();
        let mu2 = lazy_measure(&g, NodeId(3), 0.1).unwrap();
        let dist = matrix_for(&g, &[&mu1, &mu2]);
        let (_, plan) = wasserstein(&dist, &mu1, &mu2).unwrap();
        let mut row: HashMap<NodeId, f64> = HashMap::new();
        let mut col: HashMap<NodeId, f64> = HashMap::new();
        for f in &plan.flows {
            *row.entry(f.from).or_default() += f.mass;
            *col.entry(f.to).or_default() += f.mass;
        }
        for &(n, m) in mu1.entries() {
            assert!((row.get(&n).copied().unwrap_or(0.0) - m).abs() < 1e-9);
        }
        for &(n, m) in mu2.entries() {
            assert!((col.get(&n).copied().unwrap_or(0.0) - m).abs() < 1e-9);
        }
    }
}
