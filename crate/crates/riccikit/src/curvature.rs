//! Ollivier and Lin-Lu-Yau edge curvature over a frozen graph snapshot.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DijkstraWorkspace, EdgeId, NodeId, WeightedGraph};
use crate::transport::{lazy_measure, wasserstein, DistanceMatrix};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurvatureKind {
    Ollivier { alpha: f64 },
    LinLuYau,
}

impl CurvatureKind {
    pub fn is_lly(&self) -> bool {
        matches!(self, CurvatureKind::LinLuYau)
    }
}

impl std::fmt::Display for CurvatureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CurvatureKind::Ollivier { alpha } => write!(f, "ollivier(alpha={alpha})"),
            CurvatureKind::LinLuYau => write!(f, "lin-lu-yau"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EdgeCurvature {
    pub edge: EdgeId,
    pub kappa: f64,
    /// Shortest-path distance between the endpoints under current weights;
    /// always <= the edge weight.
    pub rho: f64,
    pub kind: CurvatureKind,
}

/// Per-edge curvature of one snapshot.
#[derive(Debug, Clone)]
pub struct CurvatureField {
    pub iteration: u32,
    entries: BTreeMap<EdgeId, EdgeCurvature>,
}

impl CurvatureField {
    pub fn get(&self, e: EdgeId) -> Option<&EdgeCurvature> {
        self.entries.get(&e)
    }

    pub fn entries(&self) -> impl Iterator<Item = &EdgeCurvature> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn kappa_range(&self) -> Option<(f64, f64)> {
        let mut it = self.entries.values();
        let first = it.next()?.kappa;
        let mut lo = first;
        let mut hi = first;
        for c in it {
            lo = lo.min(c.kappa);
            hi = hi.max(c.kappa);
        }
        Some((lo, hi))
    }
}

/// Distances shared by every alpha evaluation on one edge: rows cover the
/// closed neighborhood of x, columns the closed neighborhood of y, which
/// covers the support of both lazy measures for any alpha.
struct EdgeTransportContext {
    x: NodeId,
    y: NodeId,
    dist: DistanceMatrix,
    rho: f64,
}

fn edge_context(
    g: &WeightedGraph,
    e: EdgeId,
    ws: &mut DijkstraWorkspace,
) -> Result<EdgeTransportContext> {
    if !g.is_live(e) {
        return Err(Error::Domain(format!("edge {e} is not live")));
    }
    let (x, y) = g.endpoints(e);
    let mut rows: Vec<NodeId> = vec![x];
    rows.extend(g.neighbors(x).map(|(z, _, _)| z));
    let mut cols: Vec<NodeId> = vec![y];
    cols.extend(g.neighbors(y).map(|(z, _, _)| z));
    let dist = DistanceMatrix::from_sources_with(ws, g, rows, cols);
    let rho = dist.get(x, y).expect("endpoints are row/column members");
    Ok(EdgeTransportContext { x, y, dist, rho })
}

fn ollivier_kappa(g: &WeightedGraph, ctx: &EdgeTransportContext, alpha: f64) -> Result<f64> {
    let mu_x = lazy_measure(g, ctx.x, alpha)?;
    let mu_y = lazy_measure(g, ctx.y, alpha)?;
    let (cost, _) = wasserstein(&ctx.dist, &mu_x, &mu_y)?;
    Ok(1.0 - cost / ctx.rho)
}

/// kappa = 1 - W(mu_x, mu_y) / rho on edge e = xy.
pub fn ollivier_curvature(g: &WeightedGraph, e: EdgeId, alpha: f64) -> Result<EdgeCurvature> {
    let mut ws = DijkstraWorkspace::new(g.node_count());
    ollivier_curvature_with(g, e, alpha, &mut ws)
}

fn ollivier_curvature_with(
    g: &WeightedGraph,
    e: EdgeId,
    alpha: f64,
    ws: &mut DijkstraWorkspace,
) -> Result<EdgeCurvature> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Config(format!("alpha must lie in [0, 1), got {alpha}")));
    }
    let ctx = edge_context(g, e, ws)?;
    let kappa = ollivier_kappa(g, &ctx, alpha).map_err(|err| err.on_edge(e))?;
    Ok(EdgeCurvature {
        edge: e,
        kappa,
        rho: ctx.rho,
        kind: CurvatureKind::Ollivier { alpha },
    })
}

const LLY_ALPHA_LO: f64 = 0.995;
const LLY_ALPHA_HI: f64 = 0.9999;
const LLY_AGREEMENT: f64 = 1e-6;
const LLY_REFINEMENTS: usize = 6;

/// Limit of kappa_alpha / (1 - alpha) as alpha approaches 1, detected by
/// evaluating the quotient at two points close to 1. The quotient is
/// piecewise linear in alpha and constant on the final piece, so agreement
/// of the two evaluations identifies the stable regime; on disagreement both
/// points are pushed toward 1 and retried.
pub fn lly_curvature(g: &WeightedGraph, e: EdgeId) -> Result<EdgeCurvature> {
    let mut ws = DijkstraWorkspace::new(g.node_count());
    lly_curvature_with(g, e, &mut ws)
}

fn lly_curvature_with(
    g: &WeightedGraph,
    e: EdgeId,
    ws: &mut DijkstraWorkspace,
) -> Result<EdgeCurvature> {
    let ctx = edge_context(g, e, ws)?;
    let mut lo = LLY_ALPHA_LO;
    let mut hi = LLY_ALPHA_HI;
    let mut last = (f64::NAN, f64::NAN);
    for _ in 0..=LLY_REFINEMENTS {
        let q_lo = ollivier_kappa(g, &ctx, lo).map_err(|err| err.on_edge(e))? / (1.0 - lo);
        let q_hi = ollivier_kappa(g, &ctx, hi).map_err(|err| err.on_edge(e))? / (1.0 - hi);
        if (q_lo - q_hi).abs() <= LLY_AGREEMENT {
            return Ok(EdgeCurvature {
                edge: e,
                kappa: q_hi,
                rho: ctx.rho,
                kind: CurvatureKind::LinLuYau,
            });
        }
        last = (q_lo, q_hi);
        lo = (lo + 1.0) / 2.0;
        hi = (hi + 1.0) / 2.0;
    }
    Err(Error::NumericInstability {
        first: last.0,
        second: last.1,
    }
    .on_edge(e))
}

pub fn edge_curvature(g: &WeightedGraph, e: EdgeId, kind: CurvatureKind) -> Result<EdgeCurvature> {
    match kind {
        CurvatureKind::Ollivier { alpha } => ollivier_curvature(g, e, alpha),
        CurvatureKind::LinLuYau => lly_curvature(g, e),
    }
}

/// Curvature of every live edge of one frozen snapshot. Edges are evaluated
/// in parallel with one shortest-path workspace per worker; each evaluation
/// only reads the snapshot, so the result is independent of the degree of
/// parallelism.
pub fn curvature_field(
    g: &WeightedGraph,
    kind: CurvatureKind,
    iteration: u32,
) -> Result<CurvatureField> {
    let live: Vec<EdgeId> = g.live_edges().collect();
    let computed: Vec<Result<EdgeCurvature>> = live
        .par_iter()
        .map_init(
            || DijkstraWorkspace::new(g.node_count()),
            |ws, &e| match kind {
                CurvatureKind::Ollivier { alpha } => ollivier_curvature_with(g, e, alpha, ws),
                CurvatureKind::LinLuYau => lly_curvature_with(g, e, ws),
            },
        )
        .collect();
    let mut entries = BTreeMap::new();
    for (e, result) in live.into_iter().zip(computed) {
        entries.insert(e, result?);
    }
    Ok(CurvatureField { iteration, entries })
}
