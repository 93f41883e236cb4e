use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use riccikit::curvature::{curvature_field, CurvatureKind};
use riccikit::flow::{flow_step, FlowConfig, FlowVariant};
use riccikit::graph::{NodeId, WeightedGraph};

fn build(n_core: usize, n_per: usize, seed: u64) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n_core + n_per;
    let mut g = WeightedGraph::from_edges(n, &[]).unwrap();
    for i in 0..n_core {
        let j = (i + 1) % n_core;
        let _ = g.add_edge(NodeId(i as u32), NodeId(j as u32), 1.0);
    }
    for _ in 0..1500 {
        let u = rng.gen_range(0..n_core);
        let v = rng.gen_range(0..n_core);
        if u != v && g.find_edge(NodeId(u as u32), NodeId(v as u32)).is_none() {
            g.add_edge(NodeId(u as u32), NodeId(v as u32), 1.0).unwrap();
        }
    }
    for p in 0..n_per {
        let node = (n_core + p) as u32;
        let anchor = if p < 200 { rng.gen_range(0..n_core) as u32 } else { (n_core + rng.gen_range(0..p)) as u32 };
        let _ = g.add_edge(NodeId(node), NodeId(anchor), 1.0);
    }
    g
}

fn main() {
    let g = build(300, 2200, 99);
    println!("graph: {} nodes, {} edges", g.node_count(), g.live_edge_count());
    let kind = CurvatureKind::Ollivier { alpha: 0.8 };
    let config = FlowConfig::new(FlowVariant::RhoDriven, kind, 0.1, 1);
    let mut working = g.clone();
    for j in 0..5 {
        let t = std::time::Instant::now();
        let field = curvature_field(&working, kind, j).unwrap();
        let tf = t.elapsed().as_secs_f64();
        let t = std::time::Instant::now();
        flow_step(&mut working, &field, &config).unwrap();
        let ts = t.elapsed().as_secs_f64();
        let (kmin, kmax) = field.kappa_range().unwrap();
        let wmin = working.live_edges().map(|e| working.weight(e)).fold(f64::INFINITY, f64::min);
        let wmax = working.live_edges().map(|e| working.weight(e)).fold(0.0f64, f64::max);
        println!("iter {j}: curvature {tf:.2}s step {ts:.4}s kappa [{kmin:.3}, {kmax:.3}] w [{wmin:.4}, {wmax:.4}]");
    }
}
