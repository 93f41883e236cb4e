use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use riccikit::detect::{detect_core, CoreConfig};
use riccikit::graph::{NodeId, WeightedGraph};
use riccikit::metrics::metrics_report;
use riccikit::centrality::{centrality, connected_top_k, CentralityMethod};

fn main() {
    // synthetic core-periphery graph at Cora scale: a dense 300-node core,
    // 2200 periphery nodes attached by 1-2 edges
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let n_core = 300usize;
    let n_per = 2200usize;
    let n = n_core + n_per;
    let mut g = WeightedGraph::from_edges(n, &[]).unwrap();
    // core: ring + random chords
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
    // periphery chains
    for p in 0..n_per {
        let node = (n_core + p) as u32;
        let anchor = if p < 200 { rng.gen_range(0..n_core) as u32 } else { (n_core + rng.gen_range(0..p)) as u32 };
        let _ = g.add_edge(NodeId(node), NodeId(anchor), 1.0);
    }
    println!("graph: {} nodes, {} edges", g.node_count(), g.live_edge_count());

    let t = std::time::Instant::now();
    let config = CoreConfig { iterations: 50, removal_fraction: 0.8, step_size: 0.1, alpha: 0.8, core_budget: None };
    let result = detect_core(&g, &config).unwrap();
    println!("detect_core: {:.1}s, core {} nodes", t.elapsed().as_secs_f64(), result.core_nodes.len());

    let t = std::time::Instant::now();
    let metrics = metrics_report(&g, &result.core_nodes).unwrap();
    println!("metrics: {:.1}s, r_d={:.3} r_s={:?}", t.elapsed().as_secs_f64(), metrics.r_d, metrics.r_s);

    let k = result.core_nodes.len().max(1);
    for method in [CentralityMethod::Degree, CentralityMethod::Betweenness, CentralityMethod::Closeness, CentralityMethod::pagerank_default()] {
        let t = std::time::Instant::now();
        let scores = centrality(&g, method).unwrap();
        let group = connected_top_k(&g, &scores, k).unwrap();
        let m = metrics_report(&g, &group).unwrap();
        println!("{}: {:.1}s, r_d={:.3} r_s={:?}", method.name(), t.elapsed().as_secs_f64(), m.r_d, m.r_s);
    }
}
