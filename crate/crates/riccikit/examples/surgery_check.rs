use riccikit::curvature::CurvatureKind;
use riccikit::flow::{run_flow, FlowConfig, FlowVariant};
use riccikit::ensemble::random_connected_graph;
use rand::SeedableRng;

fn main() {
    // confirm theta-surgery fires somewhere in the ensemble and that flows move weights
    let mut total_removed = 0;
    let mut max_rel_change: f64 = 0.0;
    for i in 0..50u64 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1000 + i);
        let g = random_connected_graph(&mut rng, 12);
        let m = g.live_edge_count();
        let s = riccikit::flow::step_size_bound(FlowVariant::NiReset, CurvatureKind::Ollivier { alpha: 0.1 }, m, None).unwrap() / 2.0;
        let config = FlowConfig::new(FlowVariant::NiReset, CurvatureKind::Ollivier { alpha: 0.1 }, s, 30).with_surgery(4.0);
        let traj = run_flow(&g, &config).unwrap();
        for step in &traj.steps { total_removed += step.removed.len(); }
        for (e, w0) in &traj.initial_weights {
            if traj.terminal.is_live(*e) {
                let w1 = traj.terminal.weight(*e);
                max_rel_change = max_rel_change.max(((w1 - w0) / w0).abs());
            }
        }
    }
    println!("ni-reset: {} surgery removals across ensemble, max relative weight change {:.3}", total_removed, max_rel_change);
}
