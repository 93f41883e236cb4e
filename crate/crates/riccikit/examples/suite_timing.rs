fn main() {
    let start = std::time::Instant::now();
    let mut total_violations = 0;
    let mut total_runs = 0;
    for row in riccikit::ensemble::suite_rows(4.0) {
        let t = std::time::Instant::now();
        let runs = riccikit::ensemble::run_suite_row(row, 7, 50, 30).unwrap();
        total_runs += runs.len();
        let v: usize = runs.iter().map(|r| r.violations).sum();
        let errs: usize = runs.iter().filter(|r| r.error.is_some()).count();
        total_violations += v;
        println!("{:?} lly={} -> {} runs, {} violations, {} errors, {:.2}s",
                 row.variant, row.lly, runs.len(), v, errs, t.elapsed().as_secs_f64());
        for r in runs.iter().filter(|r| r.error.is_some()).take(3) {
            println!("   err graph {}: {:?}", r.graph_index, r.error);
        }
    }
    println!("TOTAL: {} runs, {} violations, {:.2}s", total_runs, total_violations, start.elapsed().as_secs_f64());
}
