//! Seeded verification suites, the same ones `htg verify` runs.
//!
//!     cargo run --release --example verify_harness -- 50 7

use higman_thompson::verify::Harness;

fn main() {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let report = Harness::new(seed).run_all(trials);
    println!("{report}");
    eprintln!("{:.2}s", report.elapsed().as_secs_f64());
    std::process::exit(if report.passed() { 0 } else { 1 });
}
