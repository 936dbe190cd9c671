//! Checks all six bounds over every connected graph of order at most 5 and
//! prints the aggregated report.
//!
//! Pass an order cap as the first argument to change the corpus, e.g.
//! `cargo run --release --example verify_theorems -- 6`.

use domchrom::generate::connected_graphs_up_to;
use domchrom::harness::{run_corpus, HarnessConfig};

fn main() -> domchrom::Result<()> {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let graphs = connected_graphs_up_to(1, n_max)?;
    let report = run_corpus(
        &graphs,
        &format!("connected graphs, n <= {n_max}"),
        HarnessConfig::default(),
    )?;
    print!("{}", report.to_text());
    eprintln!("elapsed {} ms", report.elapsed_ms.unwrap_or(0));
    if !report.is_clean() {
        std::process::exit(1);
    }
    Ok(())
}
