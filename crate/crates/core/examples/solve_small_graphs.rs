//! Exact domination chromatic numbers of a few named graphs, each checked
//! against the brute-force oracle.
//!
//! Run with `cargo run --example solve_small_graphs`.

use domchrom::graph::Graph;
use domchrom::solver::{chi_dd_exact, chi_dd_oracle, Budget};

fn main() -> domchrom::Result<()> {
    let wheel4 = Graph::from_edges(
        5,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 0),
            (4, 1),
            (4, 2),
            (4, 3),
        ],
    )?;
    let graphs = [
        ("P4", Graph::path(4)?),
        ("C5", Graph::cycle(5)?),
        ("C6", Graph::cycle(6)?),
        ("K5", Graph::complete(5)?),
        ("K1,3", Graph::star(3)?),
        ("W4", wheel4),
    ];
    println!(
        "{:<6} {:>6} {:>6} {:>8}  witness",
        "graph", "chi_dd", "oracle", "nodes"
    );
    for (name, g) in &graphs {
        let r = chi_dd_exact(g, Budget::default())?;
        let chi = r
            .chi_dd()
            .expect("small graphs solve within the default budget");
        let oracle = chi_dd_oracle(g)?;
        assert_eq!(chi, oracle);
        println!(
            "{name:<6} {chi:>6} {oracle:>6} {:>8}  {}",
            r.stats.nodes, r.witness
        );
    }
    Ok(())
}
