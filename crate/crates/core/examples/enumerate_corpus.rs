//! Enumerates connected labeled graphs and tabulates their domination
//! chromatic numbers by order.

use std::collections::BTreeMap;

use domchrom::generate::connected_graphs;
use domchrom::solver::{chi_dd_exact, Budget};

fn main() -> domchrom::Result<()> {
    for n in 1..=6 {
        let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
        let mut total = 0;
        for g in connected_graphs(n)? {
            let chi = chi_dd_exact(&g, Budget::default())?
                .chi_dd()
                .expect("solved");
            *histogram.entry(chi).or_default() += 1;
            total += 1;
        }
        let cells: Vec<String> = histogram.iter().map(|(k, c)| format!("{k}:{c}")).collect();
        println!(
            "n={n} graphs={total:<6} chi_dd histogram {}",
            cells.join(" ")
        );
    }
    Ok(())
}
