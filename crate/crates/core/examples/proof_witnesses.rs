//! Running the recoloring constructions and showing a validated outcome and
//! a gap side by side.

use domchrom::coloring::Coloring;
use domchrom::graph::Graph;
use domchrom::graph6::parse_graph6;
use domchrom::solver::{chi_dd_exact, Budget};
use domchrom::witness::{extend_witness, reduce_witness, ExtendKind, ReduceKind, WitnessOutcome};

fn show(label: &str, o: &WitnessOutcome) {
    println!(
        "{label}: {:?} via \"{}\" -> {} ({} colors, bound {})",
        o.status, o.case, o.coloring, o.colors_used, o.color_bound
    );
    if let Some(gap) = &o.gap {
        println!("    gap: {}", gap.diagnostic);
    }
}

fn main() -> domchrom::Result<()> {
    // Restoring a leaf of P3: the base coloring lives on P3 - 2 = P2.
    let p3 = Graph::path(3)?;
    let base: Coloring = "0,1".parse()?;
    show(
        "add vertex 2 to P2",
        &extend_witness(&ExtendKind::AddVertex { vertex: 2 }, &p3, &base)?,
    );

    // Deleting the hub of a star forces every leaf into its own class.
    let star = Graph::star(3)?;
    let base: Coloring = "0,1,1,1".parse()?;
    show(
        "remove hub of K1,3",
        &reduce_witness(&ReduceKind::RemoveVertex { vertex: 0 }, &star, &base)?,
    );

    // Some removals are not covered by the case analysis. In this graph the
    // construction for deleting vertex 3 leaves vertices 0 and 2 dominating
    // no class.
    let g = parse_graph6("DLo")?;
    let base = chi_dd_exact(&g, Budget::default())?.witness;
    println!("base coloring of DLo: {base}");
    show(
        "remove vertex 3 of DLo",
        &reduce_witness(&ReduceKind::RemoveVertex { vertex: 3 }, &g, &base)?,
    );

    // Adding a hub over C4.
    let c4 = Graph::cycle(4)?;
    let base: Coloring = "0,1,0,1".parse()?;
    let cycle = domchrom::CycleSpec::new(&c4, vec![0, 1, 2, 3])?;
    show(
        "hub over C4",
        &extend_witness(&ExtendKind::CycleExtend { cycle }, &c4, &base)?,
    );
    Ok(())
}
