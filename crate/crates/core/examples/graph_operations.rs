//! The graph operations and how their id maps relate source and result.

use domchrom::graph::Graph;
use domchrom::graph6::to_graph6;
use domchrom::ops;
use domchrom::structure::{bridges, cut_vertices, enumerate_cycles};

fn describe(label: &str, g: &Graph) {
    println!(
        "{label:<28} {:<8} n={} m={} {g:?}",
        to_graph6(g),
        g.order(),
        g.size()
    );
}

fn main() -> domchrom::Result<()> {
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])?;
    describe("G", &g);
    println!(
        "cut vertices {:?}, bridges {:?}",
        cut_vertices(&g)?,
        bridges(&g)?
    );

    let t = ops::remove_vertex(&g, 2)?;
    describe("G - 2", &t.graph);
    println!("  id map {:?}", t.vertex_map);

    describe("G - 3-4", &ops::remove_edge(&g, 3, 4)?);

    let t = ops::contract_edge(&g, 2, 3)?;
    describe("G contract 2-3", &t.graph);
    println!("  id map {:?}", t.vertex_map);

    let t = ops::contract_vertices(&g, 0, 4)?;
    describe("G merge {0,4}", &t.graph);
    println!("  id map {:?}", t.vertex_map);

    let (s, map) = ops::subdivide(&g, 2)?;
    describe("S_2(G)", &s);
    for e in &map.superedges {
        println!(
            "  {}-{} becomes path {:?}",
            e.endpoints.0, e.endpoints.1, e.path
        );
    }

    let triangle = enumerate_cycles(&g, 3)
        .into_iter()
        .next()
        .expect("G has a triangle");
    let w = ops::cycle_extend(&g, &triangle)?;
    describe("hub over cycle 0-1-2", &w);
    println!("  hub {} has degree {}", g.order(), w.degree(g.order()));
    Ok(())
}
