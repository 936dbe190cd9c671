//! Reading and writing graph6.

use domchrom::graph::Graph;
use domchrom::graph6::{parse_graph6, parse_lines, to_graph6};

fn main() -> domchrom::Result<()> {
    for g in [Graph::complete(4)?, Graph::cycle(5)?, Graph::star(6)?] {
        let code = to_graph6(&g);
        assert_eq!(parse_graph6(&code)?, g);
        println!("{code:<10} {g:?}");
    }

    let doc = ">>graph6<<C~\n\nDQw\nA_\n";
    let graphs = parse_lines(doc).map_err(|(_, e)| e)?;
    println!(
        "parsed {} graphs from a document with a blank line",
        graphs.len()
    );

    for bad in ["C~~", "Aa", "D"] {
        match parse_graph6(bad) {
            Ok(g) => println!("{bad:?} unexpectedly parsed as {g:?}"),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }
    Ok(())
}
