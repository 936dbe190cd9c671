//! Checking colorings against the domination-coloring conditions and reading
//! the diagnostic that explains a failure.

use domchrom::coloring::{classes_dominated_by, diagnose, dominators_of_class, Coloring};
use domchrom::graph::Graph;

fn main() -> domchrom::Result<()> {
    let c4 = Graph::cycle(4)?;
    for text in ["0,1,0,1", "0,1,2,1", "0,0,1,2", "0,1,2,3"] {
        let c: Coloring = text.parse()?;
        let d = diagnose(&c4, &c)?;
        println!("C4 with {text:<8} -> {d}");
    }

    // Who dominates what in the 2-coloring of the 4-cycle.
    let c: Coloring = "0,1,0,1".parse()?;
    for class in 0..c.class_count() {
        println!(
            "class {class} is dominated by {:?}",
            dominators_of_class(&c4, &c, class)?
        );
    }
    for v in 0..c4.order() {
        println!(
            "vertex {v} dominates classes {:?}",
            classes_dominated_by(&c4, &c, v)?
        );
    }

    // Parse errors point at the offending byte.
    match "0,1,?,1".parse::<Coloring>() {
        Ok(_) => unreachable!(),
        Err(e) => println!("{e}"),
    }
    Ok(())
}
