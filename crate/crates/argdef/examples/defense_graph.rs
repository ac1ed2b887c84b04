//! Build the defense graph of an argument graph and render it as DOT.
//!
//! Nodes are defenses <x,b> ("accepting x is a reason to accept b") and
//! defeaters (x,b) (pairs disqualified by conflict or self-attack, which can
//! attack defenses but never be accepted).
//!
//! Run with: cargo run --example defense_graph

use argdef::{build_defense_graph, enumerate_defeaters, enumerate_defenses, io, ArgumentGraph};

fn main() {
    // a three-cycle a1 -> a2 -> a3 -> a1 with the tail a3 -> a4 -> a5 -> a6
    let graph = ArgumentGraph::build(
        ["a1", "a2", "a3", "a4", "a5", "a6"],
        [
            ("a1", "a2"),
            ("a2", "a3"),
            ("a3", "a1"),
            ("a3", "a4"),
            ("a4", "a5"),
            ("a5", "a6"),
        ],
    )
    .unwrap();

    println!("defenses:");
    for node in enumerate_defenses(&graph) {
        println!("  {node}");
    }
    println!("defeaters:");
    for node in enumerate_defeaters(&graph) {
        println!("  {node}");
    }

    let dg = build_defense_graph(&graph);
    println!(
        "\ndefense graph: {} nodes, {} induced attacks\n",
        dg.nodes().len(),
        dg.edges().len()
    );
    print!("{}", io::defense_graph_to_dot(&dg));
}
