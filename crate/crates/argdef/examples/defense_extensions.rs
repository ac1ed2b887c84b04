//! Evaluate a defense graph: which sets of defenses are jointly acceptable.
//!
//! Run with: cargo run --example defense_extensions

use argdef::{build_defense_graph, defense_extensions, ArgumentGraph, Semantics};

fn main() {
    // six-cycle a -> c1 -> c2 -> b -> c3 -> c4 -> a
    let graph = ArgumentGraph::build(
        ["a", "b", "c1", "c2", "c3", "c4"],
        [
            ("a", "c1"),
            ("c1", "c2"),
            ("c2", "b"),
            ("b", "c3"),
            ("c3", "c4"),
            ("c4", "a"),
        ],
    )
    .unwrap();

    let dg = build_defense_graph(&graph);
    for semantics in Semantics::ALL {
        println!("{semantics} extensions of defenses:");
        for d in defense_extensions(&dg, semantics) {
            println!("  {d}   covering {}", d.arguments());
        }
    }
}
