//! Enumerate the extensions of an argument graph under the four semantics.
//!
//! Run with: cargo run --example extensions

use argdef::{extensions, ArgumentGraph, Semantics};

fn main() {
    // a <-> b with b -> c -> d, plus a chain e -> f -> g -> c
    let graph = ArgumentGraph::build(
        ["a", "b", "c", "d", "e", "f", "g"],
        [
            ("a", "b"),
            ("b", "a"),
            ("b", "c"),
            ("c", "d"),
            ("e", "f"),
            ("f", "g"),
            ("g", "c"),
        ],
    )
    .unwrap();

    for semantics in Semantics::ALL {
        println!("{semantics}:");
        for extension in extensions(&graph, semantics) {
            println!("  {extension}");
        }
    }
}
