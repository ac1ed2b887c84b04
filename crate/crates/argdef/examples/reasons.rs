//! Extract direct and root reasons for accepting an argument.
//!
//! The direct reason collects an argument's defenders inside one extension of
//! defenses; the root reason chases the defense relation to its ultimate
//! sources. Initial arguments get the marker reason {EMPTY}: they need no
//! reason at all.
//!
//! Run with: cargo run --example reasons

use argdef::{direct_reasons, root_reasons, ArgId, ArgumentGraph, Semantics};

fn main() {
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

    for name in ["d", "e", "f"] {
        let argument = ArgId::new(name).unwrap();
        let direct = direct_reasons(&graph, &argument, Semantics::Complete).unwrap();
        let root = root_reasons(&graph, &argument, Semantics::Complete).unwrap();
        println!("argument {name}:");
        println!("  direct reasons per extension: {direct}");
        println!("  root reasons per extension:   {root}");
    }
}
