//! Root equivalence: two very different graphs can give the same ultimate
//! reasons for accepting shared arguments.
//!
//! The six-cycle routes a's self-support through c2 and c3, the mutual pair
//! supports a directly; on {a, b} their root reasons coincide.
//!
//! Run with: cargo run --example root_equivalence

use std::collections::BTreeSet;

use argdef::{root_equivalent, root_reasons, ArgId, ArgumentGraph, Semantics};

fn main() {
    let six_cycle = ArgumentGraph::build(
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
    let mutual = ArgumentGraph::build(["a", "b"], [("a", "b"), ("b", "a")]).unwrap();

    for name in ["a", "b"] {
        let argument = ArgId::new(name).unwrap();
        let in_cycle = root_reasons(&six_cycle, &argument, Semantics::Complete).unwrap();
        let in_mutual = root_reasons(&mutual, &argument, Semantics::Complete).unwrap();
        println!("root reasons of {name}: six-cycle {in_cycle}, mutual pair {in_mutual}");
    }

    let shared: BTreeSet<ArgId> = ["a", "b"].iter().map(|n| ArgId::new(*n).unwrap()).collect();
    let verdict = root_equivalent(&six_cycle, &mutual, &shared, Semantics::Complete).unwrap();
    println!(
        "root-equivalent on {{a,b}}: {}",
        if verdict.equivalent { "yes" } else { "no" }
    );
}
