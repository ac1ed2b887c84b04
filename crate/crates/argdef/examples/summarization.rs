//! Summarization: a strictly smaller graph that preserves the root reasons
//! of its own arguments can stand in for a larger one.
//!
//! The full graph funnels two chains into the target o; the summary replaces
//! each chain by a direct attack. The root reasons of e3 stay {e1, e2}, and
//! the complete extensions of the summary are exactly the projections of the
//! full graph's.
//!
//! Run with: cargo run --example summarization

use argdef::{extensions, is_summarization, root_reasons, ArgId, ArgumentGraph, Semantics};

fn main() {
    let summary = ArgumentGraph::build(
        ["e1", "e2", "e3", "o"],
        [("e1", "o"), ("e2", "o"), ("o", "e3")],
    )
    .unwrap();
    let full = ArgumentGraph::build(
        ["e1", "e2", "e3", "o", "a1", "a2", "b1", "b2"],
        [
            ("e1", "a1"),
            ("a1", "a2"),
            ("a2", "o"),
            ("e2", "b1"),
            ("b1", "b2"),
            ("b2", "o"),
            ("o", "e3"),
        ],
    )
    .unwrap();

    let verdict = is_summarization(&summary, &full, Semantics::Complete);
    println!(
        "summary graph summarizes the full graph: {}",
        if verdict.equivalent { "yes" } else { "no" }
    );

    let e3 = ArgId::new("e3").unwrap();
    println!(
        "root reasons of e3: summary {}, full {}",
        root_reasons(&summary, &e3, Semantics::Complete).unwrap(),
        root_reasons(&full, &e3, Semantics::Complete).unwrap(),
    );

    println!("complete extensions:");
    for e in extensions(&full, Semantics::Complete) {
        println!("  full:    {e}");
    }
    for e in extensions(&summary, Semantics::Complete) {
        println!("  summary: {e}");
    }
}
