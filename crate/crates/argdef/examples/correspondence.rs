//! Re-verify the structural properties linking a graph to its defense graph:
//! the correspondence between argument extensions and extensions of defenses,
//! the defeater/defense/attacked coverage of the argument set, and the
//! invariance of complete extensions under kernelization.
//!
//! Run with: cargo run --example correspondence

use argdef::{
    build_defense_graph, c_kernel, complete_extensions, correspondence_check,
    decompose_arguments, defense_extensions, ArgumentGraph, Semantics,
};

fn main() {
    let graph = ArgumentGraph::build(
        ["a", "b", "c"],
        [("a", "b"), ("b", "a"), ("b", "c"), ("c", "a")],
    )
    .unwrap();

    for semantics in Semantics::ALL {
        let report = correspondence_check(&graph, semantics);
        println!(
            "{semantics}: induced-defense side {}, covered-argument side {}",
            if report.defense_side_matches { "matches" } else { "differs" },
            if report.argument_side_matches { "matches" } else { "differs" },
        );
    }

    let (in_defeaters, in_defenses, attacked) = decompose_arguments(&graph);
    let show = |set: &std::collections::BTreeSet<argdef::ArgId>| {
        set.iter().map(|a| a.name().to_owned()).collect::<Vec<_>>().join(",")
    };
    println!(
        "\ncoverage: defeaters {{{}}}, defenses {{{}}}, attacked {{{}}}",
        show(&in_defeaters),
        show(&in_defenses),
        show(&attacked)
    );

    let kernel = c_kernel(&graph);
    println!(
        "kernel invariance: extensions {}, defense extensions {}",
        complete_extensions(&graph) == complete_extensions(&kernel),
        defense_extensions(&build_defense_graph(&graph), Semantics::Complete)
            == defense_extensions(&build_defense_graph(&kernel), Semantics::Complete),
    );
}
