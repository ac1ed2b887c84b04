//! Parse and serialize the supported text formats.
//!
//! Run with: cargo run --example formats

use argdef::{extensions, io, Semantics};

fn main() {
    let tgf = "a\nb\nc\n#\na b\nb c\n";
    let graph = io::parse_tgf(tgf).unwrap();
    println!("parsed {} arguments, {} attacks", graph.arguments().len(), graph.attacks().len());

    // the same graph as aspartix facts
    print!("{}", io::to_apx(&graph));
    assert_eq!(io::parse_apx(&io::to_apx(&graph)).unwrap(), graph);

    // machine-readable extensions
    let complete = extensions(&graph, Semantics::Complete);
    println!("{}", io::extensions_to_json(Semantics::Complete, &complete));

    // rendering for graphviz
    print!("{}", io::graph_to_dot(&graph));
}
