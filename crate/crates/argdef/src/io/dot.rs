//! DOT rendering of argument graphs and defense graphs.

use std::fmt::Write;

use crate::defense::{DefenseGraph, DefenseNode};
use crate::graph::ArgumentGraph;

/// Renders an argument graph as a DOT digraph, nodes and edges in canonical
/// order.
pub fn graph_to_dot(g: &ArgumentGraph) -> String {
    let mut out = String::from("digraph argument_graph {\n");
    for a in g.arguments() {
        writeln!(out, "  \"{a}\";").expect("write to string");
    }
    for (src, dst) in g.attacks() {
        writeln!(out, "  \"{src}\" -> \"{dst}\";").expect("write to string");
    }
    out.push_str("}\n");
    out
}

fn node_label(node: &DefenseNode) -> String {
    if node.is_defense() {
        format!("<{},{}>", node.defender(), node.defendee())
    } else {
        format!("({},{})", node.defender(), node.defendee())
    }
}

/// Renders a defense graph as a DOT digraph. Defenses keep the default node
/// shape, defeaters are drawn as boxes.
pub fn defense_graph_to_dot(dg: &DefenseGraph) -> String {
    let mut out = String::from("digraph defense_graph {\n");
    for node in dg.nodes() {
        let label = node_label(node);
        if node.is_defense() {
            writeln!(out, "  \"{label}\";").expect("write to string");
        } else {
            writeln!(out, "  \"{label}\" [shape=box];").expect("write to string");
        }
    }
    for (src, dst) in dg.edges() {
        writeln!(out, "  \"{}\" -> \"{}\";", node_label(src), node_label(dst))
            .expect("write to string");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defense::build_defense_graph;
    use crate::graph::fixtures::*;

    #[test]
    fn argument_graph_dot_is_canonical() {
        let dot = graph_to_dot(&chain3());
        assert_eq!(
            dot,
            "digraph argument_graph {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -> \"b\";\n  \"b\" -> \"c\";\n}\n"
        );
    }

    #[test]
    fn edgeless_defense_graph_renders_two_nodes() {
        let dot = defense_graph_to_dot(&build_defense_graph(&chain3()));
        assert_eq!(
            dot,
            "digraph defense_graph {\n  \"<EMPTY,a>\";\n  \"<a,c>\";\n}\n"
        );
    }

    #[test]
    fn defeaters_get_a_distinct_shape() {
        let dot = defense_graph_to_dot(&build_defense_graph(&mutual_with_cycle()));
        assert!(dot.contains("\"<a,a>\";"));
        assert!(dot.contains("\"(a,c)\" [shape=box];"));
        assert!(dot.contains("\"<a,a>\" -> \"<b,b>\";"));
        assert_eq!(dot.matches(" -> ").count(), 21);
    }
}
