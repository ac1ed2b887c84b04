//! JSON rendering of results. Arrays follow the canonical order, keys are
//! fixed, and no floating-point values are ever produced, so output is
//! byte-identical across runs and platforms.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::defense::{DefenseGraph, DefenseNode, NodeKind};
use crate::defense_semantics::DefenseExtension;
use crate::graph::{Extension, EMPTY_TOKEN};
use crate::reasons::ReasonBag;
use crate::semantics::Semantics;

fn names(e: &Extension) -> Vec<String> {
    e.members().iter().map(|a| a.name().to_owned()).collect()
}

#[derive(Serialize)]
struct ExtensionsDoc {
    semantics: Semantics,
    extensions: Vec<Vec<String>>,
}

/// `{"semantics": ..., "extensions": [[...], ...]}`
pub fn extensions_to_json(semantics: Semantics, extensions: &BTreeSet<Extension>) -> String {
    let doc = ExtensionsDoc {
        semantics,
        extensions: extensions.iter().map(names).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

#[derive(Serialize)]
struct DefenseNodeDoc {
    defender: String,
    defendee: String,
}

impl From<&DefenseNode> for DefenseNodeDoc {
    fn from(node: &DefenseNode) -> Self {
        DefenseNodeDoc {
            defender: node
                .defender()
                .as_arg()
                .map_or_else(|| EMPTY_TOKEN.to_owned(), |a| a.name().to_owned()),
            defendee: node.defendee().name().to_owned(),
        }
    }
}

#[derive(Serialize)]
struct DefenseExtensionsDoc {
    defense_extensions: Vec<Vec<DefenseNodeDoc>>,
}

/// `{"defense_extensions": [[{"defender": ..., "defendee": ...}, ...], ...]}`
pub fn defense_extensions_to_json(extensions: &BTreeSet<DefenseExtension>) -> String {
    let doc = DefenseExtensionsDoc {
        defense_extensions: extensions
            .iter()
            .map(|d| d.members().iter().map(DefenseNodeDoc::from).collect())
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

#[derive(Serialize)]
struct GraphNodeDoc {
    defender: String,
    defendee: String,
    kind: &'static str,
}

#[derive(Serialize)]
struct DefenseGraphDoc {
    nodes: Vec<GraphNodeDoc>,
    edges: Vec<(usize, usize)>,
}

/// `{"nodes": [...], "edges": [[from_index, to_index], ...]}` with indices
/// into the canonical node array.
pub fn defense_graph_to_json(dg: &DefenseGraph) -> String {
    let ordered: Vec<&DefenseNode> = dg.nodes().iter().collect();
    let index_of = |n: &DefenseNode| ordered.iter().position(|m| *m == n).expect("node present");
    let doc = DefenseGraphDoc {
        nodes: ordered
            .iter()
            .map(|n| {
                let base = DefenseNodeDoc::from(*n);
                GraphNodeDoc {
                    defender: base.defender,
                    defendee: base.defendee,
                    kind: match n.kind() {
                        NodeKind::Defense => "defense",
                        NodeKind::Defeater => "defeater",
                    },
                }
            })
            .collect(),
        edges: dg
            .edges()
            .iter()
            .map(|(src, dst)| (index_of(src), index_of(dst)))
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

#[derive(Serialize)]
struct ReasonsDoc {
    argument: String,
    reasons: Vec<Vec<String>>,
}

/// `{"argument": ..., "reasons": [[...], ...]}` with `"EMPTY"` for the empty
/// marker.
pub fn reasons_to_json(argument: &crate::graph::ArgId, bag: &ReasonBag) -> String {
    let doc = ReasonsDoc {
        argument: argument.name().to_owned(),
        reasons: bag
            .entries()
            .iter()
            .map(|r| {
                r.members()
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<String>>()
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defense::build_defense_graph;
    use crate::graph::fixtures::*;
    use crate::graph::{ArgId, ArgumentGraph};
    use crate::reasons::root_reasons;
    use crate::semantics::{extensions, Semantics};

    #[test]
    fn extension_documents_are_canonical() {
        let json = extensions_to_json(
            Semantics::Complete,
            &extensions(&mutual_with_cycle(), Semantics::Complete),
        );
        assert_eq!(json, r#"{"semantics":"complete","extensions":[[],["b"]]}"#);
        let json = extensions_to_json(
            Semantics::Complete,
            &extensions(&ArgumentGraph::empty(), Semantics::Complete),
        );
        assert_eq!(json, r#"{"semantics":"complete","extensions":[[]]}"#);
    }

    #[test]
    fn defense_extension_documents_spell_out_nodes() {
        let dg = build_defense_graph(&mutual_with_cycle());
        let json = defense_extensions_to_json(&crate::defense_semantics::defense_extensions(
            &dg,
            Semantics::Complete,
        ));
        assert_eq!(
            json,
            r#"{"defense_extensions":[[],[{"defender":"b","defendee":"b"}]]}"#
        );
    }

    #[test]
    fn reason_documents_keep_the_empty_marker() {
        let g = six_cycle();
        let bag = root_reasons(&g, &ArgId::new("a").unwrap(), Semantics::Complete).unwrap();
        let json = reasons_to_json(&ArgId::new("a").unwrap(), &bag);
        assert_eq!(json, r#"{"argument":"a","reasons":[[],["a"],[]]}"#);

        let initial = root_reasons(
            &two_loops_with_chain(),
            &ArgId::new("e").unwrap(),
            Semantics::Grounded,
        )
        .unwrap();
        let json = reasons_to_json(&ArgId::new("e").unwrap(), &initial);
        assert_eq!(json, r#"{"argument":"e","reasons":[["EMPTY"]]}"#);
    }

    #[test]
    fn defense_graph_documents_index_edges() {
        let dg = build_defense_graph(&chain3());
        let json = defense_graph_to_json(&dg);
        assert_eq!(
            json,
            r#"{"nodes":[{"defender":"EMPTY","defendee":"a","kind":"defense"},{"defender":"a","defendee":"c","kind":"defense"}],"edges":[]}"#
        );
    }
}
