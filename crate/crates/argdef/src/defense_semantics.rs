//! Extensions of defenses: classical acceptability applied to defense graphs,
//! with membership restricted to defenses. Defeaters take part in attacks but
//! are never members of an extension.

use std::collections::BTreeSet;
use std::fmt;

use crate::defense::{
    build_defense_graph, defense_arguments, DefenseGraph, DefenseNode,
};
use crate::error::{Error, Result};
use crate::graph::{ArgumentGraph, Extension};
use crate::labelling::IndexedDigraph;
use crate::semantics::Semantics;

/// A set of defenses accepted together. Never contains defeaters.
///
/// Orders by cardinality first, then by the node sequence, mirroring the
/// canonical order of argument extensions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DefenseExtension {
    members: BTreeSet<DefenseNode>,
}

impl DefenseExtension {
    /// Builds an extension from defense nodes; defeaters are rejected.
    pub fn new(members: impl IntoIterator<Item = DefenseNode>) -> Result<Self> {
        let members: BTreeSet<DefenseNode> = members.into_iter().collect();
        if let Some(defeater) = members.iter().find(|n| !n.is_defense()) {
            return Err(Error::DefeaterInInput(defeater.to_string()));
        }
        Ok(DefenseExtension { members })
    }

    pub fn members(&self) -> &BTreeSet<DefenseNode> {
        &self.members
    }

    pub fn contains(&self, node: &DefenseNode) -> bool {
        self.members.contains(node)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &DefenseExtension) -> bool {
        self.members.is_subset(&other.members)
    }

    /// The arguments covered by the member defenses (defenders and defendees).
    pub fn arguments(&self) -> Extension {
        Extension::new(defense_arguments(&self.members).expect("defenses only"))
    }
}

impl Ord for DefenseExtension {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for DefenseExtension {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DefenseExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, n) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}

fn check_members(dg: &DefenseGraph, ext: &DefenseExtension) -> Result<()> {
    match ext.members().iter().find(|n| !dg.contains(n)) {
        Some(unknown) => Err(Error::NodeNotInGraph(unknown.to_string())),
        None => Ok(()),
    }
}

/// Whether no member of `ext` attacks a member (itself included).
pub fn defense_conflict_free(dg: &DefenseGraph, ext: &DefenseExtension) -> Result<bool> {
    check_members(dg, ext)?;
    Ok(!ext
        .members()
        .iter()
        .any(|x| ext.members().iter().any(|y| dg.attacks_node(x, y))))
}

/// Whether `ext` defends `node`: every attacker of `node` in the defense
/// graph, defense or defeater, is attacked by some member of `ext`.
pub fn defense_defends(
    dg: &DefenseGraph,
    ext: &DefenseExtension,
    node: &DefenseNode,
) -> Result<bool> {
    if !node.is_defense() {
        return Err(Error::DefeaterAsDefendee(node.to_string()));
    }
    if !dg.contains(node) {
        return Err(Error::NodeNotInGraph(node.to_string()));
    }
    check_members(dg, ext)?;
    Ok(dg.attackers_of(node).iter().all(|attacker| {
        ext.members()
            .iter()
            .any(|defender| dg.attacks_node(defender, attacker))
    }))
}

fn indexed(dg: &DefenseGraph) -> (Vec<DefenseNode>, IndexedDigraph) {
    let ids: Vec<DefenseNode> = dg.nodes().iter().cloned().collect();
    let index_of = |n: &DefenseNode| ids.binary_search(n).expect("node indexed");
    let edges: Vec<(usize, usize)> = dg
        .edges()
        .iter()
        .map(|(src, dst)| (index_of(src), index_of(dst)))
        .collect();
    let eligible: Vec<bool> = ids.iter().map(|n| n.is_defense()).collect();
    let digraph = IndexedDigraph::new(ids.len(), &edges, eligible);
    (ids, digraph)
}

/// All complete extensions of defenses, canonically ordered.
pub fn complete_defense_extensions(dg: &DefenseGraph) -> BTreeSet<DefenseExtension> {
    let (ids, digraph) = indexed(dg);
    digraph
        .complete_in_sets()
        .into_iter()
        .map(|in_set| {
            DefenseExtension::new(in_set.into_iter().map(|i| ids[i].clone()))
                .expect("in-sets contain defenses only")
        })
        .collect()
}

/// The unique grounded extension of defenses, by fixpoint iteration over the
/// defenses of the graph.
pub fn grounded_defense_extension(dg: &DefenseGraph) -> DefenseExtension {
    let mut current = DefenseExtension::default();
    loop {
        let next = DefenseExtension::new(
            dg.defenses()
                .filter(|n| defense_defends(dg, &current, n).expect("node in graph"))
                .cloned(),
        )
        .expect("defenses only");
        if next == current {
            return current;
        }
        current = next;
    }
}

/// The set-inclusion maximal complete extensions of defenses.
pub fn preferred_defense_extensions(dg: &DefenseGraph) -> BTreeSet<DefenseExtension> {
    let complete = complete_defense_extensions(dg);
    complete
        .iter()
        .filter(|d| !complete.iter().any(|other| *d != other && d.is_subset(other)))
        .cloned()
        .collect()
}

/// Conflict-free defense sets attacking every node outside them, defeaters
/// included. May be empty.
pub fn stable_defense_extensions(dg: &DefenseGraph) -> BTreeSet<DefenseExtension> {
    complete_defense_extensions(dg)
        .into_iter()
        .filter(|d| {
            dg.nodes()
                .iter()
                .filter(|n| !d.contains(n))
                .all(|outsider| {
                    d.members().iter().any(|m| dg.attacks_node(m, outsider))
                })
        })
        .collect()
}

/// Dispatcher over the four defense semantics; grounded yields a one-element
/// set.
pub fn defense_extensions(dg: &DefenseGraph, semantics: Semantics) -> BTreeSet<DefenseExtension> {
    match semantics {
        Semantics::Complete => complete_defense_extensions(dg),
        Semantics::Grounded => BTreeSet::from([grounded_defense_extension(dg)]),
        Semantics::Preferred => preferred_defense_extensions(dg),
        Semantics::Stable => stable_defense_extensions(dg),
    }
}

/// The defense extension induced by an argument extension: all defenses whose
/// defender lies in `e` (or is empty) and whose defendee lies in `e`.
pub fn defense_extension_of(g: &ArgumentGraph, e: &Extension) -> Result<DefenseExtension> {
    if let Some(unknown) = e.members().iter().find(|a| !g.contains(a)) {
        return Err(Error::UnknownArgument(unknown.name().to_owned()));
    }
    let members = crate::defense::enumerate_defenses(g)
        .into_iter()
        .filter(|n| {
            let defender_ok = match n.defender().as_arg() {
                None => true,
                Some(x) => e.contains(x),
            };
            defender_ok && e.contains(n.defendee())
        });
    DefenseExtension::new(members)
}

/// Outcome of checking the two correspondence equations between argument
/// extensions and defense extensions on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub semantics: Semantics,
    /// The induced defense extensions of the argument extensions equal the
    /// defense extensions of the defense graph.
    pub defense_side_matches: bool,
    /// The argument extensions equal the covered-argument sets of the defense
    /// extensions.
    pub argument_side_matches: bool,
    /// A defense extension present on exactly one side, if any.
    pub defense_counterexample: Option<DefenseExtension>,
    /// An argument extension present on exactly one side, if any.
    pub argument_counterexample: Option<Extension>,
}

impl CorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.defense_side_matches && self.argument_side_matches
    }
}

/// Computes both sides of the two correspondence equations for `g` under
/// `semantics` and reports equality with counterexamples.
pub fn correspondence_check(g: &ArgumentGraph, semantics: Semantics) -> CorrespondenceReport {
    let argument_extensions = crate::semantics::extensions(g, semantics);
    let dg = build_defense_graph(g);
    let defense_exts = defense_extensions(&dg, semantics);

    let mapped_defense: BTreeSet<DefenseExtension> = argument_extensions
        .iter()
        .map(|e| defense_extension_of(g, e).expect("extension of g"))
        .collect();
    let mapped_arguments: BTreeSet<Extension> =
        defense_exts.iter().map(|d| d.arguments()).collect();

    let defense_counterexample = mapped_defense
        .symmetric_difference(&defense_exts)
        .next()
        .cloned();
    let argument_counterexample = mapped_arguments
        .symmetric_difference(&argument_extensions)
        .next()
        .cloned();

    CorrespondenceReport {
        semantics,
        defense_side_matches: defense_counterexample.is_none(),
        argument_side_matches: argument_counterexample.is_none(),
        defense_counterexample,
        argument_counterexample,
    }
}
