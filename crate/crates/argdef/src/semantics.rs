//! Extension enumeration for argument graphs under the four classical
//! semantics: complete, grounded, preferred and stable.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{ArgId, ArgumentGraph, Extension};
use crate::labelling::IndexedDigraph;

/// The four supported semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    Complete,
    Grounded,
    Preferred,
    Stable,
}

impl Semantics {
    pub const ALL: [Semantics; 4] = [
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
        Semantics::Stable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Complete => "complete",
            Semantics::Grounded => "grounded",
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "complete" | "co" => Ok(Semantics::Complete),
            "grounded" | "gr" => Ok(Semantics::Grounded),
            "preferred" | "pr" => Ok(Semantics::Preferred),
            "stable" | "st" => Ok(Semantics::Stable),
            other => Err(Error::Syntax(format!("unknown semantics `{other}`"))),
        }
    }
}

fn indexed(g: &ArgumentGraph) -> (Vec<ArgId>, IndexedDigraph) {
    let ids: Vec<ArgId> = g.arguments().iter().cloned().collect();
    let index_of = |a: &ArgId| ids.binary_search(a).expect("argument indexed");
    let edges: Vec<(usize, usize)> = g
        .attacks()
        .iter()
        .map(|(src, dst)| (index_of(src), index_of(dst)))
        .collect();
    let digraph = IndexedDigraph::new(ids.len(), &edges, vec![true; ids.len()]);
    (ids, digraph)
}

/// All complete extensions, canonically ordered.
pub fn complete_extensions(g: &ArgumentGraph) -> BTreeSet<Extension> {
    let (ids, digraph) = indexed(g);
    digraph
        .complete_in_sets()
        .into_iter()
        .map(|in_set| Extension::new(in_set.into_iter().map(|i| ids[i].clone())))
        .collect()
}

/// The unique grounded extension, computed by iterating the characteristic
/// function from the empty set.
pub fn grounded_extension(g: &ArgumentGraph) -> Extension {
    let mut current: BTreeSet<ArgId> = BTreeSet::new();
    loop {
        let next: BTreeSet<ArgId> = g
            .arguments()
            .iter()
            .filter(|a| g.set_defends(&current, a).expect("known argument"))
            .cloned()
            .collect();
        if next == current {
            return Extension::new(current);
        }
        current = next;
    }
}

/// The set-inclusion maximal complete extensions.
pub fn preferred_extensions(g: &ArgumentGraph) -> BTreeSet<Extension> {
    maximal(complete_extensions(g))
}

/// Conflict-free extensions attacking every outside argument. May be empty.
pub fn stable_extensions(g: &ArgumentGraph) -> BTreeSet<Extension> {
    complete_extensions(g)
        .into_iter()
        .filter(|e| {
            g.arguments()
                .iter()
                .filter(|a| !e.contains(a))
                .all(|outsider| {
                    e.members().iter().any(|m| g.attacks_pair(m, outsider))
                })
        })
        .collect()
}

/// Dispatcher over the four semantics. The grounded extension is returned as
/// a one-element set.
pub fn extensions(g: &ArgumentGraph, semantics: Semantics) -> BTreeSet<Extension> {
    match semantics {
        Semantics::Complete => complete_extensions(g),
        Semantics::Grounded => BTreeSet::from([grounded_extension(g)]),
        Semantics::Preferred => preferred_extensions(g),
        Semantics::Stable => stable_extensions(g),
    }
}

pub(crate) fn maximal(sets: BTreeSet<Extension>) -> BTreeSet<Extension> {
    sets.iter()
        .filter(|e| !sets.iter().any(|other| *e != other && e.is_subset(other)))
        .cloned()
        .collect()
}
