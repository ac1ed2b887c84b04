//! Equivalence of argument graphs: standard (same extensions), strong under
//! complete semantics (same kernels, hence same extensions in every context),
//! defense (same extensions of defenses), root (same root reasons on a shared
//! set of arguments), and the summarization relation built on the latter.

use std::collections::BTreeSet;
use std::fmt;

use crate::defense::build_defense_graph;
use crate::defense_semantics::{defense_extensions, DefenseExtension};
use crate::error::{Error, Result};
use crate::graph::{ArgId, ArgumentGraph, Extension};
use crate::reasons::{root_reasons, ReasonBag};
use crate::semantics::{extensions, Semantics};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceKind {
    Standard,
    StrongComplete,
    Defense,
    Root,
    Summarization,
}

impl fmt::Display for EquivalenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            EquivalenceKind::Standard => "standard",
            EquivalenceKind::StrongComplete => "strong",
            EquivalenceKind::Defense => "defense",
            EquivalenceKind::Root => "root",
            EquivalenceKind::Summarization => "summarization",
        };
        f.write_str(name)
    }
}

/// Why two graphs failed to be equivalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An extension present in exactly one of the graphs.
    ExtensionOnlyIn { first: bool, extension: Extension },
    /// A defense extension present in exactly one of the graphs.
    DefenseExtensionOnlyIn {
        first: bool,
        extension: DefenseExtension,
    },
    /// The kernels differ on their argument sets.
    KernelArgumentsDiffer,
    /// An attack present in exactly one of the kernels.
    KernelAttackOnlyIn { first: bool, attack: (ArgId, ArgId) },
    /// An argument whose root-reason bags differ.
    ReasonsDiffer {
        argument: ArgId,
        first: ReasonBag,
        second: ReasonBag,
    },
    /// The candidate summary's arguments are not a proper subset.
    NotProperSubset,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |first: &bool| if *first { "first" } else { "second" };
        match self {
            Witness::ExtensionOnlyIn { first, extension } => {
                write!(f, "extension {extension} only in the {} graph", side(first))
            }
            Witness::DefenseExtensionOnlyIn { first, extension } => write!(
                f,
                "defense extension {extension} only in the {} graph",
                side(first)
            ),
            Witness::KernelArgumentsDiffer => {
                write!(f, "the kernels have different argument sets")
            }
            Witness::KernelAttackOnlyIn { first, attack } => write!(
                f,
                "kernel attack {}->{} only in the {} graph",
                attack.0,
                attack.1,
                side(first)
            ),
            Witness::ReasonsDiffer {
                argument,
                first,
                second,
            } => write!(
                f,
                "root reasons of {argument} differ: {first} vs {second}"
            ),
            Witness::NotProperSubset => {
                write!(f, "the arguments are not a proper subset of the other graph's")
            }
        }
    }
}

/// The outcome of an equivalence decision. A negative result always carries
/// a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub kind: EquivalenceKind,
    pub semantics: Option<Semantics>,
    pub equivalent: bool,
    pub witness: Option<Witness>,
}

impl EquivalenceVerdict {
    fn positive(kind: EquivalenceKind, semantics: Option<Semantics>) -> Self {
        EquivalenceVerdict {
            kind,
            semantics,
            equivalent: true,
            witness: None,
        }
    }

    fn negative(kind: EquivalenceKind, semantics: Option<Semantics>, witness: Witness) -> Self {
        EquivalenceVerdict {
            kind,
            semantics,
            equivalent: false,
            witness: Some(witness),
        }
    }
}

/// The kernel of a graph under complete semantics: drop every attack between
/// two distinct self-attackers.
pub fn c_kernel(g: &ArgumentGraph) -> ArgumentGraph {
    let attacks = g.attacks().iter().filter(|(src, dst)| {
        !(src != dst && g.attacks_pair(src, src) && g.attacks_pair(dst, dst))
    });
    ArgumentGraph::new(g.arguments().iter().cloned(), attacks.cloned())
        .expect("kernel keeps the argument set")
}

/// Standard equivalence: the two graphs have the same extensions under the
/// given semantics.
pub fn standard_equivalent(
    g1: &ArgumentGraph,
    g2: &ArgumentGraph,
    semantics: Semantics,
) -> EquivalenceVerdict {
    let e1 = extensions(g1, semantics);
    let e2 = extensions(g2, semantics);
    match first_diff(&e1, &e2) {
        None => EquivalenceVerdict::positive(EquivalenceKind::Standard, Some(semantics)),
        Some((first, extension)) => EquivalenceVerdict::negative(
            EquivalenceKind::Standard,
            Some(semantics),
            Witness::ExtensionOnlyIn { first, extension },
        ),
    }
}

/// Strong equivalence under complete semantics, decided through kernel
/// equality: the graphs behave alike in every attack context.
pub fn strong_equivalent_co(g1: &ArgumentGraph, g2: &ArgumentGraph) -> EquivalenceVerdict {
    let k1 = c_kernel(g1);
    let k2 = c_kernel(g2);
    if k1.arguments() != k2.arguments() {
        return EquivalenceVerdict::negative(
            EquivalenceKind::StrongComplete,
            None,
            Witness::KernelArgumentsDiffer,
        );
    }
    match first_diff(k1.attacks(), k2.attacks()) {
        None => EquivalenceVerdict::positive(EquivalenceKind::StrongComplete, None),
        Some((first, attack)) => EquivalenceVerdict::negative(
            EquivalenceKind::StrongComplete,
            None,
            Witness::KernelAttackOnlyIn { first, attack },
        ),
    }
}

/// Defense equivalence: the two defense graphs have the same extensions of
/// defenses under the given semantics.
pub fn defense_equivalent(
    g1: &ArgumentGraph,
    g2: &ArgumentGraph,
    semantics: Semantics,
) -> EquivalenceVerdict {
    let d1 = defense_extensions(&build_defense_graph(g1), semantics);
    let d2 = defense_extensions(&build_defense_graph(g2), semantics);
    match first_diff(&d1, &d2) {
        None => EquivalenceVerdict::positive(EquivalenceKind::Defense, Some(semantics)),
        Some((first, extension)) => EquivalenceVerdict::negative(
            EquivalenceKind::Defense,
            Some(semantics),
            Witness::DefenseExtensionOnlyIn { first, extension },
        ),
    }
}

/// Root equivalence over a non-empty restriction set shared by both graphs:
/// every restricted argument has the same root reasons (as multisets) in the
/// two graphs.
pub fn root_equivalent(
    g1: &ArgumentGraph,
    g2: &ArgumentGraph,
    restriction: &BTreeSet<ArgId>,
    semantics: Semantics,
) -> Result<EquivalenceVerdict> {
    if restriction.is_empty() {
        return Err(Error::EmptyRestrictionSet);
    }
    if let Some(outside) = restriction
        .iter()
        .find(|a| !g1.contains(a) || !g2.contains(a))
    {
        return Err(Error::ArgumentOutsideIntersection(outside.name().to_owned()));
    }
    for a in restriction {
        let bag1 = root_reasons(g1, a, semantics)?;
        let bag2 = root_reasons(g2, a, semantics)?;
        if !bag1.multiset_eq(&bag2) {
            return Ok(EquivalenceVerdict::negative(
                EquivalenceKind::Root,
                Some(semantics),
                Witness::ReasonsDiffer {
                    argument: a.clone(),
                    first: bag1,
                    second: bag2,
                },
            ));
        }
    }
    Ok(EquivalenceVerdict::positive(
        EquivalenceKind::Root,
        Some(semantics),
    ))
}

/// Whether `summary` is a summarization of `full`: a strictly smaller graph
/// that is root-equivalent to `full` on its own arguments.
pub fn is_summarization(
    summary: &ArgumentGraph,
    full: &ArgumentGraph,
    semantics: Semantics,
) -> EquivalenceVerdict {
    let proper_subset = summary.arguments().is_subset(full.arguments())
        && summary.arguments() != full.arguments();
    if !proper_subset {
        return EquivalenceVerdict::negative(
            EquivalenceKind::Summarization,
            Some(semantics),
            Witness::NotProperSubset,
        );
    }
    let verdict = root_equivalent(summary, full, summary.arguments(), semantics)
        .expect("restriction is the summary's own non-empty argument set");
    EquivalenceVerdict {
        kind: EquivalenceKind::Summarization,
        ..verdict
    }
}

/// First element in the symmetric difference, tagged with the side that owns
/// it (`true` for the first set).
fn first_diff<T: Ord + Clone>(s1: &BTreeSet<T>, s2: &BTreeSet<T>) -> Option<(bool, T)> {
    let mut only_in_1 = s1.difference(s2);
    let mut only_in_2 = s2.difference(s1);
    match (only_in_1.next(), only_in_2.next()) {
        (Some(a), Some(b)) => {
            if a <= b {
                Some((true, a.clone()))
            } else {
                Some((false, b.clone()))
            }
        }
        (Some(a), None) => Some((true, a.clone())),
        (None, Some(b)) => Some((false, b.clone())),
        (None, None) => None,
    }
}
