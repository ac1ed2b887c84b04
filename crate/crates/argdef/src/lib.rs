//! Defense-centred analysis of abstract argumentation frameworks.
//!
//! An argument graph pins down which arguments survive together, but not why.
//! This crate makes the why explicit: it lifts every argument graph to its
//! defense graph, whose nodes are defenses `<x,b>` ("accepting x is a reason
//! to accept b") and defeaters `(x,b)` (defense-shaped pairs disqualified by
//! conflict or self-attack), evaluates that graph under the classical
//! complete, grounded, preferred and stable semantics, and extracts direct
//! and root reasons for accepting individual arguments. On top of the reasons
//! sit four equivalence relations between graphs (standard, strong, defense
//! and root equivalence) and a summarization check.
//!
//! Entry points:
//!
//! - [`graph::ArgumentGraph`] / [`semantics::extensions`] for classical
//!   extensions,
//! - [`defense::build_defense_graph`] / [`defense_semantics::defense_extensions`]
//!   for extensions of defenses,
//! - [`reasons::direct_reasons`] / [`reasons::root_reasons`] for per-argument
//!   reasons,
//! - [`equivalence`] for the equivalence relations and summarization,
//! - [`io`] for the TGF/APX/DOT/JSON formats,
//! - [`oracle`] for naive reference implementations used in validation.
//!
//! The `examples/` directory holds one runnable example per capability; the
//! `argdef` binary exposes the same operations as batch subcommands.

pub mod defense;
pub mod defense_semantics;
pub mod equivalence;
mod error;
pub mod graph;
pub mod io;
mod labelling;
pub mod oracle;
pub mod reasons;
pub mod semantics;

pub mod cli;

pub use defense::{
    build_defense_graph, classify, decompose_arguments, defendees, defenders, defense_arguments,
    enumerate_defeaters, enumerate_defenses, node_attacks, DefenderSlot, DefenseGraph,
    DefenseNode, NodeKind,
};
pub use defense_semantics::{
    correspondence_check, defense_conflict_free, defense_defends, defense_extension_of,
    defense_extensions, CorrespondenceReport, DefenseExtension,
};
pub use equivalence::{
    c_kernel, defense_equivalent, is_summarization, root_equivalent, standard_equivalent,
    strong_equivalent_co, EquivalenceKind, EquivalenceVerdict, Witness,
};
pub use error::{Error, Result};
pub use graph::{ArgId, ArgumentGraph, Extension, EMPTY_TOKEN};
pub use reasons::{
    direct_reason, direct_reasons, root_reason, root_reasons, transitive_closure, ReasonBag,
    ReasonSet,
};
pub use semantics::{
    complete_extensions, extensions, grounded_extension, preferred_extensions, stable_extensions,
    Semantics,
};
