//! Direct and root reasons for accepting arguments.
//!
//! Relative to one extension of defenses, the direct reason for an argument
//! collects its defenders in the extension. The root reason follows the
//! defense relation transitively and keeps only the ultimate sources: initial
//! arguments, arguments whose sole direct defense is by themselves, and the
//! argument itself when the closure loops back onto it. Initial arguments
//! carry the reserved reason `{EMPTY}`: they need no reason at all.

use std::collections::BTreeSet;
use std::fmt;

use crate::defense::{build_defense_graph, DefenderSlot};
use crate::defense_semantics::{defense_extensions, DefenseExtension};
use crate::error::{Error, Result};
use crate::graph::{ArgId, ArgumentGraph};
use crate::semantics::Semantics;

/// One reason for accepting an argument: a set of arguments, or the marker
/// set `{EMPTY}` for initial arguments.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct ReasonSet {
    members: BTreeSet<DefenderSlot>,
}

impl ReasonSet {
    pub fn of_args(args: impl IntoIterator<Item = ArgId>) -> Self {
        ReasonSet {
            members: args.into_iter().map(DefenderSlot::Arg).collect(),
        }
    }

    /// The `{EMPTY}` reason of an initial argument.
    pub fn empty_marker() -> Self {
        ReasonSet {
            members: BTreeSet::from([DefenderSlot::Empty]),
        }
    }

    pub fn members(&self) -> &BTreeSet<DefenderSlot> {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl fmt::Display for ReasonSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// The reasons of one argument, one entry per extension of defenses, aligned
/// to the canonical extension order. Entries may repeat; comparison between
/// bags is by multiset.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReasonBag {
    entries: Vec<ReasonSet>,
}

impl ReasonBag {
    pub fn new(entries: Vec<ReasonSet>) -> Self {
        ReasonBag { entries }
    }

    pub fn entries(&self) -> &[ReasonSet] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Equality as multisets of reason sets.
    pub fn multiset_eq(&self, other: &ReasonBag) -> bool {
        let mut left = self.entries.clone();
        let mut right = other.entries.clone();
        left.sort();
        right.sort();
        left == right
    }
}

impl fmt::Display for ReasonBag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

/// The transitive closure of the defense pairs of an extension. Pairs compose
/// head to tail; the empty slot composes forward only, it is never a target.
pub fn transitive_closure(ext: &DefenseExtension) -> BTreeSet<(DefenderSlot, ArgId)> {
    let mut closed: BTreeSet<(DefenderSlot, ArgId)> = ext
        .members()
        .iter()
        .map(|n| (n.defender().clone(), n.defendee().clone()))
        .collect();
    loop {
        let mut fresh: Vec<(DefenderSlot, ArgId)> = Vec::new();
        for (x, y) in &closed {
            for (y2, z) in &closed {
                if y2.as_arg() == Some(y) {
                    let candidate = (x.clone(), z.clone());
                    if !closed.contains(&candidate) {
                        fresh.push(candidate);
                    }
                }
            }
        }
        if fresh.is_empty() {
            return closed;
        }
        closed.extend(fresh);
    }
}

fn check_arg(g: &ArgumentGraph, a: &ArgId) -> Result<()> {
    if g.contains(a) {
        Ok(())
    } else {
        Err(Error::UnknownArgument(a.name().to_owned()))
    }
}

/// The direct reason for accepting `a` relative to one extension of defenses:
/// the defenders of `a` inside it, or `{EMPTY}` when `a` is initial.
pub fn direct_reason(g: &ArgumentGraph, a: &ArgId, ext: &DefenseExtension) -> Result<ReasonSet> {
    check_arg(g, a)?;
    if g.is_initial(a)? {
        return Ok(ReasonSet::empty_marker());
    }
    Ok(ReasonSet::of_args(
        ext.members()
            .iter()
            .filter(|n| n.defendee() == a)
            .filter_map(|n| n.defender().as_arg().cloned()),
    ))
}

/// The root reason for accepting `a` relative to one extension of defenses.
///
/// With the closure of the defense pairs at hand, the roots are `a` itself
/// when the closure contains `<a,a>`, plus every transitive defender of `a`
/// that is initial or carries its own direct self-defense in the extension.
pub fn root_reason(g: &ArgumentGraph, a: &ArgId, ext: &DefenseExtension) -> Result<ReasonSet> {
    check_arg(g, a)?;
    if g.is_initial(a)? {
        return Ok(ReasonSet::empty_marker());
    }
    let closure = transitive_closure(ext);
    let self_defended_directly = |b: &ArgId| {
        ext.members()
            .iter()
            .any(|n| n.defendee() == b && n.defender().as_arg() == Some(b))
    };
    let mut members = BTreeSet::new();
    if closure.contains(&(DefenderSlot::Arg(a.clone()), a.clone())) {
        members.insert(a.clone());
    }
    for (slot, defendee) in &closure {
        if defendee != a {
            continue;
        }
        if let Some(b) = slot.as_arg() {
            if g.is_initial(b)? || self_defended_directly(b) {
                members.insert(b.clone());
            }
        }
    }
    Ok(ReasonSet::of_args(members))
}

fn reason_bag(
    g: &ArgumentGraph,
    a: &ArgId,
    semantics: Semantics,
    per_extension: impl Fn(&DefenseExtension) -> Result<ReasonSet>,
) -> Result<ReasonBag> {
    check_arg(g, a)?;
    let dg = build_defense_graph(g);
    let entries = defense_extensions(&dg, semantics)
        .iter()
        .map(per_extension)
        .collect::<Result<Vec<_>>>()?;
    Ok(ReasonBag::new(entries))
}

/// The direct reasons of `a` under `semantics`, one entry per extension of
/// defenses in canonical order.
pub fn direct_reasons(g: &ArgumentGraph, a: &ArgId, semantics: Semantics) -> Result<ReasonBag> {
    reason_bag(g, a, semantics, |ext| direct_reason(g, a, ext))
}

/// The root reasons of `a` under `semantics`, one entry per extension of
/// defenses in canonical order.
pub fn root_reasons(g: &ArgumentGraph, a: &ArgId, semantics: Semantics) -> Result<ReasonBag> {
    reason_bag(g, a, semantics, |ext| root_reason(g, a, ext))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defense::DefenseNode;
    use crate::graph::fixtures::*;
    use crate::graph::EMPTY_TOKEN;

    fn arg(name: &str) -> ArgId {
        ArgId::new(name).unwrap()
    }

    fn node(defender: &str, defendee: &str) -> DefenseNode {
        let slot = if defender == EMPTY_TOKEN {
            DefenderSlot::Empty
        } else {
            DefenderSlot::Arg(arg(defender))
        };
        DefenseNode::defense(slot, arg(defendee))
    }

    fn dext(pairs: &[(&str, &str)]) -> DefenseExtension {
        DefenseExtension::new(pairs.iter().map(|(x, b)| node(x, b))).unwrap()
    }

    fn pairs(list: &[(&str, &str)]) -> BTreeSet<(DefenderSlot, ArgId)> {
        list.iter()
            .map(|(x, b)| {
                let slot = if *x == EMPTY_TOKEN {
                    DefenderSlot::Empty
                } else {
                    DefenderSlot::Arg(arg(x))
                };
                (slot, arg(b))
            })
            .collect()
    }

    fn reasons(names: &[&str]) -> ReasonSet {
        ReasonSet::of_args(names.iter().map(|n| arg(n)))
    }

    /// The extension pairing `b` with the lower chain of `two_loops_with_chain`.
    fn d_with_b() -> DefenseExtension {
        dext(&[("b", "b"), ("b", "d"), ("g", "d"), ("e", "g"), (EMPTY_TOKEN, "e")])
    }

    /// The sibling extension pairing `a` with the lower chain.
    fn d_with_a() -> DefenseExtension {
        dext(&[("a", "a"), ("g", "d"), ("e", "g"), (EMPTY_TOKEN, "e")])
    }

    #[test]
    fn closure_adds_exactly_the_composed_pairs() {
        let closed = transitive_closure(&d_with_b());
        let expected = pairs(&[
            ("b", "b"),
            ("b", "d"),
            ("g", "d"),
            ("e", "g"),
            (EMPTY_TOKEN, "e"),
            ("e", "d"),
            (EMPTY_TOKEN, "g"),
            (EMPTY_TOKEN, "d"),
        ]);
        assert_eq!(closed, expected);
    }

    #[test]
    fn closure_of_empty_and_self_pair() {
        assert_eq!(transitive_closure(&dext(&[])), BTreeSet::new());
        assert_eq!(
            transitive_closure(&dext(&[("a", "a")])),
            pairs(&[("a", "a")])
        );
    }

    #[test]
    fn closure_is_idempotent_and_bounded() {
        let g = six_cycle();
        for ext in defense_extensions(&build_defense_graph(&g), Semantics::Complete) {
            let once = transitive_closure(&ext);
            let twice_members = DefenseExtension::new(
                once.iter()
                    .map(|(x, b)| DefenseNode::defense(x.clone(), b.clone())),
            )
            .unwrap();
            assert_eq!(transitive_closure(&twice_members), once);
            let n = g.arguments().len();
            assert!(once.len() <= (n + 1) * n);
        }
    }

    #[test]
    fn direct_reasons_of_the_doubly_defended_argument() {
        let g = two_loops_with_chain();
        assert_eq!(
            direct_reason(&g, &arg("d"), &d_with_b()).unwrap(),
            reasons(&["b", "g"])
        );
        assert_eq!(
            direct_reason(&g, &arg("d"), &d_with_a()).unwrap(),
            reasons(&["g"])
        );
        assert_eq!(
            direct_reason(&g, &arg("e"), &d_with_b()).unwrap(),
            ReasonSet::empty_marker()
        );
    }

    #[test]
    fn root_reasons_follow_the_closure_to_the_sources() {
        let g = two_loops_with_chain();
        assert_eq!(
            root_reason(&g, &arg("d"), &d_with_b()).unwrap(),
            reasons(&["b", "e"])
        );
        assert_eq!(
            root_reason(&g, &arg("d"), &d_with_a()).unwrap(),
            reasons(&["e"])
        );
    }

    #[test]
    fn cycle_membership_contributes_only_the_argument_itself() {
        // In a defense cycle the closure yields <a,a>, so a is a root reason
        // for itself; the other cycle members have outside defenders and stay
        // out.
        let g = six_cycle();
        let d2 = dext(&[("a", "c2"), ("c2", "c3"), ("c3", "a")]);
        assert_eq!(root_reason(&g, &arg("a"), &d2).unwrap(), reasons(&["a"]));
        assert_eq!(root_reason(&g, &arg("c2"), &d2).unwrap(), reasons(&["c2"]));
    }

    #[test]
    fn reason_bags_align_with_the_canonical_extension_order() {
        let g1 = six_cycle();
        let rr_a = root_reasons(&g1, &arg("a"), Semantics::Complete).unwrap();
        assert_eq!(
            rr_a.entries(),
            &[ReasonSet::default(), reasons(&["a"]), ReasonSet::default()]
        );
        let rr_b = root_reasons(&g1, &arg("b"), Semantics::Complete).unwrap();
        assert_eq!(
            rr_b.entries(),
            &[ReasonSet::default(), ReasonSet::default(), reasons(&["b"])]
        );

        let g2 = mutual_pair();
        let rr_a2 = root_reasons(&g2, &arg("a"), Semantics::Complete).unwrap();
        assert_eq!(
            rr_a2.entries(),
            &[ReasonSet::default(), reasons(&["a"]), ReasonSet::default()]
        );
        assert!(rr_a.multiset_eq(&rr_a2));
    }

    #[test]
    fn arguments_in_no_extension_get_empty_reasons() {
        let g = two_loops_with_chain();
        let rr_f = root_reasons(&g, &arg("f"), Semantics::Complete).unwrap();
        assert_eq!(rr_f.len(), 3);
        assert!(rr_f.entries().iter().all(|r| r.is_empty()));
    }

    #[test]
    fn initial_arguments_always_get_the_empty_marker() {
        let g = two_loops_with_chain();
        let rr_e = root_reasons(&g, &arg("e"), Semantics::Complete).unwrap();
        assert_eq!(rr_e.len(), 3);
        assert!(rr_e
            .entries()
            .iter()
            .all(|r| *r == ReasonSet::empty_marker()));
        let dr_e = direct_reasons(&g, &arg("e"), Semantics::Complete).unwrap();
        assert!(dr_e
            .entries()
            .iter()
            .all(|r| *r == ReasonSet::empty_marker()));
    }

    #[test]
    fn unknown_arguments_are_rejected() {
        let g = chain3();
        assert_eq!(
            root_reasons(&g, &arg("zz"), Semantics::Complete).unwrap_err(),
            Error::UnknownArgument("zz".into())
        );
    }

    #[test]
    fn reason_set_rendering() {
        assert_eq!(format!("{}", reasons(&["b", "g"])), "{b,g}");
        assert_eq!(format!("{}", ReasonSet::empty_marker()), "{EMPTY}");
        assert_eq!(format!("{}", ReasonSet::default()), "{}");
    }
}
