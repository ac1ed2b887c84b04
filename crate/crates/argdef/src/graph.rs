//! Argument graphs: finite sets of named arguments with a binary attack
//! relation, plus the elementary notions built on top of it (attackers,
//! initial arguments, conflict-freeness, defense of an argument by a set).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// The reserved token used to render the empty defender slot; it is rejected
/// as an argument name so that serialized output stays unambiguous.
pub const EMPTY_TOKEN: &str = "EMPTY";

/// Name of an argument. Identity is by name, globally across graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ArgId(String);

impl ArgId {
    /// Validates and wraps an argument name. Names are non-empty `[A-Za-z0-9_]+`
    /// tokens; `EMPTY` is reserved for the empty defender slot.
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        let ok = !name.is_empty()
            && name != EMPTY_TOKEN
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if ok {
            Ok(ArgId(name))
        } else {
            Err(Error::InvalidArgumentName(name))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ArgId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An immutable argument graph: a finite set of arguments and an attack
/// relation between them. Self-attacks are permitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentGraph {
    arguments: BTreeSet<ArgId>,
    attacks: BTreeSet<(ArgId, ArgId)>,
    attackers: BTreeMap<ArgId, BTreeSet<ArgId>>,
    attackees: BTreeMap<ArgId, BTreeSet<ArgId>>,
}

impl ArgumentGraph {
    /// Builds a graph from its argument set and attack relation. Every attack
    /// endpoint must be a declared argument.
    pub fn new(
        arguments: impl IntoIterator<Item = ArgId>,
        attacks: impl IntoIterator<Item = (ArgId, ArgId)>,
    ) -> Result<Self> {
        let arguments: BTreeSet<ArgId> = arguments.into_iter().collect();
        let attacks: BTreeSet<(ArgId, ArgId)> = attacks.into_iter().collect();
        let mut attackers: BTreeMap<ArgId, BTreeSet<ArgId>> = BTreeMap::new();
        let mut attackees: BTreeMap<ArgId, BTreeSet<ArgId>> = BTreeMap::new();
        for (src, dst) in &attacks {
            for end in [src, dst] {
                if !arguments.contains(end) {
                    return Err(Error::UndeclaredEndpoint(end.name().to_owned()));
                }
            }
            attackers.entry(dst.clone()).or_default().insert(src.clone());
            attackees.entry(src.clone()).or_default().insert(dst.clone());
        }
        Ok(ArgumentGraph {
            arguments,
            attacks,
            attackers,
            attackees,
        })
    }

    /// Convenience constructor over string names, handy in tests and examples.
    pub fn build<'a>(
        arguments: impl IntoIterator<Item = &'a str>,
        attacks: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let arguments = arguments
            .into_iter()
            .map(ArgId::new)
            .collect::<Result<Vec<_>>>()?;
        let attacks = attacks
            .into_iter()
            .map(|(s, d)| Ok((ArgId::new(s)?, ArgId::new(d)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(arguments, attacks)
    }

    pub fn empty() -> Self {
        ArgumentGraph::new([], []).expect("empty graph is always valid")
    }

    pub fn arguments(&self) -> &BTreeSet<ArgId> {
        &self.arguments
    }

    pub fn attacks(&self) -> &BTreeSet<(ArgId, ArgId)> {
        &self.attacks
    }

    pub fn contains(&self, a: &ArgId) -> bool {
        self.arguments.contains(a)
    }

    pub fn attacks_pair(&self, src: &ArgId, dst: &ArgId) -> bool {
        self.attackees
            .get(src)
            .is_some_and(|set| set.contains(dst))
    }

    fn check_known(&self, a: &ArgId) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::UnknownArgument(a.name().to_owned()))
        }
    }

    /// The set of arguments attacking `a`.
    pub fn attackers(&self, a: &ArgId) -> Result<BTreeSet<ArgId>> {
        self.check_known(a)?;
        Ok(self.attackers.get(a).cloned().unwrap_or_default())
    }

    /// The set of arguments attacked by `a`.
    pub fn attackees(&self, a: &ArgId) -> Result<BTreeSet<ArgId>> {
        self.check_known(a)?;
        Ok(self.attackees.get(a).cloned().unwrap_or_default())
    }

    /// An argument is initial when nothing attacks it.
    pub fn is_initial(&self, a: &ArgId) -> Result<bool> {
        self.check_known(a)?;
        Ok(!self.attackers.contains_key(a))
    }

    /// A set is conflict-free when no member attacks a member (a self-attacker
    /// is in conflict with itself).
    pub fn is_conflict_free(&self, set: &BTreeSet<ArgId>) -> Result<bool> {
        for a in set {
            self.check_known(a)?;
        }
        Ok(!set
            .iter()
            .any(|a| set.iter().any(|b| self.attacks_pair(a, b))))
    }

    /// `set` defends `a` when every attacker of `a` is attacked by `set`.
    pub fn set_defends(&self, set: &BTreeSet<ArgId>, a: &ArgId) -> Result<bool> {
        for m in set {
            self.check_known(m)?;
        }
        self.check_known(a)?;
        let attackers = self.attackers.get(a);
        Ok(attackers.into_iter().flatten().all(|attacker| {
            set.iter().any(|defender| self.attacks_pair(defender, attacker))
        }))
    }

    /// Component-wise union of two graphs; arguments are identified by name.
    pub fn union(&self, other: &ArgumentGraph) -> ArgumentGraph {
        ArgumentGraph::new(
            self.arguments.iter().chain(&other.arguments).cloned(),
            self.attacks.iter().chain(&other.attacks).cloned(),
        )
        .expect("union of valid graphs is valid")
    }
}

/// A set of arguments accepted together under some semantics.
///
/// Extensions order by cardinality first and member names second, which is
/// the canonical order used everywhere in output.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Extension {
    members: BTreeSet<ArgId>,
}

impl Extension {
    pub fn new(members: impl IntoIterator<Item = ArgId>) -> Self {
        Extension {
            members: members.into_iter().collect(),
        }
    }

    pub fn members(&self) -> &BTreeSet<ArgId> {
        &self.members
    }

    pub fn contains(&self, a: &ArgId) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &Extension) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl FromIterator<ArgId> for Extension {
    fn from_iter<T: IntoIterator<Item = ArgId>>(iter: T) -> Self {
        Extension::new(iter)
    }
}

impl Ord for Extension {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Extension {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}
