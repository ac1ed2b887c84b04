//! Deliberately naive reference implementations: every enumeration is redone
//! by checking the defining clauses over all subsets, sharing data types with
//! the main engine but none of its search code. Desk-scale graphs only.

use std::collections::BTreeSet;

use rand::Rng;

use crate::defense_semantics::DefenseExtension;
use crate::defense::{DefenseGraph, DefenseNode};
use crate::error::{Error, Result};
use crate::graph::{ArgId, ArgumentGraph, Extension};
use crate::semantics::Semantics;

/// Largest argument count accepted by [`brute_force_extensions`].
pub const MAX_BRUTE_FORCE_ARGUMENTS: usize = 12;

/// Largest defense count accepted by [`brute_force_defense_extensions`].
pub const MAX_BRUTE_FORCE_DEFENSES: usize = 16;

/// Largest argument count accepted by [`enumerate_all_graphs`].
pub const MAX_EXHAUSTIVE_ARGUMENTS: usize = 4;

fn subsets<T: Ord + Clone>(items: &[T]) -> impl Iterator<Item = BTreeSet<T>> + '_ {
    (0u32..(1u32 << items.len())).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, item)| item.clone())
            .collect()
    })
}

/// Checks every subset of the arguments against the literal defining clauses
/// of the requested semantics.
pub fn brute_force_extensions(
    g: &ArgumentGraph,
    semantics: Semantics,
) -> Result<BTreeSet<Extension>> {
    let args: Vec<ArgId> = g.arguments().iter().cloned().collect();
    if args.len() > MAX_BRUTE_FORCE_ARGUMENTS {
        return Err(Error::TooLarge {
            limit: MAX_BRUTE_FORCE_ARGUMENTS,
            actual: args.len(),
        });
    }
    let attacks = |a: &ArgId, b: &ArgId| g.attacks_pair(a, b);
    let conflict_free =
        |s: &BTreeSet<ArgId>| !s.iter().any(|a| s.iter().any(|b| attacks(a, b)));
    let defends = |s: &BTreeSet<ArgId>, a: &ArgId| {
        g.arguments()
            .iter()
            .filter(|attacker| attacks(attacker, a))
            .all(|attacker| s.iter().any(|d| attacks(d, attacker)))
    };
    let admissible =
        |s: &BTreeSet<ArgId>| conflict_free(s) && s.iter().all(|a| defends(s, a));
    let complete = |s: &BTreeSet<ArgId>| {
        admissible(s)
            && g.arguments()
                .iter()
                .filter(|a| defends(s, a))
                .all(|a| s.contains(a))
    };
    let all_complete: Vec<BTreeSet<ArgId>> =
        subsets(&args).filter(|s| complete(s)).collect();
    let chosen: Vec<BTreeSet<ArgId>> = match semantics {
        Semantics::Complete => all_complete,
        Semantics::Grounded => all_complete
            .iter()
            .filter(|s| all_complete.iter().all(|other| s.is_subset(other)))
            .cloned()
            .collect(),
        Semantics::Preferred => all_complete
            .iter()
            .filter(|s| {
                !all_complete
                    .iter()
                    .any(|other| *s != other && s.is_subset(other))
            })
            .cloned()
            .collect(),
        Semantics::Stable => subsets(&args)
            .filter(|s| {
                conflict_free(s)
                    && g.arguments()
                        .iter()
                        .filter(|a| !s.contains(*a))
                        .all(|outsider| s.iter().any(|m| attacks(m, outsider)))
            })
            .collect(),
    };
    Ok(chosen.into_iter().map(Extension::new).collect())
}

/// Checks every subset of the defenses against the literal defining clauses
/// of the defense semantics.
pub fn brute_force_defense_extensions(
    dg: &DefenseGraph,
    semantics: Semantics,
) -> Result<BTreeSet<DefenseExtension>> {
    let defenses: Vec<DefenseNode> = dg.defenses().cloned().collect();
    if defenses.len() > MAX_BRUTE_FORCE_DEFENSES {
        return Err(Error::TooLarge {
            limit: MAX_BRUTE_FORCE_DEFENSES,
            actual: defenses.len(),
        });
    }
    let attacks = |x: &DefenseNode, y: &DefenseNode| dg.attacks_node(x, y);
    let conflict_free =
        |s: &BTreeSet<DefenseNode>| !s.iter().any(|x| s.iter().any(|y| attacks(x, y)));
    let defends = |s: &BTreeSet<DefenseNode>, x: &DefenseNode| {
        dg.nodes()
            .iter()
            .filter(|y| attacks(y, x))
            .all(|y| s.iter().any(|z| attacks(z, y)))
    };
    let admissible =
        |s: &BTreeSet<DefenseNode>| conflict_free(s) && s.iter().all(|x| defends(s, x));
    let complete = |s: &BTreeSet<DefenseNode>| {
        admissible(s)
            && defenses
                .iter()
                .filter(|x| defends(s, x))
                .all(|x| s.contains(x))
    };
    let all_complete: Vec<BTreeSet<DefenseNode>> =
        subsets(&defenses).filter(|s| complete(s)).collect();
    let chosen: Vec<BTreeSet<DefenseNode>> = match semantics {
        Semantics::Complete => all_complete,
        Semantics::Grounded => all_complete
            .iter()
            .filter(|s| all_complete.iter().all(|other| s.is_subset(other)))
            .cloned()
            .collect(),
        Semantics::Preferred => all_complete
            .iter()
            .filter(|s| {
                !all_complete
                    .iter()
                    .any(|other| *s != other && s.is_subset(other))
            })
            .cloned()
            .collect(),
        Semantics::Stable => subsets(&defenses)
            .filter(|s| {
                conflict_free(s)
                    && dg
                        .nodes()
                        .iter()
                        .filter(|n| !s.contains(*n))
                        .all(|outsider| s.iter().any(|m| attacks(m, outsider)))
            })
            .collect(),
    };
    chosen
        .into_iter()
        .map(DefenseExtension::new)
        .collect::<Result<BTreeSet<_>>>()
}

/// Root reasons recomputed by depth-first path search over the defense pairs
/// of the extension instead of the closure formula.
pub fn brute_force_root_reason(
    g: &ArgumentGraph,
    a: &ArgId,
    ext: &DefenseExtension,
) -> Result<crate::reasons::ReasonSet> {
    if !g.contains(a) {
        return Err(Error::UnknownArgument(a.name().to_owned()));
    }
    if g.is_initial(a)? {
        return Ok(crate::reasons::ReasonSet::empty_marker());
    }
    // reaches(x, y): some non-empty chain of defense pairs leads from x to y.
    let reaches = |from: &ArgId, to: &ArgId| -> bool {
        let mut stack = vec![from.clone()];
        let mut seen = BTreeSet::new();
        while let Some(current) = stack.pop() {
            for node in ext.members() {
                if node.defender().as_arg() == Some(&current) {
                    if node.defendee() == to {
                        return true;
                    }
                    if seen.insert(node.defendee().clone()) {
                        stack.push(node.defendee().clone());
                    }
                }
            }
        }
        false
    };
    let defends_itself_directly = |b: &ArgId| {
        ext.members()
            .iter()
            .any(|n| n.defender().as_arg() == Some(b) && n.defendee() == b)
    };
    let mut members = Vec::new();
    if reaches(a, a) {
        members.push(a.clone());
    }
    for b in g.arguments() {
        if reaches(b, a) && (g.is_initial(b)? || defends_itself_directly(b)) {
            members.push(b.clone());
        }
    }
    Ok(crate::reasons::ReasonSet::of_args(members))
}

/// All labelled digraphs on `n` arguments, each exactly once.
pub fn enumerate_all_graphs(n: usize) -> Result<impl Iterator<Item = ArgumentGraph>> {
    if n > MAX_EXHAUSTIVE_ARGUMENTS {
        return Err(Error::TooLarge {
            limit: MAX_EXHAUSTIVE_ARGUMENTS,
            actual: n,
        });
    }
    let names: Vec<ArgId> = (0..n)
        .map(|i| ArgId::new(format!("{}", (b'a' + i as u8) as char)).expect("valid name"))
        .collect();
    let edge_slots = n * n;
    Ok((0u32..(1u32 << edge_slots)).map(move |mask| {
        let attacks = (0..edge_slots)
            .filter(|slot| mask & (1 << slot) != 0)
            .map(|slot| (names[slot / n].clone(), names[slot % n].clone()));
        ArgumentGraph::new(names.iter().cloned(), attacks).expect("endpoints declared")
    }))
}

/// A random graph on `n` fixed-name arguments where each ordered pair attacks
/// with probability `p`. Callers seed the generator to keep runs reproducible.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> ArgumentGraph {
    assert!(n <= 26, "single-letter argument names only");
    let names: Vec<ArgId> = (0..n)
        .map(|i| ArgId::new(format!("{}", (b'a' + i as u8) as char)).expect("valid name"))
        .collect();
    let mut attacks = Vec::new();
    for src in &names {
        for dst in &names {
            if rng.gen_bool(p) {
                attacks.push((src.clone(), dst.clone()));
            }
        }
    }
    ArgumentGraph::new(names.iter().cloned(), attacks).expect("endpoints declared")
}

/// The edge probabilities used by the randomized suites.
pub const EDGE_PROBABILITIES: [f64; 3] = [0.15, 0.3, 0.5];
