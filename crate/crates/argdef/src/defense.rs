//! Defenses, defeaters of defenses and the defense graph induced by an
//! argument graph.
//!
//! A defense `<x,b>` records that accepting `x` is a (partial) reason to
//! accept `b`: `x` counter-attacks one of `b`'s attackers while `{x,b}` stays
//! conflict-free. `<EMPTY,b>` records that an initial `b` needs no reason.
//! A defeater `(x,b)` is a defense-shaped pair disqualified by internal
//! conflict or by self-attack involvement; it can attack defenses but can
//! never be accepted itself.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{ArgId, ArgumentGraph, EMPTY_TOKEN};

/// The defender position of a node: an argument, or the empty marker for
/// defenses of initial arguments.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DefenderSlot {
    /// The empty position; sorts before every argument.
    Empty,
    Arg(ArgId),
}

impl DefenderSlot {
    pub fn arg(name: &str) -> Result<Self> {
        Ok(DefenderSlot::Arg(ArgId::new(name)?))
    }

    pub fn as_arg(&self) -> Option<&ArgId> {
        match self {
            DefenderSlot::Empty => None,
            DefenderSlot::Arg(a) => Some(a),
        }
    }
}

impl fmt::Display for DefenderSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DefenderSlot::Empty => f.write_str(EMPTY_TOKEN),
            DefenderSlot::Arg(a) => write!(f, "{a}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeKind {
    Defense,
    Defeater,
}

/// A node of the defense graph. Identity is the (defender, defendee) pair;
/// within one graph a pair is either a defense or a defeater, never both.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DefenseNode {
    defender: DefenderSlot,
    defendee: ArgId,
    kind: NodeKind,
}

impl DefenseNode {
    pub fn new(defender: DefenderSlot, defendee: ArgId, kind: NodeKind) -> Self {
        DefenseNode {
            defender,
            defendee,
            kind,
        }
    }

    pub fn defense(defender: DefenderSlot, defendee: ArgId) -> Self {
        Self::new(defender, defendee, NodeKind::Defense)
    }

    pub fn defeater(defender: DefenderSlot, defendee: ArgId) -> Self {
        Self::new(defender, defendee, NodeKind::Defeater)
    }

    pub fn defender(&self) -> &DefenderSlot {
        &self.defender
    }

    pub fn defendee(&self) -> &ArgId {
        &self.defendee
    }

    pub fn kind(&self) -> NodeKind {
        self.kind
    }

    pub fn is_defense(&self) -> bool {
        self.kind == NodeKind::Defense
    }
}

impl fmt::Display for DefenseNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            NodeKind::Defense => write!(f, "<{},{}>", self.defender, self.defendee),
            NodeKind::Defeater => write!(f, "({},{})", self.defender, self.defendee),
        }
    }
}

/// Classifies a (defender, defendee) pair of `g`, if it is a node at all.
///
/// For a pair of arguments `<x,b>` is a defense when `{x,b}` is conflict-free
/// and some `c` satisfies `x -> c -> b`; with the conflict-freeness negated
/// (and `c` required to be a third argument) the pair is a defeater. For the
/// empty slot, `<EMPTY,b>` is a defense when `b` is initial, and `(EMPTY,b)`
/// a defeater when `b` is self-attacked or attacked by a self-attacker.
pub fn classify(g: &ArgumentGraph, defender: &DefenderSlot, defendee: &ArgId) -> Option<NodeKind> {
    match defender {
        DefenderSlot::Arg(x) => {
            if !g.contains(x) || !g.contains(defendee) {
                return None;
            }
            let pair: BTreeSet<ArgId> = [x.clone(), defendee.clone()].into_iter().collect();
            let conflict_free = g.is_conflict_free(&pair).expect("endpoints known");
            if conflict_free {
                let witnessed = g
                    .arguments()
                    .iter()
                    .any(|c| g.attacks_pair(x, c) && g.attacks_pair(c, defendee));
                witnessed.then_some(NodeKind::Defense)
            } else {
                let witnessed = g
                    .arguments()
                    .iter()
                    .filter(|c| *c != x && *c != defendee)
                    .any(|c| g.attacks_pair(x, c) && g.attacks_pair(c, defendee));
                witnessed.then_some(NodeKind::Defeater)
            }
        }
        DefenderSlot::Empty => {
            if !g.contains(defendee) {
                return None;
            }
            if g.is_initial(defendee).expect("endpoint known") {
                Some(NodeKind::Defense)
            } else {
                let tainted = g
                    .attackers(defendee)
                    .expect("endpoint known")
                    .iter()
                    .any(|c| g.attacks_pair(c, c))
                    || g.attacks_pair(defendee, defendee);
                tainted.then_some(NodeKind::Defeater)
            }
        }
    }
}

fn slots(g: &ArgumentGraph) -> Vec<DefenderSlot> {
    std::iter::once(DefenderSlot::Empty)
        .chain(g.arguments().iter().cloned().map(DefenderSlot::Arg))
        .collect()
}

/// All defenses of `g`, including self-defenses `<x,x>` and the `<EMPTY,b>`
/// defenses of initial arguments.
pub fn enumerate_defenses(g: &ArgumentGraph) -> BTreeSet<DefenseNode> {
    enumerate_kind(g, NodeKind::Defense)
}

/// All defeaters of defenses of `g`.
pub fn enumerate_defeaters(g: &ArgumentGraph) -> BTreeSet<DefenseNode> {
    enumerate_kind(g, NodeKind::Defeater)
}

fn enumerate_kind(g: &ArgumentGraph, kind: NodeKind) -> BTreeSet<DefenseNode> {
    let mut nodes = BTreeSet::new();
    for defender in slots(g) {
        for defendee in g.arguments() {
            if classify(g, &defender, defendee) == Some(kind) {
                nodes.insert(DefenseNode::new(defender.clone(), defendee.clone(), kind));
            }
        }
    }
    nodes
}

/// Whether `[x,a]` attacks `[y,b]`: true when `x -> y`, `x -> b`, `a -> y` or
/// `a -> b` holds in the source graph. The empty slot takes part in no attack.
///
/// Both nodes must belong to the defense graph of `g`.
pub fn node_attacks(g: &ArgumentGraph, from: &DefenseNode, to: &DefenseNode) -> Result<bool> {
    for node in [from, to] {
        if classify(g, node.defender(), node.defendee()) != Some(node.kind()) {
            return Err(Error::NodeNotInGraph(node.to_string()));
        }
    }
    Ok(slot_pair_attacks(g, from, to))
}

fn slot_pair_attacks(g: &ArgumentGraph, from: &DefenseNode, to: &DefenseNode) -> bool {
    let x = from.defender().as_arg();
    let a = from.defendee();
    let y = to.defender().as_arg();
    let b = to.defendee();
    let hits = |src: Option<&ArgId>, dst: Option<&ArgId>| match (src, dst) {
        (Some(s), Some(d)) => g.attacks_pair(s, d),
        _ => false,
    };
    hits(x, y) || hits(x, Some(b)) || hits(Some(a), y) || hits(Some(a), Some(b))
}

/// The defense graph of an argument graph: defenses and defeaters as nodes,
/// with the induced attack relation (self-loops included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefenseGraph {
    source: ArgumentGraph,
    nodes: BTreeSet<DefenseNode>,
    edges: BTreeSet<(DefenseNode, DefenseNode)>,
    attackers: BTreeMap<DefenseNode, BTreeSet<DefenseNode>>,
}

impl DefenseGraph {
    pub fn source(&self) -> &ArgumentGraph {
        &self.source
    }

    pub fn nodes(&self) -> &BTreeSet<DefenseNode> {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<(DefenseNode, DefenseNode)> {
        &self.edges
    }

    pub fn defenses(&self) -> impl Iterator<Item = &DefenseNode> {
        self.nodes.iter().filter(|n| n.is_defense())
    }

    pub fn defeaters(&self) -> impl Iterator<Item = &DefenseNode> {
        self.nodes.iter().filter(|n| !n.is_defense())
    }

    pub fn contains(&self, node: &DefenseNode) -> bool {
        self.nodes.contains(node)
    }

    pub fn attacks_node(&self, from: &DefenseNode, to: &DefenseNode) -> bool {
        self.edges.contains(&(from.clone(), to.clone()))
    }

    /// All nodes (defenses and defeaters) attacking `node`.
    pub fn attackers_of(&self, node: &DefenseNode) -> BTreeSet<DefenseNode> {
        self.attackers.get(node).cloned().unwrap_or_default()
    }
}

/// Builds the defense graph of `g`.
pub fn build_defense_graph(g: &ArgumentGraph) -> DefenseGraph {
    let mut nodes = enumerate_defenses(g);
    nodes.extend(enumerate_defeaters(g));
    let mut edges = BTreeSet::new();
    let mut attackers: BTreeMap<DefenseNode, BTreeSet<DefenseNode>> = BTreeMap::new();
    for from in &nodes {
        for to in &nodes {
            if slot_pair_attacks(g, from, to) {
                edges.insert((from.clone(), to.clone()));
                attackers.entry(to.clone()).or_default().insert(from.clone());
            }
        }
    }
    DefenseGraph {
        source: g.clone(),
        nodes,
        edges,
        attackers,
    }
}

/// Splits the argument set of `g` into the arguments involved in defeaters,
/// the arguments involved in defenses, and the arguments attacked by the
/// latter. The union of the three parts covers every argument of `g`.
pub fn decompose_arguments(
    g: &ArgumentGraph,
) -> (BTreeSet<ArgId>, BTreeSet<ArgId>, BTreeSet<ArgId>) {
    let defeater_args: BTreeSet<ArgId> = enumerate_defeaters(g)
        .iter()
        .flat_map(|n| {
            n.defender()
                .as_arg()
                .cloned()
                .into_iter()
                .chain(std::iter::once(n.defendee().clone()))
        })
        .collect();
    let defense_args = defense_arguments(&enumerate_defenses(g)).expect("defenses only");
    let attacked: BTreeSet<ArgId> = defense_args
        .iter()
        .flat_map(|a| g.attackees(a).expect("known argument"))
        .collect();
    (defeater_args, defense_args, attacked)
}

fn ensure_defenses<'a>(
    nodes: impl IntoIterator<Item = &'a DefenseNode>,
) -> Result<Vec<&'a DefenseNode>> {
    let nodes: Vec<&DefenseNode> = nodes.into_iter().collect();
    match nodes.iter().find(|n| !n.is_defense()) {
        Some(defeater) => Err(Error::DefeaterInInput(defeater.to_string())),
        None => Ok(nodes),
    }
}

/// The defendees of a set of defenses.
pub fn defendees<'a>(
    nodes: impl IntoIterator<Item = &'a DefenseNode>,
) -> Result<BTreeSet<ArgId>> {
    Ok(ensure_defenses(nodes)?
        .into_iter()
        .map(|n| n.defendee().clone())
        .collect())
}

/// The non-empty defenders of a set of defenses.
pub fn defenders<'a>(
    nodes: impl IntoIterator<Item = &'a DefenseNode>,
) -> Result<BTreeSet<ArgId>> {
    Ok(ensure_defenses(nodes)?
        .into_iter()
        .filter_map(|n| n.defender().as_arg().cloned())
        .collect())
}

/// Defendees and defenders together: the arguments a set of defenses covers.
pub fn defense_arguments<'a>(
    nodes: impl IntoIterator<Item = &'a DefenseNode> + Clone,
) -> Result<BTreeSet<ArgId>> {
    let mut all = defendees(nodes.clone())?;
    all.extend(defenders(nodes)?);
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn arg(name: &str) -> ArgId {
        ArgId::new(name).unwrap()
    }

    fn slot(name: &str) -> DefenderSlot {
        DefenderSlot::arg(name).unwrap()
    }

    fn defense(defender: &str, defendee: &str) -> DefenseNode {
        let d = if defender == EMPTY_TOKEN {
            DefenderSlot::Empty
        } else {
            slot(defender)
        };
        DefenseNode::defense(d, arg(defendee))
    }

    fn defeater(defender: &str, defendee: &str) -> DefenseNode {
        let d = if defender == EMPTY_TOKEN {
            DefenderSlot::Empty
        } else {
            slot(defender)
        };
        DefenseNode::defeater(d, arg(defendee))
    }

    fn defenses(pairs: &[(&str, &str)]) -> BTreeSet<DefenseNode> {
        pairs.iter().map(|(x, b)| defense(x, b)).collect()
    }

    fn defeaters(pairs: &[(&str, &str)]) -> BTreeSet<DefenseNode> {
        pairs.iter().map(|(x, b)| defeater(x, b)).collect()
    }

    #[test]
    fn defenses_of_odd_cycle_tail() {
        assert_eq!(
            enumerate_defenses(&odd_cycle_tail()),
            defenses(&[("a2", "a4"), ("a3", "a5"), ("a4", "a6")])
        );
    }

    #[test]
    fn mutual_attackers_defend_themselves() {
        assert_eq!(
            enumerate_defenses(&mutual_pair()),
            defenses(&[("a", "a"), ("b", "b")])
        );
        assert_eq!(enumerate_defeaters(&mutual_pair()), BTreeSet::new());
    }

    #[test]
    fn chain_defenses_include_the_empty_slot() {
        assert_eq!(
            enumerate_defenses(&chain4()),
            defenses(&[(EMPTY_TOKEN, "a"), ("a", "c"), ("b", "d")])
        );
    }

    #[test]
    fn defeaters_of_self_loop_chain() {
        assert_eq!(
            enumerate_defeaters(&self_loop_chain()),
            defeaters(&[(EMPTY_TOKEN, "b"), (EMPTY_TOKEN, "c"), ("b", "d")])
        );
        assert_eq!(
            enumerate_defenses(&self_loop_chain()),
            defenses(&[(EMPTY_TOKEN, "a"), ("a", "c")])
        );
    }

    #[test]
    fn defeaters_of_odd_cycle_tail() {
        assert_eq!(
            enumerate_defeaters(&odd_cycle_tail()),
            defeaters(&[("a2", "a1"), ("a3", "a2"), ("a1", "a3")])
        );
    }

    #[test]
    fn defeaters_of_tainted_side_chain() {
        assert_eq!(
            enumerate_defeaters(&chain_with_tainted_side()),
            defeaters(&[(EMPTY_TOKEN, "a14"), (EMPTY_TOKEN, "a15"), ("a14", "a13")])
        );
        assert_eq!(
            enumerate_defenses(&chain_with_tainted_side()),
            defenses(&[(EMPTY_TOKEN, "a11"), ("a11", "a13")])
        );
    }

    #[test]
    fn self_attacker_chain_keeps_one_step_taint_reading() {
        // d is attacked by c, and c is not self-attacked, so (EMPTY,d) is not
        // a defeater even though c is attacked by the self-attacker b.
        let und = enumerate_defeaters(&self_loop_chain());
        assert!(!und.contains(&defeater(EMPTY_TOKEN, "d")));
    }

    #[test]
    fn defenses_and_defeaters_of_self_attacker_graph() {
        let g = chain_with_self_attacker();
        assert_eq!(
            enumerate_defenses(&g),
            defenses(&[(EMPTY_TOKEN, "a7"), ("a7", "a9")])
        );
        assert_eq!(
            enumerate_defeaters(&g),
            defeaters(&[(EMPTY_TOKEN, "a9"), (EMPTY_TOKEN, "a10")])
        );
    }

    #[test]
    fn node_attack_follows_the_source_relation() {
        let g10 = mutual_with_cycle();
        assert!(node_attacks(&g10, &defense("a", "a"), &defense("b", "b")).unwrap());
        let g3 = chain3();
        assert!(!node_attacks(&g3, &defense(EMPTY_TOKEN, "a"), &defense("a", "c")).unwrap());
        assert!(!node_attacks(&g3, &defense("a", "c"), &defense(EMPTY_TOKEN, "a")).unwrap());
        // self-loop: the defendee attacks the defender's slot
        let g6 = odd_cycle_tail();
        assert!(node_attacks(&g6, &defeater("a2", "a1"), &defeater("a2", "a1")).unwrap());
        // nodes must belong to the graph
        assert_eq!(
            node_attacks(&g3, &defense("a", "b"), &defense("a", "c")).unwrap_err(),
            Error::NodeNotInGraph("<a,b>".into())
        );
    }

    #[test]
    fn defense_graph_of_chain_is_edgeless() {
        let dg = build_defense_graph(&chain3());
        assert_eq!(
            dg.nodes(),
            &defenses(&[(EMPTY_TOKEN, "a"), ("a", "c")])
        );
        assert!(dg.edges().is_empty());
    }

    #[test]
    fn defense_graph_of_mutual_with_cycle() {
        let dg = build_defense_graph(&mutual_with_cycle());
        let mut expected = defenses(&[("a", "a"), ("b", "b")]);
        expected.extend(defeaters(&[("a", "c"), ("c", "b"), ("b", "a")]));
        assert_eq!(dg.nodes(), &expected);
        assert!(dg.attacks_node(&defense("a", "a"), &defense("b", "b")));
        assert!(dg.attacks_node(&defense("b", "b"), &defense("a", "a")));
        // (a,c) carries a self-loop via c -> a
        assert!(dg.attacks_node(&defeater("a", "c"), &defeater("a", "c")));
        // <a,a> does not reach (a,c): a attacks neither a nor c
        assert!(!dg.attacks_node(&defense("a", "a"), &defeater("a", "c")));
    }

    #[test]
    fn defense_graph_of_empty_graph_is_empty() {
        let dg = build_defense_graph(&ArgumentGraph::empty());
        assert!(dg.nodes().is_empty());
        assert!(dg.edges().is_empty());
    }

    #[test]
    fn edges_of_odd_cycle_tail_follow_the_attack_clauses() {
        // The six nodes of the defense graph and every induced edge, spelled
        // out from the four attack clauses.
        let dg = build_defense_graph(&odd_cycle_tail());
        let p = defeater("a2", "a1");
        let q = defeater("a3", "a2");
        let r = defeater("a1", "a3");
        let s = defense("a2", "a4");
        let t = defense("a3", "a5");
        let u = defense("a4", "a6");
        let expect: BTreeSet<(DefenseNode, DefenseNode)> = [
            (&p, &p), (&p, &q), (&p, &r), (&p, &s), (&p, &t),
            (&q, &p), (&q, &q), (&q, &r), (&q, &s), (&q, &t), (&q, &u),
            (&r, &p), (&r, &q), (&r, &r), (&r, &s), (&r, &u),
            (&s, &q), (&s, &r), (&s, &t),
            (&t, &p), (&t, &r), (&t, &s), (&t, &u),
            (&u, &t),
        ]
        .into_iter()
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect();
        assert_eq!(dg.edges(), &expect);
    }

    #[test]
    fn adding_an_isolated_argument_changes_no_existing_edge() {
        let g = odd_cycle_tail();
        let extended = g.union(&ArgumentGraph::build(["z9"], []).unwrap());
        let before = build_defense_graph(&g);
        let after = build_defense_graph(&extended);
        let old_edges: BTreeSet<_> = after
            .edges()
            .iter()
            .filter(|(a, b)| before.contains(a) && before.contains(b))
            .cloned()
            .collect();
        assert_eq!(&old_edges, before.edges());
    }

    #[test]
    fn decomposition_covers_the_argument_set() {
        let g = self_loop_chain();
        let (und_args, def_args, attacked) = decompose_arguments(&g);
        assert_eq!(und_args, ["b", "c", "d"].map(arg).into());
        assert_eq!(def_args, ["a", "c"].map(arg).into());
        assert_eq!(attacked, ["b", "d"].map(arg).into());
        let union: BTreeSet<_> = und_args
            .into_iter()
            .chain(def_args)
            .chain(attacked)
            .collect();
        assert_eq!(&union, g.arguments());

        let (u3, d3, a3) = decompose_arguments(&chain3());
        assert_eq!(u3, BTreeSet::new());
        assert_eq!(d3, ["a", "c"].map(arg).into());
        assert_eq!(a3, ["b"].map(arg).into());

        let (ue, de, ae) = decompose_arguments(&ArgumentGraph::empty());
        assert!(ue.is_empty() && de.is_empty() && ae.is_empty());
    }

    #[test]
    fn defense_argument_projections() {
        let d2 = defenses(&[("a", "c2"), ("c2", "c3"), ("c3", "a")]);
        assert_eq!(
            defense_arguments(&d2).unwrap(),
            ["a", "c2", "c3"].map(arg).into()
        );
        let only_empty = defenses(&[(EMPTY_TOKEN, "e")]);
        assert_eq!(defenders(&only_empty).unwrap(), BTreeSet::new());
        assert_eq!(defendees(&only_empty).unwrap(), ["e"].map(arg).into());
        assert_eq!(defense_arguments(&only_empty).unwrap(), ["e"].map(arg).into());
        assert_eq!(defense_arguments(&BTreeSet::new()).unwrap(), BTreeSet::new());
        // defeaters are rejected
        let err = defendees(&defeaters(&[("a", "b")])).unwrap_err();
        assert_eq!(err, Error::DefeaterInInput("(a,b)".into()));
    }
}
