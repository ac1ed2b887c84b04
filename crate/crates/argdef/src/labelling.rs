//! Three-valued labelling backtracker used to enumerate complete extensions.
//!
//! Works on an indexed digraph in which only a subset of the nodes is
//! eligible for membership; ineligible nodes can attack but never be
//! accepted. Argument graphs use the engine with every node eligible,
//! defense graphs with the defeaters marked ineligible.

use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    Unknown,
    In,
    Out,
    Undec,
}

pub(crate) struct IndexedDigraph {
    n: usize,
    attackers: Vec<Vec<usize>>,
    attackees: Vec<Vec<usize>>,
    eligible: Vec<bool>,
}

impl IndexedDigraph {
    pub(crate) fn new(n: usize, edges: &[(usize, usize)], eligible: Vec<bool>) -> Self {
        assert_eq!(eligible.len(), n);
        let mut attackers = vec![Vec::new(); n];
        let mut attackees = vec![Vec::new(); n];
        for &(src, dst) in edges {
            attackers[dst].push(src);
            attackees[src].push(dst);
        }
        for list in attackers.iter_mut().chain(attackees.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        IndexedDigraph {
            n,
            attackers,
            attackees,
            eligible,
        }
    }

    /// Enumerates the in-sets of all complete labellings: sets `S` of eligible
    /// nodes that are conflict-free, defend all of their members against every
    /// attacker (eligible or not) and contain each eligible node they defend.
    pub(crate) fn complete_in_sets(&self) -> Vec<BTreeSet<usize>> {
        let mut found = Vec::new();
        let mut labels = vec![Label::Unknown; self.n];
        // Nodes with no attackers are In (if eligible) in every complete
        // labelling; seed the search with those forced labels.
        let mut consistent = true;
        for v in 0..self.n {
            if self.attackers[v].is_empty() && self.eligible[v] && labels[v] == Label::Unknown {
                consistent = self.assign(&mut labels, v, Label::In);
                if !consistent {
                    break;
                }
            }
        }
        if consistent {
            self.search(&labels, &mut found);
        }
        found
    }

    fn search(&self, labels: &[Label], found: &mut Vec<BTreeSet<usize>>) {
        match (0..self.n).find(|&v| self.eligible[v] && labels[v] == Label::Unknown) {
            Some(v) => {
                for candidate in [Label::In, Label::Out, Label::Undec] {
                    let mut branch = labels.to_vec();
                    if self.assign(&mut branch, v, candidate) {
                        self.search(&branch, found);
                    }
                }
            }
            None => {
                let mut leaf = labels.to_vec();
                self.resolve_ineligible(&mut leaf);
                if self.is_complete(&leaf) {
                    let in_set = (0..self.n)
                        .filter(|&v| leaf[v] == Label::In)
                        .collect::<BTreeSet<_>>();
                    found.push(in_set);
                }
            }
        }
    }

    /// Sets `label` on `v` and propagates the forced consequences. Returns
    /// false on contradiction.
    fn assign(&self, labels: &mut [Label], v: usize, label: Label) -> bool {
        match labels[v] {
            Label::Unknown => {}
            current if current == label => return true,
            _ => return false,
        }
        if label == Label::In && !self.eligible[v] {
            return false;
        }
        labels[v] = label;
        match label {
            Label::In => {
                // All attackers and all attackees of an In node are Out.
                for &u in self.attackers[v].iter().chain(&self.attackees[v]) {
                    match labels[u] {
                        Label::In | Label::Undec => return false,
                        Label::Out => {}
                        Label::Unknown => {
                            if !self.assign(labels, u, Label::Out) {
                                return false;
                            }
                        }
                    }
                }
            }
            Label::Out => {
                // An Out node needs an In attacker eventually; fail early when
                // no attacker can still become In.
                let feasible = self.attackers[v].iter().any(|&u| {
                    labels[u] == Label::In || (labels[u] == Label::Unknown && self.eligible[u])
                });
                if !feasible {
                    return false;
                }
                // Whenever every attacker of an eligible node is Out, that
                // node is forced In.
                for &w in &self.attackees[v] {
                    if self.eligible[w]
                        && labels[w] == Label::Unknown
                        && self.attackers[w].iter().all(|&u| labels[u] == Label::Out)
                        && !self.assign(labels, w, Label::In)
                    {
                        return false;
                    }
                }
            }
            Label::Undec => {
                // No attacker of an Undec node may be In, and not all of its
                // attackers may be Out.
                if self.attackers[v].iter().any(|&u| labels[u] == Label::In) {
                    return false;
                }
                if self.attackers[v].iter().all(|&u| labels[u] == Label::Out) {
                    return false;
                }
                // An Undec node can never sit next to an In attackee either:
                // an In attackee would force v Out.
                for &w in &self.attackees[v] {
                    if labels[w] == Label::In {
                        return false;
                    }
                }
            }
            Label::Unknown => unreachable!(),
        }
        true
    }

    /// Once every eligible node is labelled, the status of the ineligible
    /// nodes follows from the In set alone.
    fn resolve_ineligible(&self, labels: &mut [Label]) {
        for v in 0..self.n {
            if labels[v] == Label::Unknown {
                let attacked = self.attackers[v].iter().any(|&u| labels[u] == Label::In);
                labels[v] = if attacked { Label::Out } else { Label::Undec };
            }
        }
    }

    /// Full check of the complete-labelling conditions.
    fn is_complete(&self, labels: &[Label]) -> bool {
        (0..self.n).all(|v| {
            let some_in = self.attackers[v].iter().any(|&u| labels[u] == Label::In);
            let all_out = self.attackers[v].iter().all(|&u| labels[u] == Label::Out);
            match labels[v] {
                Label::In => self.eligible[v] && all_out,
                Label::Out => some_in,
                Label::Undec => !some_in && !all_out || (!self.eligible[v] && !some_in),
                Label::Unknown => false,
            }
        })
    }
}
