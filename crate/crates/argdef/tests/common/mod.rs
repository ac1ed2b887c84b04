//! Helpers shared by the integration suites: fixture graphs, corpus
//! generators and small constructors.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use argdef::{
    oracle, ArgId, ArgumentGraph, DefenderSlot, DefenseExtension, DefenseNode, Extension,
    EMPTY_TOKEN,
};

/// Seed of the random ≤7-argument corpus; recorded so failures reproduce.
pub const RANDOM_CORPUS_SEED: u64 = 0x5EED_A76D;

/// Seed of the pair sampler used by the implication suites.
pub const PAIR_SAMPLER_SEED: u64 = 0x5EED_9A12;

pub fn arg(name: &str) -> ArgId {
    ArgId::new(name).unwrap()
}

pub fn ext(names: &[&str]) -> Extension {
    Extension::new(names.iter().map(|n| arg(n)))
}

pub fn exts(list: &[&[&str]]) -> BTreeSet<Extension> {
    list.iter().map(|names| ext(names)).collect()
}

pub fn slot(name: &str) -> DefenderSlot {
    if name == EMPTY_TOKEN {
        DefenderSlot::Empty
    } else {
        DefenderSlot::Arg(arg(name))
    }
}

pub fn defense(defender: &str, defendee: &str) -> DefenseNode {
    DefenseNode::defense(slot(defender), arg(defendee))
}

pub fn defeater(defender: &str, defendee: &str) -> DefenseNode {
    DefenseNode::defeater(slot(defender), arg(defendee))
}

pub fn defenses(pairs: &[(&str, &str)]) -> BTreeSet<DefenseNode> {
    pairs.iter().map(|(x, b)| defense(x, b)).collect()
}

pub fn defeaters(pairs: &[(&str, &str)]) -> BTreeSet<DefenseNode> {
    pairs.iter().map(|(x, b)| defeater(x, b)).collect()
}

pub fn dext(pairs: &[(&str, &str)]) -> DefenseExtension {
    DefenseExtension::new(pairs.iter().map(|(x, b)| defense(x, b))).unwrap()
}

pub fn dexts(list: &[&[(&str, &str)]]) -> BTreeSet<DefenseExtension> {
    list.iter().map(|pairs| dext(pairs)).collect()
}

pub fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn load_fixture(name: &str) -> ArgumentGraph {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    argdef::io::parse_tgf(&text).expect("fixture parses")
}

/// The seeded random corpus: 1,000 graphs with 5 to 7 arguments, edge
/// probabilities cycling through the recorded values.
pub fn random_corpus() -> Vec<ArgumentGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_CORPUS_SEED);
    (0..1000)
        .map(|i| {
            let n = 5 + i % 3;
            let p = oracle::EDGE_PROBABILITIES[(i / 3) % 3];
            oracle::random_graph(&mut rng, n, p)
        })
        .collect()
}

/// A smaller seeded corpus of a fixed size over `n`-argument graphs.
pub fn sampled_corpus(n: usize, count: usize, seed: u64) -> Vec<ArgumentGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let p = oracle::EDGE_PROBABILITIES[i % 3];
            oracle::random_graph(&mut rng, n, p)
        })
        .collect()
}

/// All graphs with at most `max` arguments (inclusive), exhaustively.
pub fn exhaustive_corpus(max: usize) -> Vec<ArgumentGraph> {
    (0..=max)
        .flat_map(|n| oracle::enumerate_all_graphs(n).expect("within bound"))
        .collect()
}
