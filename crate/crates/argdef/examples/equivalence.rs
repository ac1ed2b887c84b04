//! Compare argument graphs under standard, strong and defense equivalence.
//!
//! The chain a -> b -> c and the cut chain a -> b, c have the same complete
//! extensions but different defense structure; the diamond graph has a
//! different attack relation yet exactly the same defenses as the chain.
//!
//! Run with: cargo run --example equivalence

use argdef::{
    defense_equivalent, standard_equivalent, strong_equivalent_co, ArgumentGraph, Semantics,
};

fn main() {
    let chain = ArgumentGraph::build(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
    let cut = ArgumentGraph::build(["a", "b", "c"], [("a", "b")]).unwrap();
    let diamond = ArgumentGraph::build(
        ["a", "b", "c", "d"],
        [("a", "b"), ("a", "d"), ("b", "c"), ("d", "c")],
    )
    .unwrap();

    for (name, left, right) in [
        ("chain vs cut", &chain, &cut),
        ("chain vs diamond", &chain, &diamond),
    ] {
        println!("{name}:");
        let standard = standard_equivalent(left, right, Semantics::Complete);
        println!("  standard:  {}", verdict(&standard));
        let strong = strong_equivalent_co(left, right);
        println!("  strong:    {}", verdict(&strong));
        let defense = defense_equivalent(left, right, Semantics::Complete);
        println!("  defense:   {}", verdict(&defense));
    }
}

fn verdict(v: &argdef::EquivalenceVerdict) -> String {
    if v.equivalent {
        "equivalent".to_owned()
    } else {
        match &v.witness {
            Some(w) => format!("not equivalent ({w})"),
            None => "not equivalent".to_owned(),
        }
    }
}
