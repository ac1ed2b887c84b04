//! Trivial Graph Format: argument names, a lone `#`, then `src dst` lines.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{ArgId, ArgumentGraph};

/// Parses a TGF document. Lines before the `#` separator declare arguments
/// (first whitespace-separated token per line), lines after it declare
/// attacks; blank lines are ignored.
pub fn parse_tgf(text: &str) -> Result<ArgumentGraph> {
    let mut arguments: BTreeSet<ArgId> = BTreeSet::new();
    let mut attacks = Vec::new();
    let mut seen_separator = false;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if seen_separator {
                return Err(Error::Syntax("more than one `#` separator".into()));
            }
            seen_separator = true;
            continue;
        }
        if !seen_separator {
            let token = line.split_whitespace().next().expect("non-empty line");
            let id = ArgId::new(token)?;
            if !arguments.insert(id) {
                return Err(Error::DuplicateArgument(token.to_owned()));
            }
        } else {
            let mut tokens = line.split_whitespace();
            let (src, dst) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(src), Some(dst), None) => (src, dst),
                _ => {
                    return Err(Error::Syntax(format!(
                        "attack line must be `src dst`, got `{line}`"
                    )))
                }
            };
            let src = ArgId::new(src)?;
            let dst = ArgId::new(dst)?;
            for end in [&src, &dst] {
                if !arguments.contains(end) {
                    return Err(Error::UndeclaredEndpoint(end.name().to_owned()));
                }
            }
            attacks.push((src, dst));
        }
    }
    if !seen_separator {
        return Err(Error::MissingSeparator);
    }
    ArgumentGraph::new(arguments, attacks)
}

/// Serializes a graph as TGF in canonical order.
pub fn to_tgf(g: &ArgumentGraph) -> String {
    let mut out = String::new();
    for a in g.arguments() {
        writeln!(out, "{a}").expect("write to string");
    }
    out.push_str("#\n");
    for (src, dst) in g.attacks() {
        writeln!(out, "{src} {dst}").expect("write to string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::chain3;

    #[test]
    fn parses_a_chain() {
        let g = parse_tgf("a\nb\nc\n#\na b\nb c\n").unwrap();
        assert_eq!(g, chain3());
    }

    #[test]
    fn parses_a_self_attacker() {
        let g = parse_tgf("a\n#\na a\n").unwrap();
        assert!(g.attacks_pair(
            &ArgId::new("a").unwrap(),
            &ArgId::new("a").unwrap()
        ));
    }

    #[test]
    fn rejects_malformed_documents() {
        assert_eq!(
            parse_tgf("a\n#\na b\n").unwrap_err(),
            Error::UndeclaredEndpoint("b".into())
        );
        assert_eq!(parse_tgf("a\nb\n").unwrap_err(), Error::MissingSeparator);
        assert_eq!(
            parse_tgf("a\na\n#\n").unwrap_err(),
            Error::DuplicateArgument("a".into())
        );
        assert!(parse_tgf("a\nb\n#\na\n").is_err());
    }

    #[test]
    fn labels_after_the_name_are_ignored() {
        let g = parse_tgf("a first argument\nb second\n#\na b\n").unwrap();
        assert_eq!(g.arguments().len(), 2);
    }

    #[test]
    fn serialization_round_trips() {
        let g = chain3();
        assert_eq!(parse_tgf(&to_tgf(&g)).unwrap(), g);
        assert_eq!(to_tgf(&g), "a\nb\nc\n#\na b\nb c\n");
    }
}
