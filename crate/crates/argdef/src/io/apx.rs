//! The aspartix fact format: `arg(x).` and `att(x,y).` facts, whitespace
//! flexible.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{ArgId, ArgumentGraph};

/// Parses an APX document. Only `arg/1` and `att/2` facts are accepted.
pub fn parse_apx(text: &str) -> Result<ArgumentGraph> {
    let mut arguments: BTreeSet<ArgId> = BTreeSet::new();
    let mut attacks = Vec::new();
    for fact in text.split('.') {
        let fact = fact.trim();
        if fact.is_empty() {
            continue;
        }
        if let Some(name) = strip_functor(fact, "arg") {
            arguments.insert(ArgId::new(name.trim())?);
        } else if let Some(body) = strip_functor(fact, "att") {
            let mut parts = body.split(',');
            let (src, dst) = match (parts.next(), parts.next(), parts.next()) {
                (Some(src), Some(dst), None) => (src.trim(), dst.trim()),
                _ => return Err(Error::Syntax(format!("malformed att fact `{fact}.`"))),
            };
            attacks.push((ArgId::new(src)?, ArgId::new(dst)?));
        } else {
            return Err(Error::Syntax(format!("unrecognized fact `{fact}.`")));
        }
    }
    for (src, dst) in &attacks {
        for end in [src, dst] {
            if !arguments.contains(end) {
                return Err(Error::UndeclaredEndpoint(end.name().to_owned()));
            }
        }
    }
    ArgumentGraph::new(arguments, attacks)
}

fn strip_functor<'a>(fact: &'a str, functor: &str) -> Option<&'a str> {
    fact.strip_prefix(functor)
        .map(str::trim_start)
        .and_then(|rest| rest.strip_prefix('('))
        .and_then(|rest| rest.strip_suffix(')'))
}

/// Serializes a graph as APX facts in canonical order.
pub fn to_apx(g: &ArgumentGraph) -> String {
    let mut out = String::new();
    for a in g.arguments() {
        writeln!(out, "arg({a}).").expect("write to string");
    }
    for (src, dst) in g.attacks() {
        writeln!(out, "att({src},{dst}).").expect("write to string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::chain3;

    #[test]
    fn parses_inline_facts() {
        let g = parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c).").unwrap();
        assert_eq!(g, chain3());
    }

    #[test]
    fn parses_an_isolated_argument() {
        let g = parse_apx("arg(a).").unwrap();
        assert_eq!(g.arguments().len(), 1);
        assert!(g.attacks().is_empty());
    }

    #[test]
    fn rejects_undeclared_endpoints_and_foreign_facts() {
        assert_eq!(
            parse_apx("att(a,b).").unwrap_err(),
            Error::UndeclaredEndpoint("a".into())
        );
        assert!(matches!(
            parse_apx("pref(a,b).").unwrap_err(),
            Error::Syntax(_)
        ));
    }

    #[test]
    fn whitespace_is_flexible() {
        let g = parse_apx("arg( a ).\n\n arg(b).\natt( a , b ).").unwrap();
        assert_eq!(g.attacks().len(), 1);
    }

    #[test]
    fn serialization_round_trips() {
        let g = chain3();
        assert_eq!(parse_apx(&to_apx(&g)).unwrap(), g);
        assert_eq!(to_apx(&g), "arg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,c).\n");
    }
}
