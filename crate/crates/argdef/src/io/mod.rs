//! Text formats: TGF and APX for argument graphs, DOT for rendering, JSON
//! for machine-readable results. All serializers emit canonical order so the
//! same input always produces byte-identical output.

mod apx;
mod dot;
mod json;
mod tgf;

pub use apx::{parse_apx, to_apx};
pub use dot::{defense_graph_to_dot, graph_to_dot};
pub use json::{
    defense_extensions_to_json, defense_graph_to_json, extensions_to_json, reasons_to_json,
};
pub use tgf::{parse_tgf, to_tgf};

use crate::error::{Error, Result};
use crate::graph::ArgumentGraph;

/// Input format of a graph document.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Tgf,
    Apx,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tgf" => Ok(GraphFormat::Tgf),
            "apx" => Ok(GraphFormat::Apx),
            other => Err(Error::Syntax(format!("unknown graph format `{other}`"))),
        }
    }
}

/// Picks the format from a file extension, if recognizable.
pub fn detect_format(path: &str) -> Option<GraphFormat> {
    let lower = path.to_ascii_lowercase();
    if lower.ends_with(".tgf") {
        Some(GraphFormat::Tgf)
    } else if lower.ends_with(".apx") {
        Some(GraphFormat::Apx)
    } else {
        None
    }
}

/// Parses a graph document in the given format.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<ArgumentGraph> {
    match format {
        GraphFormat::Tgf => parse_tgf(text),
        GraphFormat::Apx => parse_apx(text),
    }
}
