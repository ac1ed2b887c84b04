//! Batch subcommands over graph files. Every command prints deterministic
//! text or JSON; the binary in `src/main.rs` is a thin wrapper around
//! [`run`].
//!
//! Exit codes: 0 success, 1 domain error (parse failure, unknown argument,
//! violated precondition), 2 usage error, 3 negative verdict (not equivalent,
//! not a summarization, failed check).

use std::collections::BTreeSet;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::defense::build_defense_graph;
use crate::defense_semantics::{correspondence_check, defense_extensions};
use crate::equivalence::{
    c_kernel, defense_equivalent, is_summarization, root_equivalent, standard_equivalent,
    strong_equivalent_co, EquivalenceVerdict,
};
use crate::error::{Error, Result};
use crate::graph::{ArgId, ArgumentGraph};
use crate::io::{
    defense_extensions_to_json, defense_graph_to_json, defense_graph_to_dot, detect_format,
    extensions_to_json, parse_graph, reasons_to_json, GraphFormat,
};
use crate::reasons::{direct_reasons, root_reasons};
use crate::semantics::{complete_extensions, extensions, Semantics};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "argdef",
    about = "Defense graphs, defense semantics and acceptance reasons for argument graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Complete,
    Grounded,
    Preferred,
    Stable,
}

impl From<SemanticsArg> for Semantics {
    fn from(s: SemanticsArg) -> Semantics {
        match s {
            SemanticsArg::Complete => Semantics::Complete,
            SemanticsArg::Grounded => Semantics::Grounded,
            SemanticsArg::Preferred => Semantics::Preferred,
            SemanticsArg::Stable => Semantics::Stable,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormatArg {
    Tgf,
    Apx,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DotOrJson {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReasonKind {
    Direct,
    Root,
}

#[derive(Clone, Copy, ValueEnum)]
enum EquivKind {
    Standard,
    Strong,
    Defense,
    Root,
}

#[derive(Args)]
struct InputOpts {
    /// Input format override; by default the file extension decides.
    #[arg(long = "input-format", value_enum)]
    input_format: Option<InputFormatArg>,
}

impl InputOpts {
    fn load(&self, path: &PathBuf) -> Result<ArgumentGraph> {
        let display = path.display().to_string();
        let text = if display == "-" {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| Error::Syntax(format!("cannot read stdin: {e}")))?;
            buffer
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| Error::Syntax(format!("cannot read {display}: {e}")))?
        };
        let format = match self.input_format {
            Some(InputFormatArg::Tgf) => GraphFormat::Tgf,
            Some(InputFormatArg::Apx) => GraphFormat::Apx,
            None => detect_format(&display).ok_or_else(|| {
                Error::Syntax(format!(
                    "cannot infer the format of `{display}`; pass --input-format"
                ))
            })?,
        };
        parse_graph(&text, format)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the extensions of a graph under a semantics.
    Extensions {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "complete")]
        semantics: SemanticsArg,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
        #[command(flatten)]
        input: InputOpts,
    },
    /// Print the defense graph of a graph.
    DefenseGraph {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "dot")]
        format: DotOrJson,
        #[command(flatten)]
        input: InputOpts,
    },
    /// Print the extensions of defenses of a graph under a semantics.
    DefenseExtensions {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "complete")]
        semantics: SemanticsArg,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
        #[command(flatten)]
        input: InputOpts,
    },
    /// Print the direct or root reasons for accepting an argument.
    Reasons {
        file: PathBuf,
        /// The argument whose reasons are requested.
        #[arg(long = "arg")]
        argument: String,
        #[arg(long, value_enum, default_value = "root")]
        kind: ReasonKind,
        #[arg(long, value_enum, default_value = "complete")]
        semantics: SemanticsArg,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
        #[command(flatten)]
        input: InputOpts,
    },
    /// Decide an equivalence between two graphs. Exits 3 when not equivalent.
    Equiv {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_enum)]
        kind: EquivKind,
        #[arg(long, value_enum, default_value = "complete")]
        semantics: SemanticsArg,
        /// Comma-separated arguments for root equivalence; defaults to the
        /// shared argument set.
        #[arg(long)]
        restrict: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
        #[command(flatten)]
        input: InputOpts,
    },
    /// Decide whether the first graph summarizes the second. Exits 3 when not.
    SummarizeCheck {
        summary_file: PathBuf,
        full_file: PathBuf,
        #[arg(long, value_enum, default_value = "complete")]
        semantics: SemanticsArg,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
        #[command(flatten)]
        input: InputOpts,
    },
    /// Re-verify the structural properties of one graph. Exits 3 on FAIL.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "complete")]
        semantics: SemanticsArg,
        #[command(flatten)]
        input: InputOpts,
    },
}

/// Parses `argv` and runs the selected command, writing to the given streams.
/// Returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return e.exit_code();
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DOMAIN_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<i32> {
    let emit = |out: &mut dyn Write, text: String| {
        out.write_all(text.as_bytes())
            .map_err(|e| Error::Syntax(format!("cannot write output: {e}")))
    };
    match command {
        Command::Extensions {
            file,
            semantics,
            format,
            input,
        } => {
            let g = input.load(&file)?;
            let semantics = semantics.into();
            let result = extensions(&g, semantics);
            match format {
                TextOrJson::Text => {
                    for e in &result {
                        emit(out, format!("{e}\n"))?;
                    }
                }
                TextOrJson::Json => emit(out, extensions_to_json(semantics, &result) + "\n")?,
            }
            Ok(EXIT_OK)
        }
        Command::DefenseGraph { file, format, input } => {
            let g = input.load(&file)?;
            let dg = build_defense_graph(&g);
            match format {
                DotOrJson::Dot => emit(out, defense_graph_to_dot(&dg))?,
                DotOrJson::Json => emit(out, defense_graph_to_json(&dg) + "\n")?,
            }
            Ok(EXIT_OK)
        }
        Command::DefenseExtensions {
            file,
            semantics,
            format,
            input,
        } => {
            let g = input.load(&file)?;
            let dg = build_defense_graph(&g);
            let result = defense_extensions(&dg, semantics.into());
            match format {
                TextOrJson::Text => {
                    for d in &result {
                        emit(out, format!("{d}\n"))?;
                    }
                }
                TextOrJson::Json => emit(out, defense_extensions_to_json(&result) + "\n")?,
            }
            Ok(EXIT_OK)
        }
        Command::Reasons {
            file,
            argument,
            kind,
            semantics,
            format,
            input,
        } => {
            let g = input.load(&file)?;
            let a = ArgId::new(argument)?;
            let bag = match kind {
                ReasonKind::Direct => direct_reasons(&g, &a, semantics.into())?,
                ReasonKind::Root => root_reasons(&g, &a, semantics.into())?,
            };
            match format {
                TextOrJson::Text => {
                    for r in bag.entries() {
                        emit(out, format!("{r}\n"))?;
                    }
                }
                TextOrJson::Json => emit(out, reasons_to_json(&a, &bag) + "\n")?,
            }
            Ok(EXIT_OK)
        }
        Command::Equiv {
            file1,
            file2,
            kind,
            semantics,
            restrict,
            format,
            input,
        } => {
            let g1 = input.load(&file1)?;
            let g2 = input.load(&file2)?;
            let semantics: Semantics = semantics.into();
            let verdict = match kind {
                EquivKind::Standard => standard_equivalent(&g1, &g2, semantics),
                EquivKind::Strong => {
                    if semantics != Semantics::Complete {
                        return Err(Error::Syntax(
                            "strong equivalence is decided under complete semantics only".into(),
                        ));
                    }
                    strong_equivalent_co(&g1, &g2)
                }
                EquivKind::Defense => defense_equivalent(&g1, &g2, semantics),
                EquivKind::Root => {
                    let restriction: BTreeSet<ArgId> = match restrict {
                        Some(spec) => spec
                            .split(',')
                            .map(|token| ArgId::new(token.trim()))
                            .collect::<Result<_>>()?,
                        None => g1
                            .arguments()
                            .intersection(g2.arguments())
                            .cloned()
                            .collect(),
                    };
                    root_equivalent(&g1, &g2, &restriction, semantics)?
                }
            };
            report_verdict(out, &verdict, format, "equivalent", "not equivalent")
        }
        Command::SummarizeCheck {
            summary_file,
            full_file,
            semantics,
            format,
            input,
        } => {
            let summary = input.load(&summary_file)?;
            let full = input.load(&full_file)?;
            let verdict = is_summarization(&summary, &full, semantics.into());
            report_verdict(out, &verdict, format, "summarization", "not a summarization")
        }
        Command::Check {
            file,
            semantics,
            input,
        } => {
            let g = input.load(&file)?;
            let semantics: Semantics = semantics.into();
            let report = correspondence_check(&g, semantics);
            let (und_args, def_args, attacked) = crate::defense::decompose_arguments(&g);
            let covered: BTreeSet<ArgId> = und_args
                .into_iter()
                .chain(def_args)
                .chain(attacked)
                .collect();
            let kernel = c_kernel(&g);
            let checks = [
                ("defense-correspondence", report.defense_side_matches),
                ("argument-correspondence", report.argument_side_matches),
                ("argument-coverage", &covered == g.arguments()),
                (
                    "kernel-extension-invariance",
                    complete_extensions(&g) == complete_extensions(&kernel),
                ),
                (
                    "kernel-defense-invariance",
                    defense_extensions(&build_defense_graph(&g), Semantics::Complete)
                        == defense_extensions(&build_defense_graph(&kernel), Semantics::Complete),
                ),
            ];
            for (name, pass) in &checks {
                emit(out, format!("{name}: {}\n", if *pass { "PASS" } else { "FAIL" }))?;
            }
            Ok(if checks.iter().all(|(_, pass)| *pass) {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
    }
}

#[derive(Serialize)]
struct VerdictDoc {
    kind: String,
    semantics: Option<Semantics>,
    equivalent: bool,
    witness: Option<String>,
}

fn report_verdict(
    out: &mut impl Write,
    verdict: &EquivalenceVerdict,
    format: TextOrJson,
    positive: &str,
    negative: &str,
) -> Result<i32> {
    let text = match format {
        TextOrJson::Text => {
            let mut text = String::new();
            if verdict.equivalent {
                text.push_str(positive);
                text.push('\n');
            } else {
                text.push_str(negative);
                text.push('\n');
                if let Some(w) = &verdict.witness {
                    text.push_str(&format!("witness: {w}\n"));
                }
            }
            text
        }
        TextOrJson::Json => {
            let doc = VerdictDoc {
                kind: verdict.kind.to_string(),
                semantics: verdict.semantics,
                equivalent: verdict.equivalent,
                witness: verdict.witness.as_ref().map(|w| w.to_string()),
            };
            serde_json::to_string(&doc).expect("serializable") + "\n"
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Syntax(format!("cannot write output: {e}")))?;
    Ok(if verdict.equivalent {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

