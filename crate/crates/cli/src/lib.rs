//! Command-line front end for `ucf`.
//!
//! [`run`] parses an argument vector, dispatches to `ucf_core` and returns a
//! [`CommandResult`]; `main` only prints it and exits with
//! [`Status::exit_code`].

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

mod commands;
mod render;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// The checked property holds (or the command only reports).
    Holds,
    /// The checked property fails; the payload carries a witness.
    Fails,
    /// Usage, parse or precondition error.
    Error,
    CapExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Holds => 0,
            Status::Fails => 1,
            Status::Error => 2,
            Status::CapExceeded => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Error => "error",
            Status::CapExceeded => "cap_exceeded",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub human_text: String,
    /// Whether `--json` was given.
    pub json: bool,
}

impl CommandResult {
    pub(crate) fn new(status: Status, payload: Value, human_text: impl Into<String>) -> Self {
        CommandResult {
            status,
            payload,
            human_text: human_text.into(),
            json: false,
        }
    }

    pub(crate) fn holds(payload: Value, human_text: impl Into<String>) -> Self {
        Self::new(Status::Holds, payload, human_text)
    }

    /// `Holds` when `ok`, else `Fails`.
    pub(crate) fn verdict(ok: bool, payload: Value, human_text: impl Into<String>) -> Self {
        Self::new(
            if ok { Status::Holds } else { Status::Fails },
            payload,
            human_text,
        )
    }

    pub fn error(message: impl Into<String>) -> Self {
        let message = message.into();
        Self::new(Status::Error, json!({ "error": message }), message)
    }

    /// The text `main` prints: the JSON document (with `status` added) under
    /// `--json`, the human rendering otherwise.
    pub fn output(&self) -> String {
        if self.json {
            let mut doc = self.payload.clone();
            if let Value::Object(map) = &mut doc {
                map.insert("status".into(), Value::String(self.status.as_str().into()));
            }
            serde_json::to_string_pretty(&doc).expect("JSON values always serialize")
        } else {
            self.human_text.clone()
        }
    }
}

impl From<ucf_core::Error> for CommandResult {
    fn from(e: ucf_core::Error) -> Self {
        let message = e.to_string();
        match e {
            ucf_core::Error::CapExceeded { .. } => {
                Self::new(Status::CapExceeded, json!({ "error": message }), message)
            }
            ucf_core::Error::Violation(_) => {
                Self::new(Status::Fails, json!({ "violation": message }), message)
            }
            _ => Self::error(message),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ucf",
    version,
    about = "Union-closed families: densities, witnesses and exhaustive checks"
)]
pub(crate) struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for scans; results do not depend on it.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub noun: Noun,
}

#[derive(Debug, Subcommand)]
pub(crate) enum Noun {
    /// Inspect a family file.
    #[command(subcommand)]
    Fam(FamCmd),
    /// Closures, E-sets and μ at a generator `U`.
    #[command(subcommand)]
    Density(DensityCmd),
    /// Witness and equivalence checks.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Covers of the non-empty members.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Exhaustive scans.
    #[command(subcommand)]
    Scan(ScanCmd),
    /// P-density of a lattice.
    Pdensity(PdensityArgs),
    /// P-matching property of a lattice.
    Matching(MatchingArgs),
    /// Initial segments of the binary-expansion enumeration of finite sets.
    #[command(subcommand)]
    Wojcik(WojcikCmd),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum IrreducibleKind {
    Join,
    Generators,
    Meet,
}

#[derive(Debug, Subcommand)]
pub(crate) enum FamCmd {
    Stats {
        file: String,
    },
    CheckClosed {
        file: String,
    },
    Irreducibles {
        file: String,
        #[arg(long, value_enum, default_value = "join")]
        kind: IrreducibleKind,
    },
    Transpose {
        file: String,
    },
}

#[derive(Debug, Args)]
pub(crate) struct AtU {
    pub file: String,
    /// The generator `U`, e.g. `a,b`.
    #[arg(long)]
    pub u: String,
}

#[derive(Debug, Subcommand)]
pub(crate) enum DensityCmd {
    Closure {
        file: String,
        #[arg(long)]
        x: String,
    },
    Esets {
        #[command(flatten)]
        at: AtU,
        /// Restrict to these `X` (repeatable); default every `X ⊆ N² ∖ U`.
        #[arg(long)]
        x: Vec<String>,
    },
    Mu {
        #[command(flatten)]
        at: AtU,
        /// Family file for `H`, labels taken from the base universe.
        #[arg(long)]
        h: String,
    },
    MinMu {
        #[command(flatten)]
        at: AtU,
        #[arg(long, default_value_t = ucf_core::density::DEFAULT_FILTER_CAP)]
        cap: usize,
        /// Only look for a value below 2 among the cheaper filters.
        #[arg(long)]
        fast: bool,
    },
    Bound {
        #[command(flatten)]
        at: AtU,
        /// Also count every factor over `2^{N² ∖ U}` and compare.
        #[arg(long)]
        brute: bool,
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
    Local {
        #[command(flatten)]
        at: AtU,
        /// Family file listing the edges of the chosen simple graph.
        #[arg(long)]
        gprime: Option<String>,
        #[arg(long, default_value_t = ucf_core::density::DEFAULT_FILTER_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Subcommand)]
pub(crate) enum CheckCmd {
    Conjecture {
        file: String,
        /// Look for a generator in at most half the members instead.
        #[arg(long)]
        generator: bool,
    },
    Sufficient {
        file: String,
    },
    Equivalences {
        file: String,
    },
}

#[derive(Debug, Subcommand)]
pub(crate) enum CoverCmd {
    Greedy { file: String },
    Minimal { file: String },
}

#[derive(Debug, Subcommand)]
pub(crate) enum ScanCmd {
    Graphs {
        #[arg(long)]
        max_vertices: usize,
        /// Mix singleton generators into every graph.
        #[arg(long)]
        singletons: bool,
    },
    Families {
        #[arg(long)]
        max_universe: usize,
        /// Run every per-family check, not only the witness.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Debug, Args)]
pub(crate) struct PdensityArgs {
    /// Lattice as a poset file or a union-closed family file.
    #[arg(long)]
    pub lattice: String,
    #[arg(long)]
    pub poset: String,
    /// Report the density at this join-irreducible only.
    #[arg(long)]
    pub witness: Option<String>,
}

#[derive(Debug, Args)]
pub(crate) struct MatchingArgs {
    /// Lattice as a poset file or a union-closed family file.
    #[arg(long = "l")]
    pub lattice: String,
    #[arg(long = "p")]
    pub poset: String,
    /// Require injections between all comparable type classes.
    #[arg(long)]
    pub full: bool,
    /// Report every join-irreducible, not only the first that works.
    #[arg(long)]
    pub all_a: bool,
}

#[derive(Debug, Subcommand)]
pub(crate) enum WojcikCmd {
    Un {
        n: u64,
    },
    Family {
        n: u64,
    },
    Tn {
        n: usize,
        /// Universe cap; both 3 and 4 when omitted.
        #[arg(long)]
        cap: Option<usize>,
    },
    Sm {
        m: usize,
    },
    OrderCheck {
        #[arg(long, default_value_t = 256)]
        bound: u64,
    },
}

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandResult::holds(json!({ "help": text }), text)
                }
                _ => CommandResult::error(text),
            };
        }
    };
    let json = cli.json;
    let mut result = match cli.threads {
        Some(0) => CommandResult::error("--threads must be at least 1"),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| commands::dispatch(&cli.noun)),
            Err(e) => CommandResult::error(e.to_string()),
        },
        None => commands::dispatch(&cli.noun),
    };
    result.json = json;
    result
}
