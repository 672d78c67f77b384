//! The fully resolved invocation: every command line maps to one
//! [`RunConfig`], which can be saved and replayed.

use std::path::PathBuf;

use rlmds::gf::FieldDescriptor;
use rlmds::{CodeJson, Elem, Target, Triple};
use serde::{Deserialize, Serialize};

pub const CONFIG_SCHEMA: &str = "rlmds.config/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Grs,
    Rs,
    Rl,
    C2,
}

/// Which part of a field description to print.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Show {
    Table,
    Primitive,
    Modulus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Command {
    Field {
        /// Everything when absent.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        show: Option<Show>,
    },
    Build {
        family: Family,
        alpha: Vec<Elem>,
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        multipliers: Option<Vec<Elem>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        triple: Option<Triple>,
    },
    Classify {
        code: CodeJson,
    },
    ClassifyC2 {
        alpha: Vec<Elem>,
        k: usize,
        triple: Triple,
    },
    Search {
        alpha: Vec<Elem>,
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        target: Option<Target>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        emit: Option<PathBuf>,
    },
    Covering {
        alpha: Vec<Elem>,
        k: usize,
        /// `None` sweeps all triples.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        triple: Option<Triple>,
    },
    Extendable {
        alpha: Vec<Elem>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sweep_n: Option<usize>,
    },
    Fixtures {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        out: Option<PathBuf>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        check: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub schema: String,
    /// Absent only for commands that carry their own field.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDescriptor>,
    pub command: Command,
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    pub budget: u64,
    /// Include wall-clock timings in reports.
    pub timing: bool,
}

impl RunConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.schema != CONFIG_SCHEMA {
            anyhow::bail!(usage(format!("unsupported config schema {:?}", self.schema)));
        }
        if self.budget == 0 {
            anyhow::bail!(usage("budget must be positive"));
        }
        if self.threads == Some(0) {
            anyhow::bail!(usage("thread count must be positive"));
        }
        let needs_field = !matches!(self.command, Command::Classify { .. } | Command::Fixtures { .. });
        if needs_field && self.field.is_none() {
            anyhow::bail!(usage("this command needs a field (--q or --p/--m)"));
        }
        if self.format == Format::Csv && !matches!(self.command, Command::Search { .. }) {
            anyhow::bail!(usage("csv output is only available for search"));
        }
        Ok(())
    }
}

/// A user error that should exit with the usage status.
#[derive(Debug)]
pub struct UsageError(pub String);

pub fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}
