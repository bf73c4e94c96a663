//! Command-line flags and the equivalent JSON job file.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "symdisc", version, about = "Factored discriminants of symmetric forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factored discriminant of a symmetric form (numeric or symbolic).
    Discriminant(Flags),
    /// Closed form for r = 2 or r = 3.
    ClosedForm(Flags),
    /// Evaluates a discriminant (a saved JSON document, or computed) at
    /// coefficient values.
    Evaluate(Flags),
    /// Compares the engine with an independent oracle at random points.
    Verify(Flags),
    /// Discriminant of an antisymmetric form Π(x_i - x_j)·S̃.
    Antisym(Flags),
    /// Discriminant of u·e2² + v·e4 in four variables.
    BerwaldMoor(Flags),
    /// Runs the job described by `--input`.
    Run(Flags),
}

impl Command {
    pub fn parts(self) -> (CommandKind, Flags) {
        match self {
            Command::Discriminant(f) => (CommandKind::Discriminant, f),
            Command::ClosedForm(f) => (CommandKind::ClosedForm, f),
            Command::Evaluate(f) => (CommandKind::Evaluate, f),
            Command::Verify(f) => (CommandKind::Verify, f),
            Command::Antisym(f) => (CommandKind::Antisym, f),
            Command::BerwaldMoor(f) => (CommandKind::BerwaldMoor, f),
            Command::Run(f) => (CommandKind::Run, f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Discriminant,
    ClosedForm,
    Evaluate,
    Verify,
    Antisym,
    BerwaldMoor,
    Run,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    #[default]
    Product,
    BForm,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Number of variables.
    #[arg(long)]
    pub n: Option<usize>,
    /// Degree of the form.
    #[arg(long)]
    pub r: Option<u32>,
    /// Coefficient as KEY=VALUE, e.g. `2,1=8/9` or `C111=-3`. Repeatable.
    #[arg(long = "coeff", value_name = "KEY=VALUE")]
    pub coeffs: Vec<String>,
    /// Keep the coefficients symbolic.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub symbolic: Option<bool>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Seed for random points.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of random points for `verify`.
    #[arg(long)]
    pub trials: Option<usize>,
    /// Worker threads.
    #[arg(long, env = "SYMDISC_THREADS")]
    pub threads: Option<usize>,
    /// JSON job file; explicit flags take precedence over its fields.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Closed-form variant for r = 3.
    #[arg(long, value_enum)]
    pub variant: Option<Variant>,
    /// Allow r >= 5.
    #[arg(long)]
    pub experimental: bool,
    /// Saved discriminant document for `evaluate`.
    #[arg(long)]
    pub from: Option<PathBuf>,
}

/// A job as read from `--input`. Every field is optional.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub command: Option<CommandKind>,
    pub n: Option<usize>,
    pub r: Option<u32>,
    #[serde(default)]
    pub coefficients: BTreeMap<String, String>,
    pub symbolic: Option<bool>,
    pub format: Option<Format>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub threads: Option<usize>,
    pub variant: Option<Variant>,
    pub experimental: Option<bool>,
    pub from: Option<PathBuf>,
}

/// The resolved job.
#[derive(Debug, Clone)]
pub struct JobSpec {
    pub command: CommandKind,
    pub n: Option<usize>,
    pub r: Option<u32>,
    /// Key as written (partition or parameter name) and value text, in
    /// the order given.
    pub coefficients: Vec<(String, String)>,
    pub symbolic: bool,
    pub format: Format,
    pub seed: u64,
    pub trials: usize,
    pub threads: Option<usize>,
    pub variant: Variant,
    pub experimental: bool,
    pub from: Option<PathBuf>,
}

impl JobSpec {
    pub fn resolve(kind: CommandKind, flags: Flags) -> Result<Self, CliError> {
        let file = match &flags.input {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::parse("InputUnreadable", format!("{}: {e}", path.display())))?;
                serde_json::from_str::<JobFile>(&text).map_err(|e| CliError::parse("InputJson", e.to_string()))?
            }
            None => JobFile::default(),
        };
        let command = match (kind, file.command) {
            (CommandKind::Run, Some(CommandKind::Run)) | (CommandKind::Run, None) => {
                return Err(CliError::parse("MissingCommand", "the job file must name a command"))
            }
            (CommandKind::Run, Some(c)) => c,
            (k, Some(c)) if c != k => {
                return Err(CliError::parse(
                    "CommandMismatch",
                    format!("job file is for {c:?}, invoked as {k:?}"),
                ))
            }
            (k, _) => k,
        };
        let mut coefficients: Vec<(String, String)> = file.coefficients.into_iter().collect();
        for c in &flags.coeffs {
            let (k, v) = c
                .split_once('=')
                .ok_or_else(|| CliError::parse("BadCoefficient", format!("expected KEY=VALUE, got `{c}`")))?;
            coefficients.retain(|(key, _)| key != k.trim());
            coefficients.push((k.trim().to_string(), v.trim().to_string()));
        }
        Ok(JobSpec {
            command,
            n: flags.n.or(file.n),
            r: flags.r.or(file.r),
            coefficients,
            symbolic: flags.symbolic.or(file.symbolic).unwrap_or(false),
            format: flags.format.or(file.format).unwrap_or_default(),
            seed: flags.seed.or(file.seed).unwrap_or(0),
            trials: flags.trials.or(file.trials).unwrap_or(10),
            threads: flags.threads.or(file.threads),
            variant: flags.variant.or(file.variant).unwrap_or_default(),
            experimental: flags.experimental || file.experimental.unwrap_or(false),
            from: flags.from.or(file.from),
        })
    }

    pub fn n(&self) -> Result<usize, CliError> {
        self.n.ok_or_else(|| CliError::parse("MissingArgument", "--n is required"))
    }

    pub fn r(&self) -> Result<u32, CliError> {
        self.r.ok_or_else(|| CliError::parse("MissingArgument", "--r is required"))
    }
}
