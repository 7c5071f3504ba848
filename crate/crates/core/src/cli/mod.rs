//! Command-line front end. Exit codes: 0 when the requested properties hold,
//! 1 when they do not, 2 for unusable input.

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::construction::Preset;
use crate::verification::SetKind;

pub use commands::{default_out_dir, DEMO_FILES};

/// Exit code for a run whose checks all hold.
pub const EXIT_PASS: i32 = 0;
/// Exit code for a well-formed run whose checks fail.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for invalid parameters or unreadable input.
pub const EXIT_INPUT: i32 = 2;

/// Environment variable naming the default `demo` output directory.
pub const OUT_DIR_ENV: &str = "SZCCS_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "szccs", version, about = "Build and exactly verify symmetrical Z-complementary code sets")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code set and write it as canonical JSON.
    Generate(GenerateArgs),
    /// Check SZCCS, ZCCS or CCC properties of a code set.
    Verify(VerifyArgs),
    /// Write the flock correlation profile of two codes as CSV.
    Correlate(CorrelateArgs),
    /// Build and verify every set in a parameter grid.
    Sweep(SweepArgs),
    /// Reproduce a worked example into an output directory.
    Demo(DemoArgs),
}

/// Construction parameters given as flags.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    /// Named parameter shape: example1, ccc, binary_zccs, single_chain.
    #[arg(long)]
    pub preset: Option<Preset>,
    #[arg(long)]
    pub p: Option<u32>,
    /// Phase modulus (defaults to p).
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub delta: Option<usize>,
    /// Number of parts (presets only).
    #[arg(long)]
    pub k: Option<usize>,
    /// One part of the partition of {1..m-delta}, e.g. "1,2". Repeat per part.
    #[arg(long = "partition", value_name = "LIST")]
    pub partition: Vec<String>,
    /// Visiting order of the matching part, e.g. "2,1". Repeat per part.
    #[arg(long = "perm", value_name = "LIST")]
    pub perm: Vec<String>,
    /// lambda_0..lambda_m, e.g. "0,1,0,2".
    #[arg(long, value_name = "LIST")]
    pub lambda: Option<String>,
    /// Permit sequence lengths above the desk-scale limit.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// JSON file with the same fields; its values win over flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output file (stdout if omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A code set read from a file or built from parameters.
#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Code-set JSON file.
    #[arg(long = "in", value_name = "FILE", conflicts_with = "preset")]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long = "type", value_name = "KIND", default_value = "szccs")]
    pub kind: SetKind,
    /// Zone width (defaults to the claimed Z, or N for ccc).
    #[arg(long)]
    pub z: Option<usize>,
    /// Report file (stdout if omitted).
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CorrelateArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// First code index.
    #[arg(long)]
    pub e: usize,
    /// Second code index (defaults to e).
    #[arg(long)]
    pub f: Option<usize>,
    /// Output file (stdout if omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Use the FFT path instead of exact arithmetic.
    #[arg(long)]
    pub float: bool,
    /// Add zone-boundary comment rows for the claimed Z.
    #[arg(long)]
    pub annotate: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// JSON sweep configuration; its values win over flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Primes to include (repeatable).
    #[arg(long = "p")]
    pub primes: Vec<u32>,
    /// Values of m to include (repeatable).
    #[arg(long = "m")]
    pub m_values: Vec<usize>,
    /// Values of delta to include (repeatable; all if omitted).
    #[arg(long = "delta")]
    pub deltas: Vec<usize>,
    #[arg(long)]
    pub max_len: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub allow_large: bool,
    /// Output file; JSON if it ends in .json, CSV otherwise (stdout CSV if omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    /// Example name (only example1).
    pub name: String,
    /// Output directory (defaults to $SZCCS_OUT_DIR, then ./szccs-out).
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
            } else {
                let _ = stdout.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match commands::dispatch(config.command, stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
    }
}
