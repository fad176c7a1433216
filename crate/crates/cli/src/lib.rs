//! Command-line front end for `rhbw`: table reproduction, JSON/CSV reports
//! and the coweight-dominance fuzzer.
//!
//! Commands return their full output as a [`Outcome`] so they can be driven
//! in-process by tests; `main` only prints and exits.

pub mod envelope;
pub mod fuzz;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use rhbw::cstar::HASSE_DEFAULT_CAP;
use rhbw::rational::to_exact_string;
use rhbw::{DynkinType, Error, GeneralizedGrassmannian, LevelOptions, DEFAULT_ORBIT_CAP};

use crate::envelope::{InputEcho, Payload, PoincarePayload, ReportEnvelope};

#[derive(Debug, Parser)]
#[command(name = "rhbw", version, about = "Minimal-bandwidth torus actions on generalized Grassmannians")]
pub struct Cli {
    /// Maximum orbit size to enumerate (default 2000000; 100000 for hasse).
    #[arg(long, global = true)]
    pub cap: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reproduce the minimal-bandwidth table and check it against golden data.
    Table1 {
        /// Largest rank for the classical families.
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Bandwidths of the fundamental downgradings (closed formula).
    Bandwidth {
        #[arg(value_name = "TYPE")]
        ty: String,
        j: usize,
        /// Report only the downgrading along this node.
        #[arg(long = "dir")]
        dir: Option<usize>,
        #[arg(long, value_enum, default_value_t = DataFormat::Json)]
        format: DataFormat,
    },
    /// Fixed-point levels, profiles and components for one downgrading.
    Levels {
        #[arg(value_name = "TYPE")]
        ty: String,
        j: usize,
        #[arg(long = "dir")]
        dir: usize,
        /// Keep only per-level summaries (no per-point data).
        #[arg(long)]
        stream: bool,
        #[arg(long, value_enum, default_value_t = DataFormat::Json)]
        format: DataFormat,
    },
    /// Białynicki-Birula decompositions for one downgrading.
    Bb {
        #[arg(value_name = "TYPE")]
        ty: String,
        j: usize,
        #[arg(long = "dir")]
        dir: usize,
    },
    /// Poincaré polynomial from the torus-fixed points.
    Poincare {
        #[arg(value_name = "TYPE")]
        ty: String,
        j: usize,
        /// Evaluate at this integer.
        #[arg(long)]
        eval: Option<i64>,
    },
    /// Hasse diagram of the Schubert classes.
    Hasse {
        #[arg(value_name = "TYPE")]
        ty: String,
        j: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Vertices of the polytope of fixed points (fiber weights on O(k_j)).
    Polytope {
        #[arg(value_name = "TYPE")]
        ty: String,
        j: usize,
        #[arg(long, value_enum, default_value_t = DataFormat::Json)]
        format: DataFormat,
    },
    /// Check that random nonnegative coweights never beat the minimum.
    Fuzz {
        #[arg(value_name = "TYPE")]
        ty: String,
        j: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
    Text,
}

/// What a command printed and how it wants the process to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: 0 }
    }
}

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

fn failure(e: Error) -> Outcome {
    let code = match e {
        Error::OrbitCapExceeded { .. } => EXIT_RESOURCE,
        Error::InvalidRank { .. } | Error::ParseType(_) | Error::InvalidNode { .. } => EXIT_USAGE,
        _ => EXIT_MISMATCH,
    };
    Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code }
}

fn grassmannian(ty: &str, j: usize) -> Result<GeneralizedGrassmannian, Error> {
    let t: DynkinType = ty.parse()?;
    GeneralizedGrassmannian::new(t, j)
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(out) => out,
        Err(e) => failure(e),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let cap = cli.cap.unwrap_or(DEFAULT_ORBIT_CAP);
    Ok(match &cli.command {
        Command::Table1 { nmax, format } => {
            let table = rhbw::table1::table1(*nmax);
            let mismatches = table.mismatches().len();
            let mut out = match format {
                TableFormat::Text => table.render(),
                TableFormat::Json => {
                    let env = ReportEnvelope::new("json", InputEcho::table(*nmax), Payload::Table1(table.clone()));
                    env.to_json()
                }
            };
            if mismatches == 0 {
                if *format == TableFormat::Text {
                    let _ = writeln!(out, "{} entries, all match", table.entries.len());
                }
                Outcome::ok(out)
            } else {
                Outcome {
                    stdout: out,
                    stderr: format!("{mismatches} mismatching entries\n{}", table.diff()),
                    code: EXIT_MISMATCH,
                }
            }
        }
        Command::Bandwidth { ty, j, dir, format } => {
            let x = grassmannian(ty, *j)?;
            let input = InputEcho::new(&x, *dir);
            match dir {
                Some(i) => {
                    let b = x.bandwidth(*i)?;
                    match format {
                        DataFormat::Json => Outcome::ok(ReportEnvelope::new("json", input, Payload::NodeBandwidth(b)).to_json()),
                        DataFormat::Csv => Outcome::ok(envelope::node_bandwidth_csv(&[b], None)),
                    }
                }
                None => {
                    let report = x.minimal_bandwidth();
                    match format {
                        DataFormat::Json => Outcome::ok(ReportEnvelope::new("json", input, Payload::Bandwidth(report)).to_json()),
                        DataFormat::Csv => Outcome::ok(envelope::node_bandwidth_csv(&report.per_node, Some(&report.minimizers))),
                    }
                }
            }
        }
        Command::Levels { ty, j, dir, stream, format } => {
            let x = grassmannian(ty, *j)?;
            let c = rhbw::CoWeight::fundamental(x.rank(), *dir)?;
            let opts = LevelOptions { cap, retain_points: !stream };
            let dec = x.levels_along(&c, opts)?;
            match format {
                DataFormat::Json => Outcome::ok(ReportEnvelope::new("json", InputEcho::new(&x, Some(*dir)), Payload::Levels(dec)).to_json()),
                DataFormat::Csv => Outcome::ok(envelope::levels_csv(&dec)),
            }
        }
        Command::Bb { ty, j, dir } => {
            let x = grassmannian(ty, *j)?;
            x.dynkin_type().check_node(*dir)?;
            let bb = x.bb_decomposition(*dir, cap)?;
            Outcome::ok(ReportEnvelope::new("json", InputEcho::new(&x, Some(*dir)), Payload::Bb(bb)).to_json())
        }
        Command::Poincare { ty, j, eval } => {
            let x = grassmannian(ty, *j)?;
            let p = x.poincare_polynomial(cap)?;
            let payload = PoincarePayload {
                display: p.to_string(),
                value_at: eval.map(|q| (q, p.eval(q as i128).to_string())),
                polynomial: p,
            };
            Outcome::ok(ReportEnvelope::new("json", InputEcho::new(&x, None), Payload::Poincare(payload)).to_json())
        }
        Command::Hasse { ty, j, format } => {
            let x = grassmannian(ty, *j)?;
            let h = x.hasse_graph(cli.cap.unwrap_or(HASSE_DEFAULT_CAP))?;
            Outcome::ok(match format {
                GraphFormat::Dot => h.to_dot(),
                GraphFormat::Text => h.to_text(),
                GraphFormat::Json => ReportEnvelope::new("json", InputEcho::new(&x, None), Payload::Hasse(h)).to_json(),
            })
        }
        Command::Polytope { ty, j, format } => {
            let x = grassmannian(ty, *j)?;
            let poly = x.polytope_vertices(cap)?;
            Outcome::ok(match format {
                DataFormat::Json => ReportEnvelope::new("json", InputEcho::new(&x, None), Payload::Polytope(poly)).to_json(),
                DataFormat::Csv => {
                    let mut out = String::from("index");
                    for i in 1..=x.rank() {
                        let _ = write!(out, ",m{i}");
                    }
                    out.push('\n');
                    for (k, v) in poly.vertices.iter().enumerate() {
                        let cells: Vec<String> = v.coeffs().iter().map(to_exact_string).collect();
                        let _ = writeln!(out, "{k},{}", cells.join(","));
                    }
                    out
                }
            })
        }
        Command::Fuzz { ty, j, trials, seed } => {
            let x = grassmannian(ty, *j)?;
            let report = fuzz::run(&x, *trials, *seed, cap)?;
            let ok = report.violations.is_empty();
            let mut stderr = String::new();
            for v in &report.violations {
                let _ = writeln!(stderr, "dominance violated by coweight {}: oracle {} < bound {}", v.coweight, v.oracle, report.bound);
            }
            let stdout = ReportEnvelope::new("json", InputEcho::new(&x, None), Payload::Fuzz(report)).to_json();
            Outcome { stdout, stderr, code: if ok { 0 } else { EXIT_MISMATCH } }
        }
    })
}
