//! Command-line front end: instance files, generation, emission, checking
//! against the brute-force oracle, tracing and benchmarking.

pub mod bench;
pub mod generate;
pub mod instance;
pub mod json;
pub mod summary;
pub mod svg;
pub mod trace;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use zone_core::{diff, oracle_zone, zone_with, Rational, Side, Zone, ZoneError, ZoneOptions};

use crate::generate::{generate, Degeneracy};
use crate::instance::{emit_instance, parse_instance, InstanceFile};
use crate::svg::Viewport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_QUERY_IN_ARRANGEMENT: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
/// An engine invariant failed; always a bug.
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "zone", version, about = "Zone of a line in an arrangement of lines, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Summary,
    Svg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TraceSide {
    Above,
    Below,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the zone of an instance file.
    Build {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "summary")]
        format: Format,
        /// x0,y0,x1,y1 for svg output; fitted to the zone when omitted.
        #[arg(long, allow_hyphen_values = true)]
        viewport: Option<Viewport>,
        /// Also join the cells above and below into full faces (json only).
        #[arg(long)]
        stitch: bool,
        /// Print the scan and merge steps of one side to stderr.
        #[arg(long, value_enum)]
        trace: Option<TraceSide>,
    },
    /// Compare the zone against the brute-force construction.
    Check {
        #[arg(long)]
        input: PathBuf,
    },
    /// Write a random instance against the x-axis.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
        #[arg(long, default_value = "none")]
        degeneracy: Degeneracy,
        /// Standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time sorting and the post-sort phase over growing sizes.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [4096usize, 8192, 16384, 32768, 65536, 131072])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Runs per trial; the fastest counts.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Emit the full report as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
}

fn zone_exit(e: &ZoneError) -> i32 {
    match e {
        ZoneError::QueryInArrangement { .. } => EXIT_QUERY_IN_ARRANGEMENT,
        ZoneError::DegenerateLine { .. } => EXIT_PARSE,
        _ => EXIT_INTERNAL,
    }
}

fn read_instance(path: &PathBuf, err: &mut dyn Write) -> Result<InstanceFile<Rational>, i32> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
        EXIT_PARSE
    })?;
    parse_instance(&text).map_err(|e| {
        let _ = writeln!(err, "error: {}: {e}", path.display());
        EXIT_PARSE
    })
}

/// Exit status and report for an engine zone compared with the oracle's.
pub fn verdict(engine: &Zone<Rational>, oracle: &Zone<Rational>) -> (i32, String) {
    let report = diff(engine, oracle);
    let code = if report.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
    (code, report.to_string())
}

pub fn check_instance(inst: &InstanceFile<Rational>) -> Result<(i32, String), ZoneError> {
    let engine = zone_with(&inst.query, &inst.lines, ZoneOptions::default())?;
    let oracle = oracle_zone(&inst.query, &inst.lines)?;
    Ok(verdict(&engine, &oracle))
}

/// Runs the command line `args` (program name first); returns the exit status.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, i32> {
    let io = |e: std::io::Error| {
        eprintln!("error: {e}");
        EXIT_INTERNAL
    };
    match command {
        Command::Build { input, format, viewport, stitch, trace } => {
            let inst = read_instance(&input, err)?;
            if let Some(side) = trace {
                let side = match side {
                    TraceSide::Above => Side::Above,
                    TraceSide::Below => Side::Below,
                };
                match trace::trace(&inst.query, &inst.lines, side) {
                    Ok(frames) => {
                        for f in frames {
                            writeln!(err, "{f}").map_err(io)?;
                        }
                    }
                    Err(trace::TraceError::TooLarge(n)) => {
                        writeln!(err, "error: {}", trace::TraceError::TooLarge(n)).map_err(io)?;
                        return Err(EXIT_USAGE);
                    }
                    Err(trace::TraceError::Zone(e)) => {
                        writeln!(err, "error: {e}").map_err(io)?;
                        return Err(zone_exit(&e));
                    }
                }
            }
            let z = zone_with(&inst.query, &inst.lines, ZoneOptions { stitch }).map_err(|e| {
                let _ = writeln!(err, "error: {e}");
                zone_exit(&e)
            })?;
            let text = match format {
                Format::Json => json::to_json(&z),
                Format::Summary => summary::summary(&z),
                Format::Svg => svg::render(&z, &inst.query, &inst.lines, viewport).map_err(|e| {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_USAGE
                })?,
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Check { input } => {
            let inst = read_instance(&input, err)?;
            let (code, report) = check_instance(&inst).map_err(|e| {
                let _ = writeln!(err, "error: {e}");
                zone_exit(&e)
            })?;
            let target: &mut dyn Write = if code == EXIT_OK { out } else { err };
            target.write_all(report.as_bytes()).map_err(io)?;
            Ok(code)
        }
        Command::Gen { seed, n, bound, degeneracy, out: path } => {
            let text = emit_instance(&generate::<Rational>(seed, n, bound, degeneracy));
            match path {
                Some(p) => std::fs::write(&p, text).map_err(|e| {
                    let _ = writeln!(err, "error: cannot write {}: {e}", p.display());
                    EXIT_USAGE
                })?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Bench { sizes, trials, seed, repeats, json } => {
            if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) || sizes[0] == 0 {
                writeln!(err, "error: --sizes must be positive and strictly increasing").map_err(io)?;
                return Err(EXIT_USAGE);
            }
            let report = bench::bench(&sizes, trials, seed, repeats);
            let text = if json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                report.table()
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}
