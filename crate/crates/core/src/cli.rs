//! Command-line front end. `main.rs` only forwards to [`run`].
//!
//! Exit codes: 0 success, 1 I/O or other failure, 2 parse or usage error,
//! 3 infeasible line sums, 4 oracle cap exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::analyze_pair;
use crate::error::Error;
use crate::families::{example_one, example_three, example_two};
use crate::format::{origin_frame, parse_grid, parse_sums, render_grid};
use crate::grid::{Frame, GridSet, LineSums};
use crate::neighbour::{neighbour, no_forced_ones_condition};
use crate::oracle::{enumerate_masks, extremal_pair, forced_ones, DEFAULT_CAP};
use crate::ryser::{is_consistent, is_unique, reconstruct};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "tomodiff",
    version,
    about = "Compare binary images through their row and column projections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Feasibility and uniqueness of a sums file.
    Check { sums: PathBuf },
    /// Canonical realization of a sums file, as a grid.
    Reconstruct {
        sums: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Uniquely determined neighbour, its distance and the forced-ones flags.
    Neighbour { sums: PathBuf },
    /// Bound report for two grid files.
    Analyze { grid_a: PathBuf, grid_b: PathBuf },
    /// Brute-force ground truth (defaults to --count).
    Oracle {
        sums: PathBuf,
        #[arg(long, group = "mode")]
        forced: bool,
        #[arg(long, group = "mode")]
        extremal: bool,
        #[arg(long, group = "mode")]
        count: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Write one of the example families as grid files.
    Example {
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    One,
    Two,
    Three,
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::Parse { .. }) => EXIT_PARSE,
            CliError::Lib(Error::Infeasible) => EXIT_INFEASIBLE,
            CliError::Lib(Error::CapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_FAILURE,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Lib(e) => e.to_string(),
            CliError::Io(p, e) => format!("{}: {e}", p.display()),
        }
    }
}

type CliResult = Result<i32, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn read_sums(path: &Path) -> Result<LineSums, CliError> {
    Ok(parse_sums(&read(path)?)?)
}

fn read_grid(path: &Path) -> Result<GridSet, CliError> {
    Ok(parse_grid(&read(path)?)?.0)
}

fn emit(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("json values serialize");
    writeln!(out, "{text}").map_err(|e| CliError::Io(PathBuf::from("<stdout>"), e))
}

fn out_io(e: std::io::Error) -> CliError {
    CliError::Io(PathBuf::from("<stdout>"), e)
}

fn points(set: &GridSet) -> Vec<[i64; 2]> {
    set.iter().map(|p| [p.row, p.col]).collect()
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::Check { sums } => {
            let l = read_sums(&sums)?;
            if !is_consistent(&l) {
                writeln!(out, "infeasible").map_err(out_io)?;
                return Ok(EXIT_INFEASIBLE);
            }
            let verdict = if is_unique(&l)? {
                "feasible, uniquely determined"
            } else {
                "feasible, not uniquely determined"
            };
            writeln!(out, "{verdict}").map_err(out_io)?;
            Ok(EXIT_OK)
        }
        Command::Reconstruct { sums, output } => {
            let l = read_sums(&sums)?;
            let set = reconstruct(&l)?;
            let text = render_grid(&set, &Frame::unit(l.rows.len(), l.cols.len()))?;
            match output {
                Some(p) => write_file(&p, &text)?,
                None => out.write_all(text.as_bytes()).map_err(out_io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Neighbour { sums } => {
            let l = read_sums(&sums)?;
            let nb = neighbour(&l)?;
            let flags = no_forced_ones_condition(&l)?;
            emit(
                out,
                &json!({
                    "sigma": nb.sigma,
                    "neighbour_rows": nb.neighbour_sums.rows,
                    "neighbour_cols": nb.neighbour_sums.cols,
                    "alpha0": nb.alpha0,
                    "no_forced_ones": {
                        "col_axis": flags.col_axis,
                        "row_axis": flags.row_axis,
                    },
                }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Analyze { grid_a, grid_b } => {
            let a = read_grid(&grid_a)?;
            let b = read_grid(&grid_b)?;
            let report = analyze_pair(&a, &b)?;
            emit(
                out,
                &serde_json::to_value(&report).expect("report serializes"),
            )?;
            Ok(EXIT_OK)
        }
        Command::Oracle {
            sums,
            forced,
            extremal,
            count: _,
            cap,
        } => {
            let l = read_sums(&sums)?;
            let value = if forced {
                json!({ "forced": points(&forced_ones(&l, Some(cap))?) })
            } else if extremal {
                let e = extremal_pair(&l, Some(cap))?;
                json!({
                    "max_symm_diff": e.max_symm_diff,
                    "disjoint_exists": e.disjoint_exists,
                    "first": points(&e.first),
                    "second": points(&e.second),
                })
            } else {
                json!({ "count": enumerate_masks(&l, Some(cap))?.len() })
            };
            emit(out, &value)?;
            Ok(EXIT_OK)
        }
        Command::Example {
            family,
            n,
            m,
            output,
        } => {
            let named: Vec<(&str, GridSet)> = match family {
                Family::One => {
                    let (f1, f2, f3) = example_one(m, n)?;
                    vec![("f1", f1), ("f2", f2), ("f3", f3)]
                }
                Family::Two => {
                    let (f1, f1p) = example_two(n)?;
                    vec![("f1", f1), ("f1prime", f1p)]
                }
                Family::Three => {
                    let (f2, f3) = example_three(n)?;
                    vec![("f2", f2), ("f3", f3)]
                }
            };
            let frame = origin_frame(named.iter().map(|(_, s)| s));
            match output {
                Some(dir) => {
                    fs::create_dir_all(&dir).map_err(|e| CliError::Io(dir.clone(), e))?;
                    for (name, set) in &named {
                        let path = dir.join(format!("{name}.grid"));
                        write_file(&path, &render_grid(set, &frame)?)?;
                        writeln!(out, "{}", path.display()).map_err(out_io)?;
                    }
                }
                None => {
                    for (name, set) in &named {
                        write!(out, "{name}:\n{}\n", render_grid(set, &frame)?).map_err(out_io)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parse `args` (including the program name) and execute the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_PARSE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}
