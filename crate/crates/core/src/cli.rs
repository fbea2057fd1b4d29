//! The `syt` command line.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::enumerate::{enumerate_syt, enumerate_syt_shape};
use crate::error::{invalid, Result};
use crate::jdt::restrict;
use crate::orders::{build_order, pr_product, OrderKind};
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::poset::PosetFile;
use crate::rsk::rsk;
use crate::tableau::StandardTableau;
use crate::verification::{report_json, report_text, run_claims};

#[derive(Debug, Parser)]
#[command(name = "syt", version, about = "Standard Young tableaux and the chain-strip order")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List SYT_n in canonical order, optionally of one shape.
    Enum {
        n: usize,
        #[arg(long)]
        shape: Option<Partition>,
    },
    /// Insertion and recording tableaux of a permutation.
    Rsk { perm: Permutation },
    /// Row reading word.
    Word { tableau: StandardTableau },
    /// Sequence of horizontal strips.
    Shs { tableau: StandardTableau },
    /// Descent set.
    Des { tableau: StandardTableau },
    /// Restriction to the entries i..=j, rectified and relabelled.
    Restrict { tableau: StandardTableau, i: usize, j: usize },
    /// Transpose across the main diagonal.
    Transpose { tableau: StandardTableau },
    /// Schützenberger evacuation.
    Evac { tableau: StandardTableau },
    /// Build an order on SYT_n as a JSON poset file.
    OrderBuild {
        order: OrderKind,
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Only cover relations (the default).
        #[arg(long, conflicts_with = "full")]
        covers: bool,
        /// Also list every strict comparability.
        #[arg(long)]
        full: bool,
    },
    /// Strict comparabilities present in exactly one of two poset files.
    OrderDiff { file1: PathBuf, file2: PathBuf },
    /// Poirier-Reutenauer product S * T.
    Product { s: StandardTableau, t: StandardTableau },
    /// Hasse diagram covers, or DOT with --dot.
    Hasse {
        order: OrderKind,
        n: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the claim suite; exits 0 iff every selected claim passes.
    Verify {
        /// Comma-separated claim ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn write_or_print(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| invalid(format!("cannot write {}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| invalid(format!("cannot write output: {e}"))),
    }
}

fn read_poset_file(path: &Path) -> Result<PosetFile> {
    let text = fs::read_to_string(path).map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    PosetFile::from_json(&text)
}

fn lines<D: std::fmt::Display>(items: impl IntoIterator<Item = D>) -> String {
    items.into_iter().map(|x| format!("{x}\n")).collect()
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    let text = match command {
        Command::Enum { n, shape } => {
            let tabs = match shape {
                Some(shape) if shape.weight() != n => {
                    return Err(invalid(format!("shape {shape} has weight {}, not {n}", shape.weight())))
                }
                Some(shape) => enumerate_syt_shape(&shape)?,
                None => enumerate_syt(n)?,
            };
            lines(tabs)
        }
        Command::Rsk { perm } => {
            let (p, q) = rsk(&perm);
            format!("P: {p}\nQ: {q}\n")
        }
        Command::Word { tableau } => format!("{}\n", tableau.row_word()),
        Command::Shs { tableau } => format!("{}\n", tableau.shs()),
        Command::Des { tableau } => format!("{}\n", tableau.descent_set()),
        Command::Restrict { tableau, i, j } => format!("{}\n", restrict(&tableau, i, j)?),
        Command::Transpose { tableau } => format!("{}\n", tableau.transpose()),
        Command::Evac { tableau } => format!("{}\n", tableau.evacuate()),
        Command::OrderBuild { order, n, out: path, covers: _, full } => {
            let built = build_order(order, n)?;
            let file = built.poset.to_file(n, order.name(), full);
            write_or_print(path.as_deref(), &file.to_json(), out)?;
            return Ok(0);
        }
        Command::OrderDiff { file1, file2 } => {
            let (a, b) = (read_poset_file(&file1)?, read_poset_file(&file2)?);
            let (pa, pb) = (a.to_poset()?, b.to_poset()?);
            let (only_a, only_b) = pa.diff(&pb)?;
            let label = |(x, y): (usize, usize)| format!("{} < {}", pa.elements()[x], pa.elements()[y]);
            let mut s = String::new();
            s.extend(only_a.into_iter().map(|p| format!("- {}\n", label(p))));
            s.extend(only_b.into_iter().map(|p| format!("+ {}\n", label(p))));
            s
        }
        Command::Product { s, t } => lines(pr_product(&s, &t)?),
        Command::Hasse { order, n, dot } => {
            let built = build_order(order, n)?;
            match dot {
                Some(path) => {
                    let name = format!("{order}-{n}");
                    write_or_print(Some(&path), &built.poset.to_dot(&name), out)?;
                    return Ok(0);
                }
                None => lines(
                    built
                        .poset
                        .covers()
                        .into_iter()
                        .map(|(a, b)| format!("{} < {}", built.tableau(a), built.tableau(b))),
                ),
            }
        }
        Command::Verify { only, json } => {
            let results = run_claims(only.as_deref())?;
            let text = if json { report_json(&results) } else { report_text(&results) };
            write_or_print(None, &text, out)?;
            return Ok(if results.iter().all(|r| r.passed()) { 0 } else { 1 });
        }
    };
    write_or_print(None, &text, out)?;
    Ok(0)
}
