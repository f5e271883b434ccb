//! The `pforest` command line: find, oracle, gen, selftest, bench.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad input graph, parse
//! failure, verification failure), 2 on usage errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::builder::TypedValueParser as _;
use clap::{Parser, Subcommand};

use crate::algo::Algorithm;
use crate::bench::{parse_size, run_bench};
use crate::error::Error;
use crate::gen::{Family, GenSpec};
use crate::graph::Graph;
use crate::io::{parse_edge_list, write_edge_list, write_forest, Format};
use crate::verify::{enumerate_perfect_forests, exhaustive_selfcheck, verify_perfect_forest};

#[derive(Debug, Parser)]
#[command(name = "pforest", version, about = "Perfect forests of connected even-order graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find a perfect forest of the graph in an edge-list file ("-" for stdin).
    Find {
        file: PathBuf,
        #[arg(long, value_enum)]
        algo: Algorithm,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
        /// Check the result against the definition; fail on any violation.
        #[arg(long)]
        verify: bool,
    },
    /// Count perfect forests by exhaustive enumeration (at most 24 edges).
    Oracle {
        file: PathBuf,
        /// List the forests only when there are at most this many.
        #[arg(long, default_value_t = 100)]
        cap: usize,
    },
    /// Print a generated graph as an edge list.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Edge count (random_connected) or first part size (complete_bipartite).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cross-check oracle and both algorithms on every connected graph up to the given order.
    Selftest {
        #[arg(long, default_value_t = 4, value_parser = clap::builder::PossibleValuesParser::new(["2", "4", "6"]).map(|s| s.parse::<usize>().unwrap()))]
        max_n: usize,
    },
    /// Time both algorithms on random connected graphs and print a JSON report.
    Bench {
        /// Sizes as NxM, e.g. 1000x10000.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<String>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

fn read_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let io_err = |source| CliError::Io { path: path.display().to_string(), source };
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(io_err)?
    };
    Ok(parse_edge_list(&text)?)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Find { file, algo, format, verify } => {
            let g = read_graph(&file)?;
            let forest = algo.run(&g)?;
            if verify {
                let verdict = verify_perfect_forest(&g, forest.edges());
                if !verdict.valid {
                    return Err(Error::Verification(verdict.summary()).into());
                }
            }
            out.write_all(write_forest(&forest, format).as_bytes())?;
        }
        Command::Oracle { file, cap } => {
            let g = read_graph(&file)?;
            let report = enumerate_perfect_forests(&g, cap)?;
            serde_json::to_writer(&mut *out, &report).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Command::Gen { family, n, m, seed } => {
            let g = GenSpec { family, n, m, seed }.generate()?;
            out.write_all(write_edge_list(&g).as_bytes())?;
        }
        Command::Selftest { max_n } => {
            let mut all_passed = true;
            for n in (2..=max_n).step_by(2) {
                let summary = exhaustive_selfcheck(n)?;
                writeln!(
                    out,
                    "n={n}: {} graphs, {} checked, {} failures",
                    summary.connected,
                    summary.checked,
                    summary.failures.len()
                )?;
                for failure in summary.failures.iter().take(10) {
                    let edges: Vec<String> = failure.graph.iter().map(ToString::to_string).collect();
                    writeln!(err, "  graph {}: {}", edges.join(" "), failure.reason)?;
                }
                all_passed &= summary.passed();
            }
            if !all_passed {
                writeln!(out, "FAIL")?;
                return Err(Error::Verification("self-check found failures".into()).into());
            }
            writeln!(out, "PASS")?;
        }
        Command::Bench { sizes, reps, seed } => {
            let sizes = sizes.iter().map(|s| parse_size(s)).collect::<Result<Vec<_>, _>>()?;
            let report = run_bench(&sizes, reps, seed)?;
            serde_json::to_writer_pretty(&mut *out, &report).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["pforest"];
        argv.extend_from_slice(args);
        let code = run_cli(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(&[]).0, 2);
        assert_eq!(run(&["find"]).0, 2);
        assert_eq!(run(&["gen", "--family", "wheel", "--n", "4"]).0, 2);
        assert_eq!(run(&["selftest", "--max-n", "5"]).0, 2);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("selftest"));
    }

    #[test]
    fn gen_prints_edge_list() {
        let (code, out, _) = run(&["gen", "--family", "star", "--n", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0 3\n1 3\n2 3\n");
        let (code, _, err) = run(&["gen", "--family", "random_connected", "--n", "4", "--m", "2"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: "));
    }

    #[test]
    fn missing_file_is_a_domain_error() {
        let (code, _, err) = run(&["find", "/nonexistent/graph.txt", "--algo", "split"]);
        assert_eq!(code, 1);
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn selftest_small() {
        let (code, out, _) = run(&["selftest", "--max-n", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n=2: 1 graphs, 1 checked, 0 failures\nn=4: 38 graphs, 38 checked, 0 failures\nPASS\n");
    }
}
