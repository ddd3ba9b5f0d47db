//! Command-line front end.
//!
//! Exit codes: 0 success, 1 internal consistency failure, 2 usage or guard error.
//! Results go to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::genfunc::{
    multigraph_series, simple_genfunc_det, simple_genfunc_elementwise, simple_genfunc_harary, CycleIndex, ELEMENT_LIMIT,
};
use crate::oracle::brute_simple_counts;
use crate::perm::num_edge_slots;
use crate::poly::ExactPolynomial;
use crate::verify::{run_suites, Status, Suite};

/// Overrides the element-wise guard, for benchmarking only.
pub const UNSAFE_ELEMENT_LIMIT_VAR: &str = "PAIRENUM_UNSAFE_ELEMENT_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "pairenum",
    version,
    about = "Exact counts of unlabeled graphs and multigraphs by number of edges"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients of g_n(z), simple graphs on n vertices by edges
    Simple {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::CoeffList)]
        format: Format,
    },
    /// Coefficients of m_n(z), multigraphs on n vertices by edges with multiplicity
    Multi {
        #[arg(long)]
        n: usize,
        /// Highest degree printed [default: n(n-1)/2]
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::CoeffList)]
        format: Format,
    },
    /// Check every identity between the counting routes for one n
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        suites: Vec<Suite>,
    },
    /// Cycle index of the pair group acting on the n(n-1)/2 edge slots
    CycleIndex {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Poly)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// class-summed determinant ratio
    Det,
    /// cycle index with s_k = 1 + z^k
    Harary,
    /// literal sum over all n! permutations
    Element,
    /// exhaustive canonical forms (n <= 6)
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Poly,
    CoeffList,
    Csv,
}

/// Parses `args` (including the program name) and runs one command.
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
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Simple { n, method, format } => {
            require_n(n)?;
            let g = match method {
                Method::Det => simple_genfunc_det(n)?,
                Method::Harary => simple_genfunc_harary(n)?,
                Method::Element => simple_genfunc_elementwise(n, element_limit(err)?)?,
                Method::Brute => brute_simple_counts(n)?,
            };
            write_counts(out, n, g.counts(), format, None)?;
            Ok(0)
        }
        Command::Multi { n, max_degree, format } => {
            require_n(n)?;
            let cutoff = max_degree.unwrap_or_else(|| num_edge_slots(n));
            let series = multigraph_series(n, cutoff)?;
            write_counts(out, n, series.counts(), format, Some(cutoff))?;
            Ok(0)
        }
        Command::Verify { n, suites } => {
            require_n(n)?;
            let checks = run_suites(&suites, n)?;
            let mut failed = 0;
            for c in &checks {
                io(writeln!(out, "{c}"))?;
                if c.status == Status::Fail {
                    failed += 1;
                }
            }
            if failed > 0 {
                io(writeln!(out, "{failed} of {} checks FAILED", checks.len()))?;
                Ok(1)
            } else {
                io(writeln!(out, "all {} checks passed for n = {n}", checks.len()))?;
                Ok(0)
            }
        }
        Command::CycleIndex { n, format } => {
            require_n(n)?;
            let z = CycleIndex::pair_group(n)?;
            write_cycle_index(out, &z, format)?;
            Ok(0)
        }
    }
}

fn require_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("--n must be at least 1".into()));
    }
    Ok(())
}

fn element_limit(err: &mut dyn Write) -> Result<usize> {
    match std::env::var(UNSAFE_ELEMENT_LIMIT_VAR) {
        Ok(v) => {
            let limit = v
                .parse()
                .map_err(|_| Error::InvalidInput(format!("{UNSAFE_ELEMENT_LIMIT_VAR}={v} is not an integer")))?;
            io(writeln!(err, "warning: element-wise limit overridden to {limit}"))?;
            Ok(limit)
        }
        Err(_) => Ok(ELEMENT_LIMIT),
    }
}

fn io(r: std::io::Result<()>) -> Result<()> {
    r.map_err(|e| Error::InvalidInput(format!("cannot write output: {e}")))
}

fn write_counts(out: &mut dyn Write, n: usize, counts: &[BigInt], format: Format, cutoff: Option<usize>) -> Result<()> {
    match format {
        Format::CoeffList => io(writeln!(out, "{}", format_coeff_list(counts))),
        Format::Poly => {
            let p = ExactPolynomial::from_coeffs(counts.to_vec());
            match cutoff {
                Some(d) => io(writeln!(out, "{p} + O(z^{})", d + 1)),
                None => io(writeln!(out, "{p}")),
            }
        }
        Format::Csv => {
            io(writeln!(out, "n,i,count"))?;
            for (i, c) in counts.iter().enumerate() {
                io(writeln!(out, "{n},{i},{c}"))?;
            }
            Ok(())
        }
    }
}

fn write_cycle_index(out: &mut dyn Write, z: &CycleIndex, format: Format) -> Result<()> {
    let m = num_edge_slots(z.n());
    match format {
        Format::Poly => io(writeln!(out, "{z}")),
        Format::CoeffList => {
            for (ct, c) in z.terms() {
                let exps: Vec<String> = (1..=m).map(|k| ct.j(k).to_string()).collect();
                io(writeln!(out, "{c}:{}", exps.join(",")))?;
            }
            Ok(())
        }
        Format::Csv => {
            let header: Vec<String> = std::iter::once("coefficient".to_string())
                .chain((1..=m).map(|k| format!("j_{k}")))
                .collect();
            io(writeln!(out, "{}", header.join(",")))?;
            for (ct, c) in z.terms() {
                let row: Vec<String> = std::iter::once(c.to_string())
                    .chain((1..=m).map(|k| ct.j(k).to_string()))
                    .collect();
                io(writeln!(out, "{}", row.join(",")))?;
            }
            Ok(())
        }
    }
}

/// Ascending-degree exact decimal coefficients separated by commas.
pub fn format_coeff_list(counts: &[BigInt]) -> String {
    counts.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Inverse of [`format_coeff_list`].
pub fn parse_coeff_list(line: &str) -> Result<Vec<BigInt>> {
    line.trim_end_matches('\n')
        .split(',')
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| Error::InvalidInput(format!("bad coefficient {t:?}")))
        })
        .collect()
}
