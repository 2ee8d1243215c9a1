//! Command line front end.
//!
//! Exit codes: 0 success or pass, 1 verification failure, 2 usage or input
//! error, 3 search budget exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::demand::{
    expand_instance, expansion_bound, parse_tsplib, recover_solution, CopyAssignment, ExpandedInstance,
    InstanceSpec,
};
use crate::error::Error;
use crate::oracle::{Decision, ExactSearch, Outcome, VerificationReport, Verifier, VerifyMode};
use crate::{generator_size, greedy_trace, minimal_generator, size_upper_bound, Partition, SizeTable};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mingen",
    version,
    about = "Minimum partitions generating all k-partitions of n"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Greedy,
    Exact,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the minimal generator of all k-partitions of n.
    Gen { n: u64, k: u64 },
    /// Print the size of the minimal generator.
    Size {
        n: u64,
        k: u64,
        /// Also print the logarithmic upper bound.
        #[arg(long)]
        bound: bool,
    },
    /// Print the grid of generator sizes.
    Table {
        #[arg(long, default_value_t = 20)]
        n_max: u64,
        #[arg(long, default_value_t = 10)]
        k_max: u64,
    },
    /// Check that a partition generates every k-partition of n.
    Verify {
        #[arg(required = true, allow_negative_numbers = true)]
        parts: Vec<String>,
        /// Defaults to the sum of the parts.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Greedy)]
        mode: ModeArg,
        /// Node budget for each exact search.
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Show how a partition generates a target partition.
    Witness {
        #[arg(required = true, allow_negative_numbers = true)]
        parts: Vec<String>,
        #[arg(long, required = true, num_args = 1.., allow_negative_numbers = true)]
        target: Vec<String>,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Expand every customer of an instance into demand copies.
    Split {
        input: PathBuf,
        /// Destination file, or `-` for standard output.
        output: PathBuf,
        /// Number of fulfillers; required for TSPLIB input, overrides `k` of a native file.
        #[arg(long)]
        k: Option<u64>,
        /// Read a TSPLIB/CVRPLIB file instead of the native format.
        #[arg(long)]
        tsplib: bool,
    },
    /// Fold a copy-level assignment back onto the original customers.
    Recover { expanded: PathBuf, assignment: PathBuf },
}

/// Any reason a command stops before producing its normal output.
#[derive(Debug)]
enum Failure {
    Input(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

fn render<T: Serialize>(format: Format, text: impl FnOnce() -> String, value: &T) -> String {
    match format {
        Format::Text => text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("values serialize");
            s.push('\n');
            s
        }
    }
}

fn parse_parts(values: &[String]) -> Result<Partition, Failure> {
    Ok(values.join(" ").parse::<Partition>()?)
}

fn report_code(report: &VerificationReport) -> u8 {
    match report.outcome {
        Outcome::Pass => EXIT_OK,
        Outcome::Fail => EXIT_FAIL,
        Outcome::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn mode_name(mode: VerifyMode) -> &'static str {
    match mode {
        VerifyMode::GreedyFirst => "greedy-first",
        VerifyMode::ExactOnly => "exact-only",
    }
}

fn report_text(r: &VerificationReport) -> String {
    let stats = format!(
        "{} checked, mode {}, {} nodes",
        r.statistics.partitions_checked,
        mode_name(r.mode),
        r.statistics.nodes_expanded
    );
    match r.outcome {
        Outcome::Pass => format!(
            "pass: {} generates all {}-partitions of {} ({stats})\n",
            r.subject, r.k, r.n
        ),
        Outcome::Fail => format!(
            "fail: {} does not generate {} ({stats})\n",
            r.subject,
            r.counterexample
                .as_ref()
                .expect("failed reports carry a counterexample")
        ),
        Outcome::Inconclusive => format!(
            "inconclusive: search budget exhausted on {} ({stats})\n",
            r.undecided
                .as_ref()
                .expect("inconclusive reports name the target")
        ),
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn execute(cli: Cli) -> Result<Output, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Gen { n, k } => {
            let mu = minimal_generator(n, k)?;
            let body = json!({ "n": n, "k": k, "parts": mu });
            Ok(Output::ok(render(format, || format!("{mu}\n"), &body)))
        }
        Command::Size { n, k, bound } => {
            let size = generator_size(n, k)?;
            let upper = if bound {
                Some(size_upper_bound(n, k)?)
            } else {
                None
            };
            let text = || match upper {
                Some(b) => format!("{size} (bound {b})\n"),
                None => format!("{size}\n"),
            };
            let mut body = json!({ "n": n, "k": k, "size": size });
            if let Some(b) = upper {
                body["bound"] = json!(b);
            }
            Ok(Output::ok(render(format, text, &body)))
        }
        Command::Table { n_max, k_max } => {
            let table = SizeTable::compute(n_max, k_max)?;
            Ok(Output::ok(render(format, || table.to_string(), &table)))
        }
        Command::Verify {
            parts,
            n,
            k,
            mode,
            max_nodes,
        } => {
            let mu = parse_parts(&parts)?;
            let n = n.unwrap_or(mu.weight());
            let mode = match mode {
                ModeArg::Greedy => VerifyMode::GreedyFirst,
                ModeArg::Exact => VerifyMode::ExactOnly,
            };
            let report = Verifier::new(mode).max_nodes(max_nodes).verify(&mu, n, k)?;
            Ok(Output {
                text: render(format, || report_text(&report), &report),
                code: report_code(&report),
            })
        }
        Command::Witness {
            parts,
            target,
            max_nodes,
        } => {
            let mu = parse_parts(&parts)?;
            let gamma = parse_parts(&target)?;
            let trace = greedy_trace(&mu, &gamma)?;
            if let Some(plan) = trace.plan() {
                let body = json!({ "method": "greedy", "plan": plan, "trace": trace });
                return Ok(Output::ok(render(format, || format!("{plan}\n"), &body)));
            }
            let (decision, nodes) = ExactSearch::with_budget(max_nodes).decide(&mu, &gamma)?;
            let (line, code, plan) = match &decision {
                Decision::Generated(plan) => (format!("exact: {plan}"), EXIT_OK, Some(plan)),
                Decision::NotGenerated => (format!("exact: no plan ({nodes} nodes)"), EXIT_FAIL, None),
                Decision::Inconclusive => (
                    format!("exact: search budget exhausted ({nodes} nodes)"),
                    EXIT_INCONCLUSIVE,
                    None,
                ),
            };
            let method = match decision {
                Decision::Generated(_) => json!("exact"),
                _ => serde_json::Value::Null,
            };
            let body = json!({ "method": method, "plan": plan, "trace": trace, "nodes_expanded": nodes });
            let text = || {
                format!(
                    "greedy: {}\n{line}\n",
                    trace.to_string().replace('\n', "\ngreedy: ")
                )
            };
            Ok(Output {
                text: render(format, text, &body),
                code,
            })
        }
        Command::Split {
            input,
            output,
            k,
            tsplib,
        } => {
            let raw = read(&input)?;
            let spec = if tsplib {
                let k = k.ok_or_else(|| Failure::Input("--k is required with --tsplib".into()))?;
                parse_tsplib(&raw, k)?
            } else {
                let mut spec = InstanceSpec::from_json(&raw)?;
                if let Some(k) = k {
                    spec.k = k;
                    spec.validate()?;
                }
                spec
            };
            let expanded = expand_instance(&spec)?;
            let bound = expansion_bound(&spec)?;
            let mut file = serde_json::to_string_pretty(&expanded).expect("instances serialize");
            file.push('\n');
            if output.as_os_str() == "-" {
                return Ok(Output::ok(file));
            }
            fs::write(&output, file).map_err(|e| Failure::Io(format!("{}: {e}", output.display())))?;
            let summary = json!({
                "customers": spec.customers.len(),
                "copies": expanded.copies().len(),
                "bound": bound,
                "output": output.display().to_string(),
            });
            let text = || {
                format!(
                    "{} copies from {} customers (bound {bound}) written to {}\n",
                    expanded.copies().len(),
                    spec.customers.len(),
                    output.display()
                )
            };
            Ok(Output::ok(render(format, text, &summary)))
        }
        Command::Recover { expanded, assignment } => {
            let expanded = ExpandedInstance::from_json(&read(&expanded)?)?;
            let assignments = CopyAssignment::list_from_json(&read(&assignment)?)?;
            let split = recover_solution(&expanded, &assignments)?;
            Ok(Output::ok(render(format, || split.to_string(), &split)))
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(Failure::Input(msg)) | Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
