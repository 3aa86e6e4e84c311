//! Command-line front end: graph enumeration, class-membership checks,
//! verification campaigns, and named-pattern generation.
//!
//! Exit codes: 0 = all verdicts consistent, 1 = counterexample found (the
//! report is still written), 2 = usage or configuration error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use perfdiv::campaign::{emit_report, run_campaign, CampaignId, CampaignSpec};
use perfdiv::classes::{find_forbidden, ClassSpec};
use perfdiv::patterns::make_named_str;
use perfdiv::{encode_graph6, Enumerator};

#[derive(Parser)]
#[command(
    name = "perfdiv",
    version,
    about = "Exhaustive verification toolkit for perfect divisibility of small graph classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all non-isomorphic graphs on exactly N vertices, one
    /// graph6 line each.
    Enumerate {
        /// Vertex count to enumerate.
        #[arg(long)]
        n: usize,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Enumeration cap guard; requests above it are rejected.
        #[arg(long, default_value_t = 8)]
        cap: usize,
        /// Worker count (1 = sequential, 0 = all cores).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check every graph of a graph6 file against a forbidden-pattern
    /// class specification such as "bull,odd-torch" or "bull,P11,C4".
    Check {
        /// Input graph6 file, one graph per line.
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated forbidden selectors.
        #[arg(long = "class")]
        class: String,
    },
    /// Run a verification campaign and write its line-delimited report.
    Campaign {
        /// Campaign name (odd-torch, even-hole, 4k1, tf-equivalence,
        /// diamond-structure, diamond-mnpd, far-antihole, chi-binding,
        /// torch-c3, mnwd-search, pxx-classes).
        name: String,
        /// Builtin enumeration cap (campaign default when omitted; 0
        /// disables the builtin source).
        #[arg(long)]
        max_n: Option<usize>,
        /// Weight bound for bounded-weight sub-checks.
        #[arg(long)]
        wmax: Option<u32>,
        /// Order cap for the bounded-weight sub-checks.
        #[arg(long)]
        weighted_max_n: Option<usize>,
        /// Extra graph6 file appended after the builtin enumeration.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Worker count (1 = sequential, 0 = all cores).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report destination.
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a named pattern (bull, house, hammer, diamond, fork, e, claw,
    /// triangle, paw, grotzsch) as a graph6 line.
    Named {
        pattern: String,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Enumerate { n, out, cap, jobs } => {
            let graphs = Enumerator::with_cap(cap)
                .context("invalid enumeration cap")?
                .jobs(jobs)
                .enumerate(n)
                .context("enumeration failed")?;
            let mut sink = open_sink(out.as_deref())?;
            for g in &graphs {
                writeln!(sink, "{}", encode_graph6(g))?;
            }
            sink.flush()?;
            eprintln!("enumerated {} graphs on {} vertices", graphs.len(), n);
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { input, class } => {
            let spec = ClassSpec::parse(&class).context("invalid class specification")?;
            let graphs =
                perfdiv::campaign::load_corpus(&input).context("failed to load corpus")?;
            let stdout = io::stdout();
            let mut sink = stdout.lock();
            let mut members = 0usize;
            for g in &graphs {
                let g6 = encode_graph6(g);
                match find_forbidden(g, &spec) {
                    None => {
                        members += 1;
                        writeln!(sink, "{g6}\tmember")?;
                    }
                    Some(violation) => writeln!(
                        sink,
                        "{g6}\tnon-member\t{}@{:?}",
                        violation.selector, violation.witness.vertices
                    )?,
                }
            }
            eprintln!("{members}/{} graphs are {spec} members", graphs.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Campaign {
            name,
            max_n,
            wmax,
            weighted_max_n,
            input,
            jobs,
            out,
        } => {
            let id: CampaignId = name.parse().context("unknown campaign")?;
            let mut spec = CampaignSpec::new(id);
            if let Some(v) = max_n {
                spec.max_n = v;
            }
            if let Some(v) = wmax {
                spec.wmax = v;
            }
            if let Some(v) = weighted_max_n {
                spec.weighted_max_n = v;
            }
            spec.input = input;
            spec.jobs = jobs;

            let report = run_campaign(&spec).context("campaign failed")?;
            let file = File::create(&out)
                .with_context(|| format!("cannot create report at {}", out.display()))?;
            let mut writer = BufWriter::new(file);
            emit_report(&report, &mut writer)?;
            writer.flush()?;

            let s = &report.summary;
            eprintln!(
                "campaign {}: {} graphs, {} members, {} passes, {} counterexamples, {} skipped ({} ms)",
                s.campaign, s.graphs, s.members, s.passes, s.counterexamples, s.skipped,
                report.wall_millis
            );
            if report.has_counterexamples() {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Named { pattern, out } => {
            let g = make_named_str(&pattern).context("unknown pattern")?;
            let mut sink = open_sink(out.as_deref())?;
            writeln!(sink, "{}", encode_graph6(&g))?;
            sink.flush()?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn open_sink(path: Option<&std::path::Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}
