//! Command-line front end: run workbench documents or recheck reports.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;

use homdesk::cli::{load_document, recheck_report, render_report, run_jobs, RunOptions};

/// Exact homological workbench over prime fields.
#[derive(Parser)]
#[command(name = "homdesk", version, about)]
struct Args {
    /// Workbench document to execute.
    #[arg(long, value_name = "FILE")]
    doc: Option<PathBuf>,

    /// Job to run: a job name from the document, or `all`.
    #[arg(long, default_value = "all")]
    job: String,

    /// Write the report here instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Re-verify the matrix certificates stored in an existing report.
    #[arg(long, value_name = "REPORT")]
    recheck: Option<PathBuf>,

    /// Refuse documents whose entities exceed this dimension.
    #[arg(long, default_value_t = 512)]
    max_dim: usize,

    /// Cap on resolution length for relative-dimension computations.
    #[arg(long, default_value_t = 32)]
    cap: usize,
}

fn run(args: &Args) -> Result<bool> {
    if let Some(report_path) = &args.recheck {
        let text = std::fs::read_to_string(report_path)
            .with_context(|| format!("reading {}", report_path.display()))?;
        let rows = recheck_report(&text)?;
        for row in &rows {
            let verdict = if row.ok { "ok" } else { "FAILED" };
            println!("{}: {} — {}", row.job, row.label, verdict);
        }
        let good = rows.iter().filter(|r| r.ok).count();
        println!("{good}/{} certificates verify", rows.len());
        return Ok(rows.iter().all(|r| r.ok));
    }

    let Some(doc_path) = &args.doc else {
        bail!("pass --doc <FILE> to run a document, or --recheck <REPORT>");
    };
    let text = std::fs::read_to_string(doc_path)
        .with_context(|| format!("reading {}", doc_path.display()))?;
    let wb = load_document(&text, args.max_dim)?;
    let selector = if args.job == "all" { None } else { Some(args.job.as_str()) };
    if selector.is_some() && !wb.job_names().any(|n| n == args.job) {
        bail!("document has no job named `{}`", args.job);
    }
    let opts = RunOptions { cap: args.cap, max_dim: args.max_dim };
    let report = run_jobs(&wb, selector, &opts);
    let rendered = render_report(&report);
    match &args.out {
        Some(path) => std::fs::write(path, &rendered)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(report.all_pass())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
