use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use tautchi_cli::job::JobFile;
use tautchi_cli::run::{verify_tasks, Plan};
use tautchi_cli::{plan, run_tasks, CliError, RunOptions, EXIT_INVALID};

/// Exact Euler characteristics of tautological bundles on Hilbert schemes of
/// points on surfaces.
#[derive(Debug, Parser)]
#[command(name = "tautchi", version)]
struct Args {
    /// JSON job file.
    #[arg(long, value_name = "FILE")]
    jobs: Option<PathBuf>,
    /// Also write the results as a JSON array to this file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Compute N(k,l) by exact invariant computations (k <= 7) instead of the closed form.
    #[arg(long = "force-brute-N")]
    force_brute_n: bool,
    /// Run independent jobs on this many threads.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(usize))]
    threads: Option<usize>,
    /// Run the complex verification suite, e.g. `--verify k=7`.
    #[arg(long, value_name = "k=MAX", value_parser = parse_verify)]
    verify: Option<usize>,
}

fn parse_verify(s: &str) -> Result<usize, String> {
    let v = s.strip_prefix("k=").unwrap_or(s);
    match v.parse::<usize>() {
        Ok(k) if (1..=tautchi_cli::run::VERIFY_K_MAX).contains(&k) => Ok(k),
        _ => Err(format!("expected k=<max> with 1 <= max <= {}", tautchi_cli::run::VERIFY_K_MAX)),
    }
}

fn execute(args: &Args) -> Result<u8, CliError> {
    if args.jobs.is_none() && args.verify.is_none() {
        return Err(CliError::Usage("nothing to do: pass --jobs <file> or --verify k=<max>".into()));
    }
    if args.threads == Some(0) {
        return Err(CliError::Usage("--threads must be positive".into()));
    }
    let mut plan = match &args.jobs {
        Some(path) => plan(&JobFile::load(path)?)?,
        None => plan(&JobFile { surface: preset_p2(), bundles: Vec::new(), line_bundle: None, jobs: Vec::new() })?,
    };
    if let Some(k_max) = args.verify {
        append_verify(&mut plan, k_max);
    }
    let opts = RunOptions { force_brute_n: args.force_brute_n, threads: args.threads };
    let table = run_tasks(&plan, &opts)?;
    print!("{}", table.render());
    if let Some(path) = &args.out {
        std::fs::write(path, table.to_json()).map_err(|source| CliError::Output { path: path.clone(), source })?;
    }
    Ok(table.exit_code())
}

fn preset_p2() -> tautchi_cli::job::SurfaceSpec {
    tautchi_cli::job::SurfaceSpec { preset: Some("P2".into()), ..Default::default() }
}

fn append_verify(plan: &mut Plan, k_max: usize) {
    plan.tasks.extend(verify_tasks("verify", k_max));
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
