use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use monopole_verify::emit::emit;
use monopole_verify::{run, Suite, SuiteConfig};

/// Runs the verification suites and writes a report.
///
/// Exits 0 when every check passes, 1 when any fails, 2 on a configuration
/// or output error.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Args {
    /// Comma-separated suites to run.
    #[arg(long, value_delimiter = ',', default_value = "quat,ej,weyl,orbit")]
    suites: Vec<Suite>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Samples per check.
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 1e-12)]
    tol_exact: f64,
    #[arg(long, default_value_t = 1e-6)]
    tol_fd: f64,
    #[arg(long, default_value_t = 1e-4)]
    fd_step: f64,
    /// Radius of the excluded ball around the origin.
    #[arg(long = "rmin", default_value_t = 0.1)]
    r_min: f64,
    /// Half-width of the sampling box.
    #[arg(long = "box", default_value_t = 3.0)]
    half_width: f64,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write the CSV report here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

impl Args {
    fn config(&self) -> SuiteConfig {
        SuiteConfig {
            seed: self.seed,
            samples: self.samples,
            tol_exact: self.tol_exact,
            tol_fd: self.tol_fd,
            fd_step: self.fd_step,
            r_min: self.r_min,
            half_width: self.half_width,
            suites: self.suites.iter().copied().collect(),
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let report = match run(&args.config()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    for c in &report.checks {
        println!(
            "{} {:<48} err {:.3e}  tol {:.1e}  used {}  skipped {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.max_abs_err,
            c.tolerance,
            c.samples_used,
            c.samples_skipped,
        );
    }
    let failed = report.failures().count();
    println!("{} checks, {} failed", report.checks.len(), failed);
    eprintln!("wall time {:.2?}", report.wall_time);
    if let Err(e) = emit(&report, args.json.as_deref(), args.csv.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code() as u8)
}
