// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


use std::fs;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pearson_meixner::betaized::{BetaizedMethod, BetaizedParams, BetaizedSampler};
use pearson_meixner::conjugate::{self, PriorSpec};
use pearson_meixner::ghs::{ghs_log_density, GhsParams};
use pearson_meixner::grid::parse_grid;
use pearson_meixner::oracle::run_sampler;
use pearson_meixner::pearson4::{Pearson4Method, Pearson4Params, Pearson4Sampler};
use pearson_meixner::rng::worker_seed;
use pearson_meixner::student::{OneLiner, StudentT};
use pearson_meixner::validate::{self, Suite};
use pearson_meixner::{Error, Sampler};

#[derive(Parser)]
#[command(name = "pearson-meixner", version, about = "Exact Pearson IV and betaized Meixner-Morris variates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SampleDist {
    Pearson4,
    BetaizedMm,
    StudentT,
    Cauchy,
    T2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DensityDist {
    Pearson4,
    Ghs,
    Nefghs,
    BetaizedMm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MomentDist {
    Pearson4,
    Nefghs,
    BetaizedMm,
    Prior,
    Predictive,
    Conditional,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchDist {
    Pearson4,
    BetaizedMm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Pearson4,
    Betaized,
    Specfun,
}

#[derive(Subcommand)]
enum Command {
    /// Draw variates; one per line on stdout.
    Sample {
        #[arg(long, value_enum)]
        dist: SampleDist,
        /// Pearson IV or betaized shape, Student-t degrees of freedom.
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<f64>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// pearson4: auto|logconcave|gamma-free|student-reject|symmetrized;
        /// betaized-mm: lemma2|lemma3
        #[arg(long)]
        method: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Worker threads; worker i uses seed splitmix64(seed ^ i).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Evaluate a density (or its logarithm) at one point.
    Density {
        #[arg(long, value_enum)]
        dist: DensityDist,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<f64>,
        #[arg(long)]
        rho: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long)]
        log: bool,
    },
    /// Mean and variance as JSON.
    Moments {
        #[arg(long, value_enum)]
        dist: MomentDist,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<f64>,
        #[arg(long)]
        rho: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<f64>,
        #[arg(long)]
        m0: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        mu0: Option<f64>,
        #[arg(long)]
        n_i: Option<f64>,
        #[arg(long)]
        n_sum: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        y_sum: Option<f64>,
    },
    /// Conjugate update; prints the posterior and its Pearson IV shape.
    Posterior {
        #[arg(long)]
        m0: f64,
        #[arg(long, allow_hyphen_values = true)]
        mu0: f64,
        #[arg(long, allow_hyphen_values = true)]
        y_sum: f64,
        #[arg(long)]
        n_sum: f64,
    },
    /// Seeded statistical self-checks; exit status 1 if any fails.
    Validate {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        quick: bool,
    },
    /// Mean proposals per variate over a parameter grid file.
    Bench {
        #[arg(long, value_enum)]
        dist: BenchDist,
        #[arg(long)]
        grid: String,
        #[arg(long)]
        method: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

enum Failure {
    /// Bad input: exit status 2.
    Usage(String),
    /// Internal error or failed validation: exit status 1.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain { .. } | Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn need(v: Option<f64>, flag: &str) -> CliResult<f64> {
    v.ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

fn pearson4_sampler(a: f64, s: f64, method: Option<&str>) -> CliResult<Box<dyn Sampler + Send + Sync>> {
    let m: Pearson4Method = method.unwrap_or("auto").parse()?;
    let p = Pearson4Params::new(a, s)?;
    Ok(Box::new(Pearson4Sampler::new(&p, m)?))
}

fn betaized_sampler(a: f64, b: f64, s: f64, method: Option<&str>) -> CliResult<Box<dyn Sampler + Send + Sync>> {
    let m: BetaizedMethod = method.unwrap_or("lemma3").parse()?;
    let p = BetaizedParams::new(a, b, s)?;
    Ok(Box::new(BetaizedSampler::new(&p, m)?))
}

fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

#[allow(clippy::too_many_arguments)]
fn cmd_sample(
    dist: SampleDist,
    a: Option<f64>,
    b: Option<f64>,
    s: Option<f64>,
    n: usize,
    seed: u64,
    method: Option<String>,
    format: Format,
    jobs: usize,
) -> CliResult<()> {
    let method = method.as_deref();
    let sampler: Box<dyn Sampler + Send + Sync> = match dist {
        SampleDist::Pearson4 => pearson4_sampler(need(a, "a")?, need(s, "s")?, method)?,
        SampleDist::BetaizedMm => betaized_sampler(need(a, "a")?, need(b, "b")?, need(s, "s")?, method)?,
        SampleDist::StudentT => Box::new(StudentT::new(need(a, "a")?)?),
        SampleDist::Cauchy => Box::new(OneLiner::Cauchy),
        SampleDist::T2 => Box::new(OneLiner::T2),
    };
    if jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let (values, iterations) = if jobs == 1 {
        let batch = run_sampler(sampler.as_ref(), seed, n)?;
        (batch.values, batch.total_iterations)
    } else {
        let chunk = n.div_ceil(jobs);
        let sampler = sampler.as_ref();
        let parts: Vec<_> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|i| {
                    let len = chunk.min(n.saturating_sub(i * chunk));
                    scope.spawn(move || run_sampler(sampler, worker_seed(seed, i as u64), len))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        let mut values = Vec::with_capacity(n);
        let mut iterations = 0;
        for part in parts {
            let part = part?;
            values.extend(part.values);
            iterations += part.total_iterations;
        }
        (values, iterations)
    };
    let mut out = BufWriter::new(io::stdout().lock());
    match format {
        Format::Csv => {
            for v in &values {
                writeln!(out, "{}", fmt17(*v))?;
            }
        }
        Format::Jsonl => {
            for v in &values {
                writeln!(out, "{}", json!({ "x": v }))?;
            }
            let meta = json!({ "meta": {
                "iterations": iterations,
                "n": n,
                "seed": seed,
                "method": sampler.name(),
            }});
            writeln!(out, "{meta}")?;
        }
    }
    out.flush()?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_density(
    dist: DensityDist,
    a: Option<f64>,
    b: Option<f64>,
    s: Option<f64>,
    rho: Option<f64>,
    lambda: Option<f64>,
    x: f64,
    log: bool,
) -> CliResult<()> {
    let lf = match dist {
        DensityDist::Pearson4 => Pearson4Params::new(need(a, "a")?, need(s, "s")?)?.log_density(x),
        DensityDist::Ghs => ghs_log_density(need(rho, "rho")?, x)?,
        DensityDist::Nefghs => GhsParams::new(need(rho, "rho")?, lambda.unwrap_or(0.0))?.log_density(x),
        DensityDist::BetaizedMm => {
            BetaizedParams::density_only(need(a, "a")?, need(b, "b")?, need(s, "s")?)?.log_density(x)
        }
    };
    println!("{}", if log { lf } else { lf.exp() });
    Ok(())
}

fn print_moments(mean: f64, var: f64) {
    println!("{}", json!({ "mean": mean, "var": var }));
}

fn cmd_moments(cmd: Command) -> CliResult<()> {
    let Command::Moments {
        dist,
        a,
        b,
        s,
        rho,
        lambda,
        m0,
        mu0,
        n_i,
        n_sum,
        y_sum,
    } = cmd
    else {
        unreachable!()
    };
    match dist {
        MomentDist::Pearson4 => {
            let p = Pearson4Params::new(need(a, "a")?, need(s, "s")?)?;
            print_moments(p.mean()?, p.variance()?);
        }
        MomentDist::Nefghs => {
            let (m, v) = GhsParams::new(need(rho, "rho")?, lambda.unwrap_or(0.0))?.moments();
            print_moments(m, v);
        }
        MomentDist::BetaizedMm => {
            let (m, v) = BetaizedParams::density_only(need(a, "a")?, need(b, "b")?, need(s, "s")?)?.moments();
            print_moments(m, v);
        }
        MomentDist::Prior => {
            let (m, v) = PriorSpec::new(need(m0, "m0")?, need(mu0, "mu0")?)?.prior_moments()?;
            print_moments(m, v);
        }
        MomentDist::Predictive => {
            let p = PriorSpec::new(need(m0, "m0")?, need(mu0, "mu0")?)?;
            let (m, v) = conjugate::predictive_moments(&p, need(n_sum, "n-sum")?)?;
            print_moments(m, v);
        }
        MomentDist::Conditional => {
            let c = conjugate::conditional_moments(need(n_i, "n-i")?, need(n_sum, "n-sum")?, need(y_sum, "y-sum")?)?;
            println!("{}", json!({ "mean": c.mean, "var": c.var, "cov_factor": c.cov_factor }));
        }
    }
    Ok(())
}

fn cmd_posterior(m0: f64, mu0: f64, y_sum: f64, n_sum: f64) -> CliResult<()> {
    let post = conjugate::posterior_update(&PriorSpec::new(m0, mu0)?, y_sum, n_sum)?;
    let p = conjugate::prior_to_pearson(&post)?;
    println!(
        "{}",
        json!({ "m1": post.m0, "mu1": post.mu0, "a": p.a(), "s": p.s() })
    );
    Ok(())
}

fn cmd_validate(suite: SuiteArg, quick: bool) -> CliResult<()> {
    let suite = match suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Pearson4 => Suite::Pearson4,
        SuiteArg::Betaized => Suite::Betaized,
        SuiteArg::Specfun => Suite::Specfun,
    };
    let report = validate::run(suite, quick);
    println!(
        "{}",
        serde_json::to_string_pretty(&report).map_err(|e| Failure::Internal(e.to_string()))?
    );
    if report.passed {
        Ok(())
    } else {
        let failed = report.checks.iter().filter(|c| !c.passed).count();
        Err(Failure::Internal(format!("{failed} validation check(s) failed")))
    }
}

fn cmd_bench(
    dist: BenchDist,
    grid: &str,
    method: Option<String>,
    n: usize,
    seed: u64,
    format: Format,
) -> CliResult<()> {
    let text = fs::read_to_string(grid).map_err(|e| Failure::Usage(format!("{grid}: {e}")))?;
    let points = parse_grid(&text)?;
    let mut out = BufWriter::new(io::stdout().lock());
    if format == Format::Csv {
        writeln!(out, "a,b,s,method,mean_iterations,theoretical_bound")?;
    }
    for pt in points {
        let sampler = match dist {
            BenchDist::Pearson4 => pearson4_sampler(need(pt.a, "a")?, pt.s.unwrap_or(0.0), method.as_deref())?,
            BenchDist::BetaizedMm => {
                betaized_sampler(need(pt.a, "a")?, need(pt.b, "b")?, pt.s.unwrap_or(0.0), method.as_deref())?
            }
        };
        let batch = run_sampler(sampler.as_ref(), seed, n)?;
        let (mean, bound) = (batch.mean_iterations(), sampler.iteration_bound());
        match format {
            Format::Csv => writeln!(
                out,
                "{},{},{},{},{},{}",
                pt.a.map(|v| v.to_string()).unwrap_or_default(),
                pt.b.map(|v| v.to_string()).unwrap_or_default(),
                pt.s.unwrap_or(0.0),
                sampler.name(),
                mean,
                bound
            )?,
            Format::Jsonl => writeln!(
                out,
                "{}",
                json!({
                    "params": pt,
                    "method": sampler.name(),
                    "mean_iterations": mean,
                    "theoretical_bound": bound,
                })
            )?,
        }
    }
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Sample {
            dist,
            a,
            b,
            s,
            n,
            seed,
            method,
            format,
            jobs,
        } => cmd_sample(dist, a, b, s, n, seed, method, format, jobs),
        Command::Density {
            dist,
            a,
            b,
            s,
            rho,
            lambda,
            x,
            log,
        } => cmd_density(dist, a, b, s, rho, lambda, x, log),
        cmd @ Command::Moments { .. } => cmd_moments(cmd),
        Command::Posterior { m0, mu0, y_sum, n_sum } => cmd_posterior(m0, mu0, y_sum, n_sum),
        Command::Validate { suite, quick } => cmd_validate(suite, quick),
        Command::Bench {
            dist,
            grid,
            method,
            n,
            seed,
            format,
        } => cmd_bench(dist, &grid, method, n, seed, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
