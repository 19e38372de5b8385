// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


//! Seeded self-checks behind the CLI `validate` command.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::betaized::{BetaizedParams, Lemma2Sampler, Lemma3Sampler};
use crate::error::{domain, Error, Result};
use crate::ghs::ghs_log_density;
use crate::oracle::{log_integrate_line, measure_iterations, NumericCdf, Pearson4Oracle};
use crate::pearson4::{Pearson4Method, Pearson4Params, Pearson4Sampler};
use crate::sampler::Sampler;
use crate::specfun::{log_gamma_real, pearson4_log_norm, pearson4_log_norm_duplication, pearson4_norm_bounds};

/// Significance level of every KS check.
pub const KS_ALPHA: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Specfun,
    Pearson4,
    Betaized,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "specfun" => Ok(Suite::Specfun),
            "pearson4" => Ok(Suite::Pearson4),
            "betaized" => Ok(Suite::Betaized),
            _ => Err(domain("Suite", format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Specfun => "specfun",
            Suite::Pearson4 => "pearson4",
            Suite::Betaized => "betaized",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub suite: String,
    pub quick: bool,
    pub passed: bool,
    pub checks: Vec<Check>,
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Record an oracle or library error as a failed check.
    fn attempt(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        match f() {
            Ok((ok, detail)) => self.push(name, ok, detail),
            Err(e) => self.push(name, false, format!("error: {e}")),
        }
    }
}

/// Upper limit for a measured mean of geometric counts with expectation
/// `expected` over `n` draws: four standard errors of slack.
fn iteration_limit(expected: f64, n: usize) -> f64 {
    expected + 4.0 * (expected * (expected - 1.0).max(0.0) / n as f64).sqrt()
}

fn specfun_suite(c: &mut Checks) {
    // lnΓ(0.5) = ln √π, lnΓ(10) = ln 362880
    c.attempt("log_gamma_real", || {
        let e1 = (log_gamma_real(0.5)? - 0.5 * std::f64::consts::PI.ln()).abs();
        let e2 = (log_gamma_real(10.0)? - 362_880f64.ln()).abs();
        Ok((e1 < 1e-14 && e2 < 1e-13, format!("errors {e1:.2e}, {e2:.2e}")))
    });
    for a in [0.6, 1.0, 1.5, 2.0, 10.0, 100.0] {
        for s in [0.0, 1.0, 5.0, 50.0] {
            c.attempt(&format!("pearson4 normalization a={a} s={s}"), || {
                let o = Pearson4Oracle::new(a, s, 64)?;
                let err = (pearson4_log_norm(a, s)? + o.log_mass()).exp_m1().abs();
                let dup = (pearson4_log_norm(a, s)? - pearson4_log_norm_duplication(a, s)?).abs();
                Ok((err < 1e-6 && dup < 1e-10, format!("|∫f − 1| = {err:.2e}, duplication gap {dup:.2e}")))
            });
        }
    }
    for a in [1.0, 1.5, 2.0, 10.0, 100.0, 1e4] {
        for s in [0.0, 1.0, 10.0, 100.0, 1000.0] {
            c.attempt(&format!("gamma bracket a={a} s={s}"), || {
                let b = pearson4_norm_bounds(a, s)?;
                let g = pearson4_log_norm(a, s)?;
                let ok = b.log_gamma_lo <= g && g <= b.log_gamma_hi;
                Ok((ok, format!("{:.6} <= {g:.6} <= {:.6}", b.log_gamma_lo, b.log_gamma_hi)))
            });
        }
    }
    c.attempt("gamma bracket ratio at a=100", || {
        let r = pearson4_norm_bounds(100.0, 0.0)?.ratio();
        Ok((r < 1.01, format!("ratio {r:.6}")))
    });
    for (a, b, s) in [(1.0, 1.0, 0.0), (2.0, 3.5, 1.0), (3.5, 3.5, 5.0)] {
        c.attempt(&format!("convolution a={a} b={b} s={s}"), || {
            let lhs = log_integrate_line(
                |x| ghs_log_density(a, x).unwrap_or(f64::NEG_INFINITY) + ghs_log_density(b, s - x).unwrap_or(f64::NEG_INFINITY),
                a * s / (a + b),
                1.0,
            )?
            .value;
            let err = (lhs - ghs_log_density(a + b, s)?).exp_m1().abs();
            Ok((err < 1e-6, format!("relative gap {err:.2e}")))
        });
    }
}

fn ks_check(
    c: &mut Checks,
    name: &str,
    sampler: &dyn Sampler,
    cdf: &dyn Fn(f64) -> f64,
    seed: u64,
    n: usize,
) {
    c.attempt(name, || {
        let r = measure_iterations(sampler, seed, n, Some(cdf))?;
        let p = r.ks_pvalue.unwrap_or(0.0);
        let limit = iteration_limit(sampler.iteration_bound(), n);
        let ok = p > KS_ALPHA && r.mean_iterations <= limit;
        Ok((
            ok,
            format!(
                "KS p = {p:.4}, mean iterations {:.4} (expected {:.4}, limit {limit:.4})",
                r.mean_iterations,
                sampler.iteration_bound()
            ),
        ))
    });
}

fn pearson4_suite(c: &mut Checks, n: usize) {
    let cells: [(f64, f64, Pearson4Method); 11] = [
        (3.0, 0.0, Pearson4Method::Auto),
        (1.0, 5.0, Pearson4Method::Auto),
        (1.0, -0.5, Pearson4Method::Auto),
        (1.5, 2.0, Pearson4Method::Auto),
        (0.7, 0.5, Pearson4Method::Auto),
        (0.75, 3.0, Pearson4Method::Auto),
        (0.8, -4.0, Pearson4Method::Auto),
        (3.0, 5.0, Pearson4Method::LogConcave),
        (100.0, 10.0, Pearson4Method::LogConcave),
        (2.0, 1000.0, Pearson4Method::GammaFree),
        (2.0, 1.0, Pearson4Method::StudentReject),
    ];
    for (i, (a, s, method)) in cells.into_iter().enumerate() {
        let name = format!("pearson4 {method} a={a} s={s}");
        let built = Pearson4Params::new(a, s)
            .and_then(|p| Pearson4Sampler::new(&p, method))
            .and_then(|g| Pearson4Oracle::new(a, s, 256).map(|o| (g, o)));
        match built {
            Ok((g, o)) => ks_check(c, &name, &g, &|x| o.cdf(x), 1000 + i as u64, n),
            Err(e) => c.push(name, false, format!("error: {e}")),
        }
    }
}

fn betaized_suite(c: &mut Checks, n: usize) {
    for (i, (a, b, s)) in [(1.0, 1.0, 0.0), (2.0, 3.0, 5.0), (1.0, 50.0, 3.0), (10.0, 10.0, -7.0)]
        .into_iter()
        .enumerate()
    {
        let built = BetaizedParams::new(a, b, s).and_then(|p| {
            let (mu, var) = p.moments();
            let cdf = NumericCdf::on_line(Box::new(move |x| p.log_density(x)), mu, var.sqrt(), 256)?;
            Ok((p, cdf))
        });
        let (p, cdf) = match built {
            Ok(v) => v,
            Err(e) => {
                c.push(format!("betaized a={a} b={b} s={s}"), false, format!("error: {e}"));
                continue;
            }
        };
        c.attempt(&format!("betaized normalization a={a} b={b} s={s}"), || {
            let err = cdf.log_mass().exp_m1().abs();
            Ok((err < 1e-6, format!("|∫f − 1| = {err:.2e}")))
        });
        let f = |x: f64| cdf.cdf(x);
        match Lemma2Sampler::new(&p) {
            Ok(g) => ks_check(c, &format!("lemma2 a={a} b={b} s={s}"), &g, &f, 2000 + i as u64, n),
            Err(e) => c.push(format!("lemma2 a={a} b={b} s={s}"), false, e.to_string()),
        }
        match Lemma3Sampler::new(&p) {
            Ok(g) => ks_check(c, &format!("lemma3 a={a} b={b} s={s}"), &g, &f, 3000 + i as u64, n),
            Err(e) => c.push(format!("lemma3 a={a} b={b} s={s}"), false, e.to_string()),
        }
    }
}

/// Run a suite. `quick` uses 2·10⁴ variates per statistical check instead
/// of 10⁵.
pub fn run(suite: Suite, quick: bool) -> ValidationReport {
    let n = if quick { 20_000 } else { 100_000 };
    let mut c = Checks(Vec::new());
    if matches!(suite, Suite::All | Suite::Specfun) {
        specfun_suite(&mut c);
    }
    if matches!(suite, Suite::All | Suite::Pearson4) {
        pearson4_suite(&mut c, n);
    }
    if matches!(suite, Suite::All | Suite::Betaized) {
        betaized_suite(&mut c, n);
    }
    ValidationReport {
        suite: suite.to_string(),
        quick,
        passed: c.0.iter().all(|k| k.passed),
        checks: c.0,
    }
}
