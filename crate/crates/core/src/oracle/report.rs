// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


use serde::Serialize;

use super::gof::ks_test;
use crate::error::Result;
use crate::rng::RandomStream;
use crate::sampler::Sampler;

/// Variates from one seeded run together with the proposal count.
#[derive(Debug, Clone, PartialEq)]
pub struct Batch {
    pub values: Vec<f64>,
    pub total_iterations: u64,
}

impl Batch {
    pub fn mean_iterations(&self) -> f64 {
        self.total_iterations as f64 / self.values.len().max(1) as f64
    }
}

/// Summary of a seeded sampling run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleReport {
    pub n: usize,
    pub seed: u64,
    pub method: String,
    pub total_iterations: u64,
    pub mean_iterations: f64,
    pub ks_statistic: Option<f64>,
    pub ks_pvalue: Option<f64>,
    pub sample_mean: f64,
    pub sample_var: f64,
}

pub fn run_sampler(sampler: &dyn Sampler, seed: u64, n: usize) -> Result<Batch> {
    let mut rng = RandomStream::new(seed);
    let mut values = Vec::with_capacity(n);
    let mut total_iterations = 0;
    for _ in 0..n {
        let d = sampler.draw(&mut rng)?;
        total_iterations += d.iterations;
        values.push(d.value);
    }
    Ok(Batch {
        values,
        total_iterations,
    })
}

/// `(mean, unbiased variance)` by Welford's recurrence.
pub fn mean_var(values: &[f64]) -> (f64, f64) {
    let (mut mean, mut m2) = (0.0, 0.0);
    for (i, &x) in values.iter().enumerate() {
        let d = x - mean;
        mean += d / (i + 1) as f64;
        m2 += d * (x - mean);
    }
    let var = if values.len() > 1 {
        m2 / (values.len() - 1) as f64
    } else {
        0.0
    };
    (mean, var)
}

/// Run `sampler` for `n` variates and summarize; with a `cdf`, also run a
/// one-sample KS test (needs `n >= 100`).
pub fn measure_iterations(
    sampler: &dyn Sampler,
    seed: u64,
    n: usize,
    cdf: Option<&dyn Fn(f64) -> f64>,
) -> Result<SampleReport> {
    let batch = run_sampler(sampler, seed, n)?;
    let ks = cdf.map(|f| ks_test(&batch.values, f)).transpose()?;
    let (sample_mean, sample_var) = mean_var(&batch.values);
    Ok(SampleReport {
        n,
        seed,
        method: sampler.name().to_string(),
        total_iterations: batch.total_iterations,
        mean_iterations: batch.mean_iterations(),
        ks_statistic: ks.map(|k| k.statistic),
        ks_pvalue: ks.map(|k| k.p_value),
        sample_mean,
        sample_var,
    })
}
