// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


//! Goodness-of-fit statistics: Kolmogorov-Smirnov (one and two sample) and
//! Pearson's chi-square.

use std::f64::consts::PI;

use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};

/// Smallest sample accepted by the KS tests.
pub const KS_MIN_SAMPLES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KsResult {
    pub statistic: f64,
    pub p_value: f64,
    /// Effective sample size (`n₁n₂/(n₁+n₂)` for two samples).
    pub n: f64,
}

/// `P(K > λ)` for the Kolmogorov distribution.
pub fn kolmogorov_sf(lambda: f64) -> f64 {
    if lambda <= 0.2 {
        return 1.0;
    }
    let p = if lambda < 1.18 {
        let c = -PI * PI / (8.0 * lambda * lambda);
        let sum: f64 = (1..=6)
            .map(|j| (c * ((2 * j - 1) as f64).powi(2)).exp())
            .sum();
        1.0 - (2.0 * PI).sqrt() / lambda * sum
    } else {
        let c = -2.0 * lambda * lambda;
        let sum: f64 = (1..=8)
            .map(|j| {
                let t = (c * (j * j) as f64).exp();
                if j % 2 == 1 {
                    t
                } else {
                    -t
                }
            })
            .sum();
        2.0 * sum
    };
    p.clamp(0.0, 1.0)
}

/// Asymptotic p-value with Stephens' small-sample correction.
fn ks_p_value(d: f64, n: f64) -> f64 {
    let r = n.sqrt();
    kolmogorov_sf((r + 0.12 + 0.11 / r) * d)
}

fn sorted(samples: &[f64]) -> Result<Vec<f64>> {
    if samples.len() < KS_MIN_SAMPLES {
        return Err(Error::Oracle(format!(
            "KS test needs at least {KS_MIN_SAMPLES} samples, got {}",
            samples.len()
        )));
    }
    if samples.iter().any(|x| x.is_nan()) {
        return Err(Error::Oracle("sample contains NaN".into()));
    }
    let mut v = samples.to_vec();
    v.sort_by(f64::total_cmp);
    Ok(v)
}

/// One-sample KS test of `samples` against a continuous `cdf`.
pub fn ks_test(samples: &[f64], cdf: impl Fn(f64) -> f64) -> Result<KsResult> {
    let v = sorted(samples)?;
    let n = v.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in v.iter().enumerate() {
        let f = cdf(x);
        if f.is_nan() {
            return Err(Error::Oracle(format!("CDF is NaN at {x}")));
        }
        d = d.max((i + 1) as f64 / n - f).max(f - i as f64 / n);
    }
    Ok(KsResult {
        statistic: d,
        p_value: ks_p_value(d, n),
        n,
    })
}

/// Two-sample KS test.
pub fn ks_two_sample(x: &[f64], y: &[f64]) -> Result<KsResult> {
    let (x, y) = (sorted(x)?, sorted(y)?);
    let (nx, ny) = (x.len() as f64, y.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < x.len() && j < y.len() {
        let t = x[i].min(y[j]);
        while i < x.len() && x[i] <= t {
            i += 1;
        }
        while j < y.len() && y[j] <= t {
            j += 1;
        }
        d = d.max((i as f64 / nx - j as f64 / ny).abs());
    }
    let ne = nx * ny / (nx + ny);
    Ok(KsResult {
        statistic: d,
        p_value: ks_p_value(d, ne),
        n: ne,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiSquareResult {
    pub statistic: f64,
    pub dof: f64,
    pub p_value: f64,
}

/// Pearson chi-square test of binned counts against expected counts.
pub fn chi_square_gof(observed: &[u64], expected: &[f64]) -> Result<ChiSquareResult> {
    if observed.len() != expected.len() || observed.len() < 2 {
        return Err(Error::Oracle(format!(
            "chi-square needs matching bins (>= 2), got {} and {}",
            observed.len(),
            expected.len()
        )));
    }
    if expected.iter().any(|&e| !(e > 0.0)) {
        return Err(Error::Oracle("expected counts must be positive".into()));
    }
    let statistic: f64 = observed
        .iter()
        .zip(expected)
        .map(|(&o, &e)| (o as f64 - e).powi(2) / e)
        .sum();
    let dof = (observed.len() - 1) as f64;
    let dist = ChiSquared::new(dof).map_err(|e| Error::Oracle(e.to_string()))?;
    Ok(ChiSquareResult {
        statistic,
        dof,
        p_value: dist.sf(statistic),
    })
}
