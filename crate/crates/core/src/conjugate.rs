// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


//! Conjugate bookkeeping for NEF-GHS observations with a Pearson IV prior on
//! the tilt `λ`.
//!
//! With a prior of size `m₀` and mean `μ₀`, the prior on `λ` is Pearson IV
//! with `a = m₀/2 + 1`, `s = m₀ μ₀`. Observing totals `Y·` over `n·` units
//! gives a prior of the same form with `m₁ = m₀ + n·`,
//! `μ₁ = (m₀ μ₀ + Y·)/(m₀ + n·)`.

use serde::Serialize;

use crate::error::{domain, ensure_finite, Result};
use crate::pearson4::Pearson4Params;

/// Prior sample size `m₀ >= 1` and prior mean `μ₀`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PriorSpec {
    pub m0: f64,
    pub mu0: f64,
}

impl PriorSpec {
    pub fn new(m0: f64, mu0: f64) -> Result<Self> {
        ensure_finite("PriorSpec", "m0", m0)?;
        ensure_finite("PriorSpec", "mu0", mu0)?;
        if m0 < 1.0 {
            return Err(domain("PriorSpec", format!("m0 must be at least 1, got {m0}")));
        }
        Ok(PriorSpec { m0, mu0 })
    }

    fn require_finite_variance(&self, what: &'static str) -> Result<()> {
        if self.m0 <= 1.0 {
            return Err(domain(
                what,
                format!("variance is infinite for m0 <= 1, got {}", self.m0),
            ));
        }
        Ok(())
    }

    /// `(μ₀, (μ₀² + 1)/(m₀ − 1))`, the mean and variance of `λ`.
    pub fn prior_moments(&self) -> Result<(f64, f64)> {
        self.require_finite_variance("prior_moments")?;
        Ok((self.mu0, (self.mu0 * self.mu0 + 1.0) / (self.m0 - 1.0)))
    }
}

/// `(a, s) = (m₀/2 + 1, m₀ μ₀)`
pub fn prior_to_pearson(p: &PriorSpec) -> Result<Pearson4Params> {
    Pearson4Params::new(0.5 * p.m0 + 1.0, p.m0 * p.mu0)
}

pub fn posterior_update(p: &PriorSpec, y_sum: f64, n_sum: f64) -> Result<PriorSpec> {
    ensure_finite("posterior_update", "y_sum", y_sum)?;
    ensure_finite("posterior_update", "n_sum", n_sum)?;
    if n_sum < 1.0 {
        return Err(domain(
            "posterior_update",
            format!("n_sum must be at least 1, got {n_sum}"),
        ));
    }
    let m1 = p.m0 + n_sum;
    Ok(PriorSpec {
        m0: m1,
        mu0: (p.m0 * p.mu0 + y_sum) / m1,
    })
}

/// Mean and variance of the total `Y·` over `n·` units under the prior.
/// Pass a posterior to get posterior predictive moments.
pub fn predictive_moments(p: &PriorSpec, n_sum: f64) -> Result<(f64, f64)> {
    p.require_finite_variance("predictive_moments")?;
    ensure_finite("predictive_moments", "n_sum", n_sum)?;
    let (m, mu) = (p.m0, p.mu0);
    Ok((
        n_sum * mu,
        n_sum * (mu * mu + 1.0) * (m + n_sum) / (m - 1.0),
    ))
}

/// Moments of `Y_i` given the total `Y·`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionalMoments {
    pub mean: f64,
    pub var: f64,
    /// `Cov(Y_i, Y_j | Y·) = −n_i n_j · cov_factor`
    pub cov_factor: f64,
}

impl ConditionalMoments {
    pub fn covariance(&self, n_i: f64, n_j: f64) -> f64 {
        -n_i * n_j * self.cov_factor
    }
}

pub fn conditional_moments(n_i: f64, n_sum: f64, y_sum: f64) -> Result<ConditionalMoments> {
    ensure_finite("conditional_moments", "n_i", n_i)?;
    ensure_finite("conditional_moments", "n_sum", n_sum)?;
    ensure_finite("conditional_moments", "y_sum", y_sum)?;
    if !(n_i >= 1.0 && n_i < n_sum) {
        return Err(domain(
            "conditional_moments",
            format!("need 1 <= n_i < n_sum, got n_i = {n_i}, n_sum = {n_sum}"),
        ));
    }
    let ybar = y_sum / n_sum;
    let cov_factor = (ybar * ybar + 1.0) / (n_sum + 1.0);
    Ok(ConditionalMoments {
        mean: n_i * ybar,
        var: n_i * (n_sum - n_i) * cov_factor,
        cov_factor,
    })
}
