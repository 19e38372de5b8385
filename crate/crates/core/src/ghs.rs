// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


//! Generalized hyperbolic secant (GHS) densities and their natural
//! exponential family tilt (NEF-GHS, the Meixner-Morris family).
//!
//! `f_ρ(x) = 2^{ρ−2} |Γ((ρ + ix)/2)|² / (π Γ(ρ))`; `ρ = 1` is the hyperbolic
//! secant law `1 / (2 cosh(πx/2))`.

use std::f64::consts::PI;

use crate::error::{domain, ensure_finite, Result};
use crate::rng::{log_gamma_variate, UniformSource};
use crate::specfun::{ln_abs_gamma_shifted, ln_gamma};

#[inline]
pub(crate) fn ghs_ln(rho: f64, x: f64) -> f64 {
    (rho - 2.0) * std::f64::consts::LN_2 - PI.ln() - ln_gamma(rho)
        + 2.0 * ln_abs_gamma_shifted(0.5 * rho, 0.5 * x.abs())
}

fn check_rho(what: &'static str, rho: f64) -> Result<()> {
    ensure_finite(what, "rho", rho)?;
    if rho <= 0.0 {
        return Err(domain(what, format!("rho must be positive, got {rho}")));
    }
    Ok(())
}

/// `ln f_ρ(x)`.
pub fn ghs_log_density(rho: f64, x: f64) -> Result<f64> {
    check_rho("ghs_log_density", rho)?;
    ensure_finite("ghs_log_density", "x", x)?;
    Ok(ghs_ln(rho, x))
}

/// NEF-GHS parameters: convolution parameter `ρ > 0` and tilt `λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GhsParams {
    rho: f64,
    lambda: f64,
}

impl GhsParams {
    pub fn new(rho: f64, lambda: f64) -> Result<Self> {
        check_rho("GhsParams", rho)?;
        ensure_finite("GhsParams", "lambda", lambda)?;
        Ok(GhsParams { rho, lambda })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `ln[(1+λ²)^{−ρ/2} e^{x atan λ} f_ρ(x)]`
    pub fn log_density(&self, x: f64) -> f64 {
        -self.rho * self.lambda.hypot(1.0).ln() + x * self.lambda.atan() + ghs_ln(self.rho, x)
    }

    /// `(ρλ, ρ(λ² + 1))`
    pub fn moments(&self) -> (f64, f64) {
        (
            self.rho * self.lambda,
            self.rho * (self.lambda * self.lambda + 1.0),
        )
    }
}

pub fn nefghs_log_density(g: &GhsParams, x: f64) -> f64 {
    g.log_density(x)
}

pub fn nefghs_moments(g: &GhsParams) -> (f64, f64) {
    g.moments()
}

/// Monte Carlo estimate of `f_ρ(x)` from `E cos(xZ/2)` with
/// `Z = ln G − ln G'`, `G, G'` independent gamma(`ρ/2`). Returns
/// `(estimate, standard error)`; needs `n >= 1000`.
pub fn cos_representation_estimate(
    rng: &mut dyn UniformSource,
    rho: f64,
    x: f64,
    n: usize,
) -> Result<(f64, f64)> {
    check_rho("cos_representation_estimate", rho)?;
    ensure_finite("cos_representation_estimate", "x", x)?;
    if n < 1000 {
        return Err(domain(
            "cos_representation_estimate",
            format!("need at least 1000 draws, got {n}"),
        ));
    }
    let half = 0.5 * rho;
    let c = ((rho - 2.0) * std::f64::consts::LN_2 + 2.0 * ln_gamma(half)
        - PI.ln()
        - ln_gamma(rho))
    .exp();
    let (mut mean, mut m2) = (0.0, 0.0);
    for i in 0..n {
        let z = log_gamma_variate(rng, half) - log_gamma_variate(rng, half);
        let v = (0.5 * x * z).cos();
        let d = v - mean;
        mean += d / (i + 1) as f64;
        m2 += d * (v - mean);
    }
    let sd = (m2 / (n - 1) as f64).sqrt();
    Ok((c * mean, c * sd / (n as f64).sqrt()))
}
