// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


use std::f64::consts::FRAC_PI_2;

use super::Pearson4Params;
use crate::error::{domain, Result};
use crate::rng::UniformSource;
use crate::sampler::{finite_or_max, rejection_loop, Draw, Sampler};
use crate::specfun::{pearson4_norm_bounds, NormBounds};

/// Peak data of the angular density for `a > 1`, `s >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogConcaveEnvelope {
    a: f64,
    s: f64,
    mode: f64,
    log_delta: f64,
    bounds: NormBounds,
}

impl LogConcaveEnvelope {
    /// `p` must have `a > 1`; a negative skew is mirrored.
    pub fn new(p: &Pearson4Params) -> Result<Self> {
        if p.a() <= 1.0 {
            return Err(domain(
                "LogConcaveEnvelope",
                format!("needs a > 1, got {}", p.a()),
            ));
        }
        let (a, s) = (p.a(), p.s().abs());
        let beta = s / (2.0 * (a - 1.0));
        let mode = beta.atan();
        let log1p_beta2 = if beta > 1e8 {
            2.0 * beta.ln() + (beta * beta).recip().ln_1p()
        } else {
            (beta * beta).ln_1p()
        };
        Ok(LogConcaveEnvelope {
            a,
            s,
            mode,
            log_delta: s * mode - (a - 1.0) * log1p_beta2,
            bounds: pearson4_norm_bounds(a, s)?,
        })
    }

    pub fn mode(&self) -> f64 {
        self.mode
    }

    /// `ln Δ` where `h(mode) = γ Δ`.
    pub fn log_delta(&self) -> f64 {
        self.log_delta
    }

    pub fn bounds(&self) -> &NormBounds {
        &self.bounds
    }

    /// `s y + 2(a−1) ln cos y`, the unnormalized angular log density.
    #[inline]
    fn log_kernel(&self, y: f64) -> f64 {
        self.s * y + 2.0 * (self.a - 1.0) * y.cos().ln()
    }

    /// `ln(γ⁺ Δ min(1, e^{1 − |y−m| γ⁻ Δ}))`
    pub fn log_upper(&self, y: f64) -> f64 {
        let scale = (self.bounds.log_gamma_lo + self.log_delta).exp();
        self.bounds.log_gamma_hi + self.log_delta + (1.0 - (y - self.mode).abs() * scale).min(0.0)
    }

    /// `ln(γ⁻ e^{s y} cos^{2(a−1)} y)`
    pub fn log_lower(&self, y: f64) -> f64 {
        if y.abs() >= FRAC_PI_2 {
            return f64::NEG_INFINITY;
        }
        self.bounds.log_gamma_lo + self.log_kernel(y)
    }
}

/// Map one uniform to the standard log-concave proposal: uniform on
/// `[−1, 1]` with probability 1/2, unit exponential tails beyond.
#[inline]
fn proposal_offset(u: f64) -> f64 {
    let v = 4.0 * u - 2.0;
    if v < -1.0 {
        -1.0 + (v + 2.0).ln()
    } else if v > 1.0 {
        1.0 - (v - 1.0).ln()
    } else {
        v
    }
}

/// Universal log-concave rejection on the angle using the exact constant.
#[derive(Debug, Clone, Copy)]
pub struct LogConcave {
    env: LogConcaveEnvelope,
    sign: f64,
    log_peak: f64,
    peak: f64,
}

impl LogConcave {
    pub fn new(p: &Pearson4Params) -> Result<Self> {
        let env = LogConcaveEnvelope::new(p)?;
        let (q, sign) = p.abs_skew();
        let log_peak = q.log_norm() + env.log_delta;
        Ok(LogConcave {
            env,
            sign,
            log_peak,
            peak: log_peak.exp(),
        })
    }

    fn attempt(&self, rng: &mut dyn UniformSource) -> Option<f64> {
        let y = self.env.mode + proposal_offset(rng.next_uniform()) / self.peak;
        let ln_u = rng.next_uniform().ln();
        if y.abs() >= FRAC_PI_2 {
            return None;
        }
        let lhs = ln_u + self.log_peak + (1.0 - self.peak * (y - self.env.mode).abs()).min(0.0);
        // ln h(y) − ln γ + ln γ = log_kernel + (log_peak − log_delta)
        let rhs = self.log_peak - self.env.log_delta + self.env.log_kernel(y);
        (lhs <= rhs).then(|| finite_or_max(self.sign * y.tan()))
    }
}

impl Sampler for LogConcave {
    fn name(&self) -> &'static str {
        "logconcave"
    }

    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw> {
        rejection_loop(self.name(), rng, |r| self.attempt(r))
    }

    fn iteration_bound(&self) -> f64 {
        4.0
    }
}

/// Log-concave rejection that only uses the `γ⁻, γ⁺` bracket, never `γ`.
#[derive(Debug, Clone, Copy)]
pub struct GammaFree {
    env: LogConcaveEnvelope,
    sign: f64,
    /// `γ⁻ Δ`
    scale: f64,
    /// `ln(γ⁺ Δ)`
    log_top: f64,
    /// `ln(4 γ⁺ γ / γ⁻²)`
    log_expected: f64,
}

impl GammaFree {
    pub fn new(p: &Pearson4Params) -> Result<Self> {
        let env = LogConcaveEnvelope::new(p)?;
        let b = env.bounds;
        let (q, sign) = p.abs_skew();
        Ok(GammaFree {
            env,
            sign,
            scale: (b.log_gamma_lo + env.log_delta).exp(),
            log_top: b.log_gamma_hi + env.log_delta,
            log_expected: 4f64.ln() + b.log_gamma_hi + q.log_norm() - 2.0 * b.log_gamma_lo,
        })
    }

    pub fn envelope(&self) -> &LogConcaveEnvelope {
        &self.env
    }

    /// `4 (γ⁺/γ⁻)²`: a bound on the expected proposals computable from the
    /// bracket alone.
    pub fn bracket_iteration_bound(&self) -> f64 {
        4.0 * self.env.bounds.ratio().powi(2)
    }

    fn attempt(&self, rng: &mut dyn UniformSource) -> Option<f64> {
        let y = self.env.mode + proposal_offset(rng.next_uniform()) / self.scale;
        let ln_u = rng.next_uniform().ln();
        if y.abs() >= FRAC_PI_2 {
            return None;
        }
        let lhs = ln_u + self.log_top + (1.0 - (y - self.env.mode).abs() * self.scale).min(0.0);
        (lhs <= self.env.log_lower(y)).then(|| finite_or_max(self.sign * y.tan()))
    }
}

impl Sampler for GammaFree {
    fn name(&self) -> &'static str {
        "gamma-free"
    }

    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw> {
        rejection_loop(self.name(), rng, |r| self.attempt(r))
    }

    /// Exact expectation `4 γ⁺ γ / (γ⁻)²`.
    fn iteration_bound(&self) -> f64 {
        self.log_expected.exp()
    }
}
