// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


//! Betaized Meixner-Morris law: the conditional distribution of one GHS
//! summand given the total,
//! `f(x) = f_a(x) f_b(s − x) / f_{a+b}(s)`.
//!
//! For `min(a, b) >= 1` the density is squeezed between `α g` and `β g` for
//! an explicit log-concave `g` whose mean and variance match `f`. Two
//! rejection samplers are built on that sandwich:
//! [`Lemma2Sampler`] (one exponential-tailed envelope) and [`Lemma3Sampler`]
//! (a three-piece envelope, the default).
//!
//! A vector `(X₁, …, X_n)` of GHS summands with parameters `n_i` conditioned
//! on their sum is drawn one coordinate at a time:
//!
//! ```
//! use pearson_meixner::betaized::{BetaizedMethod, BetaizedParams, BetaizedSampler};
//! use pearson_meixner::{RandomStream, Sampler};
//!
//! let (n, mut total) = ([1.0, 2.0, 3.0], 4.5);
//! let mut rng = RandomStream::new(1);
//! let mut xs = Vec::new();
//! for i in 0..n.len() - 1 {
//!     let rest: f64 = n[i + 1..].iter().sum();
//!     let p = BetaizedParams::new(n[i], rest, total).unwrap();
//!     let x = BetaizedSampler::new(&p, BetaizedMethod::Lemma3).unwrap().sample(&mut rng).unwrap();
//!     xs.push(x);
//!     total -= x;
//! }
//! xs.push(total);
//! assert!((xs.iter().sum::<f64>() - 4.5).abs() < 1e-9);
//! ```

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, ensure_finite, Error, Result};
use crate::ghs::ghs_ln;
use crate::rng::{sample_exponential, sample_sign, UniformSource};
use crate::sampler::{rejection_loop, Draw, Sampler};
use crate::specfun::{ln_abs_gamma_shifted, ln_gamma};

/// Shapes `a, b` and conditioning total `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaizedParams {
    a: f64,
    b: f64,
    s: f64,
    /// `ln f_{a+b}(s)`
    log_denominator: f64,
}

impl BetaizedParams {
    /// Parameters usable for sampling: `min(a, b) >= 1`.
    pub fn new(a: f64, b: f64, s: f64) -> Result<Self> {
        let p = Self::density_only(a, b, s)?;
        if a.min(b) < 1.0 {
            return Err(domain(
                "BetaizedParams",
                format!("sampling needs min(a, b) >= 1, got a = {a}, b = {b}"),
            ));
        }
        Ok(p)
    }

    /// Parameters for density evaluation only, any `a, b > 0`. Samplers
    /// built from these still refuse `min(a, b) < 1`.
    pub fn density_only(a: f64, b: f64, s: f64) -> Result<Self> {
        ensure_finite("BetaizedParams", "a", a)?;
        ensure_finite("BetaizedParams", "b", b)?;
        ensure_finite("BetaizedParams", "s", s)?;
        if a <= 0.0 || b <= 0.0 {
            return Err(domain(
                "BetaizedParams",
                format!("shapes must be positive, got a = {a}, b = {b}"),
            ));
        }
        Ok(BetaizedParams {
            a,
            b,
            s,
            log_denominator: ghs_ln(a + b, s),
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn log_density(&self, x: f64) -> f64 {
        ghs_ln(self.a, x) + ghs_ln(self.b, self.s - x) - self.log_denominator
    }

    pub fn density(&self, x: f64) -> f64 {
        self.log_density(x).exp()
    }

    /// `(μ, σ²)`
    pub fn moments(&self) -> (f64, f64) {
        let (a, b, s) = (self.a, self.b, self.s);
        let n = a + b;
        (a * s / n, a * b / (n * n) * (s * s + n * n) / (1.0 + n))
    }

    fn require_log_concave(&self, what: &'static str) -> Result<()> {
        if self.a.min(self.b) < 1.0 {
            return Err(domain(
                what,
                format!("needs min(a, b) >= 1, got a = {}, b = {}", self.a, self.b),
            ));
        }
        Ok(())
    }

    pub fn sandwich_constants(&self) -> Result<SandwichConstants> {
        self.require_log_concave("sandwich_constants")?;
        let (mu, var) = self.moments();
        let sigma = var.sqrt();
        let r = 3.0 / (PI * PI);
        let alpha = ((1.0 - r / self.a) * (1.0 - r / self.b)).powi(2);
        let beta = ((1.0 + r / self.a) * (1.0 + r / self.b)).powi(2);
        let root = (12.0 + 12.0 / (alpha * alpha)).sqrt();
        Ok(SandwichConstants {
            alpha,
            beta,
            env_a: beta * beta,
            env_b: 1.5 + 1.0 / root,
            env_c: alpha / root,
            eta: sigma / alpha * (1.0 + (3.0 * (1.0 + 1.0 / (alpha * alpha))).sqrt()),
            tau: alpha / (sigma * root),
            tau_prime: beta / sigma,
            mu,
            sigma,
        })
    }

    /// `ln g(x)` for the log-concave surrogate with `α g <= f <= β g`.
    pub fn log_surrogate_g(&self, x: f64) -> Result<f64> {
        self.require_log_concave("log_surrogate_g")?;
        let (a, b, s) = (self.a, self.b, self.s);
        let n = a + b;
        let log_norm = ln_gamma(n) + PI.ln() - n - ln_gamma(a) - ln_gamma(b)
            - 2.0 * ln_abs_gamma_shifted(0.5 * n, 0.5 * s);
        let y = s - x;
        Ok(log_norm
            + (a - 1.0) * (0.5 * a).hypot(0.5 * x).ln()
            + (b - 1.0) * (0.5 * b).hypot(0.5 * y).ln()
            - x * (x / a).atan()
            - y * (y / b).atan())
    }
}

/// Constants of the sandwich and of both envelopes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SandwichConstants {
    pub alpha: f64,
    pub beta: f64,
    /// `A = β²`
    pub env_a: f64,
    /// `B = 3/2 + 1/√(12 + 12/α²)`
    pub env_b: f64,
    /// `C = α/√(12 + 12/α²)`
    pub env_c: f64,
    pub eta: f64,
    pub tau: f64,
    pub tau_prime: f64,
    pub mu: f64,
    pub sigma: f64,
}

impl SandwichConstants {
    /// Expected proposals of [`Lemma2Sampler`]: `2(1 + B) A / C`.
    pub fn lemma2_expected_iterations(&self) -> f64 {
        2.0 * (1.0 + self.env_b) * self.env_a / self.env_c
    }

    /// Branch masses `(q₁, q₂, q₃)` of one half of the three-piece envelope.
    pub fn lemma3_masses(&self) -> (f64, f64, f64) {
        (
            self.beta * (1.0 + self.tau_prime * self.eta),
            self.beta * (self.tau_prime / self.tau).ln(),
            self.beta,
        )
    }

    /// Expected proposals of [`Lemma3Sampler`]: `2(q₁ + q₂ + q₃)`.
    pub fn lemma3_expected_iterations(&self) -> f64 {
        let (q1, q2, q3) = self.lemma3_masses();
        2.0 * (q1 + q2 + q3)
    }
}

/// Rejection from `(A/σ) min(1, e^{B − C|x−μ|/σ})`.
#[derive(Debug, Clone, Copy)]
pub struct Lemma2Sampler {
    p: BetaizedParams,
    k: SandwichConstants,
    p_central: f64,
    half_width: f64,
    tail_scale: f64,
    log_height: f64,
}

impl Lemma2Sampler {
    pub fn new(p: &BetaizedParams) -> Result<Self> {
        let k = p.sandwich_constants()?;
        Ok(Lemma2Sampler {
            p: *p,
            k,
            p_central: k.env_b / (1.0 + k.env_b),
            half_width: k.env_b * k.sigma / k.env_c,
            tail_scale: k.sigma / k.env_c,
            log_height: (k.env_a / k.sigma).ln(),
        })
    }

    pub fn constants(&self) -> &SandwichConstants {
        &self.k
    }

    pub fn log_envelope(&self, x: f64) -> f64 {
        self.log_height + (self.k.env_b - self.k.env_c * (x - self.k.mu).abs() / self.k.sigma).min(0.0)
    }

    fn attempt(&self, rng: &mut dyn UniformSource) -> Option<f64> {
        let x = if rng.next_uniform() < self.p_central {
            self.k.mu + (2.0 * rng.next_uniform() - 1.0) * self.half_width
        } else {
            let e = sample_exponential(rng);
            self.k.mu + sample_sign(rng) * (self.k.env_b + e) * self.tail_scale
        };
        let ln_u = rng.next_uniform().ln();
        (ln_u + self.log_envelope(x) <= self.p.log_density(x)).then_some(x)
    }
}

impl Sampler for Lemma2Sampler {
    fn name(&self) -> &'static str {
        "lemma2"
    }

    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw> {
        rejection_loop(self.name(), rng, |r| self.attempt(r))
    }

    fn iteration_bound(&self) -> f64 {
        self.k.lemma2_expected_iterations()
    }
}

/// Piece of the three-part envelope a proposal came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `|x − μ| <= η + 1/τ'`, flat at `βτ'`
    Central,
    /// `|x − μ| − η ∈ [1/τ', 1/τ]`, height `β / (|x−μ| − η)`
    Middle,
    /// beyond, `βτ e^{−τ(|x−μ| − η) + 1}`
    Tail,
}

/// One proposal of [`Lemma3Sampler`] before the acceptance test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Proposal {
    pub branch: Branch,
    pub x: f64,
    /// Log envelope height at `x`.
    pub log_bound: f64,
}

/// Rejection from the three-piece envelope (flat, reciprocal, exponential).
#[derive(Debug, Clone, Copy)]
pub struct Lemma3Sampler {
    p: BetaizedParams,
    k: SandwichConstants,
    t1: f64,
    t2: f64,
    ln_beta: f64,
    ln_tau: f64,
    ln_tau_prime: f64,
    central_half_width: f64,
}

impl Lemma3Sampler {
    pub fn new(p: &BetaizedParams) -> Result<Self> {
        let k = p.sandwich_constants()?;
        let (q1, q2, q3) = k.lemma3_masses();
        let q = q1 + q2 + q3;
        Ok(Lemma3Sampler {
            p: *p,
            k,
            t1: q1 / q,
            t2: (q1 + q2) / q,
            ln_beta: k.beta.ln(),
            ln_tau: k.tau.ln(),
            ln_tau_prime: k.tau_prime.ln(),
            central_half_width: k.eta + 1.0 / k.tau_prime,
        })
    }

    pub fn constants(&self) -> &SandwichConstants {
        &self.k
    }

    pub fn log_envelope(&self, x: f64) -> f64 {
        let y = (x - self.k.mu).abs() - self.k.eta;
        if y <= 1.0 / self.k.tau_prime {
            self.ln_beta + self.ln_tau_prime
        } else if y <= 1.0 / self.k.tau {
            self.ln_beta - y.ln()
        } else {
            self.ln_beta + self.ln_tau + 1.0 - self.k.tau * y
        }
    }

    /// Draw from the normalized envelope without the acceptance step.
    pub fn propose(&self, rng: &mut dyn UniformSource) -> Proposal {
        let v = rng.next_uniform();
        if v <= self.t1 {
            let x = self.k.mu + (2.0 * rng.next_uniform() - 1.0) * self.central_half_width;
            Proposal {
                branch: Branch::Central,
                x,
                log_bound: self.ln_beta + self.ln_tau_prime,
            }
        } else if v <= self.t2 {
            let w = rng.next_uniform();
            let ln_y = -((1.0 - w) * self.ln_tau_prime + w * self.ln_tau);
            let x = self.k.mu + sample_sign(rng) * (self.k.eta + ln_y.exp());
            Proposal {
                branch: Branch::Middle,
                x,
                log_bound: self.ln_beta - ln_y,
            }
        } else {
            let e = sample_exponential(rng);
            let x = self.k.mu + sample_sign(rng) * (self.k.eta + (1.0 + e) / self.k.tau);
            Proposal {
                branch: Branch::Tail,
                x,
                log_bound: self.ln_beta + self.ln_tau - e,
            }
        }
    }

    fn attempt(&self, rng: &mut dyn UniformSource) -> Option<f64> {
        let prop = self.propose(rng);
        let ln_u = rng.next_uniform().ln();
        (ln_u + prop.log_bound <= self.p.log_density(prop.x)).then_some(prop.x)
    }
}

impl Sampler for Lemma3Sampler {
    fn name(&self) -> &'static str {
        "lemma3"
    }

    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw> {
        rejection_loop(self.name(), rng, |r| self.attempt(r))
    }

    fn iteration_bound(&self) -> f64 {
        self.k.lemma3_expected_iterations()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BetaizedMethod {
    Lemma2,
    #[default]
    Lemma3,
}

impl BetaizedMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            BetaizedMethod::Lemma2 => "lemma2",
            BetaizedMethod::Lemma3 => "lemma3",
        }
    }
}

impl fmt::Display for BetaizedMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BetaizedMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemma2" => Ok(BetaizedMethod::Lemma2),
            "lemma3" | "auto" => Ok(BetaizedMethod::Lemma3),
            _ => Err(domain("BetaizedMethod", format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum BetaizedSampler {
    Lemma2(Lemma2Sampler),
    Lemma3(Lemma3Sampler),
}

impl BetaizedSampler {
    pub fn new(p: &BetaizedParams, method: BetaizedMethod) -> Result<Self> {
        Ok(match method {
            BetaizedMethod::Lemma2 => BetaizedSampler::Lemma2(Lemma2Sampler::new(p)?),
            BetaizedMethod::Lemma3 => BetaizedSampler::Lemma3(Lemma3Sampler::new(p)?),
        })
    }

    fn inner(&self) -> &dyn Sampler {
        match self {
            BetaizedSampler::Lemma2(g) => g,
            BetaizedSampler::Lemma3(g) => g,
        }
    }
}

impl Sampler for BetaizedSampler {
    fn name(&self) -> &'static str {
        self.inner().name()
    }

    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw> {
        self.inner().draw(rng)
    }

    fn iteration_bound(&self) -> f64 {
        self.inner().iteration_bound()
    }
}

pub fn sample_lemma2(rng: &mut dyn UniformSource, p: &BetaizedParams) -> Result<f64> {
    Lemma2Sampler::new(p)?.sample(rng)
}

pub fn sample_lemma3(rng: &mut dyn UniformSource, p: &BetaizedParams) -> Result<f64> {
    Lemma3Sampler::new(p)?.sample(rng)
}
