// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! Deterministic uniform stream and the primitive variates (exponential,
//! normal, gamma, random sign) consumed by the rejection loops.
//!
//! The stream is ChaCha20 (`rand_chacha::ChaCha20Rng`) keyed from a 64-bit
//! seed by `rand_core`'s `seed_from_u64` (a PCG32 expansion). ChaCha is a
//! counter-based generator whose output is specified bit for bit, so a seed
//! reproduces the same uniforms on every platform.
//!
//! Each uniform consumes one 64-bit word: the top 52 bits `k` give
//! `(k + 1/2) 2^-52`, which is exact and lies strictly inside `(0, 1)`.

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{domain, Result};

/// A source of independent uniforms on the open interval `(0, 1)`.
///
/// Generators take `&mut dyn UniformSource` so tests can replay a fixed
/// sequence with [`FixedUniforms`].
pub trait UniformSource {
    /// Next uniform, never exactly `0.0` or `1.0`.
    fn next_uniform(&mut self) -> f64;
}

/// Seeded ChaCha20 stream with a draw counter.
#[derive(Clone, Debug)]
pub struct RandomStream {
    seed: u64,
    position: u64,
    rng: ChaCha20Rng,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        RandomStream {
            seed,
            position: 0,
            rng: ChaCha20Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of 64-bit words consumed so far.
    pub fn position(&self) -> u64 {
        self.position
    }

    pub fn next_u64(&mut self) -> u64 {
        self.position += 1;
        self.rng.next_u64()
    }
}

impl UniformSource for RandomStream {
    #[inline]
    fn next_uniform(&mut self) -> f64 {
        let k = self.next_u64() >> 12;
        (k as f64 + 0.5) * (1.0 / (1u64 << 52) as f64)
    }
}

/// Replays a fixed list of uniforms, then panics when exhausted.
///
/// Used to pin the arithmetic of one-liner generators to hand-evaluated
/// values.
#[derive(Clone, Debug)]
pub struct FixedUniforms {
    values: Vec<f64>,
    next: usize,
}

impl FixedUniforms {
    pub fn new(values: impl Into<Vec<f64>>) -> Self {
        FixedUniforms {
            values: values.into(),
            next: 0,
        }
    }
}

impl UniformSource for FixedUniforms {
    fn next_uniform(&mut self) -> f64 {
        let u = *self
            .values
            .get(self.next)
            .expect("FixedUniforms exhausted");
        self.next += 1;
        u
    }
}

/// SplitMix64 finalizer, used to derive independent per-worker seeds.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed for worker `index` of a parallel run keyed by `seed`.
pub fn worker_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ index)
}

/// Standard exponential by inversion, `−ln U`.
#[inline]
pub fn sample_exponential(rng: &mut dyn UniformSource) -> f64 {
    -rng.next_uniform().ln()
}

/// Equiprobable `−1.0` or `+1.0`.
#[inline]
pub fn sample_sign(rng: &mut dyn UniformSource) -> f64 {
    if rng.next_uniform() < 0.5 {
        -1.0
    } else {
        1.0
    }
}

/// Standard normal by Marsaglia's polar method.
pub fn sample_normal(rng: &mut dyn UniformSource) -> f64 {
    loop {
        let v1 = 2.0 * rng.next_uniform() - 1.0;
        let v2 = 2.0 * rng.next_uniform() - 1.0;
        let w = v1 * v1 + v2 * v2;
        if w < 1.0 && w > 0.0 {
            return v1 * (-2.0 * w.ln() / w).sqrt();
        }
    }
}

fn check_shape(shape: f64) -> Result<()> {
    if shape.is_finite() && shape > 0.0 {
        Ok(())
    } else {
        Err(domain(
            "sample_gamma",
            format!("shape must be finite and positive, got {shape}"),
        ))
    }
}

/// Marsaglia–Tsang squeeze method, `shape >= 1`.
fn gamma_large(rng: &mut dyn UniformSource, shape: f64) -> f64 {
    let d = shape - 1.0 / 3.0;
    let c = 1.0 / (9.0 * d).sqrt();
    loop {
        let x = sample_normal(rng);
        let v = 1.0 + c * x;
        if v <= 0.0 {
            continue;
        }
        let v = v * v * v;
        let u = rng.next_uniform();
        let x2 = x * x;
        if u < 1.0 - 0.0331 * x2 * x2 || u.ln() < 0.5 * x2 + d * (1.0 - v + v.ln()) {
            return d * v;
        }
    }
}

pub(crate) fn log_gamma_variate(rng: &mut dyn UniformSource, shape: f64) -> f64 {
    if shape >= 1.0 {
        gamma_large(rng, shape).ln()
    } else {
        // G_a = G_{a+1} U^{1/a}
        let g = gamma_large(rng, shape + 1.0);
        g.ln() + rng.next_uniform().ln() / shape
    }
}

/// `ln G` for a gamma(`shape`, 1) variate `G`.
///
/// For small shapes `G` itself underflows routinely (`G ≈ U^{1/shape}`);
/// the logarithm does not.
pub fn sample_log_gamma(rng: &mut dyn UniformSource, shape: f64) -> Result<f64> {
    check_shape(shape)?;
    Ok(log_gamma_variate(rng, shape))
}

/// Gamma(`shape`, 1) variate. Values below the smallest normal `f64` are
/// returned as `f64::MIN_POSITIVE`.
pub fn sample_gamma(rng: &mut dyn UniformSource, shape: f64) -> Result<f64> {
    check_shape(shape)?;
    Ok(log_gamma_variate(rng, shape).exp().max(f64::MIN_POSITIVE))
}
