// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

use crate::error::{Error, Result};
use crate::rng::UniformSource;

/// Hard limit on proposals per variate in every rejection loop.
pub const ITERATION_CAP: u64 = 10_000_000;

/// One variate together with the number of proposals it took.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Draw {
    pub value: f64,
    pub iterations: u64,
}

/// A generator with precomputed constants.
pub trait Sampler {
    /// Short identifier used in reports and CLI output.
    fn name(&self) -> &'static str;

    /// Draw one variate and report how many proposals were needed.
    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw>;

    /// Theoretical expected number of proposals per variate (an upper bound
    /// where the exact value is not available in closed form).
    fn iteration_bound(&self) -> f64;

    fn sample(&self, rng: &mut dyn UniformSource) -> Result<f64> {
        self.draw(rng).map(|d| d.value)
    }
}

/// Run `attempt` until it returns a value, counting proposals.
#[inline]
pub(crate) fn rejection_loop(
    method: &'static str,
    rng: &mut dyn UniformSource,
    mut attempt: impl FnMut(&mut dyn UniformSource) -> Option<f64>,
) -> Result<Draw> {
    for iterations in 1..=ITERATION_CAP {
        if let Some(value) = attempt(rng) {
            return Ok(Draw { value, iterations });
        }
    }
    Err(Error::IterationCap {
        method,
        cap: ITERATION_CAP,
    })
}

/// Clamp an overflowed variate to the largest finite `f64` of the same sign.
#[inline]
pub(crate) fn finite_or_max(x: f64) -> f64 {
    if x.is_infinite() {
        f64::MAX.copysign(x)
    } else {
        x
    }
}
