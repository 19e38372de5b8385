// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


use std::f64::consts::{FRAC_PI_2, PI};

use super::Pearson4Params;
use crate::error::{domain, Result};
use crate::rng::{log_gamma_variate, UniformSource};
use crate::sampler::{finite_or_max, rejection_loop, Draw, Sampler};
use crate::specfun::ln_gamma;

/// `ln(2z / (π sin z))` on `(0, π/2)`.
#[inline]
fn log_sine_ratio(z: f64) -> f64 {
    let r = if z < 1e-4 {
        z * z / 6.0
    } else {
        (z / z.sin()).ln()
    };
    r + (2.0 / PI).ln()
}

/// `cot z` given `ln z`, staying finite when `z` underflows.
#[inline]
fn cot_from_log(ln_z: f64, z: f64) -> f64 {
    if ln_z < -300.0 {
        finite_or_max((-ln_z).exp())
    } else {
        finite_or_max(z.tan().recip())
    }
}

/// Rejection on the folded angle `z = π/2 − |atan X|` for `1/2 < a <= 1`,
/// `|s| >= 1`.
///
/// The two halves of the angular density are dominated separately: the
/// skew-favoured half by `e^{s(π/2−z)} (2z/π)^{2a−2}` (a gamma variate in
/// `z`), the other half by `(2z/π)^{2a−2}` (a power variate). A half is
/// picked in proportion to its envelope mass.
#[derive(Debug, Clone, Copy)]
pub struct Symmetrized {
    s: f64,
    sign: f64,
    shape: f64,
    ln_s: f64,
    exponent: f64,
    p_left: f64,
    log_expected: f64,
}

impl Symmetrized {
    pub fn new(p: &Pearson4Params) -> Result<Self> {
        let (q, sign) = p.abs_skew();
        let (a, s) = (q.a(), q.s());
        if a > 1.0 {
            return Err(domain(
                "Symmetrized",
                format!("needs 1/2 < a <= 1, got a = {a}"),
            ));
        }
        if s < 1.0 {
            return Err(domain(
                "Symmetrized",
                format!("needs |s| >= 1, got {}", p.s()),
            ));
        }
        let shape = 2.0 * a - 1.0;
        let ln_right = s * FRAC_PI_2 + (2.0 * a - 2.0) * (2.0 / PI).ln() + ln_gamma(shape)
            - shape * s.ln();
        let ln_left = FRAC_PI_2.ln() - shape.ln();
        let hi = ln_right.max(ln_left);
        let ln_total = hi + ((ln_right - hi).exp() + (ln_left - hi).exp()).ln();
        Ok(Symmetrized {
            s,
            sign,
            shape,
            ln_s: s.ln(),
            exponent: 2.0 * (1.0 - a),
            p_left: (ln_left - ln_total).exp(),
            log_expected: ln_total + q.log_norm(),
        })
    }

    fn attempt(&self, rng: &mut dyn UniformSource) -> Option<f64> {
        if rng.next_uniform() < self.p_left {
            let ln_z = FRAC_PI_2.ln() + rng.next_uniform().ln() / self.shape;
            let z = ln_z.exp();
            let ln_u = rng.next_uniform().ln();
            let target = -self.s * (FRAC_PI_2 - z) + self.exponent * log_sine_ratio(z);
            (ln_u <= target).then(|| -self.sign * cot_from_log(ln_z, z))
        } else {
            let ln_z = log_gamma_variate(rng, self.shape) - self.ln_s;
            let z = ln_z.exp();
            if z >= FRAC_PI_2 {
                return None;
            }
            let ln_u = rng.next_uniform().ln();
            (ln_u <= self.exponent * log_sine_ratio(z)).then(|| self.sign * cot_from_log(ln_z, z))
        }
    }
}

impl Sampler for Symmetrized {
    fn name(&self) -> &'static str {
        "symmetrized"
    }

    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw> {
        rejection_loop(self.name(), rng, |r| self.attempt(r))
    }

    /// Exact expectation: total envelope mass times `γ`.
    fn iteration_bound(&self) -> f64 {
        self.log_expected.exp()
    }
}
