// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


use std::f64::consts::FRAC_PI_2;

use super::Pearson4Params;
use crate::error::Result;
use crate::rng::{sample_exponential, UniformSource};
use crate::sampler::{finite_or_max, rejection_loop, Draw, Sampler};
use crate::specfun::pearson4_log_norm;
use crate::student::student_t_unchecked;

/// Rejection from `T_{2a−1} / √(2a−1)`, accepting with probability
/// `e^{−s (π/2 − atan X)}`. Valid for every `a > 1/2`; the cost grows like
/// `e^{π|s|/2}`.
#[derive(Debug, Clone, Copy)]
pub struct StudentRejection {
    s: f64,
    sign: f64,
    df: f64,
    scale: f64,
    log_expected: f64,
}

impl StudentRejection {
    pub fn new(p: &Pearson4Params) -> Self {
        let (q, sign) = p.abs_skew();
        let df = 2.0 * q.a() - 1.0;
        let log_norm_sym = pearson4_log_norm(q.a(), 0.0).expect("a > 1/2 already checked");
        StudentRejection {
            s: q.s(),
            sign,
            df,
            scale: df.sqrt().recip(),
            log_expected: q.s() * FRAC_PI_2 + q.log_norm() - log_norm_sym,
        }
    }

    fn attempt(&self, rng: &mut dyn UniformSource) -> Option<f64> {
        let x = student_t_unchecked(rng, self.df) * self.scale;
        let e = sample_exponential(rng);
        (e >= self.s * 1f64.atan2(x)).then(|| finite_or_max(self.sign * x))
    }
}

impl Sampler for StudentRejection {
    fn name(&self) -> &'static str {
        "student-reject"
    }

    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw> {
        rejection_loop(self.name(), rng, |r| self.attempt(r))
    }

    /// Exact expectation `e^{π|s|/2} γ(a, s) / γ(a, 0)`.
    fn iteration_bound(&self) -> f64 {
        self.log_expected.exp()
    }
}
