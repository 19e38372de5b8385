// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! Student-t one-liners: Bailey's polar formula and the two inversion special
//! cases (Cauchy, `t₂`).

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::rng::UniformSource;
use crate::sampler::{finite_or_max, Draw, Sampler};

/// `√(U^{−2/df} − 1)` without forming `U^{−2/df}`, which overflows for small
/// `df` long before the root does.
#[inline]
fn polar_radius(ln_u: f64, df: f64) -> f64 {
    let k = -2.0 * ln_u / df;
    if k <= 1.0 {
        k.exp_m1().sqrt()
    } else {
        (0.5 * k).exp() * (-(-k).exp_m1()).sqrt()
    }
}

/// Student-t with `df` degrees of freedom by the polar method:
/// `√df · sin(2πU′) · √(U^{−2/df} − 1)`.
///
/// Consumes `U` first, then `U′`. Results beyond the `f64` range are clamped
/// to `±f64::MAX`.
pub fn sample_student_t(rng: &mut dyn UniformSource, df: f64) -> Result<f64> {
    if !(df.is_finite() && df > 0.0) {
        return Err(domain(
            "sample_student_t",
            format!("degrees of freedom must be finite and positive, got {df}"),
        ));
    }
    Ok(student_t_unchecked(rng, df))
}

#[inline]
pub(crate) fn student_t_unchecked(rng: &mut dyn UniformSource, df: f64) -> f64 {
    let u = rng.next_uniform();
    let u_angle = rng.next_uniform();
    finite_or_max(df.sqrt() * (2.0 * PI * u_angle).sin() * polar_radius(u.ln(), df))
}

/// Standard Cauchy by inversion, `tan(π(U − 1/2))`.
pub fn sample_cauchy(rng: &mut dyn UniformSource) -> f64 {
    (PI * (rng.next_uniform() - 0.5)).tan()
}

/// Student-t with two degrees of freedom by inversion,
/// `(2U − 1) / √(2U(1 − U))`.
pub fn sample_t2(rng: &mut dyn UniformSource) -> f64 {
    let u = rng.next_uniform();
    (2.0 * u - 1.0) / (2.0 * u * (1.0 - u)).sqrt()
}

/// Polar-method Student-t generator as a [`Sampler`].
#[derive(Debug, Clone, Copy)]
pub struct StudentT {
    df: f64,
}

impl StudentT {
    pub fn new(df: f64) -> Result<Self> {
        if !(df.is_finite() && df > 0.0) {
            return Err(domain(
                "StudentT",
                format!("degrees of freedom must be finite and positive, got {df}"),
            ));
        }
        Ok(StudentT { df })
    }

    pub fn df(&self) -> f64 {
        self.df
    }
}

impl Sampler for StudentT {
    fn name(&self) -> &'static str {
        "student-t"
    }

    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw> {
        Ok(Draw {
            value: student_t_unchecked(rng, self.df),
            iterations: 1,
        })
    }

    fn iteration_bound(&self) -> f64 {
        1.0
    }
}

/// Inversion generators without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OneLiner {
    Cauchy,
    T2,
}

impl Sampler for OneLiner {
    fn name(&self) -> &'static str {
        match self {
            OneLiner::Cauchy => "cauchy",
            OneLiner::T2 => "t2",
        }
    }

    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw> {
        let value = match self {
            OneLiner::Cauchy => sample_cauchy(rng),
            OneLiner::T2 => sample_t2(rng),
        };
        Ok(Draw {
            value,
            iterations: 1,
        })
    }

    fn iteration_bound(&self) -> f64 {
        1.0
    }
}
