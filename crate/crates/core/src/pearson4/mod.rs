// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! Pearson IV distribution: density `γ e^{s atan x} / (1 + x²)^a`, `a > 1/2`.
//!
//! Generators (all exact up to floating point):
//!
//! | generator                | range                    | expected proposals      |
//! |--------------------------|--------------------------|-------------------------|
//! | [`ScaledStudent`]        | `s = 0`                  | 1                       |
//! | [`SkewedCauchy`]         | `a = 1`                  | 1                       |
//! | [`LogConcave`]           | `a > 1`                  | 4                       |
//! | [`GammaFree`]            | `a > 1`                  | `4 γ⁺ γ / (γ⁻)²`        |
//! | [`StudentRejection`]     | any, small `|s|`         | `≤ e^{π|s|}`            |
//! | [`Symmetrized`]          | `1/2 < a <= 1, |s| >= 1` | `<= π² / (2π − 4)`      |
//!
//! Every generator works with `|s|` and negates its output when `s < 0`.

mod logconcave;
mod reject_student;
mod symmetrized;

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

pub use logconcave::{GammaFree, LogConcave, LogConcaveEnvelope};
pub use reject_student::StudentRejection;
pub use symmetrized::Symmetrized;

use crate::error::{domain, ensure_finite, Error, Result};
use crate::rng::UniformSource;
use crate::sampler::{Draw, Sampler};
use crate::specfun;
use crate::student::student_t_unchecked;

/// Shape pair `(a, s)` with the cached log normalization constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pearson4Params {
    a: f64,
    s: f64,
    log_norm: f64,
}

/// Location of the maximum of the angular density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AngularMode {
    Interior(f64),
    /// `a = 1` with `s != 0`: the density is monotone and the supremum sits
    /// at the end of the interval.
    Boundary(f64),
}

impl AngularMode {
    pub fn value(&self) -> f64 {
        match *self {
            AngularMode::Interior(y) | AngularMode::Boundary(y) => y,
        }
    }
}

impl Pearson4Params {
    pub fn new(a: f64, s: f64) -> Result<Self> {
        ensure_finite("Pearson4Params", "a", a)?;
        ensure_finite("Pearson4Params", "s", s)?;
        if a <= 0.5 {
            return Err(domain(
                "Pearson4Params",
                format!("shape a must exceed 1/2, got {a}"),
            ));
        }
        Ok(Pearson4Params {
            a,
            s,
            log_norm: specfun::pearson4_log_norm(a, s)?,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// `ln γ`
    pub fn log_norm(&self) -> f64 {
        self.log_norm
    }

    /// Parameters of `−X`.
    pub fn mirrored(&self) -> Self {
        Pearson4Params { s: -self.s, ..*self }
    }

    pub(crate) fn abs_skew(&self) -> (Self, f64) {
        if self.s < 0.0 {
            (self.mirrored(), -1.0)
        } else {
            (*self, 1.0)
        }
    }

    pub fn log_density(&self, x: f64) -> f64 {
        self.log_norm + self.s * x.atan() - 2.0 * self.a * x.hypot(1.0).ln()
    }

    pub fn density(&self, x: f64) -> f64 {
        self.log_density(x).exp()
    }

    /// Log density of `atan X`: `ln γ + s y + 2(a−1) ln cos y` on
    /// `(−π/2, π/2)`, `−∞` elsewhere.
    pub fn angular_log_density(&self, y: f64) -> f64 {
        if y.abs() >= FRAC_PI_2 || y.is_nan() {
            return f64::NEG_INFINITY;
        }
        self.log_norm + self.s * y + 2.0 * (self.a - 1.0) * y.cos().ln()
    }

    /// Mode of the angular density, `atan(s / (2(a−1)))`. Needs `a >= 1`.
    pub fn angular_mode(&self) -> Result<AngularMode> {
        if self.a < 1.0 {
            return Err(domain(
                "angular_mode",
                format!("angular density is log-concave only for a >= 1, got {}", self.a),
            ));
        }
        if self.a == 1.0 {
            return Ok(if self.s == 0.0 {
                AngularMode::Interior(0.0)
            } else {
                AngularMode::Boundary(FRAC_PI_2.copysign(self.s))
            });
        }
        Ok(AngularMode::Interior(
            (self.s / (2.0 * (self.a - 1.0))).atan(),
        ))
    }

    /// Mean `s / (2(a−1))`, finite for `a > 1`.
    pub fn mean(&self) -> Result<f64> {
        if self.a <= 1.0 {
            return Err(domain("Pearson4Params::mean", "mean is infinite for a <= 1"));
        }
        Ok(self.s / (2.0 * (self.a - 1.0)))
    }

    /// Variance `(1 + mean²) / (2a − 3)`, finite for `a > 3/2`.
    pub fn variance(&self) -> Result<f64> {
        if self.a <= 1.5 {
            return Err(domain(
                "Pearson4Params::variance",
                "variance is infinite for a <= 3/2",
            ));
        }
        let m = self.mean()?;
        Ok((1.0 + m * m) / (2.0 * self.a - 3.0))
    }
}

/// `T_{2a−1} / √(2a−1)`, the `s = 0` member.
#[derive(Debug, Clone, Copy)]
pub struct ScaledStudent {
    df: f64,
    scale: f64,
}

impl ScaledStudent {
    pub fn new(a: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.5) {
            return Err(domain("ScaledStudent", format!("shape a must exceed 1/2, got {a}")));
        }
        let df = 2.0 * a - 1.0;
        Ok(ScaledStudent {
            df,
            scale: 1.0 / df.sqrt(),
        })
    }
}

impl Sampler for ScaledStudent {
    fn name(&self) -> &'static str {
        "scaled-student"
    }

    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw> {
        Ok(Draw {
            value: student_t_unchecked(rng, self.df) * self.scale,
            iterations: 1,
        })
    }

    fn iteration_bound(&self) -> f64 {
        1.0
    }
}

/// The `a = 1` family, sampled by inverting the exponential angular density.
#[derive(Debug, Clone, Copy)]
pub struct SkewedCauchy {
    s: f64,
    sign: f64,
    /// `1 − e^{−π|s|}`
    span: f64,
}

impl SkewedCauchy {
    pub fn new(s: f64) -> Result<Self> {
        ensure_finite("SkewedCauchy", "s", s)?;
        let s_abs = s.abs();
        Ok(SkewedCauchy {
            s: s_abs,
            sign: if s < 0.0 { -1.0 } else { 1.0 },
            span: -(-std::f64::consts::PI * s_abs).exp_m1(),
        })
    }

    /// The variate for a given uniform.
    pub fn invert(&self, u: f64) -> f64 {
        if self.s == 0.0 {
            return (std::f64::consts::PI * (u - 0.5)).tan();
        }
        // W = π/2 + ln(U + (1−U) e^{−πs}) / s; return tan W = cot(π/2 − W).
        let gap = -(-(1.0 - u) * self.span).ln_1p() / self.s;
        self.sign / gap.tan()
    }
}

impl Sampler for SkewedCauchy {
    fn name(&self) -> &'static str {
        "skewed-cauchy"
    }

    fn draw(&self, rng: &mut dyn UniformSource) -> Result<Draw> {
        Ok(Draw {
            value: self.invert(rng.next_uniform()),
            iterations: 1,
        })
    }

    fn iteration_bound(&self) -> f64 {
        1.0
    }
}

/// Generator selection for [`Pearson4Sampler`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pearson4Method {
    #[default]
    Auto,
    LogConcave,
    GammaFree,
    StudentReject,
    Symmetrized,
}

impl Pearson4Method {
    pub const ALL: [Pearson4Method; 5] = [
        Pearson4Method::Auto,
        Pearson4Method::LogConcave,
        Pearson4Method::GammaFree,
        Pearson4Method::StudentReject,
        Pearson4Method::Symmetrized,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Pearson4Method::Auto => "auto",
            Pearson4Method::LogConcave => "logconcave",
            Pearson4Method::GammaFree => "gamma-free",
            Pearson4Method::StudentReject => "student-reject",
            Pearson4Method::Symmetrized => "symmetrized",
        }
    }
}

impl fmt::Display for Pearson4Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Pearson4Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pearson4Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| domain("Pearson4Method", format!("unknown method {s:?}")))
    }
}

/// Any of the Pearson IV generators behind one type.
#[derive(Debug, Clone)]
pub enum Pearson4Sampler {
    ScaledStudent(ScaledStudent),
    SkewedCauchy(SkewedCauchy),
    LogConcave(LogConcave),
    GammaFree(GammaFree),
    StudentReject(StudentRejection),
    Symmetrized(Symmetrized),
}

impl Pearson4Sampler {
    /// Build a generator. `Auto` routes by parameter region:
    ///
    /// * `s = 0`: scaled Student-t one-liner
    /// * `a = 1`: skewed Cauchy inversion
    /// * `a > 1`: [`GammaFree`]
    /// * `1/2 < a < 1`, `|s| < 1`: [`StudentRejection`]
    /// * `1/2 < a < 1`, `|s| >= 1`: [`Symmetrized`]
    pub fn new(p: &Pearson4Params, method: Pearson4Method) -> Result<Self> {
        Ok(match method {
            Pearson4Method::Auto => {
                if p.s() == 0.0 {
                    Pearson4Sampler::ScaledStudent(ScaledStudent::new(p.a())?)
                } else if p.a() == 1.0 {
                    Pearson4Sampler::SkewedCauchy(SkewedCauchy::new(p.s())?)
                } else if p.a() > 1.0 {
                    Pearson4Sampler::GammaFree(GammaFree::new(p)?)
                } else if p.s().abs() < 1.0 {
                    Pearson4Sampler::StudentReject(StudentRejection::new(p))
                } else {
                    Pearson4Sampler::Symmetrized(Symmetrized::new(p)?)
                }
            }
            Pearson4Method::LogConcave => Pearson4Sampler::LogConcave(LogConcave::new(p)?),
            Pearson4Method::GammaFree => Pearson4Sampler::GammaFree(GammaFree::new(p)?),
            Pearson4Method::StudentReject => {
                Pearson4Sampler::StudentReject(StudentRejection::new(p))
            }
            Pearson4Method::Symmetrized => Pearson4Sampler::Symmetrized(Symmetrized::new(p)?),
        })
    }

    fn inner(&self) -> &dyn Sampler {
        match self {
            Pearson4Sampler::ScaledStudent(g) => g,
            Pearson4Sampler::SkewedCauchy(g) => g,
            Pearson4Sampler::LogConcave(g) => g,
            Pearson4Sampler::GammaFree(g) => g,
            Pearson4Sampler::StudentReject(g) => g,
            Pearson4Sampler::Symmetrized(g) => g,
        }
    }
}

impl Sampler for Pearson4Sampler {
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

/// One Pearson IV variate through the automatic route.
pub fn sample(rng: &mut dyn UniformSource, p: &Pearson4Params) -> Result<f64> {
    Pearson4Sampler::new(p, Pearson4Method::Auto)?.sample(rng)
}

/// One variate by rejection from the scaled Student-t density.
pub fn sample_reject_student(rng: &mut dyn UniformSource, p: &Pearson4Params) -> Result<f64> {
    StudentRejection::new(p).sample(rng)
}

/// One `a = 1` variate by inversion.
pub fn sample_skewed_cauchy(rng: &mut dyn UniformSource, s: f64) -> Result<f64> {
    SkewedCauchy::new(s)?.sample(rng)
}

/// One variate by the universal log-concave method with the exact constant.
pub fn sample_logconcave(rng: &mut dyn UniformSource, p: &Pearson4Params) -> Result<f64> {
    LogConcave::new(p)?.sample(rng)
}

/// One variate by the log-concave method driven by the `γ⁻, γ⁺` bracket.
pub fn sample_logconcave_gamma_free(
    rng: &mut dyn UniformSource,
    p: &Pearson4Params,
) -> Result<f64> {
    GammaFree::new(p)?.sample(rng)
}

/// One variate by gamma rejection on the folded angle (`1/2 < a <= 1`).
pub fn sample_symmetrized(rng: &mut dyn UniformSource, p: &Pearson4Params) -> Result<f64> {
    Symmetrized::new(p)?.sample(rng)
}
