// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! Log-gamma evaluation on the real line and on the half plane `Re z >= 1/2`,
//! together with the explicit bounds on the Pearson IV normalization constant.
//!
//! Everything is carried in the log domain. `|Γ(a - is/2)|²` decays like
//! `exp(-π|s|/2)` and underflows long before the generators stop being useful.
//!
//! # Precision
//!
//! `Γ` is evaluated with the Lanczos approximation (g = 7, n = 9; the
//! coefficient set published by Godfrey and used by the GNU Scientific
//! Library). On `Re z >= 1/2` its relative error in `|Γ|` is below `2e-15`.
//! The returned logarithm therefore carries an absolute error of a few units
//! of `1e-15`, plus the rounding of the leading term `(z - 1/2) ln z - z`,
//! which grows like `ε |z| ln |z|` for large arguments. Arguments with real
//! part below `1/2` are shifted upward with `|Γ(z)| = |Γ(z + 1)| / |z|`.

use std::f64::consts::PI;

use crate::error::{domain, ensure_finite, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln √(2π)`
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// `e² / (2π) − 1` rounded up, the constant of Batir's upper bound.
pub const BATIR_UPPER: f64 = 0.177;

/// Boyd's remainder constant: `|R(z)| <= BOYD_REMAINDER / |z|`, i.e. `3/(2π²)`.
pub const BOYD_REMAINDER: f64 = 3.0 / (2.0 * PI * PI);

/// Lanczos kernel: `ln |Γ(x + iy)|` for `x >= 1/2`.
fn lanczos_ln_abs(x: f64, y: f64) -> f64 {
    let xm = x - 1.0;
    // A(z) = c0 + Σ c_k / (z - 1 + k), summed in complex arithmetic.
    let mut re = LANCZOS_COEF[0];
    let mut im = 0.0;
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        let dr = xm + k as f64;
        let den = dr * dr + y * y;
        re += c * dr / den;
        im -= c * y / den;
    }
    let tr = xm + LANCZOS_G + 0.5;
    let ln_abs_t = tr.hypot(y).ln();
    let arg_t = y.atan2(tr);
    // Re[(z - 1/2) ln t - t] with z - 1/2 = (xm + 1/2) + iy.
    let main = (xm + 0.5) * ln_abs_t - y * arg_t - tr;
    LN_SQRT_2PI + main + re.hypot(im).ln()
}

/// `ln Γ(x)` for real `x > 0`.
pub fn log_gamma_real(x: f64) -> Result<f64> {
    if !(x.is_finite() && x > 0.0) {
        return Err(domain(
            "log_gamma_real",
            format!("argument must be finite and positive, got {x}"),
        ));
    }
    Ok(ln_gamma(x))
}

/// Unchecked `ln Γ(x)` for `x > 0`.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        lanczos_ln_abs(x + 1.0, 0.0) - x.ln()
    } else {
        lanczos_ln_abs(x, 0.0)
    }
}

/// `ln |Γ(x + iy)|` for `x >= 1/2`.
pub fn log_abs_gamma_complex(x: f64, y: f64) -> Result<f64> {
    ensure_finite("log_abs_gamma_complex", "x", x)?;
    ensure_finite("log_abs_gamma_complex", "y", y)?;
    if x < 0.5 {
        return Err(domain(
            "log_abs_gamma_complex",
            format!("real part must be at least 1/2, got {x}"),
        ));
    }
    Ok(lanczos_ln_abs(x, y))
}

/// `ln |Γ(x + iy)|` for any `x > 0`, shifting into the Lanczos region with
/// the upward recurrence.
pub(crate) fn ln_abs_gamma_shifted(x: f64, y: f64) -> f64 {
    let mut x = x;
    let mut acc = 0.0;
    while x < 0.5 {
        acc -= x.hypot(y).ln();
        x += 1.0;
    }
    acc + lanczos_ln_abs(x, y)
}

/// Boyd's two-sided bound for `|Γ(x + iy)|²` around Stirling's leading term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoydBounds {
    /// `(1 − 3/(2π² r))²`
    pub theta_lo: f64,
    /// `(1 + 3/(2π² r))²`
    pub theta_hi: f64,
    /// `ln |√(2π/z) (z/e)^z|`
    pub log_stirling_mag: f64,
}

impl BoydBounds {
    /// Lower end of the bracket for `2 ln |Γ(x + iy)|`.
    pub fn log_sq_lo(&self) -> f64 {
        self.theta_lo.ln() + 2.0 * self.log_stirling_mag
    }

    /// Upper end of the bracket for `2 ln |Γ(x + iy)|`.
    pub fn log_sq_hi(&self) -> f64 {
        self.theta_hi.ln() + 2.0 * self.log_stirling_mag
    }
}

/// Stirling magnitude and remainder factors, valid for `x > 0` and
/// `|z| > 3/(2π²)`.
pub fn boyd_factor_bounds(x: f64, y: f64) -> Result<BoydBounds> {
    ensure_finite("boyd_factor_bounds", "x", x)?;
    ensure_finite("boyd_factor_bounds", "y", y)?;
    if x <= 0.0 {
        return Err(domain("boyd_factor_bounds", format!("x must be positive, got {x}")));
    }
    let r = x.hypot(y);
    if r <= BOYD_REMAINDER {
        return Err(domain(
            "boyd_factor_bounds",
            format!("|z| = {r} is too small for a positive lower factor"),
        ));
    }
    let c = BOYD_REMAINDER / r;
    let log_stirling_mag = 0.5 * (2.0 * PI / r).ln() + x * (r.ln() - 1.0) - y * (y / x).atan();
    Ok(BoydBounds {
        theta_lo: (1.0 - c) * (1.0 - c),
        theta_hi: (1.0 + c) * (1.0 + c),
        log_stirling_mag,
    })
}

/// Batir's bracket `√(2π(x+1/6)) (x/e)^x <= Γ(1+x) <= √(2π(x+0.177)) (x/e)^x`,
/// returned as logarithms. Valid for `x >= 1`.
pub fn batir_log_bounds(x: f64) -> Result<(f64, f64)> {
    if !(x.is_finite() && x >= 1.0) {
        return Err(domain("batir_log_bounds", format!("requires x >= 1, got {x}")));
    }
    let common = x * (x.ln() - 1.0);
    let lo = 0.5 * (2.0 * PI * (x + 1.0 / 6.0)).ln() + common;
    let hi = 0.5 * (2.0 * PI * (x + BATIR_UPPER)).ln() + common;
    Ok((lo, hi))
}

fn check_pearson_shape(what: &'static str, a: f64, s: f64) -> Result<()> {
    ensure_finite(what, "a", a)?;
    ensure_finite(what, "s", s)?;
    if a <= 0.5 {
        return Err(domain(what, format!("shape a must exceed 1/2, got {a}")));
    }
    Ok(())
}

/// `ln γ` for the Pearson IV density `γ e^{s atan x} / (1+x²)^a`, with
/// `γ = |Γ(a − is/2)|² / (Γ(a) Γ(a − 1/2) Γ(1/2))`.
pub fn pearson4_log_norm(a: f64, s: f64) -> Result<f64> {
    check_pearson_shape("pearson4_log_norm", a, s)?;
    Ok(2.0 * lanczos_ln_abs(a, 0.5 * s) - ln_gamma(a) - ln_gamma(a - 0.5) - 0.5 * PI.ln())
}

/// The same constant through the duplication formula,
/// `γ = 4^{a−1} |Γ(a − is/2)|² / (π Γ(2a − 1))`.
pub fn pearson4_log_norm_duplication(a: f64, s: f64) -> Result<f64> {
    check_pearson_shape("pearson4_log_norm_duplication", a, s)?;
    Ok((a - 1.0) * 4f64.ln() + 2.0 * lanczos_ln_abs(a, 0.5 * s) - PI.ln() - ln_gamma(2.0 * a - 1.0))
}

/// Explicit bracket `γ⁻ <= γ <= γ⁺` of the Pearson IV normalization constant
/// and the central approximation `γ*`.
///
/// The linear fields underflow to zero for large skew; the `log_` fields are
/// authoritative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormBounds {
    pub gamma_star: f64,
    pub gamma_lo: f64,
    pub gamma_hi: f64,
    pub log_gamma_star: f64,
    pub log_gamma_lo: f64,
    pub log_gamma_hi: f64,
}

impl NormBounds {
    fn from_logs(log_gamma_star: f64, log_gamma_lo: f64, log_gamma_hi: f64) -> Self {
        NormBounds {
            gamma_star: log_gamma_star.exp(),
            gamma_lo: log_gamma_lo.exp(),
            gamma_hi: log_gamma_hi.exp(),
            log_gamma_star,
            log_gamma_lo,
            log_gamma_hi,
        }
    }

    /// `γ⁺ / γ⁻`
    pub fn ratio(&self) -> f64 {
        (self.log_gamma_hi - self.log_gamma_lo).exp()
    }
}

/// Bracket of the Pearson IV constant built from Batir's real bounds and
/// Boyd's complex remainder. Requires `a >= 1`, `s >= 0`.
pub fn pearson4_norm_bounds(a: f64, s: f64) -> Result<NormBounds> {
    ensure_finite("pearson4_norm_bounds", "a", a)?;
    ensure_finite("pearson4_norm_bounds", "s", s)?;
    if a < 1.0 {
        return Err(domain(
            "pearson4_norm_bounds",
            format!("the Batir bound needs a >= 1, got {a}"),
        ));
    }
    if s < 0.0 {
        return Err(domain(
            "pearson4_norm_bounds",
            format!("skew must be non-negative (mirror first), got {s}"),
        ));
    }
    let half_ratio = s / (2.0 * a);
    let log_star = (a - 0.5).ln() + (a - 0.5) * (half_ratio * half_ratio).ln_1p()
        - s * half_ratio.atan()
        - 0.5 * (PI.ln() - 1.0)
        - a * (0.5 / a).ln_1p()
        - 0.5 * a.ln();
    let c = BOYD_REMAINDER / a.hypot(0.5 * s);
    let log_hi = log_star + 2.0 * c.ln_1p()
        - 0.5 * (1.0 / (6.0 * a)).ln_1p()
        - 0.5 * (1.0 / (6.0 * (a + 0.5))).ln_1p();
    let log_lo = log_star + 2.0 * (-c).ln_1p()
        - 0.5 * (BATIR_UPPER / a).ln_1p()
        - 0.5 * (BATIR_UPPER / (a + 0.5)).ln_1p();
    Ok(NormBounds::from_logs(log_star, log_lo, log_hi))
}
