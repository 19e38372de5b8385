// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


//! Adaptive Gauss-Kronrod (7/15) quadrature with a global error queue.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the odd-indexed Kronrod nodes.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Integral estimate with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Tolerances and panel budget for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_panels: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs: 1e-13,
            rel: 1e-12,
            max_panels: 20_000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod(f: &mut impl FnMut(f64) -> f64, lo: f64, hi: f64) -> Panel {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let dx = h * XGK[i];
        let pair = f(c - dx) + f(c + dx);
        k += WGK[i] * pair;
        if i % 2 == 1 {
            g += WG[i / 2] * pair;
        }
    }
    let (k, g) = (k * h, g * h);
    Panel {
        lo,
        hi,
        value: k,
        error: (k - g).abs(),
    }
}

/// `∫_lo^hi f`, bisecting the panel with the largest error until the total
/// error meets `tol`.
pub fn integrate(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, tol: Tolerance) -> Result<Estimate> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::Oracle(format!("integration limits must be finite: [{lo}, {hi}]")));
    }
    if lo == hi {
        return Ok(Estimate { value: 0.0, error: 0.0 });
    }
    let first = kronrod(&mut f, lo, hi);
    let (mut value, mut error) = (first.value, first.error);
    let mut heap = BinaryHeap::from([first]);
    while !(error <= tol.abs.max(tol.rel * value.abs())) {
        if !value.is_finite() {
            return Err(Error::Oracle(format!("integrand is not finite on [{lo}, {hi}]")));
        }
        if heap.len() >= tol.max_panels {
            return Err(Error::Oracle(format!(
                "quadrature did not converge on [{lo}, {hi}]: value {value}, error {error}"
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            // Panel cannot be split further; accept its contribution.
            error -= worst.error;
            heap.push(Panel { error: 0.0, ..worst });
            continue;
        }
        let left = kronrod(&mut f, worst.lo, mid);
        let right = kronrod(&mut f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    let value = heap.iter().map(|p| p.value).sum();
    let error = heap.iter().map(|p| p.error).sum();
    Ok(Estimate { value, error })
}

/// `ln ∫_lo^hi e^{log_f}`, integrating `e^{log_f − shift}` so that large or
/// tiny masses do not overflow. `shift` should be near the maximum of
/// `log_f` on the interval.
pub fn log_integrate(
    log_f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    shift: f64,
    tol: Tolerance,
) -> Result<Estimate> {
    let est = integrate(|x| (log_f(x) - shift).exp(), lo, hi, tol)?;
    if est.value <= 0.0 {
        return Err(Error::Oracle(format!("mass on [{lo}, {hi}] is not positive")));
    }
    Ok(Estimate {
        value: shift + est.value.ln(),
        error: est.error / est.value,
    })
}

/// Largest of `log_f` on an even grid of `[lo, hi]` with `points` points.
pub fn grid_max(log_f: impl Fn(f64) -> f64, lo: f64, hi: f64, points: usize) -> f64 {
    (0..=points)
        .map(|i| log_f(lo + (hi - lo) * i as f64 / points as f64))
        .filter(|v| !v.is_nan())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Interval outside of which `log_f` stays `drop` nats below its peak.
///
/// The peak is searched on `center ± 20 scale`; the interval is widened by
/// doubling steps. Assumes unimodal-ish tails that decay monotonically.
pub fn truncation_bounds(
    log_f: &impl Fn(f64) -> f64,
    center: f64,
    scale: f64,
    drop: f64,
) -> Result<(f64, f64, f64)> {
    let peak = grid_max(log_f, center - 20.0 * scale, center + 20.0 * scale, 4000);
    if !peak.is_finite() {
        return Err(Error::Oracle(format!("no finite peak near {center}")));
    }
    let floor = peak - drop;
    let walk = |dir: f64| -> Result<f64> {
        let mut step = scale;
        for _ in 0..200 {
            let x = center + dir * step;
            if log_f(x) < floor && log_f(x + dir * scale) < floor {
                return Ok(x);
            }
            step *= 1.5;
        }
        Err(Error::Oracle(format!("tails around {center} do not decay")))
    };
    Ok((walk(-1.0)?, walk(1.0)?, peak))
}

/// `ln ∫_ℝ e^{log_f}` for a log density with at least exponential tails,
/// truncated where `log_f` is 60 nats below its peak.
pub fn log_integrate_line(log_f: impl Fn(f64) -> f64, center: f64, scale: f64) -> Result<Estimate> {
    let (lo, hi, peak) = truncation_bounds(&log_f, center, scale, 60.0)?;
    log_integrate(log_f, lo, hi, peak, Tolerance::default())
}

/// `∫_ℝ x^k e^{log_f}` for `k = 0, 1, 2`, truncated like
/// [`log_integrate_line`]. Returns `(mass, mean, variance)`.
pub fn line_moments(log_f: impl Fn(f64) -> f64, center: f64, scale: f64) -> Result<(f64, f64, f64)> {
    let (lo, hi, peak) = truncation_bounds(&log_f, center, scale, 60.0)?;
    let tol = Tolerance::default();
    let w = |x: f64| (log_f(x) - peak).exp();
    let m0 = integrate(w, lo, hi, tol)?.value;
    let m1 = integrate(|x| (x - center) * w(x), lo, hi, tol)?.value / m0;
    let m2 = integrate(|x| (x - center).powi(2) * w(x), lo, hi, tol)?.value / m0;
    Ok((m0 * peak.exp(), center + m1, m2 - m1 * m1))
}
