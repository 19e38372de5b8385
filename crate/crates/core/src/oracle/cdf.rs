// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


//! CDF tables built by quadrature from log densities alone.

use std::f64::consts::{FRAC_PI_2, PI};

use super::quadrature::{grid_max, integrate, truncation_bounds, Tolerance};
use crate::error::{Error, Result};

pub type BoxedLogDensity = Box<dyn Fn(f64) -> f64 + Send + Sync>;

/// Cumulative masses on an even cell grid over `[lo, hi]`; a CDF value
/// inside a cell adds one adaptive integral from the cell's left knot.
pub struct NumericCdf {
    log_f: BoxedLogDensity,
    lo: f64,
    hi: f64,
    cell: f64,
    cum: Vec<f64>,
    shift: f64,
    tol: Tolerance,
}

impl std::fmt::Debug for NumericCdf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NumericCdf")
            .field("lo", &self.lo)
            .field("hi", &self.hi)
            .field("cells", &(self.cum.len() - 1))
            .field("log_mass", &self.log_mass())
            .finish()
    }
}

impl NumericCdf {
    pub fn new(log_f: BoxedLogDensity, lo: f64, hi: f64, cells: usize) -> Result<Self> {
        if !(lo < hi) || cells == 0 {
            return Err(Error::Oracle(format!("bad CDF grid [{lo}, {hi}] x {cells}")));
        }
        let shift = grid_max(&log_f, lo, hi, 4 * cells);
        if !shift.is_finite() {
            return Err(Error::Oracle("log density has no finite value on the grid".into()));
        }
        let cell = (hi - lo) / cells as f64;
        let tol = Tolerance {
            abs: 1e-15 * cell,
            rel: 1e-11,
            max_panels: 4000,
        };
        let mut cum = Vec::with_capacity(cells + 1);
        cum.push(0.0);
        let mut acc = 0.0;
        for i in 0..cells {
            let a = lo + cell * i as f64;
            let b = if i + 1 == cells { hi } else { a + cell };
            acc += integrate(|x| (log_f(x) - shift).exp(), a, b, tol)?.value;
            cum.push(acc);
        }
        if !(acc > 0.0 && acc.is_finite()) {
            return Err(Error::Oracle(format!("total mass {acc} is not positive")));
        }
        Ok(NumericCdf {
            log_f,
            lo,
            hi,
            cell,
            cum,
            shift,
            tol,
        })
    }

    /// Table over the region where `log_f` is within 60 nats of its peak.
    pub fn on_line(log_f: BoxedLogDensity, center: f64, scale: f64, cells: usize) -> Result<Self> {
        let (lo, hi, _) = truncation_bounds(&log_f, center, scale, 60.0)?;
        Self::new(log_f, lo, hi, cells)
    }

    /// `ln ∫_lo^hi e^{log_f}`
    pub fn log_mass(&self) -> f64 {
        self.shift + self.cum[self.cum.len() - 1].ln()
    }

    pub fn support(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn cdf(&self, t: f64) -> f64 {
        if t.is_nan() {
            return f64::NAN;
        }
        if t <= self.lo {
            return 0.0;
        }
        if t >= self.hi {
            return 1.0;
        }
        let cells = self.cum.len() - 1;
        let k = (((t - self.lo) / self.cell) as usize).min(cells - 1);
        let a = self.lo + self.cell * k as f64;
        let part = if t > a {
            integrate(|x| ((self.log_f)(x) - self.shift).exp(), a, t, self.tol)
                .map(|e| e.value)
                .unwrap_or(0.5 * (self.cum[k + 1] - self.cum[k]))
        } else {
            0.0
        };
        ((self.cum[k] + part) / self.cum[cells]).clamp(0.0, 1.0)
    }
}

/// Quadrature model of a Pearson IV law, independent of the complex gamma
/// kernel. `a >= 1` works on the angle `atan x`; `a < 1` on the folded angle
/// `z = π/2 − |atan x|` mapped to `w = (2z/π)^{2a−1}`, which removes the
/// endpoint singularity.
#[derive(Debug)]
pub struct Pearson4Oracle {
    log_mass: f64,
    shape: Shape,
}

#[derive(Debug)]
enum Shape {
    Angular(NumericCdf),
    Folded {
        exponent: f64,
        right: NumericCdf,
        left: NumericCdf,
        p_right: f64,
    },
}

/// `ln(sin z / z)`
fn ln_sinc(z: f64) -> f64 {
    if z < 1e-4 {
        -z * z / 6.0
    } else {
        (z.sin() / z).ln()
    }
}

impl Pearson4Oracle {
    pub fn new(a: f64, s: f64, cells: usize) -> Result<Self> {
        if !(a > 0.5 && a.is_finite() && s.is_finite()) {
            return Err(Error::Oracle(format!("bad Pearson IV shape ({a}, {s})")));
        }
        if a >= 1.0 {
            let k = 2.0 * (a - 1.0);
            let lf: BoxedLogDensity = Box::new(move |y: f64| {
                if k == 0.0 {
                    s * y
                } else {
                    s * y + k * y.cos().ln()
                }
            });
            let t = NumericCdf::new(lf, -FRAC_PI_2, FRAC_PI_2, cells)?;
            return Ok(Pearson4Oracle {
                log_mass: t.log_mass(),
                shape: Shape::Angular(t),
            });
        }
        let q = 2.0 * a - 1.0;
        let inv_q = 1.0 / q;
        let ln_k = q * FRAC_PI_2.ln() - q.ln();
        let branch = |sign: f64| -> BoxedLogDensity {
            Box::new(move |w: f64| {
                let z = FRAC_PI_2 * w.powf(inv_q);
                sign * s * (FRAC_PI_2 - z) + (2.0 * a - 2.0) * ln_sinc(z)
            })
        };
        let right = NumericCdf::new(branch(1.0), 0.0, 1.0, cells)?;
        let left = NumericCdf::new(branch(-1.0), 0.0, 1.0, cells)?;
        let (lr, ll) = (right.log_mass(), left.log_mass());
        let hi = lr.max(ll);
        let ln_total = hi + ((lr - hi).exp() + (ll - hi).exp()).ln();
        Ok(Pearson4Oracle {
            log_mass: ln_k + ln_total,
            shape: Shape::Folded {
                exponent: q,
                right,
                left,
                p_right: (lr - ln_total).exp(),
            },
        })
    }

    /// `ln ∫ e^{s atan x} (1 + x²)^{−a} dx`, i.e. `−ln γ`.
    pub fn log_mass(&self) -> f64 {
        self.log_mass
    }

    pub fn cdf(&self, x: f64) -> f64 {
        match &self.shape {
            Shape::Angular(t) => t.cdf(x.atan()),
            Shape::Folded {
                exponent,
                right,
                left,
                p_right,
            } => {
                let z = 1f64.atan2(x.abs());
                let w = (z / FRAC_PI_2).powf(*exponent);
                if x >= 0.0 {
                    1.0 - p_right * right.cdf(w)
                } else {
                    (1.0 - p_right) * left.cdf(w)
                }
            }
        }
    }
}

/// CDF of the standard Cauchy law.
pub fn cauchy_cdf(x: f64) -> f64 {
    0.5 + x.atan() / PI
}

/// CDF of Student's t with two degrees of freedom.
pub fn t2_cdf(x: f64) -> f64 {
    0.5 * (1.0 + x / (2.0 + x * x).sqrt())
}
