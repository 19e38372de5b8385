// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


//! Verification machinery that never touches the samplers' internals:
//! quadrature, CDF tables from log densities, goodness-of-fit tests and
//! iteration counting.

pub mod cdf;
pub mod gof;
pub mod quadrature;
pub mod report;

pub use cdf::{cauchy_cdf, t2_cdf, BoxedLogDensity, NumericCdf, Pearson4Oracle};
pub use gof::{chi_square_gof, kolmogorov_sf, ks_test, ks_two_sample, ChiSquareResult, KsResult};
pub use quadrature::{integrate, line_moments, log_integrate, log_integrate_line, Estimate, Tolerance};
pub use report::{mean_var, measure_iterations, run_sampler, Batch, SampleReport};
