// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


#![allow(dead_code)]

use pearson_meixner::oracle::{ks_test, run_sampler, Batch, Pearson4Oracle};
use pearson_meixner::Sampler;

pub const ALPHA: f64 = 1e-3;

pub fn draws(sampler: &dyn Sampler, seed: u64, n: usize) -> Batch {
    run_sampler(sampler, seed, n).expect("sampler failed")
}

/// KS p-value of `n` draws against `cdf`.
pub fn ks_p(sampler: &dyn Sampler, seed: u64, n: usize, cdf: impl Fn(f64) -> f64) -> f64 {
    let b = draws(sampler, seed, n);
    ks_test(&b.values, cdf).unwrap().p_value
}

pub fn pearson4_oracle(a: f64, s: f64) -> Pearson4Oracle {
    Pearson4Oracle::new(a, s, 256).expect("oracle")
}

/// Four standard errors of a mean of `n` geometric counts with mean `e`.
pub fn iteration_slack(e: f64, n: usize) -> f64 {
    4.0 * (e * (e - 1.0).max(0.0) / n as f64).sqrt()
}
