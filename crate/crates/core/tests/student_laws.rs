// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


mod common;

use common::{draws, ks_p, pearson4_oracle, ALPHA};
use pearson_meixner::oracle::{cauchy_cdf, ks_two_sample, t2_cdf};
use pearson_meixner::pearson4::ScaledStudent;
use pearson_meixner::student::{OneLiner, StudentT};

#[test]
fn polar_with_one_df_is_cauchy() {
    let t1 = draws(&StudentT::new(1.0).unwrap(), 1, 100_000);
    let c = draws(&OneLiner::Cauchy, 2, 100_000);
    assert!(ks_two_sample(&t1.values, &c.values).unwrap().p_value > ALPHA);
    assert!(ks_p(&OneLiner::Cauchy, 3, 100_000, cauchy_cdf) > ALPHA);
}

#[test]
fn cauchy_median() {
    let c = draws(&OneLiner::Cauchy, 4, 100_000);
    let below = c.values.iter().filter(|&&x| x < 0.0).count() as f64 / 1e5;
    assert!((below - 0.5).abs() < 0.006);
}

#[test]
fn t2_against_closed_form() {
    assert!(ks_p(&OneLiner::T2, 5, 100_000, t2_cdf) > ALPHA);
}

#[test]
fn t5_variance() {
    let b = draws(&StudentT::new(5.0).unwrap(), 6, 1_000_000);
    let (_, var) = pearson_meixner::oracle::mean_var(&b.values);
    // Var of the sample variance needs the 4th moment; t5 has kurtosis 9.
    let se = (5.0f64 / 3.0) * ((9.0 - 1.0) / 1e6f64).sqrt();
    assert!((var - 5.0 / 3.0).abs() < 4.0 * se, "var {var}");
}

#[test]
fn scaled_student_is_symmetric_pearson() {
    for (i, a) in [1.0, 1.5, 3.0].into_iter().enumerate() {
        let o = pearson4_oracle(a, 0.0);
        let p = ks_p(&ScaledStudent::new(a).unwrap(), 10 + i as u64, 100_000, |x| o.cdf(x));
        assert!(p > ALPHA, "a={a} p={p}");
    }
}

#[test]
fn medians_are_zero() {
    let samplers: [&dyn pearson_meixner::Sampler; 3] =
        [&StudentT::new(0.7).unwrap(), &OneLiner::Cauchy, &OneLiner::T2];
    for (i, g) in samplers.into_iter().enumerate() {
        let b = draws(g, 20 + i as u64, 100_000);
        let below = b.values.iter().filter(|&&x| x < 0.0).count() as f64 / 1e5;
        assert!((below - 0.5).abs() < 4.0 * (0.25f64 / 1e5).sqrt(), "{}", g.name());
    }
}
