// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

#![no_main]

use libfuzzer_sys::fuzz_target;
use pearson_meixner::pearson4::{Pearson4Method, Pearson4Params, Pearson4Sampler};
use pearson_meixner::{RandomStream, Sampler};

fn word(data: &[u8], i: usize) -> Option<f64> {
    let b = data.get(8 * i..8 * i + 8)?;
    Some(f64::from_le_bytes(b.try_into().ok()?))
}

// a, s, x as little-endian f64, then an optional method byte.
fuzz_target!(|data: &[u8]| {
    let (Some(a), Some(s), Some(x)) = (word(data, 0), word(data, 1), word(data, 2)) else {
        return;
    };
    let Ok(p) = Pearson4Params::new(a, s) else {
        return;
    };
    assert!(!p.log_density(x).is_nan());
    let method = data
        .get(24)
        .map_or(Pearson4Method::Auto, |m| Pearson4Method::ALL[*m as usize % Pearson4Method::ALL.len()]);
    // Rejection loops at extreme shapes can be slow; only draw where costs stay bounded.
    if a > 1e6 || s.abs() > 1e6 {
        return;
    }
    if let Ok(g) = Pearson4Sampler::new(&p, method) {
        let mut rng = RandomStream::new(a.to_bits() ^ s.to_bits());
        if let Ok(d) = g.draw(&mut rng) {
            assert!(!d.value.is_nan());
        }
    }
});
