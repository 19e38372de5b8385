// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

#![no_main]

use libfuzzer_sys::fuzz_target;
use pearson_meixner::betaized::{BetaizedMethod, BetaizedParams, BetaizedSampler};
use pearson_meixner::{RandomStream, Sampler};

fn word(data: &[u8], i: usize) -> Option<f64> {
    let b = data.get(8 * i..8 * i + 8)?;
    Some(f64::from_le_bytes(b.try_into().ok()?))
}

// a, b, s, x as little-endian f64.
fuzz_target!(|data: &[u8]| {
    let (Some(a), Some(b), Some(s), Some(x)) =
        (word(data, 0), word(data, 1), word(data, 2), word(data, 3))
    else {
        return;
    };
    if let Ok(p) = BetaizedParams::density_only(a, b, s) {
        assert!(!p.log_density(x).is_nan());
    }
    let Ok(p) = BetaizedParams::new(a, b, s) else {
        return;
    };
    if a.max(b) > 1e6 || s.abs() > 1e6 {
        return;
    }
    let mut rng = RandomStream::new(a.to_bits() ^ b.to_bits().rotate_left(17) ^ s.to_bits());
    if let Ok(g) = BetaizedSampler::new(&p, BetaizedMethod::Lemma3) {
        if let Ok(v) = g.sample(&mut rng) {
            assert!(v.is_finite());
        }
    }
});
