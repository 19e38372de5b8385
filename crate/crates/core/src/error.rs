// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

use thiserror::Error;

/// Errors returned by the evaluators, samplers and the verification harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the supported parameter range.
    #[error("{what}: {detail}")]
    Domain { what: &'static str, detail: String },

    /// A rejection loop ran past [`crate::ITERATION_CAP`] proposals.
    ///
    /// Every generator in this crate has a small expected iteration count, so
    /// reaching the cap points at a defect rather than an unlucky stream.
    #[error("{method}: no proposal accepted after {cap} iterations (this is a bug)")]
    IterationCap { method: &'static str, cap: u64 },

    /// The numerical oracle failed (non-convergent quadrature, too few samples).
    /// This is a failure of the test infrastructure, not of a generator.
    #[error("oracle: {0}")]
    Oracle(String),

    /// Malformed grid file or other textual input.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        what,
        detail: detail.into(),
    }
}

pub(crate) fn ensure_finite(what: &'static str, name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(domain(what, format!("{name} must be finite, got {v}")))
    }
}
