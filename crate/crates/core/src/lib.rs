// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


//! Exact random variate generation for the Pearson IV, generalized
//! hyperbolic secant and betaized Meixner-Morris families, with the special
//! functions, quadrature and goodness-of-fit oracles needed to check them.
//!
//! ```
//! use pearson_meixner::pearson4::{Pearson4Method, Pearson4Params, Pearson4Sampler};
//! use pearson_meixner::{RandomStream, Sampler};
//!
//! let p = Pearson4Params::new(2.0, 3.0).unwrap();
//! let gen = Pearson4Sampler::new(&p, Pearson4Method::Auto).unwrap();
//! let mut rng = RandomStream::new(42);
//! let x = gen.sample(&mut rng).unwrap();
//! assert!(x.is_finite());
//! ```

pub mod betaized;
pub mod conjugate;
pub mod error;
pub mod ghs;
pub mod grid;
pub mod oracle;
pub mod pearson4;
pub mod rng;
pub mod sampler;
pub mod specfun;
pub mod student;
pub mod validate;

pub use error::{Error, Result};
pub use rng::{RandomStream, UniformSource};
pub use sampler::{Draw, Sampler, ITERATION_CAP};
