// Copyright 2026 The pearson-meixner Developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// https://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or https://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.


//! Parameter grid files for the `bench` command.
//!
//! One parameter tuple per line as `key=value` pairs separated by
//! whitespace or commas; `#` starts a comment. Keys: `a`, `b`, `s`, `rho`,
//! `lambda`.
//!
//! ```text
//! # a   s
//! a=2   s=0
//! a=0.7, s=3
//! ```

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct GridPoint {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
}

impl GridPoint {
    fn slot(&mut self, key: &str) -> Option<&mut Option<f64>> {
        match key {
            "a" => Some(&mut self.a),
            "b" => Some(&mut self.b),
            "s" => Some(&mut self.s),
            "rho" => Some(&mut self.rho),
            "lambda" => Some(&mut self.lambda),
            _ => None,
        }
    }
}

fn parse_line(line: usize, text: &str) -> Result<GridPoint> {
    let err = |msg: String| Error::Parse { line, msg };
    let mut point = GridPoint::default();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
        if tok.is_empty() {
            continue;
        }
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| err(format!("expected key=value, got {tok:?}")))?;
        let v: f64 = value
            .parse()
            .map_err(|_| err(format!("bad number {value:?} for {key}")))?;
        if !v.is_finite() {
            return Err(err(format!("{key} must be finite, got {value}")));
        }
        let slot = point
            .slot(key)
            .ok_or_else(|| err(format!("unknown key {key:?}")))?;
        if slot.replace(v).is_some() {
            return Err(err(format!("duplicate key {key:?}")));
        }
    }
    Ok(point)
}

/// Parse a grid file. Blank and comment-only lines are skipped; line
/// numbers in errors are 1-based.
pub fn parse_grid(text: &str) -> Result<Vec<GridPoint>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        out.push(parse_line(i + 1, body)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_separators_and_comments() {
        let g = parse_grid("# header\na=2 s=0\n\n a=0.7, s=-3 # tail\nrho=1,lambda=0.5\n").unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!((g[0].a, g[0].s), (Some(2.0), Some(0.0)));
        assert_eq!((g[1].a, g[1].s, g[1].b), (Some(0.7), Some(-3.0), None));
        assert_eq!((g[2].rho, g[2].lambda), (Some(1.0), Some(0.5)));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line_of = |t: &str| match parse_grid(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line_of("a=1\nq=2"), 2);
        assert_eq!(line_of("a=1 a=2"), 1);
        assert_eq!(line_of("\n\na=x"), 3);
        assert_eq!(line_of("a=inf"), 1);
        assert_eq!(line_of("a=NaN"), 1);
        assert_eq!(line_of("a"), 1);
    }

    #[test]
    fn empty_input() {
        assert!(parse_grid("").unwrap().is_empty());
        assert!(parse_grid("# only\n   \n").unwrap().is_empty());
    }
}
