//! JSON geometry configuration consumed by the command-line interface.
//!
//! A [`GeometryConfig`] describes an algebraic verification datum: the
//! dimension, a lower scalar-curvature bound, a sparse torsion 3-form, and —
//! for product geometries — a partition of the index range into blocks.  The
//! module also provides the fixed-precision numeric formatting used for all
//! deterministic CLI output.

use crate::error::{Error, Result};
use crate::forms::ExteriorForm;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// One monomial `coeff · e_i ∧ e_j ∧ e_k` of a torsion form (1-based,
/// strictly increasing indices).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TorsionTerm {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: f64,
}

/// Geometry description: dimension, scalar-curvature bound, torsion form,
/// and optional product-block structure.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeometryConfig {
    /// Dimension of the model.
    pub n: usize,
    /// Scalar curvature (or its minimum) of the underlying metric.
    pub scal_g: f64,
    /// Sparse coefficients of the torsion 3-form.
    pub torsion: Vec<TorsionTerm>,
    /// Product structure: 1-based inclusive index ranges, disjoint and
    /// covering 1..=n.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<(usize, usize)>>,
}

impl GeometryConfig {
    /// Parses and validates a configuration from JSON text.
    pub fn from_json(text: &str) -> Result<Self> {
        let config: GeometryConfig = serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("invalid geometry config: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    /// Reads, parses and validates a configuration file.
    pub fn from_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        let text = std::fs::read_to_string(&path)?;
        Self::from_json(&text)
    }

    /// Checks all structural invariants.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Config("dimension must be positive".into()));
        }
        if !self.scal_g.is_finite() {
            return Err(Error::Config("scal_g must be finite".into()));
        }
        for term in &self.torsion {
            if !(term.i < term.j && term.j < term.k) {
                return Err(Error::Config(format!(
                    "torsion indices must be strictly increasing, got ({}, {}, {})",
                    term.i, term.j, term.k
                )));
            }
            if term.i == 0 || term.k > self.n {
                return Err(Error::Config(format!(
                    "torsion indices must lie in 1..={}, got ({}, {}, {})",
                    self.n, term.i, term.j, term.k
                )));
            }
            if !term.coeff.is_finite() {
                return Err(Error::Config(format!(
                    "torsion coefficient for ({}, {}, {}) must be finite",
                    term.i, term.j, term.k
                )));
            }
        }
        if let Some(blocks) = &self.blocks {
            if blocks.is_empty() {
                return Err(Error::Config("blocks must be nonempty when present".into()));
            }
            let mut covered = vec![false; self.n];
            for &(a, b) in blocks {
                if a == 0 || b > self.n || a > b {
                    return Err(Error::Config(format!(
                        "block ({a}, {b}) is not a valid 1-based range inside 1..={}",
                        self.n
                    )));
                }
                for index in a..=b {
                    if covered[index - 1] {
                        return Err(Error::Config(format!(
                            "blocks overlap at index {index}"
                        )));
                    }
                    covered[index - 1] = true;
                }
            }
            if covered.iter().any(|c| !c) {
                return Err(Error::Config(format!(
                    "blocks must cover the full index range 1..={}",
                    self.n
                )));
            }
        }
        Ok(())
    }

    /// The torsion as an exterior 3-form in dimension `n`.
    pub fn to_form(&self) -> Result<ExteriorForm> {
        let terms: Vec<(Vec<usize>, f64)> = self
            .torsion
            .iter()
            .map(|t| (vec![t.i, t.j, t.k], t.coeff))
            .collect();
        ExteriorForm::from_terms(self.n, 3, &terms)
    }

    /// Splits the torsion along the declared blocks, reindexing each piece
    /// to its local dimension.  Errors when no blocks are declared or when a
    /// torsion term straddles two blocks.
    pub fn block_forms(&self) -> Result<Vec<(usize, ExteriorForm)>> {
        let blocks = self.blocks.as_ref().ok_or_else(|| {
            Error::Config("product analysis requires a blocks field".into())
        })?;
        let mut per_block: Vec<Vec<(Vec<usize>, f64)>> = vec![Vec::new(); blocks.len()];
        for term in &self.torsion {
            let home = blocks
                .iter()
                .position(|&(a, b)| term.i >= a && term.k <= b)
                .ok_or_else(|| {
                    Error::Config(format!(
                        "torsion term ({}, {}, {}) straddles block boundaries",
                        term.i, term.j, term.k
                    ))
                })?;
            let (a, _) = blocks[home];
            per_block[home].push((
                vec![term.i - a + 1, term.j - a + 1, term.k - a + 1],
                term.coeff,
            ));
        }
        blocks
            .iter()
            .zip(per_block)
            .map(|(&(a, b), terms)| {
                let dim = b - a + 1;
                Ok((dim, ExteriorForm::from_terms(dim, 3, &terms)?))
            })
            .collect()
    }
}

/// Formats a float with 12 significant digits in the style of C's `%.12g`.
/// Deterministic across runs and platforms; used for all CSV output.
pub fn format_g12(x: f64) -> String {
    format_sig(x, 12)
}

/// Formats a float with the given number of significant digits in the style
/// of C's `%.<sig>g`: fixed notation for decimal exponents in [−4, sig),
/// scientific notation otherwise, trailing zeros trimmed.
pub fn format_sig(x: f64, sig: u32) -> String {
    let sig = sig.max(1) as i32;
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", (sig - 1) as usize, x);
    let (mantissa, exp_part) = sci
        .split_once('e')
        .expect("scientific formatting always contains an exponent");
    let exp: i32 = exp_part.parse().expect("exponent is an integer");
    if (-4..sig).contains(&exp) {
        let decimals = (sig - 1 - exp).max(0) as usize;
        let fixed = format!("{:.*}", decimals, x);
        trim_decimal(&fixed)
    } else {
        let mant = trim_decimal(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mant}e{sign}{:02}", exp.abs())
    }
}

/// Removes trailing zeros (and a dangling decimal point) from a fixed-point
/// rendering.
fn trim_decimal(s: &str) -> String {
    if !s.contains('.') {
        return s.into();
    }
    let trimmed = s.trim_end_matches('0').trim_end_matches('.');
    trimmed.into()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sasaki_json() -> &'static str {
        r#"{
            "n": 5,
            "scal_g": 20.0,
            "torsion": [
                {"i": 1, "j": 2, "k": 5, "coeff": 2.0},
                {"i": 3, "j": 4, "k": 5, "coeff": 2.0}
            ]
        }"#
    }

    #[test]
    fn parses_and_round_trips() {
        let config = GeometryConfig::from_json(sasaki_json()).unwrap();
        assert_eq!(config.n, 5);
        let form = config.to_form().unwrap();
        assert!((form.norm_sq() - 8.0).abs() < 1e-14);

        let text = serde_json::to_string(&config).unwrap();
        let reparsed = GeometryConfig::from_json(&text).unwrap();
        assert_eq!(reparsed.torsion.len(), 2);
        assert!(reparsed.blocks.is_none());
    }

    #[test]
    fn rejects_bad_indices_and_reports_json_errors() {
        let bad = r#"{"n": 5, "scal_g": 1.0, "torsion": [{"i": 2, "j": 1, "k": 3, "coeff": 1.0}]}"#;
        let err = GeometryConfig::from_json(bad).unwrap_err();
        assert!(err.to_string().contains("strictly increasing"));

        let out_of_range =
            r#"{"n": 4, "scal_g": 1.0, "torsion": [{"i": 2, "j": 3, "k": 5, "coeff": 1.0}]}"#;
        assert!(GeometryConfig::from_json(out_of_range).is_err());

        let syntax = GeometryConfig::from_json("{ not json").unwrap_err();
        assert!(syntax.to_string().contains("line"));
    }

    #[test]
    fn validates_block_partitions() {
        let mut config = GeometryConfig::from_json(sasaki_json()).unwrap();
        config.n = 9;
        config.blocks = Some(vec![(1, 4), (5, 9)]);
        assert!(config.validate().is_ok());

        config.blocks = Some(vec![(1, 5), (5, 9)]);
        assert!(config.validate().unwrap_err().to_string().contains("overlap"));

        config.blocks = Some(vec![(1, 4), (6, 9)]);
        assert!(config.validate().unwrap_err().to_string().contains("cover"));
    }

    #[test]
    fn splits_torsion_by_blocks_with_local_indices() {
        let json = r#"{
            "n": 9,
            "scal_g": 10.0,
            "torsion": [
                {"i": 1, "j": 2, "k": 3, "coeff": 1.5},
                {"i": 5, "j": 6, "k": 7, "coeff": -2.0}
            ],
            "blocks": [[1, 4], [5, 9]]
        }"#;
        let config = GeometryConfig::from_json(json).unwrap();
        let blocks = config.block_forms().unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].0, 4);
        assert!((blocks[0].1.coeff(&[1, 2, 3]) - 1.5).abs() < 1e-14);
        assert_eq!(blocks[1].0, 5);
        assert!((blocks[1].1.coeff(&[1, 2, 3]) + 2.0).abs() < 1e-14);

        let straddling = r#"{
            "n": 9,
            "scal_g": 10.0,
            "torsion": [{"i": 3, "j": 4, "k": 5, "coeff": 1.0}],
            "blocks": [[1, 4], [5, 9]]
        }"#;
        let config = GeometryConfig::from_json(straddling).unwrap();
        assert!(config
            .block_forms()
            .unwrap_err()
            .to_string()
            .contains("straddles"));
    }

    #[test]
    fn formats_twelve_significant_digits() {
        assert_eq!(format_g12(0.0), "0");
        assert_eq!(format_g12(-0.0), "0");
        assert_eq!(format_g12(1.25), "1.25");
        assert_eq!(format_g12(-2.5), "-2.5");
        assert_eq!(format_g12(10.0 / 9.0), "1.11111111111");
        assert_eq!(format_g12(0.0001), "0.0001");
        assert_eq!(format_g12(1e-5), "1e-05");
        assert_eq!(format_g12(1e12), "1e+12");
        assert_eq!(format_g12(123456789012.0), "123456789012");
        assert_eq!(format_g12(5.0 / 4.0), "1.25");
        assert_eq!(format_g12(2.0f64.sqrt()), "1.41421356237");
        assert_eq!(format_sig(123.456789, 6), "123.457");
        assert_eq!(format_sig(0.000123456789, 6), "0.000123457");
        assert_eq!(format_sig(1234567.0, 6), "1.23457e+06");
    }
}
