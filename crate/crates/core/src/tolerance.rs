//! The tolerance record threaded through every module.

use serde::{Deserialize, Serialize};

/// Absolute/relative tolerance pair.
///
/// Defaults to `1e-12` absolute and `1e-10` relative; callers override per
/// call site. Verdict thresholds are formed as `abs + rel * scale` where
/// `scale` is the natural magnitude of the quantity under test (for example
/// `|A|` for first-order quantities and `|A|^2` for the criterion value).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            abs: 1e-12,
            rel: 1e-10,
        }
    }
}

impl Tolerances {
    pub fn new(abs: f64, rel: f64) -> Self {
        Tolerances { abs, rel }
    }

    /// Threshold for a quantity whose natural magnitude is `scale`.
    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale.abs()
    }
}
