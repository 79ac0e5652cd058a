//! Time grids.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Strictly increasing list of times starting at exactly `t = 0`, with at
/// least 3 points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    points: Vec<f64>,
}

impl TimeGrid {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::domain("time grid needs at least 3 points"));
        }
        if points[0] != 0.0 {
            return Err(Error::domain("time grid must start at t = 0"));
        }
        if !points.iter().all(|t| t.is_finite()) {
            return Err(Error::domain("time grid points must be finite"));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("time grid must be strictly increasing"));
        }
        Ok(TimeGrid { points })
    }

    /// Uniform grid on `[0, t_max]`.
    pub fn uniform(t_max: f64, n_points: usize) -> Result<Self> {
        if t_max <= 0.0 || t_max.is_nan() {
            return Err(Error::domain("t_max must be positive"));
        }
        let n = n_points.max(3);
        Self::new((0..n).map(|k| t_max * k as f64 / (n - 1) as f64).collect())
    }

    /// Hybrid grid on `[0, t_max]`: roughly half the points geometric from
    /// `1e-6 t_max` to `0.1 t_max` (probing the short-time limits), the rest
    /// linear up to `t_max`.
    pub fn hybrid(t_max: f64, n_points: usize) -> Result<Self> {
        if t_max <= 0.0 || t_max.is_nan() {
            return Err(Error::domain("t_max must be positive"));
        }
        let n = n_points.max(3);
        let n_geo = (n - 1) / 2;
        let n_lin = n - 1 - n_geo;
        let mut points = Vec::with_capacity(n);
        points.push(0.0);
        let g_start = 1e-6 * t_max;
        let g_end = 0.1 * t_max;
        if n_geo > 0 {
            let ratio = (g_end / g_start).powf(1.0 / (n_geo.max(2) - 1) as f64);
            let mut t = g_start;
            for _ in 0..n_geo {
                points.push(t);
                t *= ratio;
            }
        }
        let lin_start = if n_geo > 0 { g_end } else { 0.0 };
        for j in 1..=n_lin {
            points.push(lin_start + (t_max - lin_start) * j as f64 / n_lin as f64);
        }
        // The geometric tail lands slightly off g_end from rounding; rebuild
        // through the validating constructor to catch any ordering slip.
        Self::new(points)
    }

    /// Default grid for an operator with lower bound `m`: 200 points on
    /// `[0, 10 / max(m, 0.1)]`, clustered near zero.
    pub fn default_for(m_lower: f64) -> Self {
        let t_max = 10.0 / m_lower.max(0.1);
        Self::hybrid(t_max, 200).expect("default grid parameters are valid")
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn t_max(&self) -> f64 {
        *self.points.last().expect("grid is non-empty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_grids() {
        assert!(TimeGrid::new(vec![0.0, 1.0]).is_err());
        assert!(TimeGrid::new(vec![0.1, 0.2, 0.3]).is_err());
        assert!(TimeGrid::new(vec![0.0, 0.2, 0.2]).is_err());
        assert!(TimeGrid::new(vec![0.0, f64::NAN, 1.0]).is_err());
    }

    #[test]
    fn hybrid_has_requested_shape() {
        let g = TimeGrid::hybrid(10.0, 200).unwrap();
        assert_eq!(g.len(), 200);
        assert_eq!(g.points()[0], 0.0);
        assert!((g.t_max() - 10.0).abs() < 1e-12);
        // Clustered near zero: many points below 1e-2 * t_max.
        let small = g.points().iter().filter(|&&t| t > 0.0 && t <= 0.1).count();
        assert!(small >= 30, "only {small} early points");
    }

    #[test]
    fn default_grid_caps_slow_operators() {
        let g = TimeGrid::default_for(-1.0);
        assert!((g.t_max() - 100.0).abs() < 1e-9);
        let g = TimeGrid::default_for(2.0);
        assert!((g.t_max() - 5.0).abs() < 1e-12);
    }
}
