//! Convexity verdicts on sampled series.
//!
//! Four kinds of check, in two families:
//!
//! * non-strict inequalities (differential and discrete log-convexity):
//!   `Holds` means the worst margin is above `-tol`, so exact equality
//!   (scalar exponentials) still holds at tolerance;
//! * strict inequalities (strict decrease, slope monotonicity): `Holds`
//!   demands the worst margin strictly above `+tol.abs`, so a flat segment
//!   is a genuine violation.
//!
//! The margin is always preserved in the verdict so callers can apply
//! stricter signs than the checker itself.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::dynamics::{HeightSeries, TimeGrid};
use crate::error::Error;
use crate::props::DEFAULT_SEED;
use crate::tolerance::Tolerances;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConvexityKind {
    DifferentialLogconvex,
    DiscreteLogconvex,
    StrictDecrease,
    SlopeMonotone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    Holds,
    Violated,
}

/// Where the worst slack occurred.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationSite {
    Time(f64),
    Triple(f64, f64, f64),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConvexityVerdict {
    pub kind: ConvexityKind,
    pub status: VerdictStatus,
    /// Worst slack of the defining inequality (positive = satisfied).
    pub margin: f64,
    /// Site of the worst slack when the verdict is `Violated`.
    pub witness: Option<ViolationSite>,
}

impl ConvexityVerdict {
    pub fn holds(&self) -> bool {
        self.status == VerdictStatus::Holds
    }
}

/// Triple-selection budget for the discrete log-convexity check: all
/// consecutive triples always; full enumeration up to `exhaustive_cap` grid
/// points; above that, `random_triples` seeded general triples.
#[derive(Debug, Clone, Copy)]
pub struct TripleOptions {
    pub seed: u64,
    pub random_triples: usize,
    pub exhaustive_cap: usize,
}

impl Default for TripleOptions {
    fn default() -> Self {
        TripleOptions {
            seed: DEFAULT_SEED,
            random_triples: 10_000,
            exhaustive_cap: 60,
        }
    }
}

/// Worst slack of `h h'' - (h')^2 >= 0` over the grid, with a scale-aware
/// threshold: the verdict compares the margin against
/// `-(tol.abs + tol.rel * max(1, scale))` where `scale` is the largest
/// magnitude of either side.
pub fn differential_logconvexity_margin(
    grid: &TimeGrid,
    h: &[f64],
    h_prime: &[f64],
    h_second: &[f64],
    tol: &Tolerances,
) -> ConvexityVerdict {
    let mut margin = f64::INFINITY;
    let mut at = 0.0;
    let mut scale = 0.0f64;
    for (k, &t) in grid.points().iter().enumerate() {
        let lhs = h_prime[k] * h_prime[k];
        let rhs = h[k] * h_second[k];
        scale = scale.max(lhs + rhs.abs());
        let slack = rhs - lhs;
        if slack < margin {
            margin = slack;
            at = t;
        }
    }
    let thresh = tol.abs + tol.rel * scale.max(1.0);
    let status = if margin >= -thresh {
        VerdictStatus::Holds
    } else {
        VerdictStatus::Violated
    };
    ConvexityVerdict {
        kind: ConvexityKind::DifferentialLogconvex,
        status,
        margin,
        witness: (status == VerdictStatus::Violated).then_some(ViolationSite::Time(at)),
    }
}

/// Discrete log-convexity of positive samples, evaluated in the log domain:
/// for triples `r < s < t`,
/// `log h(s) <= ((t-s) log h(r) + (s-r) log h(t)) / (t-r)`.
///
/// Working with `log h` sidesteps fractional powers of near-zero heights;
/// the tolerance is absolute in the log domain, floored at `1e-9`.
pub fn discrete_logconvexity_margin(
    grid: &TimeGrid,
    values: &[f64],
    tol: &Tolerances,
    opts: &TripleOptions,
) -> Result<ConvexityVerdict> {
    if values.len() != grid.len() {
        return Err(Error::DimensionMismatch {
            expected: grid.len(),
            got: values.len(),
        });
    }
    if values.iter().any(|&v| v.is_nan() || v <= 0.0) {
        return Err(Error::domain(
            "discrete log-convexity needs strictly positive samples",
        ));
    }
    let ts = grid.points();
    let logs: Vec<f64> = values.iter().map(|&v| v.ln()).collect();
    let n = logs.len();

    let mut margin = f64::INFINITY;
    let mut worst = (0usize, 1usize, 2usize);
    let consider =
        |i: usize, j: usize, k: usize, margin: &mut f64, worst: &mut (usize, usize, usize)| {
            let (r, s, t) = (ts[i], ts[j], ts[k]);
            let bound = ((t - s) * logs[i] + (s - r) * logs[k]) / (t - r);
            let slack = bound - logs[j];
            if slack < *margin {
                *margin = slack;
                *worst = (i, j, k);
            }
        };

    for i in 0..n - 2 {
        consider(i, i + 1, i + 2, &mut margin, &mut worst);
    }
    if n <= opts.exhaustive_cap {
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    consider(i, j, k, &mut margin, &mut worst);
                }
            }
        }
    } else {
        let mut rng = ChaCha12Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.random_triples {
            let mut idx = [
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            ];
            idx.sort_unstable();
            if idx[0] == idx[1] || idx[1] == idx[2] {
                continue;
            }
            consider(idx[0], idx[1], idx[2], &mut margin, &mut worst);
        }
    }

    let thresh = tol.abs.max(1e-9);
    let status = if margin >= -thresh {
        VerdictStatus::Holds
    } else {
        VerdictStatus::Violated
    };
    Ok(ConvexityVerdict {
        kind: ConvexityKind::DiscreteLogconvex,
        status,
        margin,
        witness: (status == VerdictStatus::Violated).then_some(ViolationSite::Triple(
            ts[worst.0],
            ts[worst.1],
            ts[worst.2],
        )),
    })
}

/// Strict decrease: `h' < 0` at every grid point (when derivatives are
/// available) and `h` strictly decreasing across samples.
///
/// Slacks are normalized by the local height (`-h'/h` and
/// `(h_k - h_{k+1})/h_k`), so a steep trajectory sampled deep in its tail
/// still reads as strictly decreasing while a flat-to-rounding stretch
/// violates. The margin is the worst normalized slack.
pub fn strict_decrease(
    grid: &TimeGrid,
    h: &[f64],
    h_prime: Option<&[f64]>,
    tol: &Tolerances,
) -> ConvexityVerdict {
    let ts = grid.points();
    let mut margin = f64::INFINITY;
    let mut at = 0.0;
    if let Some(hp) = h_prime {
        for (k, &t) in ts.iter().enumerate() {
            let slack = -hp[k] / h[k];
            if slack < margin {
                margin = slack;
                at = t;
            }
        }
    }
    for k in 0..h.len() - 1 {
        let slack = (h[k] - h[k + 1]) / h[k];
        if slack < margin {
            margin = slack;
            at = ts[k + 1];
        }
    }
    let status = if margin > tol.abs {
        VerdictStatus::Holds
    } else {
        VerdictStatus::Violated
    };
    ConvexityVerdict {
        kind: ConvexityKind::StrictDecrease,
        status,
        margin,
        witness: (status == VerdictStatus::Violated).then_some(ViolationSite::Time(at)),
    }
}

/// Classical strict-convexity criterion through the slope function
/// `S(r, t) = (h(t) - h(r)) / (t - r)`: `S(r, s) < S(s, t)` on every
/// consecutive triple.
///
/// The slack `S2 - S1` is normalized by the local slope magnitude
/// `|S1| + |S2|` so tail triples of a decaying trajectory keep a visible
/// margin; exactly equal slopes (a flat or affine stretch) normalize to
/// zero and violate. The margin is the worst normalized slack.
pub fn slope_monotonicity(grid: &TimeGrid, h: &[f64], tol: &Tolerances) -> ConvexityVerdict {
    let ts = grid.points();
    let mut margin = f64::INFINITY;
    let mut worst = (0.0, 0.0, 0.0);
    for k in 0..h.len() - 2 {
        let s1 = (h[k + 1] - h[k]) / (ts[k + 1] - ts[k]);
        let s2 = (h[k + 2] - h[k + 1]) / (ts[k + 2] - ts[k + 1]);
        let scale = s1.abs() + s2.abs();
        let slack = if scale > 0.0 { (s2 - s1) / scale } else { 0.0 };
        if slack < margin {
            margin = slack;
            worst = (ts[k], ts[k + 1], ts[k + 2]);
        }
    }
    let status = if margin > tol.abs {
        VerdictStatus::Holds
    } else {
        VerdictStatus::Violated
    };
    ConvexityVerdict {
        kind: ConvexityKind::SlopeMonotone,
        status,
        margin,
        witness: (status == VerdictStatus::Violated)
            .then_some(ViolationSite::Triple(worst.0, worst.1, worst.2)),
    }
}

/// Differential log-convexity of a height series (analytic derivatives).
pub fn check_differential_logconvexity(
    series: &HeightSeries,
    tol: &Tolerances,
) -> ConvexityVerdict {
    differential_logconvexity_margin(
        &series.grid,
        &series.h,
        &series.h_prime,
        &series.h_second,
        tol,
    )
}

/// Discrete log-convexity of a height series with the default triple budget.
pub fn check_discrete_logconvexity(series: &HeightSeries, tol: &Tolerances) -> ConvexityVerdict {
    discrete_logconvexity_margin(&series.grid, &series.h, tol, &TripleOptions::default())
        .expect("height series is positive by construction")
}

/// Strict decrease and slope monotonicity of a height series.
pub fn check_monotonicity(
    series: &HeightSeries,
    tol: &Tolerances,
) -> (ConvexityVerdict, ConvexityVerdict) {
    (
        strict_decrease(&series.grid, &series.h, Some(&series.h_prime), tol),
        slope_monotonicity(&series.grid, &series.h, tol),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid_of(f: impl Fn(f64) -> f64, t_max: f64, n: usize) -> (TimeGrid, Vec<f64>) {
        let grid = TimeGrid::uniform(t_max, n).unwrap();
        let vals = grid.points().iter().map(|&t| f(t)).collect();
        (grid, vals)
    }

    #[test]
    fn exponential_samples_give_equality() {
        let (grid, vals) = grid_of(|t| (-t).exp(), 4.0, 200);
        let tol = Tolerances::default();
        let v =
            discrete_logconvexity_margin(&grid, &vals, &tol, &TripleOptions::default()).unwrap();
        assert!(v.holds());
        assert!(v.margin.abs() <= 1e-10, "margin {}", v.margin);
    }

    #[test]
    fn convex_but_not_logconvex_function_fails() {
        // e^t - 1 on [0.5, 2], time origin shifted to 0.
        let (grid, vals) = grid_of(|t| (t + 0.5).exp() - 1.0, 1.5, 120);
        let tol = Tolerances::default();
        let v =
            discrete_logconvexity_margin(&grid, &vals, &tol, &TripleOptions::default()).unwrap();
        assert!(!v.holds());
        assert!(v.margin < -1e-3);
        assert!(matches!(v.witness, Some(ViolationSite::Triple(_, _, _))));
    }

    #[test]
    fn flat_segment_passes_discrete_but_fails_slope_monotonicity() {
        // Decay frozen from t = 1 on.
        let (grid, vals) = grid_of(|t| (-t.min(1.0)).exp(), 4.0, 200);
        let tol = Tolerances::default();
        let disc =
            discrete_logconvexity_margin(&grid, &vals, &tol, &TripleOptions::default()).unwrap();
        assert!(disc.holds(), "discrete margin {}", disc.margin);
        let slope = slope_monotonicity(&grid, &vals, &tol);
        assert!(!slope.holds());
        assert!(slope.margin.abs() <= 1e-12);
        // Flat segment also breaks strict decrease.
        let dec = strict_decrease(&grid, &vals, None, &tol);
        assert!(!dec.holds());
    }

    #[test]
    fn quartic_is_slope_monotone() {
        let (grid, vals) = grid_of(|t| t.powi(4), 4.0, 400);
        let tol = Tolerances::default();
        assert!(slope_monotonicity(&grid, &vals, &tol).holds());
    }

    #[test]
    fn growing_function_fails_strict_decrease() {
        let (grid, vals) = grid_of(|t| t.exp(), 2.0, 50);
        let tol = Tolerances::default();
        let v = strict_decrease(&grid, &vals, None, &tol);
        assert!(!v.holds());
        assert!(matches!(v.witness, Some(ViolationSite::Time(_))));
    }

    #[test]
    fn random_triples_are_deterministic() {
        let (grid, vals) = grid_of(|t| (-t).exp() + 0.01 * (t * 3.0).sin().powi(2), 4.0, 120);
        let tol = Tolerances::default();
        let o = TripleOptions::default();
        let a = discrete_logconvexity_margin(&grid, &vals, &tol, &o).unwrap();
        let b = discrete_logconvexity_margin(&grid, &vals, &tol, &o).unwrap();
        assert_eq!(a.margin.to_bits(), b.margin.to_bits());
    }
}
