//! Scalar convexity fixtures: sampled real functions that discriminate the
//! series checkers.

use crate::dynamics::TimeGrid;

/// A named sampled function, with analytic derivatives where available.
#[derive(Debug, Clone)]
pub struct ScalarFixture {
    pub name: &'static str,
    pub grid: TimeGrid,
    pub values: Vec<f64>,
    pub d1: Option<Vec<f64>>,
    pub d2: Option<Vec<f64>>,
}

fn sample(
    name: &'static str,
    t_max: f64,
    n: usize,
    f: impl Fn(f64) -> f64,
) -> (ScalarFixture, Vec<f64>) {
    let grid = TimeGrid::uniform(t_max, n).expect("fixture grids are valid");
    let ts = grid.points().to_vec();
    let values = ts.iter().map(|&t| f(t)).collect();
    (
        ScalarFixture {
            name,
            grid,
            values,
            d1: None,
            d2: None,
        },
        ts,
    )
}

/// The four stock fixtures, each sampled with 400 uniform points:
///
/// * `exp_decay` — `e^{-t}` on `[0, 4]` with analytic derivatives; both
///   log-convexity checks hold with equality.
/// * `stretched` — `e^{-t}` with the decay frozen at level `e^{-1}` from
///   `t = 1` on (constant on `[1, 2)` and beyond): log-convex but not
///   strictly convex, so it passes the discrete check and fails slope
///   monotonicity.
/// * `exp_minus_one` — `e^t - 1` sampled on `[0.5, 2]` with the time origin
///   shifted to 0 (the function vanishes at `t = 0`); convex but not
///   log-convex.
/// * `quartic` — `t^4` on `[0, 4]`: strictly convex with vanishing second
///   derivative at 0, so slope monotonicity holds while `f'' > 0` does not.
pub fn scalar_fixtures() -> Vec<ScalarFixture> {
    let (mut exp_decay, ts) = sample("exp_decay", 4.0, 400, |t| (-t).exp());
    exp_decay.d1 = Some(ts.iter().map(|&t| -(-t).exp()).collect());
    exp_decay.d2 = Some(ts.iter().map(|&t| (-t).exp()).collect());

    let (stretched, _) = sample("stretched", 4.0, 400, |t| (-t.min(1.0)).exp());
    let (exp_minus_one, _) = sample("exp_minus_one", 1.5, 400, |t| (t + 0.5).exp() - 1.0);
    let (quartic, _) = sample("quartic", 4.0, 400, |t| t.powi(4));

    vec![exp_decay, stretched, exp_minus_one, quartic]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{
        differential_logconvexity_margin, discrete_logconvexity_margin, slope_monotonicity,
        TripleOptions,
    };
    use crate::tolerance::Tolerances;

    fn fixture(name: &str) -> ScalarFixture {
        scalar_fixtures()
            .into_iter()
            .find(|f| f.name == name)
            .expect("known fixture")
    }

    #[test]
    fn stretched_is_constant_at_the_frozen_level() {
        let f = fixture("stretched");
        let level = (-1.0f64).exp();
        for (&t, &v) in f.grid.points().iter().zip(&f.values) {
            if (1.0..2.0).contains(&t) {
                assert!((v - level).abs() < 1e-15, "value {v} at t = {t}");
            }
        }
    }

    #[test]
    fn exp_decay_equality_margins() {
        let f = fixture("exp_decay");
        let tol = Tolerances::default();
        let disc =
            discrete_logconvexity_margin(&f.grid, &f.values, &tol, &TripleOptions::default())
                .unwrap();
        assert!(disc.holds());
        assert!(disc.margin.abs() <= 1e-10);
        let diff = differential_logconvexity_margin(
            &f.grid,
            &f.values,
            f.d1.as_ref().unwrap(),
            f.d2.as_ref().unwrap(),
            &tol,
        );
        assert!(diff.holds());
        assert!(diff.margin.abs() <= 1e-10);
    }

    #[test]
    fn fixture_discrimination() {
        let tol = Tolerances::default();
        let opts = TripleOptions::default();

        let s = fixture("stretched");
        assert!(
            discrete_logconvexity_margin(&s.grid, &s.values, &tol, &opts)
                .unwrap()
                .holds()
        );
        assert!(!slope_monotonicity(&s.grid, &s.values, &tol).holds());

        let e = fixture("exp_minus_one");
        assert!(
            !discrete_logconvexity_margin(&e.grid, &e.values, &tol, &opts)
                .unwrap()
                .holds()
        );

        let q = fixture("quartic");
        assert!(slope_monotonicity(&q.grid, &q.values, &tol).holds());
    }
}
