//! The five subcommands.

use std::io::Write;

use logconvex::dynamics::{
    check_differential_logconvexity, check_discrete_logconvexity, check_monotonicity,
    h_prime_at_zero, height_series, operator_norm_series, TimeGrid,
};
use logconvex::props::{
    check_accretive_square, check_accretivity, check_hyponormal, check_logconvex_criterion,
    check_semiangle, lower_bound_m, numerical_range_boundary, CriterionConfig,
};
use logconvex::{ComplexMatrix, ComplexVector, Tolerances};

use crate::input::{load, parse_u0};
use crate::report::{ConfigEcho, Report};
use crate::{ConfigArgs, Failure, InputArgs};

fn tolerances(config: &ConfigArgs) -> Tolerances {
    Tolerances::new(config.tol_abs, config.tol_rel)
}

fn echo(config: &ConfigArgs, u0: Option<String>) -> ConfigEcho {
    ConfigEcho {
        seed: config.seed,
        tol_abs: config.tol_abs,
        tol_rel: config.tol_rel,
        t_max: config.t_max,
        n_points: config.n_points,
        grid: config.grid.clone(),
        angles: config.angles,
        samples: config.samples,
        starts: config.starts,
        iters: config.iters,
        u0,
        assert: config.assert,
    }
}

fn criterion_config(config: &ConfigArgs) -> CriterionConfig {
    CriterionConfig {
        seed: config.seed,
        samples: config.samples,
        starts: config.starts,
        max_iters: config.iters,
        grad_tol: 1e-10,
        tol: tolerances(config),
    }
}

/// Build the time grid from flags, defaulting the horizon to
/// `10 / max(m(A), 0.1)`.
fn build_grid(config: &ConfigArgs, m: f64) -> Result<TimeGrid, Failure> {
    let t_max = match config.t_max {
        Some(t) if t > 0.0 => t,
        Some(t) => return Err(Failure::Usage(format!("t_max must be positive, got {t}"))),
        None => 10.0 / m.max(0.1),
    };
    if config.n_points < 3 {
        return Err(Failure::Usage("n_points must be at least 3".into()));
    }
    let grid = match config.grid.as_str() {
        "hybrid" => TimeGrid::hybrid(t_max, config.n_points)?,
        "uniform" => TimeGrid::uniform(t_max, config.n_points)?,
        other => {
            return Err(Failure::Usage(format!(
                "unknown grid '{other}' (expected hybrid | uniform)"
            )))
        }
    };
    Ok(grid)
}

fn write_sink(path: Option<&str>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, content)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn emit_report(report: &Report, out: Option<&str>, assert: bool) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    write_sink(out, &text)?;
    if assert && report.any_violated() {
        return Err(Failure::Violated);
    }
    Ok(())
}

/// All six property checks plus the scalar summary.
pub fn cmd_check(input: &InputArgs, config: &ConfigArgs) -> Result<(), Failure> {
    let (a, descriptor) = load(input, config.seed)?;
    let tol = tolerances(config);
    let mut report = Report::new(descriptor, echo(config, None), !config.no_timestamp);

    let acc = check_accretivity(&a, &tol)?;
    let hypo = check_hyponormal(&a, &tol)?;
    let square = check_accretive_square(&a, &tol)?;
    let sector = check_semiangle(&a, &tol)?;
    let crit = check_logconvex_criterion(&a, &criterion_config(config))?;

    report.summary.m_a = Some(acc.accretive.extremal_value);
    report.summary.m_a2 = Some(square.extremal_value);
    report.summary.commutator_lambda_min = Some(hypo.extremal_value);
    report.summary.criterion_min = Some(crit.extremal_value);
    report.properties = vec![
        acc.accretive,
        acc.positively_accretive,
        hypo,
        square,
        sector,
        crit,
    ];
    emit_report(&report, config.out.as_deref(), config.assert)
}

/// Resolve the initial state, running the criterion check when asked for
/// the witness.
fn resolve_u0(
    spec: &str,
    a: &ComplexMatrix,
    config: &ConfigArgs,
) -> Result<ComplexVector, Failure> {
    if spec == "witness" {
        let crit = check_logconvex_criterion(a, &criterion_config(config))?;
        return crit
            .witness
            .ok_or_else(|| Failure::Usage("criterion check produced no witness".into()));
    }
    parse_u0(spec, a.dim(), config.seed)
}

pub fn cmd_evolve(input: &InputArgs, config: &ConfigArgs, u0_spec: &str) -> Result<(), Failure> {
    let (a, descriptor) = load(input, config.seed)?;
    let tol = tolerances(config);
    let u0 = resolve_u0(u0_spec, &a, config)?;
    let m = lower_bound_m(&a, &tol)?;
    let grid = build_grid(config, m)?;
    let series = height_series(&a, &u0, &grid)?;

    let mut report = Report::new(
        descriptor,
        echo(config, Some(u0_spec.to_string())),
        !config.no_timestamp,
    );
    let (decrease, slope) = check_monotonicity(&series, &tol);
    report.verdicts = vec![
        check_differential_logconvexity(&series, &tol),
        check_discrete_logconvexity(&series, &tol),
        decrease,
        slope,
    ];
    let (analytic, numeric) = h_prime_at_zero(&a, &u0)?;
    report.summary.m_a = Some(m);
    report.summary.h_prime0_analytic = Some(analytic);
    report.summary.h_prime0_numeric = Some(numeric);

    if let Some(csv_path) = &config.csv {
        let mut csv = String::from("t,h,hprime,hsecond,logh\n");
        for (k, &t) in grid.points().iter().enumerate() {
            csv.push_str(&format!(
                "{},{},{},{},{}\n",
                t,
                series.h[k],
                series.h_prime[k],
                series.h_second[k],
                series.h[k].ln()
            ));
        }
        std::fs::write(csv_path, csv)?;
    }
    emit_report(&report, config.out.as_deref(), config.assert)
}

/// Boundary samples of the numerical range as CSV (the primary output);
/// goes to stdout when `--csv` is omitted.
pub fn cmd_range(input: &InputArgs, config: &ConfigArgs) -> Result<(), Failure> {
    let (a, _descriptor) = load(input, config.seed)?;
    let tol = tolerances(config);
    if config.angles < 4 {
        return Err(Failure::Usage("angles must be at least 4".into()));
    }
    let boundary = numerical_range_boundary(&a, config.angles, &tol)?;
    let mut csv = format!("# m(A) = {}\n", boundary.m);
    csv.push_str("theta,re,im\n");
    for (k, &theta) in boundary.angles.iter().enumerate() {
        let z = boundary.boundary_points[k];
        csv.push_str(&format!("{},{},{}\n", theta, z.re, z.im));
    }
    write_sink(config.csv.as_deref(), &csv)
}

pub fn cmd_norms(
    input: &InputArgs,
    config: &ConfigArgs,
    u0_spec: Option<&str>,
) -> Result<(), Failure> {
    let (a, descriptor) = load(input, config.seed)?;
    let tol = tolerances(config);
    let m = lower_bound_m(&a, &tol)?;
    let grid = build_grid(config, m)?;
    let series = operator_norm_series(&a, &grid, &tol)?;

    let height = match u0_spec {
        Some(spec) => {
            let u0 = resolve_u0(spec, &a, config)?;
            Some(height_series(&a, &u0, &grid)?)
        }
        None => None,
    };

    let mut report = Report::new(
        descriptor,
        echo(config, u0_spec.map(str::to_string)),
        !config.no_timestamp,
    );
    report.summary.m_a = Some(m);
    report.summary.e_prime0_estimate = Some(series.e_prime_zero_estimate);
    report.summary.spectral_abscissa = Some(series.spectral_abscissa);

    if let Some(csv_path) = &config.csv {
        let mut csv = String::new();
        match &height {
            Some(hs) => {
                csv.push_str("t,E,h\n");
                for (k, &t) in grid.points().iter().enumerate() {
                    csv.push_str(&format!("{},{},{}\n", t, series.e[k], hs.h[k]));
                }
            }
            None => {
                csv.push_str("t,E\n");
                for (k, &t) in grid.points().iter().enumerate() {
                    csv.push_str(&format!("{},{}\n", t, series.e[k]));
                }
            }
        }
        std::fs::write(csv_path, csv)?;
    }
    emit_report(&report, config.out.as_deref(), config.assert)
}

/// Write a named example as matrix JSON (bit-exact round-trip format).
pub fn cmd_emit(input: &InputArgs, out: Option<&str>) -> Result<(), Failure> {
    let (a, _descriptor) = load(input, logconvex::props::DEFAULT_SEED)?;
    let mut text = serde_json::to_string_pretty(&a)?;
    text.push('\n');
    write_sink(out, &text)
}
