//! Acceptance suite: one test per criterion, each printing a pass line with
//! the measured values (visible under `cargo test -- --nocapture`).

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};

use logconvex::dynamics::{
    check_differential_logconvexity, check_discrete_logconvexity, check_monotonicity,
    discrete_logconvexity_margin, operator_norm_series, slope_monotonicity, TimeGrid,
    TripleOptions,
};
use logconvex::generators::{
    advection_diffusion, contrast_matrix, normal_accretive_factors, random_family, scalar_fixtures,
    showex_general, showex_matrix2, AdrParams, RandomKind, ShowexParams,
};
use logconvex::linalg::{matrix_exp, operator_norm};
use logconvex::props::{
    brute_force_criterion_min, check_accretive_square, check_accretivity, check_hyponormal,
    check_logconvex_criterion, check_semiangle, criterion_gradient, criterion_value,
    criterion_value_raw, lower_bound_m, CriterionConfig,
};
use logconvex::{ComplexVector, Tolerances};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn random_unit(n: usize, rng: &mut ChaCha12Rng) -> ComplexVector {
    loop {
        let v = ComplexVector::new(
            (0..n)
                .map(|_| {
                    let re: f64 = StandardNormal.sample(rng);
                    let im: f64 = StandardNormal.sample(rng);
                    c(re, im)
                })
                .collect(),
        )
        .unwrap();
        if let Ok(u) = v.normalized() {
            return u;
        }
    }
}

/// Worst differential slack, and the magnitude scale of the two sides.
fn differential_margin_and_scale(h: &[f64], h_prime: &[f64], h_second: &[f64]) -> (f64, f64) {
    let mut margin = f64::INFINITY;
    let mut scale = 0.0f64;
    for k in 0..h.len() {
        let lhs = h_prime[k] * h_prime[k];
        let rhs = h[k] * h_second[k];
        margin = margin.min(rhs - lhs);
        scale = scale.max(lhs + rhs.abs());
    }
    (margin, scale.max(1.0))
}

#[test]
fn criterion_01_showalter_accretive_square_violation() {
    let a = showex_matrix2(1.0, 0.5).unwrap();
    let tol = Tolerances::default();
    let report = check_accretive_square(&a, &tol).unwrap();
    assert!(report.violated());
    assert!(
        report.extremal_value <= -0.25 + 1e-8,
        "m(A^2) = {}",
        report.extremal_value
    );
    let e1 = ComplexVector::basis(2, 0);
    let a2 = a.mul(&a);
    let rayleigh = a2.mul_vec(&e1).inner(&e1).re;
    assert!(
        (rayleigh + 0.25).abs() <= 1e-10,
        "Re<A^2 e1, e1> = {rayleigh}"
    );
    println!(
        "criterion 01 (accretive-square violation): PASS — m(A^2) = {:.12}, Re<A^2 e1,e1> = {:.12}",
        report.extremal_value, rayleigh
    );
}

#[test]
fn criterion_02_showalter_verdict_pattern() {
    let tol = Tolerances::default();
    let dims = [3usize, 4, 5];
    for i in 0..20 {
        // Log-spaced lambda over [0.1, 10]; delta over (0, 0.5].
        let lambda = 0.1 * 100f64.powf(i as f64 / 19.0);
        let delta = 0.5 * (i + 1) as f64 / 20.0;
        let dim = dims[i % dims.len()];
        let p = ShowexParams::new(lambda, 4.0 * lambda, delta, dim).unwrap();
        let a = showex_general(&p);

        let acc = check_accretivity(&a, &tol).unwrap();
        assert!(acc.positively_accretive.holds(), "case {i}");
        let m_expected = 1.0f64.min(lambda);
        assert!(
            (acc.positively_accretive.extremal_value - m_expected).abs() <= 1e-8,
            "case {i}: m = {}, expected {m_expected}",
            acc.positively_accretive.extremal_value
        );

        assert!(check_semiangle(&a, &tol).unwrap().holds(), "case {i}");

        let hypo = check_hyponormal(&a, &tol).unwrap();
        assert!(hypo.violated(), "case {i}");
        let bound = -2.0 * lambda * (4.0 * lambda - lambda);
        assert!(
            hypo.extremal_value <= bound + 1e-6,
            "case {i}: lambda_min([A^H,A]) = {} vs bound {bound}",
            hypo.extremal_value
        );

        let crit = check_logconvex_criterion(&a, &CriterionConfig::default()).unwrap();
        assert!(crit.violated(), "case {i}");
        let witness = crit.witness.as_ref().unwrap();
        let g = criterion_value(&a, witness).unwrap();
        assert!(g < -1e-8, "case {i}: re-evaluated witness g = {g}");
    }
    println!("criterion 02 (Showalter verdict pattern over 20 parameter pairs): PASS");
}

#[test]
fn criterion_03_short_time_contrast() {
    let a = contrast_matrix();
    let tol = Tolerances::default();
    let (analytic, _numeric) =
        logconvex::dynamics::h_prime_at_zero(&a, &ComplexVector::basis(2, 1)).unwrap();
    assert!((analytic + 3.0).abs() <= 1e-12, "h'(0) = {analytic}");

    let grid = TimeGrid::uniform(1.0, 5).unwrap();
    let ns = operator_norm_series(&a, &grid, &tol).unwrap();
    assert!(
        (ns.e_prime_zero_estimate - 1.0).abs() <= 1e-4,
        "E'(0) = {}",
        ns.e_prime_zero_estimate
    );

    let m = lower_bound_m(&a, &tol).unwrap();
    assert!((m + 1.0).abs() <= 1e-12, "m(A) = {m}");
    println!(
        "criterion 03 (short-time contrast): PASS — h'(0) = {analytic:.12}, E'(0) = {:.8}, m = {m:.12}",
        ns.e_prime_zero_estimate
    );
}

#[test]
fn criterion_04_forward_direction_normal_accretive() {
    let tol = Tolerances::default();
    let sizes = [2usize, 4, 8];
    let mut rng = ChaCha12Rng::seed_from_u64(0x04);
    let mut worst_disc = f64::INFINITY;
    let mut worst_diff_rel = f64::INFINITY;
    for i in 0..50 {
        let n = sizes[i % sizes.len()];
        let a = random_family(RandomKind::NormalAccretive, n, 400 + i as u64);
        let m = lower_bound_m(&a, &tol).unwrap();
        let grid = TimeGrid::default_for(m);
        for _ in 0..20 {
            let u0 = random_unit(n, &mut rng);
            let hs = logconvex::dynamics::height_series(&a, &u0, &grid).unwrap();

            let disc = check_discrete_logconvexity(&hs, &tol);
            worst_disc = worst_disc.min(disc.margin);
            assert!(
                disc.margin >= -1e-9,
                "matrix {i}: discrete margin {} (log domain)",
                disc.margin
            );

            let (margin, scale) = differential_margin_and_scale(&hs.h, &hs.h_prime, &hs.h_second);
            worst_diff_rel = worst_diff_rel.min(margin / scale);
            assert!(
                margin >= -1e-9 * scale,
                "matrix {i}: differential margin {margin} at scale {scale}"
            );
            assert!(check_differential_logconvexity(&hs, &tol).holds());
        }
    }
    println!(
        "criterion 04 (forward direction, 50 normal-accretive x 20 u0): PASS — worst discrete margin {worst_disc:.3e}, worst differential margin/scale {worst_diff_rel:.3e}"
    );
}

#[test]
fn criterion_05_converse_direction_witness_trajectory() {
    let a = showex_matrix2(1.0, 0.5).unwrap();
    let tol = Tolerances::default();
    let crit = check_logconvex_criterion(&a, &CriterionConfig::default()).unwrap();
    assert!(crit.violated());
    let u0 = crit.witness.clone().unwrap();
    let g0 = criterion_value(&a, &u0).unwrap();
    assert!(g0 < -1e-6, "witness certification g = {g0}");

    let m = lower_bound_m(&a, &tol).unwrap();
    let grid = TimeGrid::default_for(m);
    let hs = logconvex::dynamics::height_series(&a, &u0, &grid).unwrap();
    let mut worst_early = f64::INFINITY;
    for (k, &t) in grid.points().iter().enumerate() {
        if t <= 1e-2 {
            let slack = hs.h[k] * hs.h_second[k] - hs.h_prime[k] * hs.h_prime[k];
            worst_early = worst_early.min(slack);
        }
    }
    assert!(
        worst_early < -1e-8,
        "no early differential violation: worst slack {worst_early}"
    );
    // By continuity the early margin matches the sign (and size) of g(u0).
    assert!((worst_early - g0).abs() <= 0.1 * g0.abs());
    println!(
        "criterion 05 (converse direction): PASS — g(u0) = {g0:.6}, worst early slack {worst_early:.6}"
    );
}

#[test]
fn criterion_06_sector_necessity_for_accretive_squares() {
    let tol = Tolerances::default();
    let kinds = [
        RandomKind::StrictlyAccretive,
        RandomKind::SectorialQuarter,
        RandomKind::NormalAccretive,
    ];
    let mut accepted = 0usize;
    let mut attempts = 0u64;
    while accepted < 200 {
        assert!(attempts < 5000, "filter acceptance rate collapsed");
        let kind = kinds[(attempts % 3) as usize];
        let n = 2 + (attempts % 5) as usize;
        let a = random_family(kind, n, 6000 + attempts);
        attempts += 1;
        let m = lower_bound_m(&a, &tol).unwrap();
        let m2 = check_accretive_square(&a, &tol).unwrap().extremal_value;
        if m < 0.0 || m2 < 0.0 {
            continue;
        }
        accepted += 1;
        let report = check_semiangle(&a, &tol).unwrap();
        let norm_a = operator_norm(&a, tol.rel).unwrap();
        assert!(
            report.extremal_value >= -1e-8 * norm_a,
            "accepted sample {accepted}: lambda_min(X+-Y) = {} at |A| = {norm_a}",
            report.extremal_value
        );
        assert!(report.holds(), "accepted sample {accepted}");
    }
    println!(
        "criterion 06 (sector necessity): PASS — 200 filtered matrices in {attempts} draws, all inside the quarter sector"
    );
}

#[test]
fn criterion_07_accretive_square_dynamics() {
    let tol = Tolerances::default();
    let sizes = [2usize, 4, 8];
    let mut rng = ChaCha12Rng::seed_from_u64(0x07);
    let mut accepted = 0usize;
    let mut seed = 7000u64;
    while accepted < 50 {
        let n = sizes[accepted % sizes.len()];
        let a = random_family(RandomKind::StrictlyAccretive, n, seed);
        seed += 1;
        let m = lower_bound_m(&a, &tol).unwrap();
        let m2 = check_accretive_square(&a, &tol).unwrap().extremal_value;
        if m <= 0.0 || m.is_nan() || m2 < 0.0 {
            continue;
        }
        accepted += 1;
        let grid = TimeGrid::default_for(m);
        for _ in 0..10 {
            let u0 = random_unit(n, &mut rng);
            let hs = logconvex::dynamics::height_series(&a, &u0, &grid).unwrap();
            for (k, &h2) in hs.h_second.iter().enumerate() {
                assert!(
                    h2 > 0.0,
                    "sample {accepted}: h''({}) = {h2}",
                    grid.points()[k]
                );
            }
            let (decrease, slope) = check_monotonicity(&hs, &tol);
            assert!(decrease.holds(), "sample {accepted}: {:?}", decrease);
            assert!(slope.holds(), "sample {accepted}: {:?}", slope);
        }
    }
    println!(
        "criterion 07 (accretive squares: h'' > 0, strict decrease, slope monotone): PASS — 50 matrices x 10 u0"
    );
}

#[test]
fn criterion_08_hyponormal_implies_criterion() {
    let mut worst = f64::INFINITY;
    for i in 0..100 {
        let n = 2 + (i % 4);
        let a = random_family(RandomKind::NormalAccretive, n, 8000 + i as u64);
        let w = brute_force_criterion_min(&a, 10_000, 80 + i as u64).unwrap();
        worst = worst.min(w.value);
        assert!(w.value >= -1e-9, "matrix {i}: sampled min {}", w.value);
    }
    println!(
        "criterion 08 (hyponormal => criterion, 100 normal matrices x 1e4 samples): PASS — worst sampled min {worst:.3e}"
    );
}

#[test]
fn criterion_09_scalar_fixture_discrimination() {
    let tol = Tolerances::default();
    let opts = TripleOptions::default();
    let fixtures = scalar_fixtures();
    let by_name = |name: &str| fixtures.iter().find(|f| f.name == name).unwrap();

    let decay = by_name("exp_decay");
    let disc = discrete_logconvexity_margin(&decay.grid, &decay.values, &tol, &opts).unwrap();
    assert!(disc.holds());
    assert!(
        disc.margin.abs() <= 1e-10,
        "discrete margin {}",
        disc.margin
    );
    let (diff_margin, _) = differential_margin_and_scale(
        &decay.values,
        decay.d1.as_ref().unwrap(),
        decay.d2.as_ref().unwrap(),
    );
    assert!(
        diff_margin.abs() <= 1e-10,
        "differential margin {diff_margin}"
    );

    let stretched = by_name("stretched");
    assert!(
        discrete_logconvexity_margin(&stretched.grid, &stretched.values, &tol, &opts)
            .unwrap()
            .holds()
    );
    assert!(!slope_monotonicity(&stretched.grid, &stretched.values, &tol).holds());

    let growth = by_name("exp_minus_one");
    assert!(
        !discrete_logconvexity_margin(&growth.grid, &growth.values, &tol, &opts)
            .unwrap()
            .holds()
    );
    println!(
        "criterion 09 (scalar fixtures): PASS — exp margins ({:.2e}, {:.2e}), stretch and growth discriminate",
        disc.margin, diff_margin
    );
}

#[test]
fn criterion_10_numerical_substrate() {
    let tol = Tolerances::default();
    // Semigroup law at n <= 16.
    let mut rng = ChaCha12Rng::seed_from_u64(0x10);
    for (i, &n) in [2usize, 5, 16].iter().enumerate() {
        let a = random_family(RandomKind::Unrestricted, n, 100 + i as u64)
            .scale_re(1.0 / (n as f64).sqrt());
        for &(s, t) in &[(0.3, 1.7), (2.0, 2.0), (0.05, 0.9)] {
            let both = matrix_exp(&a.scale_re(-(s + t))).unwrap();
            let split = matrix_exp(&a.scale_re(-s))
                .unwrap()
                .mul(&matrix_exp(&a.scale_re(-t)).unwrap());
            let err = operator_norm(&split.sub(&both), tol.rel).unwrap();
            let denom = operator_norm(&both, tol.rel).unwrap();
            assert!(
                err <= 1e-10 * denom,
                "semigroup defect {err} vs norm {denom}"
            );
        }
    }

    // Exponential against the eigendecomposition oracle on normal matrices.
    for i in 0..10 {
        let n = 2 + (i % 5);
        let f = normal_accretive_factors(n, 300 + i as u64);
        let a = f.assemble();
        for &t in &[0.1, 1.0, 4.0] {
            let direct = matrix_exp(&a.scale_re(-t)).unwrap();
            let oracle = f.exp_minus_t(t);
            let rel = direct.sub(&oracle).frobenius_norm() / oracle.frobenius_norm();
            assert!(rel <= 1e-10, "matrix {i}, t = {t}: relative defect {rel}");
        }
    }

    // Criterion gradient against central differences at 100 sphere points.
    let mats = [
        showex_matrix2(1.0, 0.5).unwrap(),
        random_family(RandomKind::Unrestricted, 3, 17),
        random_family(RandomKind::StrictlyAccretive, 4, 18),
        contrast_matrix(),
    ];
    let mut checked = 0;
    'outer: for a in &mats {
        let n = a.dim();
        let scale = operator_norm(a, tol.rel).unwrap().powi(2);
        loop {
            let x = random_unit(n, &mut rng);
            let grad = criterion_gradient(a, &x);
            let h = 1e-6;
            let mut fd = vec![c(0.0, 0.0); n];
            for k in 0..n {
                for part in 0..2 {
                    let dir = if part == 0 { c(h, 0.0) } else { c(0.0, h) };
                    let mut plus = x.entries().to_vec();
                    let mut minus = x.entries().to_vec();
                    plus[k] += dir;
                    minus[k] -= dir;
                    let d = (criterion_value_raw(a, &ComplexVector::new(plus).unwrap())
                        - criterion_value_raw(a, &ComplexVector::new(minus).unwrap()))
                        / (2.0 * h);
                    if part == 0 {
                        fd[k].re = d;
                    } else {
                        fd[k].im = d;
                    }
                }
            }
            let fd = ComplexVector::new(fd).unwrap();
            let err = grad.sub(&fd).norm();
            assert!(
                err <= 1e-5 * grad.norm().max(1e-6 * scale),
                "gradient defect {err} vs |grad| {}",
                grad.norm()
            );
            checked += 1;
            if checked % 25 == 0 {
                continue 'outer;
            }
        }
    }
    assert_eq!(checked, 100);
    println!("criterion 10 (numerical substrate): PASS — semigroup law, normal-exponential oracle, 100 gradient checks");
}

#[test]
fn criterion_11_advection_diffusion() {
    let tol = Tolerances::default();
    let p = AdrParams::new(0.0, 1.0, 64).unwrap();
    let a = advection_diffusion(&p);

    let m = lower_bound_m(&a, &tol).unwrap();
    assert!(m > 0.0, "m(A_h) = {m}");
    assert!(check_hyponormal(&a, &tol).unwrap().violated());

    // Normalized sin profile on the unknowns' nodes.
    let nodes = p.nodes();
    let profile: Vec<f64> = nodes
        .iter()
        .map(|&x| (std::f64::consts::PI * (x - 0.0) / 1.0).sin())
        .collect();
    let u0 = ComplexVector::from_real(&profile).normalized().unwrap();

    let grid = TimeGrid::default_for(m);
    let hs = logconvex::dynamics::height_series(&a, &u0, &grid).unwrap();
    for &h in &hs.h {
        assert!(h > 0.0);
    }
    let (decrease, _) = check_monotonicity(&hs, &tol);
    assert!(decrease.holds(), "{decrease:?}");
    println!(
        "criterion 11 (advection-diffusion n=64): PASS — m(A_h) = {m:.6}, strictly decreasing, h > 0 on {} points",
        grid.len()
    );
}
