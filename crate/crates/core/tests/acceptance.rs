//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. Tolerances and time budgets are pinned below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use curved_otto::sweep::{engine_efficiencies, Axis, Param, Quantity};
use curved_otto::{
    energy_derivative, find_mode_transition, gibbs_state, large_curvature_estimate,
    partition_function, run_cycle, small_curvature_estimate, sweep_grid, theta3, theta3_prime,
    CurvedSpectrum, FigureId, LimitParams, Mode, OttoParams, SweepSpec, SweepTable,
    TruncationPolicy,
};

const FLAT_REL_TOL: f64 = 1e-12;
const FIRST_LAW_ABS_TOL: f64 = 1e-10;
const LARGE_ETA_EXACT: f64 = 0.0197;
const LARGE_ETA_REL_TOL: f64 = 0.01;
const TRANSITION_WINDOW: (f64, f64) = (6.9, 7.5);
const SMALL_ETA_S: f64 = 0.001488;
const SMALL_ETA_S_REL_TOL: f64 = 0.01;
const SMALL_ETA_EXACT: f64 = 0.001314;
const SMALL_ETA_EXACT_REL_TOL: f64 = 0.10;
const CARNOT_SLACK: f64 = 1e-12;
const CARNOT_APPROACH: f64 = 0.88;
const ZERO_WORK_TOL: f64 = 1e-12;
const THETA_REL_TOL: f64 = 1e-12;
const FD_STEP: f64 = 1e-6;
const FD_REL_TOL: f64 = 1e-6;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn rel_err(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| {
            if i == count - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (count - 1) as f64
            }
        })
        .collect()
}

fn cycle(l1: f64, l2: f64, th: f64, tc: f64) -> curved_otto::CycleOutcome {
    run_cycle(&OttoParams::new(l1, l2, th, tc).unwrap()).unwrap()
}

fn flat_oracle() -> Verdict {
    let policy = TruncationPolicy::default();
    let mut worst: f64 = 0.0;
    for t in [0.1, 0.5, 1.0, 2.0] {
        let z = partition_function(0.0, t, &policy).unwrap().value();
        let z_exact = (-0.5 / t).exp() / (1.0 - (-1.0 / t).exp());
        let u = gibbs_state(0.0, t, &policy).unwrap().mean_energy;
        let u_exact = 0.5 + 1.0 / ((1.0 / t).exp() - 1.0);
        worst = worst.max(rel_err(z, z_exact)).max(rel_err(u, u_exact));
    }
    verdict(worst <= FLAT_REL_TOL, format!("max rel err {worst:.2e}"))
}

fn criterion_grid() -> Vec<(f64, f64)> {
    let axis = linspace(0.05, 8.0, 10);
    axis.iter()
        .flat_map(|&l1| axis.iter().map(move |&l2| (l1, l2)))
        .collect()
}

const TEMPERATURE_PAIRS: [(f64, f64); 2] = [(1.0, 0.1), (2.0, 0.5)];

fn first_law() -> Verdict {
    let mut worst: f64 = 0.0;
    for (th, tc) in TEMPERATURE_PAIRS {
        for (l1, l2) in criterion_grid() {
            let c = cycle(l1, l2, th, tc);
            worst = worst.max((c.work - (c.q_hot + c.q_cold_absorbed())).abs());
        }
    }
    verdict(
        worst <= FIRST_LAW_ABS_TOL,
        format!("max |W - Q_h - Q_c| {worst:.2e} over 200 cycles"),
    )
}

fn large_curvature() -> Verdict {
    let c = cycle(9.8, 10.0, 1.0, 0.1);
    let eta = c.efficiency.unwrap_or(f64::NAN);
    let eta_l = large_curvature_estimate(10.0, 0.2, 1.0, 0.1).unwrap().eta_l;
    verdict(
        rel_err(eta, LARGE_ETA_EXACT) <= LARGE_ETA_REL_TOL && eta_l == 0.02,
        format!("eta {eta:.6}, eta_l {eta_l}"),
    )
}

fn transition() -> Verdict {
    let t = match find_mode_transition(0.1, 1.0, 0.1, (5.0, 9.0), &TruncationPolicy::default()) {
        Ok(t) => t,
        Err(e) => return verdict(false, e.to_string()),
    };
    let x = t.lambda_hot;
    let before = cycle(0.1, x - 1e-3, 1.0, 0.1).mode;
    let after = cycle(0.1, x + 1e-3, 1.0, 0.1).mode;
    let in_window = (TRANSITION_WINDOW.0..=TRANSITION_WINDOW.1).contains(&x);
    verdict(
        in_window && before == Mode::Engine && after == Mode::Refrigerator,
        format!("lambda_hot* {x:.9}, {before} -> {after}"),
    )
}

fn small_curvature() -> Verdict {
    let policy = TruncationPolicy::default();
    let theta = 0.05;
    let mut matches = Vec::new();
    let mut closest: Option<(f64, f64, f64)> = None;
    for k in 1..=2000 {
        let t_ref = k as f64 * 1e-3;
        let params = LimitParams {
            lambda: 0.011,
            epsilon: 0.001,
            theta_temp: theta,
            t_ref,
        };
        let eta_s = small_curvature_estimate(&params, &policy).unwrap().eta_s;
        if rel_err(eta_s, SMALL_ETA_S) > SMALL_ETA_S_REL_TOL {
            continue;
        }
        let eta = cycle(0.01, 0.011, t_ref + theta, t_ref)
            .efficiency
            .unwrap_or(f64::NAN);
        let err = rel_err(eta, SMALL_ETA_EXACT);
        if closest.is_none_or(|(_, _, e)| err < e) {
            closest = Some((t_ref, eta, err));
        }
        if err <= SMALL_ETA_EXACT_REL_TOL {
            matches.push(t_ref);
        }
    }
    match (matches.first(), matches.last(), closest) {
        (Some(lo), Some(hi), Some((t, eta, _))) => verdict(
            true,
            format!(
                "T_A in [{lo:.3}, {hi:.3}] ({} points); closest T_A {t:.3} gives exact eta {eta:.6}",
                matches.len()
            ),
        ),
        (_, _, Some((t, eta, err))) => verdict(
            false,
            format!("no T_A meets both bands; closest T_A {t:.3} gives exact eta {eta:.6} ({:.1}% off)", err * 100.0),
        ),
        _ => verdict(false, "eta_s = 0.001488 +/- 1% is not reached for any T_A in (0, 2]"),
    }
}

fn lambda_hot_sweep(lambda_cold: f64, count: usize, quantities: Vec<Quantity>) -> SweepTable {
    let spec = SweepSpec::new(
        vec![Axis::linspace(Param::LambdaHot, 0.01, 10.0, count)],
        [
            (Param::LambdaCold, lambda_cold),
            (Param::THot, 1.0),
            (Param::TCold, 0.1),
        ]
        .into_iter()
        .collect(),
        quantities,
    );
    sweep_grid(&spec).unwrap()
}

fn carnot() -> Verdict {
    let t = lambda_hot_sweep(0.1, 200, vec![Quantity::Efficiency, Quantity::Mode]);
    let etas = engine_efficiencies(&t);
    let bound = 1.0 - 0.1 / 1.0;
    let max = etas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let below = etas.iter().all(|&e| e <= bound + CARNOT_SLACK);
    verdict(
        below && max >= CARNOT_APPROACH,
        format!(
            "{} engine points, max eta {max:.6}, Carnot {bound}",
            etas.len()
        ),
    )
}

fn sign_structure() -> Verdict {
    let mut diagonal_worst: f64 = 0.0;
    let mut violations = Vec::new();
    for (th, tc) in TEMPERATURE_PAIRS {
        for (l1, l2) in criterion_grid() {
            let w = cycle(l1, l2, th, tc).work;
            if l1 == l2 {
                diagonal_worst = diagonal_worst.max(w.abs());
            } else if w.signum() != (l2 - l1).signum() || w == 0.0 {
                violations.push((th, tc, l1, l2, w));
            }
        }
    }
    let mut detail = format!(
        "max |W| at equal curvature {diagonal_worst:.2e}; {} of 180 off-diagonal points break sign(W) = sign(l2 - l1)",
        violations.len()
    );
    if let Some((th, tc, l1, l2, w)) = violations.first() {
        detail.push_str(&format!(
            ", e.g. (T_h, T_c) = ({th}, {tc}), (l1, l2) = ({l1:.4}, {l2:.4}): W = {w:.3e}"
        ));
    }
    verdict(
        diagonal_worst <= ZERO_WORK_TOL && violations.is_empty(),
        detail,
    )
}

fn theta_identities() -> Verdict {
    let mut worst: f64 = 0.0;
    for q in [0.01f64, 0.1, 0.3, 0.6, 0.9] {
        // brute force in plain powers, far past double-precision convergence
        let (mut s21, mut s22) = (0.0, 0.0);
        for m in 1..=200i32 {
            let term = q.powi(m * m);
            s21 += term;
            s22 += f64::from(m * m) * term;
        }
        worst = worst
            .max(rel_err((theta3(q).unwrap() - 1.0) / 2.0, s21))
            .max(rel_err(q / 2.0 * theta3_prime(q).unwrap(), s22));
    }
    let q = (-std::f64::consts::PI).exp();
    let oracle = 1.0 + 2.0 * (1..=10i32).map(|m| q.powi(m * m)).sum::<f64>();
    let special = rel_err(theta3(q).unwrap(), oracle);
    let worst = worst.max(special);
    verdict(
        worst <= THETA_REL_TOL,
        format!(
            "max rel err {worst:.2e}; theta3(e^-pi) = {:.13}",
            theta3(q).unwrap()
        ),
    )
}

fn gradient() -> Verdict {
    let mut worst: f64 = 0.0;
    for lambda in [0.01, 0.1, 1.0, 5.0, 10.0] {
        let plus = CurvedSpectrum::new(lambda + FD_STEP).unwrap();
        let minus = CurvedSpectrum::new(lambda - FD_STEP).unwrap();
        for n in 0..=20u64 {
            let fd = (plus.energy(n) - minus.energy(n)) / (2.0 * FD_STEP);
            worst = worst.max(rel_err(energy_derivative(n, lambda).unwrap(), fd));
        }
    }
    verdict(worst <= FD_REL_TOL, format!("max rel err {worst:.2e}"))
}

/// Indices of strict interior local maxima.
fn interior_maxima(y: &[f64]) -> Vec<usize> {
    (1..y.len() - 1)
        .filter(|&i| y[i] > y[i - 1] && y[i] > y[i + 1])
        .collect()
}

fn figure_properties() -> Verdict {
    let mut problems = Vec::new();

    let fig6 = curved_otto::figure_dataset(FigureId::Fig6).unwrap();
    let l1 = fig6.column("lambda_cold").unwrap();
    let l2 = fig6.column("lambda_hot").unwrap();
    let w = fig6.column("work").unwrap();
    let mut peaks = Vec::new();
    for family in [0.1, 0.3, 0.5, 1.0] {
        let idx: Vec<usize> = (0..l1.len()).filter(|&i| l1[i] == Some(family)).collect();
        let work: Vec<f64> = idx.iter().map(|&i| w[i].unwrap()).collect();
        let maxima = interior_maxima(&work);
        if maxima.len() != 1 {
            problems.push(format!(
                "fig6 l1={family}: {} interior maxima",
                maxima.len()
            ));
            continue;
        }
        peaks.push(l2[idx[maxima[0]]].unwrap());
    }
    if !peaks.windows(2).all(|p| p[1] > p[0]) {
        problems.push(format!("fig6 peaks not increasing: {peaks:?}"));
    }

    let fig8 = curved_otto::figure_dataset(FigureId::Fig8).unwrap();
    let l2 = fig8.column("lambda_hot").unwrap();
    let th = fig8.column("t_hot").unwrap();
    let w = fig8.column("work").unwrap();
    let families = [0.15, 0.2, 0.25];
    let curves: Vec<Vec<f64>> = families
        .iter()
        .map(|&f| {
            (0..l2.len())
                .filter(|&i| l2[i] == Some(f))
                .map(|i| w[i].unwrap())
                .collect()
        })
        .collect();
    for (f, c) in families.iter().zip(&curves) {
        if !c.windows(2).all(|p| p[1] > p[0]) {
            problems.push(format!("fig8 W not increasing in T_h at l2={f}"));
        }
    }
    let n_t = curves[0].len();
    let across_ok = (0..n_t).all(|j| curves.windows(2).all(|c| c[1][j] > c[0][j]));
    if !across_ok {
        problems.push("fig8 W not increasing in l2 at fixed T_h".into());
    }
    let t_range = (th[0].unwrap(), th[n_t - 1].unwrap());

    let detail = if problems.is_empty() {
        format!(
            "fig6 peaks at l2 = {:?}; fig8 monotone over T_h in [{}, {}]",
            peaks
                .iter()
                .map(|p| (p * 1e3).round() / 1e3)
                .collect::<Vec<_>>(),
            t_range.0,
            t_range.1
        )
    } else {
        problems.join("; ")
    };
    verdict(problems.is_empty(), detail)
}

struct Criterion {
    number: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Verdict,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        number: 1,
        name: "flat-limit oracle",
        budget: Some(Duration::from_secs(1)),
        run: flat_oracle,
    },
    Criterion {
        number: 2,
        name: "first law",
        budget: Some(Duration::from_secs(5)),
        run: first_law,
    },
    Criterion {
        number: 3,
        name: "large-curvature efficiency",
        budget: Some(Duration::from_millis(100)),
        run: large_curvature,
    },
    Criterion {
        number: 4,
        name: "engine/refrigerator transition",
        budget: Some(Duration::from_secs(1)),
        run: transition,
    },
    Criterion {
        number: 5,
        name: "small-curvature example",
        budget: Some(Duration::from_secs(10)),
        run: small_curvature,
    },
    Criterion {
        number: 6,
        name: "Carnot bound",
        budget: Some(Duration::from_secs(5)),
        run: carnot,
    },
    Criterion {
        number: 7,
        name: "sign structure",
        budget: None,
        run: sign_structure,
    },
    Criterion {
        number: 8,
        name: "theta identities",
        budget: None,
        run: theta_identities,
    },
    Criterion {
        number: 9,
        name: "gradient check",
        budget: None,
        run: gradient,
    },
    Criterion {
        number: 10,
        name: "figure properties",
        budget: None,
        run: figure_properties,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let v = (c.run)();
        let elapsed = start.elapsed();
        let in_time = c.budget.is_none_or(|b| elapsed <= b);
        let pass = v.pass && in_time;
        if !pass {
            failed += 1;
        }
        let budget = c
            .budget
            .map_or(String::new(), |b| format!(" / budget {b:?}"));
        let late = if in_time { "" } else { " [over time budget]" };
        println!(
            "criterion {:>2} {:<32} {}  ({:.3?}{budget}){late}  {}",
            c.number,
            c.name,
            if pass { "PASS" } else { "FAIL" },
            elapsed,
            v.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
