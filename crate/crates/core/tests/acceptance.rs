//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use vp_interp::cli::{
    error_reference, error_row, table_lc_values, LC_FIGURE_CASES, TABLE_LC_REFERENCE, TABLE_LC_ROWS, TABLE_LC_TOL,
    THETAS,
};
use vp_interp::{
    fundamental_vp_darboux_mean, fundamental_vp_sum, fundamental_vp_trig, lebesgue_sweep, make_nodes, ortho_poly_eval,
    sample_at_nodes, vp_bounds_check, vp_interpolate, weighted_sup_error, ChebyshevKind, EvaluationGrid, JacobiWeight,
    TestFunction, VpParams,
};

const DELTA_TOL: f64 = 1e-9;
const REPRODUCTION_TOL: f64 = 1e-8;
const NON_REPRODUCTION_MIN: f64 = 1e-4;
const FORMS_TOL: f64 = 1e-9;
const ERROR_FACTOR: f64 = 2.0;
const F4_FROM_N: usize = 1100;
const FLAT_TOL: f64 = 0.10;
const GROWTH_FACTOR: f64 = 2.0;
const ORACLE_TOL: f64 = 1e-10;
const SLOPE_RANGE: (f64, f64) = (-3.6, -2.4);
const LC_GRID: usize = 4096;
const LC_N_CAP: usize = 1000;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn delta_property() -> Verdict {
    let mut worst = 0.0f64;
    for kind in ChebyshevKind::ALL {
        for n in [5usize, 10, 30, 64] {
            for m in [0, n / 4, n / 2, n - 1] {
                let params = VpParams::new(n, m).unwrap();
                let nodes = make_nodes(kind, n).unwrap();
                for k in 0..n {
                    for (h, &t) in nodes.t_nodes.iter().enumerate() {
                        let expected = if h == k { 1.0 } else { 0.0 };
                        let v = fundamental_vp_sum(kind, params, k, t).unwrap();
                        worst = worst.max((v - expected).abs());
                    }
                }
            }
        }
    }
    verdict(
        worst < DELTA_TOL,
        format!("max |phi_k(t_h) - delta_kh| = {worst:.2e} (tol {DELTA_TOL:.0e})"),
    )
}

/// Random polynomial of exact degree `deg` in the orthonormal basis of `kind`.
fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> Vec<f64> {
    let mut c: Vec<f64> = (0..=deg).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    c[deg] = sign * rng.gen_range(0.5..1.0);
    c
}

fn eval_poly(kind: ChebyshevKind, c: &[f64], t: f64) -> f64 {
    c.iter()
        .enumerate()
        .map(|(j, cj)| cj * ortho_poly_eval(kind, j, t).unwrap())
        .sum()
}

fn invariance_sharpness() -> Verdict {
    let (n, m) = (32usize, 16usize);
    let params = VpParams::new(n, m).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let ts: Vec<f64> = (1..=200).map(|i| i as f64 * PI / 201.0).collect();
    let mut worst_kept = 0.0f64;
    let mut least_broken = f64::INFINITY;
    for kind in ChebyshevKind::ALL {
        let nodes = make_nodes(kind, n).unwrap();
        for _ in 0..20 {
            for (deg, kept) in [(n - m, true), (n - m + 1, false)] {
                let c = random_poly(&mut rng, deg);
                let data: Vec<f64> = nodes.t_nodes.iter().map(|&t| eval_poly(kind, &c, t)).collect();
                let v = vp_interpolate(kind, params, &data).unwrap();
                let exact: Vec<f64> = ts.iter().map(|&t| eval_poly(kind, &c, t)).collect();
                let scale = exact.iter().fold(0.0f64, |a, v| a.max(v.abs()));
                let dev = ts
                    .iter()
                    .zip(&exact)
                    .map(|(&t, e)| (v.evaluate(t) - e).abs())
                    .fold(0.0f64, f64::max);
                if kept {
                    worst_kept = worst_kept.max(dev / scale);
                } else {
                    least_broken = least_broken.min(dev);
                }
            }
        }
    }
    verdict(
        worst_kept < REPRODUCTION_TOL && least_broken > NON_REPRODUCTION_MIN,
        format!(
            "degree n-m rel. deviation {worst_kept:.2e} (tol {REPRODUCTION_TOL:.0e}), degree n-m+1 min deviation {least_broken:.2e} (> {NON_REPRODUCTION_MIN:.0e})"
        ),
    )
}

fn representation_equivalence() -> Verdict {
    let params = VpParams::new(30, 15).unwrap();
    let ts: Vec<f64> = (1..=510).map(|i| i as f64 * PI / 511.0).collect();
    let mut worst = 0.0f64;
    for kind in ChebyshevKind::ALL {
        let nodes = make_nodes(kind, 30).unwrap();
        for &t in &ts {
            assert!(nodes.t_nodes.iter().all(|tk| (t - tk).abs() > 1e-6));
            for k in 0..30 {
                let a = fundamental_vp_sum(kind, params, k, t).unwrap();
                let b = fundamental_vp_darboux_mean(kind, params, k, t).unwrap();
                let c = fundamental_vp_trig(kind, params, k, t).unwrap();
                worst = worst.max((a - b).abs()).max((a - c).abs()).max((b - c).abs());
            }
        }
    }
    verdict(
        worst < FORMS_TOL,
        format!("max pairwise difference {worst:.2e} (tol {FORMS_TOL:.0e})"),
    )
}

fn table_reproduction() -> Verdict {
    let values = table_lc_values(LC_N_CAP, LC_GRID).unwrap();
    let mut misses = Vec::new();
    let mut worst = 0.0f64;
    for (r, row) in values.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            let reference = TABLE_LC_REFERENCE[r][c];
            let diff = (v - reference).abs();
            worst = worst.max(diff);
            if diff > TABLE_LC_TOL {
                misses.push(format!(
                    "{}/{}: {v:.3} vs {reference:.2}",
                    TABLE_LC_ROWS[r].0, THETAS[c]
                ));
            }
        }
    }
    let mut detail = format!(
        "{}/36 cells within {TABLE_LC_TOL} (n = 10..{LC_N_CAP} step 10, grid {LC_GRID}), max diff {worst:.3}",
        36 - misses.len()
    );
    if !misses.is_empty() {
        detail += &format!("; off: {}", misses.join(", "));
    }
    verdict(misses.is_empty(), detail)
}

fn error_tables() -> Verdict {
    let mut notes = Vec::new();
    let mut pass = true;
    for &(n, reference, _) in error_reference(TestFunction::F1) {
        let row = error_row(TestFunction::F1, n, LC_GRID).unwrap();
        let ok = row.vp <= ERROR_FACTOR * reference && row.vp >= reference / ERROR_FACTOR;
        pass &= ok;
        if !ok {
            notes.push(format!("f1 n={n} vp {:.2e} vs {reference:.1e}", row.vp));
        }
    }
    for &(n, ref_vp, ref_lag) in error_reference(TestFunction::F4).iter().filter(|r| r.0 >= F4_FROM_N) {
        let row = error_row(TestFunction::F4, n, LC_GRID).unwrap();
        if row.vp > ERROR_FACTOR * ref_vp {
            pass = false;
            notes.push(format!("f4 n={n} vp {:.2e} > 2 x {ref_vp:.1e}", row.vp));
        }
        if row.lagrange < ref_lag / ERROR_FACTOR {
            pass = false;
            notes.push(format!("f4 n={n} lagrange {:.2e} < {ref_lag:.1e} / 2", row.lagrange));
        }
    }
    let mut detail =
        "f1 vp within factor 2 at n = 50..450; f4 vp <= 2x and lagrange >= 0.5x reference at n >= 1100".to_string();
    if !notes.is_empty() {
        detail += &format!("; off: {}", notes.join(", "));
    }
    verdict(pass, detail)
}

fn boundedness_dichotomy() -> Verdict {
    let top: Vec<usize> = vec![512, 640, 768, 896, 1024];
    let mut pass = true;
    let mut notes = Vec::new();
    for (kind, g, d) in LC_FIGURE_CASES {
        let w = JacobiWeight::new(g, d).unwrap();
        if vp_bounds_check(kind, w) {
            let r = lebesgue_sweep(kind, w, 0.5, &top, LC_GRID).unwrap();
            let v = r.values();
            let (lo, hi) = v
                .iter()
                .fold((f64::INFINITY, 0.0f64), |(a, b), x| (a.min(*x), b.max(*x)));
            let spread = (hi - lo) / lo;
            let ok = spread < FLAT_TOL;
            pass &= ok;
            notes.push(format!(
                "{kind}({g},{d}) in-range spread {:.1}%{}",
                100.0 * spread,
                mark(ok)
            ));
        } else {
            let r = lebesgue_sweep(kind, w, 0.5, &[64, 1024], LC_GRID).unwrap();
            let ratio = r.entries[1].value / r.entries[0].value;
            let ok = ratio > GROWTH_FACTOR;
            pass &= ok;
            notes.push(format!("{kind}({g},{d}) out-of-range growth x{ratio:.2}{}", mark(ok)));
        }
    }
    verdict(pass, notes.join(", "))
}

fn mark(ok: bool) -> &'static str {
    if ok {
        ""
    } else {
        " [off]"
    }
}

fn gibbs_reduction() -> Verdict {
    let f = TestFunction::F5;
    let case = f.case();
    let n = 50;
    let data = sample_at_nodes(f, case.kind, n).unwrap();
    let ts: Vec<f64> = (0..=20_000)
        .map(|i| (0.05 + 0.95 * i as f64 / 20_000.0f64).acos())
        .collect();
    let grid = EvaluationGrid::from_points(ts).unwrap();
    let lag = vp_interpolate(case.kind, VpParams::lagrange(n).unwrap(), &data).unwrap();
    let lag_err = weighted_sup_error(&lag, |x| f.value(x), case.weight, &grid).unwrap();
    let errs: Vec<f64> = [0.2, 0.4, 0.6, 0.8]
        .iter()
        .map(|&th| {
            let v = vp_interpolate(case.kind, VpParams::from_theta(n, th).unwrap(), &data).unwrap();
            weighted_sup_error(&v, |x| f.value(x), case.weight, &grid).unwrap()
        })
        .collect();
    let decreasing = errs.windows(2).all(|w| w[1] < w[0]);
    let below = errs[1..].iter().all(|&e| e < lag_err);
    verdict(
        decreasing && below,
        format!(
            "vp max error {} for theta 0.2..0.8, lagrange {lag_err:.3e}",
            errs.iter().map(|e| format!("{e:.3e}")).collect::<Vec<_>>().join(" > ")
        ),
    )
}

fn oracle_equivalence() -> Verdict {
    let params = VpParams::new(40, 13).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let mut worst = 0.0f64;
    for kind in ChebyshevKind::ALL {
        let data: Vec<f64> = (0..40).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let v = vp_interpolate(kind, params, &data).unwrap();
        for _ in 0..200 {
            let t = rng.gen_range(0.0..PI);
            let naive: f64 = (0..40)
                .map(|k| data[k] * fundamental_vp_sum(kind, params, k, t).unwrap())
                .sum();
            worst = worst.max((v.evaluate(t) - naive).abs());
        }
    }
    verdict(
        worst < ORACLE_TOL,
        format!("max |evaluate - naive sum| = {worst:.2e} (tol {ORACLE_TOL:.0e})"),
    )
}

fn rate_check() -> Verdict {
    let ns = [50usize, 150, 250, 350, 450];
    let pts: Vec<(f64, f64)> = ns
        .par_iter()
        .map(|&n| {
            let e = error_row(TestFunction::F1, n, LC_GRID).unwrap().vp;
            ((n as f64).ln(), e.ln())
        })
        .collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let slope = sxy / sxx;
    verdict(
        (SLOPE_RANGE.0..=SLOPE_RANGE.1).contains(&slope),
        format!(
            "least-squares slope {slope:.3} (range [{}, {}])",
            SLOPE_RANGE.0, SLOPE_RANGE.1
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("interpolation delta property", delta_property),
        ("invariance sharpness", invariance_sharpness),
        ("representation equivalence", representation_equivalence),
        ("sup Lebesgue constant table", table_reproduction),
        ("error tables", error_tables),
        ("boundedness dichotomy", boundedness_dichotomy),
        ("Gibbs reduction", gibbs_reduction),
        ("oracle equivalence", oracle_equivalence),
        ("rate check", rate_check),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = check();
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!(
            "{status} [{}] {name}: {} ({:.1}s)",
            i + 1,
            v.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!v.pass);
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
