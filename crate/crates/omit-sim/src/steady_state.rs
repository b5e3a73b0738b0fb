//! Self-consistent pump photon numbers and static mechanical displacement.
//!
//! The two intracavity pump photon numbers obey the coupled equations
//!
//! ```text
//! n_1 = kappa_e1 E_L² / (kappa_1² + delta_1_eff²)
//! n_2 = kappa_e2 E_R² / (kappa_2² + delta_2_eff²)
//! delta_k_eff = delta_k - g_k q_s,   q_s = (2/omega_m)(g_1 n_1 + g_2 n_2)
//! ```
//!
//! with the plus sign in `q_s` as the default: both radiation pressures push
//! the same mechanical coordinate. A minus variant (`g_1 n_1 - g_2 n_2`) is
//! selectable through [`QsSign`] for comparison runs.

use crate::error::{Error, Result};
use crate::model::{drive_amplitude, DriveConfig, SystemParams};

/// Sign convention for the static displacement entering the effective
/// detunings. `Plus` is the default; `Minus` evaluates the difference form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QsSign {
    #[default]
    Plus,
    Minus,
}

impl QsSign {
    fn factor(self) -> f64 {
        match self {
            QsSign::Plus => 1.0,
            QsSign::Minus => -1.0,
        }
    }
}

/// Solver controls. Defaults: relative tolerance 1e-12, at most 10 000
/// damped fixed-point iterations, plus-sign displacement, 32×32 branch scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub tol: f64,
    pub max_iter: usize,
    pub qs_sign: QsSign,
    pub scan_resolution: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iter: 10_000,
            qs_sign: QsSign::Plus,
            scan_resolution: 32,
        }
    }
}

/// Converged steady state of the pumped system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    /// Mean intracavity pump photon number of the left cavity.
    pub n_1: f64,
    /// Mean intracavity pump photon number of the right cavity.
    pub n_2: f64,
    /// Static dimensionless mechanical displacement.
    pub q_s: f64,
    /// Effective detuning delta_1 - g_1 q_s, rad/s.
    pub delta_1_eff: f64,
    /// Effective detuning delta_2 - g_2 q_s, rad/s.
    pub delta_2_eff: f64,
    /// Max relative residual of the two fixed-point equations.
    pub residual: f64,
    /// Number of distinct fixed points found by the branch scan.
    pub branch_count: usize,
}

/// Squared drive strengths kappa_e E² entering the photon-number equations.
#[derive(Debug, Clone, Copy)]
struct Strengths {
    s_1: f64,
    s_2: f64,
}

fn strengths(params: &SystemParams, drive: &DriveConfig) -> Result<Strengths> {
    drive.validate_lasers(params)?;
    let e_l = drive_amplitude(drive.p_left(), params.kappa_1(), drive.omega_laser_left(params))?;
    let e_r = drive_amplitude(drive.p_right(), params.kappa_2(), drive.omega_laser_right(params))?;
    Ok(Strengths {
        s_1: params.kappa_e1() * e_l * e_l,
        s_2: params.kappa_e2() * e_r * e_r,
    })
}

/// One application of the fixed-point map (n_1, n_2) -> (n_1', n_2').
fn apply_map(
    params: &SystemParams,
    drive: &DriveConfig,
    s: Strengths,
    sign: QsSign,
    n_1: f64,
    n_2: f64,
) -> (f64, f64) {
    let q_s = 2.0 / params.omega_m() * (params.g_1() * n_1 + sign.factor() * params.g_2() * n_2);
    let d1 = drive.delta_1() - params.g_1() * q_s;
    let d2 = drive.delta_2() - params.g_2() * q_s;
    (
        s.s_1 / (params.kappa_1() * params.kappa_1() + d1 * d1),
        s.s_2 / (params.kappa_2() * params.kappa_2() + d2 * d2),
    )
}

fn residual_rel(n_1: f64, n_2: f64, f_1: f64, f_2: f64) -> f64 {
    let r1 = (n_1 - f_1).abs() / f_1.max(n_1).max(1e-300);
    let r2 = (n_2 - f_2).abs() / f_2.max(n_2).max(1e-300);
    r1.max(r2)
}

/// Damped fixed-point iteration n <- (1-alpha) n + alpha F(n), alpha = 0.5.
/// Returns (n_1, n_2, residual, iterations used).
#[allow(clippy::too_many_arguments)]
fn damped_fixed_point(
    params: &SystemParams,
    drive: &DriveConfig,
    s: Strengths,
    sign: QsSign,
    mut n_1: f64,
    mut n_2: f64,
    tol: f64,
    max_iter: usize,
) -> (f64, f64, f64, usize) {
    const ALPHA: f64 = 0.5;
    let mut res = f64::INFINITY;
    let mut best = (n_1, n_2, res);
    for it in 0..max_iter {
        let (f_1, f_2) = apply_map(params, drive, s, sign, n_1, n_2);
        res = residual_rel(n_1, n_2, f_1, f_2);
        if res < best.2 {
            best = (n_1, n_2, res);
        }
        if res <= tol {
            return (n_1, n_2, res, it);
        }
        n_1 = (1.0 - ALPHA) * n_1 + ALPHA * f_1;
        n_2 = (1.0 - ALPHA) * n_2 + ALPHA * f_2;
    }
    (best.0, best.1, best.2, max_iter)
}

/// Newton polish on the residual R(n) = n - F(n) with an analytic 2×2
/// Jacobian. Steps are clamped to keep photon numbers non-negative.
#[allow(clippy::too_many_arguments)]
fn newton_polish(
    params: &SystemParams,
    drive: &DriveConfig,
    s: Strengths,
    sign: QsSign,
    mut n_1: f64,
    mut n_2: f64,
    tol: f64,
    max_iter: usize,
) -> (f64, f64, f64) {
    let g1 = params.g_1();
    let g2 = params.g_2();
    let sgn = sign.factor();
    let om = params.omega_m();
    let k1sq = params.kappa_1() * params.kappa_1();
    let k2sq = params.kappa_2() * params.kappa_2();

    let mut best = (n_1, n_2, f64::INFINITY);
    for _ in 0..max_iter {
        let q_s = 2.0 / om * (g1 * n_1 + sgn * g2 * n_2);
        let d1 = drive.delta_1() - g1 * q_s;
        let d2 = drive.delta_2() - g2 * q_s;
        let den1 = k1sq + d1 * d1;
        let den2 = k2sq + d2 * d2;
        let f_1 = s.s_1 / den1;
        let f_2 = s.s_2 / den2;
        let res = residual_rel(n_1, n_2, f_1, f_2);
        if res < best.2 {
            best = (n_1, n_2, res);
        }
        if res <= tol {
            return (n_1, n_2, res);
        }

        // dF_k/dn_j = F_k * (-2 d_k) * dd_k/dn_j / den_k
        let dd1_dn1 = -2.0 * g1 * g1 / om;
        let dd1_dn2 = -2.0 * sgn * g1 * g2 / om;
        let dd2_dn1 = -2.0 * g2 * g1 / om;
        let dd2_dn2 = -2.0 * sgn * g2 * g2 / om;
        let df1_dn1 = -f_1 * 2.0 * d1 * dd1_dn1 / den1;
        let df1_dn2 = -f_1 * 2.0 * d1 * dd1_dn2 / den1;
        let df2_dn1 = -f_2 * 2.0 * d2 * dd2_dn1 / den2;
        let df2_dn2 = -f_2 * 2.0 * d2 * dd2_dn2 / den2;

        // J = I - F'
        let j11 = 1.0 - df1_dn1;
        let j12 = -df1_dn2;
        let j21 = -df2_dn1;
        let j22 = 1.0 - df2_dn2;
        let det = j11 * j22 - j12 * j21;
        if det.abs() < 1e-300 {
            break;
        }
        let r1 = n_1 - f_1;
        let r2 = n_2 - f_2;
        let dn1 = (j22 * r1 - j12 * r2) / det;
        let dn2 = (j11 * r2 - j21 * r1) / det;
        n_1 = (n_1 - dn1).max(0.0);
        n_2 = (n_2 - dn2).max(0.0);
    }
    best
}

fn build_state(
    params: &SystemParams,
    drive: &DriveConfig,
    sign: QsSign,
    n_1: f64,
    n_2: f64,
    residual: f64,
    branch_count: usize,
) -> SteadyState {
    let q_s = 2.0 / params.omega_m() * (params.g_1() * n_1 + sign.factor() * params.g_2() * n_2);
    SteadyState {
        n_1,
        n_2,
        q_s,
        delta_1_eff: drive.delta_1() - params.g_1() * q_s,
        delta_2_eff: drive.delta_2() - params.g_2() * q_s,
        residual,
        branch_count,
    }
}

/// All distinct fixed points of the photon-number map, found by a coarse
/// scan over `[0, n_1_max] × [0, n_2_max]` followed by Newton refinement,
/// sorted by `n_1`. Never fails: with zero drive the trivial branch is
/// returned; if no candidate refines below 1e-9 the best candidates found
/// are returned with their residuals.
pub fn scan_branches(
    params: &SystemParams,
    drive: &DriveConfig,
    grid_resolution: usize,
    opts: &SolverOptions,
) -> Result<Vec<SteadyState>> {
    if grid_resolution < 16 {
        return Err(Error::invalid(
            "grid_resolution",
            format!("branch scan needs at least 16 cells per axis, got {grid_resolution}"),
        ));
    }
    let s = strengths(params, drive)?;
    let newton_budget = opts.max_iter.min(60);
    Ok(scan_branches_inner(
        params,
        drive,
        s,
        opts.qs_sign,
        grid_resolution,
        newton_budget,
    ))
}

fn scan_branches_inner(
    params: &SystemParams,
    drive: &DriveConfig,
    s: Strengths,
    sign: QsSign,
    grid_resolution: usize,
    newton_budget: usize,
) -> Vec<SteadyState> {
    // undressed maxima bound the invariant region: F_k <= s_k / kappa_k²
    let n1_max = s.s_1 / (params.kappa_1() * params.kappa_1());
    let n2_max = s.s_2 / (params.kappa_2() * params.kappa_2());

    let mut roots: Vec<(f64, f64, f64)> = Vec::new();
    let mut best_fail: Option<(f64, f64, f64)> = None;
    let steps = grid_resolution;
    for i in 0..=steps {
        for j in 0..=steps {
            let n1_start = n1_max * i as f64 / steps as f64;
            let n2_start = n2_max * j as f64 / steps as f64;
            let (n_1, n_2, res) =
                newton_polish(params, drive, s, sign, n1_start, n2_start, 1e-13, newton_budget);
            if res <= 1e-9 {
                let dup = roots.iter().any(|&(a, b, _)| {
                    close_rel(a, n_1, 1e-6, n1_max) && close_rel(b, n_2, 1e-6, n2_max)
                });
                if !dup {
                    roots.push((n_1, n_2, res));
                }
            } else if best_fail.is_none_or(|(_, _, r)| res < r) {
                best_fail = Some((n_1, n_2, res));
            }
        }
    }
    if roots.is_empty() {
        if let Some(b) = best_fail {
            roots.push(b);
        } else {
            roots.push((0.0, 0.0, 0.0));
        }
    }
    roots.sort_by(|a, b| a.0.total_cmp(&b.0));
    let count = roots.len();
    roots
        .into_iter()
        .map(|(n_1, n_2, res)| build_state(params, drive, sign, n_1, n_2, res, count))
        .collect()
}

fn close_rel(a: f64, b: f64, tol: f64, scale: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-9 * scale.max(1e-300))
}

/// Every fixed point of the 2-D photon-number map corresponds to a root of
/// the scalar displacement equation
/// `h(y) = y - (2/omega_m)(g_1 n_1(y) ± g_2 n_2(y))` with
/// `n_k(y) = s_k/(kappa_k² + (delta_k - g_k y)²)`. A dense grid plus
/// bisection finds all roots cheaply; used for branch counting and for the
/// zero-power-connected starting point (the root closest to zero).
fn displacement_roots(
    params: &SystemParams,
    drive: &DriveConfig,
    s: Strengths,
    sign: QsSign,
    bisection_depth: usize,
) -> Vec<f64> {
    let g1 = params.g_1();
    let g2 = params.g_2();
    let sgn = sign.factor();
    let k1sq = params.kappa_1() * params.kappa_1();
    let k2sq = params.kappa_2() * params.kappa_2();
    let om = params.omega_m();
    let h = |y: f64| {
        let d1 = drive.delta_1() - g1 * y;
        let d2 = drive.delta_2() - g2 * y;
        let n_1 = s.s_1 / (k1sq + d1 * d1);
        let n_2 = s.s_2 / (k2sq + d2 * d2);
        y - 2.0 / om * (g1 * n_1 + sgn * g2 * n_2)
    };
    let reach = 2.0 / om * (g1 * s.s_1 / k1sq + g2 * s.s_2 / k2sq);
    if reach == 0.0 {
        return vec![0.0];
    }
    let (y_lo, y_hi) = (-reach, reach);
    let cells = 4096usize;
    let mut roots = Vec::new();
    let mut prev_y = y_lo;
    let mut prev_h = h(y_lo);
    for i in 1..=cells {
        let y = y_lo + (y_hi - y_lo) * i as f64 / cells as f64;
        let hy = h(y);
        if (prev_h < 0.0) != (hy < 0.0) || prev_h == 0.0 {
            let (mut a, mut b, mut ha) = (prev_y, y, prev_h);
            for _ in 0..bisection_depth {
                let m = 0.5 * (a + b);
                let hm = h(m);
                if hm == 0.0 {
                    a = m;
                    b = m;
                    break;
                }
                if (ha < 0.0) != (hm < 0.0) {
                    b = m;
                } else {
                    a = m;
                    ha = hm;
                }
            }
            roots.push(0.5 * (a + b));
        }
        prev_y = y;
        prev_h = hy;
    }
    if roots.is_empty() {
        roots.push(0.0);
    }
    roots
}

/// Solves the coupled photon-number equations.
///
/// The returned branch is the one continuously connected to the zero-power
/// solution (a continuation ramp in pump power is used whenever the branch
/// scan finds more than one fixed point). Fails with
/// [`Error::Convergence`] if no candidate reaches the requested tolerance.
pub fn solve_steady_state(
    params: &SystemParams,
    drive: &DriveConfig,
    opts: &SolverOptions,
) -> Result<SteadyState> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::invalid("tol", "tolerance must be positive"));
    }
    if opts.max_iter < 1 {
        return Err(Error::invalid("max_iter", "need at least one iteration"));
    }
    let s = strengths(params, drive)?;
    let sign = opts.qs_sign;

    if s.s_1 == 0.0 && s.s_2 == 0.0 {
        return Ok(build_state(params, drive, sign, 0.0, 0.0, 0.0, 1));
    }

    // iteration budgets for the polish phases scale with max_iter so a tight
    // budget genuinely limits the total effort
    let newton_budget = opts.max_iter.min(200);

    // every 2-D fixed point corresponds to a displacement root; the root
    // closest to zero is the branch an adiabatic power ramp reaches
    let roots = displacement_roots(params, drive, s, sign, opts.max_iter.min(120));
    let branch_count = roots.len();
    let y0 = roots
        .iter()
        .copied()
        .min_by(|a, b| a.abs().total_cmp(&b.abs()))
        .unwrap_or(0.0);
    let d1 = drive.delta_1() - params.g_1() * y0;
    let d2 = drive.delta_2() - params.g_2() * y0;
    let init_1 = s.s_1 / (params.kappa_1() * params.kappa_1() + d1 * d1);
    let init_2 = s.s_2 / (params.kappa_2() * params.kappa_2() + d2 * d2);

    let (mut n_1, mut n_2, mut res, _) = damped_fixed_point(
        params,
        drive,
        s,
        sign,
        init_1,
        init_2,
        opts.tol,
        opts.max_iter,
    );
    if res > opts.tol {
        let polished = newton_polish(params, drive, s, sign, n_1, n_2, opts.tol, newton_budget);
        (n_1, n_2, res) = polished;
    }
    if res > opts.tol {
        return Err(Error::Convergence {
            residual: res,
            iterations: opts.max_iter,
        });
    }
    // guard against the damped iteration drifting to a different branch in
    // multivalued configurations
    if branch_count > 1 {
        let q_here = 2.0 / params.omega_m()
            * (params.g_1() * n_1 + sign.factor() * params.g_2() * n_2);
        let nearest = roots
            .iter()
            .copied()
            .min_by(|a, b| (a - q_here).abs().total_cmp(&(b - q_here).abs()))
            .unwrap_or(y0);
        if nearest != y0 {
            // re-polish from the zero-connected root without damping drift
            let (a, b, r) =
                newton_polish(params, drive, s, sign, init_1, init_2, opts.tol, newton_budget);
            if r <= opts.tol {
                (n_1, n_2, res) = (a, b, r);
            }
        }
    }
    Ok(build_state(params, drive, sign, n_1, n_2, res, branch_count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::default_device_params;

    fn default_drive(p_left: f64, p_right: f64) -> (SystemParams, DriveConfig) {
        let p = default_device_params();
        let d = DriveConfig::red_red(&p, p_left, p_right, 1e-9).unwrap();
        (p, d)
    }

    #[test]
    fn zero_drive_gives_trivial_branch() {
        let (p, d) = default_drive(0.0, 0.0);
        let st = solve_steady_state(&p, &d, &SolverOptions::default()).unwrap();
        assert_eq!(st.n_1, 0.0);
        assert_eq!(st.n_2, 0.0);
        assert_eq!(st.q_s, 0.0);
        assert_eq!(st.delta_1_eff, d.delta_1());
        assert_eq!(st.delta_2_eff, d.delta_2());
        assert_eq!(st.residual, 0.0);
        assert_eq!(st.branch_count, 1);
    }

    #[test]
    fn decoupled_cavities_match_lorentzian_closed_form() {
        let p = default_device_params().with_couplings(0.0, 0.0).unwrap();
        let d = DriveConfig::red_red(&p, 2.3e-6, 0.7e-6, 0.0).unwrap();
        let st = solve_steady_state(&p, &d, &SolverOptions::default()).unwrap();

        let e_l = drive_amplitude(d.p_left(), p.kappa_1(), d.omega_laser_left(&p)).unwrap();
        let n1_expect =
            p.kappa_e1() * e_l * e_l / (p.kappa_1() * p.kappa_1() + d.delta_1() * d.delta_1());
        let e_r = drive_amplitude(d.p_right(), p.kappa_2(), d.omega_laser_right(&p)).unwrap();
        let n2_expect =
            p.kappa_e2() * e_r * e_r / (p.kappa_2() * p.kappa_2() + d.delta_2() * d.delta_2());
        assert!((st.n_1 - n1_expect).abs() <= 1e-12 * n1_expect);
        assert!((st.n_2 - n2_expect).abs() <= 1e-12 * n2_expect);
        assert_eq!(st.q_s, 0.0);
    }

    #[test]
    fn solution_satisfies_self_consistency() {
        let (p, d) = default_drive(1e-6, 0.1e-6);
        let opts = SolverOptions::default();
        let st = solve_steady_state(&p, &d, &opts).unwrap();
        assert!(st.residual <= opts.tol, "residual {}", st.residual);
        // q_s relation
        let q = 2.0 / p.omega_m() * (p.g_1() * st.n_1 + p.g_2() * st.n_2);
        assert!((st.q_s - q).abs() <= 1e-10 * q.abs().max(1e-300));
        // effective detunings are exact by construction
        assert_eq!(st.delta_1_eff, d.delta_1() - p.g_1() * st.q_s);
        assert_eq!(st.delta_2_eff, d.delta_2() - p.g_2() * st.q_s);
        assert_eq!(st.branch_count, 1);
    }

    #[test]
    fn steady_state_independent_of_probe_power() {
        let p = default_device_params();
        let d1 = DriveConfig::red_red(&p, 1e-6, 1e-7, 1e-12).unwrap();
        let d2 = d1.with_p_probe(5e-6).unwrap();
        let opts = SolverOptions::default();
        let a = solve_steady_state(&p, &d1, &opts).unwrap();
        let b = solve_steady_state(&p, &d2, &opts).unwrap();
        assert_eq!(a.n_1.to_bits(), b.n_1.to_bits());
        assert_eq!(a.n_2.to_bits(), b.n_2.to_bits());
        assert_eq!(a.q_s.to_bits(), b.q_s.to_bits());
    }

    #[test]
    fn left_pump_off_reduces_to_single_cavity() {
        let p = default_device_params();
        let opts = SolverOptions::default();
        // n_2 with the left pump off
        let d0 = DriveConfig::red_red(&p, 0.0, 0.1e-6, 0.0).unwrap();
        let base = solve_steady_state(&p, &d0, &opts).unwrap();
        assert_eq!(base.n_1, 0.0);
        assert!(base.n_2 > 0.0);

        // as p_left -> 0, n_1 -> 0 monotonically and n_2 -> its single-cavity value
        let mut prev_n1 = f64::INFINITY;
        for exp in 1..=6 {
            let d = d0.with_p_left(1e-6 * 10f64.powi(-exp)).unwrap();
            let st = solve_steady_state(&p, &d, &opts).unwrap();
            assert!(st.n_1 < prev_n1);
            prev_n1 = st.n_1;
        }
        let tiny = solve_steady_state(&p, &d0.with_p_left(1e-18).unwrap(), &opts).unwrap();
        assert!((tiny.n_2 - base.n_2).abs() <= 1e-6 * base.n_2);
    }

    #[test]
    fn qs_sign_variants_differ_when_both_pumps_on() {
        let (p, d) = default_drive(1e-6, 1e-6);
        let plus = solve_steady_state(&p, &d, &SolverOptions::default()).unwrap();
        let minus = solve_steady_state(
            &p,
            &d,
            &SolverOptions {
                qs_sign: QsSign::Minus,
                ..SolverOptions::default()
            },
        )
        .unwrap();
        assert!(plus.q_s > minus.q_s);
    }

    #[test]
    fn scan_finds_single_branch_at_default_powers() {
        let opts = SolverOptions::default();
        for p_left in [0.0, 0.1e-6, 1e-6, 10e-6] {
            let (p, d) = default_drive(p_left, 0.1e-6);
            let branches = scan_branches(&p, &d, 24, &opts).unwrap();
            assert_eq!(branches.len(), 1, "P_L = {p_left:e}");
        }
    }

    #[test]
    fn bistable_drive_returns_zero_connected_branch() {
        // raise the left coupling until the red-detuned cubic is
        // multivalued; the solver must report the branch continuously
        // connected to zero power, i.e. the smallest photon number
        let p = default_device_params()
            .with_couplings(crate::model::hz_to_angular(1500.0), crate::model::hz_to_angular(90.0))
            .unwrap();
        let d = DriveConfig::red_red(&p, 10e-6, 0.1e-6, 1e-9).unwrap();
        let opts = SolverOptions::default();
        let branches = scan_branches(&p, &d, 32, &opts).unwrap();
        assert!(branches.len() > 1, "expected a multivalued steady state");
        for w in branches.windows(2) {
            assert!(w[0].n_1 < w[1].n_1, "branches must be sorted by n_1");
        }
        let st = solve_steady_state(&p, &d, &opts).unwrap();
        assert_eq!(st.branch_count, branches.len());
        let lowest = branches[0].n_1;
        assert!(
            (st.n_1 - lowest).abs() <= 1e-6 * lowest,
            "solver picked n_1 = {:e}, zero-connected branch has {:e}",
            st.n_1,
            lowest
        );
    }

    #[test]
    fn scan_rejects_coarse_grids() {
        let (p, d) = default_drive(1e-6, 1e-7);
        assert!(scan_branches(&p, &d, 8, &SolverOptions::default()).is_err());
    }

    #[test]
    fn zero_drive_scan_has_single_trivial_branch() {
        let (p, d) = default_drive(0.0, 0.0);
        let branches = scan_branches(&p, &d, 16, &SolverOptions::default()).unwrap();
        assert_eq!(branches.len(), 1);
        assert_eq!(branches[0].n_1, 0.0);
        assert_eq!(branches[0].n_2, 0.0);
    }

    #[test]
    fn exhausted_iteration_budget_reports_convergence_failure() {
        let (p, d) = default_drive(1e-6, 1e-7);
        let opts = SolverOptions {
            max_iter: 1,
            ..SolverOptions::default()
        };
        match solve_steady_state(&p, &d, &opts) {
            Err(Error::Convergence { residual, .. }) => {
                assert!(residual.is_finite());
                assert!(residual > opts.tol);
            }
            other => panic!("expected convergence failure, got {other:?}"),
        }
    }
}
