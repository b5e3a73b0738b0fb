#![allow(dead_code)] // each integration target compiles its own copy

//! Shared oracles for the integration and acceptance suites. Everything in
//! here re-derives its physics from the model equations directly and stays
//! independent of the solver / response implementation paths it checks.

use omit_sim::model::{drive_amplitude, DriveConfig, SystemParams};
use omit_sim::response::ResponseChannel;
use omit_sim::steady_state::SteadyState;
use omit_sim::{reflection, transmission};

/// Deterministic 64-bit LCG (Knuth constants) for reproducible draws.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    /// Uniform in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform scale factor in [0.5, 1.5] (a ±50% draw).
    pub fn half_to_threehalves(&mut self) -> f64 {
        0.5 + self.uniform()
    }
}

/// Squared drive strengths kappa_e E² from first principles.
pub fn strengths(params: &SystemParams, drive: &DriveConfig) -> (f64, f64) {
    let e_l = drive_amplitude(drive.p_left(), params.kappa_1(), drive.omega_laser_left(params))
        .expect("valid drive");
    let e_r = drive_amplitude(drive.p_right(), params.kappa_2(), drive.omega_laser_right(params))
        .expect("valid drive");
    (
        params.kappa_e1() * e_l * e_l,
        params.kappa_e2() * e_r * e_r,
    )
}

/// Max relative residual of the coupled photon-number equations at (n1, n2),
/// written out from the steady-state relations (plus-sign displacement).
pub fn photon_residual(params: &SystemParams, drive: &DriveConfig, n_1: f64, n_2: f64) -> f64 {
    let (s_1, s_2) = strengths(params, drive);
    let q_s = 2.0 / params.omega_m() * (params.g_1() * n_1 + params.g_2() * n_2);
    let d1 = drive.delta_1() - params.g_1() * q_s;
    let d2 = drive.delta_2() - params.g_2() * q_s;
    let f_1 = s_1 / (params.kappa_1() * params.kappa_1() + d1 * d1);
    let f_2 = s_2 / (params.kappa_2() * params.kappa_2() + d2 * d2);
    let r1 = (n_1 - f_1).abs() / f_1.max(n_1).max(1e-300);
    let r2 = (n_2 - f_2).abs() / f_2.max(n_2).max(1e-300);
    r1.max(r2)
}

/// Brute-force steady-state oracle, independent of the solver.
///
/// The coupled photon-number equations reduce exactly to a scalar root
/// problem in the static displacement `y = q_s`:
///
/// ```text
/// h(y) = y - (2/omega_m) (g_1 n_1(y) + g_2 n_2(y)) = 0
/// n_k(y) = s_k / (kappa_k² + (delta_k - g_k y)²)
/// ```
///
/// A dense grid scan over `[y_lo, y_hi]` brackets every sign change of
/// `h`; bisection refines each bracket to machine precision. The smallest
/// root is the zero-power-connected branch. A coarse 2-D residual scan
/// cross-checks that the reduction did not miss anything away from the
/// returned curve.
pub fn grid_scan_oracle(params: &SystemParams, drive: &DriveConfig) -> (f64, f64) {
    let (s_1, s_2) = strengths(params, drive);
    let n1_max = s_1 / (params.kappa_1() * params.kappa_1());
    let n2_max = s_2 / (params.kappa_2() * params.kappa_2());
    let n_of = |y: f64| {
        let d1 = drive.delta_1() - params.g_1() * y;
        let d2 = drive.delta_2() - params.g_2() * y;
        (
            s_1 / (params.kappa_1() * params.kappa_1() + d1 * d1),
            s_2 / (params.kappa_2() * params.kappa_2() + d2 * d2),
        )
    };
    let h = |y: f64| {
        let (n_1, n_2) = n_of(y);
        y - 2.0 / params.omega_m() * (params.g_1() * n_1 + params.g_2() * n_2)
    };

    let y_hi = 2.0 / params.omega_m() * (params.g_1() * n1_max + params.g_2() * n2_max);
    if y_hi == 0.0 {
        return (0.0, 0.0);
    }
    // negative detunings can pull y below zero; cover both signs
    let y_lo = -y_hi;
    let cells = 200_000usize;
    let mut root: Option<f64> = None;
    let mut prev_y = y_lo;
    let mut prev_h = h(y_lo);
    for i in 1..=cells {
        let y = y_lo + (y_hi - y_lo) * i as f64 / cells as f64;
        let hy = h(y);
        if prev_h == 0.0 {
            root = Some(prev_y);
            break;
        }
        if (prev_h < 0.0) != (hy < 0.0) {
            // bisection refinement
            let (mut a, mut b) = (prev_y, y);
            let mut ha = prev_h;
            for _ in 0..200 {
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
            root = Some(0.5 * (a + b));
            break; // smallest root = zero-connected branch
        }
        prev_y = y;
        prev_h = hy;
    }
    let y = root.expect("displacement root bracket not found");
    let (n_1, n_2) = n_of(y);

    // cross-check on the 2-D residual surface
    let res = photon_residual(params, drive, n_1, n_2);
    assert!(
        res <= 1e-9,
        "oracle root failed the 2-D residual cross-check: {res:e}"
    );
    (n_1, n_2)
}

/// Real roots of `c3 x³ + c2 x² + c1 x + c0 = 0` via the trigonometric /
/// Cardano method, returned sorted. Used as the decoupled-cavity branch
/// oracle.
pub fn cubic_roots(c3: f64, c2: f64, c1: f64, c0: f64) -> Vec<f64> {
    assert!(c3 != 0.0);
    let a = c2 / c3;
    let b = c1 / c3;
    let c = c0 / c3;
    // depressed cubic t³ + p t + q with x = t - a/3
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    let disc = q * q / 4.0 + p * p * p / 27.0;
    let mut roots = if disc > 0.0 {
        let s = disc.sqrt();
        let u = (-q / 2.0 + s).cbrt();
        let v = (-q / 2.0 - s).cbrt();
        vec![u + v + shift]
    } else if disc == 0.0 {
        let u = (-q / 2.0).cbrt();
        vec![2.0 * u + shift, -u + shift]
    } else {
        let r = (-p * p * p / 27.0).sqrt();
        let phi = (-q / (2.0 * r)).acos();
        let m = 2.0 * (-p / 3.0).sqrt();
        (0..3)
            .map(|k| m * ((phi + 2.0 * std::f64::consts::PI * k as f64) / 3.0).cos() + shift)
            .collect()
    };
    roots.sort_by(f64::total_cmp);
    roots
}

/// Group delay via the unwrapped-phase finite difference (the route the
/// complex-logarithmic derivative is checked against).
pub fn phase_difference_delay(
    params: &SystemParams,
    steady: &SteadyState,
    delta: f64,
    which: ResponseChannel,
    step: f64,
) -> f64 {
    let eval = |d: f64| match which {
        ResponseChannel::Transmission => transmission(params, steady, d),
        ResponseChannel::Reflection => reflection(params, steady, d),
    };
    let d_plus = delta + step;
    let d_minus = delta - step;
    let mut dphi = eval(d_plus).arg() - eval(d_minus).arg();
    // unwrap across the branch cut
    while dphi > std::f64::consts::PI {
        dphi -= 2.0 * std::f64::consts::PI;
    }
    while dphi < -std::f64::consts::PI {
        dphi += 2.0 * std::f64::consts::PI;
    }
    dphi / (d_plus - d_minus)
}

/// Convenience: relative deviation |a-b| / max(|a|,|b|).
pub fn rel_dev(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}
