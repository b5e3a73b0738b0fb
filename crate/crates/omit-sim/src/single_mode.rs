//! Independently coded single-cavity transparency model, used as a
//! regression reference for the two-mode response in the `E_R = 0`,
//! `g_2 = 0` limit. Nothing here calls into [`crate::response`] or
//! [`crate::steady_state`]; the whole chain (photon number, mechanical
//! denominator, transmission) is written out on its own.

use crate::error::{Error, Result};
use crate::model::{drive_amplitude, DriveConfig, SystemParams};
use num_complex::Complex64;

/// Single-cavity pump photon number from its own damped fixed point
/// `n = kappa_e E² / (kappa² + (delta - 2 g² n / omega_m)²)`.
pub fn photon_number(params: &SystemParams, drive: &DriveConfig) -> Result<f64> {
    drive.validate_lasers(params)?;
    let e_l = drive_amplitude(drive.p_left(), params.kappa_1(), drive.omega_laser_left(params))?;
    let s = params.kappa_e1() * e_l * e_l;
    if s == 0.0 {
        return Ok(0.0);
    }
    let kappa_sq = params.kappa_1() * params.kappa_1();
    let shift = 2.0 * params.g_1() * params.g_1() / params.omega_m();
    let f = |n: f64| {
        let d = drive.delta_1() - shift * n;
        s / (kappa_sq + d * d)
    };
    let mut n = f(0.0);
    let mut res = f64::INFINITY;
    for _ in 0..10_000 {
        let fx = f(n);
        res = (n - fx).abs() / fx.max(n).max(1e-300);
        if res <= 1e-13 {
            return Ok(n);
        }
        n = 0.5 * (n + fx);
    }
    Err(Error::Convergence {
        residual: res,
        iterations: 10_000,
    })
}

/// Closed-form single-cavity probe transmission at beat frequency `delta`,
/// given the solved pump photon number `n`:
///
/// ```text
/// t = 1 - kappa_e / D + i g² n kappa_e / (d(delta) D²)
/// D = kappa + i(delta_eff - delta)
/// d(delta) = 2 delta_eff g² n / ((kappa - i delta)² + delta_eff²)
///            - (omega_m² - delta² - i delta gamma_m)/omega_m
/// delta_eff = delta_1 - 2 g² n / omega_m
/// ```
pub fn transmission_formula(
    params: &SystemParams,
    drive: &DriveConfig,
    n: f64,
    delta: f64,
) -> Complex64 {
    let kappa = params.kappa_1();
    let kappa_e = params.kappa_e1();
    let g = params.g_1();
    let om = params.omega_m();
    let gamma_m = params.gamma_m();
    let delta_eff = drive.delta_1() - 2.0 * g * g * n / om;

    let filter = Complex64::new(kappa, delta_eff - delta);
    if n == 0.0 || g == 0.0 {
        return 1.0 - kappa_e / filter;
    }
    let cavity_term = 2.0 * delta_eff * g * g * n
        / Complex64::new(
            kappa * kappa + (delta_eff - delta) * (delta_eff + delta),
            -2.0 * kappa * delta,
        );
    let mech_term = Complex64::new(
        (om - delta) * (om + delta) / om,
        -delta * gamma_m / om,
    );
    let d = cavity_term - mech_term;
    1.0 - kappa_e / filter + Complex64::i() * g * g * n * kappa_e / (d * filter * filter)
}

/// Photon number and transmission in one call (convenience for sweeps).
pub fn transmission(params: &SystemParams, drive: &DriveConfig, delta: f64) -> Result<Complex64> {
    let n = photon_number(params, drive)?;
    Ok(transmission_formula(params, drive, n, delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{delta_probe_to_delta, default_device_params};

    #[test]
    fn unpumped_formula_is_bare_lorentzian_dip() {
        let p = default_device_params();
        let d = DriveConfig::red_red(&p, 0.0, 0.0, 0.0).unwrap();
        let n = photon_number(&p, &d).unwrap();
        assert_eq!(n, 0.0);
        let t = transmission_formula(&p, &d, n, delta_probe_to_delta(0.0, d.delta_1()));
        assert!((t.re - 0.8).abs() <= 1e-12);
        assert!(t.im.abs() <= 1e-12);
        // far off resonance the dip closes
        let t_far = transmission_formula(
            &p,
            &d,
            n,
            delta_probe_to_delta(500.0 * p.kappa_1(), d.delta_1()),
        );
        assert!((t_far - Complex64::ONE).norm() < 1e-3);
    }

    #[test]
    fn window_depth_grows_monotonically_with_cooperativity() {
        // sweep C_1 over [0.1, 100] by varying n directly; the transmission
        // at the window center must increase monotonically
        let p = default_device_params();
        let d = DriveConfig::red_red(&p, 1e-6, 0.0, 0.0).unwrap();
        let delta = delta_probe_to_delta(0.0, d.delta_1());
        let mut last = f64::NEG_INFINITY;
        for k in 0..=60 {
            let c1 = 0.1 * 10f64.powf(k as f64 / 20.0);
            let n = c1 * p.kappa_1() * p.gamma_m() / (p.g_1() * p.g_1());
            let t = transmission_formula(&p, &d, n, delta).norm();
            assert!(
                t > last,
                "|t| at window center must grow with C_1; C_1={c1}, |t|={t}, prev={last}"
            );
            last = t;
        }
    }

    #[test]
    fn photon_number_matches_undressed_value_at_weak_coupling() {
        let p = default_device_params();
        let d = DriveConfig::red_red(&p, 1e-6, 0.0, 0.0).unwrap();
        let n = photon_number(&p, &d).unwrap();
        let e_l = drive_amplitude(d.p_left(), p.kappa_1(), d.omega_laser_left(&p)).unwrap();
        let undressed =
            p.kappa_e1() * e_l * e_l / (p.kappa_1() * p.kappa_1() + d.delta_1() * d.delta_1());
        // the static shift is small at default couplings but not zero
        assert!((n - undressed).abs() / undressed < 2e-2);
        assert!(n != undressed);
    }
}
