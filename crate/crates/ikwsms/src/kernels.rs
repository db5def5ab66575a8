//! The two fixed kernels of the estimator.
//!
//! `G` is the smooth stand-in for the indicator: a degree-7 polynomial spliced
//! between 0 (for `t <= -1`) and 1 (for `t >= 1`) whose derivative `G'` is a
//! fourth-order kernel on `[-1, 1]`. `K` is the eighth-order first-stage
//! kernel, a degree-6 polynomial times the standard normal density. Both are
//! stateless and safe to call concurrently.
//!
//! `G'` having order four means it integrates to one while its first three
//! moments vanish; the price is negative lobes, so `G` overshoots `[0, 1]`
//! inside `(-1, 1)`. `verify_moments` checks the moment conditions of either
//! kernel by composite Simpson quadrature.

use crate::error::{Error, Result};
use crate::quad::simpson;

/// Leading coefficient 105/64 shared by `G`, `G'`, and `G''`.
const C: f64 = 105.0 / 64.0;

/// Order of the kernel `G'`.
pub const SMOOTHING_ORDER: usize = 4;

/// Order of the first-stage kernel `K`.
pub const FIRST_STAGE_ORDER: usize = 8;

/// Quadrature support used for moments of `K`; the Gaussian tail mass
/// beyond 12 is below 1e-30.
const K_SUPPORT: f64 = 12.0;

fn check_finite(what: &'static str, t: f64) -> Result<()> {
    if t.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteInput { what, value: t })
    }
}

#[inline]
pub(crate) fn g_raw(t: f64) -> f64 {
    if t > 1.0 {
        1.0
    } else if t < -1.0 {
        0.0
    } else {
        let t2 = t * t;
        0.5 + C * t * (1.0 + t2 * (-5.0 / 3.0 + t2 * (7.0 / 5.0 - t2 * (3.0 / 7.0))))
    }
}

#[inline]
pub(crate) fn g_prime_raw(t: f64) -> f64 {
    if t.abs() > 1.0 {
        0.0
    } else {
        let t2 = t * t;
        C * (1.0 + t2 * (-5.0 + t2 * (7.0 - 3.0 * t2)))
    }
}

#[inline]
pub(crate) fn g_second_raw(t: f64) -> f64 {
    if t.abs() > 1.0 {
        0.0
    } else {
        let t2 = t * t;
        C * t * (-10.0 + t2 * (28.0 - 18.0 * t2))
    }
}

#[inline]
pub(crate) fn k_raw(t: f64) -> f64 {
    let t2 = t * t;
    let poly = (105.0 + t2 * (-105.0 + t2 * (21.0 - t2))) / 48.0;
    let phi = (-0.5 * t2).exp() / (2.0 * std::f64::consts::PI).sqrt();
    poly * phi
}

/// Smoothing function `G`: 0 below `-1`, 1 above `1`, and
/// `0.5 + (105/64)(t - (5/3)t^3 + (7/5)t^5 - (3/7)t^7)` in between.
pub fn smooth_g(t: f64) -> Result<f64> {
    check_finite("smooth_g", t)?;
    Ok(g_raw(t))
}

/// First derivative of `G`: `(105/64)(1 - 5t^2 + 7t^4 - 3t^6)` on `[-1, 1]`,
/// zero outside. This is the fourth-order kernel itself.
pub fn smooth_g_prime(t: f64) -> Result<f64> {
    check_finite("smooth_g_prime", t)?;
    Ok(g_prime_raw(t))
}

/// Second derivative of `G`: `(105/64)(-10t + 28t^3 - 18t^5)` on `[-1, 1]`,
/// zero outside. Used in the Hessian of the first-stage objective.
pub fn smooth_g_second(t: f64) -> Result<f64> {
    check_finite("smooth_g_second", t)?;
    Ok(g_second_raw(t))
}

/// Eighth-order first-stage kernel
/// `K(t) = (1/48)(105 - 105t^2 + 21t^4 - t^6) phi(t)`.
pub fn kernel_k(t: f64) -> Result<f64> {
    check_finite("kernel_k", t)?;
    Ok(k_raw(t))
}

/// Which kernel a moment check targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentKernel {
    /// The smoothing derivative `G'` (order 4, support `[-1, 1]`).
    GPrime,
    /// The first-stage kernel `K` (order 8, quadrature over `[-12, 12]`).
    FirstStage,
}

impl MomentKernel {
    fn order(self) -> usize {
        match self {
            MomentKernel::GPrime => SMOOTHING_ORDER,
            MomentKernel::FirstStage => FIRST_STAGE_ORDER,
        }
    }
}

/// One verified moment: `value` is the quadrature of `t^order * kernel(t)`.
#[derive(Debug, Clone)]
pub struct MomentCheck {
    pub order: usize,
    pub value: f64,
    /// Moment the kernel definition requires: 1 at order 0, 0 below the
    /// kernel order. `None` at or above the kernel order, where the defining
    /// property is that the moment is bounded away from zero.
    pub target: Option<f64>,
    pub pass: bool,
}

/// Moment report for one kernel up to `max_order`.
#[derive(Debug, Clone)]
pub struct MomentReport {
    pub kernel: MomentKernel,
    pub tol: f64,
    pub checks: Vec<MomentCheck>,
}

impl MomentReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Check the moments of `G'` or `K` up to `max_order` by composite Simpson
/// quadrature (4001 nodes on `[-1, 1]` for `G'`, 20001 on `[-12, 12]` for
/// `K`). Orders below the kernel order must match their target within `tol`;
/// orders at or above it pass when the moment exceeds `tol` in magnitude.
pub fn verify_moments(which: MomentKernel, max_order: usize, tol: f64) -> MomentReport {
    let (eval, lo, hi, nodes): (fn(f64) -> f64, f64, f64, usize) = match which {
        MomentKernel::GPrime => (g_prime_raw, -1.0, 1.0, 4001),
        MomentKernel::FirstStage => (k_raw, -K_SUPPORT, K_SUPPORT, 20001),
    };
    let kernel_order = which.order();
    let checks = (0..=max_order)
        .map(|j| {
            let value = simpson(|t| t.powi(j as i32) * eval(t), lo, hi, nodes);
            let target = if j == 0 {
                Some(1.0)
            } else if j < kernel_order {
                Some(0.0)
            } else {
                None
            };
            let pass = match target {
                Some(t) => (value - t).abs() <= tol,
                None => value.abs() > tol,
            };
            MomentCheck {
                order: j,
                value,
                target,
                pass,
            }
        })
        .collect();
    MomentReport {
        kernel: which,
        tol,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    // G(0.5) = 0.5 + 4463/8192, exact in binary.
    const G_HALF: f64 = 0.5 + 4463.0 / 8192.0;
    // G''(0.5) = (105/64)(-5 + 3.5 - 0.5625), exact in binary.
    const G_SECOND_HALF: f64 = -3.3837890625;

    #[test]
    fn smooth_g_branch_values() {
        assert_eq!(smooth_g(0.0).unwrap(), 0.5);
        assert_eq!(smooth_g(1.5).unwrap(), 1.0);
        assert_eq!(smooth_g(-1.5).unwrap(), 0.0);
        assert_relative_eq!(smooth_g(0.5).unwrap(), G_HALF, epsilon = 1e-15);
        // overshoot: G' has negative lobes, so G exceeds 1 inside (-1, 1)
        assert!(G_HALF > 1.0);
    }

    #[test]
    fn smooth_g_continuous_at_support_edges() {
        assert_abs_diff_eq!(smooth_g(1.0).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(smooth_g(-1.0).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn smooth_g_prime_values() {
        assert_eq!(smooth_g_prime(0.0).unwrap(), 105.0 / 64.0);
        // 1 - 5 + 7 - 3 = 0 at the boundary
        assert_abs_diff_eq!(smooth_g_prime(1.0).unwrap(), 0.0, epsilon = 1e-15);
        assert_eq!(smooth_g_prime(2.0).unwrap(), 0.0);
    }

    #[test]
    fn smooth_g_second_values() {
        assert_eq!(smooth_g_second(0.0).unwrap(), 0.0);
        assert_relative_eq!(smooth_g_second(0.5).unwrap(), G_SECOND_HALF, epsilon = 1e-15);
        assert_relative_eq!(smooth_g_second(-0.5).unwrap(), -G_SECOND_HALF, epsilon = 1e-15);
    }

    #[test]
    fn kernel_k_values() {
        let expected = (105.0 / 48.0) / (2.0 * std::f64::consts::PI).sqrt();
        assert_relative_eq!(kernel_k(0.0).unwrap(), expected, epsilon = 1e-15);
        assert!(kernel_k(10.0).unwrap().abs() < 1e-12);
        assert_eq!(kernel_k(1.3).unwrap(), kernel_k(-1.3).unwrap());
    }

    #[test]
    fn non_finite_inputs_rejected() {
        for f in [smooth_g, smooth_g_prime, smooth_g_second, kernel_k] {
            assert!(f(f64::NAN).is_err());
            assert!(f(f64::INFINITY).is_err());
        }
    }

    #[test]
    fn g_prime_moments_vanish_through_order_three() {
        let report = verify_moments(MomentKernel::GPrime, 3, 1e-8);
        assert!(report.all_pass(), "{report:?}");
        assert_abs_diff_eq!(report.checks[0].value, 1.0, epsilon = 1e-8);
        for check in &report.checks[1..] {
            assert_abs_diff_eq!(check.value, 0.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn g_prime_fourth_moment_is_nonzero() {
        let report = verify_moments(MomentKernel::GPrime, 4, 1e-8);
        assert!(report.all_pass(), "{report:?}");
        // analytic value: (105/64) * 2 * (1/5 - 5/7 + 7/9 - 3/11) = -1/33
        assert_abs_diff_eq!(report.checks[4].value, -1.0 / 33.0, epsilon = 1e-8);
    }

    #[test]
    fn first_stage_moments_vanish_through_order_seven() {
        let report = verify_moments(MomentKernel::FirstStage, 7, 1e-6);
        assert!(report.all_pass(), "{report:?}");
        assert_abs_diff_eq!(report.checks[0].value, 1.0, epsilon = 1e-6);
        for check in &report.checks[1..] {
            assert_abs_diff_eq!(check.value, 0.0, epsilon = 1e-6);
        }
    }

    #[test]
    fn first_stage_eighth_moment_is_nonzero() {
        let report = verify_moments(MomentKernel::FirstStage, 8, 1e-6);
        assert!(report.all_pass(), "{report:?}");
        // analytic value from Gaussian moments: -5040/48 = -105
        assert_relative_eq!(report.checks[8].value, -105.0, epsilon = 1e-6);
    }

    #[test]
    fn g_peak_lies_strictly_inside_support() {
        let mut max = f64::MIN;
        let mut argmax = 0.0;
        for i in 0..=4000 {
            let t = -1.0 + 2.0 * i as f64 / 4000.0;
            let v = g_raw(t);
            if v > max {
                max = v;
                argmax = t;
            }
        }
        assert!(max > 1.0 && max.is_finite());
        assert!(argmax.abs() < 1.0);
    }

    proptest! {
        #[test]
        fn g_is_exactly_zero_or_one_outside_support(t in 1.0f64..50.0) {
            prop_assert_eq!(g_raw(1.0 + t), 1.0);
            prop_assert_eq!(g_raw(-1.0 - t), 0.0);
        }

        #[test]
        fn g_prime_matches_central_difference(t in -3.0f64..3.0) {
            prop_assume!((t.abs() - 1.0).abs() > 1e-3);
            let step = 1e-5;
            let fd = (g_raw(t + step) - g_raw(t - step)) / (2.0 * step);
            prop_assert!((fd - g_prime_raw(t)).abs() < 1e-6);
        }

        #[test]
        fn g_second_matches_central_difference(t in -3.0f64..3.0) {
            prop_assume!((t.abs() - 1.0).abs() > 1e-3);
            let step = 1e-5;
            let fd = (g_prime_raw(t + step) - g_prime_raw(t - step)) / (2.0 * step);
            prop_assert!((fd - g_second_raw(t)).abs() < 1e-5);
        }

        #[test]
        fn k_is_even(t in 0.0f64..12.0) {
            prop_assert_eq!(k_raw(t), k_raw(-t));
        }
    }
}
