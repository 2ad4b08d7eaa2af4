//! Cauchy principal values of tangent-type integrals over (0, ∞).
//!
//! Target shape:
//!
//! ```text
//! PV ∫₀^∞ tan x · g(x)/x dx,    g even, π-periodic, g(π−x) = g(x),
//! ```
//!
//! with simple poles at x = π/2 + jπ. Two routes:
//!
//! * [`pv_tan_reduction`] — the analytic reduction: pairing each pole's two
//!   sides by y = π − x collapses tan·cot and leaves plain ∫₀^{π/2} g(x) dx.
//! * [`pv_direct`] — an independent oracle that takes the definition
//!   literally: symmetric ε-exclusion around every pole, a fitted 1/j² tail
//!   correction for the truncated periods, and Richardson extrapolation in ε.
//!
//! The direct oracle is good to ~1e-5 absolute with a few hundred periods,
//! which is all it is asked to certify.

use super::{integrate_finite, integrate_finite_lenient, QuadError, QuadResult};

/// Default ε-exclusion sequence for [`pv_direct`]: successive halvings, as
/// the extrapolation weights assume.
pub const PV_EPS_DEFAULT: [f64; 4] = [1e-2, 5e-3, 2.5e-3, 1.25e-3];

/// The reduction route: for even π-periodic g symmetric about π/2, the
/// principal value PV ∫₀^∞ tan x·g(x)/x dx equals plain ∫₀^{π/2} g(x) dx.
pub fn pv_tan_reduction(
    g: impl Fn(f64) -> f64,
    tol: f64,
) -> Result<QuadResult, QuadError> {
    integrate_finite(g, 0.0, std::f64::consts::FRAC_PI_2, tol)
}

/// Principal value by symmetric ε-exclusion, truncation to `n_periods`
/// cells, tail fitting, and two-stage Richardson extrapolation over the
/// halving `eps_sequence`.
///
/// For each ε, every period cell [ja, (j+1)a] is integrated with the
/// symmetric windows (p−ε, p+ε) removed around each pole p = ja + offset;
/// the equal margins on both sides of a pole are exactly the paired-limit
/// definition of the principal value (the two sides map onto each other
/// under y = π − x). Truncation is repaired with a 1/j² tail fitted on the
/// last eight cell sums. The ε-error of the exclusion is C₁ε + C₃ε³ + …
/// (even powers cancel by symmetry), so one 2:1 elimination kills the linear
/// term and an 8:1 elimination kills the cubic.
///
/// # Panics
/// Panics on structurally bad arguments: non-positive period, fewer than 32
/// periods, fewer than 3 ε values, ε values that do not halve, poles outside
/// (0, a), or ε wider than a quarter of the pole spacing.
pub fn pv_direct(
    f: impl Fn(f64) -> f64,
    pole_offsets: &[f64],
    a: f64,
    n_periods: u32,
    eps_sequence: &[f64],
) -> Result<QuadResult, QuadError> {
    assert!(a.is_finite() && a > 0.0, "period must be positive, got {a}");
    assert!(n_periods >= 32, "need at least 32 periods, got {n_periods}");
    assert!(
        eps_sequence.len() >= 3,
        "need at least 3 exclusion widths for two-stage extrapolation"
    );
    for w in eps_sequence.windows(2) {
        assert!(
            (w[0] / w[1] - 2.0).abs() < 1e-9,
            "eps_sequence must halve: got {} then {}",
            w[0],
            w[1]
        );
    }
    let mut offsets = pole_offsets.to_vec();
    offsets.sort_by(|p, q| p.partial_cmp(q).expect("pole offsets must be comparable"));
    assert!(
        offsets.iter().all(|p| *p > 0.0 && *p < a),
        "pole offsets must lie strictly inside one period"
    );
    let mut min_gap = f64::INFINITY;
    let mut prev = offsets.last().unwrap() - a; // pole from previous period
    for &p in &offsets {
        min_gap = min_gap.min(p - prev);
        prev = p;
    }
    let eps_max = eps_sequence.iter().cloned().fold(0.0, f64::max);
    assert!(
        eps_max < 0.25 * min_gap,
        "largest exclusion width {eps_max} too close to the pole spacing"
    );

    const PIECE_TOL: f64 = 1e-12;
    const TAIL_FIT_CELLS: usize = 8;
    let n = n_periods as usize;

    let mut evaluations = 0u64;
    let mut piece_err = 0.0;
    let mut totals = Vec::with_capacity(eps_sequence.len());
    let mut last_tail = 0.0;
    for &eps in eps_sequence {
        let mut total = 0.0;
        let mut fit = 0.0; // accumulates s_j · j² over the fit window
        for j in 0..n {
            let lo = j as f64 * a;
            let mut cell = 0.0;
            let mut cursor = lo;
            for &off in &offsets {
                let pole = lo + off;
                let (piece, _) = integrate_finite_lenient(&f, cursor, pole - eps, PIECE_TOL);
                cell += piece.value;
                piece_err += piece.error_estimate;
                evaluations += piece.evaluations;
                cursor = pole + eps;
            }
            let (piece, _) = integrate_finite_lenient(&f, cursor, lo + a, PIECE_TOL);
            cell += piece.value;
            piece_err += piece.error_estimate;
            evaluations += piece.evaluations;
            total += cell;
            if j >= n - TAIL_FIT_CELLS {
                fit += cell * (j as f64) * (j as f64);
            }
        }
        // Cell sums decay like C/j²; Σ_{j≥n} C/j² ≈ C(1/n + 1/2n² + 1/6n³).
        let c = fit / TAIL_FIT_CELLS as f64;
        let nf = n as f64;
        let tail = c * (1.0 / nf + 1.0 / (2.0 * nf * nf) + 1.0 / (6.0 * nf * nf * nf));
        last_tail = tail;
        totals.push(total + tail);
    }

    // Stage 1 (2:1) removes the linear ε term; stage 2 (8:1) the cubic.
    let stage1: Vec<f64> = totals.windows(2).map(|w| 2.0 * w[1] - w[0]).collect();
    let stage2: Vec<f64> = stage1
        .windows(2)
        .map(|w| (8.0 * w[1] - w[0]) / 7.0)
        .collect();

    let value = stage2[stage2.len() - 1];
    // Divergence detection must not trip on the ~1e-7 noise floor of the
    // tail fit; it is after gross failures (non-simple poles), where the
    // ε-limit does not exist and differences grow by ~2× per halving.
    let gross = 1e-4 * (1.0 + value.abs());
    let d1_last = (stage1[stage1.len() - 1] - stage1[stage1.len() - 2]).abs();
    if stage1.len() >= 3 {
        let d1_prev = (stage1[stage1.len() - 2] - stage1[stage1.len() - 3]).abs();
        if d1_last > 2.0 * d1_prev && d1_last > gross {
            return Err(QuadError::NonConvergence {
                reason: "exclusion-width extrapolation is diverging",
            });
        }
    }
    let d2 = if stage2.len() >= 2 {
        (stage2[stage2.len() - 1] - stage2[stage2.len() - 2]).abs()
    } else {
        d1_last
    };
    if d2 > 2.0 * d1_last.max(1e-12) && d2 > gross {
        return Err(QuadError::NonConvergence {
            reason: "second extrapolation stage did not settle",
        });
    }
    let est = d2 + last_tail.abs() / n as f64 + piece_err;
    Ok(QuadResult {
        value,
        error_estimate: est,
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    const K07: f64 = 1.8456939983747235;
    const E07: f64 = 1.3556611355719555;
    const K09: f64 = 2.2805491384227702;
    const E09: f64 = 1.1716970527816141;

    #[test]
    fn reduction_route_values() {
        let r = pv_tan_reduction(|_| 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(r.value, FRAC_PI_2, epsilon = 1e-12);

        let r = pv_tan_reduction(|x: f64| 1.0 / (1.0 - 0.49 * x.sin().powi(2)).sqrt(), 1e-12)
            .unwrap();
        assert_abs_diff_eq!(r.value, K07, epsilon = 1e-12);

        let r = pv_tan_reduction(|x: f64| (1.0 - 0.49 * x.sin().powi(2)).sqrt(), 1e-12).unwrap();
        assert_abs_diff_eq!(r.value, E07, epsilon = 1e-12);
    }

    #[test]
    fn direct_oracle_classic_value() {
        // PV ∫₀^∞ tan x/x dx = π/2.
        let r = pv_direct(
            |x: f64| x.tan() / x,
            &[FRAC_PI_2],
            PI,
            500,
            &PV_EPS_DEFAULT,
        )
        .unwrap();
        assert_abs_diff_eq!(r.value, FRAC_PI_2, epsilon = 1e-5);
        assert!(r.error_estimate < 1e-3);
    }

    #[test]
    fn direct_oracle_elliptic_kernels() {
        // PV ∫₀^∞ tan x/(x√(1−k²sin²x)) dx = K(k) at k = 0.7.
        let r = pv_direct(
            |x: f64| x.tan() / (x * (1.0 - 0.49 * x.sin().powi(2)).sqrt()),
            &[FRAC_PI_2],
            PI,
            400,
            &PV_EPS_DEFAULT,
        )
        .unwrap();
        assert_abs_diff_eq!(r.value, K07, epsilon = 1e-5);

        // PV ∫₀^∞ tan x·√(1−k²cos²x)/x dx = E(k) at k = 0.7.
        let r = pv_direct(
            |x: f64| x.tan() * (1.0 - 0.49 * x.cos().powi(2)).sqrt() / x,
            &[FRAC_PI_2],
            PI,
            400,
            &PV_EPS_DEFAULT,
        )
        .unwrap();
        assert_abs_diff_eq!(r.value, E07, epsilon = 1e-5);
    }

    #[test]
    fn routes_agree_on_the_four_tangent_entries() {
        // Both complete-integral kinds, in both the sin² and cos² dressings.
        let kernels: [(fn(f64) -> f64, fn(f64) -> f64, f64); 4] = [
            (
                |x| 1.0 / (1.0 - 0.49 * x.sin().powi(2)).sqrt(),
                |x| x.tan() / (x * (1.0 - 0.49 * x.sin().powi(2)).sqrt()),
                K07,
            ),
            (
                |x| 1.0 / (1.0 - 0.81 * x.cos().powi(2)).sqrt(),
                |x| x.tan() / (x * (1.0 - 0.81 * x.cos().powi(2)).sqrt()),
                K09,
            ),
            (
                |x| (1.0 - 0.49 * x.cos().powi(2)).sqrt(),
                |x| x.tan() * (1.0 - 0.49 * x.cos().powi(2)).sqrt() / x,
                E07,
            ),
            (
                |x| (1.0 - 0.81 * x.sin().powi(2)).sqrt(),
                |x| x.tan() * (1.0 - 0.81 * x.sin().powi(2)).sqrt() / x,
                E09,
            ),
        ];
        for (g, full, closed_form) in kernels {
            let reduced = pv_tan_reduction(g, 1e-12).unwrap();
            let direct = pv_direct(full, &[FRAC_PI_2], PI, 400, &PV_EPS_DEFAULT).unwrap();
            assert_abs_diff_eq!(reduced.value, direct.value, epsilon = 1e-5);
            assert_abs_diff_eq!(reduced.value, closed_form, epsilon = 1e-11);
        }
    }

    #[test]
    fn direct_oracle_rejects_double_poles() {
        // tan²x/x² has non-integrable (double) poles: the symmetric exclusion
        // diverges like 1/ε and the extrapolation must refuse to certify it.
        let r = pv_direct(
            |x: f64| (x.tan() / x).powi(2),
            &[FRAC_PI_2],
            PI,
            40,
            &PV_EPS_DEFAULT,
        );
        assert!(matches!(r, Err(QuadError::NonConvergence { .. })));
    }
}
