//! Complete elliptic integrals and their classical identities.
//!
//! ```text
//! K(k)   ellip_k           first kind, arithmetic–geometric mean
//! E(k)   ellip_e           second kind, AGM with correction sum
//! Π(n,k) ellip_pi          third kind, adaptive quadrature
//! K′(k)  comp_k            K at the complementary modulus k′ = √(1−k²)
//! E′(k)  comp_e            E at the complementary modulus
//!        legendre_residual K·E′ + K′·E − K·K′ − π/2 (should vanish)
//! K(ik)  imag_modulus_k    purely imaginary modulus, real integral form
//! E(ik)  imag_modulus_e    second kind at purely imaginary modulus
//! k_r    singular_modulus  closed forms for K′/K = √r, r = 1..5
//! ```
//!
//! The primary evaluation route for `K` and `E` is the arithmetic–geometric
//! mean, which converges quadratically: `K(k) = π / (2·agm(1, k′))`, and `E`
//! follows from the same iteration through the correction sum
//! `E = K·(1 − Σ 2ⁿ⁻¹cₙ²)` over the iteration gaps `cₙ`. A hypergeometric
//! series route ([`ellip_k_series`], [`ellip_e_series`]) is kept as an
//! independent cross-check: `K = (π/2)·₂F₁(½,½;1;m)` and
//! `E = (π/2)·₂F₁(−½,½;1;m)` with `m = k²`.
//!
//! All functions take the modulus `k` (the argument of `K(k)`), not the
//! parameter `m = k²`; [`Modulus`] carries both plus the complementary
//! modulus so conversions happen once, next to the validation.

use crate::hyp::{self, HypError};
use crate::quad::{self, QuadError};
use std::f64::consts::FRAC_PI_2;
use thiserror::Error;

/// Errors from elliptic-integral evaluation.
#[derive(Debug, Error)]
pub enum EllipticError {
    /// Argument outside the function's domain.
    #[error("argument {value} outside domain: {reason}")]
    Domain { value: f64, reason: &'static str },
    /// The requested value diverges (K(k) → ∞ as k → 1, K′(k) → ∞ as k → 0).
    #[error("integral diverges at modulus {at}")]
    Divergence { at: f64 },
    /// Unsupported discrete parameter (e.g. a singular-modulus index out of range).
    #[error("unsupported parameter: {0}")]
    Unsupported(&'static str),
    /// Failure in the quadrature backend (Π and the imaginary-modulus integrals).
    #[error("quadrature failure: {0}")]
    Quad(#[from] QuadError),
    /// Failure in the hypergeometric backend (series cross-check routes).
    #[error("series failure: {0}")]
    Hyp(#[from] HypError),
}

/// Largest modulus accepted by [`ellip_k`]. Beyond this, K(k) is dominated by
/// its logarithmic blow-up at k = 1 and a plain `f64` answer would be more
/// misleading than an explicit divergence signal.
pub const K_MODULUS_CAP: f64 = 0.9999;

/// An elliptic modulus `k ∈ [0, 1)` with its derived quantities.
///
/// `m = k²` is the parameter and `k′ = √(1−k²)` the complementary modulus.
/// The constructor validates `0 ≤ k < 1`, which keeps `k′ ∈ (0, 1]` and
/// `m + k′² = 1` to within one rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    k: f64,
    m: f64,
    k_prime: f64,
}

impl Modulus {
    /// Builds a modulus from `k ∈ [0, 1)`.
    pub fn new(k: f64) -> Result<Self, EllipticError> {
        if !k.is_finite() || !(0.0..1.0).contains(&k) {
            return Err(EllipticError::Domain {
                value: k,
                reason: "modulus k must satisfy 0 ≤ k < 1",
            });
        }
        // (1−k)(1+k) avoids the cancellation in 1−k² as k → 1.
        Ok(Modulus {
            k,
            m: k * k,
            k_prime: ((1.0 - k) * (1.0 + k)).sqrt(),
        })
    }

    /// The modulus `k` itself.
    pub fn k(&self) -> f64 {
        self.k
    }

    /// The parameter `m = k²`.
    pub fn m(&self) -> f64 {
        self.m
    }

    /// The complementary modulus `k′ = √(1−k²)`.
    pub fn k_prime(&self) -> f64 {
        self.k_prime
    }

    /// The complementary modulus as a `Modulus`, i.e. `k ↦ k′`.
    ///
    /// Fails for `k = 0`, whose complement `k′ = 1` is outside the domain.
    pub fn complement(&self) -> Result<Self, EllipticError> {
        if self.k == 0.0 {
            return Err(EllipticError::Divergence { at: 0.0 });
        }
        Ok(Modulus {
            k: self.k_prime,
            m: self.k_prime * self.k_prime,
            k_prime: self.k,
        })
    }
}

/// The pair (K(k), E(k)) produced by one shared AGM iteration.
///
/// For every `k ∈ [0, 1)` the members satisfy `K ≥ π/2 ≥ E ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticPair {
    /// Complete elliptic integral of the first kind.
    pub k: f64,
    /// Complete elliptic integral of the second kind.
    pub e: f64,
}

/// Arithmetic–geometric mean of `a ≥ b ≥ 0`, with the iteration count.
///
/// Replaces `(a, b)` by `((a+b)/2, √(ab))` until the two agree to a few ulps;
/// convergence is quadratic, so a handful of steps suffice in `f64`. The
/// degenerate `b = 0` collapses immediately (`agm(a, 0) = 0`).
pub fn agm(a: f64, b: f64) -> Result<(f64, u32), EllipticError> {
    if !a.is_finite() || !b.is_finite() || !(b >= 0.0) || !(a >= b) {
        let bad = if b.is_finite() && b >= 0.0 { a } else { b };
        return Err(EllipticError::Domain {
            value: bad,
            reason: "agm requires finite a ≥ b ≥ 0",
        });
    }
    if b == 0.0 {
        return Ok((0.0, 0));
    }
    let (mut a, mut b) = (a, b);
    let mut iterations = 0u32;
    while (a - b).abs() > 4.0 * f64::EPSILON * a && iterations < 64 {
        let next_a = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next_a;
        iterations += 1;
    }
    Ok((0.5 * (a + b), iterations))
}

/// K(k) by the arithmetic–geometric mean: `K = π / (2·agm(1, k′))`.
///
/// Relative error is a few ulps for `k ≤ 0.9999`; larger moduli return a
/// divergence signal (K has a logarithmic singularity at k = 1).
pub fn ellip_k(modulus: &Modulus) -> Result<f64, EllipticError> {
    if modulus.k > K_MODULUS_CAP {
        return Err(EllipticError::Divergence { at: modulus.k });
    }
    let (mean, _) = agm(1.0, modulus.k_prime)?;
    Ok(FRAC_PI_2 / mean)
}

/// E(k) by the AGM correction sum.
///
/// Runs the same iteration as [`ellip_k`], accumulating `Σ 2ⁿ⁻¹ cₙ²` over the
/// gaps `c₀ = k`, `cₙ₊₁ = (aₙ − bₙ)/2`; then `E = K·(1 − Σ)`.
pub fn ellip_e(modulus: &Modulus) -> f64 {
    ellip_ke_raw(modulus).e
}

/// E(k) for a raw modulus, extending to the closed endpoint: `E(1) = 1`.
///
/// [`Modulus`] deliberately excludes `k = 1` (where K diverges), but E stays
/// finite there; this scalar entry point accepts the full closed range.
pub fn ellip_e_at(k: f64) -> Result<f64, EllipticError> {
    if k == 1.0 {
        return Ok(1.0);
    }
    Ok(ellip_e(&Modulus::new(k)?))
}

/// (K(k), E(k)) from a single AGM iteration.
pub fn ellip_ke(modulus: &Modulus) -> Result<EllipticPair, EllipticError> {
    if modulus.k > K_MODULUS_CAP {
        return Err(EllipticError::Divergence { at: modulus.k });
    }
    Ok(ellip_ke_raw(modulus))
}

/// Shared AGM loop for K and E; assumes the modulus is already validated.
fn ellip_ke_raw(modulus: &Modulus) -> EllipticPair {
    let mut a = 1.0f64;
    let mut b = modulus.k_prime;
    let mut c = modulus.k;
    // Σ 2ⁿ⁻¹ cₙ², starting with the n = 0 term c₀²/2.
    let mut correction = 0.5 * c * c;
    let mut power = 0.5f64;
    let mut iterations = 0u32;
    while c.abs() > 4.0 * f64::EPSILON * a && iterations < 64 {
        let next_a = 0.5 * (a + b);
        let next_b = (a * b).sqrt();
        c = 0.5 * (a - b);
        a = next_a;
        b = next_b;
        power *= 2.0;
        correction += power * c * c;
        iterations += 1;
    }
    let big_k = FRAC_PI_2 / a;
    EllipticPair {
        k: big_k,
        e: big_k * (1.0 - correction),
    }
}

/// Π(n, k), the complete integral of the third kind, by quadrature of its
/// trigonometric form `∫₀^{π/2} dt / ((1 − n²sin²t)·√(1 − k²sin²t))`.
///
/// The characteristic enters squared, so `Π(n, 0) = π/(2√(1−n²))` and
/// `Π(0, k) = K(k)`. Requires `n² < 1`; the integrand is then smooth and the
/// result is good to the requested 1e-12 tolerance (well under 1e-10).
pub fn ellip_pi(n: f64, modulus: &Modulus) -> Result<f64, EllipticError> {
    if !n.is_finite() || n * n >= 1.0 {
        return Err(EllipticError::Domain {
            value: n,
            reason: "characteristic must satisfy n² < 1",
        });
    }
    let (n2, m) = (n * n, modulus.m);
    let r = quad::integrate_finite(
        |t: f64| {
            let s2 = t.sin().powi(2);
            1.0 / ((1.0 - n2 * s2) * (1.0 - m * s2).sqrt())
        },
        0.0,
        FRAC_PI_2,
        1e-12,
    )?;
    Ok(r.value)
}

/// K′(k) = K(k′), diverging at k = 0 where k′ = 1.
pub fn comp_k(modulus: &Modulus) -> Result<f64, EllipticError> {
    ellip_k(&modulus.complement()?)
}

/// E′(k) = E(k′).
pub fn comp_e(modulus: &Modulus) -> Result<f64, EllipticError> {
    Ok(ellip_e(&modulus.complement()?))
}

/// The defect in Legendre's relation: `K·E′ + K′·E − K·K′ − π/2`.
///
/// Identically zero in exact arithmetic for every `k ∈ (0, 1)`; the floating
/// evaluation keeps it below 1e-12 across `k ∈ [0.05, 0.95]`.
pub fn legendre_residual(modulus: &Modulus) -> Result<f64, EllipticError> {
    let pair = ellip_ke(modulus)?;
    let comp = ellip_ke(&modulus.complement()?)?;
    Ok(pair.k * comp.e + comp.k * pair.e - pair.k * comp.k - FRAC_PI_2)
}

/// K(ik) for real `k ≥ 0`, as the real integral
/// `∫₀¹ dx / √((1−x²)(1+k²x²))`.
///
/// Computed by quadrature after `x = sin t` (the integrand becomes the smooth
/// `1/√(1 + k²sin²t)`). Cross-check: [`imag_modulus_k_transform`].
pub fn imag_modulus_k(k: f64) -> Result<f64, EllipticError> {
    if !k.is_finite() || k < 0.0 {
        return Err(EllipticError::Domain {
            value: k,
            reason: "imaginary-modulus magnitude must be ≥ 0",
        });
    }
    let k2 = k * k;
    let r = quad::integrate_finite(
        |t: f64| 1.0 / (1.0 + k2 * t.sin().powi(2)).sqrt(),
        0.0,
        FRAC_PI_2,
        1e-12,
    )?;
    Ok(r.value)
}

/// K(ik) through the real-modulus reduction
/// `K(ik) = (1+k²)^{−1/2} · K(k/√(1+k²))`.
///
/// Independent of the quadrature route in [`imag_modulus_k`]; the two agree
/// to better than 1e-11.
pub fn imag_modulus_k_transform(k: f64) -> Result<f64, EllipticError> {
    if !k.is_finite() || k < 0.0 {
        return Err(EllipticError::Domain {
            value: k,
            reason: "imaginary-modulus magnitude must be ≥ 0",
        });
    }
    let scale = (1.0 + k * k).sqrt();
    let reduced = Modulus::new(k / scale)?;
    Ok(ellip_k(&reduced)? / scale)
}

/// E(ik) for real `k ≥ 0`, as the real integral `∫₀¹ √((1+k²x²)/(1−x²)) dx`.
///
/// After `x = sin t` the integrand is the smooth `√(1 + k²sin²t)`.
pub fn imag_modulus_e(k: f64) -> Result<f64, EllipticError> {
    if !k.is_finite() || k < 0.0 {
        return Err(EllipticError::Domain {
            value: k,
            reason: "imaginary-modulus magnitude must be ≥ 0",
        });
    }
    let k2 = k * k;
    let r = quad::integrate_finite(
        |t: f64| (1.0 + k2 * t.sin().powi(2)).sqrt(),
        0.0,
        FRAC_PI_2,
        1e-12,
    )?;
    Ok(r.value)
}

/// E(ik) through the real-modulus reduction
/// `E(ik) = √(1+k²) · E(k/√(1+k²))`.
pub fn imag_modulus_e_transform(k: f64) -> Result<f64, EllipticError> {
    if !k.is_finite() || k < 0.0 {
        return Err(EllipticError::Domain {
            value: k,
            reason: "imaginary-modulus magnitude must be ≥ 0",
        });
    }
    let scale = (1.0 + k * k).sqrt();
    let reduced = Modulus::new(k / scale)?;
    Ok(ellip_e(&reduced) * scale)
}

/// The r-th singular modulus `k_r`, the solution of `K′/K(k_r) = √r`.
///
/// Closed forms for r = 1..5:
///
/// ```text
/// k₁ = 1/√2            k₂ = √2 − 1          k₃ = √2(√3 − 1)/4
/// k₄ = 3 − 2√2         k₅ = (√(√5−1) − √(3−√5))/2
/// ```
pub fn singular_modulus(r: u32) -> Result<f64, EllipticError> {
    let k = match r {
        1 => 0.5f64.sqrt(),
        2 => 2.0f64.sqrt() - 1.0,
        3 => 2.0f64.sqrt() * (3.0f64.sqrt() - 1.0) / 4.0,
        4 => 3.0 - 2.0 * 2.0f64.sqrt(),
        5 => {
            let s5 = 5.0f64.sqrt();
            0.5 * ((s5 - 1.0).sqrt() - (3.0 - s5).sqrt())
        }
        _ => return Err(EllipticError::Unsupported("singular modulus index must be 1..=5")),
    };
    Ok(k)
}

/// K(k) through the hypergeometric series `(π/2)·₂F₁(½, ½; 1; m)`.
///
/// Slowly convergent as `m → 1`; used as an AGM cross-check for `m ≤ 0.7`,
/// where it agrees with [`ellip_k`] to 1e-12.
pub fn ellip_k_series(m: f64) -> Result<f64, EllipticError> {
    if !m.is_finite() || !(0.0..1.0).contains(&m) {
        return Err(EllipticError::Domain {
            value: m,
            reason: "parameter m must satisfy 0 ≤ m < 1",
        });
    }
    Ok(FRAC_PI_2 * hyp::hyp2f1(0.5, 0.5, 1.0, m)?)
}

/// E(k) through the hypergeometric series `(π/2)·₂F₁(−½, ½; 1; m)`.
pub fn ellip_e_series(m: f64) -> Result<f64, EllipticError> {
    if !m.is_finite() || !(0.0..1.0).contains(&m) {
        return Err(EllipticError::Domain {
            value: m,
            reason: "parameter m must satisfy 0 ≤ m < 1",
        });
    }
    Ok(FRAC_PI_2 * hyp::hyp2f1(-0.5, 0.5, 1.0, m)?)
}

/// π/(2·agm(1, k′)) expressed directly for a scalar `k`; convenience used by
/// the catalog and command-line layers.
pub fn ellip_k_at(k: f64) -> Result<f64, EllipticError> {
    ellip_k(&Modulus::new(k)?)
}
