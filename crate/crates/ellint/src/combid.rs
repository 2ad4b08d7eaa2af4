//! Exact rational-arithmetic verification of the combinatorial identities that
//! back the series evaluations elsewhere in the crate.
//!
//! Everything here is checked in arbitrary-precision rationals — these are
//! identities, so exact equality is the test, never a floating-point
//! tolerance. The only floating-point function in the module is
//! [`cot_partial_fraction_check`], which compares a tangent against the
//! partial sums of its pole expansion and is inherently a limit statement.
//!
//! Recurring cast: the central-binomial weights
//!
//! ```text
//! aᵣ = ((1/2)ᵣ / r!)² = (C(2r, r) / 4ʳ)²,
//! ```
//!
//! which are the squared coefficients of the arcsine/elliptic series, and the
//! odd harmonic numbers hⱼ = Σ_{i<j} 1/(2i+1).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::specfun::binomial;

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Errors from the floating-point checks in this module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CombIdError {
    /// tan(πb/2) has poles exactly at odd integers b.
    #[error("tan(pi*b/2) has a pole at odd integer b = {0}")]
    OddIntegerPole(f64),
}

fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rising factorial (a)ₙ = a(a+1)⋯(a+n−1) in exact arithmetic.
pub fn pochhammer_rational(a: &Rational, n: u32) -> Rational {
    let mut p = Rational::one();
    for i in 0..n {
        p *= a + rat_int(i as i64);
    }
    p
}

/// Central-binomial weight aᵣ = ((1/2)ᵣ/r!)², computed by the exact recurrence
/// a₀ = 1, a_{r+1} = aᵣ·((2r+1)/(2r+2))².
pub fn a_coefficient(r: u32) -> Rational {
    let mut a = Rational::one();
    for i in 0..r {
        let step = rat(2 * i as i64 + 1, 2 * i as i64 + 2);
        a *= step.clone() * step;
    }
    a
}

/// Partial alternating sum of binomial coefficients,
/// Σ_{ν=0}^{k} (−1)^ν C(2j+1, ν).
///
/// The puncline is that the partial sum collapses: it equals (−1)^k·C(2j, k)
/// exactly, which the unit tests verify for every k ≤ j ≤ 100.
///
/// # Panics
/// Panics if `k > j`.
pub fn alt_binomial_sum(j: u32, k: u32) -> Rational {
    assert!(k <= j, "alt_binomial_sum requires k <= j, got k={k}, j={j}");
    let mut sum = BigInt::zero();
    let mut sign = BigInt::one();
    for nu in 0..=k {
        sum += &sign * binomial(2 * j as u64 + 1, nu as i64);
        sign = -sign;
    }
    Rational::from_integer(sum)
}

/// Coefficient of π/2 in ∫₀^{π/2} sin²ʲx dx, computed through the alternating
/// binomial expansion of the power of the sine:
///
/// ```text
/// 4⁻ʲ · Σ_{ν=0}^{j} (−1)^{j−ν} C(2j+1, ν).
/// ```
///
/// Equals (2j−1)!!/(2j)!! = (1/2)ⱼ/j! exactly; [`wallis_coefficient`] computes
/// the same number through the product route, and the tests pin both routes
/// against each other.
pub fn sin_power_integral(j: u32) -> Rational {
    let mut sum = BigInt::zero();
    for nu in 0..=j {
        let term = binomial(2 * j as u64 + 1, nu as i64);
        if (j - nu) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Rational::new(sum, BigInt::from(4).pow(j))
}

/// The Wallis ratio (2j−1)!!/(2j)!! as the exact product (1/2)ⱼ/j!.
pub fn wallis_coefficient(j: u32) -> Rational {
    let half = rat(1, 2);
    let num = pochhammer_rational(&half, j);
    let den = pochhammer_rational(&Rational::one(), j); // j!
    num / den
}

/// Both sides of the weighted-coefficient identity
///
/// ```text
/// Σ_{i=0}^{j−1} aᵢ/(j−i)  =  4·aⱼ·Σ_{i=0}^{j−1} 1/(2i+1),
/// ```
///
/// returned as `(lhs, rhs)` in exact arithmetic. The identity is what lets
/// the logarithm-weighted elliptic integrals collapse to K·ln k′ closed forms.
///
/// # Panics
/// Panics if `j == 0`.
pub fn harmonic_lemma_sides(j: u32) -> (Rational, Rational) {
    assert!(j >= 1, "harmonic_lemma_sides requires j >= 1");
    // One pass builds the a-table up to j and both sums.
    let mut a = Rational::one(); // a_i as i advances
    let mut lhs = Rational::zero();
    let mut odd_harmonic = Rational::zero();
    for i in 0..j {
        lhs += &a / rat_int((j - i) as i64);
        odd_harmonic += rat(1, 2 * i as i64 + 1);
        let step = rat(2 * i as i64 + 1, 2 * i as i64 + 2);
        a *= step.clone() * step; // now a_{i+1}
    }
    let rhs = rat_int(4) * a * odd_harmonic;
    (lhs, rhs)
}

// The telescoping certificate pair behind the weighted-coefficient identity:
// summing F(i, j+1) − F(i, j) = G(i+1, j) − G(i, j) over i < j collapses the
// left side of the identity into a first-order recurrence with step 4/(2j+1).
fn certificate_f(i: u32, j: u32) -> Rational {
    // F(i, j) = aᵢ / (aⱼ (j − i)), defined for i < j.
    a_coefficient(i) / (a_coefficient(j) * rat_int(j as i64 - i as i64))
}

fn certificate_g(i: u32, j: u32) -> Rational {
    // G(i, j) = −aᵢ i² / (a_{j+1} (j+1)² (j − i + 1))
    let num = a_coefficient(i) * rat_int(i as i64) * rat_int(i as i64);
    let den = a_coefficient(j + 1)
        * rat_int(j as i64 + 1)
        * rat_int(j as i64 + 1)
        * rat_int(j as i64 - i as i64 + 1);
    -num / den
}

/// Residual of the telescoping certificate,
///
/// ```text
/// F(i, j+1) − F(i, j) − G(i+1, j) + G(i, j),
/// ```
///
/// which the contract requires to be exactly zero for 0 ≤ i < j.
///
/// # Panics
/// Panics if `i >= j`.
pub fn telescoping_certificate(i: u32, j: u32) -> Rational {
    assert!(i < j, "telescoping_certificate requires i < j, got i={i}, j={j}");
    certificate_f(i, j + 1) - certificate_f(i, j) - certificate_g(i + 1, j)
        + certificate_g(i, j)
}

/// One step of the recurrences satisfied by the two sides of the
/// weighted-coefficient identity: with
///
/// ```text
/// a(j) = (1/aⱼ)·Σ_{i<j} aᵢ/(j−i)   and   b(j) = 4·Σ_{i<j} 1/(2i+1),
/// ```
///
/// returns `(a(j+1) − a(j), b(j+1) − b(j))`; both differences equal 4/(2j+1)
/// exactly, and a(1) = b(1) = 4, which proves a ≡ b.
///
/// # Panics
/// Panics if `j == 0`.
pub fn certificate_recurrence_check(j: u32) -> (Rational, Rational) {
    assert!(j >= 1, "certificate_recurrence_check requires j >= 1");
    let side_a = |j: u32| -> Rational {
        let (lhs, _) = harmonic_lemma_sides(j);
        lhs / a_coefficient(j)
    };
    let a_step = side_a(j + 1) - side_a(j);
    let b_step = rat(4, 2 * j as i64 + 1);
    (a_step, b_step)
}

/// The coupled sequence (αⱼ, βⱼ) defined by the recurrence
///
/// ```text
/// α_{j+1} = (j + 1/2)αⱼ − βⱼ,    β_{j+1} = (j + 1/2)βⱼ,
/// ```
///
/// from (α₀, β₀) = (0, 1). In closed form βⱼ = (1/2)ⱼ and
/// αⱼ = −(1/2)ⱼ·Σ_{i<j} 2/(2i+1); the recurrence forces the minus sign.
pub fn alpha_beta_sequence(j: u32) -> (Rational, Rational) {
    let mut alpha = Rational::zero();
    let mut beta = Rational::one();
    for i in 0..j {
        let factor = rat(2 * i as i64 + 1, 2); // i + 1/2
        let next_alpha = &factor * &alpha - &beta;
        beta = factor * beta;
        alpha = next_alpha;
    }
    (alpha, beta)
}

/// Compares tan(πb/2) with the N-term partial sum of its pole expansion,
///
/// ```text
/// tan(πb/2) = (4b/π)·Σ_{j≥1} 1/((2j−1)² − b²),
/// ```
///
/// returning `(lhs, rhs_partial)`. The tail decays like 1/N, so the
/// difference is O(1/N); summation runs over j = N down to 1 so the small
/// terms accumulate first.
pub fn cot_partial_fraction_check(b: f64, terms: u64) -> Result<(f64, f64), CombIdError> {
    if b == b.round() && (b.round() as i64).rem_euclid(2) == 1 {
        return Err(CombIdError::OddIntegerPole(b));
    }
    let lhs = (std::f64::consts::FRAC_PI_2 * b).tan();
    let b2 = b * b;
    let mut sum = 0.0;
    for j in (1..=terms).rev() {
        let odd = (2 * j - 1) as f64;
        sum += 1.0 / (odd * odd - b2);
    }
    let rhs = 4.0 * b / std::f64::consts::PI * sum;
    Ok((lhs, rhs))
}
