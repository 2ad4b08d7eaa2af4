//! Hypergeometric series engine.
//!
//! Three layers, in increasing specialization:
//!
//! * [`hyp2f1`] — the classical Gauss series Σ (a)ⱼ(b)ⱼ/((c)ⱼ j!) xʲ for
//!   |x| < 1, evaluated by term-ratio recurrence. This is the series route to
//!   the complete elliptic integrals and deliberately refuses to limp along
//!   near x = 1, where the AGM route takes over.
//! * [`hyp4f3_terminating`] — a ₄F₃ whose series is a finite sum because one
//!   numerator parameter is a non-positive integer; with an exact-rational
//!   twin [`hyp4f3_terminating_exact`] for rational parameters.
//! * [`bailey_transform_check`] / [`bailey_harmonic_instance`] — the balanced
//!   ₄F₃ transformation that converts the odd-harmonic sum identity into a
//!   terminating-series equality, evaluated on both sides so callers can
//!   assert they agree.

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::combid::{pochhammer_rational, Rational};
use crate::specfun::pochhammer;

/// Term cap for the nonterminating series; past this the argument is too
/// close to the boundary for the series route to be honest.
const MAX_TERMS: usize = 100_000;

/// Relative term-size stopping threshold.
const REL_EPS: f64 = 1e-16;

/// Absolute floor under which a term counts as converged regardless of the
/// partial sum's size.
const ABS_FLOOR: f64 = 1e-300;

/// Errors from hypergeometric evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HypError {
    /// The term cap was reached before the stopping criterion.
    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },
    /// A denominator parameter reached a non-positive integer before the
    /// series terminated.
    #[error("denominator parameter {parameter} hits zero at term {index}")]
    Pole { parameter: f64, index: u32 },
    /// Argument outside the series' region of convergence.
    #[error("argument {value} outside domain: {reason}")]
    Domain { value: f64, reason: &'static str },
}

/// Parameters of a generalized hypergeometric series Σ Π(nᵢ)ⱼ/Π(dᵢ)ⱼ · xʲ/j!.
#[derive(Debug, Clone, PartialEq)]
pub struct HypParams {
    pub numerator: Vec<f64>,
    pub denominator: Vec<f64>,
    pub argument: f64,
}

fn is_nonpositive_integer(p: f64) -> bool {
    p <= 0.0 && p == p.floor()
}

/// Gauss hypergeometric function ₂F₁(a, b; c; x) by direct summation.
///
/// Requires |x| < 1 unless a or b is a non-positive integer (the series then
/// terminates and any argument is fine). Stops when the next term drops below
/// 1e-16 of the partial sum; returns [`HypError::NonConvergence`] if 100 000
/// terms do not get there, and [`HypError::Pole`] if c hits a non-positive
/// integer while terms are still flowing.
pub fn hyp2f1(a: f64, b: f64, c: f64, x: f64) -> Result<f64, HypError> {
    let terminates = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if !terminates && x.abs() >= 1.0 {
        return Err(HypError::Domain {
            value: x,
            reason: "hyp2f1 series requires |x| < 1 unless it terminates",
        });
    }
    let mut sum = 0.0;
    let mut term = 1.0;
    for j in 0..MAX_TERMS {
        sum += term;
        let jf = j as f64;
        let num = (a + jf) * (b + jf);
        if num == 0.0 {
            return Ok(sum); // terminated exactly
        }
        let cj = c + jf;
        if cj == 0.0 {
            return Err(HypError::Pole {
                parameter: c,
                index: j as u32,
            });
        }
        term *= num / (cj * (jf + 1.0)) * x;
        if term.abs() < REL_EPS * sum.abs() || term.abs() < ABS_FLOOR {
            return Ok(sum + term);
        }
    }
    Err(HypError::NonConvergence { terms: MAX_TERMS })
}

/// Smallest m ≥ 0 with −m among the numerator parameters, i.e. the index of
/// the last nonzero term of the terminating series.
fn termination_order(numerator: &[f64]) -> Option<u32> {
    numerator
        .iter()
        .filter(|p| is_nonpositive_integer(**p))
        .map(|p| (-p) as u32)
        .min()
}

/// Terminating generalized hypergeometric sum in floating point.
///
/// One numerator parameter must be a non-positive integer −m; the sum then
/// has exactly m+1 terms. Denominator parameters may be non-positive
/// rationals as long as none hits zero before the series stops — the loop
/// never forms the term ratio past the last term, so a denominator pole *at*
/// the truncation index is harmless, as it must be for the balanced
/// transformation instances below.
pub fn hyp4f3_terminating(params: &HypParams) -> Result<f64, HypError> {
    let m = termination_order(&params.numerator).ok_or(HypError::Domain {
        value: params.argument,
        reason: "series does not terminate: no numerator parameter is a non-positive integer",
    })?;
    let mut sum = 0.0;
    let mut term = 1.0;
    for i in 0..=m {
        sum += term;
        if i == m {
            break;
        }
        let fi = i as f64;
        let mut ratio = params.argument / (fi + 1.0);
        for p in &params.numerator {
            ratio *= p + fi;
        }
        for q in &params.denominator {
            let qi = q + fi;
            if qi == 0.0 {
                return Err(HypError::Pole {
                    parameter: *q,
                    index: i,
                });
            }
            ratio /= qi;
        }
        term *= ratio;
    }
    Ok(sum)
}

/// Exact-rational twin of [`hyp4f3_terminating`] for rational parameters.
pub fn hyp4f3_terminating_exact(
    numerator: &[Rational],
    denominator: &[Rational],
    argument: &Rational,
) -> Result<Rational, HypError> {
    let m = numerator
        .iter()
        .filter(|p| p.is_integer() && !p.is_positive())
        .map(|p| (-p).to_integer().to_u32().expect("termination order fits in u32"))
        .min()
        .ok_or(HypError::Domain {
            value: f64::NAN,
            reason: "series does not terminate: no numerator parameter is a non-positive integer",
        })?;
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    for i in 0..=m {
        sum += &term;
        if i == m {
            break;
        }
        let fi = Rational::from_integer(i.into());
        let mut ratio = argument / Rational::from_integer((i + 1).into());
        for p in numerator {
            ratio *= p + &fi;
        }
        for q in denominator {
            let qi = q + &fi;
            if qi.is_zero() {
                return Err(HypError::Pole {
                    parameter: q.to_f64().unwrap_or(f64::NAN),
                    index: i,
                });
            }
            ratio /= qi;
        }
        term *= ratio;
    }
    Ok(sum)
}

/// Both sides of the balanced ₄F₃ transformation
///
/// ```text
/// ₄F₃[x, y, z, −m; u, v, w; 1]
///   = ((v−z)ₘ(w−z)ₘ)/((v)ₘ(w)ₘ) ·
///     ₄F₃[u−x, u−y, z, −m; 1−v+z−m, 1−w+z−m, u; 1],
/// ```
///
/// evaluated in floating point and returned as `(lhs, rhs)`. Valid when both
/// series terminate after m+1 terms and the parameters are balanced (each
/// side's denominator parameters sum to one plus its numerator parameters).
pub fn bailey_transform_check(
    x: f64,
    y: f64,
    z: f64,
    m: u32,
    u: f64,
    v: f64,
    w: f64,
) -> Result<(f64, f64), HypError> {
    let mf = m as f64;
    let lhs = hyp4f3_terminating(&HypParams {
        numerator: vec![x, y, z, -mf],
        denominator: vec![u, v, w],
        argument: 1.0,
    })?;
    let prefactor = pochhammer(v - z, m) * pochhammer(w - z, m)
        / (pochhammer(v, m) * pochhammer(w, m));
    let tail = hyp4f3_terminating(&HypParams {
        numerator: vec![u - x, u - y, z, -mf],
        denominator: vec![1.0 - v + z - mf, 1.0 - w + z - mf, u],
        argument: 1.0,
    })?;
    Ok((lhs, prefactor * tail))
}

/// Exact-rational evaluation of both sides of the balanced transformation at
/// the odd-harmonic specialization x = 1−j, y = z = 1, m = j−1,
/// u = v = 3/2−j, w = 2, returned as `(lhs, rhs)`.
///
/// This is the instance that turns the odd-harmonic sum identity into a
/// statement about terminating series; the two sides must agree exactly.
///
/// # Panics
/// Panics if `j == 0`.
pub fn bailey_harmonic_instance(j: u32) -> (Rational, Rational) {
    assert!(j >= 1, "bailey_harmonic_instance requires j >= 1");
    let rat = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let int = |n: i64| Rational::from_integer(n.into());
    let jj = j as i64;
    let m = j - 1;

    let one = Rational::one();
    let lhs = hyp4f3_terminating_exact(
        &[int(1 - jj), one.clone(), one.clone(), int(-(jj - 1))],
        &[rat(3 - 2 * jj, 2), rat(3 - 2 * jj, 2), int(2)],
        &one,
    )
    .expect("lhs instance terminates before any denominator pole");

    // Prefactor ((v−z)ₘ(w−z)ₘ)/((v)ₘ(w)ₘ) at v = 3/2−j, w = 2, z = 1.
    let prefactor = pochhammer_rational(&rat(1 - 2 * jj, 2), m)
        * pochhammer_rational(&one, m)
        / (pochhammer_rational(&rat(3 - 2 * jj, 2), m) * pochhammer_rational(&int(2), m));

    let tail = hyp4f3_terminating_exact(
        &[rat(1, 2), rat(1 - 2 * jj, 2), one.clone(), int(1 - jj)],
        &[rat(3, 2), int(1 - jj), rat(3 - 2 * jj, 2)],
        &one,
    )
    .expect("rhs instance terminates before any denominator pole");

    (lhs, prefactor * tail)
}
