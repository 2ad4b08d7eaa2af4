//! Registry of classical integral-table identities, verified by two routes.
//!
//! Each [`Entry`] pairs a *left-hand side* oracle — an honest numerical
//! evaluation of the integral or series as printed (adaptive quadrature,
//! oscillatory summation, principal-value exclusion, or tail-corrected
//! series) — with a *right-hand side* closed form built from the gamma and
//! elliptic layers. Verification reports the two values, their absolute and
//! relative difference, and a pass flag.
//!
//! Three independence rules keep the checks meaningful:
//!
//! * closed forms involving K or E are evaluated through the AGM **and**,
//!   where the parameter satisfies m = k² ≤ 0.7, re-evaluated through the
//!   ₂F₁ series; both must agree with the oracle;
//! * oscillatory and principal-value entries carry a second, slower oracle
//!   (direct partial-period summation / symmetric ε-exclusion) that must
//!   agree with the closed form at its own coarser tolerance;
//! * exact combinatorial facts feeding the catalog are proved in rational
//!   arithmetic in [`crate::combid`], never in floating point.
//!
//! Tolerance tiers: adaptive quadrature vs closed form 1e-9 (often far
//! better); direct oscillatory summation 1e-6; principal-value exclusion
//! 1e-5.

mod entries;

use crate::quad::QuadError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;
use thiserror::Error;

/// Errors surfaced by the registry lookup and parameter validation.
///
/// Oracle failures (non-convergence, unbounded kernels, …) are *not* errors
/// at this level: verification reports them as a failed
/// [`VerificationResult`] so a batch run never aborts.
#[derive(Debug, Error)]
pub enum CatalogError {
    /// No entry with the requested id.
    #[error("unknown entry id `{0}`")]
    UnknownEntry(String),
    /// Parameter outside the entry's declared domain.
    #[error("parameter {param:?} outside the domain of `{id}`: {reason}")]
    OutOfDomain {
        /// Entry whose domain was violated.
        id: &'static str,
        /// The offending parameter.
        param: Param,
        /// What the domain requires.
        reason: &'static str,
    },
    /// An oracle route failed to produce a value (recorded in the result).
    #[error("oracle failure: {0}")]
    Oracle(String),
}

/// A parameter assignment for one verification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Param {
    /// Parameter-free entry.
    None,
    /// One real parameter (a modulus k, a magnitude κ, an argument b, …).
    Real(f64),
    /// One integer parameter (an index r or power j).
    Int(i64),
    /// An ordered pair of reals.
    Pair(f64, f64),
}

/// The parameter values an entry accepts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// Parameter-free: verified at the single point [`Param::None`].
    Point,
    /// A modulus interval: `Param::Real(k)` with `lo ≤ k ≤ hi`.
    ModulusRange {
        /// Smallest accepted modulus.
        lo: f64,
        /// Largest accepted modulus.
        hi: f64,
    },
    /// A fixed list of real parameter values.
    FixedReals(&'static [f64]),
    /// `Param::Int(i)` with `lo ≤ i ≤ hi`.
    IntRange {
        /// Smallest accepted integer.
        lo: i64,
        /// Largest accepted integer.
        hi: i64,
    },
    /// A fixed list of real pairs.
    FixedPairs(&'static [(f64, f64)]),
}

/// Which evaluation route a closed form should use for K and E.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Route {
    /// Arithmetic–geometric mean (always available).
    ClosedForm,
    /// ₂F₁ series (available when every parameter satisfies m ≤ 0.7).
    Series,
}

/// Value and work counter returned by an oracle route.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Oracle {
    pub value: f64,
    pub evals: u64,
}

/// A secondary oracle with its own (coarser) tolerance.
pub(crate) struct DirectCheck {
    pub run: fn(&Param) -> Result<Oracle, CatalogError>,
    pub tol: f64,
}

/// One integral-table identity: metadata, an oracle recipe for the printed
/// left-hand side, and a closed form for the right-hand side.
pub struct Entry {
    /// Stable unique id, e.g. `GR-3.842.3a` (table number plus a letter when
    /// one table entry collects several displays).
    pub id: &'static str,
    /// Mathematical family used for grouping in listings.
    pub family: &'static str,
    /// The identity in one line.
    pub description: &'static str,
    /// Parameter values accepted by both sides.
    pub domain: Domain,
    /// Tolerance used when the caller does not override it.
    pub default_tol: f64,
    /// Whether the integral exists only as a Cauchy principal value.
    pub principal_value: bool,
    /// Correction note when the customary printed form contains a typo.
    pub errata: Option<&'static str>,
    /// Name of the parameter in reports (`k`, `kappa`, `b`, `r`, `j`).
    pub param_name: &'static str,
    pub(crate) lhs: fn(&Param) -> Result<Oracle, CatalogError>,
    pub(crate) rhs: fn(&Param, Route) -> Result<Option<f64>, CatalogError>,
    pub(crate) direct: Option<DirectCheck>,
}

/// Outcome of verifying one entry at one parameter assignment.
///
/// `pass` is true iff the primary oracle matches the closed form within the
/// tolerance (absolutely or relatively) *and* every secondary route (series
/// re-evaluation, direct oscillatory/PV oracle) matches within its own
/// tolerance.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerificationResult {
    /// Entry id.
    pub id: String,
    /// Parameter values by name (empty for parameter-free entries).
    pub params: BTreeMap<String, f64>,
    /// Left-hand side: the oracle evaluation of the printed integral/series.
    pub lhs: f64,
    /// Right-hand side: the closed form (AGM route where K/E are involved).
    pub rhs: f64,
    /// |lhs − rhs|.
    pub abs_err: f64,
    /// |lhs − rhs| / |rhs|.
    pub rel_err: f64,
    /// Whether every route agreed within its tolerance.
    pub pass: bool,
    /// Total integrand evaluations / series terms across all oracle routes.
    pub evals: u64,
    /// Wall-clock time for this verification, in milliseconds.
    pub elapsed_ms: u64,
}

impl Entry {
    /// Human-readable rendering of [`Entry::domain`] for listings.
    pub fn domain_summary(&self) -> String {
        let join_reals = |vals: &[f64]| {
            vals.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        match self.domain {
            Domain::Point => "parameter-free".to_string(),
            Domain::ModulusRange { lo, hi } => format!("{} in [{lo}, {hi}]", self.param_name),
            Domain::FixedReals(vals) => {
                format!("{} in {{{}}}", self.param_name, join_reals(vals))
            }
            Domain::IntRange { lo, hi } => format!("{} in {lo}..={hi}", self.param_name),
            Domain::FixedPairs(pairs) => {
                let body = pairs
                    .iter()
                    .map(|(a, b)| format!("({a}, {b})"))
                    .collect::<Vec<_>>()
                    .join(", ");
                format!("(a, b) in {{{body}}}")
            }
        }
    }

    /// Checks that `param` has the right shape and lies in [`Entry::domain`].
    pub fn check_param(&self, param: &Param) -> Result<(), CatalogError> {
        let fail = |reason: &'static str| {
            Err(CatalogError::OutOfDomain {
                id: self.id,
                param: *param,
                reason,
            })
        };
        match (self.domain, param) {
            (Domain::Point, Param::None) => Ok(()),
            (Domain::Point, _) => fail("entry is parameter-free"),
            (Domain::ModulusRange { lo, hi }, Param::Real(k)) => {
                if k.is_finite() && *k >= lo && *k <= hi {
                    Ok(())
                } else {
                    fail("modulus outside the entry's interval")
                }
            }
            (Domain::FixedReals(vals), Param::Real(v)) => {
                if vals.iter().any(|w| (w - v).abs() <= 1e-12) {
                    Ok(())
                } else {
                    fail("value not in the entry's fixed parameter list")
                }
            }
            (Domain::IntRange { lo, hi }, Param::Int(i)) => {
                if *i >= lo && *i <= hi {
                    Ok(())
                } else {
                    fail("index outside the entry's integer range")
                }
            }
            (Domain::FixedPairs(pairs), Param::Pair(a, b)) => {
                if pairs
                    .iter()
                    .any(|(pa, pb)| (pa - a).abs() <= 1e-12 && (pb - b).abs() <= 1e-12)
                {
                    Ok(())
                } else {
                    fail("pair not in the entry's fixed parameter list")
                }
            }
            _ => fail("parameter shape does not match the entry's domain"),
        }
    }

    /// The parameter assignments this entry contributes to a batch run over
    /// `k_grid`. Interval-domain entries take the in-range grid points;
    /// entries with fixed or integer domains ignore the grid and use their
    /// own points; an empty grid therefore exercises exactly the entries
    /// that need no grid.
    pub fn expand(&self, k_grid: &[f64]) -> Vec<Param> {
        match self.domain {
            Domain::Point => vec![Param::None],
            Domain::ModulusRange { lo, hi } => k_grid
                .iter()
                .filter(|k| k.is_finite() && **k >= lo && **k <= hi)
                .map(|k| Param::Real(*k))
                .collect(),
            Domain::FixedReals(vals) => vals.iter().map(|v| Param::Real(*v)).collect(),
            Domain::IntRange { lo, hi } => (lo..=hi).map(Param::Int).collect(),
            Domain::FixedPairs(pairs) => {
                pairs.iter().map(|(a, b)| Param::Pair(*a, *b)).collect()
            }
        }
    }

    /// Report key/value map for a parameter assignment.
    fn params_map(&self, param: &Param) -> BTreeMap<String, f64> {
        let mut map = BTreeMap::new();
        match param {
            Param::None => {}
            Param::Real(v) => {
                map.insert(self.param_name.to_string(), *v);
            }
            Param::Int(i) => {
                map.insert(self.param_name.to_string(), *i as f64);
            }
            Param::Pair(a, b) => {
                map.insert("a".to_string(), *a);
                map.insert("b".to_string(), *b);
            }
        }
        map
    }

    /// Runs every route for one parameter assignment and assembles the
    /// result. Oracle failures become `pass = false` with NaN placeholders;
    /// they never propagate as errors.
    fn verify(&self, param: &Param, tol: f64) -> VerificationResult {
        let start = Instant::now();
        let mut evals = 0u64;
        let mut routes_ok = true;

        let lhs = match (self.lhs)(param) {
            Ok(o) => {
                evals += o.evals;
                o.value
            }
            Err(_) => {
                routes_ok = false;
                f64::NAN
            }
        };
        let rhs = match (self.rhs)(param, Route::ClosedForm) {
            Ok(Some(v)) => v,
            _ => {
                routes_ok = false;
                f64::NAN
            }
        };

        let abs_err = (lhs - rhs).abs();
        let rel_err = abs_err / rhs.abs();
        let within = |err_abs: f64, err_rel: f64, t: f64| err_abs <= t || err_rel <= t;
        let mut pass = routes_ok && within(abs_err, rel_err, tol);

        // Series re-evaluation of the closed form, where applicable: the
        // oracle must agree with both routes.
        match (self.rhs)(param, Route::Series) {
            Ok(Some(series)) => {
                let a = (lhs - series).abs();
                pass = pass && within(a, a / series.abs(), tol);
            }
            Ok(None) => {}
            Err(_) => pass = false,
        }

        // Secondary oracle at its own tolerance, compared to the closed form.
        if let Some(direct) = &self.direct {
            match (direct.run)(param) {
                Ok(o) => {
                    evals += o.evals;
                    let a = (o.value - rhs).abs();
                    pass = pass && within(a, a / rhs.abs(), direct.tol);
                }
                Err(_) => pass = false,
            }
        }

        VerificationResult {
            id: self.id.to_string(),
            params: self.params_map(param),
            lhs,
            rhs,
            abs_err,
            rel_err,
            pass,
            evals,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// The full registry, in listing order (grouped by family).
pub fn list_entries() -> &'static [Entry] {
    entries::registry()
}

/// Looks up one entry by id.
pub fn find_entry(id: &str) -> Option<&'static Entry> {
    entries::registry().iter().find(|e| e.id == id)
}

/// The batch grid used when the caller does not supply one: a sweep of the
/// modulus range plus the five singular moduli.
pub fn default_grid() -> Vec<f64> {
    let mut grid = vec![0.1, 0.3, 0.5, 0.7, 0.9];
    for r in 1..=5 {
        grid.push(crate::elliptic::singular_modulus(r).expect("r in 1..=5"));
    }
    grid
}

/// Verifies one entry at one parameter assignment.
///
/// Errors are limited to lookup/domain problems; oracle non-convergence is
/// reported inside the result with `pass = false`.
pub fn verify_entry(
    id: &str,
    param: &Param,
    tol: Option<f64>,
) -> Result<VerificationResult, CatalogError> {
    let entry = find_entry(id).ok_or_else(|| CatalogError::UnknownEntry(id.to_string()))?;
    entry.check_param(param)?;
    Ok(entry.verify(param, tol.unwrap_or(entry.default_tol)))
}

/// Verifies one entry at every parameter assignment it contributes to
/// `k_grid` (see [`Entry::expand`]).
pub fn verify_entry_over_grid(
    id: &str,
    k_grid: &[f64],
    tol: Option<f64>,
) -> Result<Vec<VerificationResult>, CatalogError> {
    let entry = find_entry(id).ok_or_else(|| CatalogError::UnknownEntry(id.to_string()))?;
    let mut results: Vec<VerificationResult> = entry
        .expand(k_grid)
        .iter()
        .map(|p| entry.verify(p, tol.unwrap_or(entry.default_tol)))
        .collect();
    sort_results(&mut results);
    Ok(results)
}

/// Verifies every entry at every applicable grid point.
///
/// The batch never aborts: oracle failures appear as failed results. The
/// report is ordered by entry id, then by parameter values, regardless of
/// evaluation order.
pub fn verify_all(k_grid: &[f64], tol: Option<f64>) -> Vec<VerificationResult> {
    let mut results = Vec::new();
    for entry in entries::registry() {
        for param in entry.expand(k_grid) {
            results.push(entry.verify(&param, tol.unwrap_or(entry.default_tol)));
        }
    }
    sort_results(&mut results);
    results
}

/// Fixed report order: id, then parameter values.
fn sort_results(results: &mut [VerificationResult]) {
    results.sort_by(|a, b| {
        a.id.cmp(&b.id).then_with(|| {
            let av: Vec<f64> = a.params.values().copied().collect();
            let bv: Vec<f64> = b.params.values().copied().collect();
            av.partial_cmp(&bv).unwrap_or(std::cmp::Ordering::Equal)
        })
    });
}

/// Zeroes the timing field, leaving a fully deterministic report.
pub fn zero_timing(results: &mut [VerificationResult]) {
    for r in results {
        r.elapsed_ms = 0;
    }
}

/// JSON report: an array of result objects with fields exactly
/// `{id, params, lhs, rhs, abs_err, rel_err, pass, evals, elapsed_ms}`.
/// Non-finite numbers serialize as `null`.
pub fn to_json(results: &[VerificationResult]) -> String {
    serde_json::to_string_pretty(results).expect("report serialization cannot fail")
}

/// CSV report with the same columns as the JSON fields; `params` is a
/// `;`-joined list of `name=value`.
pub fn to_csv(results: &[VerificationResult]) -> String {
    let mut out = String::from("id,params,lhs,rhs,abs_err,rel_err,pass,evals,elapsed_ms\n");
    for r in results {
        let params = r
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.id, params, r.lhs, r.rhs, r.abs_err, r.rel_err, r.pass, r.evals, r.elapsed_ms
        )
        .expect("writing to a String cannot fail");
    }
    out
}

// ---------------------------------------------------------------------------
// Shared helpers for entry implementations.
// ---------------------------------------------------------------------------

pub(crate) fn real_param(p: &Param) -> Result<f64, CatalogError> {
    match p {
        Param::Real(v) => Ok(*v),
        _ => Err(CatalogError::Oracle(format!(
            "expected a real parameter, got {p:?}"
        ))),
    }
}

pub(crate) fn int_param(p: &Param) -> Result<i64, CatalogError> {
    match p {
        Param::Int(i) => Ok(*i),
        _ => Err(CatalogError::Oracle(format!(
            "expected an integer parameter, got {p:?}"
        ))),
    }
}

pub(crate) fn pair_param(p: &Param) -> Result<(f64, f64), CatalogError> {
    match p {
        Param::Pair(a, b) => Ok((*a, *b)),
        _ => Err(CatalogError::Oracle(format!(
            "expected a pair parameter, got {p:?}"
        ))),
    }
}

pub(crate) fn quad_failure(e: QuadError) -> CatalogError {
    CatalogError::Oracle(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn registry_is_well_formed() {
        let entries = list_entries();
        assert!(entries.len() >= 27, "only {} entries", entries.len());
        let mut ids: Vec<&str> = entries.iter().map(|e| e.id).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n, "duplicate entry ids");
        for e in entries {
            assert!(e.default_tol > 0.0);
            assert!(!e.description.is_empty());
            assert!(
                !e.expand(&default_grid()).is_empty(),
                "{} contributes nothing to the default grid",
                e.id
            );
        }
        // Principal-value marking and errata notes.
        assert!(find_entry("GR-3.842.3c").unwrap().principal_value);
        assert!(find_entry("GR-3.842.3d").unwrap().principal_value);
        assert!(find_entry("GR-3.841.3").unwrap().principal_value);
        assert!(find_entry("GR-3.841.4").unwrap().principal_value);
        assert!(find_entry("GR-4.395.1").unwrap().errata.is_some());
    }

    #[test]
    fn unknown_and_out_of_domain_are_errors() {
        assert!(matches!(
            verify_entry("GR-0.0.0", &Param::None, None),
            Err(CatalogError::UnknownEntry(_))
        ));
        assert!(matches!(
            verify_entry("GR-3.842.3a", &Param::Real(1.2), None),
            Err(CatalogError::OutOfDomain { .. })
        ));
        assert!(matches!(
            verify_entry("GR-8.129.1", &Param::Real(0.5), None),
            Err(CatalogError::OutOfDomain { .. })
        ));
        assert!(matches!(
            verify_entry("singular-moduli", &Param::Int(7), None),
            Err(CatalogError::OutOfDomain { .. })
        ));
        assert!(matches!(
            verify_entry("GR-4.242.1", &Param::Pair(5.0, 1.0), None),
            Err(CatalogError::OutOfDomain { .. })
        ));
    }

    #[test]
    fn gamma_closed_forms_pass() {
        let r = verify_entry("GR-8.129.1", &Param::None, Some(1e-11)).unwrap();
        assert!(r.pass, "abs_err {:e}", r.abs_err);
        assert_abs_diff_eq!(r.rhs, 1.854_074_677_301_371_9, epsilon = 1e-12);

        let r = verify_entry("GR-3.166.16", &Param::None, None).unwrap();
        assert!(r.pass);
        assert_abs_diff_eq!(r.lhs, 1.311_028_777_146_059_9, epsilon = 1e-11);

        let r = verify_entry("GR-3.166.18", &Param::None, None).unwrap();
        assert!(r.pass);
        assert_abs_diff_eq!(r.lhs, 0.599_070_117_367_796_1, epsilon = 1e-11);

        let r = verify_entry("E-imag", &Param::None, None).unwrap();
        assert!(r.pass);
        assert_abs_diff_eq!(r.lhs, 1.910_098_894_513_856, epsilon = 1e-11);
    }

    #[test]
    fn limit_point_of_weighted_arc_integral() {
        // At k = 0 both sides collapse to π/8.
        let r = verify_entry("GR-3.842.4", &Param::Real(0.0), Some(1e-10)).unwrap();
        assert!(r.pass);
        assert_abs_diff_eq!(r.lhs, PI / 8.0, epsilon = 1e-10);
        assert_abs_diff_eq!(r.rhs, PI / 8.0, epsilon = 1e-15);
    }

    #[test]
    fn log_kernel_closed_form_value() {
        let r = verify_entry("GR-4.414.1", &Param::Real(0.6), Some(1e-9)).unwrap();
        assert!(r.pass);
        assert_abs_diff_eq!(r.rhs, -0.390_669_421_059_479_1, epsilon = 1e-12);
        assert_abs_diff_eq!(r.lhs, r.rhs, epsilon = 1e-10);
    }

    #[test]
    fn arcsine_kernel_pairwise_structure() {
        // The two E-valued arccos/arcsin evaluations interlock: the sum of
        // the (π/2 − E)/k² and (E − (π/2)k′)/k² forms is (π/2)(1 − k′)/k².
        let k: f64 = 0.5;
        let five = verify_entry("GR-4.522.5", &Param::Real(k), None).unwrap();
        let seven = verify_entry("GR-4.522.7", &Param::Real(k), None).unwrap();
        let kp = (1.0 - k * k).sqrt();
        assert_abs_diff_eq!(
            five.rhs + seven.rhs,
            (PI / 2.0) * (1.0 - kp) / (k * k),
            epsilon = 1e-12
        );
        assert!(five.pass && seven.pass);
    }

    #[test]
    fn batch_ordering_and_determinism() {
        let grid = [0.5, 0.3];
        let mut a = verify_all(&grid, None);
        let mut b = verify_all(&grid, None);
        zero_timing(&mut a);
        zero_timing(&mut b);
        assert_eq!(a, b);
        // Ordered by id then parameter.
        for w in a.windows(2) {
            let (x, y) = (&w[0], &w[1]);
            let xv: Vec<f64> = x.params.values().copied().collect();
            let yv: Vec<f64> = y.params.values().copied().collect();
            assert!(
                x.id < y.id || (x.id == y.id && xv <= yv),
                "out of order: {}{:?} then {}{:?}",
                x.id,
                xv,
                y.id,
                yv
            );
        }
    }

    #[test]
    fn empty_grid_runs_grid_free_entries_only() {
        let results = verify_all(&[], None);
        assert!(!results.is_empty());
        for r in &results {
            let entry = find_entry(&r.id).unwrap();
            assert!(
                !matches!(entry.domain, Domain::ModulusRange { .. }),
                "{} should have been skipped on an empty grid",
                r.id
            );
        }
        // Parameter-free and fixed-domain entries are all present.
        for id in ["GR-8.129.1", "E-imag", "singular-moduli", "GR-4.242.1"] {
            assert!(results.iter().any(|r| r.id == id), "{id} missing");
        }
    }

    #[test]
    fn steep_modulus_skips_complement_denominator_entry() {
        let results = verify_all(&[0.99], None);
        assert!(
            !results.iter().any(|r| r.id == "GR-4.522.4a"),
            "entry with k′ in a denominator should auto-skip at k = 0.99"
        );
        let k_entry: Vec<_> = results.iter().filter(|r| r.id == "GR-3.842.3a").collect();
        assert_eq!(k_entry.len(), 1);
        assert!(k_entry[0].pass, "abs_err {:e}", k_entry[0].abs_err);
    }

    #[test]
    fn report_serialization_round_trips() {
        let mut results = verify_all(&[0.5], None);
        zero_timing(&mut results);
        let json = to_json(&results);
        let back: Vec<VerificationResult> = serde_json::from_str(&json).unwrap();
        assert_eq!(results, back);

        let csv = to_csv(&results);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "id,params,lhs,rhs,abs_err,rel_err,pass,evals,elapsed_ms"
        );
        assert_eq!(csv.lines().count(), results.len() + 1);
    }
}
