//! Complete elliptic integrals and the machinery needed to verify a catalog of
//! classical definite-integral identities by two independent routes.
//!
//! The crate is organized as a small stack:
//!
//! * [`specfun`] — gamma-family special functions (Γ, ln Γ, B, ψ, Pochhammer,
//!   double factorials, binomials).
//! * [`combid`] — exact rational arithmetic for the combinatorial identities
//!   behind the catalog's series manipulations (alternating binomial sums,
//!   Wallis coefficients, a telescoping certificate, harmonic-sum lemmas).
//! * [`hyp`] — hypergeometric series: ₂F₁ by term recurrence, terminating ₄F₃
//!   (floating and exact-rational), and a balanced-series transformation check.
//! * [`quad`] — numerical quadrature: a globally adaptive embedded-rule
//!   integrator, substitutions for endpoint singularities and semi-infinite
//!   ranges, reductions for oscillatory integrals of periodic kernels, and a
//!   principal-value oracle with symmetric ε-exclusion.
//! * [`elliptic`] — K, E, Π via the arithmetic–geometric mean, the complementary
//!   companions, the Legendre relation residual, singular moduli, and the
//!   imaginary-modulus integral.
//! * [`catalog`] — the registry of integral-table entries, each verified by an
//!   oracle route (quadrature / oscillatory summation / PV exclusion) against a
//!   closed form, plus JSON/CSV report serialization.
//!
//! Every catalog entry states its closed form in terms of the lower layers, and
//! every verification compares at least two independent computations of the same
//! number. Exact identities are checked in big-rational arithmetic, never in
//! floating point.

pub mod catalog;
pub mod combid;
pub mod elliptic;
pub mod hyp;
pub mod quad;
pub mod specfun;
