//! Chi-square estimation intervals for a Poisson mean and their exact
//! coverage probabilities.
//!
//! For an observed count `x`, every interval in this crate has the form
//! `[ ½·χ²(α/2; f₁), ½·χ²(1−α/2; f₂) ]` where `f₁` and `f₂` are small
//! integer functions of `x`. Six such rules are implemented (see
//! [`Method`]): the classical confidence interval, a structural /
//! Jeffreys-scale-prior credible interval, a Bayes interval under a uniform
//! prior, a Bayes interval under the Poisson Jeffreys prior, and two
//! one-degree-of-freedom compromises between them. The [`coverage`] module
//! evaluates, for any true mean λ, the exact probability that the interval
//! built from a Poisson(λ) count captures λ.
//!
//! ```
//! use poisson_chisq::{lambda_interval, Method, Probability};
//!
//! let alpha = Probability::new(0.05)?;
//! let interval = lambda_interval(Method::Usual, 3, alpha)?;
//! assert!(interval.lower < 3.0 && 3.0 < interval.upper);
//! # Ok::<(), poisson_chisq::Error>(())
//! ```
//!
//! Everything is a pure function of its arguments; there is no shared
//! mutable state anywhere in the crate.

pub mod coverage;
pub mod intervals;
pub mod special;

pub use coverage::{
    coverage_at, coverage_curve, mc_coverage, round_to_decimals, summarize, CoverageCurve,
    GridSpec, MonteCarloEstimate, SummaryStats,
};
pub use intervals::{
    lambda_interval, rate_interval, DegreePair, EstimationInterval, Method, Target,
};
pub use special::{
    chi_square_cdf, chi_square_quantile, log_gamma, poisson_cdf, poisson_pmf,
    regularized_lower_gamma, DegreesOfFreedom, Probability,
};

/// Errors reported by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    Domain(&'static str),
    /// An iterative kernel exhausted its iteration budget.
    Convergence(&'static str),
    /// A curve with no grid points was passed where one point is required.
    EmptyCurve,
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::Convergence(what) => write!(f, "failed to converge: {what}"),
            Error::EmptyCurve => write!(f, "coverage curve has no values"),
        }
    }
}

impl std::error::Error for Error {}
