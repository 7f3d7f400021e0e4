//! The six chi-square interval rules and the interval constructors for the
//! Poisson mean λ and mean rate ν.
//!
//! Every method yields the interval `[½·χ²(α/2; f₁), ½·χ²(1−α/2; f₂)]` for
//! λ, differing only in how `f₁` and `f₂` depend on the observed count `x`.
//! When `x = 0` makes a raw degree zero, the edge rules apply: a zero `f₁`
//! pins the lower limit to 0, and a zero `f₂` is replaced by 1 before the
//! upper limit is computed.

use std::fmt;
use std::str::FromStr;

use crate::special::{chi_square_quantile, DegreesOfFreedom, Probability};
use crate::Error;

/// The six interval rules.
///
/// | method | `f₁(x)` | `f₂(x)` | origin |
/// |---|---|---|---|
/// | [`Usual`](Method::Usual) | 2x | 2x+2 | classical confidence interval |
/// | [`StructuralJeffreysScale`](Method::StructuralJeffreysScale) | 2x | 2x | structural posterior; also the Jeffreys 1/λ scale prior |
/// | [`BayesUniform`](Method::BayesUniform) | 2x+2 | 2x+2 | uniform prior credible interval |
/// | [`JeffreysPoisson`](Method::JeffreysPoisson) | 2x+1 | 2x+1 | Poisson Jeffreys 1/√λ prior |
/// | [`RaiseF1`](Method::RaiseF1) | 2x+1 | 2x+2 | one-degree compromise, lower end |
/// | [`DropF2`](Method::DropF2) | 2x | 2x+1 | one-degree compromise, upper end |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Usual,
    StructuralJeffreysScale,
    BayesUniform,
    JeffreysPoisson,
    RaiseF1,
    DropF2,
}

impl Method {
    /// All methods in canonical (table/CSV column) order.
    pub const ALL: [Method; 6] = [
        Method::Usual,
        Method::StructuralJeffreysScale,
        Method::BayesUniform,
        Method::JeffreysPoisson,
        Method::RaiseF1,
        Method::DropF2,
    ];

    /// Raw degrees of freedom for an observed count, before any `x = 0`
    /// adjustment. Interval construction applies the edge rules; this
    /// reports the rule itself.
    pub fn degrees_for(self, x: u64) -> DegreePair {
        let (f1, f2) = match self {
            Method::Usual => (2 * x, 2 * x + 2),
            Method::StructuralJeffreysScale => (2 * x, 2 * x),
            Method::BayesUniform => (2 * x + 2, 2 * x + 2),
            Method::JeffreysPoisson => (2 * x + 1, 2 * x + 1),
            Method::RaiseF1 => (2 * x + 1, 2 * x + 2),
            Method::DropF2 => (2 * x, 2 * x + 1),
        };
        DegreePair { f1, f2 }
    }

    /// Stable machine-readable name, used on the command line and in CSV
    /// headers.
    pub fn name(self) -> &'static str {
        match self {
            Method::Usual => "usual",
            Method::StructuralJeffreysScale => "structural",
            Method::BayesUniform => "uniform",
            Method::JeffreysPoisson => "jeffreys",
            Method::RaiseF1 => "raise-f1",
            Method::DropF2 => "drop-f2",
        }
    }

    /// Human-readable row label for summary tables.
    pub fn label(self) -> &'static str {
        match self {
            Method::Usual => "Usual",
            Method::StructuralJeffreysScale => "Structural & Jeffreys scale",
            Method::BayesUniform => "Bayes uniform",
            Method::JeffreysPoisson => "Jeffreys Poisson",
            Method::RaiseF1 => "Other option 1",
            Method::DropF2 => "Other option 2",
        }
    }

    /// The `(f₁, f₂)` rule as display strings, e.g. `("2x", "2x + 2")`.
    pub fn rule(self) -> (&'static str, &'static str) {
        match self {
            Method::Usual => ("2x", "2x + 2"),
            Method::StructuralJeffreysScale => ("2x", "2x"),
            Method::BayesUniform => ("2x + 2", "2x + 2"),
            Method::JeffreysPoisson => ("2x + 1", "2x + 1"),
            Method::RaiseF1 => ("2x + 1", "2x + 2"),
            Method::DropF2 => ("2x", "2x + 1"),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "usual" => Ok(Method::Usual),
            "structural" => Ok(Method::StructuralJeffreysScale),
            "uniform" => Ok(Method::BayesUniform),
            "jeffreys" => Ok(Method::JeffreysPoisson),
            "raise-f1" => Ok(Method::RaiseF1),
            "drop-f2" => Ok(Method::DropF2),
            _ => Err(Error::Domain(
                "unknown method (expected usual, structural, uniform, jeffreys, raise-f1 or drop-f2)",
            )),
        }
    }
}

/// Raw `(f₁, f₂)` degrees of freedom produced by a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreePair {
    pub f1: u64,
    pub f2: u64,
}

/// What an [`EstimationInterval`] estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// The mean count λ over the sampled exposure.
    Lambda,
    /// The mean rate ν = λ / t.
    Rate,
}

/// A computed `[lower, upper]` estimation interval together with its
/// provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimationInterval {
    pub lower: f64,
    pub upper: f64,
    pub target: Target,
    /// Sampled time/distance/area/volume; 1 when the target is λ.
    pub exposure: f64,
    pub alpha: Probability,
    pub method: Method,
    pub x_observed: u64,
}

impl EstimationInterval {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Closed-interval membership test.
    pub fn contains(&self, value: f64) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// 100(1−α)% interval for the Poisson mean λ given an observed count.
///
/// ```
/// use poisson_chisq::{lambda_interval, Method, Probability};
///
/// let alpha = Probability::new(0.05)?;
/// let interval = lambda_interval(Method::Usual, 0, alpha)?;
/// assert_eq!(interval.lower, 0.0);
/// assert!((interval.upper - 3.68888).abs() < 1e-5);
/// # Ok::<(), poisson_chisq::Error>(())
/// ```
pub fn lambda_interval(
    method: Method,
    x: u64,
    alpha: Probability,
) -> Result<EstimationInterval, Error> {
    let av = alpha.value();
    if av <= 0.0 || av >= 1.0 {
        return Err(Error::Domain("alpha must lie strictly between 0 and 1"));
    }
    let DegreePair { f1, f2 } = method.degrees_for(x);
    let lower = if f1 == 0 {
        0.0
    } else {
        0.5 * chi_square_quantile(Probability::clamped(av / 2.0), DegreesOfFreedom::new(f1)?)?
    };
    let upper = 0.5
        * chi_square_quantile(
            Probability::clamped(1.0 - av / 2.0),
            DegreesOfFreedom::new(f2.max(1))?,
        )?;
    Ok(EstimationInterval {
        lower,
        upper,
        target: Target::Lambda,
        exposure: 1.0,
        alpha,
        method,
        x_observed: x,
    })
}

/// 100(1−α)% interval for the mean rate ν over an exposure `t`; exactly the
/// λ-interval with both endpoints divided by `t`.
pub fn rate_interval(
    method: Method,
    x: u64,
    t: f64,
    alpha: Probability,
) -> Result<EstimationInterval, Error> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::Domain("exposure t must be positive and finite"));
    }
    let base = lambda_interval(method, x, alpha)?;
    Ok(EstimationInterval {
        lower: base.lower / t,
        upper: base.upper / t,
        target: Target::Rate,
        exposure: t,
        ..base
    })
}
