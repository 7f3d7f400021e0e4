//! Exact coverage probabilities over a λ grid, their summary statistics,
//! and a seeded Monte Carlo cross-check.
//!
//! For a fixed true mean λ the coverage probability of a method is
//!
//! ```text
//! C(λ) = Σ_x  pmf(x; λ) · 1[ L(x) ≤ λ ≤ U(x) ]
//! ```
//!
//! where `[L(x), U(x)]` is the method's interval at the observed count `x`.
//! The sum is truncated once the remaining Poisson tail mass is below
//! 1e-12, so the result is exact to well past the four decimals the summary
//! tables report.

use crate::intervals::{lambda_interval, Method};
use crate::special::{poisson_pmf, Probability};
use crate::Error;

/// Remaining tail mass at which the coverage sum stops.
const TAIL_TOLERANCE: f64 = 1e-12;

/// An integer-indexed λ grid: λᵢ = i / denominator for
/// i = start_index ..= end_index.
///
/// Grid points come from integer indices, never from accumulating a
/// floating-point step, so λ = i/10 lands on the same value every time.
/// The default grid is λ = 0.1, 0.2, …, 75.0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    start_index: u64,
    end_index: u64,
    denominator: u64,
}

impl GridSpec {
    pub fn new(start_index: u64, end_index: u64, denominator: u64) -> Result<Self, Error> {
        if start_index == 0 || end_index == 0 || denominator == 0 {
            return Err(Error::Domain(
                "grid indices and denominator must be positive",
            ));
        }
        if start_index > end_index {
            return Err(Error::Domain("grid start index exceeds its end index"));
        }
        Ok(Self {
            start_index,
            end_index,
            denominator,
        })
    }

    pub fn start_index(&self) -> u64 {
        self.start_index
    }

    pub fn end_index(&self) -> u64 {
        self.end_index
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// Number of grid points (always at least 1).
    pub fn point_count(&self) -> usize {
        (self.end_index - self.start_index + 1) as usize
    }

    /// The λ value at a zero-based offset into the grid.
    pub fn lambda(&self, offset: usize) -> f64 {
        (self.start_index + offset as u64) as f64 / self.denominator as f64
    }

    /// All grid λ values in index order.
    pub fn lambdas(&self) -> impl Iterator<Item = f64> + '_ {
        (self.start_index..=self.end_index).map(move |i| i as f64 / self.denominator as f64)
    }
}

impl Default for GridSpec {
    /// λ = 0.1 to 75.0 in steps of 0.1.
    fn default() -> Self {
        Self {
            start_index: 1,
            end_index: 750,
            denominator: 10,
        }
    }
}

/// Exact coverage probabilities of one method, evaluated on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageCurve {
    pub method: Method,
    pub alpha: Probability,
    pub grid: GridSpec,
    pub values: Vec<Probability>,
}

/// Mean/min/max of a coverage curve, with the λ attaining each extreme
/// (first attainment on ties).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats {
    pub mean: Probability,
    pub minimum: Probability,
    pub maximum: Probability,
    pub argmin_lambda: f64,
    pub argmax_lambda: f64,
}

/// Interval endpoints depend on (method, α, x) only, so one curve needs a
/// few hundred quantile inversions rather than one pair per (λ, x).
struct EndpointTable {
    method: Method,
    alpha: Probability,
    bounds: Vec<(f64, f64)>,
}

impl EndpointTable {
    fn new(method: Method, alpha: Probability) -> Self {
        Self {
            method,
            alpha,
            bounds: Vec::new(),
        }
    }

    fn bounds(&mut self, x: u64) -> Result<(f64, f64), Error> {
        while self.bounds.len() <= x as usize {
            let interval = lambda_interval(self.method, self.bounds.len() as u64, self.alpha)?;
            self.bounds.push((interval.lower, interval.upper));
        }
        Ok(self.bounds[x as usize])
    }
}

/// Largest count the truncated sum will ever visit for this λ.
fn truncation_cap(lambda: f64) -> u64 {
    (lambda + 12.0 * lambda.sqrt() + 50.0).ceil() as u64
}

fn coverage_with_table(table: &mut EndpointTable, lambda: f64) -> Result<f64, Error> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::Domain("coverage requires lambda > 0"));
    }
    let cap = truncation_cap(lambda);
    let mut total_mass = 0.0;
    let mut covered = 0.0;
    for x in 0..=cap {
        let p = poisson_pmf(x, lambda)?.value();
        total_mass += p;
        let (lo, hi) = table.bounds(x)?;
        if lo <= lambda && lambda <= hi {
            covered += p;
        }
        if 1.0 - total_mass <= TAIL_TOLERANCE {
            break;
        }
    }
    Ok(covered)
}

/// Exact coverage probability of `method` at one true mean λ.
pub fn coverage_at(method: Method, alpha: Probability, lambda: f64) -> Result<Probability, Error> {
    let mut table = EndpointTable::new(method, alpha);
    coverage_with_table(&mut table, lambda).map(Probability::clamped)
}

/// Coverage probabilities over every point of `grid`, in index order.
///
/// Deterministic: repeated runs produce bit-identical values.
pub fn coverage_curve(
    method: Method,
    alpha: Probability,
    grid: &GridSpec,
) -> Result<CoverageCurve, Error> {
    let mut table = EndpointTable::new(method, alpha);
    let mut values = Vec::with_capacity(grid.point_count());
    for lambda in grid.lambdas() {
        values.push(Probability::clamped(coverage_with_table(
            &mut table, lambda,
        )?));
    }
    Ok(CoverageCurve {
        method,
        alpha,
        grid: *grid,
        values,
    })
}

/// Arithmetic mean, minimum and maximum of a curve.
pub fn summarize(curve: &CoverageCurve) -> Result<SummaryStats, Error> {
    if curve.values.is_empty() {
        return Err(Error::EmptyCurve);
    }
    if curve.values.len() != curve.grid.point_count() {
        return Err(Error::Domain("curve length does not match its grid"));
    }
    let mut sum = 0.0;
    let mut min_val = f64::INFINITY;
    let mut max_val = f64::NEG_INFINITY;
    let mut min_offset = 0;
    let mut max_offset = 0;
    for (offset, value) in curve.values.iter().enumerate() {
        let v = value.value();
        sum += v;
        if v < min_val {
            min_val = v;
            min_offset = offset;
        }
        if v > max_val {
            max_val = v;
            max_offset = offset;
        }
    }
    Ok(SummaryStats {
        mean: Probability::clamped(sum / curve.values.len() as f64),
        minimum: Probability::clamped(min_val),
        maximum: Probability::clamped(max_val),
        argmin_lambda: curve.grid.lambda(min_offset),
        argmax_lambda: curve.grid.lambda(max_offset),
    })
}

/// Rounds half away from zero at the given number of decimals, the
/// convention used when comparing computed statistics against the
/// four-decimal summary tables.
pub fn round_to_decimals(value: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (value * scale).round() / scale
}

/// A Monte Carlo coverage estimate and its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub estimate: Probability,
    pub std_error: f64,
}

/// SplitMix64: tiny, seedable, identical on every platform.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 random bits.
    fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Simulated coverage: draws `reps` Poisson(λ) counts by inverse-CDF
/// lookup and reports the fraction whose interval captures λ, plus the
/// binomial standard error of that fraction. Deterministic given `seed`.
pub fn mc_coverage(
    method: Method,
    alpha: Probability,
    lambda: f64,
    reps: u64,
    seed: u64,
) -> Result<MonteCarloEstimate, Error> {
    if reps == 0 {
        return Err(Error::Domain("mc_coverage requires reps >= 1"));
    }
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::Domain("mc_coverage requires lambda > 0"));
    }

    // Sampling table: cumulative pmf until the tail is negligible. Draws
    // landing past the table (probability < 1e-13) clamp to its last entry.
    let cap = truncation_cap(lambda) + 20;
    let mut cdf = Vec::new();
    let mut cumulative = 0.0;
    for x in 0..=cap {
        cumulative += poisson_pmf(x, lambda)?.value();
        cdf.push(cumulative);
        if 1.0 - cumulative <= 1e-13 {
            break;
        }
    }

    let mut table = EndpointTable::new(method, alpha);
    let mut contains = Vec::with_capacity(cdf.len());
    for x in 0..cdf.len() as u64 {
        let (lo, hi) = table.bounds(x)?;
        contains.push(lo <= lambda && lambda <= hi);
    }

    let mut rng = SplitMix64::new(seed);
    let mut hits: u64 = 0;
    for _ in 0..reps {
        let u = rng.next_f64();
        let x = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
        if contains[x] {
            hits += 1;
        }
    }
    let estimate = hits as f64 / reps as f64;
    let std_error = (estimate * (1.0 - estimate) / reps as f64).sqrt();
    Ok(MonteCarloEstimate {
        estimate: Probability::clamped(estimate),
        std_error,
    })
}
