//! Special-function kernel: log-gamma, the regularized incomplete gamma
//! function, chi-square CDF and quantile, and the Poisson pmf/cdf.
//!
//! The kernel is self-contained and carries exactly what the interval and
//! coverage math needs. All functions are pure and thread-safe.

use crate::Error;

/// A probability value, guaranteed to lie in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    /// Validates that `value` lies in `[0, 1]` (NaN is rejected).
    pub fn new(value: f64) -> Result<Self, Error> {
        if value.is_nan() || !(0.0..=1.0).contains(&value) {
            return Err(Error::Domain("probability must lie in [0, 1]"));
        }
        Ok(Self(value))
    }

    /// Wraps a kernel result that is in `[0, 1]` up to rounding error.
    pub(crate) fn clamped(value: f64) -> Self {
        Self(value.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Chi-square degrees of freedom; always a positive integer.
///
/// The interval rules can produce a raw `f = 0` at `x = 0`, but the edge
/// rules in [`crate::intervals`] eliminate it before the kernel is reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreesOfFreedom(u64);

impl DegreesOfFreedom {
    pub fn new(value: u64) -> Result<Self, Error> {
        if value == 0 {
            return Err(Error::Domain("degrees of freedom must be at least 1"));
        }
        Ok(Self(value))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// ln √(2π)
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Lanczos g parameter (Godfrey's 15-term fit, g = 607/128).
const LANCZOS_G: f64 = 4.742_187_5;

const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_049e-4,
    2.174_396_181_152_126e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_141e-5,
    3.689_918_265_953_162e-6,
];

/// Natural log of the gamma function for `z > 0`.
pub fn log_gamma(z: f64) -> Result<f64, Error> {
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::Domain("log_gamma requires z > 0"));
    }
    Ok(ln_gamma(z))
}

/// Unchecked Lanczos evaluation; callers guarantee `z > 0`.
pub(crate) fn ln_gamma(z: f64) -> f64 {
    if z < 0.5 {
        // Reflection keeps accuracy on (0, 0.5).
        let pi = std::f64::consts::PI;
        return (pi / (pi * z).sin()).ln() - ln_gamma(1.0 - z);
    }
    let mut sum = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + (sum / z).ln()
}

const MAX_ITER: usize = 1000;
/// Both gamma expansions iterate until the running term is below this
/// relative size.
const KERNEL_EPS: f64 = 1e-15;

/// Regularized lower incomplete gamma P(s, y) = γ(s, y) / Γ(s).
///
/// Monotone nondecreasing in `y`; `P(s, 0) = 0` and `P(s, ∞) = 1`.
pub fn regularized_lower_gamma(s: f64, y: f64) -> Result<Probability, Error> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::Domain("regularized_lower_gamma requires s > 0"));
    }
    if !y.is_finite() || y < 0.0 {
        return Err(Error::Domain("regularized_lower_gamma requires y >= 0"));
    }
    let (p, _) = regularized_gamma_pair(s, y)?;
    Ok(Probability::clamped(p))
}

/// Computes `(P(s, y), Q(s, y))` together, each from its well-conditioned
/// expansion: the series gives P directly for `y < s + 1`, the continued
/// fraction gives Q directly otherwise. Avoids cancellation in whichever
/// tail the caller cares about.
pub(crate) fn regularized_gamma_pair(s: f64, y: f64) -> Result<(f64, f64), Error> {
    if y == 0.0 {
        return Ok((0.0, 1.0));
    }
    let log_prefactor = s * y.ln() - y - ln_gamma(s);
    if y < s + 1.0 {
        let p = lower_series(s, y, log_prefactor)?;
        Ok((p, 1.0 - p))
    } else {
        let q = upper_continued_fraction(s, y, log_prefactor)?;
        Ok((1.0 - q, q))
    }
}

/// P(s, y) = prefactor · Σ_{n≥0} yⁿ / (s(s+1)…(s+n))
fn lower_series(s: f64, y: f64, log_prefactor: f64) -> Result<f64, Error> {
    let mut denom = s;
    let mut term = 1.0 / s;
    let mut sum = term;
    for _ in 0..MAX_ITER {
        denom += 1.0;
        term *= y / denom;
        sum += term;
        if term < sum * KERNEL_EPS {
            return Ok(log_prefactor.exp() * sum);
        }
    }
    Err(Error::Convergence("lower incomplete gamma series"))
}

/// Q(s, y) via the Lentz-evaluated continued fraction
/// prefactor / (y+1−s − 1·(1−s)/(y+3−s − 2·(2−s)/(…))).
fn upper_continued_fraction(s: f64, y: f64, log_prefactor: f64) -> Result<f64, Error> {
    const TINY: f64 = 1e-300;
    let mut b = y + 1.0 - s;
    let mut c = 1.0 / TINY;
    let mut d = if b.abs() < TINY { 1.0 / TINY } else { 1.0 / b };
    let mut h = d;
    for n in 1..=MAX_ITER {
        let a = -(n as f64) * (n as f64 - s);
        b += 2.0;
        d = b + a * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() < KERNEL_EPS {
            return Ok(log_prefactor.exp() * h);
        }
    }
    Err(Error::Convergence(
        "upper incomplete gamma continued fraction",
    ))
}

/// P[χ²(f) ≤ q], i.e. the chi-square distribution function.
pub fn chi_square_cdf(q: f64, f: DegreesOfFreedom) -> Result<Probability, Error> {
    if !q.is_finite() || q < 0.0 {
        return Err(Error::Domain("chi_square_cdf requires q >= 0"));
    }
    let s = f.get() as f64 / 2.0;
    let (p, _) = regularized_gamma_pair(s, q / 2.0)?;
    Ok(Probability::clamped(p))
}

/// The 100pᵗʰ percentile of the chi-square distribution with `f` degrees
/// of freedom: the value `q` with `chi_square_cdf(q, f) = p`.
///
/// `p = 0` returns 0 exactly; `p = 1` is a domain error. Strictly
/// increasing in `p` for fixed `f` and in `f` for fixed `p`.
pub fn chi_square_quantile(p: Probability, f: DegreesOfFreedom) -> Result<f64, Error> {
    let pv = p.value();
    if pv >= 1.0 {
        return Err(Error::Domain("chi_square_quantile requires p < 1"));
    }
    if pv == 0.0 {
        return Ok(0.0);
    }
    let s = f.get() as f64 / 2.0;

    // Residual of the CDF at q, evaluated in whichever tail is
    // well-conditioned for this p. Increasing in q, zero at the quantile.
    let residual = |q: f64| -> Result<f64, Error> {
        let (lower, upper) = regularized_gamma_pair(s, 0.5 * q)?;
        Ok(if pv <= 0.5 {
            lower - pv
        } else {
            (1.0 - pv) - upper
        })
    };
    // Chi-square density, the derivative of the residual.
    let density =
        |q: f64| -> f64 { 0.5 * ((s - 1.0) * (0.5 * q).ln() - 0.5 * q - ln_gamma(s)).exp() };

    // Wilson-Hilferty starting point; fall back on the small-quantile
    // asymptotic P(s, y) ~ y^s / Γ(s+1) when the cube goes nonpositive.
    let fv = f.get() as f64;
    let a = 2.0 / (9.0 * fv);
    let cube_root = 1.0 - a + standard_normal_quantile(pv) * a.sqrt();
    let mut guess = fv * cube_root * cube_root * cube_root;
    if guess.is_nan() || guess <= 0.0 {
        guess = 2.0 * ((pv.ln() + ln_gamma(s + 1.0)) / s).exp();
    }

    // Bracket the root: residual(0) = -p < 0, so grow the upper end until
    // the sign flips.
    let mut lo = 0.0_f64;
    let mut hi = guess.max(f64::MIN_POSITIVE);
    let mut bracketed = false;
    for _ in 0..MAX_ITER {
        if residual(hi)? >= 0.0 {
            bracketed = true;
            break;
        }
        lo = hi;
        hi *= 2.0;
    }
    if !bracketed {
        return Err(Error::Convergence("chi-square quantile bracketing"));
    }

    // Safeguarded Newton: take the Newton step when it stays inside the
    // bracket and at least halves the residual scale, else bisect.
    let mut x = if guess > lo && guess < hi {
        guess
    } else {
        0.5 * (lo + hi)
    };
    let mut dx_old = hi - lo;
    let mut dx = dx_old;
    let mut fval = residual(x)?;
    for _ in 0..MAX_ITER {
        if fval == 0.0 {
            break;
        }
        if fval < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let dval = density(x);
        let newton_in_bracket = ((x - hi) * dval - fval) * ((x - lo) * dval - fval) < 0.0;
        let newton_fast_enough = 2.0 * fval.abs() <= (dx_old * dval).abs();
        dx_old = dx;
        let next = if newton_in_bracket && newton_fast_enough {
            dx = fval / dval;
            x - dx
        } else {
            dx = 0.5 * (hi - lo);
            lo + dx
        };
        if next == x || dx.abs() < x * 1e-16 {
            break;
        }
        x = next;
        fval = residual(x)?;
    }
    Ok(x)
}

/// Inverse standard normal CDF, Abramowitz & Stegun 26.2.23. Only used to
/// seed the quantile iteration, so ~4e-4 absolute accuracy is plenty.
fn standard_normal_quantile(p: f64) -> f64 {
    let (q, sign) = if p > 0.5 { (1.0 - p, 1.0) } else { (p, -1.0) };
    let t = (-2.0 * q.ln()).sqrt();
    let num = 2.515517 + t * (0.802853 + t * 0.010328);
    let den = 1.0 + t * (1.432788 + t * (0.189269 + t * 0.001308));
    sign * (t - num / den)
}

/// Poisson probability mass λˣe^(−λ)/x!, evaluated in log space so large
/// counts never overflow.
pub fn poisson_pmf(x: u64, lambda: f64) -> Result<Probability, Error> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::Domain("poisson_pmf requires lambda > 0"));
    }
    let xf = x as f64;
    let log_p = xf * lambda.ln() - lambda - ln_gamma(xf + 1.0);
    Ok(Probability::clamped(log_p.exp()))
}

/// Σ_{k=0..x} poisson_pmf(k, λ).
///
/// Equals `1 − P(x+1, λ)` by the gamma-Poisson identity, which the test
/// suite checks against this direct sum.
pub fn poisson_cdf(x: u64, lambda: f64) -> Result<Probability, Error> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::Domain("poisson_cdf requires lambda > 0"));
    }
    // Compensated summation; the terms span many magnitudes.
    let mut sum = 0.0;
    let mut carry = 0.0;
    for k in 0..=x {
        let term = poisson_pmf(k, lambda)?.value() - carry;
        let next = sum + term;
        carry = (next - sum) - term;
        sum = next;
    }
    Ok(Probability::clamped(sum))
}
