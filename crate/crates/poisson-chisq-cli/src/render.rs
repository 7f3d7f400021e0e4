//! Text and CSV rendering.

use poisson_chisq::{
    coverage_curve, lambda_interval, rate_interval, round_to_decimals, summarize, GridSpec, Method,
    Probability,
};

use crate::CliError;

/// Six significant digits, fixed-point.
pub fn sig6(value: f64) -> String {
    if value == 0.0 {
        return "0.00000".to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).clamp(0, 17) as usize;
    format!("{value:.decimals$}")
}

/// "95" for alpha = 0.05, "99" for 0.01, "97.5" for 0.025.
pub fn percent_label(alpha: Probability) -> String {
    let percent = round_to_decimals((1.0 - alpha.value()) * 100.0, 6);
    let mut text = format!("{percent}");
    if text.contains('.') {
        while text.ends_with('0') {
            text.pop();
        }
        if text.ends_with('.') {
            text.pop();
        }
    }
    text
}

/// Decimal rendering of a grid coordinate, e.g. "0.1" or "75".
fn grid_value(index: u64, denominator: u64) -> String {
    format!("{}", index as f64 / denominator as f64)
}

pub fn interval_report(
    methods: &[Method],
    x: u64,
    t: f64,
    alpha: Probability,
) -> Result<String, CliError> {
    let mut out = String::new();
    let mut header = format!("{}% intervals at x = {x}", percent_label(alpha));
    if t != 1.0 {
        header.push_str(&format!(" with exposure t = {t}"));
    }
    out.push_str(&header);
    out.push('\n');
    for &method in methods {
        let degrees = method.degrees_for(x);
        let lambda = lambda_interval(method, x, alpha)?;
        out.push_str(&format!(
            "{:<12} (f1 = {:>3}, f2 = {:>3})  lambda in [{}, {}]",
            method.name(),
            degrees.f1,
            degrees.f2,
            sig6(lambda.lower),
            sig6(lambda.upper),
        ));
        if t != 1.0 {
            let rate = rate_interval(method, x, t, alpha)?;
            out.push_str(&format!(
                "  rate in [{}, {}]",
                sig6(rate.lower),
                sig6(rate.upper)
            ));
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn coverage_csv(
    methods: &[Method],
    alpha: Probability,
    grid: &GridSpec,
) -> Result<String, CliError> {
    let curves = methods
        .iter()
        .map(|&m| coverage_curve(m, alpha, grid))
        .collect::<Result<Vec<_>, _>>()?;

    let mut out = String::new();
    if methods.len() == 1 {
        out.push_str("lambda,coverage\n");
    } else {
        out.push_str("lambda");
        for &method in methods {
            out.push(',');
            out.push_str(method.name());
        }
        out.push('\n');
    }
    for offset in 0..grid.point_count() {
        out.push_str(&format!("{:.1}", grid.lambda(offset)));
        for curve in &curves {
            out.push_str(&format!(",{:.10}", curve.values[offset].value()));
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn summary_table(alpha: Probability, grid: &GridSpec) -> Result<String, CliError> {
    let mut out = String::new();
    out.push_str(&format!(
        "Coverage probabilities for {}% Intervals\n",
        percent_label(alpha)
    ));
    out.push_str(&format!(
        "(lambda = {} to {} in steps of {})\n\n",
        grid_value(grid.start_index(), grid.denominator()),
        grid_value(grid.end_index(), grid.denominator()),
        grid_value(1, grid.denominator()),
    ));
    out.push_str(&format!(
        "{:<28} {:<8} {:<8} {:>8} {:>9} {:>9}\n",
        "Interval basis", "f1", "f2", "Mean", "Minimum", "Maximum"
    ));
    for method in Method::ALL {
        let stats = summarize(&coverage_curve(method, alpha, grid)?)?;
        let (f1_rule, f2_rule) = method.rule();
        out.push_str(&format!(
            "{:<28} {:<8} {:<8} {:>8.4} {:>9.4} {:>9.4}\n",
            method.label(),
            f1_rule,
            f2_rule,
            round_to_decimals(stats.mean.value(), 4),
            round_to_decimals(stats.minimum.value(), 4),
            round_to_decimals(stats.maximum.value(), 4),
        ));
    }
    Ok(out)
}
