//! SVG 1.1 line plots of coverage curves. Hand-rolled so the byte output
//! is deterministic and golden-file friendly; no external assets.

use poisson_chisq::{coverage_curve, GridSpec, Method, Probability};

use crate::render::percent_label;
use crate::CliError;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 72.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 48.0;
const MARGIN_BOTTOM: f64 = 48.0;

/// One stroke color per canonical method position.
const COLORS: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

struct Frame {
    lambda_min: f64,
    lambda_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn x(&self, lambda: f64) -> f64 {
        let span = (self.lambda_max - self.lambda_min).max(f64::MIN_POSITIVE);
        MARGIN_LEFT + (lambda - self.lambda_min) / span * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
    }

    fn y(&self, value: f64) -> f64 {
        let span = (self.y_max - self.y_min).max(f64::MIN_POSITIVE);
        let clamped = value.clamp(self.y_min, self.y_max);
        HEIGHT
            - MARGIN_BOTTOM
            - (clamped - self.y_min) / span * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    }
}

pub fn coverage_plot(
    methods: &[Method],
    alpha: Probability,
    grid: &GridSpec,
) -> Result<String, CliError> {
    let curves = methods
        .iter()
        .map(|&m| coverage_curve(m, alpha, grid))
        .collect::<Result<Vec<_>, _>>()?;

    let minimum = curves
        .iter()
        .flat_map(|c| c.values.iter().map(|v| v.value()))
        .fold(1.0_f64, f64::min);
    let frame = Frame {
        lambda_min: grid.lambda(0),
        lambda_max: grid.lambda(grid.point_count() - 1),
        y_min: minimum - 0.01,
        y_max: 1.0,
    };

    let title = match methods {
        [single] => {
            let (f1, f2) = single.rule();
            format!(
                "Coverage Probabilities for {}% Intervals for f1 = {f1} and f2 = {f2}",
                percent_label(alpha)
            )
        }
        _ => format!(
            "Coverage Probabilities for {}% Intervals",
            percent_label(alpha)
        ),
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">{title}</text>\n",
        WIDTH / 2.0
    ));

    axes(&mut svg, &frame, grid);
    reference_line(&mut svg, &frame, alpha);

    for (slot, curve) in curves.iter().enumerate() {
        let color = COLORS[Method::ALL
            .iter()
            .position(|&m| m == curve.method)
            .unwrap_or(slot)];
        let points: Vec<String> = curve
            .values
            .iter()
            .enumerate()
            .map(|(offset, v)| {
                format!(
                    "{:.2},{:.2}",
                    frame.x(grid.lambda(offset)),
                    frame.y(v.value())
                )
            })
            .collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1\" points=\"{}\"/>\n",
            points.join(" ")
        ));
    }

    if methods.len() > 1 {
        legend(&mut svg, methods);
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

fn axes(svg: &mut String, frame: &Frame, grid: &GridSpec) {
    let x0 = MARGIN_LEFT;
    let x1 = WIDTH - MARGIN_RIGHT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    let y1 = MARGIN_TOP;
    svg.push_str(&format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\" stroke-width=\"1\"/>\n"
    ));
    svg.push_str(&format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\" stroke-width=\"1\"/>\n"
    ));

    // Up to six x ticks at round grid positions.
    let ticks = 6.min(grid.point_count());
    for tick in 0..ticks {
        let offset = tick * (grid.point_count() - 1) / (ticks - 1).max(1);
        let lambda = grid.lambda(offset);
        let x = frame.x(lambda);
        svg.push_str(&format!(
            "<line x1=\"{x:.2}\" y1=\"{y0}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"1\"/>\n",
            y0 + 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{lambda}</text>\n",
            y0 + 18.0
        ));
    }

    for tick in 0..5 {
        let value = frame.y_min + (frame.y_max - frame.y_min) * tick as f64 / 4.0;
        let y = frame.y(value);
        svg.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{x0}\" y2=\"{y:.2}\" stroke=\"black\" stroke-width=\"1\"/>\n",
            x0 - 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{value:.3}</text>\n",
            x0 - 8.0,
            y + 4.0
        ));
    }

    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">lambda</text>\n",
        (x0 + x1) / 2.0,
        HEIGHT - 10.0
    ));
    svg.push_str(&format!(
        "<text x=\"16\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.1})\">coverage probability</text>\n",
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    ));
}

fn reference_line(svg: &mut String, frame: &Frame, alpha: Probability) {
    let nominal = 1.0 - alpha.value();
    let y = frame.y(nominal);
    svg.push_str(&format!(
        "<line x1=\"{MARGIN_LEFT}\" y1=\"{y:.2}\" x2=\"{:.1}\" y2=\"{y:.2}\" stroke=\"#666666\" stroke-width=\"1\" stroke-dasharray=\"5 4\"/>\n",
        WIDTH - MARGIN_RIGHT
    ));
}

fn legend(svg: &mut String, methods: &[Method]) {
    for (row, &method) in methods.iter().enumerate() {
        let color = COLORS[Method::ALL.iter().position(|&m| m == method).unwrap_or(row)];
        let y = MARGIN_TOP + 14.0 + row as f64 * 16.0;
        let x = WIDTH - MARGIN_RIGHT - 130.0;
        svg.push_str(&format!(
            "<line x1=\"{x:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            y - 4.0,
            x + 22.0,
            y - 4.0
        ));
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{y:.1}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
            x + 28.0,
            method.name()
        ));
    }
}
