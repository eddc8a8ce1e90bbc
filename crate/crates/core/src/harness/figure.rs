//! Line charts as standalone SVG plus a CSV of the plotted series.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use super::experiment::{ExperimentReport, ReportRow};
use super::report::format_sig;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureKind {
    /// One panel per algorithm, one series per colour count, against `n`.
    PerAlgorithm,
    /// One panel per colour count, one series per algorithm, against `n`.
    CrossAlgorithm,
    /// All algorithms against `m` at the largest `n` in the report.
    ByColours,
}

impl FromStr for FigureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "per_algorithm" => Ok(FigureKind::PerAlgorithm),
            "cross_algorithm" => Ok(FigureKind::CrossAlgorithm),
            "by_colours" | "by_colors" => Ok(FigureKind::ByColours),
            other => Err(Error::Parse(format!(
                "unknown figure kind `{other}` (per_algorithm, cross_algorithm, by_colours)"
            ))),
        }
    }
}

struct Point {
    x: f64,
    observed: f64,
    expected: Option<f64>,
}

struct Series {
    label: String,
    points: Vec<Point>,
}

struct Panel {
    title: String,
    x_label: &'static str,
    series: Vec<Series>,
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

/// Draws `report` as an SVG at `output` and writes the plotted points next to
/// it with a `.csv` extension. Returns the sidecar path.
pub fn emit_figure(report: &ExperimentReport, kind: FigureKind, output: &Path) -> Result<PathBuf> {
    if report.is_empty() {
        return Err(Error::InvalidArgument("cannot draw an empty report".into()));
    }
    let panels = build_panels(&report.rows, kind);
    let svg = render_svg(&panels);
    std::fs::write(output, svg).map_err(|e| Error::io(output, e))?;

    let sidecar = output.with_extension("csv");
    let mut csv = String::from("panel,series,x,observed,expected\n");
    for p in &panels {
        for s in &p.series {
            for pt in &s.points {
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{}",
                    p.title,
                    s.label,
                    format_sig(pt.x),
                    format_sig(pt.observed),
                    pt.expected.map_or_else(|| "NA".into(), format_sig)
                );
            }
        }
    }
    std::fs::write(&sidecar, csv).map_err(|e| Error::io(&sidecar, e))?;
    Ok(sidecar)
}

fn point(r: &ReportRow, x: f64) -> Point {
    Point {
        x,
        observed: r.summary.mean,
        expected: r.summary.expected,
    }
}

/// Groups rows by `panel_key` then `series_key`, keeping first-seen order of
/// the (already sorted) rows.
fn group<'a, P, S>(rows: impl Iterator<Item = &'a ReportRow>, panel_key: P, series_key: S, x: fn(&ReportRow) -> f64) -> Vec<(String, Vec<Series>)>
where
    P: Fn(&ReportRow) -> String,
    S: Fn(&ReportRow) -> String,
{
    let mut panels: Vec<(String, Vec<Series>)> = Vec::new();
    for r in rows {
        let pk = panel_key(r);
        let pi = panels.iter().position(|(k, _)| *k == pk).unwrap_or_else(|| {
            panels.push((pk, Vec::new()));
            panels.len() - 1
        });
        let series = &mut panels[pi].1;
        let sk = series_key(r);
        let si = series.iter().position(|s| s.label == sk).unwrap_or_else(|| {
            series.push(Series { label: sk, points: Vec::new() });
            series.len() - 1
        });
        series[si].points.push(point(r, x(r)));
    }
    for (_, series) in &mut panels {
        for s in series.iter_mut() {
            s.points.sort_by(|a, b| a.x.total_cmp(&b.x));
        }
    }
    panels
}

fn build_panels(rows: &[ReportRow], kind: FigureKind) -> Vec<Panel> {
    let by_n = |r: &ReportRow| r.n as f64;
    let (grouped, x_label) = match kind {
        FigureKind::PerAlgorithm => (
            group(rows.iter(), |r| r.algorithm.name().to_string(), |r| format!("m={}", r.m), by_n),
            "stream length n",
        ),
        FigureKind::CrossAlgorithm => (
            group(rows.iter(), |r| format!("m={}", r.m), |r| r.algorithm.name().to_string(), by_n),
            "stream length n",
        ),
        FigureKind::ByColours => {
            let n = rows.iter().map(|r| r.n).max().unwrap_or(0);
            (
                group(
                    rows.iter().filter(|r| r.n == n),
                    |r| format!("n={}", r.n),
                    |r| r.algorithm.name().to_string(),
                    |r| f64::from(r.m),
                ),
                "colours m",
            )
        }
    };
    grouped
        .into_iter()
        .map(|(title, series)| Panel { title, x_label, series })
        .collect()
}

fn nice_step(span: f64, target: usize) -> f64 {
    let raw = span / target as f64;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let nice = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * mag
}

fn axis_range(values: impl Iterator<Item = f64>) -> (f64, f64, f64) {
    let (mut lo, mut hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() {
        (lo, hi) = (0.0, 1.0);
    }
    if hi - lo < 1e-9 {
        lo -= 1.0;
        hi += 1.0;
    }
    let step = nice_step(hi - lo, 6);
    ((lo / step).floor() * step, (hi / step).ceil() * step, step)
}

const WIDTH: f64 = 820.0;
const PANEL_HEIGHT: f64 = 380.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 55.0;

fn render_svg(panels: &[Panel]) -> String {
    let height = PANEL_HEIGHT * panels.len() as f64;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (i, panel) in panels.iter().enumerate() {
        render_panel(&mut svg, panel, PANEL_HEIGHT * i as f64);
    }
    svg.push_str("</svg>\n");
    svg
}

fn render_panel(svg: &mut String, panel: &Panel, y0: f64) {
    let points = || panel.series.iter().flat_map(|s| s.points.iter());
    let (x_lo, x_hi, x_step) = axis_range(points().map(|p| p.x));
    let (y_lo, y_hi, y_step) = axis_range(points().flat_map(|p| std::iter::once(p.observed).chain(p.expected)));
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = PANEL_HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |y: f64| y0 + TOP + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h;

    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">{}</text>"#,
        LEFT + plot_w / 2.0,
        y0 + TOP - 14.0,
        xml_escape(&panel.title)
    );
    let _ = writeln!(
        svg,
        r##"<rect x="{LEFT}" y="{}" width="{plot_w}" height="{plot_h}" fill="none" stroke="#333"/>"##,
        y0 + TOP
    );

    let mut x = x_lo;
    while x <= x_hi + x_step * 1e-9 {
        let px = sx(x);
        let _ = writeln!(
            svg,
            r##"<line x1="{px:.1}" y1="{:.1}" x2="{px:.1}" y2="{:.1}" stroke="#ddd"/><text x="{px:.1}" y="{:.1}" text-anchor="middle">{}</text>"##,
            y0 + TOP,
            y0 + TOP + plot_h,
            y0 + TOP + plot_h + 16.0,
            format_sig(x)
        );
        x += x_step;
    }
    let mut y = y_lo;
    while y <= y_hi + y_step * 1e-9 {
        let py = sy(y);
        let _ = writeln!(
            svg,
            r##"<line x1="{LEFT}" y1="{py:.1}" x2="{:.1}" y2="{py:.1}" stroke="#ddd"/><text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"##,
            LEFT + plot_w,
            LEFT - 6.0,
            py + 4.0,
            format_sig(y)
        );
        y += y_step;
    }
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        LEFT + plot_w / 2.0,
        y0 + PANEL_HEIGHT - 12.0,
        panel.x_label
    );
    let _ = writeln!(
        svg,
        r#"<text transform="translate(18,{}) rotate(-90)" text-anchor="middle">comparisons</text>"#,
        y0 + TOP + plot_h / 2.0
    );

    for (i, s) in panel.series.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let predicted: Vec<String> = s
            .points
            .iter()
            .filter_map(|p| p.expected.map(|e| format!("{:.1},{:.1}", sx(p.x), sy(e))))
            .collect();
        if !predicted.is_empty() {
            let _ = writeln!(
                svg,
                r#"<polyline points="{}" fill="none" stroke="{colour}" stroke-width="1.5"/>"#,
                predicted.join(" ")
            );
        }
        for p in &s.points {
            let _ = writeln!(
                svg,
                r#"<circle cx="{:.1}" cy="{:.1}" r="2.5" fill="{colour}"/>"#,
                sx(p.x),
                sy(p.observed)
            );
        }
        let ly = y0 + TOP + 10.0 + 18.0 * i as f64;
        let lx = LEFT + plot_w + 14.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{colour}" stroke-width="1.5"/><circle cx="{}" cy="{ly}" r="2.5" fill="{colour}"/><text x="{}" y="{}">{}</text>"#,
            lx + 22.0,
            lx + 11.0,
            lx + 28.0,
            ly + 4.0,
            xml_escape(&s.label)
        );
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
