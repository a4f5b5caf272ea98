//! Static SVG scatter plots.
//!
//! Every point is a `<circle class="point">`, every centroid a
//! `<path class="centroid">` cross with a text label, and every outlier gets an
//! extra `<circle class="outlier">` ring. Only the first two coordinates are
//! drawn; a 1-D dataset is drawn on the line y = 0.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use possclust::{CentroidSet, Dataset, Point};

use crate::error::{CliError, Result};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22",
];

fn xy(p: &Point) -> (f64, f64) {
    let c = p.coords();
    (c[0], c.get(1).copied().unwrap_or(0.0))
}

struct Frame {
    x0: f64,
    y0: f64,
    sx: f64,
    sy: f64,
}

impl Frame {
    fn fit(pts: impl Iterator<Item = (f64, f64)>) -> Self {
        let (mut xmin, mut xmax, mut ymin, mut ymax) = (
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
        );
        for (x, y) in pts {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
        let pad = |lo: f64, hi: f64| {
            let span = if hi > lo { hi - lo } else { 1.0 };
            (lo - 0.1 * span, hi + 0.1 * span)
        };
        let (xmin, xmax) = pad(xmin, xmax);
        let (ymin, ymax) = pad(ymin, ymax);
        Frame {
            x0: xmin,
            y0: ymax,
            sx: WIDTH / (xmax - xmin),
            sy: HEIGHT / (ymax - ymin),
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.x0) * self.sx, (self.y0 - y) * self.sy)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Renders the plot. `assignment` colors points by cluster when given.
pub fn render_svg(
    ds: &Dataset,
    centroids: &CentroidSet,
    outliers: &[usize],
    assignment: Option<&[usize]>,
) -> String {
    let frame = Frame::fit(ds.iter().chain(centroids.centers()).map(xy));
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    // axes through the origin when it is in view
    let (ox, oy) = frame.map((0.0, 0.0));
    if (0.0..=HEIGHT).contains(&oy) {
        let _ = writeln!(
            s,
            r##"<line class="axis" x1="0" y1="{oy:.2}" x2="{WIDTH}" y2="{oy:.2}" stroke="#ccc"/>"##
        );
    }
    if (0.0..=WIDTH).contains(&ox) {
        let _ = writeln!(
            s,
            r##"<line class="axis" x1="{ox:.2}" y1="0" x2="{ox:.2}" y2="{HEIGHT}" stroke="#ccc"/>"##
        );
    }

    for (k, p) in ds.iter().enumerate() {
        let (x, y) = frame.map(xy(p));
        let color = assignment.map_or("#444", |a| PALETTE[a[k] % PALETTE.len()]);
        let _ = writeln!(
            s,
            r#"<circle class="point" cx="{x:.2}" cy="{y:.2}" r="4" fill="{color}"><title>{}</title></circle>"#,
            escape(&ds.label_or_default(k))
        );
    }
    for &k in outliers {
        let (x, y) = frame.map(xy(&ds[k]));
        let _ = writeln!(
            s,
            r#"<circle class="outlier" cx="{x:.2}" cy="{y:.2}" r="9" fill="none" stroke="red" stroke-width="2"/>"#
        );
    }
    for (i, c) in centroids.centers().iter().enumerate() {
        let (x, y) = frame.map(xy(c));
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            s,
            r#"<path class="centroid" d="M{:.2} {:.2}L{:.2} {:.2}M{:.2} {:.2}L{:.2} {:.2}" stroke="{color}" stroke-width="3"/>"#,
            x - 7.0,
            y - 7.0,
            x + 7.0,
            y + 7.0,
            x - 7.0,
            y + 7.0,
            x + 7.0,
            y - 7.0
        );
        let label = c.label().map_or_else(|| format!("c{}", i + 1), escape);
        let _ = writeln!(
            s,
            r#"<text class="centroid-label" x="{:.2}" y="{:.2}" font-size="12" font-family="sans-serif">{label}</text>"#,
            x + 9.0,
            y - 9.0
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn emit_plot(
    ds: &Dataset,
    centroids: &CentroidSet,
    outliers: &[usize],
    assignment: Option<&[usize]>,
    path: &Path,
) -> Result<()> {
    fs::write(path, render_svg(ds, centroids, outliers, assignment))
        .map_err(|e| CliError::io(path, e))
}
