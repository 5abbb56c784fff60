//! CSV and SVG writers for sweep rows.

use std::fmt::Write as _;
use std::path::Path;

use super::sweep::SweepRow;
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "N,alpha_total,alpha_2,bound_total,sinr_db,predicted_limit";

fn real(x: f64) -> String {
    format!("{x:.11e}")
}

fn opt_real(x: Option<f64>) -> String {
    x.map(real).unwrap_or_default()
}

/// Renders rows as CSV text, header first.
pub fn csv_string(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            real(r.alpha_total),
            real(r.alpha_2),
            opt_real(r.bound_total),
            real(r.sinr_db),
            opt_real(r.predicted_limit)
        );
    }
    out
}

pub fn emit_csv(rows: &[SweepRow], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, csv_string(rows)).map_err(|e| Error::io(path, e))
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 56.0;

struct Frame {
    log_lo: f64,
    log_hi: f64,
    y_hi: f64,
}

impl Frame {
    fn x(&self, n: usize) -> f64 {
        let span = (self.log_hi - self.log_lo).max(f64::EPSILON);
        MARGIN + (WIDTH - 2.0 * MARGIN) * ((n as f64).log10() - self.log_lo) / span
    }

    fn y(&self, v: f64) -> f64 {
        HEIGHT - MARGIN - (HEIGHT - 2.0 * MARGIN) * (v / self.y_hi)
    }
}

fn polyline(out: &mut String, frame: &Frame, rows: &[SweepRow], pick: fn(&SweepRow) -> f64, colour: &str) {
    let points: Vec<String> = rows
        .iter()
        .map(|r| format!("{:.2},{:.2}", frame.x(r.n), frame.y(pick(r))))
        .collect();
    let _ = writeln!(
        out,
        r#"  <polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{}"/>"#,
        points.join(" ")
    );
}

/// Renders a log-x line chart of `alpha_total` and `alpha_2` against N.
pub fn svg_string(rows: &[SweepRow]) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::config("rows", "cannot plot an empty sweep"));
    }
    let (mut n_lo, mut n_hi) = (usize::MAX, 0);
    let mut y_hi: f64 = 0.0;
    for r in rows {
        n_lo = n_lo.min(r.n);
        n_hi = n_hi.max(r.n);
        y_hi = y_hi.max(r.alpha_total).max(r.alpha_2);
        if let Some(p) = r.predicted_limit {
            y_hi = y_hi.max(p);
        }
    }
    let frame = Frame {
        log_lo: (n_lo as f64).log10(),
        log_hi: (n_hi as f64).log10(),
        y_hi: if y_hi > 0.0 { 1.05 * y_hi } else { 1.0 },
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"  <rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let (x0, x1, y0, y1) = (MARGIN, WIDTH - MARGIN, HEIGHT - MARGIN, MARGIN);
    let _ = writeln!(
        out,
        r#"  <path d="M{x0},{y1} L{x0},{y0} L{x1},{y0}" fill="none" stroke="black"/>"#
    );
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{}" font-size="12" text-anchor="middle">N (log scale)</text>"#,
        WIDTH / 2.0,
        HEIGHT - 16.0
    );
    let _ = writeln!(
        out,
        r#"  <text x="16" y="{}" font-size="12" transform="rotate(-90 16 {})" text-anchor="middle">|alpha|</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
    for (n, label_y) in [(n_lo, y0 + 16.0), (n_hi, y0 + 16.0)] {
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{label_y}" font-size="11" text-anchor="middle">{n}</text>"#,
            frame.x(n)
        );
    }
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{:.2}" font-size="11" text-anchor="end">{:.3}</text>"#,
        x0 - 4.0,
        y1 + 4.0,
        frame.y_hi
    );

    polyline(&mut out, &frame, rows, |r| r.alpha_total, "#1f4e9c");
    polyline(&mut out, &frame, rows, |r| r.alpha_2, "#c0392b");
    if let Some(limit) = rows.iter().find_map(|r| r.predicted_limit) {
        let y = frame.y(limit);
        let _ = writeln!(
            out,
            r#"  <line class="predicted-limit" x1="{x0}" y1="{y:.2}" x2="{x1}" y2="{y:.2}" stroke="gray" stroke-dasharray="6 4"/>"#
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn emit_svg(rows: &[SweepRow], path: impl AsRef<Path>) -> Result<()> {
    let text = svg_string(rows)?;
    let path = path.as_ref();
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}
