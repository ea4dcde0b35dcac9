//! Standalone SVG 1.1 drawings of a diagram.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use polydiagram::{LatticePoint, PolynomialDiagram};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    /// Place x at `log_q(x)`, so the chain vertices are evenly spaced.
    pub log_x: bool,
    pub margin: u32,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            width: 640,
            height: 480,
            log_x: false,
            margin: 48,
        }
    }
}

/// Exact `log_base(x)` when `x` is a power of `base`.
fn exact_log(x: &BigUint, base: &BigUint) -> Option<u32> {
    if base <= &BigUint::one() || x.is_zero() {
        return None;
    }
    let mut x = x.clone();
    let mut e = 0;
    while !x.is_one() {
        if !(&x % base).is_zero() {
            return None;
        }
        x /= base;
        e += 1;
    }
    Some(e)
}

/// Horizontal model coordinate before scaling into the viewport.
fn model_x(p: &LatticePoint, base: &BigUint, log_x: bool) -> f64 {
    if log_x {
        if let Some(e) = exact_log(&p.x, base) {
            return f64::from(e);
        }
        return p.x_f64().ln() / base.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    p.x_f64()
}

/// Fixed two-decimal formatting; `-0.00` is normalized away.
fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

/// Builds the SVG document. A degenerate diagram (`q = 1`) renders as a
/// vertical segment and ignores `log_x`.
pub fn render_svg(d: &PolynomialDiagram, spec: &RenderSpec) -> String {
    let base = d.source().q();
    let log_x = spec.log_x && !d.is_degenerate();
    let xs: Vec<f64> = d
        .vertices()
        .iter()
        .map(|p| model_x(p, base, log_x))
        .collect();
    let ys: Vec<f64> = d.vertices().iter().map(|p| f64::from(p.y)).collect();

    let (x_min, x_max) = xs
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        });
    let y_max = ys.iter().cloned().fold(0.0, f64::max);

    let m = f64::from(spec.margin);
    let inner_w = (f64::from(spec.width) - 2.0 * m).max(1.0);
    let inner_h = (f64::from(spec.height) - 2.0 * m).max(1.0);
    let sx = |x: f64| {
        if x_max > x_min {
            m + (x - x_min) / (x_max - x_min) * inner_w
        } else {
            m + inner_w / 2.0
        }
    };
    let sy = |y: f64| {
        if y_max > 0.0 {
            m + inner_h - y / y_max * inner_h
        } else {
            m + inner_h
        }
    };

    let mut svg = String::new();
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = spec.width,
        h = spec.height
    )
    .unwrap();
    let p = d.source();
    writeln!(
        svg,
        "  <title>polynomial diagram q={} n={} k={}{}</title>",
        p.q(),
        p.n(),
        p.k(),
        if log_x { " (log x)" } else { "" }
    )
    .unwrap();
    writeln!(
        svg,
        r##"  <rect x="0" y="0" width="{}" height="{}" fill="#ffffff"/>"##,
        spec.width, spec.height
    )
    .unwrap();

    let (ax0, ax1, ay) = (num(m), num(m + inner_w), num(m + inner_h));
    writeln!(
        svg,
        r##"  <g class="axes" stroke="#888888" stroke-width="1">"##
    )
    .unwrap();
    writeln!(
        svg,
        r#"    <line x1="{ax0}" y1="{ay}" x2="{ax1}" y2="{ay}"/>"#
    )
    .unwrap();
    writeln!(
        svg,
        r#"    <line x1="{ax0}" y1="{ay}" x2="{ax0}" y2="{}"/>"#,
        num(m)
    )
    .unwrap();
    writeln!(svg, "  </g>").unwrap();

    let mut path = String::new();
    for (i, (x, y)) in xs.iter().zip(&ys).enumerate() {
        let cmd = if i == 0 { "M" } else { " L" };
        write!(path, "{cmd} {} {}", num(sx(*x)), num(sy(*y))).unwrap();
    }
    path.push_str(" Z");
    writeln!(
        svg,
        r##"  <path class="diagram" d="{path}" fill="#4a90d9" fill-opacity="0.35" stroke="#1f4e79" stroke-width="2"/>"##
    )
    .unwrap();

    writeln!(
        svg,
        r#"  <g class="vertices" font-family="monospace" font-size="11">"#
    )
    .unwrap();
    for (v, (x, y)) in d.vertices().iter().zip(xs.iter().zip(&ys)) {
        let (cx, cy) = (sx(*x), sy(*y));
        writeln!(
            svg,
            r##"    <circle cx="{}" cy="{}" r="3.5" fill="#1f4e79"/>"##,
            num(cx),
            num(cy)
        )
        .unwrap();
        writeln!(
            svg,
            r#"    <text x="{}" y="{}">{v}</text>"#,
            num(cx + 5.0),
            num(cy - 6.0)
        )
        .unwrap();
    }
    writeln!(svg, "  </g>").unwrap();
    writeln!(svg, "</svg>").unwrap();
    svg
}
