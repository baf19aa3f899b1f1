//! SVG output for arc drawings.

use std::fmt::Write;
use std::path::Path;

use super::geometry::{boundary_center, Point, Primitive, BOUNDARY_RADIUS};
use super::render::{puncture_point, ArcDrawing};
use super::{Puncture, Tag};
use crate::error::Result;

const SCALE: f64 = 60.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

pub struct SvgItem {
    pub drawing: ArcDrawing,
    /// Tags at the two end points when drawing a tagged arc.
    pub tags: Option<(Tag, Tag)>,
    pub label: String,
}

impl SvgItem {
    pub fn untagged(drawing: ArcDrawing) -> Self {
        let label = drawing.arc.to_string();
        SvgItem {
            drawing,
            tags: None,
            label,
        }
    }
}

fn screen(p: (f64, f64)) -> (f64, f64) {
    (p.0 * SCALE, -p.1 * SCALE)
}

/// Where a ray leaving the disk crosses the boundary circle.
fn clip(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let (cx, cy) = boundary_center().to_f64();
    let r = BOUNDARY_RADIUS as f64;
    let inside = |p: (f64, f64)| (p.0 - cx).powi(2) + (p.1 - cy).powi(2) <= r * r;
    if inside(b) {
        return b;
    }
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let (fx, fy) = (a.0 - cx, a.1 - cy);
    let qa = dx * dx + dy * dy;
    let qb = 2.0 * (dx * fx + dy * fy);
    let qc = fx * fx + fy * fy - r * r;
    let t = (-qb + (qb * qb - 4.0 * qa * qc).sqrt()) / (2.0 * qa);
    (a.0 + t * dx, a.1 + t * dy)
}

/// Path data and the two end points (screen coordinates) with the
/// direction the curve leaves each of them.
fn path_data(d: &ArcDrawing) -> (String, [((f64, f64), (f64, f64)); 2]) {
    let prims = &d.primitives;
    let mut out = String::new();
    let start_of = |p: &Primitive, next: Option<&Primitive>| -> Point {
        let (s, e) = p.endpoints();
        match next {
            Some(n) => {
                let (ns, ne) = n.endpoints();
                if e == ns || e == ne {
                    s
                } else {
                    e
                }
            }
            None => s,
        }
    };
    let mut cur = start_of(&prims[0], prims.get(1));
    let first = screen(cur.to_f64());
    let mut ends = [(first, (0.0, 0.0)); 2];
    let _ = write!(out, "M {:.3} {:.3}", first.0, first.1);
    let n = prims.len();
    for (i, p) in prims.iter().enumerate() {
        let (s, e) = p.endpoints();
        let to = if s == cur { e } else { s };
        match *p {
            Primitive::Segment { .. } => {
                let a = cur.to_f64();
                let b = clip(a, to.to_f64());
                let sb = screen(b);
                let _ = write!(out, " L {:.3} {:.3}", sb.0, sb.1);
                if i == 0 {
                    ends[0].1 = (b.0 - a.0, b.1 - a.1);
                }
                if i == n - 1 {
                    ends[1] = (sb, (a.0 - b.0, a.1 - b.1));
                }
            }
            Primitive::HalfCircle { center, r, n: bulge } => {
                let c = center.to_f64();
                let (rx, ry) = r.to_f64();
                let rad = (rx * rx + ry * ry).sqrt();
                let (nx, ny) = bulge.to_f64();
                let nl = (nx * nx + ny * ny).sqrt();
                let m = screen((c.0 + nx / nl * rad, c.1 + ny / nl * rad));
                let sa = screen(cur.to_f64());
                let sb = screen(to.to_f64());
                let cross = (m.0 - sa.0) * (sb.1 - m.1) - (m.1 - sa.1) * (sb.0 - m.0);
                let sweep = (cross > 0.0) as u8;
                let pr = rad * SCALE;
                let _ = write!(
                    out,
                    " A {pr:.3} {pr:.3} 0 0 {sweep} {:.3} {:.3} A {pr:.3} {pr:.3} 0 0 {sweep} {:.3} {:.3}",
                    m.0, m.1, sb.0, sb.1
                );
                if i == 0 {
                    ends[0].1 = (nx, ny);
                }
                if i == n - 1 {
                    ends[1] = (sb, (nx, ny));
                }
            }
        }
        cur = to;
    }
    (out, ends)
}

fn notch(out: &mut String, at: (f64, f64), dir: (f64, f64), color: &str) {
    // A small bowtie a little way along the curve.
    let l = (dir.0 * dir.0 + dir.1 * dir.1).sqrt().max(1e-9);
    let (ux, uy) = (dir.0 / l, -dir.1 / l);
    let (px, py) = (-uy, ux);
    let c = (at.0 + 14.0 * ux, at.1 + 14.0 * uy);
    let (a, b) = (6.0, 5.0);
    let pts = [
        (c.0 - a * ux + b * px, c.1 - a * uy + b * py),
        (c.0 + a * ux - b * px, c.1 + a * uy - b * py),
        (c.0 + a * ux + b * px, c.1 + a * uy + b * py),
        (c.0 - a * ux - b * px, c.1 - a * uy - b * py),
    ];
    let _ = writeln!(
        out,
        "  <path d=\"M {:.3} {:.3} L {:.3} {:.3} L {:.3} {:.3} L {:.3} {:.3} Z\" fill=\"{color}\" stroke=\"none\"/>",
        pts[0].0, pts[0].1, pts[1].0, pts[1].1, pts[2].0, pts[2].1, pts[3].0, pts[3].1
    );
}

pub fn svg_document(items: &[SvgItem]) -> String {
    let r = BOUNDARY_RADIUS as f64 * SCALE;
    let (cx, cy) = screen(boundary_center().to_f64());
    let pad = 30.0;
    let (x0, y0) = (cx - r - pad, cy - r - pad);
    let size = 2.0 * (r + pad);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0:.1} {y0:.1} {size:.1} {size:.1}\" width=\"{size:.0}\" height=\"{size:.0}\">"
    );
    let _ = writeln!(
        out,
        "  <rect x=\"{x0:.1}\" y=\"{y0:.1}\" width=\"{size:.1}\" height=\"{size:.1}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        out,
        "  <circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"{r:.3}\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>"
    );
    let _ = writeln!(
        out,
        "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"18\" fill=\"#444\">O</text>",
        cx + r * 0.72,
        cy - r * 0.72
    );
    for (k, item) in items.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let (d, ends) = path_data(&item.drawing);
        let _ = writeln!(
            out,
            "  <path d=\"{d}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"><title>{}</title></path>",
            item.label
        );
        if let Some((t0, t1)) = item.tags {
            let (e0, e1) = item.drawing.endpoints();
            // The traced path may run from either end; match by position.
            for (tag, p) in [(t0, e0), (t1, e1)] {
                if tag != Tag::Notched {
                    continue;
                }
                let end = match puncture_point(p) {
                    Some(pt) => {
                        let s = screen(pt.to_f64());
                        if (s.0 - ends[0].0 .0).abs() < 1e-6 && (s.1 - ends[0].0 .1).abs() < 1e-6 {
                            ends[0]
                        } else {
                            ends[1]
                        }
                    }
                    None => {
                        if puncture_point(e0).is_some() && p == Puncture::O {
                            let s = screen(puncture_point(e0).unwrap().to_f64());
                            if (s.0 - ends[0].0 .0).abs() < 1e-6 && (s.1 - ends[0].0 .1).abs() < 1e-6 {
                                ends[1]
                            } else {
                                ends[0]
                            }
                        } else {
                            ends[1]
                        }
                    }
                };
                notch(&mut out, end.0, end.1, color);
            }
        }
    }
    for p in [Puncture::L, Puncture::U, Puncture::D] {
        let (x, y) = screen(puncture_point(p).unwrap().to_f64());
        let _ = writeln!(out, "  <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"black\"/>");
        let _ = writeln!(
            out,
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"16\">{p}</text>",
            x - 18.0,
            y - 8.0
        );
    }
    out.push_str("</svg>\n");
    out
}

pub fn svg_export(items: &[SvgItem], path: &Path) -> Result<()> {
    std::fs::write(path, svg_document(items))?;
    Ok(())
}
