//! The semicircle construction of `α_p^±` with exact coordinates.
//!
//! Layout: `L = (0,0)`, `U = (1,1)`, `D = (1,-1)`, and `O` is the outside
//! of the circle of radius 4 about `(1/2, 0)`. With `p = r/s` the punctures
//! carry the counts `|r|` at `U`, `|s|` at `D` and `|r+s|` at `L`. The
//! puncture with the largest count is the hub `H`; the other two `P1, P2`
//! span the "P-line". Half-circles about `P1, P2` bulge away from the hub,
//! those about `H` away from the P-line, and segments join the points on the
//! P-line to the points on the parallel line through `H` in order.

use super::geometry::{check_simple, count_crossings, q, qr, trace, Point, Primitive, Q};
use super::{arc_endpoints, Puncture, Sign, UntaggedArc};
use crate::error::{Error, Result};
use crate::slopes::{arc_type, complexity, Slope};

pub fn puncture_point(p: Puncture) -> Option<Point> {
    match p {
        Puncture::L => Some(Point::int(0, 0)),
        Puncture::U => Some(Point::int(1, 1)),
        Puncture::D => Some(Point::int(1, -1)),
        Puncture::O => None,
    }
}

fn at(p: Puncture) -> Point {
    puncture_point(p).expect("inner puncture")
}

/// Parameter length of rays; enough to leave the boundary disk.
const RAY: i128 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDrawing {
    pub arc: UntaggedArc,
    /// Primitives in order along the curve.
    pub primitives: Vec<Primitive>,
    /// Number of half-circles about each of `L, U, D`.
    pub half_circles: [(Puncture, usize); 3],
    pub segments: usize,
    /// Whether the drawing carries the extra segment to `O`.
    pub outer_segment: bool,
}

impl ArcDrawing {
    pub fn endpoints(&self) -> (Puncture, Puncture) {
        self.arc.endpoints()
    }

    pub fn half_circles_at(&self, p: Puncture) -> usize {
        self.half_circles.iter().find(|(q, _)| *q == p).map_or(0, |(_, n)| *n)
    }

    /// Verify that the primitives form one simple curve joining the two
    /// punctures the arc should join.
    pub fn check(&self) -> Result<()> {
        let (s, e) = check_simple(&self.primitives)?;
        let mut got = [identify(s)?, identify(e)?];
        let (a, b) = self.endpoints();
        let mut want = [a, b];
        got.sort();
        want.sort();
        if got != want {
            return Err(Error::Geometry(format!(
                "{} ends at {}-{}, expected {}-{}",
                self.arc, got[0], got[1], want[0], want[1]
            )));
        }
        Ok(())
    }
}

fn identify(p: Point) -> Result<Puncture> {
    for c in [Puncture::L, Puncture::U, Puncture::D] {
        if at(c) == p {
            return Ok(c);
        }
    }
    let r = q(super::geometry::BOUNDARY_RADIUS);
    if (p - super::geometry::boundary_center()).norm2() > r * r {
        return Ok(Puncture::O);
    }
    Err(Error::Geometry("curve ends away from every puncture".into()))
}

fn count_at(p: Slope, c: Puncture) -> i64 {
    let (r, s) = (p.num(), p.den());
    match c {
        Puncture::U => r.abs(),
        Puncture::D => s,
        Puncture::L => (r + s).abs(),
        Puncture::O => 0,
    }
}

/// Points and half-circles about one puncture, as parameters `y` along the
/// line through `center` with direction `w`.
struct Group {
    ys: Vec<Q>,
    circles: Vec<Primitive>,
}

fn group(center: Point, cy: Q, count: i64, inner: bool, w: Point, bulge: Point) -> Group {
    let (m, with_center) = if inner {
        (count / 2, count % 2 == 1)
    } else {
        ((count - 1) / 2, count % 2 == 0)
    };
    let mut ys = Vec::new();
    let mut circles = Vec::new();
    for k in 1..=m {
        let t = qr(k as i128, m as i128 + 1);
        ys.push(cy + t);
        ys.push(cy - t);
        circles.push(Primitive::HalfCircle {
            center,
            r: t * w,
            n: bulge,
        });
    }
    if with_center {
        ys.push(cy);
    }
    Group { ys, circles }
}

fn base_drawing(arc: UntaggedArc) -> ArcDrawing {
    let (a, b) = arc.endpoints();
    let prim = if b == Puncture::O {
        let dir = match a {
            Puncture::U => Point::int(1, 2),
            Puncture::D => Point::int(1, -2),
            _ => Point::int(-1, 0),
        };
        let start = at(a);
        Primitive::Segment {
            a: start,
            b: start + q(RAY) * dir,
        }
    } else {
        Primitive::Segment { a: at(a), b: at(b) }
    };
    ArcDrawing {
        arc,
        primitives: vec![prim],
        half_circles: [(Puncture::L, 0), (Puncture::U, 0), (Puncture::D, 0)],
        segments: (b != Puncture::O) as usize,
        outer_segment: b == Puncture::O,
    }
}

pub fn render(p: Slope, sign: Sign) -> ArcDrawing {
    let arc = UntaggedArc::new(p, sign);
    if complexity(p) <= 2 {
        return base_drawing(arc);
    }
    let inner = sign == Sign::Plus;
    let hub = [Puncture::L, Puncture::U, Puncture::D]
        .into_iter()
        .max_by_key(|&c| count_at(p, c))
        .expect("three punctures");
    let (p1, p2) = match hub {
        Puncture::L => (Puncture::U, Puncture::D),
        Puncture::U => (Puncture::D, Puncture::L),
        _ => (Puncture::L, Puncture::U),
    };
    let (h, a1, a2) = (at(hub), at(p1), at(p2));
    let half = qr(1, 2);
    let w = half * (a1 - a2);
    let mid = half * (a1 + a2);
    let mut away = w.perp();
    if away.dot(mid - h) < q(0) {
        away = -away;
    }

    let g1 = group(a1, q(1), count_at(p, p1), inner, w, away);
    let g2 = group(a2, q(-1), count_at(p, p2), inner, w, away);
    let gh = group(h, q(0), count_at(p, hub), inner, w, -away);

    let mut kappa: Vec<Q> = g1.ys.iter().chain(&g2.ys).copied().collect();
    if !inner {
        kappa.push(q(0));
    }
    let mut lambda = gh.ys.clone();
    kappa.sort_by(|a, b| b.cmp(a));
    lambda.sort_by(|a, b| b.cmp(a));
    assert_eq!(kappa.len(), lambda.len(), "point counts on the two lines differ");

    let mut prims: Vec<Primitive> = Vec::new();
    prims.extend(g1.circles.iter().chain(&g2.circles).chain(&gh.circles));
    for (yk, yl) in kappa.iter().zip(&lambda) {
        prims.push(Primitive::Segment {
            a: mid + *yk * w,
            b: h + *yl * w,
        });
    }
    if !inner {
        prims.push(Primitive::Segment {
            a: mid,
            b: mid + q(RAY) * away,
        });
    }
    let primitives = match trace(&prims) {
        Ok((ordered, _, _)) => ordered,
        Err(_) => prims,
    };
    let counts = |c: Puncture| {
        [(p1, &g1), (p2, &g2), (hub, &gh)]
            .iter()
            .find(|(x, _)| *x == c)
            .map_or(0, |(_, g)| g.circles.len())
    };
    debug_assert_eq!(arc.endpoints(), arc_endpoints(arc_type(p), sign));
    ArcDrawing {
        arc,
        primitives,
        half_circles: [
            (Puncture::L, counts(Puncture::L)),
            (Puncture::U, counts(Puncture::U)),
            (Puncture::D, counts(Puncture::D)),
        ],
        segments: kappa.len(),
        outer_segment: !inner,
    }
}

/// Crossings of two drawings strictly inside the disk.
pub fn crossings(d1: &ArcDrawing, d2: &ArcDrawing) -> Result<u64> {
    count_crossings(&d1.primitives, &d2.primitives)
}
