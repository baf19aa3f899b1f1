//! Exact plane geometry for arc drawings: rational points, segments and
//! half-circles, with intersections decided through quadratic surds.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Q = Ratio<i128>;

pub fn q(n: i128) -> Q {
    Q::from_integer(n)
}

pub fn qr(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl Point {
    pub fn new(x: Q, y: Q) -> Point {
        Point { x, y }
    }

    pub fn int(x: i128, y: i128) -> Point {
        Point { x: q(x), y: q(y) }
    }

    pub fn dot(self, o: Point) -> Q {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> Q {
        self.x * o.y - self.y * o.x
    }

    pub fn norm2(self) -> Q {
        self.dot(self)
    }

    /// Rotation by a quarter turn counterclockwise.
    pub fn perp(self) -> Point {
        Point { x: -self.y, y: self.x }
    }

    pub fn to_f64(self) -> (f64, f64) {
        let f = |v: Q| *v.numer() as f64 / *v.denom() as f64;
        (f(self.x), f(self.y))
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point {
            x: self.x + o.x,
            y: self.y + o.y,
        }
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point {
            x: self.x - o.x,
            y: self.y - o.y,
        }
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point { x: -self.x, y: -self.y }
    }
}

impl Mul<Point> for Q {
    type Output = Point;
    fn mul(self, p: Point) -> Point {
        Point {
            x: self * p.x,
            y: self * p.y,
        }
    }
}

/// Centre and squared radius of the disk bounded by the fourth puncture.
pub fn boundary_center() -> Point {
    Point::new(qr(1, 2), q(0))
}

pub const BOUNDARY_RADIUS: i128 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primitive {
    Segment {
        a: Point,
        b: Point,
    },
    /// The half of the circle about `center` through `center ± r` lying on
    /// the side `n` points to; it starts at `center + r`.
    HalfCircle {
        center: Point,
        r: Point,
        n: Point,
    },
}

impl Primitive {
    pub fn endpoints(&self) -> (Point, Point) {
        match *self {
            Primitive::Segment { a, b } => (a, b),
            Primitive::HalfCircle { center, r, .. } => (center + r, center - r),
        }
    }

    /// Direction in which the primitive leaves its endpoint `v`.
    fn leaving(&self, v: Point) -> Point {
        match *self {
            Primitive::Segment { a, b } => {
                if v == a {
                    b - a
                } else {
                    a - b
                }
            }
            Primitive::HalfCircle { n, .. } => n,
        }
    }
}

/// `α + β√d` with `d >= 0`.
#[derive(Debug, Clone, Copy)]
struct Surd {
    alpha: Q,
    beta: Q,
    d: Q,
}

impl Surd {
    fn rational(alpha: Q) -> Surd {
        Surd {
            alpha,
            beta: q(0),
            d: q(0),
        }
    }

    fn sign(&self) -> Ordering {
        let sa = self.alpha.cmp(&q(0));
        if self.beta.is_zero() || self.d.is_zero() {
            return sa;
        }
        let sb = self.beta.cmp(&q(0));
        if sa == sb || sa == Ordering::Equal {
            return sb;
        }
        let lhs = self.alpha * self.alpha;
        let rhs = self.beta * self.beta * self.d;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    fn affine(&self, k: Q, c: Q) -> Surd {
        Surd {
            alpha: k * self.alpha + c,
            beta: k * self.beta,
            d: self.d,
        }
    }

    fn square(&self) -> Surd {
        Surd {
            alpha: self.alpha * self.alpha + self.beta * self.beta * self.d,
            beta: q(2) * self.alpha * self.beta,
            d: self.d,
        }
    }

    fn add(&self, o: &Surd) -> Surd {
        debug_assert!(self.d == o.d || self.beta.is_zero() || o.beta.is_zero());
        let d = if self.beta.is_zero() { o.d } else { self.d };
        Surd {
            alpha: self.alpha + o.alpha,
            beta: self.beta + o.beta,
            d,
        }
    }

    fn to_rational(&self) -> Option<Q> {
        if self.beta.is_zero() || self.d.is_zero() {
            return Some(self.alpha);
        }
        let rn = self.d.numer().sqrt();
        let rd = self.d.denom().sqrt();
        (rn * rn == *self.d.numer() && rd * rd == *self.d.denom()).then(|| self.alpha + self.beta * Q::new(rn, rd))
    }
}

/// Where a contact sits on a primitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Loc {
    Interior,
    Start,
    End,
}

impl Loc {
    fn at_param(t: Q) -> Loc {
        if t.is_zero() {
            Loc::Start
        } else if t == q(1) {
            Loc::End
        } else {
            Loc::Interior
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Contact {
    pub on_a: Loc,
    pub on_b: Loc,
    pub tangent: bool,
    /// Strictly inside the boundary disk.
    pub inside: bool,
    /// The contact point when it is rational; only the tests look at it.
    #[allow(dead_code)]
    pub point: Option<Point>,
}

/// A point `base + λ·dir` with `λ` a surd.
struct LinePoint {
    base: Point,
    dir: Point,
    lambda: Surd,
}

impl LinePoint {
    /// `(z - c)·m` as a surd.
    fn dot_from(&self, c: Point, m: Point) -> Surd {
        self.lambda.affine(self.dir.dot(m), (self.base - c).dot(m))
    }

    fn dist2_minus(&self, c: Point, r2: Q) -> Surd {
        let f = self.base - c;
        let a = self.dir.norm2();
        let b = q(2) * self.dir.dot(f);
        let l2 = self.lambda.square();
        Surd {
            alpha: a * l2.alpha,
            beta: a * l2.beta,
            d: l2.d,
        }
        .add(&self.lambda.affine(b, f.norm2() - r2))
    }

    fn inside(&self) -> bool {
        let r = q(BOUNDARY_RADIUS);
        self.dist2_minus(boundary_center(), r * r).sign() == Ordering::Less
    }

    fn point(&self) -> Option<Point> {
        let l = self.lambda.to_rational()?;
        Some(self.base + l * self.dir)
    }
}

/// Roots of `|base + λ dir - c|² = r2`, with a tangency flag.
fn line_circle(base: Point, dir: Point, c: Point, r2: Q) -> (Vec<Surd>, bool) {
    let f = base - c;
    let a = dir.norm2();
    let b = q(2) * dir.dot(f);
    let cc = f.norm2() - r2;
    let disc = b * b - q(4) * a * cc;
    if disc.is_negative() {
        return (vec![], false);
    }
    let alpha = -b / (q(2) * a);
    if disc.is_zero() {
        return (vec![Surd::rational(alpha)], true);
    }
    let beta = Q::from_integer(1) / (q(2) * a);
    (
        vec![
            Surd { alpha, beta, d: disc },
            Surd {
                alpha,
                beta: -beta,
                d: disc,
            },
        ],
        false,
    )
}

/// Location of a circle point on a half-circle, or `None` if it is on the
/// other half.
fn on_half(lp: &LinePoint, center: Point, r: Point, n: Point) -> Option<Loc> {
    match lp.dot_from(center, n).sign() {
        Ordering::Less => None,
        Ordering::Greater => Some(Loc::Interior),
        Ordering::Equal => {
            let s = lp.dot_from(center, r).sign();
            Some(if s == Ordering::Greater { Loc::Start } else { Loc::End })
        }
    }
}

fn on_segment(lambda: &Surd) -> Option<Loc> {
    let s0 = lambda.sign();
    let s1 = lambda.affine(q(-1), q(1)).sign();
    if s0 == Ordering::Less || s1 == Ordering::Less {
        return None;
    }
    Some(if s0 == Ordering::Equal {
        Loc::Start
    } else if s1 == Ordering::Equal {
        Loc::End
    } else {
        Loc::Interior
    })
}

fn seg_seg(a: Point, b: Point, c: Point, d: Point) -> Result<Vec<Contact>> {
    let (u, v) = (b - a, d - c);
    let den = u.cross(v);
    let mk = |t: Q, s: Q| {
        let lp = LinePoint {
            base: a,
            dir: u,
            lambda: Surd::rational(t),
        };
        Contact {
            on_a: Loc::at_param(t),
            on_b: Loc::at_param(s),
            tangent: false,
            inside: lp.inside(),
            point: lp.point(),
        }
    };
    if den.is_zero() {
        if !(c - a).cross(u).is_zero() {
            return Ok(vec![]);
        }
        let len = u.norm2();
        let tc = (c - a).dot(u) / len;
        let td = (d - a).dot(u) / len;
        let lo = tc.min(td).max(q(0));
        let hi = tc.max(td).min(q(1));
        return match lo.cmp(&hi) {
            Ordering::Greater => Ok(vec![]),
            Ordering::Less => Err(Error::Geometry("collinear segments overlap".into())),
            Ordering::Equal => {
                let s = if lo == tc { q(0) } else { q(1) };
                Ok(vec![mk(lo, s)])
            }
        };
    }
    let t = (c - a).cross(v) / den;
    let s = (c - a).cross(u) / den;
    if t < q(0) || t > q(1) || s < q(0) || s > q(1) {
        return Ok(vec![]);
    }
    Ok(vec![mk(t, s)])
}

fn seg_half(a: Point, b: Point, center: Point, r: Point, n: Point) -> Vec<Contact> {
    let dir = b - a;
    let (roots, tangent) = line_circle(a, dir, center, r.norm2());
    roots
        .into_iter()
        .filter_map(|lambda| {
            let on_a = on_segment(&lambda)?;
            let lp = LinePoint { base: a, dir, lambda };
            let on_b = on_half(&lp, center, r, n)?;
            Some(Contact {
                on_a,
                on_b,
                tangent,
                inside: lp.inside(),
                point: lp.point(),
            })
        })
        .collect()
}

fn half_half(c1: Point, r1: Point, n1: Point, c2: Point, r2: Point, n2: Point) -> Result<Vec<Contact>> {
    let (s1, s2) = (r1.norm2(), r2.norm2());
    if c1 == c2 {
        if s1 != s2 {
            return Ok(vec![]);
        }
        return Err(Error::Geometry("half-circles on a common circle".into()));
    }
    let m = c2 - c1;
    let k = (s1 - s2 + c2.norm2() - c1.norm2()) / q(2);
    let base = (k / m.norm2()) * m;
    let dir = m.perp();
    let (roots, tangent) = line_circle(base, dir, c1, s1);
    Ok(roots
        .into_iter()
        .filter_map(|lambda| {
            let lp = LinePoint { base, dir, lambda };
            let on_a = on_half(&lp, c1, r1, n1)?;
            let on_b = on_half(&lp, c2, r2, n2)?;
            Some(Contact {
                on_a,
                on_b,
                tangent,
                inside: lp.inside(),
                point: lp.point(),
            })
        })
        .collect())
}

fn swap(c: Contact) -> Contact {
    Contact {
        on_a: c.on_b,
        on_b: c.on_a,
        ..c
    }
}

pub fn meet(p: &Primitive, o: &Primitive) -> Result<Vec<Contact>> {
    use Primitive::*;
    match (*p, *o) {
        (Segment { a, b }, Segment { a: c, b: d }) => seg_seg(a, b, c, d),
        (Segment { a, b }, HalfCircle { center, r, n }) => Ok(seg_half(a, b, center, r, n)),
        (HalfCircle { center, r, n }, Segment { a, b }) => {
            Ok(seg_half(a, b, center, r, n).into_iter().map(swap).collect())
        }
        (
            HalfCircle {
                center: c1,
                r: r1,
                n: n1,
            },
            HalfCircle {
                center: c2,
                r: r2,
                n: n2,
            },
        ) => half_half(c1, r1, n1, c2, r2, n2),
    }
}

fn endpoint(p: &Primitive, loc: Loc) -> Point {
    let (s, e) = p.endpoints();
    if loc == Loc::Start {
        s
    } else {
        e
    }
}

/// Which side of `other` the primitive `prim` lies on as it leaves `v`.
fn side(other: &Primitive, v: Point, prim: &Primitive) -> Result<Ordering> {
    let t = prim.leaving(v);
    let s = match *other {
        Primitive::Segment { a, b } => {
            let dq = b - a;
            match dq.cross(t).cmp(&q(0)) {
                Ordering::Equal => match *prim {
                    Primitive::Segment { .. } => {
                        return Err(Error::Geometry("segment runs along another primitive".into()))
                    }
                    Primitive::HalfCircle { center, .. } => dq.cross(center - v).cmp(&q(0)),
                },
                s => s,
            }
        }
        Primitive::HalfCircle { center, .. } => match t.dot(v - center).cmp(&q(0)) {
            Ordering::Equal => match *prim {
                Primitive::Segment { .. } => Ordering::Greater,
                Primitive::HalfCircle { .. } => return Err(Error::Geometry("half-circles tangent at a vertex".into())),
            },
            s => s,
        },
    };
    if s == Ordering::Equal {
        return Err(Error::Geometry("undecidable side at a contact vertex".into()));
    }
    Ok(s)
}

/// Order the primitives into a single path and return its two ends.
pub fn trace(prims: &[Primitive]) -> Result<(Vec<Primitive>, Point, Point)> {
    if prims.is_empty() {
        return Err(Error::Geometry("empty drawing".into()));
    }
    let mut at: HashMap<Point, Vec<usize>> = HashMap::new();
    for (i, p) in prims.iter().enumerate() {
        let (s, e) = p.endpoints();
        if s == e {
            return Err(Error::Geometry("degenerate primitive".into()));
        }
        at.entry(s).or_default().push(i);
        at.entry(e).or_default().push(i);
    }
    if at.values().any(|v| v.len() > 2) {
        return Err(Error::Geometry("branch point in drawing".into()));
    }
    let mut ends: Vec<Point> = at.iter().filter(|(_, v)| v.len() == 1).map(|(p, _)| *p).collect();
    if ends.len() != 2 {
        return Err(Error::Geometry(format!("drawing has {} loose ends", ends.len())));
    }
    ends.sort_by_key(|p| (p.x, p.y));
    let start = ends[0];
    let mut used = vec![false; prims.len()];
    let mut order = Vec::with_capacity(prims.len());
    let mut cur = start;
    loop {
        let next = at[&cur].iter().copied().find(|&i| !used[i]);
        let Some(i) = next else { break };
        used[i] = true;
        let p = prims[i];
        let (s, e) = p.endpoints();
        order.push(p);
        cur = if s == cur { e } else { s };
    }
    if order.len() != prims.len() {
        return Err(Error::Geometry("drawing is not connected".into()));
    }
    Ok((order, start, cur))
}

/// Fails unless the primitives form one simple curve.
pub fn check_simple(prims: &[Primitive]) -> Result<(Point, Point)> {
    let (_, s, e) = trace(prims)?;
    for i in 0..prims.len() {
        for j in (i + 1)..prims.len() {
            let (a0, a1) = prims[i].endpoints();
            let (b0, b1) = prims[j].endpoints();
            let shared: Vec<Point> = [a0, a1].into_iter().filter(|p| *p == b0 || *p == b1).collect();
            for c in meet(&prims[i], &prims[j])? {
                let at_shared =
                    c.on_a != Loc::Interior && c.on_b != Loc::Interior && shared.contains(&endpoint(&prims[i], c.on_a));
                if !at_shared {
                    return Err(Error::Geometry(format!("primitives {i} and {j} meet")));
                }
            }
        }
    }
    Ok((s, e))
}

/// Number of transversal crossings strictly inside the disk, not counting
/// the two curves' own end points.
pub fn count_crossings(d1: &[Primitive], d2: &[Primitive]) -> Result<u64> {
    let ends = |d: &[Primitive]| -> Result<HashSet<Point>> {
        let (_, s, e) = trace(d)?;
        Ok(HashSet::from([s, e]))
    };
    let (e1, e2) = (ends(d1)?, ends(d2)?);
    let mut count = 0u64;
    // (which drawing owns the vertex, vertex, index of the other primitive)
    let mut contacts: HashSet<(u8, Point, usize)> = HashSet::new();
    for (i, p) in d1.iter().enumerate() {
        for (j, o) in d2.iter().enumerate() {
            for c in meet(p, o)? {
                if !c.inside {
                    continue;
                }
                match (c.on_a, c.on_b) {
                    (Loc::Interior, Loc::Interior) => {
                        if !c.tangent {
                            count += 1;
                        }
                    }
                    (la, Loc::Interior) => {
                        let v = endpoint(p, la);
                        if !e1.contains(&v) {
                            contacts.insert((1, v, j));
                        }
                    }
                    (Loc::Interior, lb) => {
                        let v = endpoint(o, lb);
                        if !e2.contains(&v) {
                            contacts.insert((2, v, i));
                        }
                    }
                    (la, _) => {
                        let v = endpoint(p, la);
                        if !(e1.contains(&v) && e2.contains(&v)) {
                            return Err(Error::Geometry("drawings share a vertex".into()));
                        }
                    }
                }
            }
        }
    }
    for (owner, v, other) in contacts {
        let (own, other) = if owner == 1 { (d1, &d2[other]) } else { (d2, &d1[other]) };
        let adjacent: Vec<&Primitive> = own
            .iter()
            .filter(|p| {
                let (s, e) = p.endpoints();
                s == v || e == v
            })
            .collect();
        if adjacent.len() != 2 {
            return Err(Error::Geometry("contact vertex is not interior to its curve".into()));
        }
        let s1 = side(other, v, adjacent[0])?;
        let s2 = side(other, v, adjacent[1])?;
        if s1 != s2 {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a: (i128, i128), b: (i128, i128)) -> Primitive {
        Primitive::Segment {
            a: Point::int(a.0, a.1),
            b: Point::int(b.0, b.1),
        }
    }

    #[test]
    fn surd_signs() {
        let s = |a: i128, b: i128, d: i128| {
            Surd {
                alpha: q(a),
                beta: q(b),
                d: q(d),
            }
            .sign()
        };
        assert_eq!(s(1, 1, 2), Ordering::Greater);
        assert_eq!(s(-2, 1, 2), Ordering::Less);
        assert_eq!(s(-2, 1, 5), Ordering::Greater);
        assert_eq!(s(-2, 1, 4), Ordering::Equal);
        assert_eq!(s(2, -1, 4), Ordering::Equal);
        assert_eq!(s(0, -1, 3), Ordering::Less);
    }

    #[test]
    fn crossing_segments() {
        let c = meet(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0))).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].point, Some(Point::int(1, 1)));
        assert_eq!((c[0].on_a, c[0].on_b), (Loc::Interior, Loc::Interior));
        assert!(meet(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))).is_err());
        assert_eq!(meet(&seg((0, 0), (1, 0)), &seg((1, 0), (3, 0))).unwrap().len(), 1);
    }

    #[test]
    fn segment_through_half_circle() {
        let h = Primitive::HalfCircle {
            center: Point::int(0, 0),
            r: Point::int(1, 0),
            n: Point::int(0, 1),
        };
        // Crosses the upper half once at an irrational point.
        let c = meet(&seg((0, 0), (1, 3)), &h).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].point.is_none());
        assert_eq!(meet(&seg((0, -2), (0, 2)), &h).unwrap().len(), 1);
        let t = meet(&seg((-2, 1), (2, 1)), &h).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t[0].tangent);
    }

    #[test]
    fn two_half_circles() {
        let a = Primitive::HalfCircle {
            center: Point::int(0, 0),
            r: Point::int(2, 0),
            n: Point::int(0, 1),
        };
        let b = Primitive::HalfCircle {
            center: Point::int(2, 0),
            r: Point::int(2, 0),
            n: Point::int(0, 1),
        };
        let c = meet(&a, &b).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].point, None);
        let b_low = Primitive::HalfCircle {
            center: Point::int(2, 0),
            r: Point::int(2, 0),
            n: Point::int(0, -1),
        };
        // They share the point (0,0)=(2,0)-(2,0)... only via endpoints.
        let c = meet(&a, &b_low).unwrap();
        assert!(c.iter().all(|c| c.on_a != Loc::Interior || c.on_b != Loc::Interior));
    }

    #[test]
    fn simple_curve_and_crossings() {
        let zig = vec![seg((0, 0), (1, 1)), seg((1, 1), (2, 0))];
        assert!(check_simple(&zig).is_ok());
        let line = vec![seg((0, 1), (2, 1))];
        // Touches at the vertex (1,1) from below: no crossing.
        assert_eq!(count_crossings(&zig, &line).unwrap(), 0);
        let through = vec![seg((0, 0), (1, 1)), seg((1, 1), (2, 2))];
        assert_eq!(count_crossings(&through, &line).unwrap(), 1);
        let bow = vec![seg((0, 0), (2, 2)), seg((2, 2), (2, 0)), seg((2, 0), (0, 2))];
        assert!(check_simple(&bow).is_err());
    }
}
