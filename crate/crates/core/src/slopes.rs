//! Reduced extended rationals `a/b` with `b >= 0`, their types, distance and
//! the unfolding maps used to reduce an arc to one of the base slopes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `Q ∪ {∞}` stored as a reduced pair `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    a: i64,
    b: i64,
}

impl Slope {
    pub const ZERO: Slope = Slope { a: 0, b: 1 };
    pub const ONE: Slope = Slope { a: 1, b: 1 };
    pub const MINUS_ONE: Slope = Slope { a: -1, b: 1 };
    pub const INFINITY: Slope = Slope { a: 1, b: 0 };

    pub fn new(a: i64, b: i64) -> Result<Slope> {
        normalize(a, b)
    }

    pub fn integer(n: i64) -> Slope {
        Slope { a: n, b: 1 }
    }

    /// Numerator `a(q)`.
    pub fn num(&self) -> i64 {
        self.a
    }

    /// Denominator `b(q)`, zero only for ∞.
    pub fn den(&self) -> i64 {
        self.b
    }

    pub fn is_infinite(&self) -> bool {
        self.b == 0
    }

    /// `|a| + b`, the enumeration height.
    pub fn height(&self) -> u64 {
        self.a.unsigned_abs() + self.b as u64
    }
}

pub fn normalize(a: i64, b: i64) -> Result<Slope> {
    if a == 0 && b == 0 {
        return Err(Error::InvalidSlope("0/0".into()));
    }
    if b == 0 {
        return Ok(Slope::INFINITY);
    }
    let g = a.gcd(&b);
    let (mut a, mut b) = (a / g, b / g);
    if b < 0 {
        a = -a;
        b = -b;
    }
    Ok(Slope { a, b })
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (self.a as i128 * other.b as i128).cmp(&(other.a as i128 * self.b as i128)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "∞")
        } else if self.b == 1 {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}/{}", self.a, self.b)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let s = s.trim();
        if s == "∞" || s.eq_ignore_ascii_case("inf") {
            return Ok(Slope::INFINITY);
        }
        let bad = || Error::Parse(format!("not a slope: {s:?}"));
        match s.split_once('/') {
            Some((a, b)) => {
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let b: i64 = b.trim().parse().map_err(|_| bad())?;
                normalize(a, b)
            }
            None => Ok(Slope::integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Root flavour `typ(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlopeType {
    Zero,
    One,
    Infinity,
}

/// Arc flavour `typc(q) = -typ(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcType {
    Zero,
    MinusOne,
    Infinity,
}

impl SlopeType {
    pub fn base_slope(self) -> Slope {
        match self {
            SlopeType::Zero => Slope::ZERO,
            SlopeType::One => Slope::ONE,
            SlopeType::Infinity => Slope::INFINITY,
        }
    }
}

impl ArcType {
    pub fn base_slope(self) -> Slope {
        match self {
            ArcType::Zero => Slope::ZERO,
            ArcType::MinusOne => Slope::MINUS_ONE,
            ArcType::Infinity => Slope::INFINITY,
        }
    }
}

impl fmt::Display for SlopeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SlopeType::Zero => "0",
            SlopeType::One => "1",
            SlopeType::Infinity => "∞",
        })
    }
}

impl fmt::Display for ArcType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArcType::Zero => "0",
            ArcType::MinusOne => "-1",
            ArcType::Infinity => "∞",
        })
    }
}

pub fn slope_type(p: Slope) -> SlopeType {
    match (p.a.rem_euclid(2), p.b.rem_euclid(2)) {
        (0, 1) => SlopeType::Zero,
        (1, 1) => SlopeType::One,
        (1, 0) => SlopeType::Infinity,
        _ => unreachable!("reduced pair with both entries even"),
    }
}

pub fn arc_type(p: Slope) -> ArcType {
    match slope_type(p) {
        SlopeType::Zero => ArcType::Zero,
        SlopeType::One => ArcType::MinusOne,
        SlopeType::Infinity => ArcType::Infinity,
    }
}

/// `⌊p,q⌋ = |a(q)b(p) - a(p)b(q)|`.
pub fn dist(p: Slope, q: Slope) -> u64 {
    (q.a as i128 * p.b as i128 - p.a as i128 * q.b as i128).unsigned_abs() as u64
}

/// `⌊n⌋`: floor of `n/2`.
pub fn half_floor(n: i64) -> i64 {
    n.div_euclid(2)
}

/// `⌈n⌉`: zero at zero, `⌊n-1⌋` for positive `n`.
pub fn half_outer(n: i64) -> Result<i64> {
    match n {
        n if n < 0 => Err(Error::Domain(format!("half_outer of negative {n}"))),
        0 => Ok(0),
        n => Ok(half_floor(n - 1)),
    }
}

/// `|a| + b + |a + b|`.
pub fn complexity(p: Slope) -> u64 {
    p.a.unsigned_abs() + p.b as u64 + (p.a + p.b).unsigned_abs()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnfoldStep {
    L,
    D,
    U,
}

impl fmt::Display for UnfoldStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnfoldStep::L => "L",
            UnfoldStep::D => "D",
            UnfoldStep::U => "U",
        })
    }
}

impl UnfoldStep {
    pub const ALL: [UnfoldStep; 3] = [UnfoldStep::L, UnfoldStep::D, UnfoldStep::U];

    /// The step that lowers complexity at `p`, or `None` on a base slope.
    pub fn dictated(p: Slope) -> Option<UnfoldStep> {
        if complexity(p) <= 2 {
            None
        } else if p > Slope::ZERO {
            Some(UnfoldStep::L)
        } else if p > Slope::MINUS_ONE {
            Some(UnfoldStep::D)
        } else {
            Some(UnfoldStep::U)
        }
    }
}

pub fn unfold(p: Slope, f: UnfoldStep) -> Slope {
    let (a, b) = (p.a, p.b);
    let (a2, b2) = match f {
        UnfoldStep::L => (-a, b),
        UnfoldStep::D => (-a, 2 * a + b),
        // -2 - p rather than 2 - p: only this involution lowers complexity
        // for p < -1.
        UnfoldStep::U => (-a - 2 * b, b),
    };
    normalize(a2, b2).expect("unfolding maps are invertible")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub base: Slope,
    pub steps: Vec<UnfoldStep>,
}

impl Reduction {
    /// Undo the steps from the base, recovering the original slope.
    pub fn replay(&self) -> Slope {
        self.steps.iter().rev().fold(self.base, |p, &f| unfold(p, f))
    }
}

pub fn reduce(p: Slope) -> Reduction {
    let mut cur = p;
    let mut steps = Vec::new();
    while let Some(f) = UnfoldStep::dictated(cur) {
        let next = unfold(cur, f);
        assert!(
            complexity(next) < complexity(cur),
            "unfolding {f} at {cur} did not lower complexity"
        );
        steps.push(f);
        cur = next;
    }
    Reduction { base: cur, steps }
}

/// All slopes with `|a| + b <= max_height`, ascending.
pub fn slopes_up_to_height(max_height: u64) -> Vec<Slope> {
    let h = max_height as i64;
    let mut out = Vec::new();
    if h >= 1 {
        out.push(Slope::INFINITY);
    }
    for b in 1..=h {
        for a in -(h - b)..=(h - b) {
            if a.gcd(&b) == 1 {
                out.push(Slope { a, b });
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(14, 8).unwrap(), Slope { a: 7, b: 4 });
        assert_eq!(normalize(3, -6).unwrap(), Slope { a: -1, b: 2 });
        assert_eq!(normalize(-5, 0).unwrap(), Slope::INFINITY);
        assert!(normalize(0, 0).is_err());
    }

    #[test]
    fn dist_examples() {
        assert_eq!(dist(Slope::ZERO, Slope::INFINITY), 1);
        assert_eq!(dist(s("7/4"), Slope::ZERO), 7);
        assert_eq!(dist(s("7/4"), Slope::MINUS_ONE), 11);
    }

    #[test]
    fn type_examples() {
        assert_eq!(slope_type(Slope::ZERO), SlopeType::Zero);
        assert_eq!(slope_type(s("7/4")), SlopeType::Infinity);
        assert_eq!(slope_type(Slope::MINUS_ONE), SlopeType::One);
        assert_eq!(arc_type(Slope::MINUS_ONE), ArcType::MinusOne);
    }

    #[test]
    fn half_functions() {
        assert_eq!(half_floor(7), 3);
        assert_eq!(half_floor(-1), -1);
        assert_eq!(half_outer(2).unwrap(), 0);
        assert_eq!(half_outer(11).unwrap(), 5);
        assert_eq!(half_outer(0).unwrap(), 0);
        assert!(half_outer(-3).is_err());
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(complexity(s("7/4")), 22);
        assert_eq!(complexity(Slope::INFINITY), 2);
        assert_eq!(complexity(Slope::MINUS_ONE), 2);
        for p in slopes_up_to_height(30) {
            assert_eq!(
                complexity(p) == 2,
                [Slope::MINUS_ONE, Slope::ZERO, Slope::INFINITY].contains(&p)
            );
        }
    }

    #[test]
    fn unfold_examples() {
        assert_eq!(unfold(s("7/4"), UnfoldStep::L), s("-7/4"));
        assert_eq!(unfold(s("-1/2"), UnfoldStep::D), Slope::INFINITY);
        assert_eq!(unfold(Slope::MINUS_ONE, UnfoldStep::U), Slope::MINUS_ONE);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(
            reduce(Slope::ZERO),
            Reduction {
                base: Slope::ZERO,
                steps: vec![]
            }
        );
        assert_eq!(
            reduce(s("-1/2")),
            Reduction {
                base: Slope::INFINITY,
                steps: vec![UnfoldStep::D]
            }
        );
        use UnfoldStep::*;
        let r = reduce(s("7/4"));
        assert_eq!(r.base, Slope::INFINITY);
        assert_eq!(r.steps, vec![L, U, D, L, D]);
        assert_eq!(r.replay(), s("7/4"));
    }

    #[test]
    fn parse_and_print() {
        for t in ["∞", "0", "-1", "7/4", "-3/5"] {
            assert_eq!(s(t).to_string(), t);
        }
        assert_eq!(s("inf"), Slope::INFINITY);
        assert_eq!(s("1/0"), Slope::INFINITY);
        assert_eq!(s("6/4"), s("3/2"));
        assert!("x".parse::<Slope>().is_err());
        assert!("0/0".parse::<Slope>().is_err());
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let v = slopes_up_to_height(5);
        assert_eq!(*v.last().unwrap(), Slope::INFINITY);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(slopes_up_to_height(1), vec![Slope::ZERO, Slope::INFINITY]);
        assert_eq!(slopes_up_to_height(2).len(), 4);
    }

    #[test]
    fn parity_of_dist_matches_type() {
        let v = slopes_up_to_height(20);
        for &p in &v {
            for &q in &v {
                assert_eq!(dist(p, q) % 2 == 0, slope_type(p) == slope_type(q), "{p} {q}");
            }
        }
    }

    fn arb_slope() -> impl Strategy<Value = Slope> {
        (-200i64..200, 0i64..200)
            .prop_filter("not 0/0", |(a, b)| (*a, *b) != (0, 0))
            .prop_map(|(a, b)| normalize(a, b).unwrap())
    }

    fn arb_step() -> impl Strategy<Value = UnfoldStep> {
        prop_oneof![Just(UnfoldStep::L), Just(UnfoldStep::D), Just(UnfoldStep::U)]
    }

    proptest! {
        #[test]
        fn dist_symmetric_and_separating(p in arb_slope(), q in arb_slope()) {
            prop_assert_eq!(dist(p, q), dist(q, p));
            prop_assert_eq!(dist(p, q) == 0, p == q);
        }

        #[test]
        fn unfold_is_type_preserving_involution(p in arb_slope(), f in arb_step()) {
            prop_assert_eq!(unfold(unfold(p, f), f), p);
            prop_assert_eq!(arc_type(unfold(p, f)), arc_type(p));
        }

        #[test]
        fn unfold_preserves_dist(p in arb_slope(), q in arb_slope(), f in arb_step()) {
            prop_assert_eq!(dist(unfold(p, f), unfold(q, f)), dist(p, q));
        }

        #[test]
        fn reduce_lands_on_arc_type(p in arb_slope()) {
            let r = reduce(p);
            prop_assert_eq!(r.base, arc_type(p).base_slope());
            prop_assert_eq!(r.replay(), p);
        }

        #[test]
        fn display_round_trips(p in arb_slope()) {
            prop_assert_eq!(p.to_string().parse::<Slope>().unwrap(), p);
        }
    }
}
