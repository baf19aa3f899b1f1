//! Positive real Schur roots `v_q^x`, their recognition, enumeration and
//! the compatibility (Ext-orthogonality) predicates.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{
    coxeter, degree, euler, is_positive, quasi_length, rank, slope_of, tau_orbit, ClassVector, H0, H1, H_INF,
};
use crate::quat::{in_coset, Axis, CosetSign, QuatUnit};
use crate::slopes::{dist, half_floor, normalize, slope_type, slopes_up_to_height, Slope, SlopeType};

pub use crate::lattice::h_vector;

/// Name of the real Schur root `v_q^x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIndex {
    pub slope: Slope,
    pub unit: QuatUnit,
}

impl RootIndex {
    pub fn new(slope: Slope, unit: QuatUnit) -> RootIndex {
        RootIndex { slope, unit }
    }

    pub fn vector(&self) -> ClassVector {
        root_vector(self.slope, self.unit)
    }
}

impl fmt::Display for RootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.slope, self.unit)
    }
}

impl FromStr for RootIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (q, x) = s
            .trim()
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("expected q:x, got {s:?}")))?;
        Ok(RootIndex {
            slope: q.parse()?,
            unit: x.parse()?,
        })
    }
}

impl Serialize for RootIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

pub fn h_type(t: SlopeType) -> ClassVector {
    match t {
        SlopeType::Zero => H0,
        SlopeType::One => H1,
        SlopeType::Infinity => H_INF,
    }
}

/// `v_t^x` for `t ∈ {0, 1, ∞}`, with `v_t^{-x} = h_t - v_t^x`.
pub fn basic_vector(t: SlopeType, x: QuatUnit) -> ClassVector {
    let v = |c: [i64; 6]| ClassVector(c);
    let positive = match (t, x.axis) {
        (SlopeType::Zero, Axis::One) => v([0, 0, 1, 0, 1, 0]),
        (SlopeType::Zero, Axis::I) => v([-1, 0, 0, 0, 0, 0]),
        (SlopeType::Zero, Axis::J) => v([0, 0, 1, 0, 0, 1]),
        (SlopeType::Zero, Axis::K) => v([0, 1, 1, 1, 1, 1]),
        (SlopeType::One, Axis::One) => v([1, 0, 1, 1, 1, 0]),
        (SlopeType::One, Axis::I) => v([0, 1, 1, 1, 1, 0]),
        (SlopeType::One, Axis::J) => v([0, 0, 1, 0, 0, 0]),
        (SlopeType::One, Axis::K) => v([1, 1, 2, 1, 1, 1]),
        (SlopeType::Infinity, Axis::One) => v([1, 0, 0, 1, 0, 0]),
        (SlopeType::Infinity, Axis::I) => v([1, 1, 1, 1, 1, 0]),
        (SlopeType::Infinity, Axis::J) => v([0, 0, 0, 0, 0, -1]),
        (SlopeType::Infinity, Axis::K) => v([1, 0, 1, 0, 0, 0]),
    };
    if x.negative {
        h_type(t) - positive
    } else {
        positive
    }
}

/// `v_q^x = v_{typ q}^x + ⌊b⌋ h_0 + ⌊a⌋ h_∞`.
pub fn root_vector(q: Slope, x: QuatUnit) -> ClassVector {
    basic_vector(slope_type(q), x) + half_floor(q.den()) * H0 + half_floor(q.num()) * H_INF
}

pub fn recognize(v: ClassVector) -> Option<RootIndex> {
    if !is_positive(v) || euler(v, v) != 1 {
        return None;
    }
    let (d, r) = (degree(v), rank(v));
    if d.gcd(&r) != 1 {
        return None;
    }
    let q = normalize(d, r).ok()?;
    let residual = v - half_floor(q.den()) * H0 - half_floor(q.num()) * H_INF;
    let t = slope_type(q);
    QuatUnit::ALL
        .into_iter()
        .find(|&x| basic_vector(t, x) == residual)
        .map(|x| RootIndex::new(q, x))
}

pub fn is_real_schur(v: ClassVector) -> bool {
    if !is_positive(v) || euler(v, v) != 1 {
        return false;
    }
    match quasi_length(v) {
        Ok(ql) => (ql as usize) < tau_orbit(v).len(),
        Err(_) => false,
    }
}

pub fn is_isotropic_schur(v: ClassVector) -> bool {
    is_positive(v) && slope_of(v).map(|q| h_vector(q) == v).unwrap_or(false)
}

/// All `(q, x)` with `|a(q)| + b(q) <= max_height`, slope ascending then `H` order.
pub fn enumerate_schur(max_height: u64) -> Vec<RootIndex> {
    slopes_up_to_height(max_height)
        .into_iter()
        .flat_map(|q| QuatUnit::ALL.into_iter().map(move |x| RootIndex::new(q, x)))
        .collect()
}

/// Ext-orthogonality of two indexed roots, via the Euler form.
pub fn compatible(r1: RootIndex, r2: RootIndex) -> bool {
    if r1.slope == r2.slope {
        return r1.unit != -r2.unit;
    }
    let (hi, lo) = if r1.slope > r2.slope { (r1, r2) } else { (r2, r1) };
    euler(hi.vector(), lo.vector()) == 0
}

/// `⟨v_p^x, v_q^y⟩ = 0` read off the orthogonality tables (`p ≠ q`).
pub fn pairing_vanishes_table(p: Slope, x: QuatUnit, q: Slope, y: QuatUnit) -> bool {
    use CosetSign::{Minus, Plus};
    use SlopeType::{Infinity as I, One as O, Zero as Z};
    let d = dist(p, q);
    let (tp, tq) = (slope_type(p), slope_type(q));
    if p > q {
        match (tp, tq) {
            (Z, Z) | (O, O) | (I, I) => x == y && d == 2,
            (Z, O) => in_coset(y, Plus, x) && d == 1,
            (Z, I) => in_coset(x, Minus, y) && d == 1,
            (O, Z) => in_coset(x, Plus, y) && d == 1,
            (O, I) => in_coset(y, Plus, x) && d == 1,
            (I, Z) => in_coset(y, Minus, x) && d == 1,
            (I, O) => in_coset(x, Plus, y) && d == 1,
        }
    } else {
        match (tp, tq) {
            (Z, Z) | (O, O) | (I, I) => x == -y && d == 2,
            (Z, O) => in_coset(y, Minus, x) && d == 1,
            (Z, I) => in_coset(x, Plus, y) && d == 1,
            (O, Z) => in_coset(x, Minus, y) && d == 1,
            (O, I) => in_coset(y, Minus, x) && d == 1,
            (I, Z) => in_coset(y, Plus, x) && d == 1,
            (I, O) => in_coset(x, Minus, y) && d == 1,
        }
    }
}

/// Same answers as [`compatible`], but from the table cells only.
pub fn compatible_table(r1: RootIndex, r2: RootIndex) -> bool {
    if r1.slope == r2.slope {
        return r1.unit != -r2.unit;
    }
    let (hi, lo) = if r1.slope > r2.slope { (r1, r2) } else { (r2, r1) };
    pairing_vanishes_table(hi.slope, hi.unit, lo.slope, lo.unit)
}

/// Which clause of the generic Ext-orthogonality criterion decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenericCase {
    A,
    B,
    C,
    D,
    E1,
    E2,
}

/// The generic criterion on two real Schur root vectors; `None` means
/// not Ext-orthogonal.
pub fn generic_case(e: ClassVector, f: ClassVector) -> Result<Option<GenericCase>> {
    for v in [e, f] {
        if !is_real_schur(v) {
            return Err(Error::Domain(format!("{v} is not a real Schur root")));
        }
    }
    let (se, sf) = (slope_of(e)?, slope_of(f)?);
    if se < sf {
        return Ok((euler(f, e) == 0).then_some(GenericCase::A));
    }
    if se > sf {
        return Ok((euler(e, f) == 0).then_some(GenericCase::B));
    }
    let ql_e = quasi_length(e)? as usize;
    let orbit = tau_orbit(e);
    if (0..ql_e).all(|j| euler(orbit[j % orbit.len()], f) == 0) {
        return Ok(Some(GenericCase::C));
    }
    let (ef, fe) = (euler(e, f), euler(f, e));
    if ef >= 0 && fe >= 0 && (ef, fe) != (0, 0) {
        return Ok(Some(GenericCase::D));
    }
    if ef == 0 && fe == 0 {
        let mut shifted = e;
        for _ in 0..orbit.len() {
            let val = euler(shifted, f);
            if val > 0 {
                return Ok(Some(GenericCase::E1));
            }
            if val < 0 {
                let ql_f = quasi_length(f)? as usize;
                return Ok((ql_e + ql_f < orbit.len()).then_some(GenericCase::E2));
            }
            shifted = coxeter(shifted);
        }
    }
    Ok(None)
}

pub fn compatible_generic(v1: ClassVector, v2: ClassVector) -> Result<bool> {
    Ok(generic_case(v1, v2)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuatUnit {
        s.parse().unwrap()
    }

    fn r(s: &str) -> RootIndex {
        s.parse().unwrap()
    }

    #[test]
    fn h_vector_examples() {
        assert_eq!(h_vector(Slope::ZERO), ClassVector([0, 0, 1, 1, 1, 1]));
        assert_eq!(h_vector(Slope::ONE), ClassVector([1, 1, 2, 2, 1, 1]));
        assert_eq!(h_vector("1/2".parse().unwrap()), ClassVector([1, 1, 3, 3, 2, 2]));
    }

    #[test]
    fn root_vector_examples() {
        assert_eq!(root_vector(Slope::ZERO, QuatUnit::ONE), ClassVector([0, 0, 1, 0, 1, 0]));
        assert_eq!(
            root_vector(Slope::INFINITY, QuatUnit::J),
            ClassVector([0, 0, 0, 0, 0, -1])
        );
        assert_eq!(
            root_vector(Slope::MINUS_ONE, QuatUnit::ONE),
            ClassVector([0, -1, 0, 0, 1, 0])
        );
    }

    #[test]
    fn recognize_examples() {
        assert_eq!(recognize(ClassVector([0, 0, 1, 0, 1, 0])), Some(r("0:1")));
        assert_eq!(recognize(H0), None);
        assert_eq!(recognize(ClassVector([0, 0, 1, 0, 1, 0]) + H0), None);
    }

    #[test]
    fn schur_predicates() {
        let v01 = ClassVector([0, 0, 1, 0, 1, 0]);
        assert!(is_real_schur(v01));
        assert!(!is_real_schur(H0));
        assert!(!is_real_schur(v01 + H0));
        assert_eq!(quasi_length(v01 + H0).unwrap(), 3);
        assert!(is_isotropic_schur(h_vector("1/2".parse().unwrap())));
        assert!(!is_isotropic_schur(2 * H0));
        assert!(!is_isotropic_schur(v01));
    }

    #[test]
    fn basic_table_has_24_positive_real_roots() {
        let mut seen = std::collections::HashSet::new();
        for t in [SlopeType::Zero, SlopeType::One, SlopeType::Infinity] {
            for x in QuatUnit::ALL {
                let v = basic_vector(t, x);
                assert!(is_positive(v));
                assert_eq!(euler(v, v), 1);
                assert_eq!(slope_of(v).unwrap(), t.base_slope());
                seen.insert(v);
            }
        }
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn coset_pairings() {
        for x in QuatUnit::ALL {
            for h in QuatUnit::ALL {
                let want = h.is_positive() as i64;
                let hx = h * x;
                assert_eq!(
                    euler(basic_vector(SlopeType::Zero, x), basic_vector(SlopeType::One, hx)),
                    want
                );
                assert_eq!(
                    euler(basic_vector(SlopeType::One, x), basic_vector(SlopeType::Infinity, hx)),
                    want
                );
                assert_eq!(
                    euler(basic_vector(SlopeType::Zero, -hx), basic_vector(SlopeType::Infinity, x)),
                    want
                );
            }
            assert_eq!(euler(basic_vector(SlopeType::Zero, x), H_INF), 1);
            assert_eq!(euler(basic_vector(SlopeType::One, x), H_INF), 1);
            assert_eq!(euler(H0, basic_vector(SlopeType::One, x)), 1);
            assert_eq!(euler(H0, basic_vector(SlopeType::Infinity, x)), 1);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_schur(1).len(), 16);
        assert_eq!(enumerate_schur(2).len(), 32);
        let all = enumerate_schur(7);
        for chunk in all.chunks(8) {
            assert!(chunk.iter().all(|r| r.slope == chunk[0].slope));
        }
    }

    #[test]
    fn compatibility_examples() {
        for x in QuatUnit::ALL {
            assert!(!compatible(
                RootIndex::new(Slope::ZERO, x),
                RootIndex::new(Slope::ZERO, -x)
            ));
            for y in QuatUnit::ALL {
                let a = RootIndex::new(Slope::INFINITY, x);
                let b = RootIndex::new(Slope::ZERO, y);
                assert_eq!(compatible(a, b), in_coset(y, CosetSign::Minus, x));
            }
        }
        assert!(compatible(r("0:1"), r("2:1")));
        assert!(!compatible(r("0:1"), r("4:1")));
    }

    #[test]
    fn generic_examples() {
        let v = |s: &str| r(s).vector();
        assert!(compatible_generic(v("0:1"), v("0:j")).unwrap());
        assert_eq!(generic_case(v("0:1"), v("0:j")).unwrap(), Some(GenericCase::C));
        assert!(!compatible_generic(v("0:1"), v("0:-1")).unwrap());
        // 1 ∈ -H⁺y holds for y ∈ {-1, i, j, k}; H⁺ is not a subgroup.
        for y in QuatUnit::ALL {
            let f = RootIndex::new(Slope::INFINITY, y).vector();
            let want = in_coset(QuatUnit::ONE, CosetSign::Minus, y).then_some(GenericCase::A);
            assert_eq!(generic_case(v("0:1"), f).unwrap(), want, "{y}");
        }
        let a: Vec<String> = QuatUnit::ALL
            .into_iter()
            .filter(|&y| in_coset(QuatUnit::ONE, CosetSign::Minus, y))
            .map(|y| y.to_string())
            .collect();
        assert_eq!(a, ["-1", "i", "j", "k"]);
        assert!(compatible_generic(H0, v("0:1")).is_err());
    }

    #[test]
    fn parse_root_index() {
        let x = r("7/4:-k");
        assert_eq!(x, RootIndex::new("7/4".parse().unwrap(), q("-k")));
        assert_eq!(x.to_string(), "7/4:-k");
        assert_eq!(r("inf:i").to_string(), "∞:i");
        assert!("7/4".parse::<RootIndex>().is_err());
    }

    #[test]
    fn tables_match_both_pairings() {
        let roots = enumerate_schur(6);
        for a in &roots {
            for b in &roots {
                if a.slope != b.slope {
                    assert_eq!(
                        euler(a.vector(), b.vector()) == 0,
                        pairing_vanishes_table(a.slope, a.unit, b.slope, b.unit),
                        "{a} {b}"
                    );
                }
            }
        }
    }
}
