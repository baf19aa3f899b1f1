//! The quaternion group `H = {±1, ±i, ±j, ±k}`.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    One,
    I,
    J,
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuatUnit {
    pub negative: bool,
    pub axis: Axis,
}

/// Whether a coset is taken over `H⁺` or `-H⁺`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CosetSign {
    Plus,
    Minus,
}

impl QuatUnit {
    pub const ONE: QuatUnit = QuatUnit::pos(Axis::One);
    pub const I: QuatUnit = QuatUnit::pos(Axis::I);
    pub const J: QuatUnit = QuatUnit::pos(Axis::J);
    pub const K: QuatUnit = QuatUnit::pos(Axis::K);

    /// The fixed enumeration order `1, -1, i, -i, j, -j, k, -k`.
    pub const ALL: [QuatUnit; 8] = [
        QuatUnit::pos(Axis::One),
        QuatUnit::neg(Axis::One),
        QuatUnit::pos(Axis::I),
        QuatUnit::neg(Axis::I),
        QuatUnit::pos(Axis::J),
        QuatUnit::neg(Axis::J),
        QuatUnit::pos(Axis::K),
        QuatUnit::neg(Axis::K),
    ];

    /// `H⁺ = {1, i, j, k}`.
    pub const POSITIVE: [QuatUnit; 4] = [QuatUnit::ONE, QuatUnit::I, QuatUnit::J, QuatUnit::K];

    pub const fn pos(axis: Axis) -> QuatUnit {
        QuatUnit { negative: false, axis }
    }

    pub const fn neg(axis: Axis) -> QuatUnit {
        QuatUnit { negative: true, axis }
    }

    pub fn is_positive(self) -> bool {
        !self.negative
    }

    /// Position in [`QuatUnit::ALL`].
    pub fn index(self) -> usize {
        let a = match self.axis {
            Axis::One => 0,
            Axis::I => 1,
            Axis::J => 2,
            Axis::K => 3,
        };
        2 * a + self.negative as usize
    }

    pub fn abs(self) -> QuatUnit {
        QuatUnit::pos(self.axis)
    }
}

impl PartialOrd for QuatUnit {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuatUnit {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

impl Neg for QuatUnit {
    type Output = QuatUnit;
    fn neg(self) -> QuatUnit {
        QuatUnit {
            negative: !self.negative,
            axis: self.axis,
        }
    }
}

impl Mul for QuatUnit {
    type Output = QuatUnit;
    fn mul(self, o: QuatUnit) -> QuatUnit {
        use Axis::*;
        let (sign, axis) = match (self.axis, o.axis) {
            (One, a) | (a, One) => (false, a),
            (I, I) | (J, J) | (K, K) => (true, One),
            (I, J) => (false, K),
            (J, I) => (true, K),
            (J, K) => (false, I),
            (K, J) => (true, I),
            (K, I) => (false, J),
            (I, K) => (true, J),
        };
        QuatUnit {
            negative: sign ^ self.negative ^ o.negative,
            axis,
        }
    }
}

pub fn quat_mul(x: QuatUnit, y: QuatUnit) -> QuatUnit {
    x * y
}

/// `y ∈ ±H⁺·x`.
pub fn in_coset(y: QuatUnit, sign: CosetSign, x: QuatUnit) -> bool {
    QuatUnit::POSITIVE.iter().any(|&h| {
        let h = match sign {
            CosetSign::Plus => h,
            CosetSign::Minus => -h,
        };
        h * x == y
    })
}

impl fmt::Display for QuatUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str(match self.axis {
            Axis::One => "1",
            Axis::I => "i",
            Axis::J => "j",
            Axis::K => "k",
        })
    }
}

impl FromStr for QuatUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (negative, rest) = match t.strip_prefix('-').or_else(|| t.strip_prefix('−')) {
            Some(r) => (true, r),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let axis = match rest {
            "1" => Axis::One,
            "i" => Axis::I,
            "j" => Axis::J,
            "k" => Axis::K,
            _ => return Err(Error::Parse(format!("not a quaternion unit: {s:?}"))),
        };
        Ok(QuatUnit { negative, axis })
    }
}

impl Serialize for QuatUnit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QuatUnit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
