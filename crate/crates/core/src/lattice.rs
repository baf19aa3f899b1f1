//! The rank-6 Grothendieck lattice: Euler form, Coxeter map, rank, degree,
//! slope, positivity, τ-orbits and quasi-length.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::slopes::{normalize, Slope};

pub const DIM: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ClassVector(pub [i64; DIM]);

impl ClassVector {
    pub const ZERO: ClassVector = ClassVector([0; DIM]);

    pub fn coords(&self) -> [i64; DIM] {
        self.0
    }
}

impl Add for ClassVector {
    type Output = ClassVector;
    fn add(self, o: ClassVector) -> ClassVector {
        ClassVector(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for ClassVector {
    type Output = ClassVector;
    fn sub(self, o: ClassVector) -> ClassVector {
        ClassVector(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for ClassVector {
    type Output = ClassVector;
    fn neg(self) -> ClassVector {
        ClassVector(self.0.map(|x| -x))
    }
}

impl Mul<ClassVector> for i64 {
    type Output = ClassVector;
    fn mul(self, v: ClassVector) -> ClassVector {
        ClassVector(v.0.map(|x| self * x))
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ClassVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = t.split(',').map(str::trim).collect();
        if parts.len() != DIM {
            return Err(Error::Parse(format!(
                "expected {DIM} comma-separated integers, got {s:?}"
            )));
        }
        let mut v = [0i64; DIM];
        for (slot, p) in v.iter_mut().zip(parts) {
            *slot = p.parse().map_err(|_| Error::Parse(format!("bad coordinate {p:?}")))?;
        }
        Ok(ClassVector(v))
    }
}

pub type Matrix6 = [[i64; DIM]; DIM];

pub const EULER_MATRIX: Matrix6 = [
    [1, 0, -1, -1, 1, 1],
    [0, 1, -1, -1, 1, 1],
    [0, 0, 1, 0, -1, -1],
    [0, 0, 0, 1, -1, -1],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
];

pub const H0: ClassVector = ClassVector([0, 0, 1, 1, 1, 1]);
pub const H1: ClassVector = ClassVector([1, 1, 2, 2, 1, 1]);
pub const H_INF: ClassVector = ClassVector([1, 1, 1, 1, 0, 0]);

pub fn euler(x: ClassVector, y: ClassVector) -> i64 {
    let mut s = 0;
    for i in 0..DIM {
        if x.0[i] == 0 {
            continue;
        }
        for j in 0..DIM {
            s += x.0[i] * EULER_MATRIX[i][j] * y.0[j];
        }
    }
    s
}

/// Exact inverse of an integer matrix, failing unless it is unimodular.
pub fn integer_inverse(m: &Matrix6) -> Result<Matrix6> {
    type Q = Ratio<i64>;
    let mut a: Vec<Vec<Q>> = (0..DIM)
        .map(|i| {
            (0..2 * DIM)
                .map(|j| {
                    if j < DIM {
                        Q::from_integer(m[i][j])
                    } else if j - DIM == i {
                        Q::one()
                    } else {
                        Q::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..DIM {
        let piv = (col..DIM)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Inconsistent("singular matrix".into()))?;
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..DIM {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * DIM {
                    let d = a[col][c] * f;
                    a[r][c] -= d;
                }
            }
        }
    }
    let mut out = [[0i64; DIM]; DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            let q = a[i][DIM + j];
            if !q.is_integer() {
                return Err(Error::Inconsistent("inverse is not integral".into()));
            }
            out[i][j] = q.to_integer();
        }
    }
    Ok(out)
}

fn mat_mul(a: &Matrix6, b: &Matrix6) -> Matrix6 {
    let mut c = [[0i64; DIM]; DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            c[i][j] = (0..DIM).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

/// `Φ = -E⁻¹ Eᵀ`, the matrix with `⟨x, y⟩ = -⟨y, Φx⟩`.
pub fn coxeter_matrix() -> &'static Matrix6 {
    static PHI: OnceLock<Matrix6> = OnceLock::new();
    PHI.get_or_init(|| {
        let inv = integer_inverse(&EULER_MATRIX).expect("Euler matrix is unimodular");
        let mut et = [[0i64; DIM]; DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                et[i][j] = EULER_MATRIX[j][i];
            }
        }
        mat_mul(&inv, &et).map(|row| row.map(|x| -x))
    })
}

pub fn coxeter(v: ClassVector) -> ClassVector {
    let phi = coxeter_matrix();
    ClassVector(std::array::from_fn(|i| (0..DIM).map(|j| phi[i][j] * v.0[j]).sum()))
}

pub fn rank(v: ClassVector) -> i64 {
    euler(v, H_INF)
}

pub fn degree(v: ClassVector) -> i64 {
    euler(H0, v)
}

pub fn is_positive(v: ClassVector) -> bool {
    let r = rank(v);
    r > 0 || (r == 0 && degree(v) > 0)
}

pub fn slope_of(v: ClassVector) -> Result<Slope> {
    if !is_positive(v) {
        return Err(Error::Domain(format!("slope of non-positive vector {v}")));
    }
    normalize(degree(v), rank(v))
}

/// `h_q = b(q) h_0 + a(q) h_∞`.
pub fn h_vector(q: Slope) -> ClassVector {
    q.den() * H0 + q.num() * H_INF
}

/// Orbit of `v` under the Coxeter map, starting at `v`.
pub fn tau_orbit(v: ClassVector) -> Vec<ClassVector> {
    let mut orbit = vec![v];
    let mut cur = coxeter(v);
    while cur != v {
        orbit.push(cur);
        assert!(
            orbit.len() <= DIM * 2,
            "Coxeter orbit too long; Φ is not of finite order"
        );
        cur = coxeter(cur);
    }
    orbit
}

/// The `m` with `Σ τ^Z v = m · h_q`.
pub fn quasi_length(v: ClassVector) -> Result<u64> {
    let q = slope_of(v)?;
    let sum = tau_orbit(v).into_iter().fold(ClassVector::ZERO, |a, b| a + b);
    let h = h_vector(q);
    let (i, &hi) =
        h.0.iter()
            .enumerate()
            .find(|(_, x)| **x != 0)
            .expect("h_q is never zero");
    let (m, r) = sum.0[i].div_rem(&hi);
    if r != 0 || m <= 0 || m * h != sum {
        return Err(Error::Inconsistent(format!(
            "orbit sum {sum} of {v} is not a positive multiple of h_{q} = {h}"
        )));
    }
    Ok(m as u64)
}
