//! Skew-symmetric exchange matrices under Fomin–Zelevinsky mutation.
//!
//! Vertices are 1-based in every public operation taking a vertex, matching
//! the way mutation sequences are written (`μ_2 μ_3 μ_4`). Permutations
//! returned by [`iso_quivers`] are 0-based.

mod canonical;
mod class;
pub mod fixtures;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canonical::{canonical_form, iso_quivers, CanonicalForm};
pub use class::{is_mutation_finite, mutation_class, MutationClass, Verdict};
pub use fixtures::{fixture, verify_sequence, SequenceReport, FIXTURE_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    n: usize,
    entries: Vec<i64>,
}

/// Composition order for a written sequence `μ_{k1} ... μ_{km}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    /// `μ_{km}` is applied first, as for composed maps.
    RightToLeft,
    /// `μ_{k1}` is applied first.
    LeftToRight,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::RightToLeft => "rl",
            Order::LeftToRight => "lr",
        })
    }
}

impl FromStr for Order {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rl" => Ok(Order::RightToLeft),
            "lr" => Ok(Order::LeftToRight),
            _ => Err(Error::Parse(format!("order must be rl or lr, got {s:?}"))),
        }
    }
}

impl ExchangeMatrix {
    /// Row-major entries; must be skew-symmetric.
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::SizeMismatch(entries.len(), n * n));
        }
        let m = ExchangeMatrix { n, entries };
        for i in 0..n {
            for j in 0..n {
                if m.get(i, j) != -m.get(j, i) {
                    return Err(Error::Domain(format!("not skew-symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("matrix rows must have length n".into()));
        }
        Self::new(n, rows.concat())
    }

    /// Quiver with the given 1-based arrows; repeated arrows add up.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut entries = vec![0; n * n];
        for &(a, b) in arrows {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::IndexOutOfRange { index: v, n });
                }
            }
            if a == b {
                return Err(Error::Domain(format!("loop at vertex {a}")));
            }
            entries[(a - 1) * n + (b - 1)] += 1;
            entries[(b - 1) * n + (a - 1)] -= 1;
        }
        Ok(ExchangeMatrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 0-based entry `b_ij`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.entries.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    /// `P·B·Pᵀ` where vertex `i` moves to `perm[i]` (0-based).
    pub fn permuted(&self, perm: &[usize]) -> ExchangeMatrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[perm[i] * n + perm[j]] = self.get(i, j);
            }
        }
        ExchangeMatrix { n, entries }
    }

    /// 1-based arrows `(a, b, multiplicity)` with `b_ab > 0`.
    pub fn arrows(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) > 0 {
                    out.push((i + 1, j + 1, self.get(i, j)));
                }
            }
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph {name} {{\n");
        for v in 1..=self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (a, b, m) in self.arrows() {
            if m == 1 {
                s.push_str(&format!("  {a} -> {b};\n"));
            } else {
                s.push_str(&format!("  {a} -> {b} [label=\"{m}\"];\n"));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// The text format: `n=<size>` then `n` rows of integers.
impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for row in self.rows() {
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for ExchangeMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head = lines.next().ok_or_else(|| Error::Parse("empty quiver file".into()))?;
        let n: usize = head
            .strip_prefix("n=")
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected n=<int>, got {head:?}")))?;
        let mut rows = Vec::with_capacity(n);
        for line in lines {
            let row: std::result::Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
            rows.push(row.map_err(|_| Error::Parse(format!("bad matrix row {line:?}")))?);
        }
        if rows.len() != n {
            return Err(Error::Parse(format!("expected {n} rows, got {}", rows.len())));
        }
        Self::from_rows(&rows)
    }
}

/// `μ_k` for 1-based `k`.
pub fn mutate(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix> {
    let n = b.n;
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let k = k - 1;
    let mut entries = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            let bij = b.get(i, j);
            entries[i * n + j] = if i == k || j == k {
                -bij
            } else {
                let (bik, bkj) = (b.get(i, k), b.get(k, j));
                bij + bik.signum() * (bik * bkj).max(0)
            };
        }
    }
    Ok(ExchangeMatrix { n, entries })
}

pub fn mutate_seq(b: &ExchangeMatrix, ks: &[usize], order: Order) -> Result<ExchangeMatrix> {
    let mut cur = b.clone();
    let mut apply = |k: usize| -> Result<()> {
        cur = mutate(&cur, k)?;
        Ok(())
    };
    match order {
        Order::LeftToRight => ks.iter().try_for_each(|&k| apply(k))?,
        Order::RightToLeft => ks.iter().rev().try_for_each(|&k| apply(k))?,
    }
    Ok(cur)
}
