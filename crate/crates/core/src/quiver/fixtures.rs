//! Embedded quivers: the elliptic diagrams, the quiver of the sphere
//! triangulation and the `Q̂` quivers with their mutation sequences.

use super::{iso_quivers, mutate_seq, ExchangeMatrix, Order};
use crate::error::{Error, Result};

pub const FIXTURE_NAMES: [&str; 9] = [
    "delta_d4",
    "delta_e6",
    "delta_e7",
    "delta_e8",
    "bt_sphere",
    "bt_sphere_display",
    "qhat_e6",
    "qhat_e7",
    "qhat_e8",
];

fn arrows(name: &str) -> Option<(usize, Vec<(usize, usize)>)> {
    let a = match name {
        // a..f = 1..6; the double arrow is b => e.
        "delta_d4" => (
            6,
            vec![
                (2, 5),
                (2, 5),
                (5, 1),
                (5, 3),
                (5, 4),
                (5, 6),
                (1, 2),
                (3, 2),
                (4, 2),
                (6, 2),
            ],
        ),
        // p, q, T1..T3, B1..B3
        "delta_e6" => (
            8,
            vec![
                (1, 2),
                (2, 3),
                (3, 6),
                (3, 6),
                (6, 2),
                (6, 4),
                (4, 3),
                (7, 3),
                (6, 7),
                (7, 8),
                (5, 4),
            ],
        ),
        // p, T1..T4, B1..B4
        "delta_e7" => (
            9,
            vec![
                (3, 2),
                (4, 3),
                (5, 4),
                (6, 7),
                (7, 8),
                (8, 9),
                (2, 6),
                (2, 6),
                (6, 1),
                (6, 3),
                (1, 2),
                (7, 2),
            ],
        ),
        // p, T1..T6, B1..B3
        "delta_e8" => (
            10,
            vec![
                (3, 2),
                (4, 3),
                (5, 4),
                (6, 5),
                (7, 6),
                (8, 9),
                (9, 10),
                (2, 8),
                (2, 8),
                (8, 1),
                (8, 3),
                (1, 2),
                (9, 2),
            ],
        ),
        // The quiver of the algebra plus one arrow per relation: the Euler
        // matrix has +1 from each source in {1,2} to each sink in {5,6}.
        "bt_sphere" => (
            6,
            vec![
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 5),
                (3, 6),
                (4, 5),
                (4, 6),
                (5, 1),
                (5, 2),
                (6, 1),
                (6, 2),
            ],
        ),
        "bt_sphere_display" => (6, vec![(1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (3, 6), (4, 5), (4, 6)]),
        "qhat_e6" => (
            8,
            vec![
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 5),
                (3, 5),
                (4, 5),
                (5, 6),
                (5, 7),
                (5, 8),
                (5, 1),
                (6, 2),
                (7, 3),
                (8, 4),
            ],
        ),
        "qhat_e7" => (
            9,
            vec![
                (1, 2),
                (2, 4),
                (3, 5),
                (5, 7),
                (6, 8),
                (8, 9),
                (1, 3),
                (3, 6),
                (2, 5),
                (5, 8),
                (4, 7),
                (7, 9),
                (5, 1),
                (7, 2),
                (8, 3),
                (9, 5),
            ],
        ),
        "qhat_e8" => (
            10,
            vec![
                (1, 4),
                (5, 8),
                (2, 5),
                (4, 7),
                (6, 9),
                (3, 5),
                (4, 6),
                (2, 4),
                (5, 7),
                (7, 9),
                (8, 10),
                (7, 10),
                (6, 1),
                (7, 2),
                (8, 3),
                (9, 4),
                (10, 5),
            ],
        ),
        _ => return None,
    };
    Some(a)
}

pub fn fixture(name: &str) -> Result<ExchangeMatrix> {
    let (n, a) = arrows(name).ok_or_else(|| Error::Domain(format!("unknown fixture {name:?}")))?;
    ExchangeMatrix::from_arrows(n, &a)
}

/// The written sequence `μ_{k1} ... μ_{km}` taking `qhat_<name>` to `delta_<name>`.
pub fn sequence(name: &str) -> Result<&'static [usize]> {
    match name {
        "e6" => Ok(&[2, 3, 4]),
        "e7" => Ok(&[5, 2, 8, 1, 9, 5, 7, 3]),
        "e8" => Ok(&[2, 5, 4, 10, 9, 8, 3, 5, 7, 5, 9, 8, 3, 6, 1]),
        _ => Err(Error::Domain(format!(
            "unknown sequence {name:?}; expected e6, e7 or e8"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport {
    pub name: String,
    pub right_to_left: bool,
    pub left_to_right: bool,
}

impl SequenceReport {
    pub fn passed(&self) -> bool {
        self.right_to_left || self.left_to_right
    }

    /// The order that succeeded, preferring right-to-left.
    pub fn order(&self) -> Option<Order> {
        if self.right_to_left {
            Some(Order::RightToLeft)
        } else if self.left_to_right {
            Some(Order::LeftToRight)
        } else {
            None
        }
    }
}

pub fn verify_sequence(name: &str) -> Result<SequenceReport> {
    let ks = sequence(name)?;
    let start = fixture(&format!("qhat_{name}"))?;
    let target = fixture(&format!("delta_{name}"))?;
    let check = |order| -> Result<bool> { Ok(iso_quivers(&mutate_seq(&start, ks, order)?, &target).is_some()) };
    Ok(SequenceReport {
        name: name.to_string(),
        right_to_left: check(Order::RightToLeft)?,
        left_to_right: check(Order::LeftToRight)?,
    })
}
