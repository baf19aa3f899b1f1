//! Breadth-first enumeration of mutation classes up to isomorphism.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{canonical_form, mutate, CanonicalForm, ExchangeMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The search closed; the class is finite.
    Finite,
    /// More than `cap` classes were found before closing.
    Exceeded,
}

#[derive(Debug, Clone)]
pub struct MutationClass {
    /// Canonical representatives, sorted.
    pub members: Vec<CanonicalForm>,
    pub verdict: Verdict,
}

impl MutationClass {
    pub fn contains(&self, b: &ExchangeMatrix) -> bool {
        self.members.binary_search(&canonical_form(b)).is_ok()
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.members
            .iter()
            .flat_map(|c| c.entries.iter())
            .map(|x| x.abs())
            .max()
            .unwrap_or(0)
    }
}

pub fn mutation_class(b: &ExchangeMatrix, cap: usize) -> MutationClass {
    let n = b.size();
    let start = canonical_form(b);
    let mut seen: HashSet<CanonicalForm> = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    let mut verdict = Verdict::Finite;
    while !frontier.is_empty() {
        let found: Vec<CanonicalForm> = frontier
            .par_iter()
            .flat_map_iter(|c| {
                let m = c.matrix();
                (1..=n).map(move |k| canonical_form(&mutate(&m, k).expect("k in range")))
            })
            .collect();
        let mut next = Vec::new();
        for c in found {
            if seen.insert(c.clone()) {
                next.push(c);
            }
        }
        if seen.len() > cap {
            verdict = Verdict::Exceeded;
            break;
        }
        next.sort();
        frontier = next;
    }
    let mut members: Vec<CanonicalForm> = seen.into_iter().collect();
    members.sort();
    MutationClass { members, verdict }
}

pub fn is_mutation_finite(b: &ExchangeMatrix, cap: usize) -> Verdict {
    mutation_class(b, cap).verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::fixture;

    #[test]
    fn linear_a3_has_four_classes() {
        let b = ExchangeMatrix::from_arrows(3, &[(1, 2), (2, 3)]).unwrap();
        let c = mutation_class(&b, 100);
        assert_eq!(c.verdict, Verdict::Finite);
        assert_eq!(c.members.len(), 4);
    }

    #[test]
    fn d4_class_contains_sphere_quiver() {
        let c = mutation_class(&fixture("delta_d4").unwrap(), 10_000);
        assert_eq!(c.verdict, Verdict::Finite);
        assert!(c.contains(&fixture("bt_sphere").unwrap()));
        assert!(c.max_abs_entry() <= 2);
        assert!(!c.contains(&fixture("bt_sphere_display").unwrap()));
    }

    #[test]
    fn display_quiver_alone_is_mutation_infinite() {
        let b = fixture("bt_sphere_display").unwrap();
        assert_eq!(is_mutation_finite(&b, 3000), Verdict::Exceeded);
    }
}
