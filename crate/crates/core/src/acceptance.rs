//! The acceptance suite: ten checks over bounded exhaustive ranges, each
//! reported as one pass/fail line. Shared by the `acceptance` test target
//! and `tubular selftest`.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::arcs::{arcs_compatible, arcs_compatible_by_tags, crossings, from_root, intersection_number, render, Sign};
use crate::exchange::{explore_from, flip_with, initial_cluster, maximality_probe, ComplementSearch, RANK};
use crate::lattice::{euler, slope_of, ClassVector, EULER_MATRIX, H0, H_INF};
use crate::quat::QuatUnit;
use crate::quiver::{fixture, mutation_class, verify_sequence, Verdict};
use crate::roots::{
    basic_vector, compatible, compatible_generic, compatible_table, enumerate_schur, is_real_schur, recognize,
    root_vector, RootIndex,
};
use crate::slopes::{arc_type, complexity, dist, reduce, slopes_up_to_height, unfold, Slope, SlopeType, UnfoldStep};

/// Members of the `delta_d4` mutation class up to isomorphism.
pub const D4_CLASS_SIZE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {:>2} {}: {}", self.id, self.title, self.detail)
    }
}

/// Collects failures; the first few are kept for the report.
struct Check {
    failures: usize,
    first: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check {
            failures: 0,
            first: Vec::new(),
        }
    }

    fn that(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.first.len() < 3 {
                self.first.push(what());
            }
        }
    }

    fn absorb(&mut self, failures: Vec<String>) {
        self.failures += failures.len();
        self.first
            .extend(failures.into_iter().take(3usize.saturating_sub(self.first.len())));
    }

    fn finish(self, id: u8, title: &'static str, summary: String) -> Outcome {
        let detail = if self.failures == 0 {
            summary
        } else {
            format!(
                "{summary}; {} failure(s), e.g. {}",
                self.failures,
                self.first.join("; ")
            )
        };
        Outcome {
            id,
            title,
            passed: self.failures == 0,
            detail,
        }
    }
}

pub fn euler_anchors() -> Outcome {
    let mut c = Check::new();
    let printed: [[i64; 6]; 6] = [
        [1, 0, -1, -1, 1, 1],
        [0, 1, -1, -1, 1, 1],
        [0, 0, 1, 0, -1, -1],
        [0, 0, 0, 1, -1, -1],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ];
    c.that(EULER_MATRIX == printed, || {
        "Euler matrix differs from the printed one".into()
    });
    let (a, b) = (euler(H0, H_INF), euler(H_INF, H0));
    c.that(a == 2, || format!("<h0,h_inf> = {a}"));
    c.that(b == -2, || format!("<h_inf,h0> = {b}"));
    c.finish(1, "Euler-form anchors", format!("<h0,h_inf> = {a}, <h_inf,h0> = {b}"))
}

pub fn coset_pairings() -> Outcome {
    let mut c = Check::new();
    let mut n1 = 0;
    let pairs = [
        (SlopeType::Zero, SlopeType::One),
        (SlopeType::One, SlopeType::Infinity),
        (SlopeType::Zero, SlopeType::Infinity),
    ];
    for (k, (s, t)) in pairs.into_iter().enumerate() {
        for x in QuatUnit::ALL {
            for h in QuatUnit::ALL {
                let want = h.is_positive() as i64;
                let got = if k == 2 {
                    euler(basic_vector(s, -(h * x)), basic_vector(t, x))
                } else {
                    euler(basic_vector(s, x), basic_vector(t, h * x))
                };
                n1 += 1;
                c.that(got == want, || format!("pair {k}, x = {x}, h = {h}: {got}"));
            }
        }
    }
    let mut n2 = 0;
    for x in QuatUnit::ALL {
        for (got, what) in [
            (euler(basic_vector(SlopeType::Zero, x), H_INF), "<v0,h_inf>"),
            (euler(basic_vector(SlopeType::One, x), H_INF), "<v1,h_inf>"),
            (euler(H0, basic_vector(SlopeType::One, x)), "<h0,v1>"),
            (euler(H0, basic_vector(SlopeType::Infinity, x)), "<h0,v_inf>"),
        ] {
            n2 += 1;
            c.that(got == 1, || format!("{what} at {x} = {got}"));
        }
    }
    c.finish(
        2,
        "coset pairing identities",
        format!("{n1} coset identities, {n2} pairings with h"),
    )
}

pub fn parametrization() -> Outcome {
    let mut c = Check::new();
    let slopes = slopes_up_to_height(20);
    for &q in &slopes {
        let h = crate::lattice::h_vector(q);
        let mut seen = HashSet::new();
        for x in QuatUnit::ALL {
            let v = root_vector(q, x);
            c.that(slope_of(v).ok() == Some(q), || format!("slope of v({q},{x})"));
            c.that(v + root_vector(q, -x) == h, || format!("v + v(-x) at {q}:{x}"));
            c.that(recognize(v) == Some(RootIndex::new(q, x)), || {
                format!("recognize {q}:{x}")
            });
            c.that(is_real_schur(v), || format!("{q}:{x} not real Schur"));
            seen.insert(v);
        }
        c.that(seen.len() == 8, || format!("{} distinct roots at {q}", seen.len()));
    }
    c.finish(3, "parametrization", format!("{} slopes x 8 units", slopes.len()))
}

pub fn schur_oracle() -> Outcome {
    let mut c = Check::new();
    let failures: Vec<String> = (0..9i64.pow(6))
        .into_par_iter()
        .filter_map(|mut n| {
            let mut v = [0i64; 6];
            for x in v.iter_mut() {
                *x = n % 9 - 4;
                n /= 9;
            }
            let v = ClassVector(v);
            let by_form = is_real_schur(v);
            let by_index = match recognize(v) {
                Some(r) => r.vector() == v,
                None => false,
            };
            (by_form != by_index).then(|| format!("{v}: criterion {by_form}, recognize {by_index}"))
        })
        .collect();
    let hits = (0..9i64.pow(6))
        .into_par_iter()
        .filter(|&n0| {
            let mut n = n0;
            let mut v = [0i64; 6];
            for x in v.iter_mut() {
                *x = n % 9 - 4;
                n /= 9;
            }
            recognize(ClassVector(v)).is_some()
        })
        .count();
    c.absorb(failures);
    c.finish(
        4,
        "Schur-criterion oracle",
        format!("9^6 vectors in [-4,4]^6, {hits} real Schur roots"),
    )
}

fn root_pairs(h: u64) -> Vec<(RootIndex, RootIndex)> {
    let roots = enumerate_schur(h);
    let mut out = Vec::with_capacity(roots.len() * roots.len() / 2);
    for (i, &a) in roots.iter().enumerate() {
        for &b in &roots[i + 1..] {
            out.push((a, b));
        }
    }
    out
}

pub fn compatibility_agreement() -> Outcome {
    let mut c = Check::new();
    let pairs = root_pairs(10);
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(a, b)| {
            let direct = compatible(a, b);
            let table = compatible_table(a, b);
            let generic = compatible_generic(a.vector(), b.vector());
            if generic.as_ref().ok() != Some(&direct) || table != direct {
                return Some(format!("{a} {b}: euler {direct}, table {table}, generic {generic:?}"));
            }
            let (e, f) = (a.vector(), b.vector());
            if euler(e, f) == 0 && euler(f, e) == 0 && !(a.slope == b.slope && a.unit != b.unit && a.unit != -b.unit) {
                return Some(format!("{a} {b}: both pairings vanish"));
            }
            None
        })
        .collect();
    c.absorb(failures);
    c.finish(
        5,
        "compatibility triple agreement",
        format!("{} root pairs of height <= 10", pairs.len()),
    )
}

pub fn bijection() -> Outcome {
    let mut c = Check::new();
    let pairs = root_pairs(10);
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(a, b)| {
            let (x, y) = (from_root(a), from_root(b));
            let want = compatible(a, b);
            let got = arcs_compatible(x, y);
            let tags = arcs_compatible_by_tags(x, y);
            (got != want || tags != want).then(|| format!("{a} {b}: roots {want}, arcs {got}, tags {tags}"))
        })
        .collect();
    c.absorb(failures);
    c.finish(
        6,
        "root/arc bijection",
        format!("{} index pairs of height <= 10", pairs.len()),
    )
}

pub fn geometry_oracle() -> Outcome {
    let mut c = Check::new();
    let signs = [Sign::Plus, Sign::Minus];
    let bases = [Slope::MINUS_ONE, Slope::ZERO, Slope::INFINITY];
    let small: Vec<Slope> = slopes_up_to_height(13)
        .into_iter()
        .filter(|&p| complexity(p) <= 13)
        .collect();
    let failures: Vec<String> = small
        .par_iter()
        .flat_map_iter(|&p| {
            let mut out = Vec::new();
            for e in signs {
                let d = render(p, e);
                for t in bases {
                    for f in signs {
                        if (p, e) == (t, f) {
                            continue;
                        }
                        let want = intersection_number(p, e, t, f);
                        match crossings(&d, &render(t, f)) {
                            Ok(got) if got == want => {}
                            Ok(got) => out.push(format!("{p}{e} x {t}{f}: drawn {got}, formula {want}")),
                            Err(err) => out.push(format!("{p}{e} x {t}{f}: {err}")),
                        }
                    }
                }
            }
            out
        })
        .collect();
    c.absorb(failures);
    let large: Vec<Slope> = slopes_up_to_height(25)
        .into_iter()
        .filter(|&p| complexity(p) <= 25)
        .collect();
    let failures: Vec<String> = large
        .par_iter()
        .flat_map_iter(|&p| {
            signs
                .into_iter()
                .filter_map(move |e| render(p, e).check().err().map(|err| format!("{p}{e}: {err}")))
        })
        .collect();
    c.absorb(failures);
    c.finish(
        7,
        "geometry oracle",
        format!(
            "{} slopes against base arcs, {} drawings checked",
            small.len(),
            2 * large.len()
        ),
    )
}

pub fn unfolding() -> Outcome {
    let mut c = Check::new();
    let slopes = slopes_up_to_height(40);
    let steps = [UnfoldStep::L, UnfoldStep::D, UnfoldStep::U];
    for &p in &slopes {
        for f in steps {
            let u = unfold(p, f);
            c.that(unfold(u, f) == p, || format!("{f} not an involution at {p}"));
            c.that(arc_type(u) == arc_type(p), || format!("{f} changes the type of {p}"));
        }
        if let Some(f) = UnfoldStep::dictated(p) {
            let u = unfold(p, f);
            c.that(complexity(u) < complexity(p), || {
                format!("{f} does not lower complexity at {p}")
            });
        }
    }
    // reduce asserts the decrease itself, so only call it once that holds.
    if c.failures == 0 {
        for &p in &slopes {
            let r = reduce(p);
            c.that(r.base == arc_type(p).base_slope(), || {
                format!("{p} reduces to {}", r.base)
            });
            c.that(r.replay() == p, || format!("replay of {p}"));
        }
    }
    let failures: Vec<String> = slopes
        .par_iter()
        .flat_map_iter(|&p| {
            let slopes = &slopes;
            slopes.iter().flat_map(move |&q| {
                steps.into_iter().filter_map(move |f| {
                    (dist(unfold(p, f), unfold(q, f)) != dist(p, q)).then(|| format!("{f} moves dist({p},{q})"))
                })
            })
        })
        .collect();
    c.absorb(failures);
    c.finish(8, "unfolding maps", format!("{} slopes of height <= 40", slopes.len()))
}

pub fn quiver_sequences() -> Outcome {
    let mut c = Check::new();
    let mut parts = Vec::new();
    for name in ["e6", "e7", "e8"] {
        match verify_sequence(name) {
            Ok(r) => {
                match r.order() {
                    Some(o) => parts.push(format!("{name} ok ({o})")),
                    None => parts.push(format!("{name} no match")),
                }
                c.that(r.passed(), || {
                    format!("{name}: mutated Q-hat is not isomorphic to the diagram in either order")
                });
            }
            Err(e) => c.that(false, || format!("{name}: {e}")),
        }
    }
    match (fixture("delta_d4"), fixture("bt_sphere")) {
        (Ok(d4), Ok(bt)) => {
            let class = mutation_class(&d4, 100_000);
            let n = class.members.len();
            c.that(class.verdict == Verdict::Finite, || "d4 class did not close".into());
            c.that(class.contains(&bt), || "bt_sphere not in the d4 class".into());
            c.that(class.max_abs_entry() <= 2, || {
                format!("entry {} in the d4 class", class.max_abs_entry())
            });
            c.that(n == D4_CLASS_SIZE, || {
                format!("d4 class has {n} members, recorded {D4_CLASS_SIZE}")
            });
            parts.push(format!("d4 class {n}"));
        }
        (Err(e), _) | (_, Err(e)) => c.that(false, || e.to_string()),
    }
    c.finish(9, "quiver sequences and d4 class", parts.join(", "))
}

pub fn exchange_graph() -> Outcome {
    let mut c = Check::new();
    let search = match ComplementSearch::new(64) {
        Ok(s) => s,
        Err(e) => {
            c.that(false, || e.to_string());
            return c.finish(10, "exchange graph", String::new());
        }
    };
    let g = match explore_from(&initial_cluster(), 3, &search) {
        Ok(g) => g,
        Err(e) => {
            c.that(false, || e.to_string());
            return c.finish(10, "exchange graph", "depth 3 at height 64".into());
        }
    };
    let failures: Vec<String> = g
        .nodes
        .par_iter()
        .flat_map_iter(|n| {
            let mut out = Vec::new();
            if n.expanded && g.degree(n.id) != RANK {
                out.push(format!("node {} has degree {}", n.id, g.degree(n.id)));
            }
            if n.seed.matrix.max_abs_entry() > 2 || !n.seed.matrix.is_skew_symmetric() {
                out.push(format!("node {} matrix out of class", n.id));
            }
            if let Some(r) = maximality_probe(&n.seed.cluster(), &search) {
                out.push(format!("node {} extends by {r}", n.id));
            }
            for i in 1..=RANK {
                match flip_with(&search, &n.seed, i).and_then(|t| flip_with(&search, &t, i)) {
                    Ok(back) if back == n.seed => {}
                    Ok(_) => out.push(format!("flip {i} at node {} is not an involution", n.id)),
                    Err(e) => out.push(format!("flip {i} at node {}: {e}", n.id)),
                }
            }
            out
        })
        .collect();
    c.absorb(failures);
    c.finish(
        10,
        "exchange graph",
        format!(
            "depth 3 at height 64: {} nodes, {} edges, {} consistent revisits",
            g.nodes.len(),
            g.edges.len(),
            g.revisits
        ),
    )
}

pub fn run_all() -> Vec<Outcome> {
    vec![
        euler_anchors(),
        coset_pairings(),
        parametrization(),
        schur_oracle(),
        compatibility_agreement(),
        bijection(),
        geometry_oracle(),
        unfolding(),
        quiver_sequences(),
        exchange_graph(),
    ]
}
