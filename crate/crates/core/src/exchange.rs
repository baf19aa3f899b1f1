//! Clusters of six compatible roots, flips, and bounded breadth-first
//! exploration of the exchange graph with the matrices carried along.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quat::QuatUnit;
use crate::quiver::{fixture, mutate, ExchangeMatrix};
use crate::roots::{compatible, RootIndex};
use crate::slopes::{dist, slopes_up_to_height, Slope};

pub const RANK: usize = 6;
pub const DEFAULT_SEARCH_HEIGHT: u64 = 64;
pub const GRAPH_SCHEMA: &str = "tubular.exchange-graph/v1";

/// Position of each `bt_sphere` vertex in the initial seed (0-based).
pub const INITIAL_ALIGNMENT: [usize; RANK] = [0, 1, 2, 3, 4, 5];

/// A cluster as an unordered set, stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cluster([RootIndex; RANK]);

impl Cluster {
    pub fn new(mut roots: [RootIndex; RANK]) -> Result<Cluster> {
        roots.sort();
        if roots.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Inconsistent("repeated root in cluster".into()));
        }
        for i in 0..RANK {
            for j in i + 1..RANK {
                if !compatible(roots[i], roots[j]) {
                    return Err(Error::Inconsistent(format!(
                        "{} and {} are not compatible",
                        roots[i], roots[j]
                    )));
                }
            }
        }
        Ok(Cluster(roots))
    }

    pub fn roots(&self) -> &[RootIndex; RANK] {
        &self.0
    }

    pub fn contains(&self, r: RootIndex) -> bool {
        self.0.binary_search(&r).is_ok()
    }
}

impl fmt::Display for Cluster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Roots by position together with the exchange matrix on those positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed {
    pub roots: [RootIndex; RANK],
    pub matrix: ExchangeMatrix,
}

impl Seed {
    pub fn new(roots: [RootIndex; RANK], matrix: ExchangeMatrix) -> Result<Seed> {
        Cluster::new(roots)?;
        if matrix.size() != RANK {
            return Err(Error::SizeMismatch(matrix.size(), RANK));
        }
        if !matrix.is_skew_symmetric() {
            return Err(Error::Inconsistent("seed matrix is not skew-symmetric".into()));
        }
        Ok(Seed { roots, matrix })
    }

    pub fn cluster(&self) -> Cluster {
        let mut r = self.roots;
        r.sort();
        Cluster(r)
    }

    /// 1-based position of `r`.
    pub fn position(&self, r: RootIndex) -> Option<usize> {
        self.roots.iter().position(|&x| x == r).map(|i| i + 1)
    }

    /// Permutation taking positions of `self` to positions of `other` with the same root.
    fn alignment(&self, other: &Seed) -> Option<Vec<usize>> {
        self.roots
            .iter()
            .map(|r| other.roots.iter().position(|x| x == r))
            .collect()
    }

    /// Same cluster and the same matrix once positions are matched by root.
    pub fn equivalent(&self, other: &Seed) -> bool {
        match self.alignment(other) {
            Some(perm) => self.matrix.permuted(&perm) == other.matrix,
            None => false,
        }
    }
}

/// The 32 roots on slopes `-1, 0, 1, ∞`, in index order.
pub fn base_roots() -> Vec<RootIndex> {
    [Slope::MINUS_ONE, Slope::ZERO, Slope::ONE, Slope::INFINITY]
        .into_iter()
        .flat_map(|q| QuatUnit::ALL.into_iter().map(move |x| RootIndex::new(q, x)))
        .collect()
}

/// Lexicographically first pairwise-compatible 6-subset of [`base_roots`].
pub fn initial_roots() -> [RootIndex; RANK] {
    fn go(pool: &[RootIndex], from: usize, cur: &mut Vec<RootIndex>) -> bool {
        if cur.len() == RANK {
            return true;
        }
        for i in from..pool.len() {
            if cur.iter().all(|&r| compatible(r, pool[i])) {
                cur.push(pool[i]);
                if go(pool, i + 1, cur) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    let pool = base_roots();
    let mut cur = Vec::new();
    assert!(go(&pool, 0, &mut cur), "no compatible 6-subset among the base roots");
    cur.try_into().expect("six roots")
}

/// `bt_sphere` with vertex `i` placed at position `align[i]`.
pub fn seed_with_alignment(align: &[usize]) -> Result<Seed> {
    let b = fixture("bt_sphere")?.permuted(align);
    Seed::new(initial_roots(), b)
}

pub fn initial_cluster() -> Seed {
    seed_with_alignment(&INITIAL_ALIGNMENT).expect("initial seed")
}

/// Complement search over all roots with `|a| + b <= height`.
///
/// Only slopes within distance 2 of every other slope in the cluster are
/// tried; compatible roots of different slopes always satisfy this.
pub struct ComplementSearch {
    height: u64,
    slopes: Vec<Slope>,
    memo: Mutex<HashMap<[RootIndex; RANK - 1], Vec<RootIndex>>>,
}

impl ComplementSearch {
    pub fn new(height: u64) -> Result<ComplementSearch> {
        if height == 0 {
            return Err(Error::Domain("search height must be positive".into()));
        }
        Ok(ComplementSearch {
            height,
            slopes: slopes_up_to_height(height),
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn height(&self) -> u64 {
        self.height
    }

    /// Every root outside `rest` compatible with all of `rest`.
    pub fn compatible_with(&self, rest: &[RootIndex]) -> Vec<RootIndex> {
        let mut out = Vec::new();
        for &q in &self.slopes {
            if !rest.iter().all(|r| r.slope == q || dist(r.slope, q) <= 2) {
                continue;
            }
            for x in QuatUnit::ALL {
                let c = RootIndex::new(q, x);
                if !rest.contains(&c) && rest.iter().all(|&r| compatible(r, c)) {
                    out.push(c);
                }
            }
        }
        out
    }

    /// Complements of an almost complete cluster.
    pub fn complements(&self, rest: [RootIndex; RANK - 1]) -> Vec<RootIndex> {
        let mut key = rest;
        key.sort();
        if let Some(v) = self.memo.lock().expect("memo").get(&key) {
            return v.clone();
        }
        let v = self.compatible_with(&key);
        self.memo.lock().expect("memo").insert(key, v.clone());
        v
    }
}

/// Flip with a shared search; `i` is 1-based.
pub fn flip_with(search: &ComplementSearch, s: &Seed, i: usize) -> Result<Seed> {
    if i == 0 || i > RANK {
        return Err(Error::IndexOutOfRange { index: i, n: RANK });
    }
    let old = s.roots[i - 1];
    let mut rest = [old; RANK - 1];
    let mut k = 0;
    for (j, &r) in s.roots.iter().enumerate() {
        if j != i - 1 {
            rest[k] = r;
            k += 1;
        }
    }
    let comps = search.complements(rest);
    if !comps.contains(&old) {
        return Err(Error::InvariantViolation(format!(
            "{old} is not a complement of its own cluster"
        )));
    }
    let others: Vec<RootIndex> = comps.into_iter().filter(|&c| c != old).collect();
    let new = match others.as_slice() {
        [] => {
            return Err(Error::SearchExhausted(format!(
                "no second complement for position {i} of {} within height {}",
                s.cluster(),
                search.height
            )))
        }
        [c] => *c,
        many => {
            let names: Vec<String> = many.iter().map(|r| r.to_string()).collect();
            return Err(Error::InvariantViolation(format!(
                "{} complements besides {old} at position {i}: {}",
                many.len(),
                names.join(", ")
            )));
        }
    };
    if compatible(old, new) {
        return Err(Error::InvariantViolation(format!(
            "exchanged roots {old} and {new} are compatible"
        )));
    }
    let mut roots = s.roots;
    roots[i - 1] = new;
    Ok(Seed {
        roots,
        matrix: mutate(&s.matrix, i)?,
    })
}

pub fn flip(s: &Seed, i: usize, search_height: u64) -> Result<Seed> {
    flip_with(&ComplementSearch::new(search_height)?, s, i)
}

/// A root outside the cluster compatible with all six, if one exists within the bound.
pub fn maximality_probe(c: &Cluster, search: &ComplementSearch) -> Option<RootIndex> {
    search.compatible_with(c.roots()).into_iter().next()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: usize,
    pub depth: usize,
    pub expanded: bool,
    pub seed: Seed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    /// Root of `source` given up by the flip.
    pub removed: RootIndex,
    /// Root of `target` that replaces it.
    pub added: RootIndex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFragment {
    pub schema: String,
    pub depth: usize,
    pub search_height: u64,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    /// Number of times a flip landed on an already known cluster.
    pub revisits: usize,
}

impl GraphFragment {
    pub fn degree(&self, id: usize) -> usize {
        self.edges.iter().filter(|e| e.source == id || e.target == id).count()
    }

    pub fn node_of(&self, c: &Cluster) -> Option<usize> {
        self.nodes.iter().position(|n| n.seed.cluster() == *c)
    }
}

pub fn explore(depth: usize, search_height: u64) -> Result<GraphFragment> {
    explore_from(&initial_cluster(), depth, &ComplementSearch::new(search_height)?)
}

/// Breadth-first exploration to `depth` flips. A cluster reached again must
/// carry the same matrix up to the reordering of its positions.
pub fn explore_from(start: &Seed, depth: usize, search: &ComplementSearch) -> Result<GraphFragment> {
    let mut nodes = vec![Node {
        id: 0,
        depth: 0,
        expanded: false,
        seed: start.clone(),
    }];
    let mut index: HashMap<Cluster, usize> = HashMap::from([(start.cluster(), 0)]);
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut labels: Vec<Edge> = Vec::new();
    let mut revisits = 0;
    let mut frontier = vec![0usize];
    for level in 0..depth {
        let flips: Vec<Vec<Seed>> = frontier
            .par_iter()
            .map(|&u| {
                (1..=RANK)
                    .map(|i| flip_with(search, &nodes[u].seed, i))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut next = Vec::new();
        for (&u, seeds) in frontier.iter().zip(flips) {
            nodes[u].expanded = true;
            for (i, s) in seeds.into_iter().enumerate() {
                let c = s.cluster();
                let (removed, added) = (nodes[u].seed.roots[i], s.roots[i]);
                let v = match index.get(&c) {
                    Some(&v) => {
                        revisits += 1;
                        if !s.equivalent(&nodes[v].seed) {
                            return Err(Error::InvariantViolation(format!(
                                "cluster {c} reached with matrix\n{}\nbut stored with\n{}",
                                s.matrix, nodes[v].seed.matrix
                            )));
                        }
                        v
                    }
                    None => {
                        let v = nodes.len();
                        nodes.push(Node {
                            id: v,
                            depth: level + 1,
                            expanded: false,
                            seed: s,
                        });
                        index.insert(c, v);
                        next.push(v);
                        v
                    }
                };
                let key = (u.min(v), u.max(v));
                if edges.insert(key) {
                    labels.push(Edge {
                        source: u,
                        target: v,
                        removed,
                        added,
                    });
                }
            }
        }
        frontier = next;
    }
    Ok(GraphFragment {
        schema: GRAPH_SCHEMA.into(),
        depth,
        search_height: search.height,
        nodes,
        edges: labels,
        revisits,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

impl FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            _ => Err(Error::Parse(format!(
                "unknown graph format {s:?}; expected dot or json"
            ))),
        }
    }
}

pub fn to_dot(g: &GraphFragment) -> String {
    let mut out = String::from("graph exchange {\n  node [shape=box, fontsize=10];\n");
    for n in &g.nodes {
        let roots: Vec<String> = n.seed.roots.iter().map(|r| r.to_string()).collect();
        out.push_str(&format!("  n{} [label=\"{}\"];\n", n.id, roots.join(",")));
    }
    for e in &g.edges {
        out.push_str(&format!(
            "  n{} -- n{} [label=\"{} / {}\"];\n",
            e.source, e.target, e.removed, e.added
        ));
    }
    out.push_str("}\n");
    out
}

pub fn to_json(g: &GraphFragment) -> String {
    serde_json::to_string_pretty(g).expect("fragment serializes")
}

pub fn from_json(s: &str) -> Result<GraphFragment> {
    let g: GraphFragment = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    if g.schema != GRAPH_SCHEMA {
        return Err(Error::Parse(format!("unsupported schema {:?}", g.schema)));
    }
    Ok(g)
}

pub fn export_graph(g: &GraphFragment, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => to_dot(g),
        GraphFormat::Json => to_json(g),
    }
}

pub fn write_graph(g: &GraphFragment, format: GraphFormat, path: &Path) -> Result<()> {
    std::fs::write(path, export_graph(g, format))?;
    Ok(())
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Lexicographically first alignment whose depth-`depth` exploration passes
/// the revisit checks.
pub fn find_alignment(depth: usize, search: &ComplementSearch) -> Result<Option<Vec<usize>>> {
    for perm in permutations(RANK) {
        match explore_from(&seed_with_alignment(&perm)?, depth, search) {
            Ok(_) => return Ok(Some(perm)),
            Err(Error::InvariantViolation(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn search() -> &'static ComplementSearch {
        static S: OnceLock<ComplementSearch> = OnceLock::new();
        S.get_or_init(|| ComplementSearch::new(DEFAULT_SEARCH_HEIGHT).unwrap())
    }

    #[test]
    fn initial_seed_shape() {
        let s = initial_cluster();
        let slopes: BTreeSet<Slope> = s.roots.iter().map(|r| r.slope).collect();
        assert!(slopes.len() <= 3, "{slopes:?}");
        assert!(s.matrix.is_skew_symmetric());
        // Every arrow of bt_sphere is simple.
        assert_eq!(s.matrix.max_abs_entry(), 1);
        println!("initial cluster {}", s.cluster());
    }

    #[test]
    fn pinned_alignment_is_first_consistent() {
        let found = find_alignment(3, search()).unwrap();
        assert_eq!(found.as_deref(), Some(&INITIAL_ALIGNMENT[..]));
    }

    /// Length of the alternating flip cycle at positions `i, j`, if short.
    fn cycle_length(s: &Seed, i: usize, j: usize) -> Option<usize> {
        let mut cur = s.clone();
        for step in 1..=8 {
            cur = flip_with(search(), &cur, if step % 2 == 1 { i } else { j }).unwrap();
            if cur.cluster() == s.cluster() {
                return Some(step);
            }
        }
        None
    }

    #[test]
    fn matrix_matches_flip_cycles() {
        // Squares where b_ij = 0, pentagons where |b_ij| = 1.
        let s = initial_cluster();
        for i in 1..=RANK {
            for j in i + 1..=RANK {
                let want = match s.matrix.get(i - 1, j - 1).abs() {
                    0 => Some(4),
                    1 => Some(5),
                    _ => None,
                };
                assert_eq!(cycle_length(&s, i, j), want, "positions {i}, {j}");
            }
        }
    }

    #[test]
    fn prefilter_drops_nothing() {
        let small = ComplementSearch::new(12).unwrap();
        let all = crate::roots::enumerate_schur(12);
        let g = explore_from(&initial_cluster(), 2, search()).unwrap();
        for n in &g.nodes {
            for skip in 0..RANK {
                let rest: Vec<RootIndex> = n
                    .seed
                    .roots
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip)
                    .map(|(_, &r)| r)
                    .collect();
                let brute: Vec<RootIndex> = all
                    .iter()
                    .copied()
                    .filter(|c| !rest.contains(c) && rest.iter().all(|&r| compatible(r, *c)))
                    .collect();
                assert_eq!(small.compatible_with(&rest), brute);
            }
        }
    }

    #[test]
    fn flips_of_initial_seed() {
        let s = initial_cluster();
        for i in 1..=RANK {
            let t = flip_with(search(), &s, i).unwrap();
            assert!(!compatible(s.roots[i - 1], t.roots[i - 1]));
            assert_eq!(flip_with(search(), &t, i).unwrap(), s);
        }
    }

    #[test]
    fn small_depths() {
        let g = explore_from(&initial_cluster(), 0, search()).unwrap();
        assert_eq!((g.nodes.len(), g.edges.len()), (1, 0));
        let g = explore_from(&initial_cluster(), 1, search()).unwrap();
        assert_eq!((g.nodes.len(), g.edges.len()), (7, 6));
    }

    #[test]
    fn depth_three_regular_and_maximal() {
        let g = explore_from(&initial_cluster(), 3, search()).unwrap();
        for n in &g.nodes {
            if n.expanded {
                assert_eq!(g.degree(n.id), RANK);
            }
            assert!(n.seed.matrix.max_abs_entry() <= 2);
            assert_eq!(maximality_probe(&n.seed.cluster(), search()), None);
        }
        println!(
            "depth 3: {} nodes, {} edges, {} revisits",
            g.nodes.len(),
            g.edges.len(),
            g.revisits
        );
    }

    #[test]
    fn exports() {
        let g = explore_from(&initial_cluster(), 2, search()).unwrap();
        assert_eq!(from_json(&to_json(&g)).unwrap(), g);
        let dot = to_dot(&g);
        assert!(dot.starts_with("graph exchange {"));
        assert_eq!(dot.matches(" -- ").count(), g.edges.len());
        let g0 = explore_from(&initial_cluster(), 0, search()).unwrap();
        assert_eq!(to_dot(&g0).matches("label=").count(), 1);
        assert!(from_json(&to_json(&g0).replace("v1", "v0")).is_err());
    }

    #[test]
    fn bad_position() {
        assert!(flip_with(search(), &initial_cluster(), 7).is_err());
        assert!(ComplementSearch::new(0).is_err());
    }
}
