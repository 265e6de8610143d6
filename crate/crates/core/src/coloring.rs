//! Graph coloring over the edge relation.
//!
//! The edge relation keeps one unordered pair per adjacent vertex pair. Two
//! randomized heuristics color it:
//!
//! * [`bogpc`] grows one color class at a time from a seed set by repeated
//!   layered partition: vertices in the third region are at distance two from
//!   the class and are admitted when they have no neighbor in it. When no
//!   third region is left, a vertex from an unreached component is admitted.
//!   Each class therefore ends up maximal independent in the uncolored graph,
//!   so no vertex can wait for more than `max_degree + 1` classes.
//! * [`boerc`] walks a random root order. Each edge belongs to the subgraph of
//!   its earlier endpoint ([`build_opers`]); coloring a root records its color
//!   as forbidden on its leaves. A root picks uniformly among the palette
//!   colors it is not forbidden, and the palette (initially `{1, 2}`) grows
//!   only when every color is forbidden.
//!
//! The exact side enumerates layouts of independent classes of size at least
//! two plus a clique remainder. The number of parts of any layout is a lower
//! bound attained by an optimal coloring; [`chromatic_oracle`] is an
//! independent brute force for cross-checks.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::ops::ControlFlow;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{MultiTraversalRelation, VertexId};
use crate::partition::layer;

/// Default vertex limit for layout enumeration.
pub const MCIVS_LIMIT: usize = 20;
/// Vertex limit for [`chromatic_oracle`].
pub const ORACLE_LIMIT: usize = 12;

/// Symmetric, anti-reflexive relation on unordered pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRelation {
    vertices: BTreeSet<VertexId>,
    /// Stored as `(min, max)`.
    edges: BTreeSet<(VertexId, VertexId)>,
}

fn key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl EdgeRelation {
    /// Builds from unordered pairs over an explicit vertex set. Self pairs and
    /// unknown endpoints are rejected.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::param("edge relation is anti-reflexive"));
            }
            for w in [u, v] {
                if !vertices.contains(&w) {
                    return Err(Error::UnknownVertex(w));
                }
            }
            set.insert(key(u, v));
        }
        Ok(EdgeRelation { vertices, edges: set })
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        u != v && self.edges.contains(&key(u, v))
    }

    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg: BTreeMap<VertexId, usize> = BTreeMap::new();
        for &(a, b) in &self.edges {
            *deg.entry(a).or_default() += 1;
            *deg.entry(b).or_default() += 1;
        }
        deg.values().copied().max().unwrap_or(0)
    }

    fn dense(&self) -> Dense {
        let ids: Vec<VertexId> = self.vertices.iter().copied().collect();
        let at = |v: VertexId| ids.binary_search(&v).expect("vertex");
        let mut adj: Vec<Vec<usize>> = (0..ids.len()).map(|_| Vec::new()).collect();
        for &(a, b) in &self.edges {
            let (i, j) = (at(a), at(b));
            adj[i].push(j);
            adj[j].push(i);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Dense { ids, adj }
    }
}

struct Dense {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

impl Dense {
    fn masks(&self) -> Vec<u64> {
        self.adj.iter().map(|row| row.iter().fold(0u64, |m, &j| m | 1 << j)).collect()
    }
}

/// `{u, v}` is an edge iff `(u, v)` or `(v, u)` is an arc; loops are dropped.
pub fn to_edge_relation(g: &MultiTraversalRelation) -> EdgeRelation {
    let edges = g.arcs().filter(|(a, _)| !a.is_loop()).map(|(a, _)| key(a.tail, a.head)).collect();
    EdgeRelation { vertices: g.vertex_set().clone(), edges }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSubgraph {
    pub root: VertexId,
    pub leaves: BTreeSet<VertexId>,
}

/// Ordered edge-subgraph partition: every edge belongs to the subgraph of
/// whichever endpoint comes first in `roots_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Opers {
    pub roots_order: Vec<VertexId>,
    /// Non-empty subgraphs, in root order.
    pub subgraphs: Vec<EdgeSubgraph>,
    /// Roots that own no edge.
    pub empty_set: BTreeSet<VertexId>,
}

impl Opers {
    pub fn subgraph_of(&self, root: VertexId) -> Option<&EdgeSubgraph> {
        self.subgraphs.iter().find(|s| s.root == root)
    }
}

pub fn build_opers(e: &EdgeRelation, order: &[VertexId]) -> Result<Opers> {
    let position: BTreeMap<VertexId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if position.len() != order.len() || order.len() != e.vertex_count() || !order.iter().all(|v| e.vertices.contains(v)) {
        return Err(Error::NotAPermutation);
    }
    let mut leaves: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    for &(a, b) in &e.edges {
        let (root, leaf) = if position[&a] < position[&b] { (a, b) } else { (b, a) };
        leaves.entry(root).or_default().insert(leaf);
    }
    let mut subgraphs = Vec::new();
    let mut empty_set = BTreeSet::new();
    for &root in order {
        match leaves.remove(&root) {
            Some(l) => subgraphs.push(EdgeSubgraph { root, leaves: l }),
            None => {
                empty_set.insert(root);
            }
        }
    }
    Ok(Opers { roots_order: order.to_vec(), subgraphs, empty_set })
}

/// A vertex-to-color map with its induced classes. Colors are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: BTreeMap<VertexId, u32>,
    pub classes: BTreeMap<u32, BTreeSet<VertexId>>,
    /// Number of non-empty classes.
    pub k: usize,
}

impl Coloring {
    pub fn from_assignment(assignment: BTreeMap<VertexId, u32>) -> Self {
        let mut classes: BTreeMap<u32, BTreeSet<VertexId>> = BTreeMap::new();
        for (&v, &c) in &assignment {
            classes.entry(c).or_default().insert(v);
        }
        let k = classes.len();
        Coloring { assignment, classes, k }
    }

    pub fn color_of(&self, v: VertexId) -> Option<u32> {
        self.assignment.get(&v).copied()
    }
}

/// `true` iff no edge joins two vertices of the same color.
pub fn verify_coloring(g: &MultiTraversalRelation, c: &Coloring) -> Result<bool> {
    verify_edge_coloring(&to_edge_relation(g), c)
}

pub fn verify_edge_coloring(e: &EdgeRelation, c: &Coloring) -> Result<bool> {
    if let Some(v) = e.vertices().find(|v| !c.assignment.contains_key(v)) {
        return Err(Error::PartialColoring(v));
    }
    if let Some(v) = c.assignment.keys().find(|v| !e.vertices.contains(v)) {
        return Err(Error::UnknownVertex(*v));
    }
    Ok(e.edges().all(|(u, v)| c.assignment[&u] != c.assignment[&v]))
}

/// Partition-driven class growth. Deterministic for a given seed.
pub fn bogpc(g: &MultiTraversalRelation, seed: u64) -> Coloring {
    bogpc_edges(&to_edge_relation(g), seed)
}

pub fn bogpc_edges(e: &EdgeRelation, seed: u64) -> Coloring {
    let d = e.dense();
    let n = d.ids.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut uncolored = alloc::vec![true; n];
    let mut remaining = n;
    let mut assignment = BTreeMap::new();
    let mut color = 0u32;

    while remaining > 0 {
        color += 1;
        let isolated: Vec<usize> =
            (0..n).filter(|&i| uncolored[i] && d.adj[i].iter().all(|&j| !uncolored[j])).collect();
        let start = match isolated.choose(&mut rng) {
            Some(&v) => v,
            None => {
                let open: Vec<usize> = (0..n).filter(|&i| uncolored[i]).collect();
                *open.choose(&mut rng).expect("remaining > 0")
            }
        };
        let mut class = alloc::vec![start];
        let mut in_class = alloc::vec![false; n];
        in_class[start] = true;

        loop {
            let layers = layer(&d.adj, &uncolored, &class);
            let before = class.len();
            if let Some(third) = layers.regions.get(2) {
                let mut candidates = third.clone();
                candidates.shuffle(&mut rng);
                for c in candidates {
                    if d.adj[c].iter().all(|&j| !in_class[j]) {
                        in_class[c] = true;
                        class.push(c);
                    }
                }
            } else if let Some(&s) = layers.stranded.choose(&mut rng) {
                in_class[s] = true;
                class.push(s);
            }
            if class.len() == before {
                break;
            }
        }

        for &i in &class {
            uncolored[i] = false;
            assignment.insert(d.ids[i], color);
        }
        remaining -= class.len();
    }
    Coloring::from_assignment(assignment)
}

/// Ordered root coloring over a uniformly random root order.
pub fn boerc(g: &MultiTraversalRelation, seed: u64) -> Coloring {
    let e = to_edge_relation(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<VertexId> = e.vertices().collect();
    order.shuffle(&mut rng);
    boerc_ordered(&e, &order, &mut rng).expect("order is a permutation")
}

/// Ordered root coloring along a caller-supplied root order.
pub fn boerc_with_order(g: &MultiTraversalRelation, order: &[VertexId], seed: u64) -> Result<Coloring> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    boerc_ordered(&to_edge_relation(g), order, &mut rng)
}

fn boerc_ordered(e: &EdgeRelation, order: &[VertexId], rng: &mut ChaCha8Rng) -> Result<Coloring> {
    let opers = build_opers(e, order)?;
    let mut forbidden: BTreeMap<VertexId, BTreeSet<u32>> = BTreeMap::new();
    let mut palette = 2u32;
    let mut assignment = BTreeMap::new();
    for &x in order {
        let omega = forbidden.remove(&x).unwrap_or_default();
        let k = if omega.is_empty() {
            rng.random_range(1..=palette)
        } else {
            let open: Vec<u32> = (1..=palette).filter(|c| !omega.contains(c)).collect();
            match open.choose(rng) {
                Some(&c) => c,
                None => {
                    palette += 1;
                    palette
                }
            }
        };
        assignment.insert(x, k);
        if let Some(sub) = opers.subgraph_of(x) {
            for &leaf in &sub.leaves {
                forbidden.entry(leaf).or_default().insert(k);
            }
        }
    }
    Ok(Coloring::from_assignment(assignment))
}

/// `true` iff `s` has at least two vertices and no edge inside.
pub fn is_civs(e: &EdgeRelation, s: &BTreeSet<VertexId>) -> bool {
    s.len() >= 2 && s.iter().all(|&u| s.iter().all(|&v| !e.contains(u, v)))
}

/// Independent classes of size at least two plus a remainder that induces a
/// clique.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalPartition {
    /// Sorted internally and by smallest member.
    pub classes: Vec<Vec<VertexId>>,
    pub remainder: Vec<VertexId>,
}

impl IntervalPartition {
    /// `|classes| + |remainder|`: colors needed to color along this layout.
    pub fn bound(&self) -> usize {
        self.classes.len() + self.remainder.len()
    }

    /// No two classes can be merged into one independent class.
    pub fn is_merge_free(&self, e: &EdgeRelation) -> bool {
        self.classes.iter().enumerate().all(|(i, a)| {
            self.classes[i + 1..]
                .iter()
                .all(|b| a.iter().any(|&u| b.iter().any(|&v| e.contains(u, v))))
        })
    }

    /// The coloring that gives each class and each remainder vertex its own
    /// color.
    pub fn to_coloring(&self) -> Coloring {
        let mut assignment = BTreeMap::new();
        let mut c = 0u32;
        for class in &self.classes {
            c += 1;
            for &v in class {
                assignment.insert(v, c);
            }
        }
        for &v in &self.remainder {
            c += 1;
            assignment.insert(v, c);
        }
        Coloring::from_assignment(assignment)
    }
}

fn check_size(n: usize, limit: usize) -> Result<()> {
    if n > limit || n > 64 {
        return Err(Error::TooLarge { n, limit: limit.min(64) });
    }
    Ok(())
}

struct LayoutSearch<'a> {
    masks: &'a [u64],
    n: usize,
    classes: Vec<u64>,
    remainder: u64,
}

impl LayoutSearch<'_> {
    /// Assigns vertices in ascending order; each layout is reached once, in
    /// canonical form. `prune(classes, remainder)` cuts a branch when true.
    fn walk<F, P>(&mut self, i: usize, prune: &mut P, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u64], u64) -> ControlFlow<()>,
        P: FnMut(&[u64], u64) -> bool,
    {
        if prune(&self.classes, self.remainder) {
            return ControlFlow::Continue(());
        }
        let singles = self.classes.iter().filter(|c| c.count_ones() == 1).count();
        if singles > self.n - i {
            return ControlFlow::Continue(());
        }
        if i == self.n {
            return visit(&self.classes, self.remainder);
        }
        let bit = 1u64 << i;
        let nbrs = self.masks[i];
        for c in 0..self.classes.len() {
            if self.classes[c] & nbrs == 0 {
                self.classes[c] |= bit;
                self.walk(i + 1, prune, visit)?;
                self.classes[c] &= !bit;
            }
        }
        self.classes.push(bit);
        self.walk(i + 1, prune, visit)?;
        self.classes.pop();
        if self.remainder & !nbrs == 0 {
            self.remainder |= bit;
            self.walk(i + 1, prune, visit)?;
            self.remainder &= !bit;
        }
        ControlFlow::Continue(())
    }
}

fn to_layout(ids: &[VertexId], classes: &[u64], remainder: u64) -> IntervalPartition {
    let members = |m: u64| (0..ids.len()).filter(|&i| m >> i & 1 == 1).map(|i| ids[i]).collect::<Vec<_>>();
    IntervalPartition { classes: classes.iter().map(|&m| members(m)).collect(), remainder: members(remainder) }
}

/// Streams every layout of `g` until `visit` breaks.
pub fn for_each_mcivs<F>(g: &MultiTraversalRelation, limit: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&IntervalPartition) -> ControlFlow<()>,
{
    let e = to_edge_relation(g);
    check_size(e.vertex_count(), limit)?;
    let d = e.dense();
    let masks = d.masks();
    let mut search = LayoutSearch { masks: &masks, n: d.ids.len(), classes: Vec::new(), remainder: 0 };
    let _ = search.walk(0, &mut |_, _| false, &mut |c, r| visit(&to_layout(&d.ids, c, r)));
    Ok(())
}

/// Every layout of independent classes (size >= 2) plus a clique remainder.
pub fn enumerate_mcivs(g: &MultiTraversalRelation, limit: usize) -> Result<Vec<IntervalPartition>> {
    let mut out = Vec::new();
    for_each_mcivs(g, limit, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The layout minimizing `(bound, |remainder|)` lexicographically, by
/// branch and bound over the same canonical walk.
pub fn best_mcivs(g: &MultiTraversalRelation, limit: usize) -> Result<IntervalPartition> {
    let e = to_edge_relation(g);
    check_size(e.vertex_count(), limit)?;
    let d = e.dense();
    let masks = d.masks();
    let score = |c: &[u64], r: u64| (c.len() + r.count_ones() as usize, r.count_ones() as usize);
    let mut best: Option<((usize, usize), Vec<u64>, u64)> = None;
    let best_cell = core::cell::RefCell::new(&mut best);
    let mut search = LayoutSearch { masks: &masks, n: d.ids.len(), classes: Vec::new(), remainder: 0 };
    let _ = search.walk(
        0,
        &mut |c, r| best_cell.borrow().as_ref().is_some_and(|(s, _, _)| score(c, r) >= *s),
        &mut |c, r| {
            **best_cell.borrow_mut() = Some((score(c, r), c.to_vec(), r));
            ControlFlow::Continue(())
        },
    );
    let (_, c, r) = best.ok_or_else(|| Error::Invariant("no layout found".into()))?;
    Ok(to_layout(&d.ids, &c, r))
}

/// Exact chromatic number by backtracking, for at most [`ORACLE_LIMIT`]
/// vertices.
pub fn chromatic_oracle(g: &MultiTraversalRelation) -> Result<usize> {
    let e = to_edge_relation(g);
    let n = e.vertex_count();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge { n, limit: ORACLE_LIMIT });
    }
    let d = e.dense();
    fn fits(adj: &[Vec<usize>], colors: &mut [usize], i: usize, k: usize) -> bool {
        if i == colors.len() {
            return true;
        }
        // symmetry: vertex i may open at most one new color
        let used = colors[..i].iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..k.min(used + 1) {
            if adj[i].iter().all(|&j| j >= i || colors[j] != c) {
                colors[i] = c;
                if fits(adj, colors, i + 1, k) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = alloc::vec![0usize; n];
    (1..=n)
        .find(|&k| fits(&d.adj, &mut colors, 0, k))
        .ok_or_else(|| Error::Invariant("no coloring found".into()))
}

/// Outcome of checking the remainder-size conjecture on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemainderCheck {
    /// Every vertex has the same degree `m` with `2 <= m < n - 1` and `n >= 3`.
    pub applies: bool,
    /// Smallest remainder among layouts with the least bound.
    pub remainder: usize,
    pub bound: usize,
    /// `remainder <= 1`; only meaningful when `applies`.
    pub holds: bool,
}

/// Empirical checker for "regular graphs of degree `2 <= m < n-1` admit an
/// optimal layout with at most one remainder vertex". Nothing is asserted.
pub fn check_remainder_conjecture(g: &MultiTraversalRelation, limit: usize) -> Result<RemainderCheck> {
    let e = to_edge_relation(g);
    let n = e.vertex_count();
    let degrees: BTreeSet<usize> = e.vertices().map(|v| e.neighbors(v).len()).collect();
    let applies = n >= 3
        && degrees.len() == 1
        && degrees.first().is_some_and(|&m| m >= 2 && m < n - 1);
    let best = best_mcivs(g, limit)?;
    Ok(RemainderCheck {
        applies,
        remainder: best.remainder.len(),
        bound: best.bound(),
        holds: best.remainder.len() <= 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use alloc::vec;

    fn v(i: u32) -> VertexId {
        VertexId::of(i)
    }

    fn set(xs: &[u32]) -> BTreeSet<VertexId> {
        xs.iter().map(|&i| v(i)).collect()
    }

    fn coloring(pairs: &[(u32, u32)]) -> Coloring {
        Coloring::from_assignment(pairs.iter().map(|&(x, c)| (v(x), c)).collect())
    }

    #[test]
    fn edge_relation_collapses_and_drops_loops() {
        let g = MultiTraversalRelation::from_weighted_arcs([(1, 2, 3)]).unwrap();
        assert_eq!(to_edge_relation(&g).edges().collect::<Vec<_>>(), vec![(v(1), v(2))]);
        let g = MultiTraversalRelation::from_arcs([(1, 1), (1, 2)]).unwrap();
        assert_eq!(to_edge_relation(&g).edge_count(), 1);
        assert_eq!(to_edge_relation(&generators::complete(3).unwrap()).edge_count(), 3);
        assert!(EdgeRelation::new(set(&[1]), [(v(1), v(1))]).is_err());
    }

    #[test]
    fn opers_examples() {
        let tri = to_edge_relation(&generators::complete(3).unwrap());
        let o = build_opers(&tri, &[v(1), v(2), v(3)]).unwrap();
        assert_eq!(o.subgraph_of(v(1)).unwrap().leaves, set(&[2, 3]));
        assert_eq!(o.subgraph_of(v(2)).unwrap().leaves, set(&[3]));
        assert_eq!(o.empty_set, set(&[3]));

        let p = to_edge_relation(&MultiTraversalRelation::from_edges([(1, 2), (2, 3)]).unwrap());
        let o = build_opers(&p, &[v(2), v(1), v(3)]).unwrap();
        assert_eq!(o.subgraphs, vec![EdgeSubgraph { root: v(2), leaves: set(&[1, 3]) }]);
        assert_eq!(o.empty_set, set(&[1, 3]));

        assert_eq!(build_opers(&p, &[v(1), v(2)]), Err(Error::NotAPermutation));
        assert_eq!(build_opers(&p, &[v(1), v(1), v(2)]), Err(Error::NotAPermutation));
    }

    #[test]
    fn verify_examples() {
        let k3 = generators::complete(3).unwrap();
        assert!(verify_coloring(&k3, &coloring(&[(1, 1), (2, 2), (3, 3)])).unwrap());
        assert!(!verify_coloring(&k3, &coloring(&[(1, 1), (2, 1), (3, 2)])).unwrap());
        assert_eq!(verify_coloring(&k3, &coloring(&[(1, 1), (2, 2)])), Err(Error::PartialColoring(v(3))));
        let e = EdgeRelation::new(set(&[1, 2]), []).unwrap();
        assert!(verify_edge_coloring(&e, &coloring(&[(1, 1), (2, 1)])).unwrap());
    }

    #[test]
    fn civs_examples() {
        let c4 = to_edge_relation(&generators::cycle(4).unwrap());
        assert!(is_civs(&c4, &set(&[1, 3])));
        assert!(!is_civs(&c4, &set(&[1])));
        assert!(!is_civs(&c4, &set(&[1, 2])));
    }

    #[test]
    fn bogpc_small_cases() {
        for seed in 0..50 {
            assert_eq!(bogpc(&generators::cycle(6).unwrap(), seed).k, 2);
            assert_eq!(bogpc(&generators::complete(4).unwrap(), seed).k, 4);
        }
    }

    #[test]
    fn boerc_odd_cycle_needs_three() {
        for seed in 0..50 {
            let c = boerc(&generators::cycle(5).unwrap(), seed);
            assert_eq!(c.k, 3);
        }
    }

    #[test]
    fn boerc_star_center_first() {
        let star = MultiTraversalRelation::from_edges((2..=6).map(|i| (1, i))).unwrap();
        let mut order: Vec<_> = (1..=6).map(v).collect();
        for seed in 0..30 {
            assert_eq!(boerc_with_order(&star, &order, seed).unwrap().k, 2);
        }
        // center last: leaves draw freely from {1, 2}
        order.rotate_left(1);
        let ks: BTreeSet<usize> = (0..60).map(|s| boerc_with_order(&star, &order, s).unwrap().k).collect();
        assert!(ks.iter().all(|&k| k == 2 || k == 3));
        assert!(ks.contains(&3));
    }

    #[test]
    fn layouts_of_small_cycles() {
        let c4 = generators::cycle(4).unwrap();
        let all = enumerate_mcivs(&c4, MCIVS_LIMIT).unwrap();
        let target = IntervalPartition { classes: vec![vec![v(1), v(3)], vec![v(2), v(4)]], remainder: vec![] };
        assert!(all.contains(&target));
        assert_eq!(all.iter().map(IntervalPartition::bound).min(), Some(2));

        let c5 = best_mcivs(&generators::cycle(5).unwrap(), MCIVS_LIMIT).unwrap();
        assert_eq!((c5.classes.len(), c5.remainder.len()), (2, 1));

        let k4 = enumerate_mcivs(&generators::complete(4).unwrap(), MCIVS_LIMIT).unwrap();
        assert_eq!(k4.len(), 1);
        assert!(k4[0].classes.is_empty());
        assert_eq!(k4[0].bound(), 4);
    }

    #[test]
    fn layouts_are_distinct_and_valid() {
        let g = generators::grid(2, 3).unwrap();
        let e = to_edge_relation(&g);
        let all = enumerate_mcivs(&g, MCIVS_LIMIT).unwrap();
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
        for p in &all {
            for class in &p.classes {
                assert!(is_civs(&e, &class.iter().copied().collect()));
            }
            for (i, &a) in p.remainder.iter().enumerate() {
                assert!(p.remainder[i + 1..].iter().all(|&b| e.contains(a, b)));
            }
            assert!(verify_coloring(&g, &p.to_coloring()).unwrap());
        }
    }

    #[test]
    fn size_limits() {
        let d = generators::dodecahedron();
        assert_eq!(chromatic_oracle(&d), Err(Error::TooLarge { n: 20, limit: 12 }));
        assert!(matches!(enumerate_mcivs(&d, 10), Err(Error::TooLarge { .. })));
        assert_eq!(best_mcivs(&d, MCIVS_LIMIT).unwrap().bound(), 3);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(chromatic_oracle(&generators::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_oracle(&generators::cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_oracle(&generators::complete(4).unwrap()).unwrap(), 4);
    }

    #[test]
    fn conjecture_checker_on_cycles() {
        let c5 = check_remainder_conjecture(&generators::cycle(5).unwrap(), MCIVS_LIMIT).unwrap();
        assert!(c5.applies && c5.holds);
        assert_eq!((c5.bound, c5.remainder), (3, 1));
        // sizes 3, 2, 2 cover the 7-cycle with no remainder
        let c7 = check_remainder_conjecture(&generators::cycle(7).unwrap(), MCIVS_LIMIT).unwrap();
        assert_eq!((c7.bound, c7.remainder), (3, 0));
        let k4 = check_remainder_conjecture(&generators::complete(4).unwrap(), MCIVS_LIMIT).unwrap();
        assert!(!k4.applies);
    }
}
