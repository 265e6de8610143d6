//! The multiple traversal relation and the two partitions derived from it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A 1-based vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(id: u32) -> Result<Self> {
        if id == 0 {
            Err(Error::ZeroVertex)
        } else {
            Ok(VertexId(id))
        }
    }

    /// Panics on zero; for literals and generators.
    pub const fn of(id: u32) -> Self {
        assert!(id != 0, "vertex ids are 1-based");
        VertexId(id)
    }

    pub const fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An ordered pair `(tail, head)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    pub const fn new(tail: VertexId, head: VertexId) -> Self {
        Arc { tail, head }
    }

    pub const fn of(tail: u32, head: u32) -> Self {
        Arc { tail: VertexId::of(tail), head: VertexId::of(head) }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn reversed(&self) -> Arc {
        Arc { tail: self.head, head: self.tail }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

/// A multiset of arcs. Multiplicities are always positive and the vertex set
/// is exactly the set of arc endpoints, so an instance never has isolated
/// vertices. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiTraversalRelation {
    arcs: BTreeMap<Arc, u32>,
    vertices: BTreeSet<VertexId>,
}

/// All arcs leaving one root vertex, with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedUnitSubgraph {
    pub root: VertexId,
    pub leaves: BTreeMap<VertexId, u32>,
}

/// All arcs entering one head vertex, with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipleVisitingSet {
    pub head: VertexId,
    pub sources: BTreeMap<VertexId, u32>,
}

impl MultipleVisitingSet {
    /// Largest multiplicity among the entering arcs (0 when there are none).
    pub fn max_weight(&self) -> u32 {
        self.sources.values().copied().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Directed,
    Simple,
    Multi,
    Mixed,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GraphClass::Directed => "directed",
            GraphClass::Simple => "simple",
            GraphClass::Multi => "multi",
            GraphClass::Mixed => "mixed",
        };
        f.write_str(s)
    }
}

/// Accumulates weighted arcs, summing duplicates.
#[derive(Debug, Clone, Default)]
pub struct RelationBuilder {
    arcs: BTreeMap<Arc, u32>,
    undirected: bool,
}

impl RelationBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Mirror every non-loop arc with the same weight before summing.
    pub fn undirected(mut self, yes: bool) -> Self {
        self.undirected = yes;
        self
    }

    pub fn add(&mut self, tail: u32, head: u32, weight: u32) -> Result<&mut Self> {
        let arc = Arc::new(VertexId::new(tail)?, VertexId::new(head)?);
        if weight == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        self.bump(arc, weight)?;
        if self.undirected && !arc.is_loop() {
            self.bump(arc.reversed(), weight)?;
        }
        Ok(self)
    }

    fn bump(&mut self, arc: Arc, weight: u32) -> Result<()> {
        let slot = self.arcs.entry(arc).or_insert(0);
        *slot = slot.checked_add(weight).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn build(self) -> Result<MultiTraversalRelation> {
        MultiTraversalRelation::from_map(self.arcs)
    }
}

impl MultiTraversalRelation {
    fn from_map(arcs: BTreeMap<Arc, u32>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::EmptyRelation);
        }
        if arcs.values().any(|&w| w == 0) {
            return Err(Error::ZeroMultiplicity);
        }
        let vertices = arcs.keys().flat_map(|a| [a.tail, a.head]).collect();
        Ok(MultiTraversalRelation { arcs, vertices })
    }

    /// Builds from `(tail, head, weight)` triples; duplicates are summed.
    pub fn from_weighted_arcs<I>(arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32, u32)>,
    {
        let mut b = RelationBuilder::new();
        for (t, h, w) in arcs {
            b.add(t, h, w)?;
        }
        b.build()
    }

    /// Builds from `(tail, head)` pairs, each with multiplicity one.
    pub fn from_arcs<I>(arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        Self::from_weighted_arcs(arcs.into_iter().map(|(t, h)| (t, h, 1)))
    }

    /// Builds a symmetric relation from undirected `{u, v}` pairs.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut b = RelationBuilder::new().undirected(true);
        for (u, v) in edges {
            b.add(u, v, 1)?;
        }
        b.build()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Arc, u32)> + '_ {
        self.arcs.iter().map(|(a, w)| (*a, *w))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Sum of all multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.arcs.values().map(|&w| u64::from(w)).sum()
    }

    pub fn multiplicity(&self, arc: Arc) -> u32 {
        self.arcs.get(&arc).copied().unwrap_or(0)
    }

    pub fn contains_arc(&self, arc: Arc) -> bool {
        self.arcs.contains_key(&arc)
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_self_loops(&self) -> bool {
        self.arcs.keys().any(Arc::is_loop)
    }

    /// Leaves of `v`'s unit subgraph, ascending, with multiplicities.
    pub fn out_arcs(&self, v: VertexId) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        let lo = Arc::new(v, VertexId(1));
        let hi = Arc::new(v, VertexId(u32::MAX));
        self.arcs.range(lo..=hi).map(|(a, w)| (a.head, *w))
    }

    /// Number of distinct heads reachable by one non-loop arc from `v`.
    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_arcs(v).filter(|(h, _)| *h != v).count()
    }

    /// Largest out-degree over all vertices, self-loops excluded.
    pub fn max_out_degree(&self) -> usize {
        self.vertices.iter().map(|&v| self.out_degree(v)).max().unwrap_or(0)
    }

    /// Groups arcs by tail: one subgraph per vertex that has an out-arc.
    pub fn unit_subgraphs(&self) -> Vec<WeightedUnitSubgraph> {
        let mut out: Vec<WeightedUnitSubgraph> = Vec::new();
        for (arc, w) in &self.arcs {
            match out.last_mut() {
                Some(g) if g.root == arc.tail => {
                    g.leaves.insert(arc.head, *w);
                }
                _ => {
                    let mut leaves = BTreeMap::new();
                    leaves.insert(arc.head, *w);
                    out.push(WeightedUnitSubgraph { root: arc.tail, leaves });
                }
            }
        }
        out
    }

    /// Groups arcs by head: one visiting set per vertex that has an in-arc.
    pub fn visiting_sets(&self) -> Vec<MultipleVisitingSet> {
        let mut by_head: BTreeMap<VertexId, BTreeMap<VertexId, u32>> = BTreeMap::new();
        for (arc, w) in &self.arcs {
            by_head.entry(arc.head).or_default().insert(arc.tail, *w);
        }
        by_head
            .into_iter()
            .map(|(head, sources)| MultipleVisitingSet { head, sources })
            .collect()
    }

    pub fn visiting_set(&self, head: VertexId) -> MultipleVisitingSet {
        let sources = self
            .arcs
            .iter()
            .filter(|(a, _)| a.head == head)
            .map(|(a, w)| (a.tail, *w))
            .collect();
        MultipleVisitingSet { head, sources }
    }

    /// Weak connectivity: arc direction is ignored.
    pub fn is_connected(&self) -> bool {
        let ids: Vec<VertexId> = self.vertices.iter().copied().collect();
        let index = |v: VertexId| ids.binary_search(&v).expect("endpoint is a vertex");
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut components = ids.len();
        for arc in self.arcs.keys() {
            let (a, b) = (find(&mut parent, index(arc.tail)), find(&mut parent, index(arc.head)));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components <= 1
    }

    /// Classifies by comparing every non-loop arc with its reverse.
    pub fn classify(&self) -> GraphClass {
        let mut all_unit = true;
        let mut reverse_missing = false;
        let mut reverse_unequal = false;
        for (arc, &w) in self.arcs.iter().filter(|(a, _)| !a.is_loop()) {
            if w != 1 {
                all_unit = false;
            }
            match self.arcs.get(&arc.reversed()) {
                None => reverse_missing = true,
                Some(&r) if r != w => reverse_unequal = true,
                Some(_) => {}
            }
        }
        match (all_unit, reverse_missing, reverse_unequal) {
            (true, false, _) => GraphClass::Simple,
            (true, true, _) => GraphClass::Directed,
            (false, false, false) => GraphClass::Multi,
            _ => GraphClass::Mixed,
        }
    }

    /// Applies a vertex relabeling. `map` must be injective on the vertex set.
    pub fn relabel(&self, mut map: impl FnMut(VertexId) -> VertexId) -> Result<Self> {
        let mut arcs = BTreeMap::new();
        for (arc, &w) in &self.arcs {
            let a = Arc::new(map(arc.tail), map(arc.head));
            if arcs.insert(a, w).is_some() {
                return Err(Error::param("relabeling is not injective"));
            }
        }
        Self::from_map(arcs)
    }

    /// The relation with every non-loop arc mirrored at equal weight.
    pub fn symmetrized(&self) -> Self {
        let mut b = RelationBuilder::new().undirected(true);
        for (arc, &w) in &self.arcs {
            b.add(arc.tail.get(), arc.head.get(), w).expect("valid arc");
        }
        b.build().expect("non-empty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn leaves(pairs: &[(u32, u32)]) -> BTreeMap<VertexId, u32> {
        pairs.iter().map(|&(v, w)| (VertexId::of(v), w)).collect()
    }

    fn k3() -> MultiTraversalRelation {
        MultiTraversalRelation::from_edges([(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn duplicate_arcs_are_summed() {
        let g = MultiTraversalRelation::from_weighted_arcs([(1, 2, 3), (1, 2, 2)]).unwrap();
        assert_eq!(g.arc_count(), 1);
        assert_eq!(g.multiplicity(Arc::of(1, 2)), 5);
    }

    #[test]
    fn zero_ids_and_weights_are_rejected() {
        assert_eq!(MultiTraversalRelation::from_arcs([(0, 1)]), Err(Error::ZeroVertex));
        assert_eq!(
            MultiTraversalRelation::from_weighted_arcs([(1, 2, 0)]),
            Err(Error::ZeroMultiplicity)
        );
        assert_eq!(MultiTraversalRelation::from_arcs([]), Err(Error::EmptyRelation));
    }

    #[test]
    fn self_loop_is_kept() {
        let g = MultiTraversalRelation::from_arcs([(1, 1), (1, 2)]).unwrap();
        assert_eq!(g.multiplicity(Arc::of(1, 1)), 1);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.out_degree(VertexId::of(1)), 1);
    }

    #[test]
    fn unit_subgraphs_of_k3() {
        let subs = k3().unit_subgraphs();
        assert_eq!(subs.len(), 3);
        for s in &subs {
            assert_eq!(s.leaves.len(), 2);
            assert!(s.leaves.values().all(|&w| w == 1));
        }
    }

    #[test]
    fn unit_subgraphs_regroup_by_tail() {
        let g = MultiTraversalRelation::from_weighted_arcs([(1, 2, 2), (1, 3, 1), (3, 1, 1)]).unwrap();
        let subs = g.unit_subgraphs();
        assert_eq!(
            subs,
            vec![
                WeightedUnitSubgraph { root: VertexId::of(1), leaves: leaves(&[(2, 2), (3, 1)]) },
                WeightedUnitSubgraph { root: VertexId::of(3), leaves: leaves(&[(1, 1)]) },
            ]
        );
    }

    #[test]
    fn terminal_vertex_has_no_subgraph() {
        let g = MultiTraversalRelation::from_arcs([(1, 2), (2, 3)]).unwrap();
        let roots: Vec<_> = g.unit_subgraphs().iter().map(|s| s.root.get()).collect();
        assert_eq!(roots, vec![1, 2]);
        let heads: Vec<_> = g.visiting_sets().iter().map(|s| s.head.get()).collect();
        assert_eq!(heads, vec![2, 3]);
    }

    #[test]
    fn visiting_sets_group_by_head() {
        let g = MultiTraversalRelation::from_weighted_arcs([(1, 2, 2), (3, 2, 1)]).unwrap();
        let sets = g.visiting_sets();
        assert_eq!(
            sets,
            vec![MultipleVisitingSet { head: VertexId::of(2), sources: leaves(&[(1, 2), (3, 1)]) }]
        );
        assert_eq!(sets[0].max_weight(), 2);
        assert_eq!(k3().visiting_sets().len(), 3);
    }

    #[test]
    fn classification() {
        assert_eq!(k3().classify(), GraphClass::Simple);
        let directed = MultiTraversalRelation::from_arcs([(1, 2)]).unwrap();
        assert_eq!(directed.classify(), GraphClass::Directed);
        let mixed = MultiTraversalRelation::from_weighted_arcs([(1, 2, 2), (2, 1, 1)]).unwrap();
        assert_eq!(mixed.classify(), GraphClass::Mixed);
        let multi = MultiTraversalRelation::from_weighted_arcs([(1, 2, 2), (2, 1, 2)]).unwrap();
        assert_eq!(multi.classify(), GraphClass::Multi);
        let heavy_one_way = MultiTraversalRelation::from_weighted_arcs([(1, 2, 2)]).unwrap();
        assert_eq!(heavy_one_way.classify(), GraphClass::Mixed);
        let looped = MultiTraversalRelation::from_weighted_arcs([(1, 1, 4), (1, 2, 1), (2, 1, 1)]).unwrap();
        assert_eq!(looped.classify(), GraphClass::Simple);
    }

    #[test]
    fn connectivity_is_weak() {
        assert!(MultiTraversalRelation::from_arcs([(1, 2), (3, 2)]).unwrap().is_connected());
        assert!(!MultiTraversalRelation::from_arcs([(1, 2), (3, 4)]).unwrap().is_connected());
    }

    #[test]
    fn undirected_builder_mirrors_but_not_loops() {
        let mut b = RelationBuilder::new().undirected(true);
        b.add(1, 2, 2).unwrap();
        b.add(3, 3, 1).unwrap();
        b.add(2, 3, 1).unwrap();
        let g = b.build().unwrap();
        assert_eq!(g.multiplicity(Arc::of(2, 1)), 2);
        assert_eq!(g.multiplicity(Arc::of(3, 3)), 1);
        assert_eq!(g.arc_count(), 5);
    }

    #[test]
    fn relabel_must_be_injective() {
        assert!(k3().relabel(|_| VertexId::of(1)).is_err());
        let shifted = k3().relabel(|v| VertexId::of(v.get() + 10)).unwrap();
        assert!(shifted.contains_vertex(VertexId::of(11)));
    }
}
