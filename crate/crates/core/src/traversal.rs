//! Exhaustive equivalent-visiting search.
//!
//! Each appearance of a vertex `x` on the current path consumes one unit of
//! weight from every arc entering `x`. A path is extended from its end vertex
//! along every out-arc that still has residual weight; when no such arc is
//! left the path is maximal and is emitted. Self-loops are never traversed.
//!
//! Two engines share one contract:
//!
//! * [`Engine::Bots`] copies the weight table for every partial path and
//!   applies the visiting decrement once per vertex occurrence.
//! * [`Engine::Obots`] leaves the table untouched and admits a leaf when its
//!   stored weight exceeds the leaf's occurrence count on the path.
//!
//! Pending partial paths live on a LIFO stack; children are pushed in
//! ascending leaf order. `loop_count` counts popped partial paths (the start
//! path included), so it equals the number of nodes of the search tree.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Arc, GraphClass, MultiTraversalRelation, MultipleVisitingSet, VertexId, WeightedUnitSubgraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Bots,
    Obots,
}

/// A vertex sequence under the equivalent-visiting discipline.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SearchPath {
    pub vertices: Vec<VertexId>,
    pub occurrence: BTreeMap<VertexId, u32>,
}

impl SearchPath {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        let mut occurrence = BTreeMap::new();
        for &v in &vertices {
            *occurrence.entry(v).or_insert(0) += 1;
        }
        SearchPath { vertices, occurrence }
    }

    /// Number of arcs on the path.
    pub fn arc_len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().expect("paths are never empty")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TraversalResult {
    /// Maximal paths in emission order.
    pub paths: Vec<SearchPath>,
    pub loop_count: u64,
    pub breadth: u64,
    /// Set when the instance is not (weakly) connected. The search still runs.
    pub disconnected: bool,
}

impl TraversalResult {
    /// Average number of expansion steps per maximal path.
    pub fn ratio(&self) -> f64 {
        ratio(self.loop_count, self.breadth)
    }
}

/// Counts from a streaming search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchSummary {
    pub loop_count: u64,
    pub breadth: u64,
    pub disconnected: bool,
}

impl SearchSummary {
    pub fn ratio(&self) -> f64 {
        ratio(self.loop_count, self.breadth)
    }
}

fn ratio(loops: u64, breadth: u64) -> f64 {
    if breadth == 0 {
        0.0
    } else {
        loops as f64 / breadth as f64
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HamiltonStats {
    /// Maximal paths visiting every vertex exactly once.
    pub hamiltonian_paths: u64,
    /// Those Hamiltonian paths whose end has an arc back to the start.
    pub hamiltonian_cycles: u64,
}

impl HamiltonStats {
    /// Each undirected cycle is found once per direction.
    pub fn undirected_cycles(&self) -> u64 {
        self.hamiltonian_cycles / 2
    }
}

/// Receives every maximal path as it is emitted.
pub trait PathSink {
    fn accept(&mut self, path: &[VertexId]);
}

impl<F: FnMut(&[VertexId])> PathSink for F {
    fn accept(&mut self, path: &[VertexId]) {
        self(path)
    }
}

/// Discards paths; for counts-only runs.
#[derive(Debug, Clone, Copy, Default)]
pub struct CountOnly;

impl PathSink for CountOnly {
    fn accept(&mut self, _: &[VertexId]) {}
}

/// Keeps every path.
#[derive(Debug, Clone, Default)]
pub struct Collect(pub Vec<SearchPath>);

impl PathSink for Collect {
    fn accept(&mut self, path: &[VertexId]) {
        self.0.push(SearchPath::new(path.to_vec()));
    }
}

/// Classifies spanning paths on the fly without retaining them.
#[derive(Debug, Clone)]
pub struct HamiltonCounter {
    n: usize,
    start: VertexId,
    closers: BTreeSet<VertexId>,
    pub stats: HamiltonStats,
}

impl HamiltonCounter {
    pub fn new(g: &MultiTraversalRelation, start: VertexId) -> Self {
        let closers = g
            .arcs()
            .filter(|(a, _)| a.head == start && !a.is_loop())
            .map(|(a, _)| a.tail)
            .collect();
        HamiltonCounter { n: g.vertex_count(), start, closers, stats: HamiltonStats::default() }
    }

    fn observe(&mut self, path: &[VertexId]) {
        if path.len() != self.n || path.first() != Some(&self.start) {
            return;
        }
        let distinct: BTreeSet<_> = path.iter().collect();
        if distinct.len() != self.n {
            return;
        }
        self.stats.hamiltonian_paths += 1;
        let end = *path.last().expect("non-empty");
        if self.n > 1 && self.closers.contains(&end) {
            self.stats.hamiltonian_cycles += 1;
        }
    }
}

impl PathSink for HamiltonCounter {
    fn accept(&mut self, path: &[VertexId]) {
        self.observe(path);
    }
}

impl<A: PathSink, B: PathSink> PathSink for (A, B) {
    fn accept(&mut self, path: &[VertexId]) {
        self.0.accept(path);
        self.1.accept(path);
    }
}

/// `1` iff `(u, v)` is present with positive weight.
pub fn characteristic(g: &MultiTraversalRelation, u: VertexId, v: VertexId) -> bool {
    g.multiplicity(Arc::new(u, v)) > 0
}

/// One application of the visiting decrement: every source weight drops by one,
/// floored at zero.
pub fn equivalent_visit(set: &MultipleVisitingSet) -> MultipleVisitingSet {
    equivalent_visit_times(set, 1)
}

/// `times` applications of [`equivalent_visit`].
pub fn equivalent_visit_times(set: &MultipleVisitingSet, times: u32) -> MultipleVisitingSet {
    MultipleVisitingSet {
        head: set.head,
        sources: set.sources.iter().map(|(&v, &w)| (v, w.saturating_sub(times))).collect(),
    }
}

/// A mutable copy of the arc weights, as used by the table-copying engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualTable {
    weights: BTreeMap<Arc, u32>,
}

impl ResidualTable {
    pub fn new(g: &MultiTraversalRelation) -> Self {
        ResidualTable { weights: g.arcs().collect() }
    }

    pub fn weight(&self, arc: Arc) -> u32 {
        self.weights.get(&arc).copied().unwrap_or(0)
    }

    /// `1` iff `(u, v)` still has residual weight.
    pub fn characteristic(&self, u: VertexId, v: VertexId) -> bool {
        self.weight(Arc::new(u, v)) > 0
    }

    /// Decrements every arc entering `head`.
    pub fn equivalent_visit(&mut self, head: VertexId) {
        for (arc, w) in self.weights.iter_mut() {
            if arc.head == head {
                *w = w.saturating_sub(1);
            }
        }
    }
}

/// What the enumerating step compares leaf weights against.
#[derive(Debug, Clone, Copy)]
pub enum SearchState<'a> {
    /// Residual weights after the visiting decrements of the current path.
    Table(&'a ResidualTable),
    /// The current path; stored weights are compared with occurrence counts.
    Path(&'a [VertexId]),
}

/// Leaves of `subgraph` that may extend the current path. Self-loops are
/// never returned.
pub fn enumerate_next(subgraph: &WeightedUnitSubgraph, state: SearchState<'_>) -> Vec<VertexId> {
    subgraph
        .leaves
        .iter()
        .filter(|(&leaf, _)| leaf != subgraph.root)
        .filter(|(&leaf, &w)| match state {
            SearchState::Table(t) => t.weight(Arc::new(subgraph.root, leaf)) > 0,
            SearchState::Path(p) => w as usize > p.iter().filter(|&&x| x == leaf).count(),
        })
        .map(|(&leaf, _)| leaf)
        .collect()
}

/// A pending partial path, owned by whoever expands it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkUnit(Vec<u32>);

impl WorkUnit {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Dense, read-only view of a relation used by both engines.
#[derive(Debug, Clone)]
pub struct SearchTable {
    ids: Vec<VertexId>,
    /// Per vertex: (leaf index, weight, arc slot), ascending by leaf, loops removed.
    out: Vec<Vec<(u32, u32, usize)>>,
    /// Per vertex: arc slots entering it.
    incoming: Vec<Vec<usize>>,
    weights: Vec<u32>,
    connected: bool,
}

impl SearchTable {
    pub fn new(g: &MultiTraversalRelation) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index = |v: VertexId| ids.binary_search(&v).expect("endpoint is a vertex");
        let mut out = vec_of(ids.len());
        let mut incoming = vec_of(ids.len());
        let mut weights = Vec::new();
        for (arc, w) in g.arcs().filter(|(a, _)| !a.is_loop()) {
            let slot = weights.len();
            weights.push(w);
            let (t, h) = (index(arc.tail), index(arc.head));
            out[t].push((h as u32, w, slot));
            incoming[h].push(slot);
        }
        SearchTable { ids, out, incoming, weights, connected: g.is_connected() }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn start_unit(&self, start: VertexId) -> Result<WorkUnit> {
        let i = self.ids.binary_search(&start).map_err(|_| Error::UnknownVertex(start))?;
        Ok(WorkUnit(alloc::vec![i as u32]))
    }

    pub fn vertices_of(&self, unit: &WorkUnit) -> Vec<VertexId> {
        unit.0.iter().map(|&i| self.ids[i as usize]).collect()
    }

    fn admissible(&self, engine: Engine, path: &[u32], scratch: &mut Vec<u32>, out: &mut Vec<u32>) {
        out.clear();
        let end = *path.last().expect("non-empty") as usize;
        match engine {
            Engine::Bots => {
                scratch.clear();
                scratch.extend_from_slice(&self.weights);
                for &x in path {
                    for &slot in &self.incoming[x as usize] {
                        scratch[slot] = scratch[slot].saturating_sub(1);
                    }
                }
                out.extend(self.out[end].iter().filter(|e| scratch[e.2] > 0).map(|e| e.0));
            }
            Engine::Obots => {
                for &(leaf, w, _) in &self.out[end] {
                    let k = path.iter().filter(|&&x| x == leaf).count();
                    if w as usize > k {
                        out.push(leaf);
                    }
                }
            }
        }
    }

    /// Children of `unit` in push order; empty when `unit` is maximal.
    pub fn expand(&self, engine: Engine, unit: &WorkUnit) -> Vec<WorkUnit> {
        let mut next = Vec::new();
        self.admissible(engine, &unit.0, &mut Vec::new(), &mut next);
        next.into_iter()
            .map(|leaf| {
                let mut p = unit.0.clone();
                p.push(leaf);
                WorkUnit(p)
            })
            .collect()
    }

    /// Runs the stack discipline to exhaustion starting from `units`
    /// (the last unit is popped first).
    pub fn run<S: PathSink + ?Sized>(&self, engine: Engine, units: Vec<WorkUnit>, sink: &mut S) -> SearchSummary {
        let mut stack: Vec<Vec<u32>> = units.into_iter().map(|u| u.0).collect();
        let mut scratch = Vec::new();
        let mut next = Vec::new();
        let mut ids_buf = Vec::new();
        let mut summary = SearchSummary { disconnected: !self.connected, ..Default::default() };
        while let Some(path) = stack.pop() {
            summary.loop_count += 1;
            self.admissible(engine, &path, &mut scratch, &mut next);
            if next.is_empty() {
                summary.breadth += 1;
                ids_buf.clear();
                ids_buf.extend(path.iter().map(|&i| self.ids[i as usize]));
                sink.accept(&ids_buf);
                continue;
            }
            let last = next.len() - 1;
            for (j, &leaf) in next.iter().enumerate() {
                if j == last {
                    break;
                }
                let mut p = Vec::with_capacity(path.len() + 1);
                p.extend_from_slice(&path);
                p.push(leaf);
                stack.push(p);
            }
            let mut p = path;
            p.push(next[last]);
            stack.push(p);
        }
        summary
    }
}

fn vec_of<T>(n: usize) -> Vec<Vec<T>> {
    (0..n).map(|_| Vec::new()).collect()
}

/// Streams every maximal path from `start` into `sink`.
pub fn search<S: PathSink + ?Sized>(
    g: &MultiTraversalRelation,
    start: VertexId,
    engine: Engine,
    sink: &mut S,
) -> Result<SearchSummary> {
    let table = SearchTable::new(g);
    let unit = table.start_unit(start)?;
    Ok(table.run(engine, alloc::vec![unit], sink))
}

fn collect_search(g: &MultiTraversalRelation, start: VertexId, engine: Engine) -> Result<TraversalResult> {
    let mut sink = Collect::default();
    let s = search(g, start, engine, &mut sink)?;
    Ok(TraversalResult { paths: sink.0, loop_count: s.loop_count, breadth: s.breadth, disconnected: s.disconnected })
}

/// Table-copying engine, retaining every maximal path.
pub fn bots_search(g: &MultiTraversalRelation, start: VertexId) -> Result<TraversalResult> {
    collect_search(g, start, Engine::Bots)
}

/// Occurrence-counting engine, retaining every maximal path.
pub fn obots_search(g: &MultiTraversalRelation, start: VertexId) -> Result<TraversalResult> {
    collect_search(g, start, Engine::Obots)
}

pub fn hamilton_stats(r: &TraversalResult, g: &MultiTraversalRelation, start: VertexId) -> HamiltonStats {
    let mut counter = HamiltonCounter::new(g, start);
    for p in &r.paths {
        counter.observe(&p.vertices);
    }
    counter.stats
}

/// Search counts plus Hamiltonian statistics, without retaining paths.
pub fn search_stats(
    g: &MultiTraversalRelation,
    start: VertexId,
    engine: Engine,
) -> Result<(SearchSummary, HamiltonStats)> {
    let mut counter = HamiltonCounter::new(g, start);
    let summary = search(g, start, engine, &mut counter)?;
    Ok((summary, counter.stats))
}

/// Hamiltonian cycle count per start vertex. Requires a connected simple
/// instance; on such instances every count is the same.
pub fn traversal_invariant(g: &MultiTraversalRelation) -> Result<BTreeMap<VertexId, u64>> {
    let class = g.classify();
    if class != GraphClass::Simple {
        return Err(Error::param(format!("traversal invariant needs a simple graph, got {class}")));
    }
    if !g.is_connected() {
        return Err(Error::param("traversal invariant needs a connected graph"));
    }
    g.vertices()
        .map(|v| search_stats(g, v, Engine::Obots).map(|(_, h)| (v, h.hamiltonian_cycles)))
        .collect()
}

/// Largest entering multiplicity per vertex; bounds how often a vertex can be
/// entered along one path.
pub fn max_visit_weights(g: &MultiTraversalRelation) -> BTreeMap<VertexId, u32> {
    let mut m: BTreeMap<VertexId, u32> = g.vertices().map(|v| (v, 0)).collect();
    for (arc, w) in g.arcs().filter(|(a, _)| !a.is_loop()) {
        let slot = m.get_mut(&arc.head).expect("endpoint");
        *slot = (*slot).max(w);
    }
    m
}
