//! Layered graph partition.
//!
//! Region one is the seed set. Region `k + 1` holds every out-neighbor of
//! region `k` that no earlier region claimed. Layering stops when a frontier
//! produces nothing new; vertices never reached are reported as stranded,
//! which only happens on directed or disconnected instances.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{MultiTraversalRelation, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionSequence {
    /// Regions in order, each sorted ascending.
    pub regions: Vec<Vec<VertexId>>,
    /// Vertices not reachable from the seeds.
    pub stranded: Vec<VertexId>,
    pub seed_count: usize,
    /// Frontier expansions performed; one per region.
    pub loops: usize,
    index: BTreeMap<VertexId, usize>,
}

impl RegionSequence {
    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.regions.iter().map(Vec::len).collect()
    }

    /// 0-based region index of `v`.
    pub fn region_of(&self, v: VertexId) -> Option<usize> {
        self.index.get(&v).copied()
    }

    /// Number of arcs from the seed region to `v`: unweighted shortest-path
    /// distance from the seed, or from the nearest seed when there are
    /// several.
    pub fn distance(&self, v: VertexId) -> Result<usize> {
        self.region_of(v).ok_or(Error::UnknownVertex(v))
    }
}

pub fn partition(g: &MultiTraversalRelation, seeds: &[VertexId]) -> Result<RegionSequence> {
    let seed_set: BTreeSet<VertexId> = seeds.iter().copied().collect();
    if seed_set.is_empty() {
        return Err(Error::InvalidSeeds("seed set is empty".into()));
    }
    if let Some(bad) = seed_set.iter().find(|v| !g.contains_vertex(**v)) {
        return Err(Error::InvalidSeeds(format!("vertex {bad} is not in the instance")));
    }
    if seed_set.len() >= g.vertex_count() {
        return Err(Error::InvalidSeeds("seed set must leave at least one vertex".into()));
    }

    let ids: Vec<VertexId> = g.vertices().collect();
    let at = |v: VertexId| ids.binary_search(&v).expect("vertex");
    let mut adjacency: Vec<Vec<usize>> = (0..ids.len()).map(|_| Vec::new()).collect();
    for (arc, _) in g.arcs().filter(|(a, _)| !a.is_loop()) {
        adjacency[at(arc.tail)].push(at(arc.head));
    }
    let active = alloc::vec![true; ids.len()];
    let seeds: Vec<usize> = seed_set.iter().map(|&v| at(v)).collect();
    let layers = layer(&adjacency, &active, &seeds);

    let regions: Vec<Vec<VertexId>> = layers
        .regions
        .iter()
        .map(|r| {
            let mut vs: Vec<VertexId> = r.iter().map(|&i| ids[i]).collect();
            vs.sort_unstable();
            vs
        })
        .collect();
    let index = regions
        .iter()
        .enumerate()
        .flat_map(|(k, r)| r.iter().map(move |&v| (v, k)))
        .collect();
    let stranded = layers.stranded.iter().map(|&i| ids[i]).collect();
    Ok(RegionSequence { loops: regions.len(), regions, stranded, seed_count: seeds.len(), index })
}

pub fn region_distance(r: &RegionSequence, v: VertexId) -> Result<usize> {
    r.distance(v)
}

pub(crate) struct Layers {
    pub regions: Vec<Vec<usize>>,
    pub stranded: Vec<usize>,
}

/// Index-level layering over the `active` vertices of an adjacency list.
/// Seeds must be active. Regions keep discovery order.
pub(crate) fn layer(adjacency: &[Vec<usize>], active: &[bool], seeds: &[usize]) -> Layers {
    let mut assigned = alloc::vec![false; adjacency.len()];
    for &s in seeds {
        assigned[s] = true;
    }
    let mut regions = alloc::vec![seeds.to_vec()];
    loop {
        let frontier = regions.last().expect("seed region");
        let mut next = Vec::new();
        for &u in frontier {
            for &w in &adjacency[u] {
                if active[w] && !assigned[w] {
                    assigned[w] = true;
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        regions.push(next);
    }
    let stranded = (0..adjacency.len()).filter(|&i| active[i] && !assigned[i]).collect();
    Layers { regions, stranded }
}
