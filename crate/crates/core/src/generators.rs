//! Deterministic instance families, plus seeded random families used by the
//! property and acceptance suites.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{MultiTraversalRelation, RelationBuilder};

/// Every ordered pair `(i, j)`, `i != j`, on `1..=n`.
pub fn complete(n: u32) -> Result<MultiTraversalRelation> {
    if n < 2 {
        return Err(Error::param("complete graph needs n >= 2"));
    }
    let arcs = (1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)));
    MultiTraversalRelation::from_arcs(arcs)
}

/// Symmetric cycle `1 - 2 - ... - n - 1`.
pub fn cycle(n: u32) -> Result<MultiTraversalRelation> {
    if n < 3 {
        return Err(Error::param("cycle needs n >= 3"));
    }
    MultiTraversalRelation::from_edges((1..=n).map(|i| (i, i % n + 1)))
}

/// Directed path `1 -> 2 -> ... -> n`.
pub fn path(n: u32) -> Result<MultiTraversalRelation> {
    if n < 2 {
        return Err(Error::param("path needs n >= 2"));
    }
    MultiTraversalRelation::from_arcs((1..n).map(|i| (i, i + 1)))
}

/// Symmetric `rows x cols` grid, row-major labels starting at 1.
pub fn grid(rows: u32, cols: u32) -> Result<MultiTraversalRelation> {
    let n = rows.checked_mul(cols).ok_or(Error::Overflow)?;
    if rows == 0 || cols == 0 || n < 2 {
        return Err(Error::param("grid needs rows * cols >= 2"));
    }
    let id = |r: u32, c: u32| r * cols + c + 1;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    MultiTraversalRelation::from_edges(edges)
}

/// A sequence of `z` concentric rings. The first and last rings have `k`
/// vertices, each middle ring has `2k`. Every vertex gets exactly one link to
/// an adjacent ring. Ring-one vertex `i` links to position `2i` of the next
/// ring. In a middle ring, even positions link inward and odd positions link
/// outward. The last ring mirrors the first. The result is 3-regular with
/// `2(z-1)k` vertices; `(5, 3)` is the dodecahedron and `(k, 2)` the prism.
///
/// Labels run ring by ring, in ring order, starting at 1.
pub fn cycle_sequence(k: u32, z: u32) -> Result<MultiTraversalRelation> {
    if k < 3 || z < 2 {
        return Err(Error::param("cycle sequence needs k >= 3 and z >= 2"));
    }
    let sizes: Vec<u32> = (0..z).map(|r| if r == 0 || r == z - 1 { k } else { 2 * k }).collect();
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut next = 1u32;
    for &s in &sizes {
        offsets.push(next);
        next = next.checked_add(s).ok_or(Error::Overflow)?;
    }

    let mut edges = Vec::new();
    for (r, (&size, &off)) in sizes.iter().zip(&offsets).enumerate() {
        for i in 0..size {
            edges.push((off + i, off + (i + 1) % size));
        }
        if r + 1 == sizes.len() {
            break;
        }
        let below = offsets[r + 1];
        let next_is_middle = sizes[r + 1] == 2 * k && r + 2 < sizes.len();
        for i in 0..k {
            // vertex of ring r that links outward
            let from = if size == k { off + i } else { off + 2 * i + 1 };
            // vertex of ring r+1 that links inward
            let to = if next_is_middle { below + 2 * i } else { below + i };
            edges.push((from, to));
        }
    }
    MultiTraversalRelation::from_edges(edges)
}

/// Regular dodecahedron: outer ring 1-5, middle ring 6-15, inner ring 16-20.
pub fn dodecahedron() -> MultiTraversalRelation {
    cycle_sequence(5, 3).expect("fixed parameters")
}

/// Random weakly connected instance on `1..=n`: a random spanning tree plus
/// `extra` random arcs. Each tree or extra link is mirrored with probability
/// `symmetric_prob`; each arc gets a weight in `1..=max_weight`.
pub fn random_connected(
    n: u32,
    extra: usize,
    max_weight: u32,
    symmetric_prob: f64,
    seed: u64,
) -> Result<MultiTraversalRelation> {
    if n < 2 || max_weight == 0 {
        return Err(Error::param("random instance needs n >= 2 and max_weight >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<u32> = (1..=n).collect();
    order.shuffle(&mut rng);
    let mut links = Vec::new();
    for i in 1..order.len() {
        let parent = order[rng.random_range(0..i)];
        links.push((parent, order[i]));
    }
    for _ in 0..extra {
        let u = rng.random_range(1..=n);
        let v = rng.random_range(1..=n);
        if u != v {
            links.push((u, v));
        }
    }
    let mut seen = BTreeSet::new();
    let mut b = RelationBuilder::new();
    for (u, v) in links {
        let (t, h) = if rng.random_bool(0.5) { (u, v) } else { (v, u) };
        let mirror = rng.random_bool(symmetric_prob);
        for (t, h) in core::iter::once((t, h)).chain(mirror.then_some((h, t))) {
            if seen.insert((t, h)) {
                b.add(t, h, rng.random_range(1..=max_weight))?;
            }
        }
    }
    b.build()
}

/// Random symmetric connected instance with weight 1 everywhere.
pub fn random_simple_connected(n: u32, extra: usize, seed: u64) -> Result<MultiTraversalRelation> {
    Ok(random_connected(n, extra, 1, 1.0, seed)?.symmetrized_unit())
}

/// Random connected simple 3-regular graph on `n` vertices (`n` even, >= 4),
/// by rejection sampling of perfect matchings over vertex stubs.
pub fn random_cubic(n: u32, seed: u64) -> Result<MultiTraversalRelation> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::param("cubic graph needs even n >= 4"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..10_000 {
        let mut stubs: Vec<u32> = (1..=n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(&mut rng);
        let mut edges = BTreeSet::new();
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !edges.insert((u, v)) {
                continue 'attempt;
            }
        }
        let g = MultiTraversalRelation::from_edges(edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Invariant("cubic sampling did not converge".into()))
}

impl MultiTraversalRelation {
    fn symmetrized_unit(&self) -> Self {
        let edges: BTreeSet<(u32, u32)> = self
            .arcs()
            .filter(|(a, _)| !a.is_loop())
            .map(|(a, _)| (a.tail.get().min(a.head.get()), a.tail.get().max(a.head.get())))
            .collect();
        MultiTraversalRelation::from_edges(edges).expect("non-empty")
    }
}
