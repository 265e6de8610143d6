//! Arc sequence validation and cycle permutation.
//!
//! A trail is a chained sequence of at least two non-loop arcs. A path is a
//! single non-loop arc or a trail whose vertex sequence has no repeats, except
//! that the first tail may equal the last head. A cycle is a closed path of
//! length at least two. Cycle permutation swaps the first `m` arcs with the
//! rest, which is a left rotation by `m`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bocps;
use crate::error::{Error, Result};
use crate::graph::{Arc, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ArcSequence(pub Vec<Arc>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclePermutation {
    /// Prefix length moved to the back.
    pub index: usize,
    /// Number of repetitions.
    pub power: usize,
}

impl ArcSequence {
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        ArcSequence(pairs.iter().map(|&(t, h)| Arc::of(t, h)).collect())
    }

    /// Consecutive vertex pairs of a vertex walk.
    pub fn from_vertices(vs: &[VertexId]) -> Self {
        ArcSequence(vs.windows(2).map(|w| Arc::new(w[0], w[1])).collect())
    }

    /// A vertex walk closed back to its first vertex.
    pub fn closed_from_vertices(vs: &[VertexId]) -> Self {
        let mut s = Self::from_vertices(vs);
        if let (Some(&first), Some(&last)) = (vs.first(), vs.last()) {
            s.0.push(Arc::new(last, first));
        }
        s
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First tail followed by every head.
    pub fn vertex_sequence(&self) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        if let Some(first) = self.0.first() {
            out.push(first.tail);
        }
        out.extend(self.0.iter().map(|a| a.head));
        out
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.0.iter().flat_map(|a| [a.tail, a.head]).collect()
    }
}

fn chained(s: &ArcSequence) -> bool {
    s.0.windows(2).all(|w| w[0].head == w[1].tail)
}

pub fn is_trail(s: &ArcSequence) -> bool {
    s.len() > 1 && s.0.iter().all(|a| !a.is_loop()) && chained(s)
}

pub fn is_path(s: &ArcSequence) -> bool {
    match s.len() {
        0 => false,
        1 => !s.0[0].is_loop(),
        _ if !is_trail(s) => false,
        _ => {
            let vs = s.vertex_sequence();
            let body = if vs.first() == vs.last() { &vs[..vs.len() - 1] } else { &vs[..] };
            let distinct: BTreeSet<_> = body.iter().collect();
            distinct.len() == body.len()
        }
    }
}

pub fn is_cycle(s: &ArcSequence) -> bool {
    s.len() >= 2 && is_path(s) && s.0[0].tail == s.0[s.len() - 1].head
}

/// Heads of every arc but the last.
pub fn medium_vertices(s: &ArcSequence) -> Result<Vec<VertexId>> {
    if !is_path(s) {
        return Err(Error::NotAPath);
    }
    Ok(s.0[..s.len() - 1].iter().map(|a| a.head).collect())
}

pub fn cycle_permute(s: &ArcSequence, p: CyclePermutation) -> Result<ArcSequence> {
    if !is_cycle(s) {
        return Err(Error::NotACycle);
    }
    if p.index > s.len() {
        return Err(Error::param("permutation index exceeds cycle length"));
    }
    Ok(rotate(s, p))
}

fn rotate(s: &ArcSequence, p: CyclePermutation) -> ArcSequence {
    let n = s.len();
    let shift = ((p.index % n) as u128 * (p.power % n) as u128 % n as u128) as usize;
    let mut out = s.0.clone();
    out.rotate_left(shift);
    ArcSequence(out)
}

fn check_power_args(n: usize, m: usize) -> Result<()> {
    if m < 1 || m > n {
        return Err(Error::param("minimal power needs 1 <= m <= N"));
    }
    Ok(())
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least `M >= 1` with `rho_m^M` the identity on a length-`n` cycle.
pub fn minimal_power(n: usize, m: usize) -> Result<usize> {
    check_power_args(n, m)?;
    if m == n {
        return Ok(1);
    }
    Ok(n / gcd(n, m))
}

/// Same contract as [`minimal_power`], computed by the cycle-permutation
/// integer search on `(m, n - m)`.
pub fn minimal_power_bocps(n: usize, m: usize) -> Result<usize> {
    check_power_args(n, m)?;
    if m == n {
        return Ok(1);
    }
    let r = bocps::bocps(m as u64, (n - m) as u64)?;
    Ok((r.k1 + r.k2) as usize)
}

/// Every distinct sequence obtained by rotating the cycle and dropping its
/// final arc.
pub fn chains_of(s: &ArcSequence) -> Result<Vec<ArcSequence>> {
    if !is_cycle(s) {
        return Err(Error::NotACycle);
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in 0..s.len() {
        let mut c = rotate(s, CyclePermutation { index: r, power: 1 });
        c.0.pop();
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn seq(p: &[(u32, u32)]) -> ArcSequence {
        ArcSequence::from_pairs(p)
    }

    fn ring(n: u32) -> ArcSequence {
        ArcSequence((1..=n).map(|i| Arc::of(i, i % n + 1)).collect())
    }

    #[test]
    fn trails() {
        assert!(is_trail(&seq(&[(1, 2), (2, 3)])));
        assert!(!is_trail(&seq(&[(1, 2), (3, 4)])));
        assert!(!is_trail(&seq(&[(1, 1), (1, 2)])));
        assert!(!is_trail(&seq(&[(1, 2)])));
    }

    #[test]
    fn paths() {
        assert!(is_path(&seq(&[(1, 2)])));
        assert!(!is_path(&seq(&[(1, 1)])));
        assert!(!is_path(&ArcSequence::default()));
        assert!(is_path(&seq(&[(1, 2), (2, 3), (3, 1)])));
        assert!(!is_path(&seq(&[(1, 2), (2, 3), (3, 2)])));
        assert!(!is_path(&seq(&[(1, 2), (2, 1), (1, 2)])));
    }

    #[test]
    fn cycles() {
        assert!(is_cycle(&seq(&[(1, 2), (2, 1)])));
        assert!(!is_cycle(&seq(&[(1, 2), (2, 3)])));
        assert!(!is_cycle(&seq(&[(1, 2)])));
        assert!(is_cycle(&ring(6)));
    }

    #[test]
    fn medium() {
        assert_eq!(medium_vertices(&seq(&[(1, 2), (2, 3), (3, 4)])).unwrap(), vec![VertexId::of(2), VertexId::of(3)]);
        assert_eq!(medium_vertices(&seq(&[(1, 2), (2, 1)])).unwrap(), vec![VertexId::of(2)]);
        assert!(medium_vertices(&seq(&[(1, 2)])).unwrap().is_empty());
        assert_eq!(medium_vertices(&seq(&[(1, 2), (3, 4)])), Err(Error::NotAPath));
    }

    #[test]
    fn permute_rotates() {
        let c = seq(&[(1, 2), (2, 3), (3, 1)]);
        let p = cycle_permute(&c, CyclePermutation { index: 1, power: 1 }).unwrap();
        assert_eq!(p, seq(&[(2, 3), (3, 1), (1, 2)]));
        for p in [CyclePermutation { index: 0, power: 4 }, CyclePermutation { index: 2, power: 0 }] {
            assert_eq!(cycle_permute(&c, p).unwrap(), c);
        }
        let r6 = ring(6);
        assert_eq!(cycle_permute(&r6, CyclePermutation { index: 2, power: 3 }).unwrap(), r6);
        assert_eq!(cycle_permute(&seq(&[(1, 2), (2, 3)]), CyclePermutation { index: 1, power: 1 }), Err(Error::NotACycle));
        assert!(cycle_permute(&c, CyclePermutation { index: 4, power: 1 }).is_err());
    }

    #[test]
    fn minimal_powers() {
        assert_eq!(minimal_power(6, 2).unwrap(), 3);
        assert_eq!(minimal_power(5, 2).unwrap(), 5);
        assert_eq!(minimal_power(7, 1).unwrap(), 7);
        assert_eq!(minimal_power(7, 7).unwrap(), 1);
        assert!(minimal_power(4, 5).is_err());
        assert!(minimal_power(4, 0).is_err());
        for n in 1..40 {
            for m in 1..=n {
                assert_eq!(minimal_power(n, m).unwrap(), minimal_power_bocps(n, m).unwrap());
            }
        }
    }

    #[test]
    fn chains() {
        let two = seq(&[(1, 2), (2, 1)]);
        assert_eq!(chains_of(&two).unwrap(), vec![seq(&[(1, 2)]), seq(&[(2, 1)])]);
        assert_eq!(chains_of(&ring(3)).unwrap().len(), 3);
        assert!(chains_of(&seq(&[(1, 2)])).is_err());
    }

    #[test]
    fn closed_walk_conversion() {
        let vs: Vec<_> = [1, 2, 3].iter().map(|&i| VertexId::of(i)).collect();
        assert_eq!(ArcSequence::closed_from_vertices(&vs), ring(3));
        assert_eq!(ArcSequence::from_vertices(&vs), seq(&[(1, 2), (2, 3)]));
    }
}
