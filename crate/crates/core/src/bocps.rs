//! Minimal integer ratios by cycle-permutation return time.
//!
//! Put `m1 + m2` arcs on a cycle and swap the first `m1` with the remaining
//! `m2`. Track one position `s`: inside the prefix it moves by `+m2`, inside
//! the suffix by `-m1`. The first return of `s` to its start counts `k1`
//! forward and `k2` backward moves with `k1 * m2 == k2 * m1`, and that pair is
//! minimal. From it follow `gcd = m1 / k1` and `lcm = m1 * k2`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BocpsResult {
    pub k1: u64,
    pub k2: u64,
    /// Iterations executed; always `k1 + k2`.
    pub loops: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BocpsOptions {
    /// Cap iterations at `max(m1, m2) / 2` when that exceeds `min(m1, m2)`,
    /// instead of `m1 + m2`. The search fails with [`Error::Invariant`] when
    /// the cursor has not returned within the cap, which happens whenever
    /// `k1 + k2` is larger than it.
    pub half_max_cap: bool,
}

pub fn bocps(m1: u64, m2: u64) -> Result<BocpsResult> {
    bocps_with(m1, m2, BocpsOptions::default())
}

pub fn bocps_with(m1: u64, m2: u64, opts: BocpsOptions) -> Result<BocpsResult> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::param("bocps inputs must be positive"));
    }
    let n = m1.checked_add(m2).ok_or(Error::Overflow)?;
    let half = m1.max(m2) / 2;
    let cap = if opts.half_max_cap && half > m1.min(m2) { half } else { n };

    let (mut s, mut k1, mut k2) = (1u64, 0u64, 0u64);
    for loops in 1..=cap {
        if s > m1 {
            s -= m1;
            k2 += 1;
        } else {
            // s <= m1, so s + m2 <= m1 + m2 which already fits
            s += m2;
            k1 += 1;
        }
        if s == 1 {
            return Ok(BocpsResult { k1, k2, loops });
        }
    }
    Err(Error::Invariant(alloc::format!("cursor did not return within {cap} iterations")))
}

pub fn gcd_of(m1: u64, m2: u64) -> Result<u64> {
    let r = bocps(m1, m2)?;
    Ok(m1 / r.k1)
}

pub fn lcm_of(m1: u64, m2: u64) -> Result<u64> {
    let r = bocps(m1, m2)?;
    m1.checked_mul(r.k2).ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euclid(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }

    #[test]
    fn four_six() {
        let r = bocps(4, 6).unwrap();
        assert_eq!((r.k1, r.k2), (2, 3));
        assert_eq!(r.loops, 5);
        assert_eq!(gcd_of(4, 6).unwrap(), 2);
        assert_eq!(lcm_of(4, 6).unwrap(), 12);
    }

    #[test]
    fn unit_and_coprime() {
        assert_eq!(bocps(1, 1).unwrap(), BocpsResult { k1: 1, k2: 1, loops: 2 });
        assert_eq!(bocps(7, 5).unwrap(), BocpsResult { k1: 7, k2: 5, loops: 12 });
        assert_eq!(lcm_of(3, 5).unwrap(), 15);
        assert_eq!(gcd_of(1, 17).unwrap(), 1);
        assert_eq!(gcd_of(9, 9).unwrap(), 9);
        assert_eq!(lcm_of(9, 1).unwrap(), 9);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(bocps(0, 3).is_err());
        assert!(gcd_of(3, 0).is_err());
    }

    #[test]
    fn lcm_overflow_is_reported() {
        let g = 1u64 << 60;
        assert_eq!(bocps(3 * g, 7 * g).unwrap().loops, 10);
        assert_eq!(lcm_of(3 * g, 7 * g), Err(Error::Overflow));
    }

    #[test]
    fn scaling_keeps_loop_count() {
        for (s, t) in [(2, 3), (5, 7), (1, 4)] {
            let base = bocps(s, t).unwrap();
            for a in 1..20 {
                assert_eq!(bocps(a * s, a * t).unwrap(), base);
            }
        }
    }

    #[test]
    fn half_max_cap_only_when_it_suffices() {
        // k1 + k2 = 3 + 1 = 4 <= 60 / 2
        let r = bocps_with(60, 20, BocpsOptions { half_max_cap: true }).unwrap();
        assert_eq!((r.k1, r.k2), (3, 1));
        // coprime: 101 loops needed, cap is 50
        assert!(bocps_with(1, 100, BocpsOptions { half_max_cap: true }).is_err());
    }

    #[test]
    fn agrees_with_euclid_small_range() {
        for a in 1..=120u64 {
            for b in 1..=120u64 {
                let g = euclid(a, b);
                let r = bocps(a, b).unwrap();
                assert_eq!(r.k1 * b, r.k2 * a);
                assert_eq!(euclid(r.k1, r.k2), 1);
                assert_eq!(gcd_of(a, b).unwrap(), g);
                assert_eq!(lcm_of(a, b).unwrap(), a / g * b);
                assert!(r.loops <= a + b);
            }
        }
    }
}
