//! Formula-free ground truth for closed-walk counts.
//!
//! On a tree the number of ways to continue a walk depends only on the
//! current distance from the root: at distance 0 every one of the δ
//! neighbours is farther away, and at distance `d >= 1` exactly one neighbour
//! is closer and δ−1 are farther. Two walks ending at the same distance
//! therefore have identically many continuations, so tracking the number of
//! walks per distance (rather than per vertex) loses nothing. A closed walk
//! is one that ends at distance 0. The tree itself is never built.
//!
//! [`weighted_dyck_count`] is a second, independent route: it enumerates
//! every Dyck shape and weights it by the number of walks realising it.

use num_traits::{pow, One, Zero};

use crate::error::{Error, Result};
use crate::rlseq::enumerate_sequences;
use crate::Count;

/// Number of walks of the current length ending at each distance from the
/// root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    counts: Vec<Count>,
    steps: usize,
}

impl DistanceProfile {
    /// The empty walk, sitting at the root.
    pub fn start() -> Self {
        DistanceProfile {
            counts: vec![Count::one()],
            steps: 0,
        }
    }

    pub fn counts(&self) -> &[Count] {
        &self.counts
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Walks of the current length that are back at the root.
    pub fn at_root(&self) -> &Count {
        &self.counts[0]
    }

    /// Extends every walk by one step on the δ-regular tree.
    pub fn step(&self, delta: u64) -> DistanceProfile {
        let outward = Count::from(delta.saturating_sub(1));
        let mut next = vec![Count::zero(); self.counts.len() + 1];
        for (d, c) in self.counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d == 0 {
                next[1] += c * delta;
            } else {
                next[d + 1] += c * &outward;
                next[d - 1] += c;
            }
        }
        DistanceProfile {
            counts: next,
            steps: self.steps + 1,
        }
    }

    /// After `s` steps no walk can be farther than `s` or at a distance of
    /// the wrong parity.
    pub fn satisfies_parity(&self) -> bool {
        self.counts
            .iter()
            .enumerate()
            .all(|(d, c)| c.is_zero() || (d <= self.steps && (self.steps - d).is_multiple_of(2)))
    }
}

/// Closed walks of arbitrary total length `len` (zero when `len` is odd).
pub fn dp_closed_walks(len: usize, delta: u64) -> Result<Count> {
    if delta == 0 {
        return Err(Error::Domain("degree delta must be at least 1".into()));
    }
    let mut profile = DistanceProfile::start();
    for _ in 0..len {
        profile = profile.step(delta);
    }
    Ok(profile.at_root().clone())
}

/// Closed walks of length `2n`.
pub fn dp_walk_count(n: usize, delta: u64) -> Result<Count> {
    dp_closed_walks(2 * n, delta)
}

/// `sum over Dyck shapes of δ^k (δ−1)^{n−k}`, `k` being the component count.
pub fn weighted_dyck_count(n: usize, delta: u64, cap: usize) -> Result<Count> {
    if n == 0 || delta == 0 {
        return Err(Error::Domain(
            "weighted enumeration needs n >= 1 and delta >= 1".into(),
        ));
    }
    let mut by_components = vec![0u64; n + 1];
    for seq in enumerate_sequences(n, cap)? {
        by_components[seq.component_count()] += 1;
    }
    Ok(by_components
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &shapes)| {
            pow(Count::from(delta), k) * pow(Count::from(delta - 1), n - k) * shapes
        })
        .sum())
}

/// Closed walks of length `2n` split by the number of returns to the root.
///
/// Entry `k` (for `0 <= k <= n`) counts walks meeting the root exactly `k`
/// times after the start; entry 0 is always zero for `n >= 1`.
pub fn dp_return_profile(n: usize, delta: u64) -> Result<Vec<Count>> {
    if n == 0 || delta == 0 {
        return Err(Error::Domain(
            "return profile needs n >= 1 and delta >= 1".into(),
        ));
    }
    let outward = Count::from(delta - 1);
    // state[d][r]: walks at distance d with r returns so far.
    let mut state: Vec<Vec<Count>> = vec![vec![Count::zero(); n + 1]; 1];
    state[0][0] = Count::one();
    for _ in 0..2 * n {
        let mut next = vec![vec![Count::zero(); n + 1]; state.len() + 1];
        for (d, row) in state.iter().enumerate() {
            for (r, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if d == 0 {
                    next[1][r] += c * delta;
                } else {
                    next[d + 1][r] += c * &outward;
                    let returns = if d == 1 { r + 1 } else { r };
                    next[d - 1][returns] += c;
                }
            }
        }
        state = next;
    }
    Ok(state.swap_remove(0))
}
