//! Balanced legal RL-sequences (Dyck paths) and their component structure.
//!
//! A closed walk from the root of a tree is recorded as a word over `R`
//! (step away from the root) and `L` (step toward it). The word is balanced
//! and legal: equal numbers of each letter, and no prefix with more `L` than
//! `R`. A component is a maximal factor that touches height zero only at its
//! two ends, so `k` components means `k` returns to the root.
//!
//! `S(n, k)` is the number of such words of length `2n` with exactly `k`
//! components. It satisfies
//!
//! ```text
//! S(n, k) = sum_{j=k-1}^{n-1} S(n-1, j),        S(0, 0) = 1
//! ```
//!
//! which is witnessed by the bijection [`delete_component_pair`] /
//! [`insert_component_pair`]: deleting the outer `R ... L` of the `i`-th
//! component of a `k`-component word of length `2n` gives a word of length
//! `2(n-1)` with at least `k-1` components, and every such word arises
//! exactly once.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::triangles::{catalan_entry, rows_to_csv, rows_to_json};
use crate::Count;

/// Longest word an [`RLSequence`] can hold.
pub const MAX_LEN: usize = 128;

/// Default semi-length cap for exhaustive enumeration (`C_14 = 2_674_440`).
pub const DEFAULT_ENUM_CAP: usize = 14;

/// A balanced legal word over `{R, L}`, packed one bit per step (`R = 1`).
///
/// Bit `p` holds step `p`, counting from the start of the word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RLSequence {
    bits: u128,
    len: u8,
}

/// Checks a raw word without constructing a sequence.
///
/// Errors only on characters outside `{R, L}`.
pub fn is_balanced_legal(word: &str) -> Result<bool> {
    let mut height: i64 = 0;
    let mut legal = true;
    for (position, ch) in word.chars().enumerate() {
        match ch {
            'R' => height += 1,
            'L' => height -= 1,
            found => return Err(Error::InvalidAlphabet { found, position }),
        }
        if height < 0 {
            legal = false;
        }
    }
    Ok(legal && height == 0)
}

fn mask(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

impl RLSequence {
    pub fn empty() -> Self {
        RLSequence { bits: 0, len: 0 }
    }

    /// `(RL)^n`, the unique sequence with `n` components.
    pub fn zigzag(n: usize) -> Self {
        let mut seq = RLSequence::empty();
        for _ in 0..n {
            seq = seq.concat(&RLSequence { bits: 1, len: 2 });
        }
        seq
    }

    /// Word length `2n`.
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn semi_length(&self) -> usize {
        self.len() / 2
    }

    /// `true` for `R`, `false` for `L`.
    pub fn step(&self, position: usize) -> bool {
        (self.bits >> position) & 1 == 1
    }

    fn slice(&self, start: usize, end: usize) -> RLSequence {
        let len = end - start;
        RLSequence {
            bits: (self.bits >> start) & mask(len),
            len: len as u8,
        }
    }

    fn concat(&self, other: &RLSequence) -> RLSequence {
        let len = self.len() + other.len();
        assert!(len <= MAX_LEN, "concatenation exceeds {MAX_LEN} steps");
        RLSequence {
            bits: self.bits | (other.bits << self.len()),
            len: len as u8,
        }
    }

    /// `R` + `inner` + `L`.
    fn wrap(inner: &RLSequence) -> RLSequence {
        RLSequence { bits: 1, len: 1 }
            .concat(inner)
            .concat(&RLSequence { bits: 0, len: 1 })
    }

    /// Half-open step ranges of each component, in order.
    fn component_ranges(&self) -> Vec<(usize, usize)> {
        let mut ranges = Vec::new();
        let mut height = 0usize;
        let mut start = 0;
        for p in 0..self.len() {
            if self.step(p) {
                height += 1;
            } else {
                height -= 1;
                if height == 0 {
                    ranges.push((start, p + 1));
                    start = p + 1;
                }
            }
        }
        ranges
    }

    /// Number of returns to height zero.
    pub fn component_count(&self) -> usize {
        let mut height = 0u32;
        let mut count = 0;
        for p in 0..self.len() {
            if self.step(p) {
                height += 1;
            } else {
                height -= 1;
                if height == 0 {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn components(&self) -> ComponentDecomposition {
        ComponentDecomposition {
            components: self
                .component_ranges()
                .into_iter()
                .map(|(s, e)| self.slice(s, e))
                .collect(),
        }
    }
}

impl FromStr for RLSequence {
    type Err = Error;

    fn from_str(word: &str) -> Result<Self> {
        if !is_balanced_legal(word)? {
            return Err(Error::NotBalancedLegal(word.to_string()));
        }
        let len = word.len();
        if len > MAX_LEN {
            return Err(Error::SequenceTooLong { len, max: MAX_LEN });
        }
        let bits = word
            .bytes()
            .enumerate()
            .filter(|&(_, b)| b == b'R')
            .fold(0u128, |acc, (p, _)| acc | (1u128 << p));
        Ok(RLSequence {
            bits,
            len: len as u8,
        })
    }
}

impl fmt::Display for RLSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.len() {
            f.write_str(if self.step(p) { "R" } else { "L" })?;
        }
        Ok(())
    }
}

/// A sequence split at every return to the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    components: Vec<RLSequence>,
}

impl ComponentDecomposition {
    pub fn components(&self) -> &[RLSequence] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn concat(&self) -> RLSequence {
        self.components
            .iter()
            .fold(RLSequence::empty(), |acc, c| acc.concat(c))
    }

    fn concat_range(&self, range: std::ops::Range<usize>) -> RLSequence {
        self.components[range]
            .iter()
            .fold(RLSequence::empty(), |acc, c| acc.concat(c))
    }
}

/// Parses and decomposes a raw word.
pub fn components(word: &str) -> Result<ComponentDecomposition> {
    Ok(word.parse::<RLSequence>()?.components())
}

/// All balanced legal sequences of semi-length `n`, lexicographic with `R < L`.
pub fn enumerate_sequences(n: usize, cap: usize) -> Result<Vec<RLSequence>> {
    if n > cap || 2 * n > MAX_LEN {
        return Err(Error::EnumerationCap { n, cap });
    }
    let mut out = Vec::new();
    extend_paths(n, 0, 0, RLSequence::empty(), &mut out);
    Ok(out)
}

fn extend_paths(n: usize, ups: usize, downs: usize, prefix: RLSequence, out: &mut Vec<RLSequence>) {
    if downs == n {
        out.push(prefix);
        return;
    }
    let p = prefix.len();
    if ups < n {
        let next = RLSequence {
            bits: prefix.bits | (1u128 << p),
            len: prefix.len + 1,
        };
        extend_paths(n, ups + 1, downs, next, out);
    }
    if downs < ups {
        let next = RLSequence {
            bits: prefix.bits,
            len: prefix.len + 1,
        };
        extend_paths(n, ups, downs + 1, next, out);
    }
}

/// Component-count statistics `S(m, k)` for `0 <= k <= m <= n`.
///
/// Row `m` stores `k = 0..=m`; the `k = 0` column is `1` at `m = 0` (the empty
/// sequence) and `0` elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct STable {
    rows: Vec<Vec<Count>>,
}

impl STable {
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Result<&Count> {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .ok_or(Error::OutOfTriangle { n, k })
    }

    /// `sum_{j >= k-1} S(n, j)`: sequences of length `2n` with at least `k-1`
    /// components. Valid for `1 <= k <= n + 1`.
    pub fn cumulative(&self, n: usize, k: usize) -> Result<Count> {
        if k == 0 || k > n + 1 {
            return Err(Error::OutOfTriangle { n, k });
        }
        let row = self.rows.get(n).ok_or(Error::OutOfTriangle { n, k })?;
        Ok(row[k - 1..].iter().sum())
    }

    /// Published rows: `[1]` for `n = 0`, then `S(n, 1..=n)`.
    pub fn display_rows(&self) -> Vec<Vec<Count>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                if n == 0 {
                    row.clone()
                } else {
                    row[1..].to_vec()
                }
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        rows_to_csv(&self.display_rows())
    }

    pub fn to_json(&self) -> String {
        rows_to_json(&self.display_rows())
    }
}

/// Brute-force `S` table from exhaustive enumeration.
pub fn s_table_enumerated(n: usize, cap: usize) -> Result<STable> {
    let mut rows = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = vec![Count::zero(); m + 1];
        for seq in enumerate_sequences(m, cap)? {
            row[seq.component_count()] += 1u32;
        }
        rows.push(row);
    }
    Ok(STable { rows })
}

/// `S` table from the component recurrence.
pub fn s_table_recurrence(n: usize) -> STable {
    let mut rows: Vec<Vec<Count>> = vec![vec![Count::one()]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let mut row = vec![Count::zero(); m + 1];
        // Suffix sums of the previous row: row[k] = sum_{j >= k-1} prev[j].
        let mut suffix = Count::zero();
        for k in (1..=m).rev() {
            suffix += &prev[k - 1];
            row[k] = suffix.clone();
        }
        rows.push(row);
    }
    STable { rows }
}

/// `S(n, k) = C(n-1, n-k)` for `1 <= k <= n`.
pub fn s_closed_form(n: usize, k: usize) -> Result<Count> {
    if k == 0 || k > n {
        return Err(Error::OutOfTriangle { n, k });
    }
    catalan_entry(n - 1, n - k)
}

/// `sum_{j >= k-1} S(n, j)` for `1 <= k <= n + 1`.
pub fn cumulative_s(n: usize, k: usize) -> Result<Count> {
    s_table_recurrence(n).cumulative(n, k)
}

/// Removes the first and last step of the `i`-th component (1-based).
pub fn delete_component_pair(seq: &RLSequence, i: usize) -> Result<RLSequence> {
    let ranges = seq.component_ranges();
    if i == 0 || i > ranges.len() {
        return Err(Error::ComponentIndex {
            index: i,
            count: ranges.len(),
        });
    }
    let (start, end) = ranges[i - 1];
    Ok(seq
        .slice(0, start)
        .concat(&seq.slice(start + 1, end - 1))
        .concat(&seq.slice(end, seq.len())))
}

/// Inverse of [`delete_component_pair`] into the `k`-component sequences.
///
/// With `alpha = C_1 ... C_j`, wraps `C_i ... C_{j-k+i}` in a new `R ... L`
/// so the result has exactly `k` components. Requires `1 <= i <= k` and
/// `j >= k - 1`.
pub fn insert_component_pair(alpha: &RLSequence, i: usize, k: usize) -> Result<RLSequence> {
    let parts = alpha.components();
    let j = parts.len();
    if i == 0 || i > k {
        return Err(Error::InsertPrecondition(format!(
            "component index {i} must satisfy 1 <= i <= k = {k}"
        )));
    }
    if j + 1 < k {
        return Err(Error::InsertPrecondition(format!(
            "sequence has {j} components, fewer than k - 1 = {}",
            k - 1
        )));
    }
    if alpha.len() + 2 > MAX_LEN {
        return Err(Error::SequenceTooLong {
            len: alpha.len() + 2,
            max: MAX_LEN,
        });
    }
    let last_wrapped = j + i - k; // 1-based index of the last wrapped component
    let head = parts.concat_range(0..i - 1);
    let wrapped = RLSequence::wrap(&parts.concat_range(i - 1..last_wrapped));
    let tail = parts.concat_range(last_wrapped..j);
    Ok(head.concat(&wrapped).concat(&tail))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> RLSequence {
        s.parse().unwrap()
    }

    fn words(seqs: &[RLSequence]) -> Vec<String> {
        seqs.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn balanced_legal_check() {
        assert_eq!(is_balanced_legal("RRLL"), Ok(true));
        assert_eq!(is_balanced_legal("RLLR"), Ok(false));
        assert_eq!(is_balanced_legal("RRL"), Ok(false));
        assert_eq!(is_balanced_legal(""), Ok(true));
        assert_eq!(
            is_balanced_legal("RXL"),
            Err(Error::InvalidAlphabet {
                found: 'X',
                position: 1
            })
        );
        assert!(matches!(
            "RLLR".parse::<RLSequence>(),
            Err(Error::NotBalancedLegal(_))
        ));
    }

    #[test]
    fn too_long_rejected() {
        let word = "RL".repeat(65);
        assert!(matches!(
            word.parse::<RLSequence>(),
            Err(Error::SequenceTooLong { len: 130, .. })
        ));
        let longest = "R".repeat(64) + &"L".repeat(64);
        assert_eq!(longest.parse::<RLSequence>().unwrap().to_string(), longest);
    }

    #[test]
    fn decompositions() {
        let d = components("RRLLRL").unwrap();
        assert_eq!(words(d.components()), ["RRLL", "RL"]);
        assert_eq!(words(components("RLRLRL").unwrap().components()), ["RL"; 3]);
        assert_eq!(
            words(components("RRRLLL").unwrap().components()),
            ["RRRLLL"]
        );
        assert!(components("").unwrap().is_empty());
        assert!(components("RLL").is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            words(&enumerate_sequences(2, 14).unwrap()),
            ["RRLL", "RLRL"]
        );
        assert_eq!(words(&enumerate_sequences(0, 14).unwrap()), [""]);
        let three = enumerate_sequences(3, 14).unwrap();
        assert_eq!(
            words(&three),
            ["RRRLLL", "RRLRLL", "RRLLRL", "RLRRLL", "RLRLRL"]
        );
        let mut counts: Vec<usize> = three.iter().map(|s| s.component_count()).collect();
        counts.sort_unstable();
        assert_eq!(counts, [1, 1, 2, 2, 3]);
        assert_eq!(
            enumerate_sequences(15, 14),
            Err(Error::EnumerationCap { n: 15, cap: 14 })
        );
    }

    #[test]
    fn s_tables() {
        let e = s_table_enumerated(3, 14).unwrap();
        assert_eq!(e.get(1, 1).unwrap(), &Count::from(1u32));
        assert_eq!(e.get(2, 1).unwrap(), &Count::from(1u32));
        assert_eq!(e.get(2, 2).unwrap(), &Count::from(1u32));
        assert_eq!(e.get(3, 1).unwrap(), &Count::from(2u32));
        assert_eq!(e.get(3, 2).unwrap(), &Count::from(2u32));
        assert_eq!(e.get(3, 3).unwrap(), &Count::from(1u32));
        let r = s_table_recurrence(4);
        assert_eq!(r.get(3, 2).unwrap(), &Count::from(2u32));
        assert_eq!(r.rows[4].iter().sum::<Count>(), Count::from(14u32));
        for m in 1..=4 {
            assert_eq!(r.get(m, m).unwrap(), &Count::one());
        }
        assert_eq!(s_closed_form(3, 1).unwrap(), Count::from(2u32));
        assert_eq!(s_closed_form(4, 2).unwrap(), Count::from(5u32));
        assert_eq!(s_closed_form(7, 7).unwrap(), Count::one());
        assert!(s_closed_form(3, 0).is_err());
        assert!(s_closed_form(3, 4).is_err());
        assert_eq!(r.to_csv(), "1\n1\n1,1\n2,2,1\n5,5,3,1\n");
    }

    #[test]
    fn cumulative() {
        assert_eq!(cumulative_s(0, 1).unwrap(), Count::one());
        assert_eq!(cumulative_s(2, 2).unwrap(), Count::from(2u32));
        assert_eq!(cumulative_s(3, 3).unwrap(), Count::from(3u32));
        assert!(cumulative_s(2, 0).is_err());
        assert!(cumulative_s(2, 4).is_err());
    }

    #[test]
    fn deletion() {
        let d = |s: &str, i| delete_component_pair(&seq(s), i).unwrap().to_string();
        assert_eq!(d("RRLL", 1), "RL");
        assert_eq!(d("RLRL", 1), "RL");
        assert_eq!(d("RRLLRL", 1), "RLRL");
        assert_eq!(d("RRLLRL", 2), "RRLL");
        assert_eq!(
            delete_component_pair(&seq("RRLL"), 2),
            Err(Error::ComponentIndex { index: 2, count: 1 })
        );
        assert!(delete_component_pair(&seq("RL"), 0).is_err());
    }

    #[test]
    fn insertion() {
        let ins = |s: &str, i, k| insert_component_pair(&seq(s), i, k).unwrap().to_string();
        assert_eq!(ins("RLRL", 1, 2), "RRLLRL");
        assert_eq!(ins("", 1, 1), "RL");
        assert_eq!(ins("RL", 1, 1), "RRLL");
        assert_eq!(ins("RLRL", 2, 2), "RLRRLL");
        assert_eq!(ins("RLRL", 2, 3), "RLRLRL");
        assert!(insert_component_pair(&seq("RL"), 1, 3).is_err());
        assert!(insert_component_pair(&seq("RL"), 3, 2).is_err());
        assert!(insert_component_pair(&seq("RL"), 0, 1).is_err());
    }
}
