//! Small subsets of `[n] = {1, .., n}` packed into a bitmask.
//!
//! Element `i` (1-based) lives in bit `i - 1`. Ground sets are limited to 64
//! elements, far beyond anything the enumeration code can reach.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds a subset from 1-based indices. Panics on index 0 or > 64.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            assert!(
                (1..=MAX_GROUND).contains(&i),
                "subset index {i} out of range"
            );
            bits |= 1 << (i - 1);
        }
        Subset(bits)
    }

    /// The cyclic interval `{start, start+1, .., start+len-1}` reduced into `[n]`.
    pub fn cyclic_interval(start: usize, len: usize, n: usize) -> Self {
        Subset::from_indices((0..len).map(|d| (start - 1 + d) % n + 1))
    }

    /// `[n]` itself.
    pub fn full(n: usize) -> Self {
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_GROUND).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1 << (i - 1)))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order, 1-based.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compact label: digits concatenated (`"13"`) when every element is a
    /// single digit, comma separated otherwise.
    pub fn label(self) -> String {
        let elems = self.to_vec();
        if elems.iter().all(|&e| e < 10) {
            elems.iter().map(|e| e.to_string()).collect()
        } else {
            elems
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Inverse of [`Subset::label`].
    pub fn parse_label(s: &str) -> Option<Subset> {
        let s = s.trim();
        if s.is_empty() {
            return Some(Subset::EMPTY);
        }
        let parts: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse().ok())
                .collect::<Option<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()?
        };
        if parts.iter().any(|&p| p == 0 || p > MAX_GROUND) {
            return None;
        }
        Some(Subset::from_indices(parts))
    }

    /// Image under `x -> x + shift (mod n)`, representatives in `1..=n`.
    pub fn rotate(self, shift: isize, n: usize) -> Subset {
        let n_i = n as isize;
        Subset::from_indices(
            self.iter()
                .map(|x| ((x as isize - 1 + shift).rem_euclid(n_i) + 1) as usize),
        )
    }
}

impl Ord for Subset {
    /// Size first, then lexicographic on the sorted element lists.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            o => return o,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        if v.iter().any(|&i| i == 0 || i > MAX_GROUND) {
            return Err(serde::de::Error::custom(
                "subset element out of range 1..=64",
            ));
        }
        Ok(Subset::from_indices(v))
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }
}

/// All `k`-element subsets of `[n]`, in increasing bitmask order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    assert!(n <= MAX_GROUND);
    let mut state = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    std::iter::from_fn(move || {
        let cur = state?;
        state = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let next = (((r ^ cur) >> 2) / c) | r;
                (next <= limit && next.count_ones() as usize == k).then_some(next)
            }
        };
        Some(Subset(cur))
    })
}

/// Binomial coefficient as `u128`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_subsets_counts() {
        for n in 0..=8 {
            for k in 0..=n + 1 {
                let all: Vec<_> = k_subsets(n, k).collect();
                assert_eq!(all.len() as u128, binomial(n, k), "n={n} k={k}");
                assert!(all
                    .iter()
                    .all(|s| s.len() == k && s.is_subset_of(Subset::full(n))));
            }
        }
    }

    #[test]
    fn ordering_is_lexicographic_within_a_size() {
        let mut v: Vec<Subset> = k_subsets(4, 2).collect();
        v.sort();
        let labels: Vec<String> = v.iter().map(|s| s.label()).collect();
        assert_eq!(labels, ["12", "13", "14", "23", "24", "34"]);
    }

    #[test]
    fn labels_round_trip() {
        for s in k_subsets(12, 3) {
            assert_eq!(Subset::parse_label(&s.label()), Some(s));
        }
        assert_eq!(
            Subset::parse_label("13"),
            Some(Subset::from_indices([1, 3]))
        );
        assert_eq!(Subset::parse_label("0"), None);
    }

    #[test]
    fn cyclic_interval_wraps() {
        assert_eq!(
            Subset::cyclic_interval(4, 2, 4),
            Subset::from_indices([4, 1])
        );
        assert_eq!(
            Subset::from_indices([1, 3]).rotate(1, 4),
            Subset::from_indices([2, 4])
        );
        assert_eq!(
            Subset::from_indices([1, 4]).rotate(-1, 4),
            Subset::from_indices([4, 3])
        );
    }
}
