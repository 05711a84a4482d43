//! Decorated permutations, Grassmann necklaces, positroids, and the maps
//! between them.
//!
//! Everything here is 1-based: a decorated permutation on `[n]` sends `i` to
//! `w(i)` in `1..=n`, and fixed points carry a color in `{0, 1}`. The cyclic
//! order "starting at `i`" is `i < i+1 < .. < n < 1 < .. < i-1`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset, MAX_GROUND};

/// Position of `x` in the cyclic order of `[n]` starting at `start` (0-based).
fn cyclic_rank(x: usize, start: usize, n: usize) -> usize {
    (x + n - start) % n
}

/// Subset rewritten in cyclic ranks relative to `start`, as a bitmask.
fn rotated_bits(s: Subset, start: usize, n: usize) -> u64 {
    s.iter()
        .fold(0u64, |acc, x| acc | 1 << cyclic_rank(x, start, n))
}

/// Gale comparison of two rank bitmasks of equal popcount.
fn gale_leq_bits(a: u64, b: u64) -> bool {
    let (mut a, mut b) = (a, b);
    while a != 0 {
        let ia = a.trailing_zeros();
        let ib = b.trailing_zeros();
        if ia > ib {
            return false;
        }
        a &= a - 1;
        b &= b - 1;
    }
    true
}

/// Gale order `I ⪯ J` in the cyclic order of `[n]` starting at `start`.
pub fn gale_leq(i: Subset, j: Subset, start: usize, n: usize) -> Result<bool> {
    if i.len() != j.len() {
        return Err(Error::SizeMismatch(format!(
            "|{i}| = {} but |{j}| = {}",
            i.len(),
            j.len()
        )));
    }
    check_ground(i.union(j), n)?;
    check_start(start, n)?;
    Ok(gale_leq_bits(
        rotated_bits(i, start, n),
        rotated_bits(j, start, n),
    ))
}

/// Schubert matroid `{J : I ⪯ J}` in the cyclic order starting at `start`.
pub fn schubert_matroid(i: Subset, start: usize, n: usize) -> Result<BTreeSet<Subset>> {
    check_ground(i, n)?;
    check_start(start, n)?;
    let ib = rotated_bits(i, start, n);
    Ok(k_subsets(n, i.len())
        .filter(|j| gale_leq_bits(ib, rotated_bits(*j, start, n)))
        .collect())
}

/// The unique Gale-minimal element of `bases` in the order starting at `start`.
///
/// Matroids always have one; anything else is reported as `NotMatroid`.
pub fn gale_minimum(bases: &BTreeSet<Subset>, start: usize, n: usize) -> Result<Subset> {
    let mut keyed: Vec<(u64, Subset)> = bases
        .iter()
        .map(|&b| (rotated_bits(b, start, n), b))
        .collect();
    // Smallest in colex order on ranks is the only possible Gale minimum.
    let (min_bits, min) = *keyed
        .iter()
        .min_by(|x, y| lex_rank_cmp(x.0, y.0))
        .ok_or(Error::EmptyInput)?;
    keyed.retain(|(b, _)| !gale_leq_bits(min_bits, *b));
    match keyed.first() {
        None => Ok(min),
        Some((_, other)) => Err(Error::NotMatroid(format!(
            "no unique Gale minimum starting at {start}: {min} and {other} are incomparable"
        ))),
    }
}

/// Lexicographic comparison of sorted rank lists.
fn lex_rank_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return std::cmp::Ordering::Equal;
    }
    let low = diff & diff.wrapping_neg();
    if a & low != 0 {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Greater
    }
}

fn check_ground(s: Subset, n: usize) -> Result<()> {
    if n > MAX_GROUND || !s.is_subset_of(Subset::full(n)) {
        return Err(Error::SizeMismatch(format!("{s} is not a subset of [{n}]")));
    }
    Ok(())
}

fn check_start(start: usize, n: usize) -> Result<()> {
    if !(1..=n).contains(&start) {
        return Err(Error::SizeMismatch(format!(
            "start {start} outside [1, {n}]"
        )));
    }
    Ok(())
}

/// Brute-force basis exchange: for all `A, B` and `a ∈ A∖B` there is
/// `b ∈ B∖A` with `A - a + b` a basis.
pub fn is_matroid(bases: &BTreeSet<Subset>) -> Result<bool> {
    let k = bases.iter().next().ok_or(Error::EmptyInput)?.len();
    if bases.iter().any(|b| b.len() != k) {
        return Err(Error::SizeMismatch("bases have different sizes".into()));
    }
    let set: HashSet<Subset> = bases.iter().copied().collect();
    for &a in bases {
        for &b in bases {
            for x in a.difference(b).iter() {
                let exchanged = b
                    .difference(a)
                    .iter()
                    .any(|y| set.contains(&a.without(x).with(y)));
                if !exchanged {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Decorated permutations
// ---------------------------------------------------------------------------

/// A permutation of `[n]` whose fixed points are colored 0 or 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPermutation {
    images: Vec<usize>,
    colors: Vec<Option<u8>>,
}

impl DecoratedPermutation {
    /// `images[i-1] = w(i)`; `colors` maps each fixed point to 0 or 1.
    pub fn new(images: Vec<usize>, colors: &BTreeMap<usize, u8>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_GROUND {
            return Err(Error::InvalidPermutation(format!("size {n} unsupported")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if !(1..=n).contains(&x) || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation of [{n}]"
                )));
            }
        }
        let mut cols = vec![None; n];
        for (i, &x) in images.iter().enumerate() {
            if x == i + 1 {
                let c = *colors.get(&(i + 1)).ok_or_else(|| {
                    Error::InvalidPermutation(format!("fixed point {} has no color", i + 1))
                })?;
                if c > 1 {
                    return Err(Error::InvalidPermutation(format!(
                        "color {c} of fixed point {} not 0/1",
                        i + 1
                    )));
                }
                cols[i] = Some(c);
            }
        }
        if let Some(&bad) = colors
            .keys()
            .find(|&&i| i == 0 || i > n || images[i - 1] != i)
        {
            return Err(Error::InvalidPermutation(format!(
                "color given for non-fixed point {bad}"
            )));
        }
        Ok(DecoratedPermutation {
            images,
            colors: cols,
        })
    }

    /// Like [`DecoratedPermutation::new`] with every fixed point getting `color`.
    pub fn with_uniform_color(images: Vec<usize>, color: u8) -> Result<Self> {
        let colors = images
            .iter()
            .enumerate()
            .filter(|(i, &x)| x == i + 1)
            .map(|(i, _)| (i + 1, color))
            .collect();
        Self::new(images, &colors)
    }

    /// `w(i) = i + k (mod n)`; the identity is colored 0 for `k = 0` and 1 for `k = n`.
    pub fn shift(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidPermutation(format!(
                "shift {k} larger than n = {n}"
            )));
        }
        let images = (1..=n).map(|i| (i - 1 + k) % n + 1).collect();
        Self::with_uniform_color(images, u8::from(k == n))
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)`, 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Color of `i` if it is a fixed point.
    pub fn color(&self, i: usize) -> Option<u8> {
        self.colors[i - 1]
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.image(i) == i).collect()
    }

    pub fn inverse_image(&self, j: usize) -> usize {
        self.images.iter().position(|&x| x == j).expect("bijection") + 1
    }

    /// Number of elements in any necklace set.
    pub fn helicity(&self) -> usize {
        self.necklace().k()
    }

    /// `J_i = {j : w⁻¹(j) comes after j in the order starting at i} ∪ {fixed points colored 1}`.
    pub fn necklace(&self) -> GrassmannNecklace {
        let n = self.n();
        let inv: Vec<usize> = {
            let mut inv = vec![0; n];
            for (i, &x) in self.images.iter().enumerate() {
                inv[x - 1] = i + 1;
            }
            inv
        };
        let ones = Subset::from_indices((1..=n).filter(|&i| self.colors[i - 1] == Some(1)));
        let sets = (1..=n)
            .map(|i| {
                let moved =
                    (1..=n).filter(|&j| cyclic_rank(inv[j - 1], i, n) > cyclic_rank(j, i, n));
                Subset::from_indices(moved).union(ones)
            })
            .collect();
        GrassmannNecklace::new(n, sets).expect("permutation necklace satisfies the step rule")
    }

    /// Bounded affine permutation: `f(i) ∈ [i, i+n]`, `f(i) ≡ w(i) mod n`,
    /// fixed points sent to `i` (color 0) or `i + n` (color 1).
    pub fn bounded_affine(&self) -> Vec<i64> {
        let n = self.n() as i64;
        (1..=self.n())
            .map(|i| {
                let w = self.image(i) as i64;
                let i64_ = i as i64;
                match self.colors[i - 1] {
                    Some(1) => i64_ + n,
                    Some(_) => i64_,
                    None if w > i64_ => w,
                    None => w + n,
                }
            })
            .collect()
    }

    /// Inverse of [`DecoratedPermutation::bounded_affine`].
    pub fn from_bounded_affine(f: &[i64]) -> Result<Self> {
        let n = f.len() as i64;
        let mut images = Vec::with_capacity(f.len());
        let mut colors = BTreeMap::new();
        for (idx, &fi) in f.iter().enumerate() {
            let i = idx as i64 + 1;
            if fi < i || fi > i + n {
                return Err(Error::InvalidPermutation(format!(
                    "f({i}) = {fi} outside [{i}, {}]",
                    i + n
                )));
            }
            let w = ((fi - 1).rem_euclid(n) + 1) as usize;
            if fi == i {
                colors.insert(i as usize, 0);
            } else if fi == i + n {
                colors.insert(i as usize, 1);
            }
            images.push(w);
        }
        Self::new(images, &colors)
    }

    /// Inversions of the bounded affine permutation:
    /// `#{(i, j) : i ∈ [n], j ∈ Z, i < j, f(i) > f(j)}`.
    pub fn affine_length(&self) -> usize {
        affine_length(&self.bounded_affine())
    }

    /// Dimension `k(n-k) - ℓ(f)` of the positroid cell.
    pub fn cell_dimension(&self) -> usize {
        let n = self.n();
        let k = self.helicity();
        k * (n - k) - self.affine_length()
    }

    /// Every decorated permutation of `[n]`, in a fixed deterministic order.
    pub fn all(n: usize) -> Vec<DecoratedPermutation> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (1..=n).collect();
        permutations(&mut perm, 0, &mut |p| {
            let fixed: Vec<usize> = (1..=n).filter(|&i| p[i - 1] == i).collect();
            for mask in 0u32..(1 << fixed.len()) {
                let colors = fixed
                    .iter()
                    .enumerate()
                    .map(|(b, &i)| (i, ((mask >> b) & 1) as u8))
                    .collect();
                out.push(DecoratedPermutation::new(p.to_vec(), &colors).expect("valid"));
            }
        });
        out.sort();
        out
    }
}

pub(crate) fn affine_length(f: &[i64]) -> usize {
    let n = f.len() as i64;
    let at = |j: i64| -> i64 {
        let r = (j - 1).rem_euclid(n);
        f[r as usize] + (j - 1 - r)
    };
    let mut count = 0;
    for i in 1..=n {
        let fi = f[(i - 1) as usize];
        for j in (i + 1)..fi.max(i + 1) {
            if fi > at(j) {
                count += 1;
            }
        }
    }
    count
}

fn permutations(v: &mut Vec<usize>, start: usize, visit: &mut dyn FnMut(&[usize])) {
    if start == v.len() {
        visit(v);
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        permutations(v, start + 1, visit);
        v.swap(start, i);
    }
}

impl fmt::Debug for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 1..=self.n() {
            if i > 1 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.image(i))?;
            if let Some(c) = self.color(i) {
                write!(f, "{}", if c == 1 { "•" } else { "∘" })?;
            }
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct PermutationJson {
    n: usize,
    w: Vec<usize>,
    #[serde(default)]
    colors: BTreeMap<String, u8>,
}

impl Serialize for DecoratedPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let colors = (1..=self.n())
            .filter_map(|i| self.color(i).map(|c| (i.to_string(), c)))
            .collect();
        PermutationJson {
            n: self.n(),
            w: self.images.clone(),
            colors,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DecoratedPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PermutationJson::deserialize(d)?;
        if raw.n != raw.w.len() {
            return Err(serde::de::Error::custom(format!(
                "n = {} but w has {} entries",
                raw.n,
                raw.w.len()
            )));
        }
        let colors = raw
            .colors
            .iter()
            .map(|(k, &c)| k.parse::<usize>().map(|i| (i, c)))
            .collect::<std::result::Result<BTreeMap<_, _>, _>>()
            .map_err(serde::de::Error::custom)?;
        DecoratedPermutation::new(raw.w, &colors).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Grassmann necklaces
// ---------------------------------------------------------------------------

/// `(J_1, .., J_n)` with `J_{i+1} = J_i ∖ {i} ∪ {j}` or `J_{i+1} = J_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannNecklace {
    n: usize,
    k: usize,
    sets: Vec<Subset>,
}

impl GrassmannNecklace {
    pub fn new(n: usize, sets: Vec<Subset>) -> Result<Self> {
        if n == 0 || sets.len() != n {
            return Err(Error::InvalidNecklace(format!(
                "expected {n} sets, got {}",
                sets.len()
            )));
        }
        let k = sets[0].len();
        for (idx, s) in sets.iter().enumerate() {
            if s.len() != k || !s.is_subset_of(Subset::full(n)) {
                return Err(Error::InvalidNecklace(format!(
                    "J_{} = {s} is not a {k}-subset of [{n}]",
                    idx + 1
                )));
            }
        }
        for i in 1..=n {
            let cur = sets[i - 1];
            let next = sets[i % n];
            if cur == next {
                continue;
            }
            if !cur.contains(i) || !cur.without(i).is_subset_of(next) {
                return Err(Error::InvalidNecklace(format!(
                    "step rule fails at i = {i}: J_{i} = {cur}, J_{} = {next}",
                    i % n + 1
                )));
            }
        }
        Ok(GrassmannNecklace { n, k, sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `J_i`, 1-based.
    pub fn get(&self, i: usize) -> Subset {
        self.sets[i - 1]
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    /// The decorated permutation read off the step rule.
    pub fn permutation(&self) -> Result<DecoratedPermutation> {
        let n = self.n;
        let mut images = Vec::with_capacity(n);
        let mut colors = BTreeMap::new();
        for i in 1..=n {
            let cur = self.get(i);
            let next = self.get(i % n + 1);
            if cur == next {
                images.push(i);
                colors.insert(i, u8::from(cur.contains(i)));
            } else {
                let added = next.difference(cur);
                debug_assert_eq!(added.len(), 1);
                images.push(added.iter().next().expect("one new element"));
            }
        }
        DecoratedPermutation::new(images, &colors).map_err(|e| {
            Error::InvalidNecklace(format!("step rule does not give a permutation: {e}"))
        })
    }

    /// Oh's intersection of cyclically shifted Schubert matroids:
    /// `I` is a basis iff `J_i ⪯ I` in the order starting at `i`, for all `i`.
    pub fn positroid(&self) -> Positroid {
        let n = self.n;
        let keys: Vec<u64> = (1..=n).map(|i| rotated_bits(self.get(i), i, n)).collect();
        let bases = k_subsets(n, self.k)
            .filter(|s| (1..=n).all(|i| gale_leq_bits(keys[i - 1], rotated_bits(*s, i, n))))
            .collect();
        Positroid {
            n,
            k: self.k,
            bases,
        }
    }
}

impl Serialize for GrassmannNecklace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.sets.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GrassmannNecklace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let sets = Vec::<Subset>::deserialize(d)?;
        GrassmannNecklace::new(sets.len(), sets).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Positroids
// ---------------------------------------------------------------------------

/// A rank-`k` positroid on `[n]`, stored as its set of bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Positroid {
    n: usize,
    k: usize,
    bases: BTreeSet<Subset>,
}

impl Positroid {
    /// Validates the positroid property through the necklace round trip.
    pub fn try_new(n: usize, bases: BTreeSet<Subset>) -> Result<Self> {
        if !is_positroid(n, &bases)? {
            return Err(Error::NotPositroid);
        }
        let k = bases.iter().next().expect("nonempty").len();
        Ok(Positroid { n, k, bases })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn bases(&self) -> &BTreeSet<Subset> {
        &self.bases
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.bases.contains(&s)
    }

    pub fn necklace(&self) -> GrassmannNecklace {
        necklace_of_bases(self.n, &self.bases).expect("positroids have a necklace")
    }

    /// Gale-minimal basis in the standard order.
    pub fn gale_min(&self) -> Subset {
        gale_minimum(&self.bases, 1, self.n).expect("positroids are matroids")
    }
}

/// `J_{i+1} = c^i(I_min(c^{-i}(M)))`, i.e. `J_i` is the Gale minimum of `M`
/// in the cyclic order starting at `i`.
pub fn necklace_of_bases(n: usize, bases: &BTreeSet<Subset>) -> Result<GrassmannNecklace> {
    if bases.is_empty() {
        return Err(Error::EmptyInput);
    }
    let k = bases.iter().next().expect("nonempty").len();
    for b in bases {
        if b.len() != k {
            return Err(Error::SizeMismatch(format!(
                "{b} has size {} but expected {k}",
                b.len()
            )));
        }
        check_ground(*b, n)?;
    }
    let sets = (1..=n)
        .map(|i| gale_minimum(bases, i, n))
        .collect::<Result<Vec<_>>>()?;
    GrassmannNecklace::new(n, sets)
}

/// Decision procedure: `M` is a positroid iff its necklace exists and the
/// necklace's positroid is `M` again.
pub fn is_positroid(n: usize, bases: &BTreeSet<Subset>) -> Result<bool> {
    if bases.is_empty() {
        return Err(Error::EmptyInput);
    }
    let necklace = match necklace_of_bases(n, bases) {
        Ok(j) => j,
        Err(Error::NotMatroid(_)) | Err(Error::InvalidNecklace(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(necklace.positroid().bases == *bases)
}

/// Parses a JSON array of index arrays into a set of subsets.
pub fn bases_from_json(value: &serde_json::Value) -> Result<BTreeSet<Subset>> {
    let v: Vec<Subset> = serde_json::from_value(value.clone())?;
    Ok(v.into_iter().collect())
}

impl Serialize for Positroid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.bases.iter().collect::<Vec<_>>().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied())
    }

    fn set(v: &[&[usize]]) -> BTreeSet<Subset> {
        v.iter().map(|x| s(x)).collect()
    }

    fn neck(n: usize, v: &[&[usize]]) -> GrassmannNecklace {
        GrassmannNecklace::new(n, v.iter().map(|x| s(x)).collect()).unwrap()
    }

    #[test]
    fn helicity_examples() {
        let w = DecoratedPermutation::shift(2, 5).unwrap();
        assert_eq!(w.images(), &[3, 4, 5, 1, 2]);
        assert_eq!(w.helicity(), 2);
        assert_eq!(
            DecoratedPermutation::with_uniform_color(vec![1, 2, 3, 4], 0)
                .unwrap()
                .helicity(),
            0
        );
        assert_eq!(
            DecoratedPermutation::with_uniform_color(vec![1, 2, 3, 4], 1)
                .unwrap()
                .helicity(),
            4
        );
    }

    #[test]
    fn necklace_examples() {
        let j = DecoratedPermutation::shift(2, 5).unwrap().necklace();
        for i in 1..=5 {
            assert_eq!(j.get(i), Subset::cyclic_interval(i, 2, 5));
        }
        let j = DecoratedPermutation::with_uniform_color(vec![1, 2, 3], 1)
            .unwrap()
            .necklace();
        assert!(j.sets().iter().all(|&x| x == s(&[1, 2, 3])));
        let j = DecoratedPermutation::with_uniform_color(vec![2, 1], 0)
            .unwrap()
            .necklace();
        assert_eq!(j.sets(), &[s(&[1]), s(&[2])]);
    }

    #[test]
    fn permutation_from_necklace_examples() {
        let intervals: Vec<Subset> = (1..=5).map(|i| Subset::cyclic_interval(i, 2, 5)).collect();
        let w = GrassmannNecklace::new(5, intervals)
            .unwrap()
            .permutation()
            .unwrap();
        assert_eq!(w, DecoratedPermutation::shift(2, 5).unwrap());

        let w = neck(4, &[&[1, 2], &[1, 2], &[1, 2], &[1, 2]])
            .permutation()
            .unwrap();
        assert_eq!(w.images(), &[1, 2, 3, 4]);
        assert_eq!(
            (w.color(1), w.color(2), w.color(3), w.color(4)),
            (Some(1), Some(1), Some(0), Some(0))
        );

        let w = neck(2, &[&[1], &[2]]).permutation().unwrap();
        assert_eq!(w.images(), &[2, 1]);
    }

    #[test]
    fn invalid_necklace_is_rejected() {
        // J_2 drops 3, which is not the index being stepped past.
        let err = GrassmannNecklace::new(4, vec![s(&[1, 3]), s(&[1, 2]), s(&[3, 4]), s(&[4, 1])])
            .unwrap_err();
        assert!(matches!(err, Error::InvalidNecklace(_)));
    }

    #[test]
    fn positroid_from_necklace_examples() {
        let intervals: Vec<Subset> = (1..=4).map(|i| Subset::cyclic_interval(i, 2, 4)).collect();
        let m = GrassmannNecklace::new(4, intervals).unwrap().positroid();
        assert_eq!(m.bases().len(), 6);
        let m = neck(4, &[&[1, 2], &[1, 2], &[1, 2], &[1, 2]]).positroid();
        assert_eq!(m.bases(), &set(&[&[1, 2]]));
        let m = neck(3, &[&[1, 2, 3], &[1, 2, 3], &[1, 2, 3]]).positroid();
        assert_eq!(m.bases(), &set(&[&[1, 2, 3]]));
    }

    /// Gale minima straight from the definition: the element below all others.
    fn brute_minimum(m: &BTreeSet<Subset>, start: usize, n: usize) -> Option<Subset> {
        m.iter()
            .copied()
            .find(|&x| m.iter().all(|&y| gale_leq(x, y, start, n).unwrap()))
    }

    #[test]
    fn necklace_from_positroid_examples() {
        let all: BTreeSet<Subset> = k_subsets(4, 2).collect();
        let j = necklace_of_bases(4, &all).unwrap();
        for i in 1..=4 {
            assert_eq!(j.get(i), Subset::cyclic_interval(i, 2, 4));
        }
        let j = necklace_of_bases(4, &set(&[&[1, 3]])).unwrap();
        assert!(j.sets().iter().all(|&x| x == s(&[1, 3])));

        let m = set(&[&[1, 2], &[1, 3]]);
        let j = necklace_of_bases(3, &m).unwrap();
        let oracle: Vec<Subset> = (1..=3).map(|i| brute_minimum(&m, i, 3).unwrap()).collect();
        assert_eq!(j.sets(), oracle.as_slice());
        assert_eq!(j.sets(), &[s(&[1, 2]), s(&[1, 2]), s(&[1, 3])]);
    }

    #[test]
    fn is_positroid_examples() {
        let all: BTreeSet<Subset> = k_subsets(4, 2).collect();
        assert!(is_positroid(4, &all).unwrap());
        assert!(!is_positroid(4, &set(&[&[1, 2], &[3, 4]])).unwrap());
        assert!(is_positroid(4, &set(&[&[1, 3]])).unwrap());
        assert_eq!(is_positroid(4, &BTreeSet::new()), Err(Error::EmptyInput));
        // {1,2} and {3,4} parallel classes: a positroid. {1,3} and {2,4} parallel: not one.
        assert!(is_positroid(4, &set(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]])).unwrap());
        assert!(!is_positroid(4, &set(&[&[1, 2], &[1, 4], &[2, 3], &[3, 4]])).unwrap());
    }

    #[test]
    fn gale_and_schubert_examples() {
        assert!(gale_leq(s(&[1, 3]), s(&[2, 4]), 1, 4).unwrap());
        assert!(!gale_leq(s(&[2, 4]), s(&[1, 3]), 1, 4).unwrap());
        // In the order 2 < 3 < 4 < 1, {1,2} sorts as (2,1) and {2,3} as (2,3).
        assert!(gale_leq(s(&[2, 3]), s(&[1, 2]), 2, 4).unwrap());
        assert!(matches!(
            gale_leq(s(&[1]), s(&[1, 2]), 1, 4),
            Err(Error::SizeMismatch(_))
        ));
        assert_eq!(
            schubert_matroid(s(&[2, 3]), 1, 4).unwrap(),
            set(&[&[2, 3], &[2, 4], &[3, 4]])
        );
        assert!(!is_matroid(&set(&[&[1, 2], &[3, 4]])).unwrap());
        assert!(is_matroid(&k_subsets(5, 2).collect()).unwrap());
    }

    #[test]
    fn bounded_affine_round_trip_and_dimension() {
        for n in 1..=5 {
            for w in DecoratedPermutation::all(n) {
                let f = w.bounded_affine();
                assert_eq!(DecoratedPermutation::from_bounded_affine(&f).unwrap(), w);
                let k = w.helicity() as i64;
                let total: i64 = f.iter().enumerate().map(|(i, &x)| x - (i as i64 + 1)).sum();
                assert_eq!(total, k * n as i64);
            }
        }
        assert_eq!(
            DecoratedPermutation::shift(2, 4).unwrap().cell_dimension(),
            4
        );
        let point =
            DecoratedPermutation::new(vec![1, 2, 3, 4], &[(1, 1), (2, 0), (3, 1), (4, 0)].into())
                .unwrap();
        assert_eq!(point.cell_dimension(), 0);
    }

    #[test]
    fn decorated_permutation_counts() {
        // Σ_j n!/j! decorated permutations (j = number of fixed points... colored).
        let counts: Vec<usize> = (1..=5)
            .map(|n| DecoratedPermutation::all(n).len())
            .collect();
        assert_eq!(counts, vec![2, 5, 16, 65, 326]);
    }

    #[test]
    fn json_shape() {
        let w = DecoratedPermutation::shift(2, 5).unwrap();
        let v = serde_json::to_value(&w).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"n": 5, "w": [3, 4, 5, 1, 2], "colors": {}})
        );
        let back: DecoratedPermutation = serde_json::from_value(v).unwrap();
        assert_eq!(back, w);
    }
}
