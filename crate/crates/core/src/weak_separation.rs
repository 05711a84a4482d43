//! Weak separation and maximal weakly separated collections.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::GrassmannianGraph;
use crate::moves::FlipGraph;
use crate::subset::{binomial, k_subsets, Subset};

/// No `a < b < c < d` with `a, c ∈ I ∖ J` and `b, d ∈ J ∖ I`, or the other way round.
///
/// Equivalently, listing `I △ J` in increasing order and marking which side
/// each element came from gives at most three runs.
pub fn weakly_separated(i: Subset, j: Subset) -> Result<bool> {
    if i.len() != j.len() {
        return Err(Error::SizeMismatch(format!(
            "|{i}| = {} but |{j}| = {}",
            i.len(),
            j.len()
        )));
    }
    Ok(ws_unchecked(i, j))
}

fn ws_unchecked(i: Subset, j: Subset) -> bool {
    let a = i.difference(j);
    let mut runs = 0;
    let mut last = None;
    for x in i.union(j).difference(i.intersection(j)).iter() {
        let side = a.contains(x);
        if last != Some(side) {
            runs += 1;
            last = Some(side);
        }
    }
    runs <= 3
}

/// Pairwise weakly separated.
pub fn is_ws_collection(s: &[Subset]) -> Result<bool> {
    for (p, &a) in s.iter().enumerate() {
        for &b in &s[p + 1..] {
            if !weakly_separated(a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Default enumeration bound: `n ≤ 8` when `min(k, n-k) ≤ 2`, `n ≤ 6` when it is 3.
pub fn default_bound(k: usize, n: usize) -> Option<usize> {
    match k.min(n.saturating_sub(k)) {
        0..=2 => Some(8),
        3 => Some(6),
        _ => None,
    }
}

/// Every maximal weakly separated collection in `binom([n], k)`, each sorted,
/// found as the maximal cliques of the weak-separation graph.
pub fn maximal_ws_collections(k: usize, n: usize) -> Result<Vec<Vec<Subset>>> {
    if k > n {
        return Err(Error::InvalidInput(format!("k = {k} > n = {n}")));
    }
    match default_bound(k, n) {
        Some(b) if n <= b => {}
        _ => {
            return Err(Error::BoundExceeded(format!(
                "({k},{n}) is beyond the enumeration bound"
            )))
        }
    }
    let verts: Vec<Subset> = k_subsets(n, k).collect();
    assert!(verts.len() <= 128);
    let m = verts.len();
    let adj: Vec<u128> = (0..m)
        .map(|a| {
            (0..m)
                .filter(|&b| b != a && ws_unchecked(verts[a], verts[b]))
                .fold(0u128, |acc, b| acc | 1 << b)
        })
        .collect();
    let all = if m == 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    };
    let mut cliques = Vec::new();
    bron_kerbosch(&adj, 0, all, 0, &mut cliques);
    let mut out: Vec<Vec<Subset>> = cliques
        .into_iter()
        .map(|c| {
            let mut v: Vec<Subset> = (0..m)
                .filter(|&b| c >> b & 1 == 1)
                .map(|b| verts[b])
                .collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    Ok(out)
}

fn bron_kerbosch(adj: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = {
        let px = p | x;
        (0..adj.len())
            .filter(|&u| px >> u & 1 == 1)
            .max_by_key(|&u| (adj[u] & p).count_ones())
            .unwrap()
    };
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Checks that `s` is a maximal weakly separated collection of `k`-subsets of `[n]`.
pub fn check_maximal(s: &[Subset], k: usize, n: usize) -> Result<()> {
    if s.iter()
        .any(|x| x.len() != k || !x.is_subset_of(Subset::full(n)))
    {
        return Err(Error::SizeMismatch(format!(
            "collection is not inside binom([{n}], {k})"
        )));
    }
    if !is_ws_collection(s)? {
        return Err(Error::NotWeaklySeparated("some pair interleaves".into()));
    }
    let have: BTreeSet<Subset> = s.iter().copied().collect();
    if let Some(extra) =
        k_subsets(n, k).find(|c| !have.contains(c) && s.iter().all(|&x| ws_unchecked(x, *c)))
    {
        return Err(Error::NotMaximal(format!("{extra} can be added")));
    }
    Ok(())
}

/// Expected size `k(n-k) + 1` of a maximal collection.
pub fn maximal_size(k: usize, n: usize) -> usize {
    k * (n - k) + 1
}

/// Face-label sets of complete reduced plabic graphs, for lookup.
pub struct WsIndex {
    k: usize,
    n: usize,
    by_labels: HashMap<Vec<Subset>, GrassmannianGraph>,
}

impl WsIndex {
    pub fn new(k: usize, n: usize, fg: &FlipGraph) -> Result<Self> {
        let mut by_labels = HashMap::new();
        for g in &fg.nodes {
            let mut labels = g.face_labels()?;
            labels.sort();
            labels.dedup();
            by_labels.entry(labels).or_insert_with(|| g.clone());
        }
        Ok(WsIndex { k, n, by_labels })
    }

    /// Number of distinct face-label collections.
    pub fn len(&self) -> usize {
        self.by_labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_labels.is_empty()
    }

    pub fn collections(&self) -> impl Iterator<Item = &Vec<Subset>> {
        self.by_labels.keys()
    }

    /// A complete reduced plabic graph whose face labels are exactly `s`.
    pub fn lookup(&self, s: &[Subset]) -> Result<GrassmannianGraph> {
        check_maximal(s, self.k, self.n)?;
        let mut key = s.to_vec();
        key.sort();
        key.dedup();
        self.by_labels.get(&key).cloned().ok_or_else(|| {
            Error::NotMaximal("no plabic graph with these face labels was found".into())
        })
    }
}

/// A complete reduced plabic graph with face labels `s`.
pub fn plabic_from_maximal_ws(s: &[Subset], k: usize, n: usize) -> Result<GrassmannianGraph> {
    check_maximal(s, k, n)?;
    if binomial(n, k) == 0 || k == 0 || k >= n {
        return Err(Error::InvalidInput(format!("no flip graph for ({k},{n})")));
    }
    let fg = crate::moves::flip_graph(k, n)?;
    WsIndex::new(k, n, &fg)?.lookup(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied())
    }

    /// Straight from the definition.
    fn oracle(i: Subset, j: Subset) -> bool {
        let (a, b) = (i.difference(j).to_vec(), j.difference(i).to_vec());
        let bad = |x: &[usize], y: &[usize]| {
            x.iter().any(|&p| {
                y.iter()
                    .any(|&q| q > p && x.iter().any(|&r| r > q && y.iter().any(|&t| t > r)))
            })
        };
        !bad(&a, &b) && !bad(&b, &a)
    }

    #[test]
    fn examples() {
        assert!(!weakly_separated(s(&[1, 3]), s(&[2, 4])).unwrap());
        assert!(weakly_separated(s(&[1, 2]), s(&[2, 3])).unwrap());
        assert!(weakly_separated(s(&[1, 3]), s(&[1, 3])).unwrap());
        assert!(matches!(
            weakly_separated(s(&[1]), s(&[1, 2])),
            Err(Error::SizeMismatch(_))
        ));
        let path = [s(&[1, 2]), s(&[1, 3]), s(&[1, 4]), s(&[2, 4]), s(&[3, 4])];
        assert!(!is_ws_collection(&path).unwrap());
    }

    #[test]
    fn matches_definition_exhaustively() {
        for n in 1..=8 {
            for k in 0..=n {
                let all: Vec<Subset> = k_subsets(n, k).collect();
                for &a in &all {
                    for &b in &all {
                        assert_eq!(ws_unchecked(a, b), oracle(a, b), "{a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn maximal_counts() {
        let c = maximal_ws_collections(2, 4).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|x| x.len() == 5));
        for n in 3..=7 {
            assert_eq!(maximal_ws_collections(1, n).unwrap().len(), 1);
        }
        assert_eq!(maximal_ws_collections(2, 5).unwrap().len(), 5);
        assert_eq!(maximal_ws_collections(2, 6).unwrap().len(), 14);
        let c36 = maximal_ws_collections(3, 6).unwrap();
        assert_eq!(c36.len(), 34);
        assert!(c36.iter().all(|x| x.len() == maximal_size(3, 6)));
        assert!(matches!(
            maximal_ws_collections(3, 7),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn plabic_lookup() {
        let mut target: Vec<Subset> = (1..=4).map(|i| Subset::cyclic_interval(i, 2, 4)).collect();
        target.push(s(&[1, 3]));
        let g = plabic_from_maximal_ws(&target, 2, 4).unwrap();
        let mut labels = g.face_labels().unwrap();
        labels.sort();
        target.sort();
        assert_eq!(labels, target);
        let singles: Vec<Subset> = (1..=3).map(|i| s(&[i])).collect();
        let g = plabic_from_maximal_ws(&singles, 1, 3).unwrap();
        assert_eq!(g.internal_count(), 1);
        assert_eq!(g.vertex_type(3), (1, 3));
        assert!(matches!(
            plabic_from_maximal_ws(&target[..4], 2, 4),
            Err(Error::NotMaximal(_))
        ));
        let bad = [s(&[1, 3]), s(&[2, 4])];
        assert!(matches!(
            plabic_from_maximal_ws(&bad, 2, 4),
            Err(Error::NotWeaklySeparated(_))
        ));
    }

    #[test]
    fn face_labels_of_flip_graph_are_the_maximal_collections() {
        for (k, n) in [(1, 5), (2, 4), (2, 5), (2, 6), (3, 6)] {
            let fg = crate::moves::flip_graph(k, n).unwrap();
            let idx = WsIndex::new(k, n, &fg).unwrap();
            let mut from_graphs: Vec<Vec<Subset>> = idx.collections().cloned().collect();
            from_graphs.sort();
            assert_eq!(
                from_graphs,
                maximal_ws_collections(k, n).unwrap(),
                "({k},{n})"
            );
        }
    }

    proptest! {
        #[test]
        fn symmetric_and_reflexive(a in 0u64..256, b in 0u64..256) {
            let (a, b) = (Subset::from_bits(a), Subset::from_bits(b));
            prop_assert!(ws_unchecked(a, a));
            if a.len() == b.len() {
                prop_assert_eq!(weakly_separated(a, b).unwrap(), weakly_separated(b, a).unwrap());
            }
        }

        #[test]
        fn invariant_under_rotation(
            (a, b) in (0usize..=8).prop_flat_map(|k| {
                let pick = proptest::sample::subsequence((1..=8usize).collect::<Vec<_>>(), k);
                (pick.clone(), pick)
            }),
            r in 0isize..8,
        ) {
            let (a, b) = (Subset::from_indices(a), Subset::from_indices(b));
            prop_assert_eq!(ws_unchecked(a, b), ws_unchecked(a.rotate(r, 8), b.rotate(r, 8)));
        }
    }
}
