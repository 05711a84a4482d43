//! Monotone paths on the hypersimplex `Δ_{kn}`: directed paths from `[1,k]` to
//! `[n-k+1,n]` with steps `I → (I ∖ i) ∪ j` for `i < j`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset};

pub const MAX_N: usize = 10;

struct Dag {
    nodes: Vec<Subset>,
    succ: Vec<Vec<usize>>,
    source: usize,
    target: usize,
}

fn dag(k: usize, n: usize) -> Result<Dag> {
    if k > n {
        return Err(Error::InvalidInput(format!("k = {k} > n = {n}")));
    }
    if n > MAX_N {
        return Err(Error::BoundExceeded(format!("n = {n} > {MAX_N}")));
    }
    let nodes: Vec<Subset> = k_subsets(n, k).collect();
    let index: HashMap<Subset, usize> = nodes.iter().enumerate().map(|(p, &s)| (s, p)).collect();
    let succ = nodes
        .iter()
        .map(|&s| {
            let mut out = Vec::new();
            for i in s.iter() {
                for j in i + 1..=n {
                    if !s.contains(j) {
                        out.push(index[&s.without(i).with(j)]);
                    }
                }
            }
            out
        })
        .collect();
    let source = index[&Subset::from_indices(1..=k)];
    let target = index[&Subset::from_indices(n - k + 1..=n)];
    Ok(Dag {
        nodes,
        succ,
        source,
        target,
    })
}

impl Dag {
    /// Nodes ordered so every step goes forward: element sum strictly increases.
    fn order(&self) -> Vec<usize> {
        let mut o: Vec<usize> = (0..self.nodes.len()).collect();
        o.sort_by_key(|&p| std::cmp::Reverse(self.nodes[p].iter().sum::<usize>()));
        o
    }

    /// Folds over paths to the target, processing successors first.
    fn fold<T: Clone>(&self, at_target: T, empty: T, step: impl Fn(&T, &T) -> T, init: T) -> T {
        let mut memo: Vec<Option<T>> = vec![None; self.nodes.len()];
        for p in self.order() {
            let v = if p == self.target {
                at_target.clone()
            } else {
                self.succ[p]
                    .iter()
                    .filter_map(|&q| memo[q].as_ref())
                    .fold(empty.clone(), |acc, x| step(&acc, x))
            };
            memo[p] = Some(v);
        }
        memo[self.source].clone().unwrap_or(init)
    }
}

/// Number of monotone paths.
pub fn monotone_paths(k: usize, n: usize) -> Result<BigUint> {
    let d = dag(k, n)?;
    Ok(d.fold(
        BigUint::one(),
        BigUint::zero(),
        |a, b| a + b,
        BigUint::zero(),
    ))
}

/// Length and number of the longest monotone paths.
pub fn longest_monotone_paths(k: usize, n: usize) -> Result<(usize, BigUint)> {
    let d = dag(k, n)?;
    // `None` marks nodes that cannot reach the target.
    let (len, count) = d
        .fold(
            Some((0usize, BigUint::one())),
            None,
            |acc: &Option<(usize, BigUint)>, x: &Option<(usize, BigUint)>| match (acc, x) {
                (_, None) => acc.clone(),
                (None, Some((l, c))) => Some((l + 1, c.clone())),
                (Some((la, ca)), Some((l, c))) => match (l + 1).cmp(la) {
                    std::cmp::Ordering::Greater => Some((l + 1, c.clone())),
                    std::cmp::Ordering::Equal => Some((*la, ca + c)),
                    std::cmp::Ordering::Less => acc.clone(),
                },
            },
            None,
        )
        .expect("the source reaches the target");
    Ok((len, count))
}

/// Shortest and longest path lengths.
pub fn path_length_range(k: usize, n: usize) -> Result<(usize, usize)> {
    let d = dag(k, n)?;
    let shortest = d
        .fold(
            Some(0usize),
            None,
            |acc: &Option<usize>, x: &Option<usize>| match (acc, x) {
                (_, None) => *acc,
                (None, Some(l)) => Some(l + 1),
                (Some(a), Some(l)) => Some((*a).min(l + 1)),
            },
            None,
        )
        .expect("the source reaches the target");
    Ok((shortest, longest_monotone_paths(k, n)?.0))
}

/// Every monotone path as a list of subsets, refusing more than `limit` of them.
pub fn enumerate_monotone_paths(k: usize, n: usize, limit: usize) -> Result<Vec<Vec<Subset>>> {
    let total = monotone_paths(k, n)?;
    if total > BigUint::from(limit) {
        return Err(Error::CapExceeded(limit));
    }
    let d = dag(k, n)?;
    let mut out = Vec::new();
    let mut stack = vec![d.source];
    fn go(d: &Dag, stack: &mut Vec<usize>, out: &mut Vec<Vec<Subset>>) {
        let p = *stack.last().unwrap();
        if p == d.target {
            out.push(stack.iter().map(|&q| d.nodes[q]).collect());
            return;
        }
        for &q in &d.succ[p] {
            stack.push(q);
            go(d, stack, out);
            stack.pop();
        }
    }
    go(&d, &mut stack, &mut out);
    Ok(out)
}

/// `(k(n-k))! ∏_{i=0}^{n-k-1} i!/(k+i)!`, the number of standard Young
/// tableaux of the `k × (n-k)` rectangle.
pub fn hook_length_count(k: usize, n: usize) -> BigUint {
    let fact = |m: usize| (1..=m).fold(BigUint::one(), |a, x| a * BigUint::from(x));
    let mut num = fact(k * (n - k));
    let mut den = BigUint::one();
    for i in 0..n - k {
        num *= fact(i);
        den *= fact(k + i);
    }
    num / den
}
