//! Perfect orientations: every internal vertex `v` has exactly `h(v)` incoming edges.

use std::collections::BTreeSet;

use super::GrassmannianGraph;
use crate::error::{Error, Result};
use crate::positroid::Positroid;
use crate::subset::Subset;

/// `forward[e]` directs edge `e` from the origin of half-edge `2e` to the
/// origin of `2e + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectOrientation {
    pub forward: Vec<bool>,
}

impl PerfectOrientation {
    /// Whether the edge of half-edge `h` points into `h`'s origin.
    pub fn is_incoming(&self, h: usize) -> bool {
        let f = self.forward[h / 2];
        if h.is_multiple_of(2) {
            !f
        } else {
            f
        }
    }
}

/// Minimal augmenting-path max flow on unit-ish capacities.
struct Flow {
    head: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Flow {
    fn new(nodes: usize) -> Self {
        Flow {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, u: usize, v: usize, c: i64) -> usize {
        let a = self.head.len();
        self.head.push(v);
        self.cap.push(c);
        self.adj[u].push(a);
        self.head.push(u);
        self.cap.push(0);
        self.adj[v].push(a + 1);
        a
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut prev = vec![usize::MAX; self.adj.len()];
        let mut stack = vec![s];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            if u == t {
                break;
            }
            for &a in &self.adj[u] {
                let v = self.head[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    prev[v] = a;
                    stack.push(v);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while v != s {
            let a = prev[v];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            v = self.head[a ^ 1];
        }
        true
    }

    fn saturate(&mut self, s: usize, t: usize) -> usize {
        let mut f = 0;
        while self.augment(s, t) {
            f += 1;
        }
        f
    }
}

impl GrassmannianGraph {
    /// In-degree still required at each vertex once loops are accounted for
    /// (a loop always contributes one incoming and one outgoing slot).
    fn residual_demand(&self) -> Option<Vec<usize>> {
        let mut need = self.helicity.clone();
        for v in self.internal_vertices() {
            let loops = self.rotation[v]
                .iter()
                .filter(|&&h| h % 2 == 0 && self.head(h) == v)
                .count();
            need[v] = need[v].checked_sub(loops)?;
            if need[v] + loops > self.degree(v) - loops {
                return None;
            }
        }
        Some(need)
    }

    /// A perfect orientation found by bipartite flow, or `None` if none exists.
    ///
    /// Each edge sends one unit to the endpoint it points at. Edges between
    /// internal vertices are routed first, since they must land on one of
    /// their ends; edges touching the boundary may then top up any deficit.
    pub fn find_perfect_orientation(&self) -> Option<PerfectOrientation> {
        let need = self.residual_demand()?;
        let ne = self.edge_count();
        let nv = self.vertex_count();
        let (src, sink) = (ne + nv, ne + nv + 1);
        let mut flow = Flow::new(ne + nv + 2);
        for v in self.internal_vertices() {
            flow.arc(ne + v, sink, need[v] as i64);
        }
        let mut to_end: Vec<[Option<usize>; 2]> = vec![[None, None]; ne];
        let is_loop = |e: usize| self.origin[2 * e] == self.origin[2 * e + 1];
        let mut internal_edges = 0;
        for e in 0..ne {
            if is_loop(e) || !self.is_internal_edge(e) {
                continue;
            }
            internal_edges += 1;
            flow.arc(src, e, 1);
            for side in 0..2 {
                to_end[e][side] = Some(flow.arc(e, ne + self.origin[2 * e + side], 1));
            }
        }
        if flow.saturate(src, sink) != internal_edges {
            return None;
        }
        for e in 0..ne {
            if is_loop(e) || self.is_internal_edge(e) {
                continue;
            }
            flow.arc(src, e, 1);
            for side in 0..2 {
                let v = self.origin[2 * e + side];
                if v >= self.n {
                    to_end[e][side] = Some(flow.arc(e, ne + v, 1));
                }
            }
        }
        flow.saturate(src, sink);
        let total: usize = self.internal_vertices().map(|v| need[v]).sum();
        let delivered: i64 = self
            .internal_vertices()
            .map(|v| {
                flow.adj[ne + v]
                    .iter()
                    .filter(|&&a| flow.head[a] == sink)
                    .map(|&a| flow.cap[a ^ 1])
                    .sum::<i64>()
            })
            .sum();
        if delivered as usize != total {
            return None;
        }
        let forward = (0..ne)
            .map(|e| {
                // Edge points at the end that received its unit; unassigned edges
                // point at their boundary end (or either way for loops).
                let into = |side: usize| to_end[e][side].is_some_and(|a| flow.cap[a] == 0);
                if into(1) {
                    true
                } else if into(0) {
                    false
                } else {
                    self.origin[2 * e + 1] < self.n
                }
            })
            .collect();
        let o = PerfectOrientation { forward };
        debug_assert!(self.is_perfect(&o));
        Some(o)
    }

    pub fn is_perfect(&self, o: &PerfectOrientation) -> bool {
        o.forward.len() == self.edge_count()
            && self.internal_vertices().all(|v| {
                self.rotation[v]
                    .iter()
                    .filter(|&&h| o.is_incoming(h))
                    .count()
                    == self.helicity[v]
            })
    }

    /// `I(O)`: indices whose boundary edge points into the disk.
    pub fn boundary_sources(&self, o: &PerfectOrientation) -> Subset {
        Subset::from_indices((1..=self.n).filter(|&i| !o.is_incoming(self.boundary_half_edge(i))))
    }

    /// `J(v, O)`: 1-based rotation slots of the edges entering `v`.
    pub fn incoming_slots(&self, v: usize, o: &PerfectOrientation) -> Subset {
        Subset::from_indices(
            self.rotation[v]
                .iter()
                .enumerate()
                .filter(|(_, &h)| o.is_incoming(h))
                .map(|(p, _)| p + 1),
        )
    }

    /// Every perfect orientation, by backtracking over edges with in-degree pruning.
    pub fn enumerate_perfect_orientations(&self) -> Vec<PerfectOrientation> {
        let ne = self.edge_count();
        let Some(need) = self.residual_demand() else {
            return Vec::new();
        };
        // Visit edges vertex by vertex so constraints close early.
        let mut order = Vec::with_capacity(ne);
        let mut placed = vec![false; ne];
        for v in self.internal_vertices().chain(0..self.n) {
            for &h in &self.rotation[v] {
                if !placed[h / 2] {
                    placed[h / 2] = true;
                    order.push(h / 2);
                }
            }
        }
        let mut remaining = vec![0usize; self.vertex_count()];
        for &e in &order {
            if self.origin[2 * e] != self.origin[2 * e + 1] {
                remaining[self.origin[2 * e]] += 1;
                remaining[self.origin[2 * e + 1]] += 1;
            }
        }
        let mut state = Enum {
            g: self,
            order,
            need,
            have: vec![0; self.vertex_count()],
            remaining,
            forward: vec![false; ne],
            out: Vec::new(),
        };
        state.go(0);
        state.out
    }

    /// `M(G) = {I(O)}` over all perfect orientations.
    pub fn positroid_of_graph(&self) -> Result<Positroid> {
        let bases: BTreeSet<Subset> = self
            .enumerate_perfect_orientations()
            .iter()
            .map(|o| self.boundary_sources(o))
            .collect();
        if bases.is_empty() {
            return Err(Error::NotOrientable);
        }
        Positroid::try_new(self.n, bases)
    }
}

struct Enum<'a> {
    g: &'a GrassmannianGraph,
    order: Vec<usize>,
    need: Vec<usize>,
    have: Vec<usize>,
    remaining: Vec<usize>,
    forward: Vec<bool>,
    out: Vec<PerfectOrientation>,
}

impl Enum<'_> {
    fn ok(&self, v: usize) -> bool {
        v < self.g.n
            || (self.have[v] <= self.need[v] && self.have[v] + self.remaining[v] >= self.need[v])
    }

    fn go(&mut self, idx: usize) {
        if idx == self.order.len() {
            self.out.push(PerfectOrientation {
                forward: self.forward.clone(),
            });
            return;
        }
        let e = self.order[idx];
        let (a, b) = (self.g.origin[2 * e], self.g.origin[2 * e + 1]);
        if a == b {
            for f in [false, true] {
                self.forward[e] = f;
                self.go(idx + 1);
            }
            return;
        }
        self.remaining[a] -= 1;
        self.remaining[b] -= 1;
        for (f, into) in [(false, a), (true, b)] {
            self.forward[e] = f;
            self.have[into] += 1;
            if self.ok(a) && self.ok(b) {
                self.go(idx + 1);
            }
            self.have[into] -= 1;
        }
        self.remaining[a] += 1;
        self.remaining[b] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{square, star};
    use super::super::GraphBuilder;
    use super::*;
    use crate::subset::k_subsets;

    /// All 2^E edge directions, filtered by the in-degree condition.
    fn brute_force(g: &GrassmannianGraph) -> BTreeSet<PerfectOrientation> {
        let ne = g.edge_count();
        assert!(ne <= 20);
        (0u32..1 << ne)
            .map(|mask| PerfectOrientation {
                forward: (0..ne).map(|e| mask >> e & 1 == 1).collect(),
            })
            .filter(|o| g.is_perfect(o))
            .collect()
    }

    fn check_against_oracle(g: &GrassmannianGraph) {
        let fast: BTreeSet<_> = g.enumerate_perfect_orientations().into_iter().collect();
        let slow = brute_force(g);
        assert_eq!(fast, slow);
        assert_eq!(g.find_perfect_orientation().is_some(), !slow.is_empty());
        let k = g.graph_helicity();
        for o in &slow {
            assert_eq!(
                k,
                num_rational::Ratio::from_integer(g.boundary_sources(o).len() as i64)
            );
        }
    }

    #[test]
    fn star_orientations() {
        let g = star(1, 3);
        assert_eq!(g.enumerate_perfect_orientations().len(), 3);
        check_against_oracle(&g);
        let m = g.positroid_of_graph().unwrap();
        assert_eq!(m.bases().len(), 3);
        let g = star(3, 3);
        let all = g.enumerate_perfect_orientations();
        assert_eq!(all.len(), 1);
        assert_eq!(g.boundary_sources(&all[0]), Subset::full(3));
        check_against_oracle(&star(2, 5));
    }

    #[test]
    fn leaf_orientation_points_away_from_leaf() {
        let mut b = GraphBuilder::new(1);
        let v = b.add_internal(0);
        b.add_edge(b.boundary(1), v);
        let g = b.build().unwrap();
        let o = g.find_perfect_orientation().unwrap();
        assert_eq!(g.boundary_sources(&o), Subset::EMPTY);
        assert_eq!(g.enumerate_perfect_orientations().len(), 1);
    }

    #[test]
    fn square_orientations() {
        for white_first in [true, false] {
            let g = square(white_first);
            check_against_oracle(&g);
            let m = g.positroid_of_graph().unwrap();
            assert_eq!(m.bases(), &k_subsets(4, 2).collect());
        }
    }

    #[test]
    fn zero_leaf_excludes_its_index() {
        // 0-leaf at b_1 and a white vertex on b_2, b_3, b_4.
        let mut b = GraphBuilder::new(4);
        let leaf = b.add_internal(0);
        b.add_edge(b.boundary(1), leaf);
        let v = b.add_internal(1);
        for i in 2..=4 {
            b.add_edge(b.boundary(i), v);
        }
        let g = b.build().unwrap();
        check_against_oracle(&g);
        let m = g.positroid_of_graph().unwrap();
        assert!(m.bases().iter().all(|s| !s.contains(1)));
        assert_eq!(m.bases().len(), 3);
    }

    #[test]
    fn non_orientable() {
        // Two 0-vertices joined by an edge: someone must receive it.
        let mut b = GraphBuilder::new(2);
        let (u, v) = (b.add_internal(0), b.add_internal(0));
        b.add_edge(b.boundary(1), u);
        b.add_edge(u, v);
        b.add_edge(v, b.boundary(2));
        let g = b.build().unwrap();
        assert!(g.find_perfect_orientation().is_none());
        assert_eq!(g.positroid_of_graph(), Err(Error::NotOrientable));
        check_against_oracle(&g);
    }

    #[test]
    fn loops_count_both_ways() {
        let mut b = GraphBuilder::new(1);
        let v = b.add_internal(1);
        let e = b.add_edge(b.boundary(1), v);
        let l = b.add_edge(v, v);
        b.set_rotation(v, vec![e, l, l]);
        let g = b.build().unwrap();
        check_against_oracle(&g);
        assert_eq!(g.enumerate_perfect_orientations().len(), 2);
    }
}
