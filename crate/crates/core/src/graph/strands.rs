//! Strands, the decorated strand permutation, reducedness and face labels.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use super::{face_excess, GrassmannianGraph};
use crate::error::{Error, Result};
use crate::positroid::DecoratedPermutation;
use crate::subset::Subset;

/// A walk obeying the Rules of the Road, as a list of traversed half-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub half_edges: Vec<usize>,
    /// `Some(i)` when the strand starts at `b_i`; `None` for closed strands.
    pub start: Option<usize>,
    pub end: Option<usize>,
}

impl Strand {
    pub fn is_closed(&self) -> bool {
        self.start.is_none()
    }
}

/// Why a graph fails to be reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducedViolation {
    ClosedStrand {
        strand: usize,
    },
    SelfIntersection {
        strand: usize,
        vertex: usize,
    },
    BadDoubleCrossing {
        strands: (usize, usize),
        vertices: (usize, usize),
    },
    DegreeTwo {
        vertex: usize,
    },
}

impl fmt::Display for ReducedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReducedViolation::ClosedStrand { strand } => {
                write!(f, "strand {strand} is a closed loop")
            }
            ReducedViolation::SelfIntersection { strand, vertex } => {
                write!(f, "strand {strand} passes vertex {vertex} twice")
            }
            ReducedViolation::BadDoubleCrossing { strands, vertices } => write!(
                f,
                "strands {} and {} both run from vertex {} to vertex {}",
                strands.0, strands.1, vertices.0, vertices.1
            ),
            ReducedViolation::DegreeTwo { vertex } => write!(f, "vertex {vertex} has degree 2"),
        }
    }
}

impl GrassmannianGraph {
    /// Where a strand arriving along `h` leaves its head, if the head is internal.
    fn strand_step(&self, h: usize) -> Option<usize> {
        let t = h ^ 1;
        let v = self.origin[t];
        if v < self.n {
            return None;
        }
        let rot = &self.rotation[v];
        Some(rot[(self.pos[t] + self.helicity[v]) % rot.len()])
    }

    /// All strands: the one starting at each `b_i` in order, then closed strands.
    pub fn strands(&self) -> Vec<Strand> {
        let mut used = vec![false; self.half_edge_count()];
        let mut out = Vec::new();
        for i in 1..=self.n {
            let mut h = self.boundary_half_edge(i);
            let mut path = Vec::new();
            loop {
                used[h] = true;
                path.push(h);
                match self.strand_step(h) {
                    Some(next) => h = next,
                    None => break,
                }
            }
            let end = self.head(h) + 1;
            out.push(Strand {
                half_edges: path,
                start: Some(i),
                end: Some(end),
            });
        }
        for start in 0..self.half_edge_count() {
            if used[start] {
                continue;
            }
            let mut path = Vec::new();
            let mut h = start;
            loop {
                used[h] = true;
                path.push(h);
                h = self
                    .strand_step(h)
                    .expect("closed strands avoid the boundary");
                if h == start {
                    break;
                }
            }
            out.push(Strand {
                half_edges: path,
                start: None,
                end: None,
            });
        }
        out
    }

    /// Whether the strand from `b_i` is `b_i -> v -> b_i` for a leaf `v`.
    fn is_leaf_strand(&self, s: &Strand) -> bool {
        s.half_edges.len() == 2 && self.degree(self.head(s.half_edges[0])) == 1
    }

    /// The decorated strand permutation; leaf fixed points take the leaf's helicity as color.
    pub fn strand_permutation(&self) -> Result<DecoratedPermutation> {
        let strands = self.strands();
        if let Some(c) = strands.iter().find(|s| s.is_closed()) {
            return Err(Error::ClosedStrand(c.half_edges.clone()));
        }
        let mut images = Vec::with_capacity(self.n);
        let mut colors = BTreeMap::new();
        for s in &strands {
            let (i, j) = (s.start.unwrap(), s.end.unwrap());
            if i == j {
                if !self.is_leaf_strand(s) {
                    return Err(Error::NotReduced(format!(
                        "strand from b_{i} returns to b_{i} without a boundary leaf"
                    )));
                }
                let leaf = self.head(s.half_edges[0]);
                let c = self.helicity[leaf];
                if c > 1 {
                    return Err(Error::NotReduced(format!(
                        "boundary leaf at b_{i} has helicity {c}"
                    )));
                }
                colors.insert(i, c as u8);
            }
            images.push(j);
        }
        DecoratedPermutation::new(images, &colors)
    }

    /// Internal vertices visited by a strand, in order.
    fn strand_vertices(&self, s: &Strand) -> Vec<usize> {
        let hs = &s.half_edges;
        let upto = if s.is_closed() {
            hs.len()
        } else {
            hs.len() - 1
        };
        hs[..upto].iter().map(|&h| self.head(h)).collect()
    }

    /// Vertices along each strand, or the first closed or self-intersecting strand.
    fn simple_strand_visits(&self) -> std::result::Result<Vec<Vec<usize>>, ReducedViolation> {
        let strands = self.strands();
        if let Some(k) = strands.iter().position(|s| s.is_closed()) {
            return Err(ReducedViolation::ClosedStrand { strand: k });
        }
        let mut visits: Vec<Vec<usize>> = Vec::with_capacity(strands.len());
        let mut seen = vec![usize::MAX; self.vertex_count()];
        for (k, s) in strands.iter().enumerate() {
            let vs = self.strand_vertices(s);
            if s.start == s.end && !self.is_leaf_strand(s) {
                return Err(ReducedViolation::SelfIntersection {
                    strand: k,
                    vertex: s.start.unwrap() - 1,
                });
            }
            for &v in &vs {
                if seen[v] == k {
                    return Err(ReducedViolation::SelfIntersection {
                        strand: k,
                        vertex: v,
                    });
                }
                seen[v] = k;
            }
            visits.push(vs);
        }
        Ok(visits)
    }

    /// First violated reducedness condition, if any.
    pub fn reduced_violation(&self) -> Option<ReducedViolation> {
        // Position of each vertex along each strand.
        let visits = match self.simple_strand_visits() {
            Ok(v) => v,
            Err(v) => return Some(v),
        };
        let nv = self.vertex_count();
        let mut index_in = vec![usize::MAX; nv];
        for a in 0..visits.len() {
            for (p, &v) in visits[a].iter().enumerate() {
                index_in[v] = p;
            }
            for b in a + 1..visits.len() {
                // Along β, common vertices must appear in decreasing α-order.
                let mut last: Option<(usize, usize)> = None;
                for &v in &visits[b] {
                    let p = index_in[v];
                    if p == usize::MAX {
                        continue;
                    }
                    if let Some((q, u)) = last {
                        if q < p {
                            return Some(ReducedViolation::BadDoubleCrossing {
                                strands: (a, b),
                                vertices: (u, v),
                            });
                        }
                    }
                    if last.is_none_or(|(q, _)| p < q) {
                        last = Some((p, v));
                    }
                }
            }
            for &v in &visits[a] {
                index_in[v] = usize::MAX;
            }
        }
        self.internal_vertices()
            .find(|&v| self.degree(v) == 2)
            .map(|vertex| ReducedViolation::DegreeTwo { vertex })
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced_violation().is_none()
    }

    fn require_reduced(&self) -> Result<()> {
        match self.reduced_violation() {
            None => Ok(()),
            Some(v) => Err(Error::NotReduced(v.to_string())),
        }
    }

    /// Face labels, indexed like [`GrassmannianGraph::faces`]: `j ∈ I_F` iff `F`
    /// lies to the left of the strand ending at `b_j`.
    pub fn face_labels(&self) -> Result<Vec<Subset>> {
        self.require_reduced()?;
        self.side_labels()
    }

    /// Face labels by the same rule for any graph whose strands are open and
    /// do not revisit a vertex; bad double crossings are allowed.
    pub fn strand_side_labels(&self) -> Result<Vec<Subset>> {
        self.simple_strand_visits()
            .map_err(|v| Error::NotReduced(v.to_string()))?;
        self.side_labels()
    }

    fn side_labels(&self) -> Result<Vec<Subset>> {
        let faces = self.faces();
        let nf = faces.count();
        let mut labels = vec![Subset::EMPTY; nf];
        let mut on_strand = vec![usize::MAX; self.edge_count()];
        let mut mark = vec![usize::MAX; nf];
        for (k, s) in self.strands().iter().enumerate() {
            let j = s.end.expect("strands are open");
            if self.is_leaf_strand(s) {
                if self.helicity[self.head(s.half_edges[0])] == 1 {
                    for l in labels.iter_mut() {
                        *l = l.with(j);
                    }
                }
                continue;
            }
            for &h in &s.half_edges {
                on_strand[h / 2] = k;
            }
            let mut queue: VecDeque<usize> = VecDeque::new();
            for &h in &s.half_edges {
                let f = faces.face_of(h);
                if mark[f] != k {
                    mark[f] = k;
                    queue.push_back(f);
                }
            }
            while let Some(f) = queue.pop_front() {
                labels[f] = labels[f].with(j);
                for &h in faces.half_edges(f) {
                    if on_strand[h / 2] == k {
                        continue;
                    }
                    let g = faces.face_of(h ^ 1);
                    if mark[g] != k {
                        mark[g] = k;
                        queue.push_back(g);
                    }
                }
            }
        }
        Ok(labels)
    }

    /// Complete of type `(k, n)`: reduced, strand permutation `i ↦ i + k`, and
    /// the internal-face count `f(k, n) − Σ_v f(h(v), deg(v))`.
    pub fn is_complete(&self, k: usize) -> Result<bool> {
        self.require_reduced()?;
        if k > self.n {
            return Ok(false);
        }
        let target = DecoratedPermutation::shift(k, self.n)?;
        if self.strand_permutation()? != target {
            return Ok(false);
        }
        if k == 0 || k == self.n {
            return Ok(self.internal_vertices().all(|v| self.degree(v) == 1));
        }
        let expected = face_excess(k, self.n)
            - self
                .internal_vertices()
                .map(|v| face_excess(self.helicity[v], self.degree(v)))
                .sum::<i64>();
        Ok(self.faces().internal_count() as i64 == expected)
    }
}
