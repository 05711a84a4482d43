//! Grassmannian graphs embedded in a disk.
//!
//! A graph is stored as a rotation system. Vertices `0..n` are the boundary
//! vertices `b_1..b_n` (vertex `i - 1` is `b_i`), every other vertex is
//! internal and carries a helicity. Half-edges come in pairs `2e, 2e + 1`
//! forming edge `e`; each vertex lists its half-edges in clockwise order.
//!
//! Faces are traced with the face on the left of each half-edge. When a walk
//! reaches `b_i` it continues along the boundary of the disk to `b_{i-1}`, so
//! the face between `b_{i-1}` and `b_i` is the one containing the half-edge
//! that arrives at `b_i`.

mod canonical;
mod dot;
pub(crate) mod edit;
mod json;
mod orientation;
mod refine;
mod strands;

use std::ops::Range;

use num_rational::Ratio;

use crate::error::{Error, Result};

pub use edit::GraphBuilder;
pub use orientation::PerfectOrientation;
pub use refine::plabic_refinement;
pub use strands::{ReducedViolation, Strand};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    /// `Boundary(i)` is `b_i`.
    Boundary(usize),
    Internal {
        h: usize,
    },
}

/// Faces of the disk cut out by the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Faces {
    face_of: Vec<usize>,
    cycles: Vec<Vec<usize>>,
    arcs: Vec<Vec<usize>>,
    boundary_face: Vec<usize>,
}

impl Faces {
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    /// Face on the left of half-edge `h`.
    pub fn face_of(&self, h: usize) -> usize {
        self.face_of[h]
    }

    /// Half-edges around face `f`, in traversal order.
    pub fn half_edges(&self, f: usize) -> &[usize] {
        &self.cycles[f]
    }

    /// Boundary arcs on face `f`; arc `i` runs from `b_{i-1}` to `b_i`.
    pub fn arcs(&self, f: usize) -> &[usize] {
        &self.arcs[f]
    }

    /// The face between `b_{i-1}` and `b_i`.
    pub fn boundary_face(&self, i: usize) -> usize {
        self.boundary_face[i - 1]
    }

    pub fn is_internal(&self, f: usize) -> bool {
        self.arcs[f].is_empty()
    }

    pub fn internal(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.count()).filter(|&f| self.is_internal(f))
    }

    pub fn internal_count(&self) -> usize {
        self.internal().count()
    }

    /// Number of distinct faces touching the boundary of the disk.
    pub fn boundary_count(&self) -> usize {
        self.count() - self.internal_count()
    }
}

#[derive(Clone, Debug)]
pub struct GrassmannianGraph {
    n: usize,
    helicity: Vec<usize>,
    rotation: Vec<Vec<usize>>,
    origin: Vec<usize>,
    pos: Vec<usize>,
    faces: Faces,
}

impl PartialEq for GrassmannianGraph {
    /// Equality of embedded graphs up to relabeling of internal vertices and edges.
    fn eq(&self, other: &Self) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

impl Eq for GrassmannianGraph {}

impl GrassmannianGraph {
    /// Validates a raw rotation system. `helicity` has one entry per vertex;
    /// boundary entries are ignored.
    pub(crate) fn from_parts(
        n: usize,
        helicity: Vec<usize>,
        rotation: Vec<Vec<usize>>,
        origin: Vec<usize>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "a graph needs at least one boundary vertex".into(),
            ));
        }
        let nv = rotation.len();
        if nv < n || helicity.len() != nv {
            return Err(Error::InvalidGraph(format!(
                "{nv} vertices for {n} boundary vertices"
            )));
        }
        if !origin.len().is_multiple_of(2) {
            return Err(Error::InvalidGraph("odd number of half-edges".into()));
        }
        let mut pos = vec![usize::MAX; origin.len()];
        for (v, rot) in rotation.iter().enumerate() {
            for (p, &h) in rot.iter().enumerate() {
                if h >= origin.len() || pos[h] != usize::MAX || origin[h] != v {
                    return Err(Error::InvalidGraph(format!(
                        "half-edge {h} misplaced at vertex {v}"
                    )));
                }
                pos[h] = p;
            }
        }
        if let Some(h) = pos.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidGraph(format!(
                "half-edge {h} is not in any rotation"
            )));
        }
        let mut helicity = helicity;
        for v in 0..nv {
            let d = rotation[v].len();
            if v < n {
                if d != 1 {
                    return Err(Error::InvalidGraph(format!(
                        "boundary vertex b_{} has degree {d}",
                        v + 1
                    )));
                }
                helicity[v] = 0;
            } else if d == 0 {
                return Err(Error::InvalidGraph(format!(
                    "internal vertex {v} is isolated"
                )));
            } else if helicity[v] > d {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} has helicity {} > degree {d}",
                    helicity[v]
                )));
            }
        }
        let mut g = GrassmannianGraph {
            n,
            helicity,
            rotation,
            origin,
            pos,
            faces: Faces {
                face_of: vec![],
                cycles: vec![],
                arcs: vec![],
                boundary_face: vec![],
            },
        };
        g.check_connected()?;
        g.faces = g.trace_faces();
        // Euler's formula for the disk with its boundary arcs and outer face added.
        let v = g.vertex_count() as i64;
        let e = (g.edge_count() + n) as i64;
        let f = (g.faces.count() + 1) as i64;
        if v - e + f != 2 {
            return Err(Error::InvalidGraph(format!(
                "rotation system is not a disk embedding (V - E + F = {})",
                v - e + f
            )));
        }
        Ok(g)
    }

    fn check_connected(&self) -> Result<()> {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack: Vec<usize> = (0..self.n).collect();
        for &b in &stack {
            seen[b] = true;
        }
        while let Some(v) = stack.pop() {
            for &h in &self.rotation[v] {
                let w = self.head(h);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(v) => Err(Error::InvalidGraph(format!(
                "vertex {v} is not connected to the boundary"
            ))),
            None => Ok(()),
        }
    }

    /// Next half-edge along the face on the left; the flag reports a boundary arc.
    fn face_step(&self, h: usize) -> (usize, Option<usize>) {
        let t = h ^ 1;
        let v = self.origin[t];
        if v < self.n {
            let i = v + 1;
            let prev = (v + self.n - 1) % self.n;
            (self.rotation[prev][0], Some(i))
        } else {
            let rot = &self.rotation[v];
            (rot[(self.pos[t] + 1) % rot.len()], None)
        }
    }

    fn trace_faces(&self) -> Faces {
        let m = self.origin.len();
        let mut face_of = vec![usize::MAX; m];
        let mut cycles = Vec::new();
        let mut arcs = Vec::new();
        let mut boundary_face = vec![usize::MAX; self.n];
        for start in 0..m {
            if face_of[start] != usize::MAX {
                continue;
            }
            let f = cycles.len();
            let mut cycle = Vec::new();
            let mut face_arcs = Vec::new();
            let mut h = start;
            loop {
                face_of[h] = f;
                cycle.push(h);
                let (next, arc) = self.face_step(h);
                if let Some(i) = arc {
                    face_arcs.push(i);
                    boundary_face[i - 1] = f;
                }
                h = next;
                if h == start {
                    break;
                }
            }
            cycles.push(cycle);
            arcs.push(face_arcs);
        }
        Faces {
            face_of,
            cycles,
            arcs,
            boundary_face,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn half_edge_count(&self) -> usize {
        self.origin.len()
    }

    pub fn internal_vertices(&self) -> Range<usize> {
        self.n..self.vertex_count()
    }

    pub fn internal_count(&self) -> usize {
        self.vertex_count() - self.n
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        v < self.n
    }

    /// Vertex id of `b_i`.
    pub fn boundary_vertex(&self, i: usize) -> usize {
        assert!((1..=self.n).contains(&i), "boundary index {i} out of range");
        i - 1
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        if v < self.n {
            VertexKind::Boundary(v + 1)
        } else {
            VertexKind::Internal {
                h: self.helicity[v],
            }
        }
    }

    /// Helicity of an internal vertex (0 for boundary vertices).
    pub fn helicity(&self, v: usize) -> usize {
        self.helicity[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// `(h(v), deg(v))`.
    pub fn vertex_type(&self, v: usize) -> (usize, usize) {
        (self.helicity[v], self.degree(v))
    }

    /// Half-edges at `v` in clockwise order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn origin(&self, h: usize) -> usize {
        self.origin[h]
    }

    pub fn head(&self, h: usize) -> usize {
        self.origin[h ^ 1]
    }

    pub fn twin(h: usize) -> usize {
        h ^ 1
    }

    pub fn edge_of(h: usize) -> usize {
        h / 2
    }

    /// Index of `h` in the rotation of its origin.
    pub fn position(&self, h: usize) -> usize {
        self.pos[h]
    }

    /// The half-edge leaving `b_i`.
    pub fn boundary_half_edge(&self, i: usize) -> usize {
        self.rotation[self.boundary_vertex(i)][0]
    }

    /// Both endpoints internal.
    pub fn is_internal_edge(&self, e: usize) -> bool {
        self.origin[2 * e] >= self.n && self.origin[2 * e + 1] >= self.n
    }

    pub fn faces(&self) -> &Faces {
        &self.faces
    }

    /// White: type `(1, d)`; black: type `(d - 1, d)`.
    pub fn is_white(&self, v: usize) -> bool {
        v >= self.n && self.helicity[v] == 1
    }

    pub fn is_black(&self, v: usize) -> bool {
        v >= self.n && self.helicity[v] + 1 == self.degree(v)
    }

    /// `h(G) = n/2 + Σ_v (h(v) - deg(v)/2)`, exact.
    pub fn graph_helicity(&self) -> Ratio<i64> {
        let twice: i64 = self.n as i64
            + self
                .internal_vertices()
                .map(|v| 2 * self.helicity[v] as i64 - self.degree(v) as i64)
                .sum::<i64>();
        Ratio::new(twice, 2)
    }

    /// Every internal vertex has type (1,3), (2,3), (0,1) or (1,1).
    pub fn is_plabic(&self) -> bool {
        self.internal_vertices()
            .all(|v| matches!(self.vertex_type(v), (1, 3) | (2, 3) | (0, 1) | (1, 1)))
    }
}

/// `f(k, n) = (k - 1)(n - k - 1)`, the number of internal faces of a complete
/// reduced plabic graph of type `(k, n)`.
pub fn face_excess(k: usize, n: usize) -> i64 {
    (k as i64 - 1) * (n as i64 - k as i64 - 1)
}

#[cfg(test)]
pub(crate) mod fixtures {
    pub use crate::corpus::{square, star};
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn helicity_examples() {
        assert_eq!(star(1, 3).graph_helicity(), Ratio::from_integer(1));
        let mut b = GraphBuilder::new(1);
        let leaf = b.add_internal(0);
        b.add_edge(b.boundary(1), leaf);
        assert_eq!(b.build().unwrap().graph_helicity(), Ratio::from_integer(0));
        assert_eq!(square(true).graph_helicity(), Ratio::from_integer(2));
        assert_eq!(star(2, 5).graph_helicity(), Ratio::from_integer(2));
        // Two (1,3) vertices sharing two edges, one boundary edge each: 1 + (−1/2)·2 = 0.
        let mut b = GraphBuilder::new(2);
        let (u, v) = (b.add_internal(1), b.add_internal(1));
        let eu = b.add_edge(b.boundary(1), u);
        let ev = b.add_edge(b.boundary(2), v);
        let (p, q) = (b.add_edge(u, v), b.add_edge(u, v));
        b.set_rotation(u, vec![eu, p, q]);
        b.set_rotation(v, vec![ev, q, p]);
        assert_eq!(b.build().unwrap().graph_helicity(), Ratio::from_integer(0));
    }

    #[test]
    fn square_faces() {
        let g = square(true);
        let faces = g.faces();
        assert_eq!(faces.count(), 5);
        assert_eq!(faces.internal_count(), 1);
        assert_eq!(faces.boundary_count(), 4);
        for i in 1..=4 {
            assert_eq!(faces.arcs(faces.boundary_face(i)), &[i]);
        }
    }

    #[test]
    fn star_faces() {
        let g = star(1, 3);
        assert_eq!(g.faces().count(), 3);
        assert_eq!(g.faces().internal_count(), 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            GraphBuilder::new(0).build(),
            Err(Error::InvalidInput(_))
        ));
        let mut b = GraphBuilder::new(2);
        b.add_internal(1);
        let v = b.add_internal(1);
        b.add_edge(b.boundary(1), v);
        b.add_edge(b.boundary(2), v);
        // the first internal vertex is isolated
        assert!(matches!(b.build(), Err(Error::InvalidGraph(_))));
        let mut b = GraphBuilder::new(1);
        let v = b.add_internal(3);
        b.add_edge(b.boundary(1), v);
        assert!(matches!(b.build(), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn rejects_non_planar_rotation() {
        // Boundary order 1,2,3,4 around a vertex listed as 1,3,2,4 is not a disk embedding.
        let mut b = GraphBuilder::new(4);
        let v = b.add_internal(2);
        let e: Vec<usize> = (1..=4).map(|i| b.add_edge(b.boundary(i), v)).collect();
        b.set_rotation(v, vec![e[0], e[2], e[1], e[3]]);
        assert!(matches!(b.build(), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn boundary_to_boundary_edge() {
        let mut b = GraphBuilder::new(2);
        b.add_edge(b.boundary(1), b.boundary(2));
        let g = b.build().unwrap();
        assert_eq!(g.faces().count(), 2);
        assert_eq!(g.graph_helicity(), Ratio::from_integer(1));
    }
}
