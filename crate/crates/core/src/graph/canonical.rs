//! Canonical relabeling: breadth-first from `b_1, .., b_n`, each vertex's
//! rotation read from the half-edge it was discovered through.

use std::fmt::Write;

use super::GrassmannianGraph;

struct Numbering {
    /// Vertices in canonical order.
    order: Vec<usize>,
    id: Vec<usize>,
    /// Rotation index where each vertex's canonical rotation starts.
    start: Vec<usize>,
}

impl GrassmannianGraph {
    fn canonical_numbering(&self) -> Numbering {
        let nv = self.vertex_count();
        let mut id = vec![usize::MAX; nv];
        let mut start = vec![0; nv];
        let mut order: Vec<usize> = (0..self.n).collect();
        for b in 0..self.n {
            id[b] = b;
        }
        let mut qi = 0;
        while qi < order.len() {
            let v = order[qi];
            qi += 1;
            let d = self.degree(v);
            for s in 0..d {
                let h = self.rotation[v][(start[v] + s) % d];
                let w = self.head(h);
                if id[w] == usize::MAX {
                    id[w] = order.len();
                    start[w] = self.pos[h ^ 1];
                    order.push(w);
                }
            }
        }
        Numbering { order, id, start }
    }

    /// A string that two embedded graphs share iff they are equal up to
    /// renaming internal vertices and edges.
    pub fn canonical_form(&self) -> String {
        let num = self.canonical_numbering();
        let mut out = String::new();
        write!(out, "n{}", self.n).unwrap();
        for &v in &num.order {
            out.push('|');
            if v >= self.n {
                write!(out, "h{}", self.helicity[v]).unwrap();
            }
            let d = self.degree(v);
            for s in 0..d {
                let h = self.rotation[v][(num.start[v] + s) % d];
                let t = h ^ 1;
                let w = self.origin[t];
                let slot = (self.pos[t] + self.degree(w) - num.start[w]) % self.degree(w);
                write!(out, " {}.{}", num.id[w], slot).unwrap();
            }
        }
        out
    }

    /// The same graph renumbered canonically; structurally identical graphs
    /// canonicalize to identical vertex and half-edge numberings.
    pub fn canonicalize(&self) -> GrassmannianGraph {
        let num = self.canonical_numbering();
        let mut hmap = vec![usize::MAX; self.half_edge_count()];
        let mut next = 0;
        let mut rotation = Vec::with_capacity(num.order.len());
        for &v in &num.order {
            let d = self.degree(v);
            let mut rot = Vec::with_capacity(d);
            for s in 0..d {
                let h = self.rotation[v][(num.start[v] + s) % d];
                if hmap[h] == usize::MAX {
                    hmap[h] = next;
                    hmap[h ^ 1] = next + 1;
                    next += 2;
                }
                rot.push(hmap[h]);
            }
            rotation.push(rot);
        }
        let mut origin = vec![0; self.half_edge_count()];
        for (v, rot) in rotation.iter().enumerate() {
            for &h in rot {
                origin[h] = v;
            }
        }
        let helicity = num.order.iter().map(|&v| self.helicity[v]).collect();
        GrassmannianGraph::from_parts(self.n, helicity, rotation, origin)
            .expect("relabeling preserves validity")
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{square, star};
    use super::super::GraphBuilder;

    #[test]
    fn canonical_form_ignores_numbering() {
        let a = square(true);
        // Same square, internal vertices created in a different order.
        let mut b = GraphBuilder::new(4);
        let v: Vec<usize> = [2, 1, 2, 1]
            .iter()
            .map(|&h| b.add_internal(h))
            .rev()
            .collect();
        let leg: Vec<usize> = (0..4)
            .map(|j| b.add_edge(v[j], b.boundary(j + 1)))
            .collect();
        let ring: Vec<usize> = (0..4).map(|j| b.add_edge(v[(j + 1) % 4], v[j])).collect();
        for j in 0..4 {
            b.set_rotation(v[j], vec![ring[(j + 3) % 4], leg[j], ring[j]]);
        }
        let b = b.build().unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_eq!(a, b);
        assert_ne!(square(true), square(false));
        assert_ne!(star(1, 3), star(2, 3));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let g = square(false).canonicalize();
        let h = g.canonicalize();
        assert_eq!(g.rotation, h.rotation);
        assert_eq!(g.canonical_form(), square(false).canonical_form());
    }
}
