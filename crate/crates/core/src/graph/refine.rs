//! Refinement: replace an internal vertex of type `(h, d)` by a complete
//! reduced graph of the same type.

use std::collections::HashMap;

use super::edit::EditableMap;
use super::GrassmannianGraph;
use crate::error::{Error, Result};
use crate::moves::build_reduced_plabic;
use crate::positroid::DecoratedPermutation;

impl GrassmannianGraph {
    /// Glues `H` into the place of `v`, with `b_j` of `H` attached to the edge
    /// in rotation slot `j - 1` of `v`.
    pub fn refine_vertex(&self, v: usize, h: &GrassmannianGraph) -> Result<GrassmannianGraph> {
        self.refine_vertex_at(v, h, 0)
    }

    /// As [`GrassmannianGraph::refine_vertex`], with `b_j` glued to slot `j - 1 + offset`.
    pub fn refine_vertex_at(
        &self,
        v: usize,
        sub: &GrassmannianGraph,
        offset: usize,
    ) -> Result<GrassmannianGraph> {
        if v < self.n || v >= self.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "{v} is not an internal vertex"
            )));
        }
        let (hv, d) = self.vertex_type(v);
        if sub.n != d || !sub.is_complete(hv).unwrap_or(false) {
            return Err(Error::TypeMismatch(format!(
                "vertex {v} has type ({hv},{d}); replacement is not complete reduced of that type"
            )));
        }
        if self.rotation[v].iter().any(|&h| self.head(h) == v) {
            return Err(Error::InvalidGraph(format!("vertex {v} carries a loop")));
        }
        let mut m = EditableMap::from_graph(self);
        let slot: Vec<usize> = (0..d).map(|s| self.rotation[v][(s + offset) % d]).collect();
        let mut vmap: HashMap<usize, usize> = HashMap::new();
        for x in sub.internal_vertices() {
            vmap.insert(x, m.add_vertex(sub.helicity(x)));
        }
        let mut hmap: HashMap<usize, usize> = HashMap::new();
        for e in 0..sub.edge_count() {
            let (a, b) = (sub.origin(2 * e), sub.origin(2 * e + 1));
            match (a < sub.n, b < sub.n) {
                (false, false) => {
                    let (p, q) = m.add_edge(vmap[&a], vmap[&b]);
                    hmap.insert(2 * e, p);
                    hmap.insert(2 * e + 1, q);
                }
                (true, false) => {
                    hmap.insert(2 * e + 1, slot[a]);
                }
                (false, true) => {
                    hmap.insert(2 * e, slot[b]);
                }
                (true, true) => {
                    // A boundary edge of H joins the two outer neighbours directly.
                    let (gj, gl) = (slot[a], slot[b]);
                    let ul = m.head(gl);
                    m.replace(ul, gl ^ 1, gj);
                    m.edge_alive[gl / 2] = false;
                }
            }
        }
        m.rotation[v].clear();
        for x in sub.internal_vertices() {
            let nx = vmap[&x];
            let rot: Vec<usize> = sub.rotation(x).iter().map(|h| hmap[h]).collect();
            for &h in &rot {
                m.origin[h] = nx;
            }
            m.rotation[nx] = rot;
        }
        m.kill_vertex(v);
        m.into_graph()
    }
}

/// Refines every non-plabic internal vertex by a complete reduced plabic graph
/// of its type.
pub fn plabic_refinement(g: &GrassmannianGraph) -> Result<GrassmannianGraph> {
    let mut cur = g.clone();
    while let Some(v) = cur
        .internal_vertices()
        .find(|&v| !matches!(cur.vertex_type(v), (1, 3) | (2, 3) | (0, 1) | (1, 1)))
    {
        let (h, d) = cur.vertex_type(v);
        let piece = build_reduced_plabic(&DecoratedPermutation::shift(h, d)?)?;
        cur = cur.refine_vertex(v, &piece)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{square, star};
    use super::*;

    #[test]
    fn refining_a_quadrivalent_vertex_by_the_square() {
        let g = star(2, 4);
        let r = g.refine_vertex(4, &square(true)).unwrap();
        assert_eq!(r, square(true));
        assert_eq!(
            r.strand_permutation().unwrap(),
            g.strand_permutation().unwrap()
        );
        assert_eq!(
            r.positroid_of_graph().unwrap(),
            g.positroid_of_graph().unwrap()
        );
        let r2 = g.refine_vertex_at(4, &square(true), 1).unwrap();
        assert_eq!(r2, square(false));
    }

    #[test]
    fn type_mismatch() {
        let g = star(1, 4);
        assert!(matches!(
            g.refine_vertex(4, &square(true)),
            Err(Error::TypeMismatch(_))
        ));
    }

    #[test]
    fn plabic_refinement_of_plabic_is_identity() {
        let g = star(1, 3);
        assert_eq!(plabic_refinement(&g).unwrap(), g);
        assert!(g.is_plabic());
    }

    #[test]
    fn plabic_refinement_of_stars() {
        for n in 2..=6 {
            for h in 0..=n {
                let g = star(h, n);
                let p = plabic_refinement(&g).unwrap();
                assert!(p.is_plabic(), "({h},{n})");
                assert_eq!(p.graph_helicity(), g.graph_helicity());
                if 0 < h && h < n {
                    assert_eq!(
                        p.strand_permutation().unwrap(),
                        g.strand_permutation().unwrap(),
                        "({h},{n})"
                    );
                    assert_eq!(
                        p.positroid_of_graph().unwrap(),
                        g.positroid_of_graph().unwrap(),
                        "({h},{n})"
                    );
                    assert!(p.is_reduced(), "({h},{n})");
                } else {
                    // Extraneous (0,n)/(n,n) vertices turn into boundary leaves.
                    assert_eq!(
                        p.strand_permutation().unwrap(),
                        DecoratedPermutation::shift(h, n).unwrap()
                    );
                }
            }
        }
    }
}
