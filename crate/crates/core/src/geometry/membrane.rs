//! Membranes: triangulated disks in `Z^n` with edges in `Φ = {e_i - e_j}`.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::GrassmannianGraph;
use crate::positroid::DecoratedPermutation;
use crate::subset::Subset;

/// Vertices are `e_I` for face labels `I`; one triangle per trivalent vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membrane {
    pub n: usize,
    pub k: usize,
    pub vertices: BTreeSet<Subset>,
    pub triangles: Vec<[Subset; 3]>,
    /// `a_1, …, a_n` of the boundary loop.
    pub boundary: Vec<Subset>,
}

/// `a_1 = e_{J_1}` and `a_{i+1} - a_i = e_{w(i)} - e_i`.
pub fn boundary_loop(w: &DecoratedPermutation) -> Result<Vec<Subset>> {
    let fixed = w.fixed_points();
    if !fixed.is_empty() {
        return Err(Error::FixedPointsPresent(fixed));
    }
    let n = w.n();
    let mut a = vec![w.necklace().get(1)];
    for i in 1..n {
        a.push(a[i - 1].without(i).with(w.image(i)));
    }
    Ok(a)
}

fn in_phi(a: Subset, b: Subset) -> bool {
    a.difference(b).len() == 1 && b.difference(a).len() == 1
}

impl Membrane {
    /// Number of triangles.
    pub fn area(&self) -> usize {
        self.triangles.len()
    }

    /// Every side of every triangle is a root `e_i - e_j`.
    pub fn edges_in_phi(&self) -> bool {
        self.triangles
            .iter()
            .all(|t| in_phi(t[0], t[1]) && in_phi(t[1], t[2]) && in_phi(t[0], t[2]))
    }

    /// Sides counted with multiplicity over all triangles.
    fn side_counts(&self) -> BTreeMap<(Subset, Subset), usize> {
        let mut c = BTreeMap::new();
        for t in &self.triangles {
            for (x, y) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                *c.entry((std::cmp::min(x, y), std::cmp::max(x, y)))
                    .or_insert(0) += 1;
            }
        }
        c
    }

    /// Sides used by exactly one triangle, i.e. the boundary of the complex.
    pub fn boundary_sides(&self) -> BTreeSet<(Subset, Subset)> {
        self.side_counts()
            .into_iter()
            .filter(|&(_, c)| c == 1)
            .map(|(s, _)| s)
            .collect()
    }

    /// The segments `[a_i, a_{i+1}]` of the boundary loop.
    pub fn loop_sides(&self) -> BTreeSet<(Subset, Subset)> {
        let n = self.boundary.len();
        (0..n)
            .map(|i| {
                let (x, y) = (self.boundary[i], self.boundary[(i + 1) % n]);
                (std::cmp::min(x, y), std::cmp::max(x, y))
            })
            .collect()
    }

    /// The complex is a disk whose boundary is the loop: every side is used at
    /// most twice, the once-used sides are exactly the loop, and `V - E + F = 1`.
    pub fn boundary_is_loop(&self) -> bool {
        let counts = self.side_counts();
        let euler = self.vertices.len() as i64 - counts.len() as i64 + self.triangles.len() as i64;
        counts.values().all(|&c| c <= 2) && self.boundary_sides() == self.loop_sides() && euler == 1
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "area": self.area(),
            "vertices": self.vertices.iter().map(|s| s.label()).collect::<Vec<_>>(),
            "triangles": self.triangles.iter().map(|t| t.iter().map(|s| s.label()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "boundary": self.boundary.iter().map(|s| s.label()).collect::<Vec<_>>(),
        })
    }
}

/// The membrane of a plabic graph whose strand permutation has no fixed points.
/// Non-reduced graphs are accepted as long as their strands are open and simple.
pub fn membrane_from_graph(g: &GrassmannianGraph) -> Result<Membrane> {
    if let Some(v) = g.internal_vertices().find(|&v| g.degree(v) != 3) {
        return Err(Error::InvalidGraph(format!("vertex {v} is not trivalent")));
    }
    let w = g.strand_permutation()?;
    let boundary = boundary_loop(&w)?;
    let labels = g.strand_side_labels()?;
    let faces = g.faces();
    let triangles: Vec<[Subset; 3]> = g
        .internal_vertices()
        .map(|v| {
            let r = g.rotation(v);
            [
                labels[faces.face_of(r[0])],
                labels[faces.face_of(r[1])],
                labels[faces.face_of(r[2])],
            ]
        })
        .collect();
    let vertices = triangles
        .iter()
        .flatten()
        .copied()
        .chain(boundary.iter().copied())
        .collect();
    Ok(Membrane {
        n: g.n(),
        k: w.helicity(),
        vertices,
        triangles,
        boundary,
    })
}
