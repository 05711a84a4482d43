//! Building and editing rotation systems.

use super::GrassmannianGraph;
use crate::error::{Error, Result};

/// Assembles a graph from vertices, edges and (optionally) explicit rotations.
///
/// Edge `e` between `u` and `v` gets half-edge `2e` at `u` and `2e + 1` at `v`.
/// Unless [`GraphBuilder::set_rotation`] is called, a vertex's rotation is the
/// order in which its edges were added.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    helicity: Vec<usize>,
    ends: Vec<(usize, usize)>,
    rotation: Vec<Option<Vec<usize>>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            helicity: vec![0; n],
            ends: Vec::new(),
            rotation: vec![None; n],
        }
    }

    /// Vertex id of `b_i`.
    pub fn boundary(&self, i: usize) -> usize {
        assert!((1..=self.n).contains(&i));
        i - 1
    }

    pub fn add_internal(&mut self, h: usize) -> usize {
        self.helicity.push(h);
        self.rotation.push(None);
        self.helicity.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        self.ends.push((u, v));
        self.ends.len() - 1
    }

    /// Clockwise edge order at `v`. A loop edge is listed twice; its first
    /// occurrence is half-edge `2e`.
    pub fn set_rotation(&mut self, v: usize, edges: Vec<usize>) {
        self.rotation[v] = Some(edges);
    }

    pub fn build(self) -> Result<GrassmannianGraph> {
        let nv = self.helicity.len();
        let mut origin = vec![usize::MAX; 2 * self.ends.len()];
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            if u >= nv || v >= nv {
                return Err(Error::InvalidGraph(format!(
                    "edge {e} has an unknown endpoint"
                )));
            }
            origin[2 * e] = u;
            origin[2 * e + 1] = v;
        }
        let mut default_rot: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            default_rot[u].push(2 * e);
            default_rot[v].push(2 * e + 1);
        }
        let mut rotation = Vec::with_capacity(nv);
        for (v, explicit) in self.rotation.into_iter().enumerate() {
            match explicit {
                None => rotation.push(std::mem::take(&mut default_rot[v])),
                Some(edges) => {
                    let mut used = std::collections::HashSet::new();
                    let mut rot = Vec::with_capacity(edges.len());
                    for e in edges {
                        let (a, b) = *self.ends.get(e).ok_or_else(|| {
                            Error::InvalidGraph(format!("unknown edge {e} in rotation of {v}"))
                        })?;
                        let h = if a == v && used.insert(2 * e) {
                            2 * e
                        } else if b == v && used.insert(2 * e + 1) {
                            2 * e + 1
                        } else {
                            return Err(Error::InvalidGraph(format!(
                                "edge {e} listed wrongly at vertex {v}"
                            )));
                        };
                        rot.push(h);
                    }
                    rotation.push(rot);
                }
            }
        }
        GrassmannianGraph::from_parts(self.n, self.helicity, rotation, origin)
    }
}

/// Mutable rotation system with tombstones, compacted back into a graph.
///
/// Twins are always `h ^ 1`. Boundary vertices are never removed.
#[derive(Clone, Debug)]
pub(crate) struct EditableMap {
    pub n: usize,
    pub helicity: Vec<usize>,
    pub rotation: Vec<Vec<usize>>,
    pub origin: Vec<usize>,
    pub vertex_alive: Vec<bool>,
    pub edge_alive: Vec<bool>,
}

impl EditableMap {
    pub fn from_graph(g: &GrassmannianGraph) -> Self {
        EditableMap {
            n: g.n,
            helicity: g.helicity.clone(),
            rotation: g.rotation.clone(),
            origin: g.origin.clone(),
            vertex_alive: vec![true; g.vertex_count()],
            edge_alive: vec![true; g.edge_count()],
        }
    }

    /// Only boundary vertices, no edges.
    pub fn empty(n: usize) -> Self {
        EditableMap {
            n,
            helicity: vec![0; n],
            rotation: vec![Vec::new(); n],
            origin: Vec::new(),
            vertex_alive: vec![true; n],
            edge_alive: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, h: usize) -> usize {
        self.helicity.push(h);
        self.rotation.push(Vec::new());
        self.vertex_alive.push(true);
        self.helicity.len() - 1
    }

    /// New edge `u - v`; returns the half-edges at `u` and at `v`. Rotations are untouched.
    pub fn add_edge(&mut self, u: usize, v: usize) -> (usize, usize) {
        let h = self.origin.len();
        self.origin.push(u);
        self.origin.push(v);
        self.edge_alive.push(true);
        (h, h + 1)
    }

    pub fn head(&self, h: usize) -> usize {
        self.origin[h ^ 1]
    }

    pub fn position(&self, h: usize) -> usize {
        let v = self.origin[h];
        self.rotation[v]
            .iter()
            .position(|&x| x == h)
            .expect("half-edge in its rotation")
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Removes edge `e` from both rotations.
    pub fn kill_edge(&mut self, e: usize) {
        for h in [2 * e, 2 * e + 1] {
            let v = self.origin[h];
            self.rotation[v].retain(|&x| x != h);
        }
        self.edge_alive[e] = false;
    }

    pub fn kill_vertex(&mut self, v: usize) {
        debug_assert!(v >= self.n && self.rotation[v].is_empty());
        self.vertex_alive[v] = false;
    }

    /// Moves half-edge `h` to vertex `v`, taking the place of `old` in `v`'s rotation.
    pub fn replace(&mut self, v: usize, old: usize, h: usize) {
        let p = self.rotation[v]
            .iter()
            .position(|&x| x == old)
            .expect("replaced half-edge present");
        self.rotation[v][p] = h;
        self.origin[h] = v;
    }

    /// Splits the edge of `h` by a new vertex `x` of helicity `hx`. Returns
    /// `(x, toward_origin, toward_head)`: the two half-edges at `x`, which form
    /// its rotation in that order.
    pub fn subdivide(&mut self, h: usize, hx: usize) -> (usize, usize, usize) {
        let w = self.head(h);
        let t = h ^ 1;
        let x = self.add_vertex(hx);
        let (p, q) = self.add_edge(x, w);
        self.replace(w, t, q);
        self.origin[t] = x;
        self.rotation[x] = vec![t, p];
        (x, t, p)
    }

    /// Replaces a degree-2 vertex by a single edge.
    pub fn dissolve(&mut self, v: usize) -> Result<()> {
        if self.degree(v) != 2 {
            return Err(Error::InvalidGraph(format!(
                "vertex {v} does not have degree 2"
            )));
        }
        let (p, q) = (self.rotation[v][0], self.rotation[v][1]);
        if p ^ 1 == q {
            return Err(Error::InvalidGraph(format!("vertex {v} carries a loop")));
        }
        let u2 = self.head(q);
        let qt = q ^ 1;
        self.rotation[v].clear();
        self.edge_alive[q / 2] = false;
        self.replace(u2, qt, p);
        self.kill_vertex(v);
        Ok(())
    }

    /// Removes a leaf `l` hanging off an internal vertex, adjusting that
    /// vertex's helicity so perfect orientations correspond.
    pub fn absorb_leaf(&mut self, l: usize) -> Result<usize> {
        let h = self.rotation[l][0];
        let u = self.head(h);
        if u < self.n {
            return Err(Error::InvalidGraph(format!(
                "leaf {l} hangs off the boundary"
            )));
        }
        if self.helicity[l] == 0 {
            if self.helicity[u] == 0 {
                return Err(Error::InvalidGraph(format!(
                    "cannot absorb 0-leaf {l} into vertex {u}"
                )));
            }
            self.helicity[u] -= 1;
        }
        self.kill_edge(h / 2);
        self.kill_vertex(l);
        Ok(u)
    }

    /// Contracts the non-loop edge with half-edge `h` (at `u`) into `u`. The
    /// merged rotation is `u`'s rotation after `h` followed by the other end's
    /// rotation after the twin; the helicity is `h(u) + h(v) - 1`.
    pub fn contract(&mut self, h: usize) -> Result<usize> {
        let u = self.origin[h];
        let v = self.head(h);
        if u == v || u < self.n || v < self.n {
            return Err(Error::InvalidGraph(
                "only edges between distinct internal vertices contract".into(),
            ));
        }
        let hu = self.helicity[u] + self.helicity[v];
        if hu == 0 {
            return Err(Error::InvalidGraph("contraction of two 0-vertices".into()));
        }
        let pu = self.position(h);
        let pv = self.position(h ^ 1);
        let du = self.degree(u);
        let dv = self.degree(v);
        let mut rot: Vec<usize> = (1..du).map(|s| self.rotation[u][(pu + s) % du]).collect();
        rot.extend((1..dv).map(|s| self.rotation[v][(pv + s) % dv]));
        for &x in &rot {
            self.origin[x] = u;
        }
        self.rotation[u] = rot;
        self.rotation[v].clear();
        self.edge_alive[h / 2] = false;
        self.helicity[u] = hu - 1;
        self.kill_vertex(v);
        Ok(u)
    }

    /// Alive internal vertices.
    pub fn internal(&self) -> Vec<usize> {
        (self.n..self.helicity.len())
            .filter(|&v| self.vertex_alive[v])
            .collect()
    }

    pub fn into_graph(self) -> Result<GrassmannianGraph> {
        let mut vmap = vec![usize::MAX; self.helicity.len()];
        let mut helicity = Vec::new();
        for v in 0..self.helicity.len() {
            if self.vertex_alive[v] {
                vmap[v] = helicity.len();
                helicity.push(self.helicity[v]);
            }
        }
        let mut hmap = vec![usize::MAX; self.origin.len()];
        let mut origin = Vec::new();
        for e in 0..self.edge_alive.len() {
            if self.edge_alive[e] {
                for h in [2 * e, 2 * e + 1] {
                    hmap[h] = origin.len();
                    origin.push(vmap[self.origin[h]]);
                }
            }
        }
        if origin.contains(&usize::MAX) {
            return Err(Error::InvalidGraph(
                "edge attached to a removed vertex".into(),
            ));
        }
        let rotation = (0..self.helicity.len())
            .filter(|&v| self.vertex_alive[v])
            .map(|v| self.rotation[v].iter().map(|&h| hmap[h]).collect())
            .collect();
        GrassmannianGraph::from_parts(self.n, helicity, rotation, origin)
    }
}
