//! Moves of plabic graphs, reduced graphs from decorated permutations, and
//! flip graphs of complete reduced plabic graphs.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::edit::EditableMap;
use crate::graph::GrassmannianGraph;
use crate::positroid::{affine_length, DecoratedPermutation};

/// Largest `n` accepted by [`flip_graph`] unless overridden.
pub const DEFAULT_MAX_N: usize = 8;
/// Node cap for flip-graph breadth-first search unless overridden.
pub const DEFAULT_CAP: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    /// (1,4): uncontract a white-white edge the other way.
    #[serde(rename = "1,4")]
    White,
    /// (2,4): the square move.
    #[serde(rename = "2,4")]
    Square,
    /// (3,4): uncontract a black-black edge the other way.
    #[serde(rename = "3,4")]
    Black,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveSite {
    Edge(usize),
    Face(usize),
}

// ---------------------------------------------------------------------------
// Building reduced graphs
// ---------------------------------------------------------------------------

/// A bridge `(i, j)` between consecutive non-fixed positions (all positions
/// strictly between are fixed) such that swapping `f(i)` and `f(j)` keeps `f`
/// bounded and adds exactly one inversion.
fn find_bridge(f: &[i64]) -> Option<(usize, usize, Vec<i64>)> {
    let n = f.len();
    let nn = n as i64;
    let fixed = |p: usize| f[p - 1] == p as i64 || f[p - 1] == p as i64 + nn;
    let len = affine_length(f);
    for i in (1..=n).filter(|&p| !fixed(p)) {
        let j = (1..n).map(|d| (i - 1 + d) % n + 1).find(|&p| !fixed(p))?;
        // Affine position of j after i, and its value there.
        let (jj, fj) = if j > i {
            (j as i64, f[j - 1])
        } else {
            (j as i64 + nn, f[j - 1] + nn)
        };
        let (ii, fi) = (i as i64, f[i - 1]);
        if !(fi < fj && fj <= ii + nn && fi >= jj) {
            continue;
        }
        let mut g = f.to_vec();
        g[i - 1] = fj;
        g[j - 1] = if j > i { fi } else { fi - nn };
        if affine_length(&g) == len + 1 {
            return Some((i, j, g));
        }
    }
    None
}

/// Inserts a bridge between `b_i` and `b_j`, the next boundary vertex
/// clockwise that is not a lollipop: a vertex on each leg, joined across the
/// face between them.
fn add_bridge(m: &mut EditableMap, i: usize, j: usize, white_left: bool) {
    let (hl, hr) = if white_left { (1, 2) } else { (2, 1) };
    let bi = m.rotation[i - 1][0];
    let bj = m.rotation[j - 1][0];
    let (x, x_up, x_down) = m.subdivide(bi, hl);
    let (y, y_up, y_down) = m.subdivide(bj, hr);
    let (hx, hy) = m.add_edge(x, y);
    m.rotation[x] = vec![x_up, hx, x_down];
    m.rotation[y] = vec![y_up, y_down, hy];
}

/// Absorbs internal leaves and dissolves `(1,2)` vertices until none remain.
fn simplify(m: &mut EditableMap) -> Result<()> {
    loop {
        let mut changed = false;
        for v in m.internal() {
            if !m.vertex_alive[v] {
                continue;
            }
            let d = m.degree(v);
            if d == 1 && m.head(m.rotation[v][0]) >= m.n {
                m.absorb_leaf(v)?;
                changed = true;
            } else if d == 2 && m.helicity[v] == 1 {
                m.dissolve(v)?;
                changed = true;
            }
        }
        if !changed {
            return Ok(());
        }
    }
}

fn bridge_graph(
    n: usize,
    base: &[i64],
    bridges: &[(usize, usize)],
    white_left: bool,
) -> Result<GrassmannianGraph> {
    let mut m = EditableMap::empty(n);
    for i in 1..=n {
        let color = usize::from(base[i - 1] == (i + n) as i64);
        let leaf = m.add_vertex(color);
        let (hb, hl) = m.add_edge(i - 1, leaf);
        m.rotation[i - 1].push(hb);
        m.rotation[leaf].push(hl);
    }
    for &(i, j) in bridges.iter().rev() {
        add_bridge(&mut m, i, j, white_left);
    }
    simplify(&mut m)?;
    m.into_graph()
}

/// A reduced plabic graph with strand permutation `w`, by bridge
/// decomposition; the result is checked, not trusted.
pub fn build_reduced_plabic(w: &DecoratedPermutation) -> Result<GrassmannianGraph> {
    let n = w.n();
    let mut f = w.bounded_affine();
    let mut bridges = Vec::new();
    while f
        .iter()
        .enumerate()
        .any(|(i, &x)| x != i as i64 + 1 && x != (i + 1 + n) as i64)
    {
        let (i, j, next) = find_bridge(&f)
            .ok_or_else(|| Error::InvalidPermutation(format!("no bridge found for {w:?}")))?;
        bridges.push((i, j));
        f = next;
    }
    let mut last = None;
    for white_left in [true, false] {
        let g = bridge_graph(n, &f, &bridges, white_left)?;
        if g.is_plabic() && g.is_reduced() && g.strand_permutation().as_ref() == Ok(w) {
            return Ok(g.canonicalize());
        }
        last = Some(g);
    }
    Err(Error::InvalidGraph(format!(
        "bridge construction for {w:?} did not verify (last attempt: {})",
        last.map(|g| g.canonical_form()).unwrap_or_default()
    )))
}

// ---------------------------------------------------------------------------
// Local moves
// ---------------------------------------------------------------------------

fn parallel(g: &GrassmannianGraph, u: usize, v: usize) -> bool {
    g.rotation(u).iter().filter(|&&h| g.head(h) == v).count() > 1
}

fn contraction_kind(g: &GrassmannianGraph, e: usize) -> Option<MoveKind> {
    let (u, v) = (g.origin(2 * e), g.origin(2 * e + 1));
    if u == v || !g.is_internal_edge(e) || parallel(g, u, v) {
        return None;
    }
    match (g.vertex_type(u), g.vertex_type(v)) {
        ((1, 3), (1, 3)) => Some(MoveKind::White),
        ((2, 3), (2, 3)) => Some(MoveKind::Black),
        _ => None,
    }
}

/// The four corners of a square face with alternating trivalent corners.
fn square_corners(g: &GrassmannianGraph, f: usize) -> Option<Vec<usize>> {
    let faces = g.faces();
    if !faces.is_internal(f) || faces.half_edges(f).len() != 4 {
        return None;
    }
    let corners: Vec<usize> = faces.half_edges(f).iter().map(|&h| g.origin(h)).collect();
    let mut sorted = corners.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != 4 || corners.iter().any(|&v| g.degree(v) != 3) {
        return None;
    }
    let hs: Vec<usize> = corners.iter().map(|&v| g.helicity(v)).collect();
    let alternating = (hs == [1, 2, 1, 2]) || (hs == [2, 1, 2, 1]);
    alternating.then_some(corners)
}

/// Every place a move applies, in a fixed order.
pub fn move_sites(g: &GrassmannianGraph) -> Vec<(MoveKind, MoveSite)> {
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        if let Some(kind) = contraction_kind(g, e) {
            out.push((kind, MoveSite::Edge(e)));
        }
    }
    for f in g.faces().internal() {
        if square_corners(g, f).is_some() {
            out.push((MoveKind::Square, MoveSite::Face(f)));
        }
    }
    out
}

/// Applies one move; the pattern at `site` must match `kind`.
pub fn apply_move(
    g: &GrassmannianGraph,
    site: MoveSite,
    kind: MoveKind,
) -> Result<GrassmannianGraph> {
    match (kind, site) {
        (MoveKind::White | MoveKind::Black, MoveSite::Edge(e)) => {
            if e >= g.edge_count() || contraction_kind(g, e) != Some(kind) {
                return Err(Error::PatternMismatch(format!(
                    "edge {e} is not a {kind:?} site"
                )));
            }
            let mut m = EditableMap::from_graph(g);
            let (hu, hv) = (2 * e, 2 * e + 1);
            let (u, v) = (g.origin(hu), g.origin(hv));
            let at = |x: usize, h: usize, s: usize| g.rotation(x)[(g.position(h) + s) % 3];
            let (a, b) = (at(u, hu, 1), at(u, hu, 2));
            let (c, d) = (at(v, hv, 1), at(v, hv, 2));
            m.rotation[u] = vec![hu, b, c];
            m.rotation[v] = vec![hv, d, a];
            m.origin[c] = u;
            m.origin[a] = v;
            m.into_graph()
        }
        (MoveKind::Square, MoveSite::Face(f)) => {
            let corners = (f < g.faces().count())
                .then(|| square_corners(g, f))
                .flatten()
                .ok_or_else(|| {
                    Error::PatternMismatch(format!("face {f} is not an alternating square"))
                })?;
            let mut m = EditableMap::from_graph(g);
            for v in corners {
                m.helicity[v] = 3 - m.helicity[v];
            }
            m.into_graph()
        }
        _ => Err(Error::PatternMismatch(format!(
            "{kind:?} moves do not act on {site:?}"
        ))),
    }
}

/// All graphs one move away, canonicalized.
pub fn neighbours(g: &GrassmannianGraph) -> Vec<(MoveKind, GrassmannianGraph)> {
    move_sites(g)
        .into_iter()
        .map(|(kind, site)| {
            (
                kind,
                apply_move(g, site, kind)
                    .expect("site was matched")
                    .canonicalize(),
            )
        })
        .collect()
}

/// Breadth-first closure under moves, up to `cap` graphs.
pub fn move_equivalence_class(g: &GrassmannianGraph, cap: usize) -> Result<Vec<GrassmannianGraph>> {
    Ok(explore(g, cap)?.nodes)
}

/// Decided by comparing strand permutations.
pub fn are_move_equivalent(a: &GrassmannianGraph, b: &GrassmannianGraph) -> Result<bool> {
    for g in [a, b] {
        if let Some(v) = g.reduced_violation() {
            return Err(Error::NotReduced(v.to_string()));
        }
    }
    Ok(a.n() == b.n() && a.strand_permutation()? == b.strand_permutation()?)
}

// ---------------------------------------------------------------------------
// Flip graphs
// ---------------------------------------------------------------------------

/// Graphs reachable by moves, with the moves between them.
#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub nodes: Vec<GrassmannianGraph>,
    pub keys: Vec<String>,
    /// `(a, b, kind)` with `a < b`.
    pub edges: Vec<(usize, usize, MoveKind)>,
    index: HashMap<String, usize>,
}

impl FlipGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, g: &GrassmannianGraph) -> Option<usize> {
        self.index.get(&g.canonical_form()).copied()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn distances(&self, adj: &[Vec<usize>], from: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.nodes.len()];
        dist[from] = 0;
        let mut q = VecDeque::from([from]);
        while let Some(u) = q.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.nodes.is_empty()
            || self
                .distances(&self.adjacency(), 0)
                .iter()
                .all(|&d| d != usize::MAX)
    }

    /// Largest distance between two nodes (all-pairs breadth-first search).
    pub fn diameter(&self) -> usize {
        let adj = self.adjacency();
        (0..self.nodes.len())
            .map(|s| {
                self.distances(&adj, s)
                    .into_iter()
                    .filter(|&d| d != usize::MAX)
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.keys,
            "edges": self.edges.iter().map(|&(a, b, k)| serde_json::json!([a, b, k])).collect::<Vec<_>>(),
            "node_count": self.node_count(),
            "edge_count": self.edge_count(),
            "connected": self.is_connected(),
        })
    }
}

fn explore(seed: &GrassmannianGraph, cap: usize) -> Result<FlipGraph> {
    let seed = seed.canonicalize();
    let key = seed.canonical_form();
    let mut index = HashMap::from([(key.clone(), 0)]);
    let mut nodes = vec![seed];
    let mut keys = vec![key];
    let mut edges = std::collections::BTreeSet::new();
    let mut qi = 0;
    while qi < nodes.len() {
        let cur = nodes[qi].clone();
        for (kind, next) in neighbours(&cur) {
            let k = next.canonical_form();
            let j = match index.get(&k) {
                Some(&j) => j,
                None => {
                    if nodes.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    index.insert(k.clone(), nodes.len());
                    nodes.push(next);
                    keys.push(k);
                    nodes.len() - 1
                }
            };
            if j != qi {
                edges.insert((qi.min(j), qi.max(j), kind));
            }
        }
        qi += 1;
    }
    Ok(FlipGraph {
        nodes,
        keys,
        edges: edges.into_iter().collect(),
        index,
    })
}

/// All complete reduced plabic graphs of type `(k, n)` connected to the
/// bridge-built one by moves.
pub fn flip_graph(k: usize, n: usize) -> Result<FlipGraph> {
    flip_graph_with(k, n, DEFAULT_MAX_N, DEFAULT_CAP)
}

pub fn flip_graph_with(k: usize, n: usize, max_n: usize, cap: usize) -> Result<FlipGraph> {
    if k == 0 || k >= n {
        return Err(Error::InvalidInput(format!(
            "flip graphs need 1 <= k <= n - 1, got ({k},{n})"
        )));
    }
    if n > max_n {
        return Err(Error::BoundExceeded(format!(
            "n = {n} exceeds the bound {max_n}"
        )));
    }
    let seed = build_reduced_plabic(&DecoratedPermutation::shift(k, n)?)?;
    explore(&seed, cap)
}

// ---------------------------------------------------------------------------
// Contraction
// ---------------------------------------------------------------------------

/// Contracts the edge `e` between distinct internal vertices; the merged
/// vertex has helicity `h(u) + h(v) - 1`.
pub fn contract_edge(g: &GrassmannianGraph, e: usize) -> Result<GrassmannianGraph> {
    let mut m = EditableMap::from_graph(g);
    m.contract(2 * e)?;
    m.into_graph()
}

/// Contracts every white-white and black-black edge.
pub fn contract_same_colors(g: &GrassmannianGraph) -> Result<GrassmannianGraph> {
    let mut cur = g.clone();
    loop {
        let site = (0..cur.edge_count()).find(|&e| {
            let (u, v) = (cur.origin(2 * e), cur.origin(2 * e + 1));
            u != v
                && cur.is_internal_edge(e)
                && cur.degree(u) > 1
                && cur.degree(v) > 1
                && ((cur.is_white(u) && cur.is_white(v)) || (cur.is_black(u) && cur.is_black(v)))
        });
        match site {
            Some(e) => cur = contract_edge(&cur, e)?,
            None => return Ok(cur.canonicalize()),
        }
    }
}

/// Replaces the alternating square face `f` by a single `(2,4)` vertex.
pub fn coarsen_square(g: &GrassmannianGraph, f: usize) -> Result<GrassmannianGraph> {
    square_corners(g, f)
        .ok_or_else(|| Error::PatternMismatch(format!("face {f} is not an alternating square")))?;
    let ring: Vec<usize> = g.faces().half_edges(f).to_vec();
    let mut m = EditableMap::from_graph(g);
    let keep = m.contract(ring[0])?;
    for &h in &ring[1..3] {
        // After earlier contractions, `h` starts at the merged vertex.
        m.contract(h)?;
    }
    let loop_e = ring[3] / 2;
    m.kill_edge(loop_e);
    m.helicity[keep] -= 1;
    m.into_graph()
}

/// Bipartite (fully contracted) forms of the graphs of `flip_graph(k, n)`.
pub fn contraction_classes(k: usize, n: usize) -> Result<BTreeMap<String, GrassmannianGraph>> {
    let fg = flip_graph(k, n)?;
    classes_of(&fg)
}

pub fn classes_of(fg: &FlipGraph) -> Result<BTreeMap<String, GrassmannianGraph>> {
    let mut out = BTreeMap::new();
    for g in &fg.nodes {
        let c = contract_same_colors(g)?;
        out.entry(c.canonical_form()).or_insert(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn star(h: usize, n: usize) -> GrassmannianGraph {
        let mut b = GraphBuilder::new(n);
        let v = b.add_internal(h);
        for i in 1..=n {
            b.add_edge(b.boundary(i), v);
        }
        b.build().unwrap()
    }

    #[test]
    fn builds_every_decorated_permutation() {
        for n in 1..=6 {
            for w in DecoratedPermutation::all(n) {
                let g = build_reduced_plabic(&w).unwrap_or_else(|e| panic!("{w:?}: {e}"));
                assert!(g.is_plabic());
                assert!(g.is_reduced());
                assert_eq!(g.strand_permutation().unwrap(), w);
            }
        }
    }

    #[test]
    fn small_builds() {
        let g = build_reduced_plabic(&DecoratedPermutation::shift(1, 3).unwrap()).unwrap();
        assert_eq!(g, star(1, 3));
        let w = DecoratedPermutation::new(vec![1, 2], &[(1, 1), (2, 0)].into()).unwrap();
        let g = build_reduced_plabic(&w).unwrap();
        assert_eq!(g.internal_count(), 2);
        assert!(g.internal_vertices().all(|v| g.degree(v) == 1));
        let g = build_reduced_plabic(&DecoratedPermutation::shift(2, 4).unwrap()).unwrap();
        assert_eq!(g.internal_count(), 4);
        assert!(g.is_complete(2).unwrap());
    }

    #[test]
    fn square_move_is_an_involution_and_toggles_the_centre() {
        let g = build_reduced_plabic(&DecoratedPermutation::shift(2, 4).unwrap()).unwrap();
        let sites = move_sites(&g);
        assert_eq!(sites.len(), 1);
        let (kind, site) = sites[0];
        assert_eq!(kind, MoveKind::Square);
        let h = apply_move(&g, site, kind).unwrap();
        assert_ne!(g, h);
        let centre = |x: &GrassmannianGraph| {
            let l = x.face_labels().unwrap();
            l[x.faces().internal().next().unwrap()]
        };
        let (a, b) = (centre(&g), centre(&h));
        assert_ne!(a, b);
        assert_eq!(a.union(b).len(), 4);
        let back = apply_move(&h, move_sites(&h)[0].1, MoveKind::Square).unwrap();
        assert_eq!(back, g);
        assert!(are_move_equivalent(&g, &h).unwrap());
    }

    #[test]
    fn pattern_mismatch() {
        let g = star(1, 3);
        assert!(matches!(
            apply_move(&g, MoveSite::Edge(0), MoveKind::White),
            Err(Error::PatternMismatch(_))
        ));
        assert!(matches!(
            apply_move(&g, MoveSite::Face(0), MoveKind::Square),
            Err(Error::PatternMismatch(_))
        ));
        assert!(!are_move_equivalent(&star(1, 3), &star(2, 3)).unwrap());
    }

    #[test]
    fn white_move_keeps_permutation() {
        let g = build_reduced_plabic(&DecoratedPermutation::shift(1, 5).unwrap()).unwrap();
        let w = g.strand_permutation().unwrap();
        for (kind, site) in move_sites(&g) {
            assert_eq!(kind, MoveKind::White);
            let h = apply_move(&g, site, kind).unwrap();
            assert!(h.is_reduced());
            assert_eq!(h.strand_permutation().unwrap(), w);
            assert_ne!(h, g);
        }
    }

    fn catalan(m: usize) -> usize {
        (0..m).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
    }

    #[test]
    fn flip_graph_counts() {
        for n in 3..=7 {
            let fg = flip_graph(1, n).unwrap();
            assert_eq!(fg.node_count(), catalan(n - 2), "n = {n}");
            assert!(fg.is_connected());
            assert_eq!(contraction_classes(1, n).unwrap().len(), 1);
        }
        let fg = flip_graph(2, 4).unwrap();
        assert_eq!((fg.node_count(), fg.edge_count(), fg.diameter()), (2, 1, 1));
        assert_eq!(contraction_classes(2, 4).unwrap().len(), 2);
        assert!(matches!(flip_graph(2, 9), Err(Error::BoundExceeded(_))));
        assert!(matches!(flip_graph(0, 4), Err(Error::InvalidInput(_))));
        assert!(matches!(
            flip_graph_with(2, 6, 8, 3),
            Err(Error::CapExceeded(3))
        ));
    }

    #[test]
    fn coarsening_a_square() {
        let g = build_reduced_plabic(&DecoratedPermutation::shift(2, 4).unwrap()).unwrap();
        let f = g.faces().internal().next().unwrap();
        let c = coarsen_square(&g, f).unwrap();
        assert_eq!(c, star(2, 4));
    }
}
