//! Small named graphs used by tests, examples and the acceptance run.

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, GrassmannianGraph};
use crate::moves::{
    build_reduced_plabic, coarsen_square, contract_edge, flip_graph, move_sites, MoveKind, MoveSite,
};
use crate::positroid::DecoratedPermutation;

/// One internal vertex of helicity `h` joined to all of `b_1..b_n`.
pub fn star(h: usize, n: usize) -> GrassmannianGraph {
    let mut b = GraphBuilder::new(n);
    let v = b.add_internal(h);
    for i in 1..=n {
        b.add_edge(b.boundary(i), v);
    }
    b.build().expect("stars are valid")
}

/// The (2,4) square: `b_1..b_4` clockwise, corner `j` attached to `b_j`,
/// corner 1 white when `white_first`. Its internal face is labelled `{2,4}`
/// when `white_first` and `{1,3}` otherwise.
pub fn square(white_first: bool) -> GrassmannianGraph {
    let mut b = GraphBuilder::new(4);
    let (c1, c2) = if white_first { (1, 2) } else { (2, 1) };
    let v: Vec<usize> = [c1, c2, c1, c2]
        .iter()
        .map(|&h| b.add_internal(h))
        .collect();
    let leg: Vec<usize> = (0..4)
        .map(|j| b.add_edge(b.boundary(j + 1), v[j]))
        .collect();
    let ring: Vec<usize> = (0..4).map(|j| b.add_edge(v[j], v[(j + 1) % 4])).collect();
    for j in 0..4 {
        // leg, then the ring edge to the clockwise-next corner, then the previous one.
        b.set_rotation(v[j], vec![leg[j], ring[j], ring[(j + 3) % 4]]);
    }
    b.build().expect("the square is valid")
}

/// A reduced plabic graph for the top cell of `Gr(k, n)`.
pub fn top_cell(k: usize, n: usize) -> Result<GrassmannianGraph> {
    build_reduced_plabic(&DecoratedPermutation::shift(k, n)?)
}

/// First graph in the (2,5) flip graph satisfying `pick`, transformed by it.
fn from_flip_graph_25<F>(pick: F) -> Result<GrassmannianGraph>
where
    F: FnMut(&GrassmannianGraph) -> Option<Result<GrassmannianGraph>>,
{
    let fg = flip_graph(2, 5)?;
    fg.nodes
        .iter()
        .find_map(pick)
        .unwrap_or_else(|| {
            Err(Error::PatternMismatch(
                "no suitable graph in the (2,5) flip graph".into(),
            ))
        })
        .map(|g| g.canonicalize())
}

/// A complete reduced (2,5) graph with one `(1,4)` vertex and two internal faces,
/// from contracting a white-white edge.
pub fn five_with_white_quad() -> Result<GrassmannianGraph> {
    from_flip_graph_25(|g| {
        (0..g.edge_count())
            .find(|&e| {
                let (u, v) = (g.origin(2 * e), g.origin(2 * e + 1));
                u != v && g.is_internal_edge(e) && g.is_white(u) && g.is_white(v)
            })
            .map(|e| contract_edge(g, e))
    })
}

/// A complete reduced (2,5) graph with one `(2,4)` vertex and one internal face,
/// from collapsing a square face.
pub fn five_with_square_vertex() -> Result<GrassmannianGraph> {
    from_flip_graph_25(|g| {
        move_sites(g)
            .into_iter()
            .find_map(|(kind, site)| match (kind, site) {
                (MoveKind::Square, MoveSite::Face(f)) => Some(coarsen_square(g, f)),
                _ => None,
            })
    })
}

/// A reduced graph for a non-top cell of `Gr(3, 6)`, with a fixed point.
pub fn lower_cell_36() -> Result<GrassmannianGraph> {
    let w = DecoratedPermutation::with_uniform_color(vec![3, 5, 6, 4, 1, 2], 1)?;
    build_reduced_plabic(&w)
}

/// The five graphs used for the measurement suite.
pub fn measurement_corpus() -> Result<Vec<(&'static str, GrassmannianGraph)>> {
    Ok(vec![
        ("square", square(true)),
        ("top_25", top_cell(2, 5)?),
        ("five_with_white_quad", five_with_white_quad()?),
        ("five_with_square_vertex", five_with_square_vertex()?),
        ("lower_cell_36", lower_cell_36()?),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_have_the_advertised_shape() {
        let q = five_with_white_quad().unwrap();
        assert!(q.is_complete(2).unwrap());
        assert_eq!(q.faces().internal_count(), 2);
        assert_eq!(
            q.internal_vertices()
                .filter(|&v| q.vertex_type(v) == (1, 4))
                .count(),
            1
        );

        let c = five_with_square_vertex().unwrap();
        assert!(c.is_complete(2).unwrap());
        assert_eq!(c.faces().internal_count(), 1);
        assert_eq!(
            c.internal_vertices()
                .filter(|&v| c.vertex_type(v) == (2, 4))
                .count(),
            1
        );

        let l = lower_cell_36().unwrap();
        assert!(l.is_reduced());
        assert_eq!(l.strand_permutation().unwrap().fixed_points(), vec![4]);
        for (name, g) in measurement_corpus().unwrap() {
            assert!(g.is_reduced(), "{name}");
        }
    }
}
