//! Cyclic projections of the hypersimplex to the plane, the tilings they
//! induce, and membranes.

mod membrane;
mod svg;
mod tiling;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::subset::Subset;

pub use membrane::{boundary_loop, membrane_from_graph, Membrane};
pub use svg::{graph_svg, membrane_svg, tiling_svg};
pub use tiling::{
    graph_from_tiling, tiling_from_graph, validate_subdivision, Cell, SubdivisionReport, Tiling,
};

pub type Point = (BigRational, BigRational);

/// Signed doubled area of the triangle `a, b, c`; positive when counter-clockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> BigRational {
    (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0)
}

/// Signed area (shoelace), positive for counter-clockwise polygons.
pub fn signed_area(poly: &[Point]) -> BigRational {
    let m = poly.len();
    let twice: BigRational = (0..m)
        .map(|i| {
            let (p, q) = (&poly[i], &poly[(i + 1) % m]);
            &p.0 * &q.1 - &q.0 * &p.1
        })
        .sum();
    twice / BigRational::from_integer(2.into())
}

/// Counter-clockwise with every turn strictly left.
pub fn is_strictly_convex(poly: &[Point]) -> bool {
    let m = poly.len();
    m >= 3 && (0..m).all(|i| orient(&poly[i], &poly[(i + 1) % m], &poly[(i + 2) % m]).is_positive())
}

/// `π(e_I) = Σ_{i∈I} (t_i, t_i²)` for increasing nodes `t_1 < … < t_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicProjection {
    nodes: Vec<BigRational>,
}

impl CyclicProjection {
    pub fn new(nodes: Vec<BigRational>) -> Result<Self> {
        if nodes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "projection nodes must be strictly increasing".into(),
            ));
        }
        Ok(CyclicProjection { nodes })
    }

    /// `t_i = i`.
    pub fn standard(n: usize) -> Self {
        CyclicProjection {
            nodes: (1..=n)
                .map(|i| BigRational::from_integer(BigInt::from(i)))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[BigRational] {
        &self.nodes
    }

    pub fn project(&self, i: Subset) -> Point {
        let mut p = (BigRational::zero(), BigRational::zero());
        for x in i.iter() {
            let t = &self.nodes[x - 1];
            p.0 += t;
            p.1 += t * t;
        }
        p
    }

    /// Corners of `Q(k, n)`: the cyclic intervals `[i, i+k-1]`, counter-clockwise.
    pub fn q_labels(&self, k: usize) -> Vec<Subset> {
        let n = self.n();
        (1..=n).map(|i| Subset::cyclic_interval(i, k, n)).collect()
    }

    pub fn q_polygon(&self, k: usize) -> Vec<Point> {
        self.q_labels(k)
            .into_iter()
            .map(|s| self.project(s))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn projection_examples() {
        let p = CyclicProjection::standard(5);
        assert_eq!(p.project(Subset::from_indices([3])), (r(3), r(9)));
        assert_eq!(p.project(Subset::EMPTY), (r(0), r(0)));
        assert_eq!(p.project(Subset::from_indices([1, 2])), (r(3), r(5)));
        assert!(CyclicProjection::new(vec![r(2), r(1)]).is_err());
    }

    #[test]
    fn q_is_a_convex_polygon() {
        for n in 3..=8 {
            let p = CyclicProjection::standard(n);
            for k in 1..n {
                let q = p.q_polygon(k);
                assert!(is_strictly_convex(&q), "({k},{n})");
                assert!(signed_area(&q).is_positive());
            }
        }
    }
}
