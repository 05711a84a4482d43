//! Subdivisions of `Q(k, n)` dual to complete reduced Grassmannian graphs.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::{is_strictly_convex, orient, signed_area, CyclicProjection, Point};
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, GrassmannianGraph};
use crate::measurement::parse_rational;
use crate::subset::Subset;

/// A polygon given by its corner labels, counter-clockwise, with the helicity
/// of the dual vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub labels: Vec<Subset>,
    pub h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    pub k: usize,
    pub n: usize,
    pub projection: CyclicProjection,
    pub cells: Vec<Cell>,
}

impl Tiling {
    pub fn polygon(&self, c: &Cell) -> Vec<Point> {
        c.labels
            .iter()
            .map(|&s| self.projection.project(s))
            .collect()
    }

    /// Every corner label with its position.
    pub fn points(&self) -> BTreeMap<Subset, Point> {
        self.cells
            .iter()
            .flat_map(|c| c.labels.iter())
            .map(|&s| (s, self.projection.project(s)))
            .collect()
    }

    pub fn is_triangulation(&self) -> bool {
        self.cells.iter().all(|c| c.labels.len() == 3)
    }

    pub fn to_json(&self) -> Value {
        let points: serde_json::Map<String, Value> = self
            .points()
            .into_iter()
            .map(|(s, (x, y))| (s.label(), json!([rational_json(&x), rational_json(&y)])))
            .collect();
        let cells: Vec<Value> = self
            .cells
            .iter()
            .map(|c| json!({"labels": c.labels.iter().map(|s| s.label()).collect::<Vec<_>>(), "h": c.h}))
            .collect();
        json!({
            "k": self.k,
            "n": self.n,
            "nodes": self.projection.nodes().iter().map(rational_json).collect::<Vec<_>>(),
            "points": points,
            "cells": cells,
        })
    }

    pub fn from_json(v: &Value) -> Result<Tiling> {
        let field = |name: &str| {
            v.get(name)
                .ok_or_else(|| Error::Parse(format!("missing field {name:?}")))
        };
        let uint = |name: &str| -> Result<usize> {
            field(name)?
                .as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("{name} must be a nonnegative integer")))
        };
        let (k, n) = (uint("k")?, uint("n")?);
        let projection = match v.get("nodes") {
            Some(Value::Array(xs)) => {
                CyclicProjection::new(xs.iter().map(rational_from_json).collect::<Result<_>>()?)?
            }
            _ => CyclicProjection::standard(n),
        };
        if projection.n() != n {
            return Err(Error::SizeMismatch(format!(
                "{} nodes for n = {n}",
                projection.n()
            )));
        }
        let mut cells = Vec::new();
        for c in field("cells")?
            .as_array()
            .ok_or_else(|| Error::Parse("cells must be an array".into()))?
        {
            let labels = c
                .get("labels")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("cell without labels".into()))?
                .iter()
                .map(|s| {
                    s.as_str()
                        .and_then(Subset::parse_label)
                        .ok_or_else(|| Error::Parse(format!("bad label {s}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let h = c
                .get("h")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("cell without h".into()))? as usize;
            cells.push(Cell { labels, h });
        }
        Ok(Tiling {
            k,
            n,
            projection,
            cells,
        })
    }
}

pub(crate) fn rational_json(r: &BigRational) -> Value {
    match (r.is_integer(), r.to_integer().to_i64()) {
        (true, Some(x)) => json!(x),
        _ => json!(format!("{}/{}", r.numer(), r.denom())),
    }
}

fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(x) => x
            .as_i64()
            .map(|x| BigRational::from_integer(x.into()))
            .ok_or_else(|| Error::Parse(format!("{x} is not an integer"))),
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("expected a rational, got {other}"))),
    }
}

/// The dual subdivision: one cell per internal vertex, with corners the labels
/// of the faces around it.
pub fn tiling_from_graph(g: &GrassmannianGraph, projection: &CyclicProjection) -> Result<Tiling> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "n = {n} gives a degenerate polygon"
        )));
    }
    if projection.n() != n {
        return Err(Error::SizeMismatch(format!(
            "projection has {} nodes, graph has n = {n}",
            projection.n()
        )));
    }
    if let Some(v) = g.reduced_violation() {
        return Err(Error::NotReduced(v.to_string()));
    }
    let k = g.graph_helicity().to_integer() as usize;
    if !g.is_complete(k)? {
        return Err(Error::NotComplete { k, n });
    }
    let labels = g.face_labels()?;
    let faces = g.faces();
    // Clockwise around a vertex of the graph is counter-clockwise in the plane.
    let cells = g
        .internal_vertices()
        .map(|v| Cell {
            labels: g
                .rotation(v)
                .iter()
                .map(|&h| labels[faces.face_of(h)])
                .collect(),
            h: g.helicity(v),
        })
        .collect();
    Ok(Tiling {
        k,
        n,
        projection: projection.clone(),
        cells,
    })
}

/// Planar dual of a tiling: a vertex per cell, `b_i` on the side `[J_i, J_{i+1}]` of `Q`.
pub fn graph_from_tiling(t: &Tiling) -> Result<GrassmannianGraph> {
    let q = t.projection.q_labels(t.k);
    let q_side: HashMap<(Subset, Subset), usize> = (0..t.n)
        .map(|i| ((q[i], q[(i + 1) % t.n]), i + 1))
        .collect();
    let mut side_owner: HashMap<(Subset, Subset), (usize, usize)> = HashMap::new();
    for (c, cell) in t.cells.iter().enumerate() {
        let m = cell.labels.len();
        for j in 0..m {
            let side = (cell.labels[j], cell.labels[(j + 1) % m]);
            if side_owner.insert(side, (c, j)).is_some() {
                return Err(Error::InvalidGraph(format!(
                    "side {}-{} used twice",
                    side.0, side.1
                )));
            }
        }
    }
    let mut b = GraphBuilder::new(t.n);
    let vs: Vec<usize> = t.cells.iter().map(|c| b.add_internal(c.h)).collect();
    let mut slot_edge: Vec<Vec<Option<usize>>> =
        t.cells.iter().map(|c| vec![None; c.labels.len()]).collect();
    for (c, cell) in t.cells.iter().enumerate() {
        let m = cell.labels.len();
        for j in 0..m {
            if slot_edge[c][j].is_some() {
                continue;
            }
            let (x, y) = (cell.labels[j], cell.labels[(j + 1) % m]);
            if let Some(&i) = q_side.get(&(x, y)) {
                slot_edge[c][j] = Some(b.add_edge(b.boundary(i), vs[c]));
            } else if let Some(&(d, l)) = side_owner.get(&(y, x)) {
                let e = b.add_edge(vs[c], vs[d]);
                slot_edge[c][j] = Some(e);
                slot_edge[d][l] = Some(e);
            } else {
                return Err(Error::InvalidGraph(format!(
                    "side {x}-{y} is neither shared nor on the boundary"
                )));
            }
        }
    }
    for (c, edges) in slot_edge.into_iter().enumerate() {
        b.set_rotation(vs[c], edges.into_iter().map(Option::unwrap).collect());
    }
    b.build()
}

/// Violations found by [`validate_subdivision`]; empty means a valid subdivision.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubdivisionReport {
    pub violations: Vec<String>,
    /// A single cell equal to `Q`.
    pub trivial: bool,
}

impl SubdivisionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The cell must be `π(γ_{I0,I1})`: with `I1` the common elements and
/// `U ∖ I1 = {u_1 < … < u_m}`, its corners are `I1` plus the cyclic
/// `h`-intervals of the `u`'s, in that cyclic order.
fn cell_form(cell: &Cell, k: usize) -> std::result::Result<(), String> {
    let ls = &cell.labels;
    if let Some(bad) = ls.iter().find(|s| s.len() != k) {
        return Err(format!("label {bad} does not have size {k}"));
    }
    let common = ls.iter().fold(ls[0], |acc, &s| acc.intersection(s));
    let union = ls.iter().fold(Subset::EMPTY, |acc, &s| acc.union(s));
    let rest = union.difference(common).to_vec();
    let (m, h) = (rest.len(), k - common.len());
    if m < 3 || h == 0 || h >= m {
        return Err(format!(
            "cell {} is not a polygon of a hypersimplex face",
            labels_str(ls)
        ));
    }
    if h != cell.h {
        return Err(format!(
            "cell {} has h = {} but its corners give {h}",
            labels_str(ls),
            cell.h
        ));
    }
    let expected: Vec<Subset> = (0..m)
        .map(|s| common.union(Subset::from_indices((0..h).map(|j| rest[(s + j) % m]))))
        .collect();
    let ok = ls.len() == m && (0..m).any(|r| (0..m).all(|j| ls[j] == expected[(j + r) % m]));
    if ok {
        Ok(())
    } else {
        Err(format!(
            "cell {} is not the face with corners {}",
            labels_str(ls),
            labels_str(&expected)
        ))
    }
}

fn labels_str(ls: &[Subset]) -> String {
    ls.iter().map(|s| s.label()).collect::<Vec<_>>().join(" ")
}

fn dot(a: &Point, b: &Point, origin: &Point) -> BigRational {
    (&a.0 - &origin.0) * (&b.0 - &origin.0) + (&a.1 - &origin.1) * (&b.1 - &origin.1)
}

/// `None` when the two convex polygons meet in nothing, a common corner, or a common side.
fn pair_violation(a: &[Point], b: &[Point]) -> Option<String> {
    let separating = |p: &[Point], other: &[Point]| {
        (0..p.len()).find_map(|i| {
            let (x, y) = (&p[i], &p[(i + 1) % p.len()]);
            other
                .iter()
                .all(|z| !orient(x, y, z).is_positive())
                .then(|| (x.clone(), y.clone()))
        })
    };
    let Some((p, q)) = separating(a, b).or_else(|| separating(b, a)) else {
        return Some("interiors overlap".into());
    };
    let on_line = |poly: &[Point]| -> Vec<BigRational> {
        let mut ts: Vec<BigRational> = poly
            .iter()
            .filter(|z| orient(&p, &q, z).is_zero())
            .map(|z| dot(z, &q, &p))
            .collect();
        ts.sort();
        ts
    };
    let (sa, sb) = (on_line(a), on_line(b));
    if sa.is_empty() || sb.is_empty() {
        return None;
    }
    let lo = std::cmp::max(&sa[0], &sb[0]);
    let hi = std::cmp::min(sa.last().unwrap(), sb.last().unwrap());
    if lo > hi {
        return None;
    }
    if lo == hi {
        return (!(sa.contains(lo) && sb.contains(lo)))
            .then(|| "corner of one cell lies on a side of the other".into());
    }
    (sa != sb).then(|| "cells share part of a side".into())
}

/// Exact checks that the cells tile `Q(k, n)` as a `π`-induced subdivision.
pub fn validate_subdivision(t: &Tiling) -> SubdivisionReport {
    let mut report = SubdivisionReport::default();
    let q_labels = t.projection.q_labels(t.k);
    let q = t.projection.q_polygon(t.k);
    let mut polys = Vec::with_capacity(t.cells.len());
    for (c, cell) in t.cells.iter().enumerate() {
        if let Err(e) = cell_form(cell, t.k) {
            report.violations.push(format!("cell {c}: {e}"));
        }
        let poly = t.polygon(cell);
        if !is_strictly_convex(&poly) {
            report.violations.push(format!(
                "cell {c}: not strictly convex and counter-clockwise"
            ));
        }
        let m = q.len();
        if poly
            .iter()
            .any(|z| (0..m).any(|i| orient(&q[i], &q[(i + 1) % m], z).is_negative()))
        {
            report.violations.push(format!("cell {c}: leaves Q"));
        }
        polys.push(poly);
    }
    for a in 0..polys.len() {
        for b in a + 1..polys.len() {
            if let Some(e) = pair_violation(&polys[a], &polys[b]) {
                report.violations.push(format!("cells {a} and {b}: {e}"));
            }
        }
    }
    let total: BigRational = polys.iter().map(|p| signed_area(p)).sum();
    if total != signed_area(&q) {
        report.violations.push(format!(
            "cell areas sum to {total}, Q has area {}",
            signed_area(&q)
        ));
    }
    report.trivial = t.cells.len() == 1 && {
        let got: BTreeSet<Subset> = t.cells[0].labels.iter().copied().collect();
        got == q_labels.iter().copied().collect()
    };
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{five_with_square_vertex, five_with_white_quad, square, star, top_cell};
    use crate::graph::fixtures;

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied())
    }

    fn round_trip(g: &GrassmannianGraph) -> Tiling {
        let t = tiling_from_graph(g, &CyclicProjection::standard(g.n())).unwrap();
        let report = validate_subdivision(&t);
        assert!(report.is_valid(), "{:?}", report.violations);
        assert_eq!(&graph_from_tiling(&t).unwrap(), g);
        let back = Tiling::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        t
    }

    #[test]
    fn square_triangulations() {
        let a = round_trip(&square(true));
        let b = round_trip(&square(false));
        assert!(a.is_triangulation() && b.is_triangulation());
        assert_eq!(a.cells.len(), 4);
        let inner = |t: &Tiling| {
            let q: BTreeSet<Subset> = t.projection.q_labels(2).into_iter().collect();
            t.points()
                .into_keys()
                .filter(|x| !q.contains(x))
                .collect::<Vec<_>>()
        };
        assert_eq!(inner(&a), vec![s(&[2, 4])]);
        assert_eq!(inner(&b), vec![s(&[1, 3])]);
        let pts = a.points();
        let r = |x: i64| BigRational::from_integer(x.into());
        assert_eq!(pts[&s(&[2, 4])], (r(6), r(20)));
    }

    #[test]
    fn single_vertex_is_the_trivial_subdivision() {
        for (h, n) in [(2, 4), (1, 5), (2, 5)] {
            let t = round_trip(&star(h, n));
            let report = validate_subdivision(&t);
            assert!(report.trivial);
            assert_eq!(t.cells.len(), 1);
        }
        let t = round_trip(&five_with_square_vertex().unwrap());
        assert!(!validate_subdivision(&t).trivial);
    }

    #[test]
    fn corpus_round_trips() {
        for n in 3..=6 {
            for k in 1..n {
                round_trip(&top_cell(k, n).unwrap());
            }
        }
        let t = round_trip(&five_with_white_quad().unwrap());
        assert_eq!(t.cells.iter().filter(|c| c.labels.len() == 4).count(), 1);
        let t = round_trip(&five_with_square_vertex().unwrap());
        assert!(t.cells.iter().any(|c| c.labels.len() == 4 && c.h == 2));
    }

    #[test]
    fn overlapping_triangles_are_reported() {
        let p = CyclicProjection::standard(4);
        let t = Tiling {
            k: 1,
            n: 4,
            projection: p,
            cells: vec![
                Cell {
                    labels: vec![s(&[1]), s(&[2]), s(&[3])],
                    h: 1,
                },
                Cell {
                    labels: vec![s(&[1]), s(&[2]), s(&[4])],
                    h: 1,
                },
            ],
        };
        let r = validate_subdivision(&t);
        assert!(
            r.violations.iter().any(|v| v.contains("cells 0 and 1")),
            "{:?}",
            r.violations
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        let lower = crate::corpus::lower_cell_36().unwrap();
        assert!(matches!(
            tiling_from_graph(&lower, &CyclicProjection::standard(6)),
            Err(Error::NotComplete { .. })
        ));
        assert!(matches!(
            tiling_from_graph(&fixtures::star(2, 4), &CyclicProjection::standard(5)),
            Err(Error::SizeMismatch(_))
        ));
    }
}
