//! SVG rendering. Coordinates stay exact until they are written out.

use std::fmt::Write;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{tiling_from_graph, CyclicProjection, Membrane, Point, Tiling};
use crate::error::{Error, Result};
use crate::graph::GrassmannianGraph;

/// Decimal with at most 12 fractional digits.
fn num(r: &BigRational) -> String {
    let s = format!("{:.12}", r.to_f64().unwrap_or(f64::NAN));
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

struct Canvas {
    body: String,
    min: Point,
    max: Point,
}

impl Canvas {
    fn new(frame: &[Point]) -> Canvas {
        let min_by = |f: fn(&Point) -> &BigRational| {
            frame
                .iter()
                .map(f)
                .min()
                .cloned()
                .unwrap_or_else(BigRational::zero)
        };
        let max_by = |f: fn(&Point) -> &BigRational| {
            frame
                .iter()
                .map(f)
                .max()
                .cloned()
                .unwrap_or_else(BigRational::zero)
        };
        Canvas {
            body: String::new(),
            min: (min_by(|p| &p.0), min_by(|p| &p.1)),
            max: (max_by(|p| &p.0), max_by(|p| &p.1)),
        }
    }

    /// `y` is flipped so the picture is counter-clockwise on screen as in the plane.
    fn xy(&self, p: &Point) -> String {
        format!(
            "{},{}",
            num(&(&p.0 - &self.min.0)),
            num(&(&self.max.1 - &p.1))
        )
    }

    fn polygon(&mut self, pts: &[Point], class: &str) {
        let coords: Vec<String> = pts.iter().map(|p| self.xy(p)).collect();
        writeln!(
            self.body,
            "  <polygon class=\"{class}\" points=\"{}\"/>",
            coords.join(" ")
        )
        .unwrap();
    }

    fn line(&mut self, a: &Point, b: &Point) {
        let (a, b) = (self.xy(a), self.xy(b));
        let (x1, y1) = a.split_once(',').unwrap();
        let (x2, y2) = b.split_once(',').unwrap();
        writeln!(
            self.body,
            "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>"
        )
        .unwrap();
    }

    fn circle(&mut self, p: &Point, fill: &str) {
        let c = self.xy(p);
        let (x, y) = c.split_once(',').unwrap();
        writeln!(self.body, "  <circle cx=\"{x}\" cy=\"{y}\" r=\"0.3\" fill=\"{fill}\" stroke=\"black\" stroke-width=\"0.05\"/>")
            .unwrap();
    }

    fn finish(self) -> String {
        let w = num(&(&self.max.0 - &self.min.0));
        let h = num(&(&self.max.1 - &self.min.1));
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1 -1 {w} {h}\" \
             preserveAspectRatio=\"xMidYMid meet\" style=\"overflow:visible\">\n\
             <style>polygon {{ stroke: black; stroke-width: 0.05; }} .cell {{ fill: #dde6f0; }} \
             .outline {{ fill: none; stroke-width: 0.15; }} line {{ stroke: black; stroke-width: 0.08; }}</style>\n\
             {}</svg>\n",
            self.body
        )
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("nothing to draw for n = {n}")));
    }
    Ok(())
}

/// One polygon per cell, then the outline of `Q`.
pub fn tiling_svg(t: &Tiling) -> Result<String> {
    check_n(t.n)?;
    let q = t.projection.q_polygon(t.k);
    let mut c = Canvas::new(&q);
    for cell in &t.cells {
        c.polygon(&t.polygon(cell), "cell");
    }
    c.polygon(&q, "outline");
    Ok(c.finish())
}

/// The membrane triangles pushed to the plane by `π`.
pub fn membrane_svg(m: &Membrane, projection: &CyclicProjection) -> Result<String> {
    check_n(m.n)?;
    let pts: Vec<Point> = m.vertices.iter().map(|&s| projection.project(s)).collect();
    let mut c = Canvas::new(&pts);
    for t in &m.triangles {
        let tri: Vec<Point> = t.iter().map(|&s| projection.project(s)).collect();
        c.polygon(&tri, "cell");
    }
    let lp: Vec<Point> = m.boundary.iter().map(|&s| projection.project(s)).collect();
    c.polygon(&lp, "outline");
    Ok(c.finish())
}

fn centroid(pts: &[Point]) -> Point {
    let m = BigRational::from_integer(pts.len().into());
    let sx: BigRational = pts.iter().map(|p| p.0.clone()).sum();
    let sy: BigRational = pts.iter().map(|p| p.1.clone()).sum();
    (sx / &m, sy / m)
}

/// A complete reduced graph drawn inside its dual tiling: internal vertices at
/// cell centroids, `b_i` at the midpoint of the side `[J_i, J_{i+1}]` of `Q`.
pub fn graph_svg(g: &GrassmannianGraph, projection: &CyclicProjection) -> Result<String> {
    check_n(g.n())?;
    let t = tiling_from_graph(g, projection)?;
    let q = projection.q_polygon(t.k);
    let n = g.n();
    let mut pos: Vec<Point> = (0..n)
        .map(|i| centroid(&[q[i].clone(), q[(i + 1) % n].clone()]))
        .collect();
    pos.extend(t.cells.iter().map(|cell| centroid(&t.polygon(cell))));
    let mut c = Canvas::new(&q);
    c.polygon(&q, "outline");
    for e in 0..g.edge_count() {
        c.line(&pos[g.origin(2 * e)], &pos[g.origin(2 * e + 1)]);
    }
    for v in g.internal_vertices() {
        let fill = if g.is_white(v) {
            "white"
        } else if g.is_black(v) {
            "black"
        } else {
            "gray"
        };
        c.circle(&pos[v], fill);
    }
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{square, top_cell};
    use crate::geometry::membrane_from_graph;
    use crate::graph::GraphBuilder;

    #[test]
    fn square_tiling_svg() {
        let p = CyclicProjection::standard(4);
        let t = tiling_from_graph(&square(true), &p).unwrap();
        let svg = tiling_svg(&t).unwrap();
        assert_eq!(svg.matches("<polygon class=\"cell\"").count(), 4);
        assert_eq!(svg.matches("<polygon class=\"outline\"").count(), 1);
        assert_eq!(svg, tiling_svg(&t).unwrap());
    }

    #[test]
    fn graph_and_membrane_svg() {
        let g = top_cell(2, 5).unwrap();
        let p = CyclicProjection::standard(5);
        let svg = graph_svg(&g, &p).unwrap();
        assert_eq!(svg.matches("<line").count(), g.edge_count());
        assert_eq!(svg.matches("<circle").count(), g.internal_count());
        let m = membrane_from_graph(&g).unwrap();
        let svg = membrane_svg(&m, &p).unwrap();
        assert_eq!(svg.matches("class=\"cell\"").count(), m.area());
    }

    #[test]
    fn rounding() {
        assert_eq!(num(&BigRational::new(1.into(), 3.into())), "0.333333333333");
        assert_eq!(num(&BigRational::from_integer(7.into())), "7");
    }

    #[test]
    fn empty_graph_is_rejected() {
        assert!(matches!(
            GraphBuilder::new(0).build(),
            Err(Error::InvalidInput(_))
        ));
    }
}
