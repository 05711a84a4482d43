//! Graphviz export.

use std::fmt::Write;

use super::GrassmannianGraph;

impl GrassmannianGraph {
    /// DOT source. White vertices are type `(1, d)`, black ones `(d - 1, d)`,
    /// anything else is drawn half and half.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n  node [shape=circle, label=\"\", width=0.25];\n");
        for v in 0..self.vertex_count() {
            if v < self.n {
                writeln!(out, "  v{v} [shape=plaintext, label=\"b{}\"];", v + 1).unwrap();
                continue;
            }
            let (h, d) = self.vertex_type(v);
            let style = if h == 1 && d != 2 {
                "style=filled, fillcolor=white".to_string()
            } else if h + 1 == d {
                "style=filled, fillcolor=black".to_string()
            } else {
                format!("style=wedged, fillcolor=\"white:black\", xlabel=\"({h},{d})\"")
            };
            writeln!(out, "  v{v} [{style}];").unwrap();
        }
        for e in 0..self.edge_count() {
            writeln!(
                out,
                "  v{} -- v{};",
                self.origin[2 * e],
                self.origin[2 * e + 1]
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::square;

    #[test]
    fn square_dot() {
        let dot = square(true).to_dot();
        assert_eq!(dot.matches(" -- ").count(), 8);
        assert_eq!(dot.matches("fillcolor=white").count(), 2);
        assert_eq!(dot.matches("fillcolor=black").count(), 2);
        assert_eq!(dot.matches("plaintext").count(), 4);
    }
}
