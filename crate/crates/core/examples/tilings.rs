//! Plabic tilings: the dual subdivision of a graph, validated and drawn.

use positroid::corpus;
use positroid::geometry::{
    graph_from_tiling, tiling_from_graph, tiling_svg, validate_subdivision, CyclicProjection,
};

fn main() -> positroid::Result<()> {
    let p = CyclicProjection::standard(4);
    for white_first in [true, false] {
        let g = corpus::square(white_first);
        let t = tiling_from_graph(&g, &p)?;
        let points: Vec<String> = t.points().keys().map(|s| s.label()).collect();
        println!(
            "square (white first: {white_first}): points {}",
            points.join(" ")
        );
        assert!(t.is_triangulation());
    }

    let g = corpus::five_with_white_quad()?;
    let t = tiling_from_graph(&g, &CyclicProjection::standard(5))?;
    let report = validate_subdivision(&t);
    println!(
        "(2,5) with a (1,4) vertex: {} cells, valid {}, triangulation {}",
        t.cells.len(),
        report.is_valid(),
        t.is_triangulation()
    );
    assert_eq!(graph_from_tiling(&t)?.canonical_form(), g.canonical_form());
    println!(
        "{}",
        serde_json::to_string(&t.to_json()).unwrap_or_default()
    );

    let path = std::env::temp_dir().join("tiling_25.svg");
    std::fs::write(&path, tiling_svg(&t)?)?;
    println!("wrote {}", path.display());
    Ok(())
}
