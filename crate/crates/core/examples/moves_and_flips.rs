//! Moves between plabic graphs and the flip graph they span.

use positroid::corpus;
use positroid::moves::{apply_move, classes_of, flip_graph, move_sites, MoveKind};

fn main() -> positroid::Result<()> {
    let g = corpus::square(true);
    for (kind, site) in move_sites(&g) {
        let h = apply_move(&g, site, kind)?;
        let labels: Vec<String> = h.face_labels()?.iter().map(|s| s.label()).collect();
        println!("{kind:?} at {site:?}: faces {}", labels.join(" "));
    }

    for n in 4..=7 {
        let fg = flip_graph(1, n)?;
        println!(
            "(1,{n}): {} triangulations, diameter {}",
            fg.node_count(),
            fg.diameter()
        );
    }

    let fg = flip_graph(2, 5)?;
    let squares = fg.edges.iter().filter(|e| e.2 == MoveKind::Square).count();
    println!(
        "(2,5): {} graphs, {} edges ({squares} square moves), {} bipartite classes",
        fg.node_count(),
        fg.edge_count(),
        classes_of(&fg)?.len()
    );
    Ok(())
}
