//! Build a reduced plabic graph, read off strands, faces and orientations.

use positroid::moves::build_reduced_plabic;
use positroid::DecoratedPermutation;

fn main() -> positroid::Result<()> {
    let w = DecoratedPermutation::shift(2, 5)?;
    let g = build_reduced_plabic(&w)?;
    println!(
        "{} internal vertices, {} edges, {} faces",
        g.internal_count(),
        g.edge_count(),
        g.faces().count()
    );
    println!("reduced: {}", g.is_reduced());
    println!("strand permutation: {:?}", g.strand_permutation()?.images());

    let labels: Vec<String> = g.face_labels()?.iter().map(|s| s.label()).collect();
    println!("face labels: {}", labels.join(" "));

    let os = g.enumerate_perfect_orientations();
    let sources: std::collections::BTreeSet<String> =
        os.iter().map(|o| g.boundary_sources(o).label()).collect();
    println!("{} perfect orientations, sources {:?}", os.len(), sources);
    assert_eq!(g.positroid_of_graph()?, w.necklace().positroid());

    println!("{}", g.to_dot());
    Ok(())
}
