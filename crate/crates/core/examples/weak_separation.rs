//! Maximal weakly separated collections and the plabic graphs they label.

use positroid::moves::flip_graph;
use positroid::subset::Subset;
use positroid::weak_separation::{
    maximal_size, maximal_ws_collections, plabic_from_maximal_ws, weakly_separated, WsIndex,
};

fn main() -> positroid::Result<()> {
    let s = |v: &[usize]| Subset::from_indices(v.iter().copied());
    println!("13 vs 24: {}", weakly_separated(s(&[1, 3]), s(&[2, 4]))?);
    println!("12 vs 34: {}", weakly_separated(s(&[1, 2]), s(&[3, 4]))?);

    for (k, n) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
        let cs = maximal_ws_collections(k, n)?;
        println!(
            "({k},{n}): {} maximal collections of size {}",
            cs.len(),
            maximal_size(k, n)
        );
    }

    let index = WsIndex::new(2, 5, &flip_graph(2, 5)?)?;
    let first = maximal_ws_collections(2, 5)?.remove(0);
    let labels: Vec<String> = first.iter().map(|x| x.label()).collect();
    let g = plabic_from_maximal_ws(&first, 2, 5)?;
    println!(
        "{} -> graph with {} faces, {} collections indexed",
        labels.join(" "),
        g.faces().count(),
        index.len()
    );
    assert_eq!(index.lookup(&first)?.canonical_form(), g.canonical_form());
    Ok(())
}
