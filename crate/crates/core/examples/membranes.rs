//! Membranes: lattice surfaces in Z^n spanning the loop L_w.

use positroid::corpus;
use positroid::geometry::{boundary_loop, membrane_from_graph};
use positroid::moves::move_equivalence_class;
use positroid::DecoratedPermutation;

fn main() -> positroid::Result<()> {
    let w = DecoratedPermutation::shift(2, 5)?;
    let lw: Vec<String> = boundary_loop(&w)?.iter().map(|s| s.label()).collect();
    println!("L_w: {}", lw.join(" -> "));

    let top = corpus::top_cell(2, 5)?;
    let mut areas = std::collections::BTreeSet::new();
    for g in move_equivalence_class(&top, 1000)? {
        let m = membrane_from_graph(&g)?;
        assert!(m.boundary_is_loop() && m.edges_in_phi());
        areas.insert(m.area());
    }
    println!("areas over the move class: {areas:?}");

    let m = membrane_from_graph(&corpus::square(true))?;
    println!(
        "{}",
        serde_json::to_string_pretty(&m.to_json()).unwrap_or_default()
    );
    Ok(())
}
