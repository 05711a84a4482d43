//! Decorated permutation -> Grassmann necklace -> positroid, and back.

use positroid::positroid::{is_positroid, DecoratedPermutation};

fn main() -> positroid::Result<()> {
    let w = DecoratedPermutation::with_uniform_color(vec![3, 4, 5, 1, 2], 0)?;
    let necklace = w.necklace();
    let labels: Vec<String> = necklace.sets().iter().map(|s| s.label()).collect();
    println!("w = {:?}, k = {}", w.images(), w.helicity());
    println!("necklace: {}", labels.join(" "));

    let m = necklace.positroid();
    println!(
        "{} bases, Gale minimum {}",
        m.bases().len(),
        m.gale_min().label()
    );
    assert!(is_positroid(5, m.bases())?);
    assert_eq!(m.necklace().permutation()?, w);

    // A fixed point needs a color: it decides whether i is in every base.
    let mut colors = std::collections::BTreeMap::new();
    colors.insert(2, 1);
    let v = DecoratedPermutation::new(vec![3, 2, 1], &colors)?;
    let bases: Vec<String> = v
        .necklace()
        .positroid()
        .bases()
        .iter()
        .map(|b| b.label())
        .collect();
    println!(
        "w = {:?} colored 2=1: bases {}",
        v.images(),
        bases.join(" ")
    );
    println!(
        "bounded affine {:?}, cell dimension {}",
        w.bounded_affine(),
        w.cell_dimension()
    );

    let total: usize = (1..=5).map(|n| DecoratedPermutation::all(n).len()).sum();
    println!("{total} decorated permutations with n <= 5");
    Ok(())
}
