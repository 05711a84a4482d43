//! Monotone paths on the hypersimplex and the longest ones.

use positroid::baues::{
    enumerate_monotone_paths, hook_length_count, longest_monotone_paths, monotone_paths,
    path_length_range,
};
use positroid::weak_separation::is_ws_collection;

fn main() -> positroid::Result<()> {
    for n in 2..=7 {
        let (lo, hi) = path_length_range(2, n)?;
        println!(
            "(2,{n}): {} paths, lengths {lo}..={hi}",
            monotone_paths(2, n)?
        );
    }
    for (k, n) in [(2, 5), (3, 6), (3, 8)] {
        let (len, count) = longest_monotone_paths(k, n)?;
        println!(
            "({k},{n}): {count} longest paths of length {len}, hook length {}",
            hook_length_count(k, n)
        );
    }

    let paths = enumerate_monotone_paths(2, 4, 10)?;
    for p in &paths {
        let labels: Vec<String> = p.iter().map(|s| s.label()).collect();
        println!(
            "{} weakly separated: {}",
            labels.join(" -> "),
            is_ws_collection(p)?
        );
    }
    Ok(())
}
