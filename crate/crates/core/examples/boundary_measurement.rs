//! The boundary measurement with seeded positive vertex data.

use num_traits::Signed;
use positroid::corpus;
use positroid::measurement::{Measurement, TorusElement, VertexData};

fn main() -> positroid::Result<()> {
    for (name, g) in corpus::measurement_corpus()? {
        let m = Measurement::new(&g)?;
        let data = VertexData::seeded(&g, 1);
        let p = m.apply(&data)?.normalized()?;
        let shown: Vec<String> = p
            .coords
            .iter()
            .take(4)
            .map(|(s, x)| format!("{}={x}", s.label()))
            .collect();
        println!(
            "{name}: {} orientations, {} nonzero, positive {}, relations {}",
            m.orientation_count(),
            p.support().len(),
            p.coords.values().all(|x| x.is_positive()),
            p.satisfies_relations()
        );
        println!("  {} ...", shown.join(" "));

        let t = TorusElement::random_internal(&g, &mut rand::thread_rng());
        let moved = m.apply(&t.act(&g, &data)?)?;
        assert!(moved.projectively_eq(&p));
    }
    Ok(())
}
