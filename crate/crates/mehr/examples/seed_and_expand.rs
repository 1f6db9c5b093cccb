//! One Monte Carlo iteration taken apart: query point, seed rectangle,
//! and what each expansion strategy grows from the same seed.

use mehr::{sample_query_point, seed_rectangle, ExpansionStrategy, PointSet, RandomSource};

fn main() -> mehr::Result<()> {
    let points = PointSet::from_rows(&[
        vec![0.3, 0.4],
        vec![0.8, 0.6],
        vec![0.1, 0.9],
        vec![0.9, 0.1],
        vec![0.0, 0.0],
        vec![1.0, 1.0],
    ])?;
    let projections = points.projections();

    let mut rng = RandomSource::new(21);
    let query = sample_query_point(&projections, &mut rng);
    println!("query point: {query:?}");

    let seed = seed_rectangle(&query, &projections);
    println!(
        "seed rectangle (snapped to the neighboring projection values):\n  \
         {:?} to {:?}, volume {:.4}",
        seed.lower(),
        seed.upper(),
        seed.volume()
    );
    assert!(seed.is_empty(&points), "seeds are empty by construction");

    println!("\ngrowing that same seed with each strategy (seed 99):");
    for strategy in ExpansionStrategy::ALL {
        let mut rng = RandomSource::new(99);
        let grown = strategy.expand(seed.clone(), &points, &projections, &mut rng);
        assert!(grown.is_maximal(&points));
        println!(
            "  {strategy:<18} volume {:.4}  {:?} to {:?}",
            grown.volume(),
            grown.lower(),
            grown.upper()
        );
    }
    println!("\nevery result is empty and maximal; they differ because the");
    println!("strategies pick different faces to push first.");
    Ok(())
}
