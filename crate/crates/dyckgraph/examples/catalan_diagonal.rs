//! The Catalan interpretation: bargraphs with a fixed gap between
//! semiperimeter and peak count, listed and counted.
//!
//! ```text
//! cargo run --example catalan_diagonal
//! ```

use dyckgraph::enumeration::{catalan, diagonal_bargraphs, diagonal_count};
use dyckgraph::series::diagonal_quadratic_residual;

fn main() {
    // At m = 4 the slice mixes semiperimeters: thirteen one-peak objects
    // of semiperimeter 5 and one two-peak object of semiperimeter 6.
    let objects = diagonal_bargraphs(4).unwrap();
    println!("the {} bargraphs with semiperimeter - peaks = 4:", objects.len());
    for bargraph in &objects {
        let stats = bargraph.stats();
        println!(
            "  {bargraph:<8} sp={} pk={}",
            stats.semiperimeter, stats.peaks
        );
    }

    let mut values = Vec::new();
    println!("\ndiagonal counts against Catalan numbers:");
    for m in 1..=9 {
        let diagonal = diagonal_count(m).unwrap();
        println!("  m={m}: {diagonal} (catalan {})", catalan(m).unwrap());
        values.push(diagonal);
    }

    let residual = diagonal_quadratic_residual(&values).unwrap();
    println!(
        "\nquadratic congruence t*h^2 - (1-2t)*h + t = 0 mod t^{}: residual is {}",
        values.len() + 1,
        if residual.is_zero() { "zero" } else { "NONZERO" }
    );
}
