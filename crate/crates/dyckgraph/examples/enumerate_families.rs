//! Exhaustive lexicographic streams of both families, with their counts.
//!
//! ```text
//! cargo run --example enumerate_families
//! ```

use dyckgraph::enumeration::{catalan, enumerate_bargraphs, enumerate_dyck};

fn main() {
    println!("Dyck paths of semilength 3 (count = catalan(3) = {}):", catalan(3).unwrap());
    for path in enumerate_dyck(3).unwrap() {
        println!("  {path}");
    }

    println!("\nbargraphs of semiperimeter 4:");
    for bargraph in enumerate_bargraphs(4).unwrap() {
        println!("  {bargraph:<8} word {}", bargraph.to_word());
    }

    println!("\nfamily sizes:");
    for m in 1..=8 {
        println!(
            "  semilength {m}: {} paths (catalan {})",
            enumerate_dyck(m).unwrap().count(),
            catalan(m).unwrap()
        );
    }
    for n in 2..=8 {
        println!(
            "  semiperimeter {n}: {} bargraphs",
            enumerate_bargraphs(n).unwrap().count()
        );
    }
}
