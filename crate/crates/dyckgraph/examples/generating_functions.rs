//! Exact truncated series: solve the peak-count equation, compare against
//! enumeration, and check the diagonal equation.
//!
//! ```text
//! cargo run --example generating_functions
//! ```

use dyckgraph::enumeration::peak_table;
use dyckgraph::series::{
    diagonal_gf_from_table, diagonal_gf_residual, peak_gf_from_counts, peak_gf_residual,
    reindexing_agrees, solve_peak_gf,
};

fn main() {
    let order = 8;
    let solved = solve_peak_gf(order).unwrap();
    println!("peak series solved to z^{order}:");
    println!("  {solved}");
    println!(
        "  equation residual: {}",
        if peak_gf_residual(&solved).unwrap().is_zero() {
            "zero"
        } else {
            "NONZERO"
        }
    );

    let table = peak_table(order as u64).unwrap();
    let from_counts = peak_gf_from_counts(&table).unwrap();
    println!(
        "  matches enumeration counts: {}",
        if solved == from_counts { "yes" } else { "NO" }
    );

    let diagonal = diagonal_gf_from_table(&table).unwrap();
    println!("\ndiagonal series from the same counts:");
    println!("  {diagonal}");
    println!(
        "  equation residual: {}",
        if diagonal_gf_residual(&diagonal).unwrap().is_zero() {
            "zero"
        } else {
            "NONZERO"
        }
    );
    println!(
        "  re-indexing against the peak series: {}",
        if reindexing_agrees(&from_counts, &diagonal).unwrap() {
            "agrees"
        } else {
            "DISAGREES"
        }
    );

    println!("\ncoefficient table as json:");
    println!("{}", serde_json::to_string(&solved).unwrap());
}
