//! Bargraph counts by semiperimeter and number of peaks, and the
//! diagonal sums that turn out to be Catalan numbers.
//!
//! ```text
//! cargo run --example peak_table
//! ```

use dyckgraph::enumeration::{catalan, peak_table};

fn main() {
    let table = peak_table(12).unwrap();
    print!("{}", table.to_tsv());

    println!("\nrow sums (all bargraphs of each semiperimeter):");
    for n in 2..=table.n_max() {
        println!("  n={n}: {}", table.row_total(n));
    }

    // Summing the table along n - k = m collects the bargraphs whose
    // semiperimeter exceeds their peak count by m.
    println!("\ndiagonal sums n - k = m:");
    for m in 1..=10 {
        let mut sum = 0;
        for n in 2..=table.n_max() {
            if n > m {
                sum += table.count(n, n - m);
            }
        }
        let complete = 3 * m / 2 <= table.n_max();
        println!(
            "  m={m}: {sum}{} (catalan {})",
            if complete { "" } else { " [table too short]" },
            catalan(m).unwrap()
        );
    }
}
