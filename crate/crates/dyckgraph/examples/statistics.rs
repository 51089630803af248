//! Statistics records for both families, as text and as JSON.
//!
//! ```text
//! cargo run --example statistics
//! ```

use dyckgraph::{Bargraph, DyckPath, DyckStats};

fn main() {
    let path: DyckPath = "uduudduuuddd".parse().unwrap();
    println!("path: {path}");
    let stats = path.stats();
    for (name, value) in DyckStats::FIELDS.iter().zip(stats.values()) {
        println!("  {name:<18} {value}");
    }
    println!("  json: {}\n", serde_json::to_string(&stats).unwrap());

    let bargraph: Bargraph = "1,1,3,3,2,2,3,3,2,1,1,2".parse().unwrap();
    println!("bargraph: {bargraph}");
    println!("step word: {}", bargraph.to_word());
    let stats = bargraph.stats();
    println!("  json: {}", serde_json::to_string(&stats).unwrap());
    println!(
        "  semiperimeter {} = count_H {} + count_U {}",
        stats.semiperimeter, stats.count_h, stats.count_u
    );
    println!(
        "  peaks {} = valleys {} + 1, valley heights sum to {}",
        stats.peaks, stats.valleys, stats.sum_valley_heights
    );
}
