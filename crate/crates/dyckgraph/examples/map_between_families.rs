//! The core map: a Dyck path to its bargraph and back.
//!
//! Each maximal block of equal entries in the path's step-height sequence
//! becomes half as many columns (rounded down) of that height. Run with:
//!
//! ```text
//! cargo run --example map_between_families
//! ```

use dyckgraph::bijection::{bargraph_to_dyck, dyck_to_bargraph, padded_run_form};
use dyckgraph::DyckPath;

fn main() {
    let path: DyckPath = "ududuuududduduududdudduduudd".parse().unwrap();
    println!("path ({} steps): {path}", path.steps().len());
    println!("{}\n", path.render_ascii());

    let heights = path.height_sequence();
    let blocks: Vec<String> = heights
        .blocks()
        .blocks()
        .iter()
        .map(|b| format!("{}^{}", b.height, b.len))
        .collect();
    println!("height sequence blocks: {}", blocks.join(" "));

    let bargraph = dyck_to_bargraph(&path);
    println!("image bargraph: {bargraph}");
    println!("{}\n", bargraph.render_ascii());

    // The inverse rebuilds the path from the padded run form.
    let form = padded_run_form(&bargraph);
    let runs: Vec<String> = form
        .runs()
        .iter()
        .map(|r| format!("{}^{}", r.height, r.exponent))
        .collect();
    println!("padded run form: {}", runs.join(" "));

    let back = bargraph_to_dyck(&bargraph);
    println!("inverse image:  {back}");
    assert_eq!(back, path);
    println!("round trip is exact");
}
