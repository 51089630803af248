//! ASCII drawings of paths and bargraphs side by side under the map.
//!
//! ```text
//! cargo run --example ascii_gallery
//! ```

use dyckgraph::bijection::dyck_to_bargraph;
use dyckgraph::DyckPath;

fn main() {
    for word in ["ud", "uudd", "uudduudd", "uuuddduuudduddud", "ududuuududduduududdudduduudd"] {
        let path: DyckPath = word.parse().unwrap();
        let bargraph = dyck_to_bargraph(&path);
        println!("{word}  ->  {bargraph}");
        println!("{}", path.render_ascii());
        println!();
        println!("{}", bargraph.render_ascii());
        println!("{}", "-".repeat(40));
    }
}
