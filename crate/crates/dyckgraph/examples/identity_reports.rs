//! Auditable reports: how each path statistic reappears on the image
//! bargraph, and the structural laws of the map.
//!
//! ```text
//! cargo run --example identity_reports
//! ```

use dyckgraph::bijection::{check_stat_identities, check_structure_laws};
use dyckgraph::DyckPath;

fn main() {
    let path: DyckPath = "ududuuududduduududdudduduudd".parse().unwrap();
    let report = check_stat_identities(&path);
    println!("path: {}", report.path);
    println!("image: {}", report.bargraph);
    for check in &report.identities {
        println!(
            "  {} {:<45} {} = {}",
            if check.holds { "ok " } else { "BAD" },
            check.name,
            check.lhs,
            check.rhs
        );
    }
    println!("as json: {}\n", serde_json::to_string(&report).unwrap());

    let left: DyckPath = "uudd".parse().unwrap();
    let right: DyckPath = "uuuddd".parse().unwrap();
    let laws = check_structure_laws(&left, &right);
    println!("P = {left}, P' = {right}");
    println!(
        "  {} {}: {} = {}",
        if laws.elevation.holds { "ok " } else { "BAD" },
        laws.elevation.law,
        laws.elevation.lhs,
        laws.elevation.rhs
    );
    println!(
        "  {} {}: {} = {}",
        if laws.concatenation.holds { "ok " } else { "BAD" },
        laws.concatenation.law,
        laws.concatenation.lhs,
        laws.concatenation.rhs
    );
}
