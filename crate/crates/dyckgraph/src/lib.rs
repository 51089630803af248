//! Dyck paths, bargraphs, and the block-to-column bijection between them.
//!
//! A Dyck path of semilength m corresponds to a bargraph whose
//! semiperimeter exceeds its number of peaks by exactly m: collapse each
//! maximal block of the path's step-height sequence into half as many
//! columns (rounded down). The crate provides
//!
//! - the two families as validated value types with text encodings,
//!   statistics records, and ASCII rendering ([`dyck`], [`bargraph`],
//!   [`render`]);
//! - the map, its inverse, and reports evaluating the statistic and
//!   structural identities it satisfies ([`bijection`]);
//! - exhaustive lexicographic generators, the peak-count table, Catalan
//!   numbers, and the diagonal counts ([`enumeration`]);
//! - exact truncated power series that re-derive the same counts from
//!   their quadratic equations ([`series`]).
//!
//! Everything is a pure function over immutable values, exact integer
//! arithmetic throughout, with overflow detected rather than wrapped.
//!
//! ```
//! use dyckgraph::{bargraph_to_dyck, dyck_to_bargraph, DyckPath};
//!
//! let path: DyckPath = "uudduudd".parse()?;
//! let bargraph = dyck_to_bargraph(&path);
//! assert_eq!(bargraph.to_string(), "2,1,2");
//! assert_eq!(bargraph_to_dyck(&bargraph), path);
//! # Ok::<(), dyckgraph::error::DyckParseError>(())
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! `dyckgraph` binary exposes the same operations as subcommands.

pub mod bargraph;
pub mod bijection;
pub mod dyck;
pub mod enumeration;
pub mod error;
pub mod render;
pub mod series;

pub use bargraph::{Bargraph, BargraphStats};
pub use bijection::{
    bargraph_to_dyck, check_stat_identities, check_structure_laws, dyck_to_bargraph,
    padded_run_form,
};
pub use dyck::{DyckPath, DyckStats, Step};
