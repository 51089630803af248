//! Error types for parsing, enumeration, and series arithmetic.
//!
//! Parse errors carry 1-based positions into the original input so a CLI
//! or test harness can point at the offending character or list item.

use thiserror::Error;

/// Failure while parsing or validating a Dyck word.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckParseError {
    /// The input contained no steps.
    #[error("empty input: a Dyck path has at least one 'u' and one 'd'")]
    Empty,
    /// A character other than 'u', 'd', or a separator.
    #[error("invalid character '{found}' at position {position} (expected 'u' or 'd')")]
    InvalidChar { position: usize, found: char },
    /// A down step at this position would take the path below the x-axis.
    #[error("negative prefix at position {position}: more 'd' than 'u' steps so far")]
    NegativePrefix { position: usize },
    /// The word ended above the x-axis.
    #[error("unbalanced word: {ups} up steps but {downs} down steps")]
    Unbalanced { ups: usize, downs: usize },
}

/// Failure while parsing or validating a bargraph, in either encoding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BargraphParseError {
    /// The input contained no columns.
    #[error("empty input: a bargraph has at least one column")]
    Empty,
    /// A character other than 'U', 'H', 'D', or whitespace in a step word.
    #[error("invalid character '{found}' at position {position} (expected 'U', 'H' or 'D')")]
    InvalidChar { position: usize, found: char },
    /// A composition entry that parsed to zero.
    #[error("column {position} has height 0: heights must be positive")]
    NonPositiveHeight { position: usize },
    /// A composition entry that is not a positive integer.
    #[error("column {position} is {text:?}: heights must be positive integers")]
    InvalidHeight { position: usize, text: String },
    /// A 'D' step at this position would take the path below the x-axis.
    #[error("step 'D' at position {position} drops below the x-axis")]
    BelowAxis { position: usize },
    /// An 'H' step at height zero, i.e. lying on the x-axis.
    #[error("step 'H' at position {position} lies on the x-axis")]
    OnAxis { position: usize },
    /// The walk touched the x-axis before the final step.
    #[error("step at position {position} returns to the x-axis before the end of the word")]
    PrematureReturn { position: usize },
    /// The walk ended above the x-axis.
    #[error("word ends at height {height}, not on the x-axis")]
    NotClosed { height: u32 },
    /// An adjacent 'UD' or 'DU' pair, which bargraph words exclude.
    #[error("forbidden factor {factor} starting at position {position}")]
    ForbiddenFactor { position: usize, factor: &'static str },
}

/// Failure while enumerating or counting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    /// Semilength below the minimum of 1.
    #[error("semilength must be at least 1")]
    SemilengthTooSmall,
    /// Semiperimeter below the minimum of 2.
    #[error("semiperimeter must be at least 2")]
    SemiperimeterTooSmall,
    /// A counter left the range of the fixed-width integer type.
    #[error("integer overflow while counting")]
    Overflow,
    /// Exhaustive re-verification of the peak/semiperimeter bound found a
    /// counterexample, so diagonal enumeration cannot be trusted.
    #[error(
        "peak bound violated: bargraph {composition:?} has {peaks} peaks \
         but semiperimeter {semiperimeter} < 3 * peaks"
    )]
    PeakBoundViolated {
        composition: Vec<u32>,
        peaks: u64,
        semiperimeter: u64,
    },
}

/// Failure in truncated-series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// A coefficient left the range of the fixed-width integer type.
    #[error("coefficient overflow in exact series arithmetic")]
    Overflow,
    /// Coefficient access past the truncation order.
    #[error("coefficient of z^{requested} requested, but the series is truncated at order {order}")]
    OrderExceeded { requested: usize, order: usize },
    /// Division by a series whose constant term is not a unit.
    #[error("series division requires a divisor with constant term 1 or -1")]
    NonUnitDivisor,
    /// The truncation order is below what the operation needs.
    #[error("truncation order {order} is too small (minimum {min})")]
    OrderTooSmall { order: usize, min: usize },
    /// The fixed-point iteration failed to stabilise, which indicates a bug.
    #[error("fixed-point iteration did not stabilise within {iterations} iterations")]
    NoFixedPoint { iterations: usize },
    /// The diagonal sequence does not match the Catalan numbers.
    #[error("diagonal count at m={m} is {diagonal}, but catalan(m) is {catalan}")]
    DiagonalMismatch { m: u64, diagonal: u64, catalan: u64 },
    /// The diagonal sequence fails its quadratic congruence.
    #[error("quadratic congruence fails: residual has a nonzero coefficient at t^{lowest}")]
    QuadraticCongruenceFailed { lowest: usize },
    /// An enumeration step inside a series construction failed.
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}
