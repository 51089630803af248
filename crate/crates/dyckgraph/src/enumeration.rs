//! Exhaustive generators and exact counters for both families.
//!
//! Streams are lexicographic and reproducible: Dyck paths with u < d,
//! bargraphs by their composition. Counting is by explicit object
//! generation so the objects themselves stay available for cross-checks;
//! the series module provides the independent counting oracle.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::bargraph::Bargraph;
use crate::dyck::{DyckPath, Step};
use crate::error::EnumerationError;

/// All Dyck paths of a fixed semilength, in lexicographic order (u < d).
pub struct DyckPathIter {
    semilength: usize,
    stack: Vec<PartialPath>,
}

struct PartialPath {
    steps: Vec<Step>,
    ups: usize,
}

/// Streams the Dyck paths of semilength `m` in lexicographic order.
pub fn enumerate_dyck(m: u64) -> Result<DyckPathIter, EnumerationError> {
    if m == 0 {
        return Err(EnumerationError::SemilengthTooSmall);
    }
    let semilength = m as usize;
    Ok(DyckPathIter {
        semilength,
        stack: vec![PartialPath {
            steps: Vec::with_capacity(2 * semilength),
            ups: 0,
        }],
    })
}

impl Iterator for DyckPathIter {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        while let Some(partial) = self.stack.pop() {
            if partial.steps.len() == 2 * self.semilength {
                return Some(DyckPath::from_steps_unchecked(partial.steps));
            }
            let downs = partial.steps.len() - partial.ups;
            let can_up = partial.ups < self.semilength;
            let can_down = downs < partial.ups;
            // Push the down child first so the up child is visited first;
            // an incomplete prefix always has at least one child.
            if can_down && can_up {
                let mut steps = partial.steps.clone();
                steps.push(Step::Down);
                self.stack.push(PartialPath {
                    steps,
                    ups: partial.ups,
                });
            }
            if can_up {
                let mut steps = partial.steps;
                steps.push(Step::Up);
                self.stack.push(PartialPath {
                    steps,
                    ups: partial.ups + 1,
                });
            } else {
                let mut steps = partial.steps;
                steps.push(Step::Down);
                self.stack.push(PartialPath {
                    steps,
                    ups: partial.ups,
                });
            }
        }
        None
    }
}

/// All bargraphs of a fixed semiperimeter, in lexicographic order of their
/// compositions.
pub struct BargraphIter {
    semiperimeter: u64,
    stack: Vec<PartialBargraph>,
}

struct PartialBargraph {
    columns: Vec<u32>,
    semiperimeter: u64,
}

/// Streams the bargraphs of semiperimeter `n` in lexicographic order.
///
/// Extending a composition by a column of height `h` adds
/// `1 + max(h - last, 0)` to the semiperimeter, so partial compositions can
/// be pruned as soon as the target is exceeded and every emitted
/// composition is exact.
pub fn enumerate_bargraphs(n: u64) -> Result<BargraphIter, EnumerationError> {
    if n < 2 {
        return Err(EnumerationError::SemiperimeterTooSmall);
    }
    let mut stack = Vec::new();
    // First column of height h costs 1 + h; push tallest first so the
    // lexicographically smallest composition is visited first.
    for h in (1..n).rev() {
        stack.push(PartialBargraph {
            columns: vec![h as u32],
            semiperimeter: 1 + h,
        });
    }
    Ok(BargraphIter {
        semiperimeter: n,
        stack,
    })
}

impl Iterator for BargraphIter {
    type Item = Bargraph;

    fn next(&mut self) -> Option<Bargraph> {
        while let Some(partial) = self.stack.pop() {
            if partial.semiperimeter == self.semiperimeter {
                return Some(Bargraph::from_columns_unchecked(partial.columns));
            }
            let last = u64::from(*partial.columns.last().unwrap());
            let budget = self.semiperimeter - partial.semiperimeter;
            let highest = last + budget - 1;
            for h in (1..=highest).rev() {
                let cost = 1 + h.saturating_sub(last);
                let mut columns = partial.columns.clone();
                columns.push(h as u32);
                self.stack.push(PartialBargraph {
                    columns,
                    semiperimeter: partial.semiperimeter + cost,
                });
            }
        }
        None
    }
}

/// Counts of bargraphs by semiperimeter `n` and number of peaks `k`,
/// complete for 2 <= n <= n_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeakTable {
    n_max: u64,
    k_max: u64,
    counts: BTreeMap<(u64, u64), u64>,
}

/// Tabulates bargraph counts by semiperimeter and number of peaks, for all
/// semiperimeters up to `n_max`.
pub fn peak_table(n_max: u64) -> Result<PeakTable, EnumerationError> {
    if n_max < 2 {
        return Err(EnumerationError::SemiperimeterTooSmall);
    }
    let mut counts: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    let mut k_max = 1;
    for n in 2..=n_max {
        for bargraph in enumerate_bargraphs(n)? {
            let k = bargraph.stats().peaks;
            k_max = k_max.max(k);
            let cell = counts.entry((n, k)).or_insert(0);
            *cell = cell.checked_add(1).ok_or(EnumerationError::Overflow)?;
        }
    }
    Ok(PeakTable {
        n_max,
        k_max,
        counts,
    })
}

impl PeakTable {
    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    /// Largest peak count with a nonzero cell.
    pub fn k_max(&self) -> u64 {
        self.k_max
    }

    /// The count at semiperimeter `n` and peak count `k`; zero for cells
    /// with no bargraphs. Only rows 2..=n_max are tabulated.
    pub fn count(&self, n: u64, k: u64) -> u64 {
        self.counts.get(&(n, k)).copied().unwrap_or(0)
    }

    /// Total bargraphs of semiperimeter `n`, i.e. the row sum.
    pub fn row_total(&self, n: u64) -> u64 {
        (1..=self.k_max).map(|k| self.count(n, k)).sum()
    }

    /// One row of counts for k = 1..=k_max.
    pub fn row(&self, n: u64) -> Vec<u64> {
        (1..=self.k_max).map(|k| self.count(n, k)).collect()
    }

    /// Tab-separated table: a header of peak counts, then one row per
    /// semiperimeter.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n");
        for k in 1..=self.k_max {
            out.push_str(&format!("\t{k}"));
        }
        out.push('\n');
        for n in 2..=self.n_max {
            out.push_str(&n.to_string());
            for k in 1..=self.k_max {
                out.push_str(&format!("\t{}", self.count(n, k)));
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for PeakTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Rows<'a>(&'a PeakTable);
        impl Serialize for Rows<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let table = self.0;
                let mut seq =
                    serializer.serialize_seq(Some((table.n_max - 1) as usize))?;
                for n in 2..=table.n_max {
                    struct Row<'a>(&'a PeakTable, u64);
                    impl Serialize for Row<'_> {
                        fn serialize<S: Serializer>(
                            &self,
                            serializer: S,
                        ) -> Result<S::Ok, S::Error> {
                            let mut map = serializer.serialize_map(Some(2))?;
                            map.serialize_entry("n", &self.1)?;
                            map.serialize_entry("counts", &self.0.row(self.1))?;
                            map.end()
                        }
                    }
                    seq.serialize_element(&Row(table, n))?;
                }
                seq.end()
            }
        }
        let mut state = serializer.serialize_struct("PeakTable", 3)?;
        state.serialize_field("n_max", &self.n_max)?;
        state.serialize_field("k_max", &self.k_max)?;
        state.serialize_field("rows", &Rows(self))?;
        state.end()
    }
}

/// The m-th Catalan number, by the convolution recurrence with the closed
/// binomial formula as an internal cross-check. Overflow of the 64-bit
/// counters is detected, not wrapped.
pub fn catalan(m: u64) -> Result<u64, EnumerationError> {
    let m = m as usize;
    let mut c = vec![0u64; m + 1];
    c[0] = 1;
    for i in 1..=m {
        let mut acc: u64 = 0;
        for j in 0..i {
            let product = c[j]
                .checked_mul(c[i - 1 - j])
                .ok_or(EnumerationError::Overflow)?;
            acc = acc.checked_add(product).ok_or(EnumerationError::Overflow)?;
        }
        c[i] = acc;
    }
    let value = c[m];
    let binom = binomial(2 * m as u64, m as u64)?;
    assert_eq!(
        u128::from(value),
        binom / (m as u128 + 1),
        "catalan cross-check failed at m={m}"
    );
    Ok(value)
}

/// Exact binomial coefficient in 128-bit arithmetic.
fn binomial(n: u64, k: u64) -> Result<u128, EnumerationError> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc
            .checked_mul(u128::from(n - k + i))
            .ok_or(EnumerationError::Overflow)?
            / u128::from(i);
    }
    Ok(acc)
}

/// Checks, by exhaustive enumeration up to semiperimeter `n_max`, that
/// every bargraph with at least two peaks has semiperimeter at least three
/// times its peak count.
pub fn verify_peak_bound(n_max: u64) -> Result<(), EnumerationError> {
    for n in 2..=n_max {
        for bargraph in enumerate_bargraphs(n)? {
            let stats = bargraph.stats();
            if stats.peaks >= 2 && stats.semiperimeter < 3 * stats.peaks {
                return Err(EnumerationError::PeakBoundViolated {
                    composition: bargraph.columns().to_vec(),
                    peaks: stats.peaks,
                    semiperimeter: stats.semiperimeter,
                });
            }
        }
    }
    Ok(())
}

/// Largest semiperimeter a bargraph with `semiperimeter - peaks = m` can
/// have: with one peak the semiperimeter is m + 1; with k >= 2 peaks the
/// peak bound gives m + k >= 3k, so k <= m/2 and the semiperimeter is at
/// most floor(3m/2).
pub fn diagonal_bound(m: u64) -> u64 {
    (m + 1).max(3 * m / 2)
}

static PEAK_BOUND_CHECK: OnceLock<Result<(), EnumerationError>> = OnceLock::new();

fn ensure_peak_bound() -> Result<(), EnumerationError> {
    PEAK_BOUND_CHECK
        .get_or_init(|| verify_peak_bound(14))
        .clone()
}

/// Counts the bargraphs whose semiperimeter exceeds their peak count by
/// exactly `m`, by enumerating every semiperimeter up to
/// [`diagonal_bound`].
///
/// The bound rests on the peak bound `sp >= 3 * pk` for two or more peaks,
/// which is re-verified exhaustively for semiperimeters up to 14 (once per
/// process) before any diagonal count is returned; a counterexample aborts
/// with [`EnumerationError::PeakBoundViolated`].
pub fn diagonal_count(m: u64) -> Result<u64, EnumerationError> {
    if m == 0 {
        return Err(EnumerationError::SemilengthTooSmall);
    }
    ensure_peak_bound()?;
    let mut total: u64 = 0;
    for n in 2..=diagonal_bound(m) {
        if n <= m {
            continue; // peak count would be n - m < 1
        }
        let wanted_peaks = n - m;
        for bargraph in enumerate_bargraphs(n)? {
            if bargraph.stats().peaks == wanted_peaks {
                total = total.checked_add(1).ok_or(EnumerationError::Overflow)?;
            }
        }
    }
    Ok(total)
}

/// The objects behind [`diagonal_count`]: every bargraph with
/// `semiperimeter - peaks = m`.
pub fn diagonal_bargraphs(m: u64) -> Result<Vec<Bargraph>, EnumerationError> {
    if m == 0 {
        return Err(EnumerationError::SemilengthTooSmall);
    }
    ensure_peak_bound()?;
    let mut found = Vec::new();
    for n in 2..=diagonal_bound(m) {
        if n <= m {
            continue;
        }
        let wanted_peaks = n - m;
        for bargraph in enumerate_bargraphs(n)? {
            if bargraph.stats().peaks == wanted_peaks {
                found.push(bargraph);
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn smallest_streams() {
        let paths: Vec<String> = enumerate_dyck(1).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(paths, ["ud"]);
        let bars: Vec<String> = enumerate_bargraphs(2)
            .unwrap()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(bars, ["1"]);
    }

    #[test]
    fn rejects_degenerate_sizes() {
        assert!(enumerate_dyck(0).is_err());
        assert!(enumerate_bargraphs(1).is_err());
        assert!(peak_table(1).is_err());
        assert!(diagonal_count(0).is_err());
    }

    #[test]
    fn dyck_stream_is_lexicographic_and_complete() {
        let paths: Vec<String> = enumerate_dyck(3).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(
            paths,
            ["uuuddd", "uududd", "uuddud", "uduudd", "ududud"]
        );
        for m in 1..=8 {
            let paths: Vec<DyckPath> = enumerate_dyck(m).unwrap().collect();
            assert_eq!(paths.len() as u64, catalan(m).unwrap(), "count at m={m}");
            let mut sorted = paths.clone();
            sorted.sort();
            assert_eq!(paths, sorted, "stream must be sorted at m={m}");
            let distinct: BTreeSet<_> = paths.iter().collect();
            assert_eq!(distinct.len(), paths.len(), "no duplicates at m={m}");
            for p in &paths {
                assert!(DyckPath::new(p.steps().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn bargraph_stream_matches_hand_enumeration() {
        let bars: Vec<String> = enumerate_bargraphs(4)
            .unwrap()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(bars, ["1,1,1", "1,2", "2,1", "2,2", "3"]);
    }

    #[test]
    fn bargraph_stream_is_lexicographic_and_valid() {
        for n in 2..=9 {
            let bars: Vec<Bargraph> = enumerate_bargraphs(n).unwrap().collect();
            let mut sorted: Vec<Vec<u32>> = bars.iter().map(|b| b.columns().to_vec()).collect();
            let original = sorted.clone();
            sorted.sort();
            assert_eq!(original, sorted, "stream must be sorted at n={n}");
            let distinct: BTreeSet<_> = original.iter().collect();
            assert_eq!(distinct.len(), original.len(), "no duplicates at n={n}");
            for b in &bars {
                assert_eq!(b.semiperimeter(), n, "wrong semiperimeter in stream");
                assert!(Bargraph::new(b.columns().to_vec()).is_ok());
            }
        }
    }

    /// Independent oracle: enumerate all compositions with at most n-1
    /// parts and heights below n by an odometer, and keep those of
    /// semiperimeter n.
    fn bargraphs_by_odometer(n: u64) -> BTreeSet<Vec<u32>> {
        let mut found = BTreeSet::new();
        let max_height = (n - 1) as u32;
        for len in 1..=(n - 1) as usize {
            let mut composition = vec![1u32; len];
            'odometer: loop {
                if Bargraph::new(composition.clone()).unwrap().semiperimeter() == n {
                    found.insert(composition.clone());
                }
                let mut i = len;
                loop {
                    if i == 0 {
                        break 'odometer;
                    }
                    i -= 1;
                    if composition[i] < max_height {
                        composition[i] += 1;
                        for item in composition.iter_mut().skip(i + 1) {
                            *item = 1;
                        }
                        continue 'odometer;
                    }
                }
            }
        }
        found
    }

    #[test]
    fn bargraph_stream_matches_odometer_oracle() {
        for n in 2..=7 {
            let stream: BTreeSet<Vec<u32>> = enumerate_bargraphs(n)
                .unwrap()
                .map(|b| b.columns().to_vec())
                .collect();
            assert_eq!(stream, bargraphs_by_odometer(n), "mismatch at n={n}");
        }
    }

    #[test]
    fn catalan_values() {
        let expected = [
            1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
        ];
        for (m, &value) in expected.iter().enumerate() {
            assert_eq!(catalan(m as u64).unwrap(), value);
        }
    }

    #[test]
    fn catalan_overflow_is_detected() {
        assert!(catalan(36).is_ok());
        assert_eq!(catalan(37), Err(EnumerationError::Overflow));
    }

    #[test]
    fn dyck_count_matches_catalan() {
        assert_eq!(enumerate_dyck(8).unwrap().count() as u64, 1430);
    }

    #[test]
    fn peak_table_cells() {
        let table = peak_table(9).unwrap();
        assert_eq!(table.count(6, 2), 1);
        assert_eq!(table.count(9, 2), 183);
        assert_eq!(table.count(5, 1), 13);
        assert_eq!(table.count(9, 3), 1);
        assert_eq!(table.count(9, 4), 0);
    }

    #[test]
    fn peak_table_rows_sum_to_family_size() {
        let table = peak_table(9).unwrap();
        for n in 2..=9 {
            assert_eq!(
                table.row_total(n),
                enumerate_bargraphs(n).unwrap().count() as u64,
                "row sum at n={n}"
            );
        }
    }

    #[test]
    fn peak_table_tsv_shape() {
        let table = peak_table(6).unwrap();
        let tsv = table.to_tsv();
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines[0], "n\t1\t2");
        assert_eq!(lines[1], "2\t1\t0");
        assert_eq!(lines[5], "6\t34\t1");
    }

    #[test]
    fn peak_bound_holds_at_small_sizes() {
        assert_eq!(verify_peak_bound(10), Ok(()));
    }

    #[test]
    fn diagonal_counts_match_catalan() {
        assert_eq!(diagonal_count(1).unwrap(), 1);
        assert_eq!(diagonal_count(4).unwrap(), 14);
        assert_eq!(diagonal_count(7).unwrap(), 429);
        for m in 1..=7 {
            assert_eq!(diagonal_count(m).unwrap(), catalan(m).unwrap(), "m={m}");
        }
    }

    #[test]
    fn diagonal_bargraphs_at_four() {
        let objects = diagonal_bargraphs(4).unwrap();
        assert_eq!(objects.len(), 14);
        let of_sp5 = objects.iter().filter(|b| b.semiperimeter() == 5).count();
        assert_eq!(of_sp5, 13);
        let two_peak: Vec<&Bargraph> = objects
            .iter()
            .filter(|b| b.stats().peaks == 2)
            .collect();
        assert_eq!(two_peak.len(), 1);
        assert_eq!(two_peak[0].columns(), &[2, 1, 2]);
    }

    #[test]
    fn image_of_paths_equals_diagonal_slice() {
        for m in 1..=6 {
            let image: BTreeSet<Vec<u32>> = enumerate_dyck(m)
                .unwrap()
                .map(|p| crate::bijection::dyck_to_bargraph(&p).columns().to_vec())
                .collect();
            let slice: BTreeSet<Vec<u32>> = diagonal_bargraphs(m)
                .unwrap()
                .into_iter()
                .map(|b| b.columns().to_vec())
                .collect();
            assert_eq!(image, slice, "image mismatch at m={m}");
        }
    }
}
