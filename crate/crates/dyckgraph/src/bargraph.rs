//! Bargraphs as compositions of positive column heights.
//!
//! A bargraph is a lattice path of unit up (U), horizontal (H), and down (D)
//! steps from the origin back to the x-axis, strictly above the axis except
//! at its endpoints and with no adjacent UD or DU pair. Each H step sits on
//! top of one column, so the path is equivalent to the nonempty sequence of
//! its column heights. The composition is the canonical form here; the step
//! word is a derived view.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::BargraphParseError;

/// A nonempty sequence of positive column heights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bargraph {
    columns: Vec<u32>,
}

impl Bargraph {
    /// Builds a bargraph from column heights, all of which must be positive.
    pub fn new(columns: Vec<u32>) -> Result<Self, BargraphParseError> {
        if columns.is_empty() {
            return Err(BargraphParseError::Empty);
        }
        if let Some(i) = columns.iter().position(|&h| h == 0) {
            return Err(BargraphParseError::NonPositiveHeight { position: i + 1 });
        }
        Ok(Self { columns })
    }

    /// The single column of height 1.
    pub fn unit() -> Self {
        Self { columns: vec![1] }
    }

    pub(crate) fn from_columns_unchecked(columns: Vec<u32>) -> Self {
        debug_assert!(!columns.is_empty() && columns.iter().all(|&h| h > 0));
        Self { columns }
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    /// Number of H steps plus number of U steps.
    pub fn semiperimeter(&self) -> u64 {
        let rises: u64 = self
            .columns
            .windows(2)
            .map(|w| u64::from(w[1].saturating_sub(w[0])))
            .sum();
        self.columns.len() as u64 + u64::from(self.columns[0]) + rises
    }

    /// The step word over {U, H, D}: h1 leading U's, one H per column,
    /// |h(i+1) - h(i)| U's or D's between columns, and h_r trailing D's.
    pub fn to_word(&self) -> String {
        let mut word = String::new();
        let mut level: u32 = 0;
        for &h in &self.columns {
            if h > level {
                for _ in 0..h - level {
                    word.push('U');
                }
            } else {
                for _ in 0..level - h {
                    word.push('D');
                }
            }
            word.push('H');
            level = h;
        }
        for _ in 0..level {
            word.push('D');
        }
        word
    }

    /// Every column raised by 1; as a lattice path, `U self D`.
    pub fn elevated(&self) -> Bargraph {
        Self {
            columns: self.columns.iter().map(|&h| h + 1).collect(),
        }
    }

    /// Concatenation of the two compositions.
    pub fn concat(&self, other: &Bargraph) -> Bargraph {
        let mut columns = Vec::with_capacity(self.columns.len() + other.columns.len());
        columns.extend_from_slice(&self.columns);
        columns.extend_from_slice(&other.columns);
        Self { columns }
    }

    /// Computes every statistic of the bargraph.
    ///
    /// Peaks and valleys are detected on the maximal constant runs of the
    /// composition, with a sentinel height 0 on both sides: a run entered by
    /// a rise and left by a fall is a peak, a run entered by a fall and left
    /// by a rise is a valley. The sentinels make the outermost runs eligible
    /// as peaks but never as valleys. Each valley contributes its height
    /// once to `sum_valley_heights`, regardless of its length.
    pub fn stats(&self) -> BargraphStats {
        let cols = &self.columns;
        let count_h = cols.len() as u64;
        let mut count_u = u64::from(cols[0]);
        let mut count_d = 0u64;
        let mut area = 0u64;
        let mut count_h_height1 = 0u64;
        let mut height = 0u32;

        let mut runs: Vec<u32> = Vec::new();
        for (i, &h) in cols.iter().enumerate() {
            area += u64::from(h);
            if h == 1 {
                count_h_height1 += 1;
            }
            height = height.max(h);
            if i + 1 < cols.len() {
                let next = cols[i + 1];
                if next > h {
                    count_u += u64::from(next - h);
                } else {
                    count_d += u64::from(h - next);
                }
            }
            if runs.last() != Some(&h) {
                runs.push(h);
            }
        }
        count_d += u64::from(*cols.last().unwrap());

        let mut peaks = 0u64;
        let mut valleys = 0u64;
        let mut sum_valley_heights = 0u64;
        for (i, &h) in runs.iter().enumerate() {
            let before = if i == 0 { 0 } else { runs[i - 1] };
            let after = if i + 1 == runs.len() { 0 } else { runs[i + 1] };
            if before < h && h > after {
                peaks += 1;
            } else if before > h && h < after {
                valleys += 1;
                sum_valley_heights += u64::from(h);
            }
        }

        BargraphStats {
            semiperimeter: count_h + count_u,
            count_h,
            count_u,
            count_d,
            area,
            peaks,
            valleys,
            sum_valley_heights,
            count_h_height1,
            height: u64::from(height),
            initial_u: u64::from(cols[0]),
            final_d: u64::from(*cols.last().unwrap()),
        }
    }
}

impl fmt::Display for Bargraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, h) in self.columns.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        Ok(())
    }
}

impl FromStr for Bargraph {
    type Err = BargraphParseError;

    /// Parses either encoding: a comma-separated composition like `1,1,3`,
    /// or a step word over {U, H, D} like `UHHUUHHDDHD`. Input containing
    /// any of 'U', 'H', 'D' is treated as a step word.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text.trim().is_empty() {
            return Err(BargraphParseError::Empty);
        }
        if text.contains(['U', 'H', 'D']) {
            parse_word(text)
        } else {
            parse_composition(text)
        }
    }
}

fn parse_composition(text: &str) -> Result<Bargraph, BargraphParseError> {
    let mut columns = Vec::new();
    for (i, item) in text.trim().split(',').enumerate() {
        let position = i + 1;
        let item = item.trim();
        match item.parse::<u32>() {
            Ok(0) => return Err(BargraphParseError::NonPositiveHeight { position }),
            Ok(h) => columns.push(h),
            Err(_) => {
                return Err(BargraphParseError::InvalidHeight {
                    position,
                    text: item.to_string(),
                })
            }
        }
    }
    Ok(Bargraph { columns })
}

/// Replays the walk of a step word, enforcing positivity away from the
/// endpoints, a final return to the axis, and the absence of UD/DU factors.
fn parse_word(text: &str) -> Result<Bargraph, BargraphParseError> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i + 1, c))
        .collect();

    let mut columns = Vec::new();
    let mut y: u32 = 0;
    let mut prev: Option<(usize, char)> = None;
    for (idx, &(position, ch)) in chars.iter().enumerate() {
        match ch {
            'U' => {
                if let Some((p, 'D')) = prev {
                    return Err(BargraphParseError::ForbiddenFactor {
                        position: p,
                        factor: "DU",
                    });
                }
                y += 1;
            }
            'D' => {
                if let Some((p, 'U')) = prev {
                    return Err(BargraphParseError::ForbiddenFactor {
                        position: p,
                        factor: "UD",
                    });
                }
                if y == 0 {
                    return Err(BargraphParseError::BelowAxis { position });
                }
                y -= 1;
                if y == 0 && idx + 1 < chars.len() {
                    return Err(BargraphParseError::PrematureReturn { position });
                }
            }
            'H' => {
                if y == 0 {
                    return Err(BargraphParseError::OnAxis { position });
                }
                columns.push(y);
            }
            c => return Err(BargraphParseError::InvalidChar { position, found: c }),
        }
        prev = Some((position, ch));
    }
    if y != 0 {
        return Err(BargraphParseError::NotClosed { height: y });
    }
    if columns.is_empty() {
        return Err(BargraphParseError::Empty);
    }
    Ok(Bargraph { columns })
}

/// The full statistics record of a bargraph.
///
/// Serialized field names match the step-word notation: `count_H` for the
/// number of H steps, `count_H_height1` for H steps at height 1, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BargraphStats {
    /// H steps plus U steps.
    pub semiperimeter: u64,
    /// Number of H steps, i.e. of columns.
    #[serde(rename = "count_H")]
    pub count_h: u64,
    /// Number of U steps.
    #[serde(rename = "count_U")]
    pub count_u: u64,
    /// Number of D steps; always equal to `count_u`.
    #[serde(rename = "count_D")]
    pub count_d: u64,
    /// Sum of the column heights.
    pub area: u64,
    /// Plateaus entered by a rise and left by a fall.
    pub peaks: u64,
    /// Plateaus entered by a fall and left by a rise.
    pub valleys: u64,
    /// Sum over valleys of the valley's height, counted once per valley.
    pub sum_valley_heights: u64,
    /// Columns of height 1.
    #[serde(rename = "count_H_height1")]
    pub count_h_height1: u64,
    /// Maximum column height.
    pub height: u64,
    /// Leading U steps; equals the first column height.
    #[serde(rename = "initial_U")]
    pub initial_u: u64,
    /// Trailing D steps; equals the last column height.
    #[serde(rename = "final_D")]
    pub final_d: u64,
}

impl BargraphStats {
    /// Field names, in the order used for TSV output.
    pub const FIELDS: [&'static str; 12] = [
        "semiperimeter",
        "count_H",
        "count_U",
        "count_D",
        "area",
        "peaks",
        "valleys",
        "sum_valley_heights",
        "count_H_height1",
        "height",
        "initial_U",
        "final_D",
    ];

    /// Field values in the same order as [`Self::FIELDS`].
    pub fn values(&self) -> [u64; 12] {
        [
            self.semiperimeter,
            self.count_h,
            self.count_u,
            self.count_d,
            self.area,
            self.peaks,
            self.valleys,
            self.sum_valley_heights,
            self.count_h_height1,
            self.height,
            self.initial_u,
            self.final_d,
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bar(text: &str) -> Bargraph {
        text.parse().unwrap()
    }

    #[test]
    fn parse_composition_forms() {
        assert_eq!(bar("1").columns(), &[1]);
        assert_eq!(bar("2,1,2").columns(), &[2, 1, 2]);
        assert_eq!(bar(" 2 , 1 , 2 ").columns(), &[2, 1, 2]);
    }

    #[test]
    fn parse_word_forms() {
        assert_eq!(bar("UHD").columns(), &[1]);
        assert_eq!(bar("UUHDHUHDD").columns(), &[2, 1, 2]);
        // Replaying the walk of this word gives columns 1,1,3,3,1, and the
        // word regenerates from them, so it is a valid bargraph word.
        assert_eq!(bar("UHHUUHHDDHD").columns(), &[1, 1, 3, 3, 1]);
        assert_eq!(bar("UHHUUHHDDHD").to_word(), "UHHUUHHDDHD");
    }

    #[test]
    fn parse_rejects_bad_compositions() {
        assert_eq!("".parse::<Bargraph>(), Err(BargraphParseError::Empty));
        assert_eq!(
            "1,0,2".parse::<Bargraph>(),
            Err(BargraphParseError::NonPositiveHeight { position: 2 })
        );
        assert_eq!(
            "1,,2".parse::<Bargraph>(),
            Err(BargraphParseError::InvalidHeight {
                position: 2,
                text: String::new()
            })
        );
        assert_eq!(
            "1,-3".parse::<Bargraph>(),
            Err(BargraphParseError::InvalidHeight {
                position: 2,
                text: "-3".to_string()
            })
        );
    }

    #[test]
    fn parse_rejects_bad_words() {
        assert_eq!(
            "UDHD".parse::<Bargraph>(),
            Err(BargraphParseError::ForbiddenFactor {
                position: 1,
                factor: "UD"
            })
        );
        assert_eq!(
            "UHDUHD".parse::<Bargraph>(),
            Err(BargraphParseError::PrematureReturn { position: 3 })
        );
        assert_eq!(
            "UHDD".parse::<Bargraph>(),
            Err(BargraphParseError::PrematureReturn { position: 3 })
        );
        assert_eq!(
            "DHU".parse::<Bargraph>(),
            Err(BargraphParseError::BelowAxis { position: 1 })
        );
        assert_eq!(
            "UHH".parse::<Bargraph>(),
            Err(BargraphParseError::NotClosed { height: 1 })
        );
        assert_eq!(
            "HUD".parse::<Bargraph>(),
            Err(BargraphParseError::OnAxis { position: 1 })
        );
        assert_eq!(
            "UHXD".parse::<Bargraph>(),
            Err(BargraphParseError::InvalidChar {
                position: 3,
                found: 'X'
            })
        );
    }

    #[test]
    fn word_examples() {
        assert_eq!(bar("1").to_word(), "UHD");
        assert_eq!(bar("2,1,2").to_word(), "UUHDHUHDD");
        let word = bar("1,1,3,3,2,2,3,3,2,1,1,2").to_word();
        assert_eq!(word.matches('H').count(), 12);
        assert_eq!(word.matches('U').count(), 5);
        assert_eq!(word.matches('D').count(), 5);
    }

    #[test]
    fn word_round_trips() {
        for text in ["1", "2,1,2", "1,1,3,3,2,2,3,3,2,1,1,2", "5", "1,2,3,2,1"] {
            let b = bar(text);
            assert_eq!(b.to_word().parse::<Bargraph>().unwrap(), b);
        }
    }

    #[test]
    fn stats_single_column() {
        assert_eq!(
            bar("1").stats(),
            BargraphStats {
                semiperimeter: 2,
                count_h: 1,
                count_u: 1,
                count_d: 1,
                area: 1,
                peaks: 1,
                valleys: 0,
                sum_valley_heights: 0,
                count_h_height1: 1,
                height: 1,
                initial_u: 1,
                final_d: 1,
            }
        );
    }

    #[test]
    fn stats_worked_example() {
        let s = bar("1,1,3,3,2,2,3,3,2,1,1,2").stats();
        assert_eq!(s.semiperimeter, 17);
        assert_eq!(s.count_h, 12);
        assert_eq!(s.count_u, 5);
        assert_eq!(s.count_d, 5);
        assert_eq!(s.area, 24);
        assert_eq!(s.peaks, 3);
        assert_eq!(s.valleys, 2);
        assert_eq!(s.sum_valley_heights, 3);
        assert_eq!(s.count_h_height1, 4);
        assert_eq!(s.height, 3);
        assert_eq!(s.initial_u, 1);
        assert_eq!(s.final_d, 2);
    }

    #[test]
    fn stats_one_dip() {
        let s = bar("2,1,2").stats();
        assert_eq!(s.semiperimeter, 6);
        assert_eq!(s.peaks, 2);
        assert_eq!(s.valleys, 1);
        assert_eq!(s.sum_valley_heights, 1);
        assert_eq!(s.area, 5);
        assert_eq!(s.count_h_height1, 1);
    }

    #[test]
    fn semiperimeter_matches_stats() {
        for text in ["1", "2,1,2", "1,1,3,3,2,2,3,3,2,1,1,2", "3,3,3", "1,5,1"] {
            let b = bar(text);
            assert_eq!(b.semiperimeter(), b.stats().semiperimeter);
        }
    }

    #[test]
    fn elevation_and_concat() {
        assert_eq!(bar("1").elevated(), bar("2"));
        assert_eq!(bar("1,1").elevated(), bar("2,2"));
        assert_eq!(bar("2,1,2").elevated(), bar("3,2,3"));
        assert_eq!(bar("1").concat(&bar("1")), bar("1,1"));
        assert_eq!(bar("2").concat(&bar("1")).concat(&bar("2")), bar("2,1,2"));
        assert_eq!(bar("1,2").concat(&bar("3")), bar("1,2,3"));
    }

    #[test]
    fn serializes_with_exact_field_names() {
        let json = serde_json::to_value(bar("2,1,2").stats()).unwrap();
        let obj = json.as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(|k| k.as_str()).collect();
        assert_eq!(keys, BargraphStats::FIELDS);
    }
}
