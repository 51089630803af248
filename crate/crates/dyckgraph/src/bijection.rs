//! The block-to-column correspondence between Dyck paths and bargraphs.
//!
//! Forward direction: each maximal block of `c` equal entries in the
//! step-height sequence of a path contributes `floor(c/2)` columns of that
//! height. The map is a bijection, but it does not preserve size: a path of
//! semilength m lands on exactly the bargraphs whose semiperimeter exceeds
//! their peak count by m.
//!
//! Inverse direction: the composition is first padded into a run form whose
//! heights move by exactly 1 and start and end at height 1 (inserting runs
//! of exponent 0 where needed), then each run is replaced by a step pattern
//! chosen by whether its neighbours, with height-0 sentinels on both sides,
//! sit below or above it.
//!
//! [`check_stat_identities`] and [`check_structure_laws`] evaluate, for
//! concrete objects, the statistic and composition laws the map satisfies;
//! they return reports listing both sides of every identity.

use serde::Serialize;

use crate::bargraph::Bargraph;
use crate::dyck::{DyckPath, Step};

/// Maps a Dyck path to its bargraph: each height-sequence block of length
/// `c` and height `h` becomes `floor(c/2)` columns of height `h`.
///
/// The result is never empty: every Dyck path contains a peak, and the
/// block containing a peak has length at least 2.
pub fn dyck_to_bargraph(path: &DyckPath) -> Bargraph {
    let heights = path.height_sequence();
    let mut columns = Vec::with_capacity(path.steps().len() / 2);
    for block in heights.blocks().blocks() {
        for _ in 0..block.len / 2 {
            columns.push(block.height);
        }
    }
    Bargraph::from_columns_unchecked(columns)
}

/// One run of the padded form: `exponent` copies of a column of `height`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PaddedRun {
    pub height: u32,
    pub exponent: usize,
}

/// A composition rewritten as runs whose heights change by exactly 1 from
/// run to run and whose first and last heights equal 1.
///
/// Runs with exponent 0 are inserted wherever the raw runs jump by more
/// than 1, plus an ascending staircase before a first column above 1 and a
/// descending staircase after a last column above 1. Dropping the
/// zero-exponent runs and expanding the rest recovers the composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedRunForm {
    runs: Vec<PaddedRun>,
}

impl PaddedRunForm {
    pub fn runs(&self) -> &[PaddedRun] {
        &self.runs
    }

    /// Expands the runs back into the source composition.
    pub fn expand(&self) -> Vec<u32> {
        let mut columns = Vec::new();
        for run in &self.runs {
            for _ in 0..run.exponent {
                columns.push(run.height);
            }
        }
        columns
    }
}

/// Rewrites a bargraph into its padded run form.
pub fn padded_run_form(bargraph: &Bargraph) -> PaddedRunForm {
    let mut raw: Vec<PaddedRun> = Vec::new();
    for &h in bargraph.columns() {
        match raw.last_mut() {
            Some(run) if run.height == h => run.exponent += 1,
            _ => raw.push(PaddedRun {
                height: h,
                exponent: 1,
            }),
        }
    }

    let mut runs: Vec<PaddedRun> = Vec::new();
    for h in 1..raw[0].height {
        runs.push(PaddedRun {
            height: h,
            exponent: 0,
        });
    }
    for (i, &run) in raw.iter().enumerate() {
        runs.push(run);
        if let Some(next) = raw.get(i + 1) {
            // Unique strictly monotone staircase between runs more than 1 apart.
            if next.height > run.height {
                for h in run.height + 1..next.height {
                    runs.push(PaddedRun {
                        height: h,
                        exponent: 0,
                    });
                }
            } else {
                for h in (next.height + 1..run.height).rev() {
                    runs.push(PaddedRun {
                        height: h,
                        exponent: 0,
                    });
                }
            }
        }
    }
    for h in (1..raw[raw.len() - 1].height).rev() {
        runs.push(PaddedRun {
            height: h,
            exponent: 0,
        });
    }
    PaddedRunForm { runs }
}

/// Maps a bargraph back to its Dyck path.
///
/// Over the padded run form with sentinel height 0 on both sides, a run of
/// exponent `a` becomes: `(ud)^a` at a local maximum, `(ud)^a u` on an
/// ascent, `(du)^a d` on a descent, `(du)^a` at a local minimum.
pub fn bargraph_to_dyck(bargraph: &Bargraph) -> DyckPath {
    let form = padded_run_form(bargraph);
    let runs = form.runs();
    let mut steps = Vec::new();
    for (i, run) in runs.iter().enumerate() {
        let before = if i == 0 { 0 } else { runs[i - 1].height };
        let after = if i + 1 == runs.len() {
            0
        } else {
            runs[i + 1].height
        };
        let entered_rising = before < run.height;
        let left_falling = run.height > after;
        match (entered_rising, left_falling) {
            (true, true) => {
                for _ in 0..run.exponent {
                    steps.push(Step::Up);
                    steps.push(Step::Down);
                }
            }
            (true, false) => {
                for _ in 0..run.exponent {
                    steps.push(Step::Up);
                    steps.push(Step::Down);
                }
                steps.push(Step::Up);
            }
            (false, true) => {
                for _ in 0..run.exponent {
                    steps.push(Step::Down);
                    steps.push(Step::Up);
                }
                steps.push(Step::Down);
            }
            (false, false) => {
                for _ in 0..run.exponent {
                    steps.push(Step::Down);
                    steps.push(Step::Up);
                }
            }
        }
    }
    DyckPath::from_steps_unchecked(steps)
}

/// One evaluated identity: both sides and whether they agree.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(name: &'static str, lhs: u64, rhs: u64) -> Self {
        Self {
            name,
            lhs,
            rhs,
            holds: lhs == rhs,
        }
    }
}

/// The seven statistic identities between a path and its image bargraph.
#[derive(Debug, Clone, Serialize)]
pub struct StatIdentityReport {
    pub path: String,
    pub bargraph: String,
    pub identities: Vec<IdentityCheck>,
    pub all_hold: bool,
}

/// Evaluates, for one path, how each path statistic reappears as a bargraph
/// statistic of its image.
///
/// The returns identity has two branches: for a path of height 1 the number
/// of returns equals the number of height-1 columns; for taller paths it
/// exceeds it by one.
pub fn check_stat_identities(path: &DyckPath) -> StatIdentityReport {
    let image = dyck_to_bargraph(path);
    let p = path.stats();
    let b = image.stats();
    let returns_check = if p.height == 1 {
        IdentityCheck::new("returns = count_H_height1", p.returns, b.count_h_height1)
    } else {
        IdentityCheck::new(
            "returns = count_H_height1 + 1",
            p.returns,
            b.count_h_height1 + 1,
        )
    };
    let identities = vec![
        IdentityCheck::new(
            "semilength = semiperimeter - peaks",
            p.semilength,
            b.semiperimeter - b.peaks,
        ),
        IdentityCheck::new("num_peaks = count_H - valleys", p.num_peaks, b.count_h - b.valleys),
        IdentityCheck::new(
            "sum_peak_heights = area - sum_valley_heights",
            p.sum_peak_heights,
            b.area - b.sum_valley_heights,
        ),
        IdentityCheck::new("height = height", p.height, b.height),
        IdentityCheck::new("initial_ups = initial_U", p.initial_ups, b.initial_u),
        IdentityCheck::new("final_downs = final_D", p.final_downs, b.final_d),
        returns_check,
    ];
    let all_hold = identities.iter().all(|c| c.holds);
    StatIdentityReport {
        path: path.to_string(),
        bargraph: image.to_string(),
        identities,
        all_hold,
    }
}

/// One evaluated composition law: both sides as compositions.
#[derive(Debug, Clone, Serialize)]
pub struct LawCheck {
    pub law: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// The two structural laws of the map, evaluated on a pair of paths.
#[derive(Debug, Clone, Serialize)]
pub struct StructureLawReport {
    pub elevation: LawCheck,
    pub concatenation: LawCheck,
    pub all_hold: bool,
}

/// Evaluates the structural laws: elevating a path elevates its image, and
/// the image of a concatenation is the concatenation of the images, with a
/// unit column spliced in when both parts have height at least 2.
pub fn check_structure_laws(path: &DyckPath, other: &DyckPath) -> StructureLawReport {
    let image = dyck_to_bargraph(path);
    let other_image = dyck_to_bargraph(other);

    let elev_lhs = dyck_to_bargraph(&path.elevated());
    let elev_rhs = image.elevated();
    let elevation = LawCheck {
        law: "map(u P d) = elevate(map(P))",
        lhs: elev_lhs.to_string(),
        rhs: elev_rhs.to_string(),
        holds: elev_lhs == elev_rhs,
    };

    let cat_lhs = dyck_to_bargraph(&path.concat(other));
    let both_tall = path.stats().height >= 2 && other.stats().height >= 2;
    let (law, cat_rhs) = if both_tall {
        (
            "map(P P') = map(P) . unit . map(P')",
            image.concat(&Bargraph::unit()).concat(&other_image),
        )
    } else {
        ("map(P P') = map(P) . map(P')", image.concat(&other_image))
    };
    let concatenation = LawCheck {
        law,
        lhs: cat_lhs.to_string(),
        rhs: cat_rhs.to_string(),
        holds: cat_lhs == cat_rhs,
    };

    let all_hold = elevation.holds && concatenation.holds;
    StructureLawReport {
        elevation,
        concatenation,
        all_hold,
    }
}
