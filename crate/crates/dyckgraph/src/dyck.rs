//! Dyck paths, their step-height sequences, and path statistics.
//!
//! A Dyck path is a nonempty balanced word of diagonal up/down steps that
//! never dips below the x-axis. The *height* of a step is the y-coordinate
//! of its highest point, so an up step from y to y+1 has height y+1 and a
//! down step from y to y-1 has height y. The per-step heights form the
//! [`HeightSequence`], and its maximal constant runs form the
//! [`BlockDecomposition`] that drives the map to bargraphs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::DyckParseError;

/// A single step of a Dyck path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
        }
    }
}

/// A nonempty Dyck path.
///
/// Invariants, enforced on construction: the numbers of up and down steps
/// are equal, every prefix has at least as many ups as downs, and there is
/// at least one step of each kind.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    /// Builds a path from explicit steps, validating the Dyck invariants.
    pub fn new(steps: Vec<Step>) -> Result<Self, DyckParseError> {
        if steps.is_empty() {
            return Err(DyckParseError::Empty);
        }
        let mut y: usize = 0;
        let mut ups = 0;
        for (i, &s) in steps.iter().enumerate() {
            match s {
                Step::Up => {
                    y += 1;
                    ups += 1;
                }
                Step::Down => {
                    if y == 0 {
                        return Err(DyckParseError::NegativePrefix { position: i + 1 });
                    }
                    y -= 1;
                }
            }
        }
        if y != 0 {
            return Err(DyckParseError::Unbalanced {
                ups,
                downs: steps.len() - ups,
            });
        }
        Ok(Self { steps })
    }

    /// Wraps steps already known to satisfy the invariants.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckPath::new(steps.clone()).is_ok());
        Self { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Half the number of steps.
    pub fn semilength(&self) -> u64 {
        (self.steps.len() / 2) as u64
    }

    /// The height of each step: end height for an up step, start height for
    /// a down step.
    pub fn height_sequence(&self) -> HeightSequence {
        let mut heights = Vec::with_capacity(self.steps.len());
        let mut y: u32 = 0;
        for &s in &self.steps {
            match s {
                Step::Up => {
                    y += 1;
                    heights.push(y);
                }
                Step::Down => {
                    heights.push(y);
                    y -= 1;
                }
            }
        }
        HeightSequence { heights }
    }

    /// The elevated path `u self d`.
    pub fn elevated(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len() + 2);
        steps.push(Step::Up);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::Down);
        Self::from_steps_unchecked(steps)
    }

    /// The concatenation `self other`.
    pub fn concat(&self, other: &DyckPath) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len() + other.steps.len());
        steps.extend_from_slice(&self.steps);
        steps.extend_from_slice(&other.steps);
        Self::from_steps_unchecked(steps)
    }

    /// Computes every statistic of the path in a single left-to-right pass.
    pub fn stats(&self) -> DyckStats {
        let mut y: u32 = 0;
        let mut height: u32 = 0;
        let mut num_peaks = 0u64;
        let mut sum_peak_heights = 0u64;
        let mut returns = 0u64;
        let mut initial_ups = 0u64;
        let mut in_initial_run = true;
        let mut final_downs = 0u64;
        let mut even_blocks = 0u64;
        let mut odd_blocks = 0u64;
        let mut run_height: u32 = 0;
        let mut run_len: usize = 0;
        let mut prev: Option<Step> = None;

        for &s in &self.steps {
            let h = match s {
                Step::Up => {
                    y += 1;
                    y
                }
                Step::Down => {
                    let h = y;
                    y -= 1;
                    h
                }
            };
            height = height.max(h);
            match s {
                Step::Up => {
                    if in_initial_run {
                        initial_ups += 1;
                    }
                    final_downs = 0;
                }
                Step::Down => {
                    in_initial_run = false;
                    final_downs += 1;
                    if prev == Some(Step::Up) {
                        num_peaks += 1;
                        sum_peak_heights += u64::from(h);
                    }
                    if y == 0 {
                        returns += 1;
                    }
                }
            }
            if run_len > 0 && h == run_height {
                run_len += 1;
            } else {
                if run_len > 0 {
                    if run_len.is_multiple_of(2) {
                        even_blocks += 1;
                    } else {
                        odd_blocks += 1;
                    }
                }
                run_height = h;
                run_len = 1;
            }
            prev = Some(s);
        }
        if run_len.is_multiple_of(2) {
            even_blocks += 1;
        } else {
            odd_blocks += 1;
        }

        DyckStats {
            semilength: self.semilength(),
            num_peaks,
            returns,
            sum_peak_heights,
            height: u64::from(height),
            initial_ups,
            final_downs,
            even_blocks,
            odd_blocks,
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            f.write_str(match s {
                Step::Up => "u",
                Step::Down => "d",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = DyckParseError;

    /// Parses a word over 'u'/'d'. Whitespace and '·' separators are
    /// ignored; error positions refer to the original string, 1-based.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut steps = Vec::new();
        let mut y: usize = 0;
        let mut ups = 0;
        for (i, ch) in text.chars().enumerate() {
            let position = i + 1;
            match ch {
                'u' => {
                    steps.push(Step::Up);
                    y += 1;
                    ups += 1;
                }
                'd' => {
                    if y == 0 {
                        return Err(DyckParseError::NegativePrefix { position });
                    }
                    steps.push(Step::Down);
                    y -= 1;
                }
                c if c.is_whitespace() || c == '·' => {}
                c => return Err(DyckParseError::InvalidChar { position, found: c }),
            }
        }
        if steps.is_empty() {
            return Err(DyckParseError::Empty);
        }
        if y != 0 {
            return Err(DyckParseError::Unbalanced {
                ups,
                downs: steps.len() - ups,
            });
        }
        Ok(Self { steps })
    }
}

/// The per-step heights of a Dyck path.
///
/// Consecutive entries differ by at most 1, and the first and last entries
/// equal 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightSequence {
    heights: Vec<u32>,
}

impl HeightSequence {
    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Splits the sequence into maximal runs of equal height.
    pub fn blocks(&self) -> BlockDecomposition {
        let mut blocks: Vec<Block> = Vec::new();
        for &h in &self.heights {
            match blocks.last_mut() {
                Some(b) if b.height == h => b.len += 1,
                _ => blocks.push(Block { height: h, len: 1 }),
            }
        }
        BlockDecomposition { blocks }
    }
}

/// One maximal constant run of a height sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub height: u32,
    pub len: usize,
}

/// The maximal constant runs of a height sequence, in order.
///
/// Adjacent blocks differ in height by exactly 1, and the first and last
/// blocks have height 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of blocks of even length.
    pub fn even_blocks(&self) -> u64 {
        self.blocks.iter().filter(|b| b.len % 2 == 0).count() as u64
    }

    /// Number of blocks of odd length.
    pub fn odd_blocks(&self) -> u64 {
        self.blocks.iter().filter(|b| b.len % 2 == 1).count() as u64
    }
}

/// The full statistics record of a Dyck path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DyckStats {
    /// Half the number of steps.
    pub semilength: u64,
    /// Occurrences of an up step immediately followed by a down step.
    pub num_peaks: u64,
    /// Down steps that end on the x-axis.
    pub returns: u64,
    /// Sum over peaks of the y-coordinate of the peak's highest point.
    pub sum_peak_heights: u64,
    /// Maximum y-coordinate reached.
    pub height: u64,
    /// Length of the initial run of up steps.
    pub initial_ups: u64,
    /// Length of the final run of down steps.
    pub final_downs: u64,
    /// Blocks of even length in the height sequence.
    pub even_blocks: u64,
    /// Blocks of odd length in the height sequence.
    pub odd_blocks: u64,
}

impl DyckStats {
    /// Field names, in the order used for TSV output.
    pub const FIELDS: [&'static str; 9] = [
        "semilength",
        "num_peaks",
        "returns",
        "sum_peak_heights",
        "height",
        "initial_ups",
        "final_downs",
        "even_blocks",
        "odd_blocks",
    ];

    /// Field values in the same order as [`Self::FIELDS`].
    pub fn values(&self) -> [u64; 9] {
        [
            self.semilength,
            self.num_peaks,
            self.returns,
            self.sum_peak_heights,
            self.height,
            self.initial_ups,
            self.final_downs,
            self.even_blocks,
            self.odd_blocks,
        ]
    }
}
