//! Deterministic monospaced ASCII drawings of both families.

use crate::bargraph::Bargraph;
use crate::dyck::{DyckPath, Step};

impl DyckPath {
    /// Draws the path with '/' and '\' diagonals, one text row per level.
    pub fn render_ascii(&self) -> String {
        let heights = self.height_sequence();
        let max = *heights.heights().iter().max().unwrap();
        let mut lines = Vec::with_capacity(max as usize);
        for row in (1..=max).rev() {
            let mut line = String::with_capacity(self.steps().len());
            for (step, &h) in self.steps().iter().zip(heights.heights()) {
                line.push(if h == row {
                    match step {
                        Step::Up => '/',
                        Step::Down => '\\',
                    }
                } else {
                    ' '
                });
            }
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

impl Bargraph {
    /// Draws the columns as stacks of '#' cells, one text row per level.
    pub fn render_ascii(&self) -> String {
        let max = *self.columns().iter().max().unwrap();
        let mut lines = Vec::with_capacity(max as usize);
        for row in (1..=max).rev() {
            let mut line = String::with_capacity(self.columns().len());
            for &h in self.columns() {
                line.push(if h >= row { '#' } else { ' ' });
            }
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}
