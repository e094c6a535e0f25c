//! Backtracking search for Petrescu block arrays of order `3s+1`.
//!
//! The search runs in three phases. Candidates for `D` come first ([`search_d`]). For
//! each `D`, the admissible rows of `T` are filtered and assembled into `T` blocks
//! ([`enumerate_t`] lists them without a `D`). Each `T` forces the value of `X + Y`,
//! which is then split into `X` and `Y` ([`assign_xy`]). Every candidate array is
//! verified as a whole before it is reported.

use std::time::Duration;

use serde::Serialize;

use crate::bmatrix::ExponentMatrix;
use crate::error::{Error, Result};
use crate::petrescu::PetrescuBlocks;

mod bits;
mod d;
mod pipeline;
mod t;
mod tables;
mod xy;

pub use d::{search_d, search_d_with, DSearchOptions, DSearchStats};
pub use pipeline::run_pipeline;
pub use t::{enumerate_t, enumerate_t_with, zero_sum_rows, zero_sum_rows_with, TRowPool};
pub use xy::{assign_xy, assign_xy_with, pair_options, PairOptions, XyStats};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub s: usize,
    pub q: u32,
    /// Stop after this many `D` candidates.
    pub max_d_candidates: Option<usize>,
    /// Try at most this many `T` blocks per `D`.
    pub max_t_candidates: Option<usize>,
    /// `0` collects every solution.
    pub max_solutions: usize,
    pub deterministic_order: bool,
    pub time_budget: Option<Duration>,
    pub threads: usize,
    /// Disabling pruning leaves only the exact tests at complete candidates. Only
    /// practical for very small `s`.
    pub pruning: bool,
    pub engine: String,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            s: 6,
            q: 6,
            max_d_candidates: None,
            max_t_candidates: None,
            max_solutions: 1,
            deterministic_order: true,
            time_budget: None,
            threads: 1,
            pruning: true,
            engine: "auto".to_string(),
        }
    }
}

impl SearchConfig {
    pub fn new(s: usize, q: u32) -> Self {
        SearchConfig { s, q, ..SearchConfig::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.s == 0 {
            return Err(Error::invalid("s must be at least 1"));
        }
        if self.q < 2 {
            return Err(Error::invalid("q must be at least 2"));
        }
        if self.q % 2 != 0 {
            return Err(Error::invalid(format!(
                "q = {} is odd; splitting X + Y needs antipodal roots",
                self.q
            )));
        }
        if self.threads == 0 {
            return Err(Error::invalid("threads must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PruneCounts {
    pub d: u64,
    pub t: u64,
    pub x_plus_y: u64,
    pub xy: u64,
    pub final_gate: u64,
}

impl PruneCounts {
    fn absorb(&mut self, other: &PruneCounts) {
        self.d += other.d;
        self.t += other.t;
        self.x_plus_y += other.x_plus_y;
        self.xy += other.xy;
        self.final_gate += other.final_gate;
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub d_candidates: u64,
    pub t_candidates: u64,
    pub xy_branches: u64,
    pub prunes_by_phase: PruneCounts,
    pub solutions: u64,
    pub elapsed_ms: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.d_candidates += other.d_candidates;
        self.t_candidates += other.t_candidates;
        self.xy_branches += other.xy_branches;
        self.prunes_by_phase.absorb(&other.prunes_by_phase);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub blocks: PetrescuBlocks,
    /// The assembled array; it has passed `verify_bh`.
    pub matrix: ExponentMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub solutions: Vec<Solution>,
    pub stats: SearchStats,
    /// The time budget ran out before the search finished.
    pub truncated: bool,
}
