//! Discrete-time TASEP with step initial condition driven by the blocking
//! schedule read off a reverse plane partition.
//!
//! Particle `p_i` starts at `-(i-1)`. In the step from time `τ` to `τ+1` a
//! particle whose right neighbour site was empty at time `τ` moves, unless the
//! schedule makes it block. A cell in row `r` from the bottom and column `c`
//! holding `i`, with no `i` directly below, schedules `p_i` to block in the
//! step starting at `τ = r + c + i - 3`, after `r - 1` moves.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use super::matrix::last_passage_table;
use crate::bijections::phi;
use crate::error::Error;
use crate::tableaux::Tableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Block {
    pub particle: u32,
    /// Moves already made when blocking.
    pub steps: u32,
    /// The block happens in the step from `time` to `time + 1`.
    pub time: u64,
}

/// The blocking schedule of `T`.
pub fn blocking_schedule(t: &Tableau) -> Vec<Block> {
    let l = t.shape().rows();
    let mut out: Vec<Block> = t
        .shape()
        .cells()
        .into_iter()
        .filter_map(|(row, c)| {
            let v = t.get(row, c).unwrap();
            if t.get(row + 1, c) == Some(v) {
                return None;
            }
            let r = l + 1 - row;
            Some(Block { particle: v, steps: r as u32 - 1, time: (r + c + v as usize - 3) as u64 })
        })
        .collect();
    out.sort();
    out
}

/// A deterministic run of the exclusion process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TasepRun {
    /// `positions[τ][i-1]` is the site of `p_i` at time `τ`.
    pub positions: Vec<Vec<i64>>,
    /// `first_passage[k-1][i-1]`: first time `p_i` has made `k` moves.
    pub first_passage: Vec<Vec<u64>>,
    /// Scheduled blocks that never applied (particle not free, or at another step count).
    pub unused: Vec<Block>,
}

/// Runs `n` particles until each has made `l` moves and the schedule is exhausted.
pub fn simulate(n: usize, l: usize, schedule: &[Block]) -> TasepRun {
    let mut pending: BTreeSet<Block> = schedule.iter().copied().collect();
    let last_block = schedule.iter().map(|b| b.time).max().unwrap_or(0);
    let mut pos: Vec<i64> = (0..n as i64).map(|i| -i).collect();
    let mut positions = vec![pos.clone()];
    let mut first = vec![vec![0u64; n]; l];
    let mut tau = 0u64;
    loop {
        let steps = |p: &[i64], i: usize| (p[i] + i as i64) as u32;
        let done = (0..n).all(|i| steps(&pos, i) as usize >= l);
        if done && tau > last_block {
            break;
        }
        let mut next = pos.clone();
        for i in 0..n {
            let free = i == 0 || pos[i - 1] > pos[i] + 1;
            if !free {
                continue;
            }
            let b = Block { particle: i as u32 + 1, steps: steps(&pos, i), time: tau };
            if pending.remove(&b) {
                continue;
            }
            next[i] += 1;
            let k = steps(&next, i) as usize;
            if k <= l {
                first[k - 1][i] = tau + 1;
            }
        }
        pos = next;
        positions.push(pos.clone());
        tau += 1;
    }
    TasepRun { positions, first_passage: first, unused: pending.into_iter().collect() }
}

/// Outcome of [`tasep_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TasepReport {
    pub schedule: Vec<Block>,
    pub run: TasepRun,
    /// `G(k, i) + k + i - 1` from the last-passage table of `Φ(T)`.
    pub expected: Vec<Vec<u64>>,
}

impl TasepReport {
    /// `G*(k, n)` for `k = 1..ℓ` as simulated.
    pub fn last_particle_times(&self) -> Vec<u64> {
        self.run.first_passage.iter().map(|r| *r.last().unwrap_or(&0)).collect()
    }

    pub fn holds(&self) -> bool {
        self.run.unused.is_empty() && self.run.first_passage == self.expected
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schedule": self.schedule,
            "first_passage": self.run.first_passage,
            "expected": self.expected,
            "unused_blocks": self.run.unused,
            "holds": self.holds(),
        })
    }
}

/// Drives the exclusion process with the schedule of `T` (entries `≤ n`) and
/// compares every first-passage time with `G(k, i) + k + i - 1` for `Φ(T)`.
pub fn tasep_check(t: &Tableau, n: usize) -> Result<TasepReport, Error> {
    let l = t.shape().rows();
    if l > 6 || n > 8 {
        return Err(Error::TooLarge("TASEP check limited to ℓ ≤ 6, n ≤ 8".into()));
    }
    let m = phi(t, l, n)?;
    let g = last_passage_table(&m, None)?;
    let expected = (1..=l).map(|k| (1..=n).map(|i| g[k][i] + (k + i - 1) as u64).collect()).collect();
    let schedule = blocking_schedule(t);
    let run = simulate(n, l, &schedule);
    Ok(TasepReport { schedule, run, expected })
}
