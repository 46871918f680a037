//! Uncrowding: a set-valued tableau becomes a semistandard tableau of a larger
//! shape together with an increasing elegant recording tableau.
//!
//! Starting from the tableau of cell minima, the extra entries of row `i` are
//! row-inserted (largest first) into the rows below `i`, for `i` from the
//! bottom row up. A box created in row `k` by an extra entry of row `i`
//! records `k - i`; the marking of that box is `i`.

use serde_json::{json, Value};

use super::rsk::{reverse_bump, row_insert, straight};
use crate::error::Error;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{SetTableau, Tableau};

/// Image of a set-valued tableau under uncrowding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UncrowdResult {
    /// Semistandard tableau of shape `μ`.
    pub insertion: Tableau,
    /// Increasing elegant tableau of shape `μ/λ`.
    pub recording: Tableau,
    /// Same shape as `recording`; the row each extra entry came from.
    pub markings: Tableau,
}

impl UncrowdResult {
    /// Assembles a result from an insertion tableau and a recording tableau.
    pub fn new(insertion: Tableau, recording: Tableau) -> Result<UncrowdResult, Error> {
        if insertion.shape().outer != recording.shape().outer || !insertion.shape().inner.is_empty() {
            return Err(Error::ShapeMismatch(format!("insertion shape {} against recording shape {}", insertion.shape(), recording.shape())));
        }
        if !insertion.is_ssyt() || !recording.is_increasing_elegant() {
            return Err(Error::InvalidArgument("uncrowding pairs a semistandard with an increasing elegant tableau".into()));
        }
        let rows = recording.rows().iter().enumerate().map(|(k, r)| r.iter().map(|&e| k as u32 + 1 - e).collect()).collect();
        let markings = Tableau::new(recording.shape().clone(), rows)?;
        Ok(UncrowdResult { insertion, recording, markings })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "insertion": self.insertion.to_json(),
            "recording": self.recording.to_json(),
            "inner": self.recording.shape().inner.parts(),
            "markings": self.markings.to_json(),
        })
    }
}

pub fn uncrowd(t: &SetTableau) -> UncrowdResult {
    let lambda = t.shape().clone();
    let mut p: Vec<Vec<u32>> = t.rows().iter().map(|r| r.iter().map(|c| c[0]).collect()).collect();
    let mut created: Vec<(usize, usize, u32)> = Vec::new();
    for i in (1..=t.rows().len()).rev() {
        let mut extras: Vec<u32> = t.rows()[i - 1].iter().flat_map(|c| c[1..].iter().copied()).collect();
        extras.sort_unstable_by(|a, b| b.cmp(a));
        for x in extras {
            let (r, c) = row_insert(&mut p, i, x);
            created.push((r, c, i as u32));
        }
    }
    let insertion = straight(p);
    let mu = insertion.shape().outer.clone();
    let mut rec: Vec<Vec<u32>> = (1..=mu.len()).map(|k| vec![0; mu.part(k) - lambda.part(k)]).collect();
    for (r, c, i) in created {
        rec[r][c - lambda.part(r + 1)] = r as u32 + 1 - i;
    }
    let recording = Tableau::new(SkewShape::new(mu, lambda).expect("insertion only adds boxes"), rec).expect("rows match the skew shape");
    UncrowdResult::new(insertion, recording).expect("uncrowding produces a valid pair")
}

/// Inverse of [`uncrowd`].
pub fn crowd(u: &UncrowdResult) -> Result<SetTableau, Error> {
    let lambda: &Partition = &u.recording.shape().inner;
    let mut p = u.insertion.rows().to_vec();
    let mut by_origin: Vec<(u32, usize, usize)> = Vec::new();
    for (k, c) in u.recording.shape().cells() {
        by_origin.push((u.markings.get(k, c).unwrap(), k, c));
    }
    // Undo the last insertions first: smallest origin row, then the lowest box.
    by_origin.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut sets: Vec<Vec<Vec<u32>>> = (1..=lambda.len()).map(|r| (0..lambda.part(r)).map(|_| Vec::new()).collect()).collect();
    let mut extra: Vec<Vec<u32>> = vec![Vec::new(); lambda.len()];
    for (i, k, c) in by_origin {
        let i = i as usize;
        if p.get(k - 1).map(|r| r.len()) != Some(c) || p.get(k).is_some_and(|r| r.len() >= c) {
            return Err(Error::InvalidArgument(format!("recording box ({k}, {c}) is not a corner when it is undone")));
        }
        if i == 0 || i >= k {
            return Err(Error::InvalidArgument(format!("marking {i} at row {k}")));
        }
        extra[i - 1].push(reverse_bump(&mut p, k - 1, i));
    }
    for (r, row) in p.iter().enumerate().take(lambda.len()) {
        if row.len() != lambda.part(r + 1) {
            return Err(Error::ShapeMismatch("crowding does not return to the inner shape".into()));
        }
        for (c, &v) in row.iter().enumerate() {
            sets[r][c].push(v);
        }
    }
    for (r, xs) in extra.into_iter().enumerate() {
        for x in xs {
            let c = (0..sets[r].len()).rfind(|&c| sets[r][c][0] < x).ok_or_else(|| Error::InvalidArgument(format!("extra entry {x} fits no cell of row {}", r + 1)))?;
            sets[r][c].push(x);
        }
    }
    SetTableau::new(sets)
}
