//! Jagged grids of L-vertices and their partition functions.
//!
//! Rows are listed bottom to top and are left-aligned. Row lengths never
//! increase going up; the top half-edges of a row that are not covered by
//! the next row carry fixed labels, as do the bottom half-edges of the first
//! row.

use std::collections::HashMap;

use serde_json::{json, Value};

use super::tables::LMatrix;
use crate::algebra::Polynomial;
use crate::error::Error;

pub const MAX_ROW_LEN: usize = 14;
pub const MAX_ROWS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub len: usize,
    /// Index into [`JaggedModel::lmatrices`].
    pub lmatrix: usize,
    pub spectral: Polynomial,
    pub left: u8,
    pub right: u8,
    /// Labels on the top half-edges not covered by the next row, left to right.
    pub top: Vec<u8>,
    /// Bottom half-edges of this row pinned to a label (column, label).
    pub pinned_below: Vec<(usize, u8)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JaggedModel {
    pub lmatrices: Vec<LMatrix>,
    pub rows: Vec<Row>,
    /// Labels on the bottom half-edges of the first row.
    pub bottom: Vec<u8>,
}

impl JaggedModel {
    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len).collect()
    }

    fn validate(&self) -> Result<(), Error> {
        if self.rows.len() > MAX_ROWS {
            return Err(Error::TooLarge(format!("{} rows (max {MAX_ROWS})", self.rows.len())));
        }
        let first = self.rows.first().map_or(0, |r| r.len);
        if self.bottom.len() != first {
            return Err(Error::ShapeMismatch(format!("bottom boundary has {} labels for a row of {first}", self.bottom.len())));
        }
        for (k, row) in self.rows.iter().enumerate() {
            if row.len > MAX_ROW_LEN {
                return Err(Error::TooLarge(format!("row of length {} (max {MAX_ROW_LEN})", row.len)));
            }
            if row.lmatrix >= self.lmatrices.len() {
                return Err(Error::InvalidArgument(format!("row {k} refers to missing L-matrix {}", row.lmatrix)));
            }
            let next = self.rows.get(k + 1).map_or(0, |r| r.len);
            if next > row.len {
                return Err(Error::ShapeMismatch(format!("row {} is longer than row {k}", k + 1)));
            }
            if row.top.len() != row.len - next {
                return Err(Error::ShapeMismatch(format!("row {k} needs {} top labels, got {}", row.len - next, row.top.len())));
            }
            if row.pinned_below.iter().any(|&(c, _)| c >= row.len) {
                return Err(Error::ShapeMismatch(format!("row {k} pins a column outside the row")));
            }
            let labels = row.top.iter().chain(&self.bottom).chain([&row.left, &row.right]);
            if labels.into_iter().any(|&b| b > 1) || row.pinned_below.iter().any(|&(_, b)| b > 1) {
                return Err(Error::InvalidArgument("labels must be 0 or 1".into()));
            }
        }
        Ok(())
    }

    /// Sum of state weights, computed row by row with the vertical edges as
    /// state. Boundaries admitting no state give zero; the empty grid gives 1.
    pub fn partition_function(&self) -> Result<Polynomial, Error> {
        self.validate()?;
        let mut states: HashMap<u32, Polynomial> = HashMap::new();
        states.insert(bits_of(&self.bottom), Polynomial::one());
        for (k, row) in self.rows.iter().enumerate() {
            let table = self.lmatrices[row.lmatrix].dense(&row.spectral);
            let next = self.rows.get(k + 1).map_or(0, |r| r.len);
            let fixed = bits_of(&row.top);
            let mut out: HashMap<u32, Polynomial> = HashMap::new();
            for (state, w) in states {
                if row.pinned_below.iter().any(|&(c, b)| (state >> c) & 1 != b as u32) {
                    continue;
                }
                for (top, rw) in row_transfer(&table, row, state) {
                    if top >> next != fixed {
                        continue;
                    }
                    let key = top & ((1u32 << next) - 1);
                    *out.entry(key).or_default() += &w * &rw;
                }
            }
            out.retain(|_, p| !p.is_zero());
            states = out;
        }
        Ok(states.remove(&0).unwrap_or_default())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "row_lengths": self.row_lengths(),
            "bottom": self.bottom,
            "lmatrices": self.lmatrices.iter().map(|l| l.to_json()).collect::<Vec<_>>(),
            "rows": self.rows.iter().map(|r| json!({
                "len": r.len,
                "lmatrix": self.lmatrices[r.lmatrix].name,
                "spectral": r.spectral.to_string(),
                "left": r.left,
                "right": r.right,
                "top": r.top,
                "pinned_below": r.pinned_below,
            })).collect::<Vec<_>>(),
        })
    }
}

fn bits_of(v: &[u8]) -> u32 {
    v.iter().enumerate().fold(0, |acc, (i, &b)| acc | ((b as u32) << i))
}

type Dense = [[[[Option<Polynomial>; 2]; 2]; 2]; 2];

/// All `(top bits, weight)` reachable from the bottom bits of one row.
fn row_transfer(table: &Dense, row: &Row, bottom: u32) -> Vec<(u32, Polynomial)> {
    // (top bits so far, horizontal label) -> weight
    let mut cur: HashMap<(u32, u8), Polynomial> = HashMap::new();
    cur.insert((0, row.left), Polynomial::one());
    for c in 0..row.len {
        let b = ((bottom >> c) & 1) as usize;
        let mut nxt: HashMap<(u32, u8), Polynomial> = HashMap::new();
        for ((top, h), w) in cur {
            for (t, outs) in table[h as usize][b].iter().enumerate() {
                for (r, vw) in outs.iter().enumerate() {
                    if let Some(vw) = vw {
                        *nxt.entry((top | ((t as u32) << c), r as u8)).or_default() += &w * vw;
                    }
                }
            }
        }
        cur = nxt;
    }
    cur.into_iter().filter(|((_, h), w)| *h == row.right && !w.is_zero()).map(|((top, _), w)| (top, w)).collect()
}

/// Operator-style row: `len` sites with auxiliary labels `left → right`.
pub(crate) fn row_matrix_entries(l: &LMatrix, z: &Polynomial, len: usize, left: u8, right: u8, bottom: u32) -> Vec<(u32, Polynomial)> {
    let table = l.dense(z);
    let row = Row { len, lmatrix: 0, spectral: z.clone(), left, right, top: Vec::new(), pinned_below: Vec::new() };
    row_transfer(&table, &row, bottom)
}
