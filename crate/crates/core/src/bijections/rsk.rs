//! Robinson-Schensted-Knuth insertion on two-line arrays.

use serde_json::{json, Value};

use crate::error::Error;
use crate::lpp::LppMatrix;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::Tableau;

/// A two-line array of bi-letters `(top, bottom)` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiWord {
    pairs: Vec<(u32, u32)>,
}

impl BiWord {
    /// Sorts the bi-letters.
    pub fn new(mut pairs: Vec<(u32, u32)>) -> BiWord {
        pairs.sort_unstable();
        BiWord { pairs }
    }

    /// `M_ij` copies of `(i, j)`, with `i` the matrix row from the bottom.
    pub fn from_matrix(m: &LppMatrix) -> BiWord {
        let mut pairs = Vec::new();
        for i in 1..=m.rows() {
            for j in 1..=m.cols() {
                pairs.extend(std::iter::repeat_n((i as u32, j as u32), m.get(i, j) as usize));
            }
        }
        BiWord { pairs }
    }

    pub fn to_matrix(&self, rows: usize, cols: usize) -> Result<LppMatrix, Error> {
        let mut m = LppMatrix::zeros(rows, cols);
        for &(i, j) in &self.pairs {
            if i == 0 || j == 0 || i as usize > rows || j as usize > cols {
                return Err(Error::ShapeMismatch(format!("bi-letter ({i},{j}) outside {rows}x{cols}")));
            }
            m.add(i as usize, j as usize, 1);
        }
        Ok(m)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn top(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn bottom(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    pub fn to_json(&self) -> Value {
        json!([self.top(), self.bottom()])
    }
}

/// Row insertion of `x` starting at row `start` (0-based); returns the new box.
pub(crate) fn row_insert(rows: &mut Vec<Vec<u32>>, start: usize, mut x: u32) -> (usize, usize) {
    let mut r = start;
    loop {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let row = &mut rows[r];
        match row.iter().position(|&v| v > x) {
            Some(c) => {
                std::mem::swap(&mut row[c], &mut x);
                r += 1;
            }
            None => {
                row.push(x);
                return (r, row.len() - 1);
            }
        }
    }
}

/// Removes the corner at the end of row `r` and bumps back up through row
/// `stop` (0-based, inclusive); returns the letter ejected from row `stop`.
pub(crate) fn reverse_bump(rows: &mut Vec<Vec<u32>>, r: usize, stop: usize) -> u32 {
    let mut x = rows[r].pop().expect("corner row is nonempty");
    while rows.last().is_some_and(|row| row.is_empty()) {
        rows.pop();
    }
    for k in (stop..r).rev() {
        let row = &mut rows[k];
        let c = row.iter().rposition(|&v| v < x).expect("semistandard rows admit a reverse bump");
        std::mem::swap(&mut row[c], &mut x);
    }
    x
}

pub(crate) fn straight(rows: Vec<Vec<u32>>) -> Tableau {
    let shape = Partition::new(rows.iter().map(|r| r.len()).collect()).expect("insertion keeps a partition shape");
    Tableau::new(SkewShape::straight(shape), rows).expect("rows match the shape")
}

/// RSK: row-insert the bottom line, record the top line.
pub fn rsk(m: &LppMatrix) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for &(i, j) in BiWord::from_matrix(m).pairs() {
        let (r, c) = row_insert(&mut p, 0, j);
        if r == q.len() {
            q.push(Vec::new());
        }
        debug_assert_eq!(q[r].len(), c);
        q[r].push(i);
    }
    (straight(p), straight(q))
}

/// Inverse of [`rsk`] into an `rows × cols` matrix.
pub fn rsk_inverse(p: &Tableau, q: &Tableau, rows: usize, cols: usize) -> Result<LppMatrix, Error> {
    if p.shape() != q.shape() || !p.shape().inner.is_empty() {
        return Err(Error::ShapeMismatch(format!("P has shape {}, Q has shape {}", p.shape().outer, q.shape().outer)));
    }
    if !p.is_ssyt() || !q.is_ssyt() {
        return Err(Error::InvalidArgument("RSK pairs are semistandard".into()));
    }
    let mut pr = p.rows().to_vec();
    let mut qr = q.rows().to_vec();
    let mut pairs = Vec::new();
    while !qr.is_empty() {
        // The rightmost copy of the largest recording letter sits at a corner.
        let top = *qr.iter().flatten().max().unwrap();
        let r = (0..qr.len()).filter(|&r| qr[r].last() == Some(&top)).max_by_key(|&r| (qr[r].len(), std::cmp::Reverse(r))).unwrap();
        qr[r].pop();
        while qr.last().is_some_and(|row| row.is_empty()) {
            qr.pop();
        }
        pairs.push((top, reverse_bump(&mut pr, r, 0)));
    }
    BiWord::new(pairs).to_matrix(rows, cols)
}
