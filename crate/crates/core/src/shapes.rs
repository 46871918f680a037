//! Partitions, skew shapes and box combinatorics.
//!
//! Boxed partitions carry an `n_rows x k_cols` box. The 01-sequence walks
//! the boundary from the bottom-left corner of the box to the top-right
//! corner, writing `1` for an up step and `0` for a right step; for
//! `(5,3,3)` in a `4 x 6` box this gives `1000110010`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A partition with trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts known to be weakly decreasing.
    pub fn from_slice(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    /// The rectangle `m^l` with `l` rows of length `m`.
    pub fn rectangle(m: usize, l: usize) -> Partition {
        if m == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![m; l] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (1-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// The parts padded with zeros (or truncated) to length `l`.
    pub fn padded(&self, l: usize) -> Vec<usize> {
        (1..=l).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.first();
        let parts = (1..=m).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// Cellwise containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Multiplicity `m_i` of the part `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Boxes `(row, col)`, 1-based, row 1 at the top.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        SkewShape::straight(self.clone()).cells()
    }

    pub fn fits_box(&self, n_rows: usize, k_cols: usize) -> bool {
        self.len() <= n_rows && self.first() <= k_cols
    }

    /// All partitions contained in `self`, in graded-lex order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        sub_rec(self, 1, usize::MAX, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Vertical strip / horizontal strip test: `self / mu` has at most one box per column.
    pub fn is_horizontal_strip_over(&self, mu: &Partition) -> bool {
        mu.contained_in(self) && (1..=self.len()).all(|i| self.part(i + 1) <= mu.part(i))
    }
}

fn sub_rec(outer: &Partition, row: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if row > outer.len() {
        out.push(Partition::from_slice(cur));
        return;
    }
    let hi = outer.part(row).min(cap);
    for v in 0..=hi {
        cur.push(v);
        sub_rec(outer, row + 1, v, cur, out);
        cur.pop();
    }
}

/// Graded lexicographic: by size, then lexicographically by parts.
impl Ord for Partition {
    fn cmp(&self, other: &Partition) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Partition) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Partition, Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| Error::Parse(format!("bad partition {s:?}")))?;
        Partition::new(parts)
    }
}

/// Shorthand for building a partition from a literal slice.
pub fn part(p: &[usize]) -> Partition {
    Partition::from_slice(p)
}

/// A partition inside an `n_rows x k_cols` box.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoxedPartition {
    pub partition: Partition,
    pub n_rows: usize,
    pub k_cols: usize,
}

impl BoxedPartition {
    pub fn new(partition: Partition, n_rows: usize, k_cols: usize) -> Result<BoxedPartition, Error> {
        if !partition.fits_box(n_rows, k_cols) {
            return Err(Error::ShapeMismatch(format!("{partition} does not fit a {n_rows}x{k_cols} box")));
        }
        Ok(BoxedPartition { partition, n_rows, k_cols })
    }

    /// The 01-sequence, read from the bottom-left corner.
    pub fn to_01(&self) -> Vec<u8> {
        let mut bits = Vec::with_capacity(self.n_rows + self.k_cols);
        let mut col = 0;
        for r in (1..=self.n_rows).rev() {
            let len = self.partition.part(r);
            bits.extend(std::iter::repeat_n(0, len - col));
            col = len;
            bits.push(1);
        }
        bits.extend(std::iter::repeat_n(0, self.k_cols - col));
        bits
    }

    pub fn from_01(bits: &[u8]) -> Result<BoxedPartition, Error> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidArgument("01-sequence must contain only 0 and 1".into()));
        }
        let n_rows = bits.iter().filter(|&&b| b == 1).count();
        let k_cols = bits.len() - n_rows;
        let mut rows_bottom_up = Vec::with_capacity(n_rows);
        let mut col = 0;
        for &b in bits {
            if b == 0 {
                col += 1;
            } else {
                rows_bottom_up.push(col);
            }
        }
        rows_bottom_up.reverse();
        BoxedPartition::new(Partition::new(rows_bottom_up)?, n_rows, k_cols)
    }

    /// `λ†`: the complement in the box, rotated by π (reverse the 01-sequence).
    pub fn complement(&self) -> BoxedPartition {
        let mut bits = self.to_01();
        bits.reverse();
        BoxedPartition::from_01(&bits).unwrap()
    }

    /// `λ∨`: swap 0 and 1 in the 01-sequence; lives in the transposed box.
    pub fn dual(&self) -> BoxedPartition {
        let bits: Vec<u8> = self.to_01().iter().map(|b| 1 - b).collect();
        BoxedPartition::from_01(&bits).unwrap()
    }

    /// `λ' = λ†∨`.
    pub fn conjugate(&self) -> BoxedPartition {
        self.complement().dual()
    }

    /// The Grassmannian permutation of `n_rows + k_cols` with its only descent at `n_rows`.
    ///
    /// One-line notation, values 1-based: `w(j) = λ_{n_rows - j + 1} + j` for `j ≤ n_rows`.
    pub fn grassmannian(&self) -> Vec<usize> {
        let n = self.n_rows;
        let mut w: Vec<usize> = (1..=n).map(|j| self.partition.part(n - j + 1) + j).collect();
        let rest: Vec<usize> = (1..=n + self.k_cols).filter(|v| !w.contains(v)).collect();
        w.extend(rest);
        w
    }
}

/// Inverse of [`BoxedPartition::grassmannian`]: `λ_i = w(k-i+1) - (k-i+1)` with `k` the descent.
pub fn partition_of_grassmannian(w: &[usize], k: usize) -> Result<BoxedPartition, Error> {
    if k > w.len() {
        return Err(Error::InvalidArgument("descent position out of range".into()));
    }
    let parts: Vec<usize> = (1..=k)
        .map(|i| w[k - i].checked_sub(k - i + 1).ok_or_else(|| Error::InvalidArgument("not Grassmannian".into())))
        .collect::<Result<_, _>>()?;
    BoxedPartition::new(Partition::new(parts)?, k, w.len() - k)
}

/// All partitions in an `n_rows x k_cols` box, graded-lex ordered.
pub fn partitions_in_box(n_rows: usize, k_cols: usize) -> Vec<Partition> {
    if k_cols == 0 || n_rows == 0 {
        return vec![Partition::empty()];
    }
    Partition::rectangle(k_cols, n_rows).subpartitions()
}

/// All partitions of a given size (at most `max_len` parts).
pub fn partitions_of(size: usize, max_len: usize) -> Vec<Partition> {
    partitions_in_box(max_len, size).into_iter().filter(|p| p.size() == size).collect()
}

/// `ρ_l = (l-1, ..., 1, 0)`.
pub fn rho(l: usize) -> Vec<i64> {
    (0..l).map(|i| (l - 1 - i) as i64).collect()
}

/// `λ ± ρ_l` as a raw integer sequence of length `l`.
pub fn staircase_shift(lambda: &Partition, l: usize, plus: bool) -> Vec<i64> {
    let r = rho(l);
    lambda.padded(l).iter().zip(r).map(|(&a, b)| if plus { a as i64 + b } else { a as i64 - b }).collect()
}

/// The skew shape `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape, Error> {
        if !inner.contained_in(&outer) {
            return Err(Error::ShapeMismatch(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> SkewShape {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns `lo..=hi` occupied in row `i` (empty when `lo > hi`).
    pub fn row_range(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i) + 1, self.outer.part(i))
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r >= 1 && c > self.inner.part(r) && c <= self.outer.part(r)
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells in row-reading order (top row first, left to right).
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in 1..=self.rows() {
            let (lo, hi) = self.row_range(r);
            for c in lo..=hi {
                out.push((r, c));
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<SkewShape, Error> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<u8> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn worked_example_533() {
        let b = BoxedPartition::new(part(&[5, 3, 3]), 4, 6).unwrap();
        assert_eq!(b.to_01(), bits("1000110010"));
        assert_eq!(b.dual().to_01(), bits("0111001101"));
        assert_eq!(b.dual().partition, part(&[4, 3, 3, 1, 1, 1]));
        assert_eq!(b.complement().to_01(), bits("0100110001"));
        assert_eq!(b.complement().partition, part(&[6, 3, 3, 1]));
        assert_eq!(b.conjugate().to_01(), bits("1011001110"));
        assert_eq!(b.conjugate().partition, part(&[3, 3, 3, 1, 1]));
        assert_eq!(b.partition.conjugate(), part(&[3, 3, 3, 1, 1]));
    }

    #[test]
    fn wider_example_6433() {
        let b = BoxedPartition::new(part(&[6, 4, 3, 3]), 4, 8).unwrap();
        assert_eq!(b.to_01(), bits("000110100100"));
    }

    #[test]
    fn empty_and_full_box() {
        let e = BoxedPartition::new(Partition::empty(), 2, 2).unwrap();
        assert_eq!(e.to_01(), bits("1100"));
        let f = BoxedPartition::new(part(&[2, 2]), 2, 2).unwrap();
        assert_eq!(f.to_01(), bits("0011"));
        assert_eq!(e.complement(), f);
        let e3 = BoxedPartition::new(Partition::empty(), 3, 4).unwrap();
        assert_eq!(e3.complement().partition, Partition::rectangle(4, 3));
        assert_eq!(part(&[1]).conjugate(), part(&[1]));
    }

    #[test]
    fn box_counts_and_grassmannian() {
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(3, 3).len(), 20);
        let e = BoxedPartition::new(Partition::empty(), 3, 2).unwrap();
        assert_eq!(e.grassmannian(), vec![1, 2, 3, 4, 5]);
        let b = BoxedPartition::new(part(&[2, 1]), 3, 2).unwrap();
        let w = b.grassmannian();
        assert_eq!(w, vec![1, 3, 5, 2, 4]);
        assert_eq!(partition_of_grassmannian(&w, 3).unwrap(), b);
    }

    #[test]
    fn staircases() {
        assert_eq!(rho(3), vec![2, 1, 0]);
        assert_eq!(staircase_shift(&part(&[2, 1]), 2, true), vec![3, 1]);
        assert_eq!(staircase_shift(&part(&[8, 6, 2]), 3, false), vec![6, 5, 2]);
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "5,3,3,0".parse().unwrap();
        assert_eq!(p.to_string(), "5,3,3");
        assert!("".parse::<Partition>().unwrap().is_empty());
        assert!("1,2".parse::<Partition>().is_err());
        let s: SkewShape = "5,3,3/2,1".parse().unwrap();
        assert_eq!(s.size(), 8);
        assert!("2/3".parse::<SkewShape>().is_err());
    }
}
