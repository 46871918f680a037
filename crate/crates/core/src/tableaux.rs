//! Tableau families, their enumerators and weights, Gelfand-Tsetlin patterns
//! and the lattice-path picture of (flagged, skew) semistandard tableaux.
//!
//! Enumeration is backtracking in row-reading order (top row first, left to
//! right) with values tried in increasing order, so every list comes out in
//! row-reading lexicographic order.

use serde_json::{json, Value};

use crate::algebra::{Monomial, Polynomial, Rational, Var};
use crate::error::Error;
use crate::shapes::{Partition, SkewShape};

/// A filling of a skew shape; `rows[i-1]` holds the entries of row `i` left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Tableau, Error> {
        let mut rows = rows;
        while rows.len() < shape.rows() {
            rows.push(Vec::new());
        }
        if rows.len() != shape.rows() {
            return Err(Error::ShapeMismatch("too many rows".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            let (lo, hi) = shape.row_range(i + 1);
            if row.len() + lo != hi + 1 {
                return Err(Error::ShapeMismatch(format!("row {} has {} entries", i + 1, row.len())));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// A straight-shape tableau from its rows.
    pub fn from_rows(rows: &[&[u32]]) -> Result<Tableau, Error> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        Tableau::new(SkewShape::straight(shape), rows.iter().map(|r| r.to_vec()).collect())
    }

    pub fn empty() -> Tableau {
        Tableau { shape: SkewShape::straight(Partition::empty()), rows: Vec::new() }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at `(r, c)`, 1-based; `None` outside the skew shape.
    pub fn get(&self, r: usize, c: usize) -> Option<u32> {
        if !self.shape.contains(r, c) {
            return None;
        }
        Some(self.rows[r - 1][c - self.shape.inner.part(r) - 1])
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    fn check(&self, row_strict: bool, col_strict: bool) -> bool {
        for (r, c) in self.shape.cells() {
            let v = self.get(r, c).unwrap();
            if v == 0 {
                return false;
            }
            if let Some(l) = self.get(r, c.wrapping_sub(1)) {
                if l > v || (row_strict && l == v) {
                    return false;
                }
            }
            if r > 1 {
                if let Some(a) = self.get(r - 1, c) {
                    if a > v || (col_strict && a == v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_ssyt(&self) -> bool {
        self.check(false, true)
    }

    pub fn is_rpp(&self) -> bool {
        self.check(false, false)
    }

    /// Entries in row `i` are all at most `i - 1`.
    pub fn is_elegant(&self) -> bool {
        self.is_ssyt() && self.rows.iter().enumerate().all(|(i, r)| r.iter().all(|&v| (v as usize) < i + 1))
    }

    pub fn is_increasing_elegant(&self) -> bool {
        self.check(true, true) && self.is_elegant()
    }

    /// `x^T`: one `x_i` per entry `i`.
    pub fn x_weight(&self) -> Monomial {
        Monomial::from_pairs(self.rows.iter().flatten().map(|&v| (Var::x(v), 1)))
    }

    /// `t^T`: one `t_i` per entry `i` (elegant tableaux).
    pub fn t_weight(&self) -> Monomial {
        Monomial::from_pairs(self.rows.iter().flatten().map(|&v| (Var::t(v), 1)))
    }

    /// `∏ t_{i - T_ij}` over all cells (increasing elegant tableaux).
    pub fn shifted_t_weight(&self) -> Monomial {
        let pairs = self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |&v| (Var::t(i as u32 + 1 - v), 1)));
        Monomial::from_pairs(pairs)
    }

    /// `a(T)`: `a_i` counts the columns containing an `i`.
    pub fn column_counts(&self) -> Vec<(u32, i32)> {
        let mut seen = std::collections::BTreeSet::new();
        for (r, c) in self.shape.cells() {
            seen.insert((self.get(r, c).unwrap(), c));
        }
        let mut out: Vec<(u32, i32)> = Vec::new();
        for (v, _) in seen {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    /// `b(T)`: `b_r` counts boxes of row `r` equal to the box directly below.
    pub fn vertical_repeats(&self) -> Vec<i32> {
        (1..=self.shape.rows())
            .map(|r| {
                let (lo, hi) = self.shape.row_range(r);
                (lo..=hi).filter(|&c| self.get(r + 1, c).is_some() && self.get(r + 1, c) == self.get(r, c)).count() as i32
            })
            .collect()
    }

    /// RPP weight `t^{b(T)} x^{a(T)}`.
    pub fn rpp_weight(&self) -> Monomial {
        let xs = self.column_counts().into_iter().map(|(v, k)| (Var::x(v), k));
        let ts = self.vertical_repeats().into_iter().enumerate().map(|(r, k)| (Var::t(r as u32 + 1), k));
        Monomial::from_pairs(xs.chain(ts))
    }

    /// Rows as a JSON array of arrays.
    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }
}

impl std::fmt::Display for Tableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let pad = ".".repeat(self.shape.inner.part(i + 1));
                let body: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                format!("{pad}{}", body.join(" "))
            })
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// Per-row value bounds and strictness for the generic filler.
#[derive(Debug, Clone)]
pub struct FillRules {
    pub row_strict: bool,
    pub col_strict: bool,
    /// Inclusive lower bound for row `i` at index `i - 1`.
    pub lower: Vec<u32>,
    /// Inclusive upper bound for row `i` at index `i - 1`.
    pub upper: Vec<u32>,
}

/// All fillings of `shape` obeying `rules`, in row-reading lexicographic order.
pub fn fillings(shape: &SkewShape, rules: &FillRules) -> Vec<Tableau> {
    let cells = shape.cells();
    let mut grid: Vec<Vec<u32>> = (1..=shape.rows()).map(|r| vec![0; shape.outer.part(r)]).collect();
    let mut out = Vec::new();
    fill_rec(shape, rules, &cells, 0, &mut grid, &mut out);
    out
}

fn fill_rec(shape: &SkewShape, rules: &FillRules, cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
    if k == cells.len() {
        let rows = (1..=shape.rows()).map(|r| grid[r - 1][shape.inner.part(r)..].to_vec()).collect();
        out.push(Tableau { shape: shape.clone(), rows });
        return;
    }
    let (r, c) = cells[k];
    let mut lo = rules.lower[r - 1].max(1);
    if c > shape.inner.part(r) + 1 {
        let l = grid[r - 1][c - 2];
        lo = lo.max(if rules.row_strict { l + 1 } else { l });
    }
    if r > 1 && c > shape.inner.part(r - 1) {
        let a = grid[r - 2][c - 1];
        lo = lo.max(if rules.col_strict { a + 1 } else { a });
    }
    let hi = rules.upper[r - 1];
    for v in lo..=hi {
        grid[r - 1][c - 1] = v;
        fill_rec(shape, rules, cells, k + 1, grid, out);
    }
    grid[r - 1][c - 1] = 0;
}

fn uniform(shape: &SkewShape, lo: u32, hi: u32, row_strict: bool, col_strict: bool) -> FillRules {
    let l = shape.rows();
    FillRules { row_strict, col_strict, lower: vec![lo; l], upper: vec![hi; l] }
}

/// Semistandard tableaux of a skew shape with entries in `1..=n`.
pub fn ssyt(shape: &SkewShape, n: u32) -> Vec<Tableau> {
    fillings(shape, &uniform(shape, 1, n, false, true))
}

/// Row-flagged semistandard tableaux: row `i` entries lie in `lower[i-1]..=upper[i-1]`.
pub fn flagged_ssyt(shape: &SkewShape, lower: &[u32], upper: &[u32]) -> Vec<Tableau> {
    let l = shape.rows();
    let pad = |v: &[u32], d: u32| (0..l).map(|i| v.get(i).copied().unwrap_or(d)).collect();
    fillings(shape, &FillRules { row_strict: false, col_strict: true, lower: pad(lower, 1), upper: pad(upper, 0) })
}

/// Reverse plane partitions of a skew shape with entries in `1..=n`.
pub fn rpp(shape: &SkewShape, n: u32) -> Vec<Tableau> {
    fillings(shape, &uniform(shape, 1, n, false, false))
}

/// Elegant tableaux: SSYT with row `i` entries at most `i - 1`.
pub fn elegant(shape: &SkewShape) -> Vec<Tableau> {
    let l = shape.rows();
    let upper: Vec<u32> = (0..l as u32).collect();
    fillings(shape, &FillRules { row_strict: false, col_strict: true, lower: vec![1; l], upper })
}

/// Increasing elegant tableaux: elegant with strictly increasing rows.
pub fn increasing_elegant(shape: &SkewShape) -> Vec<Tableau> {
    let l = shape.rows();
    let upper: Vec<u32> = (0..l as u32).collect();
    fillings(shape, &FillRules { row_strict: true, col_strict: true, lower: vec![1; l], upper })
}

/// A set-valued tableau of straight shape; cell sets are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetTableau {
    shape: Partition,
    rows: Vec<Vec<Vec<u32>>>,
}

impl SetTableau {
    pub fn new(rows: Vec<Vec<Vec<u32>>>) -> Result<SetTableau, Error> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        let mut rows = rows;
        for cell in rows.iter_mut().flatten() {
            cell.sort_unstable();
            cell.dedup();
            if cell.is_empty() || cell[0] == 0 {
                return Err(Error::InvalidArgument("set-valued cells must be nonempty sets of positive integers".into()));
            }
        }
        let t = SetTableau { shape, rows };
        if !t.is_valid() {
            return Err(Error::InvalidArgument("set-valued tableau inequalities violated".into()));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Vec<u32>>] {
        &self.rows
    }

    pub fn cell(&self, r: usize, c: usize) -> Option<&[u32]> {
        self.rows.get(r.wrapping_sub(1))?.get(c.wrapping_sub(1)).map(|v| v.as_slice())
    }

    pub fn is_valid(&self) -> bool {
        for (r, c) in self.shape.cells() {
            let s = self.cell(r, c).unwrap();
            if c > 1 && *self.cell(r, c - 1).unwrap().last().unwrap() > s[0] {
                return false;
            }
            if r > 1 && *self.cell(r - 1, c).unwrap().last().unwrap() >= s[0] {
                return false;
            }
        }
        true
    }

    /// Extra entries per row: `e_r = Σ (|cell| - 1)` over row `r`.
    pub fn extra_entries(&self) -> Vec<i32> {
        self.rows.iter().map(|r| r.iter().map(|c| c.len() as i32 - 1).sum()).collect()
    }

    /// `(-1)^{|e(T)|} t^{e(T)} x^T` as a one-term polynomial.
    pub fn weight(&self) -> Polynomial {
        let e = self.extra_entries();
        let total: i32 = e.iter().sum();
        let xs = self.rows.iter().flatten().flatten().map(|&v| (Var::x(v), 1));
        let ts = e.iter().enumerate().map(|(r, &k)| (Var::t(r as u32 + 1), k));
        let sign = if total % 2 == 0 { 1 } else { -1 };
        Polynomial::term(Monomial::from_pairs(xs.chain(ts)), Rational::from_integer(sign.into()))
    }

    /// True when every cell is a singleton.
    pub fn is_singleton(&self) -> bool {
        self.rows.iter().flatten().all(|c| c.len() == 1)
    }

    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }
}

/// Set-valued tableaux of shape `λ` with entries in `1..=n`.
pub fn set_valued(lambda: &Partition, n: u32) -> Vec<SetTableau> {
    let cells = lambda.cells();
    let mut rows: Vec<Vec<Vec<u32>>> = lambda.parts().iter().map(|&p| vec![Vec::new(); p]).collect();
    let mut out = Vec::new();
    svt_rec(lambda, n, &cells, 0, &mut rows, &mut out);
    out
}

fn svt_rec(shape: &Partition, n: u32, cells: &[(usize, usize)], k: usize, rows: &mut Vec<Vec<Vec<u32>>>, out: &mut Vec<SetTableau>) {
    if k == cells.len() {
        out.push(SetTableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    let (r, c) = cells[k];
    let mut lo = 1;
    if c > 1 {
        lo = lo.max(*rows[r - 1][c - 2].last().unwrap());
    }
    if r > 1 {
        lo = lo.max(rows[r - 2][c - 1].last().unwrap() + 1);
    }
    if lo > n {
        return;
    }
    let span = n - lo + 1;
    // Nonempty subsets of lo..=n, ordered by minimum then by bitmask.
    let mut masks: Vec<u32> = (1u32..(1 << span)).collect();
    masks.sort_by_key(|&m| (m.trailing_zeros(), m));
    for m in masks {
        let set: Vec<u32> = (0..span).filter(|b| m & (1 << b) != 0).map(|b| lo + b).collect();
        rows[r - 1][c - 1] = set;
        svt_rec(shape, n, cells, k + 1, rows, out);
    }
    rows[r - 1][c - 1] = Vec::new();
}

/// A set-valued filling of a skew shape; `rows[i-1]` lists the cell sets of row `i` left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewSetTableau {
    shape: SkewShape,
    rows: Vec<Vec<Vec<u32>>>,
}

impl SkewSetTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Vec<u32>>] {
        &self.rows
    }

    /// `∏ t_v` over every entry `v` of every cell.
    pub fn t_weight(&self) -> Monomial {
        Monomial::from_pairs(self.rows.iter().flatten().flatten().map(|&v| (Var::t(v), 1)))
    }
}

/// Set-valued elegant tableaux of `λ/μ`: set-valued semistandard with every
/// entry of row `i` at most `i - 1`.
pub fn set_valued_elegant(shape: &SkewShape) -> Vec<SkewSetTableau> {
    let cells = shape.cells();
    let mut grid: Vec<Vec<Vec<u32>>> = (1..=shape.rows()).map(|r| vec![Vec::new(); shape.outer.part(r)]).collect();
    let mut out = Vec::new();
    sve_rec(shape, &cells, 0, &mut grid, &mut out);
    out
}

fn sve_rec(shape: &SkewShape, cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<Vec<u32>>>, out: &mut Vec<SkewSetTableau>) {
    if k == cells.len() {
        let rows = (1..=shape.rows()).map(|r| grid[r - 1][shape.inner.part(r)..].to_vec()).collect();
        out.push(SkewSetTableau { shape: shape.clone(), rows });
        return;
    }
    let (r, c) = cells[k];
    let mut lo = 1;
    if c > shape.inner.part(r) + 1 {
        lo = lo.max(*grid[r - 1][c - 2].last().unwrap());
    }
    if r > 1 && c > shape.inner.part(r - 1) {
        lo = lo.max(grid[r - 2][c - 1].last().unwrap() + 1);
    }
    let hi = r as u32 - 1;
    if lo > hi {
        return;
    }
    let span = hi - lo + 1;
    for m in 1u32..(1 << span) {
        grid[r - 1][c - 1] = (0..span).filter(|b| m & (1 << b) != 0).map(|b| lo + b).collect();
        sve_rec(shape, cells, k + 1, grid, out);
    }
    grid[r - 1][c - 1] = Vec::new();
}

/// A Gelfand-Tsetlin pattern; `rows[i-1]` is row `i` (length `i`), the top row is `rows[n-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GtPattern {
    pub rows: Vec<Vec<usize>>,
}

impl GtPattern {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn top(&self) -> Partition {
        self.rows.last().map(|r| Partition::from_slice(r)).unwrap_or_default()
    }

    pub fn is_valid(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.len() == i + 1)
            && (1..self.rows.len()).all(|i| {
                let (lo, hi) = (&self.rows[i - 1], &self.rows[i]);
                (0..i).all(|j| hi[j] >= lo[j] && lo[j] >= hi[j + 1])
            })
    }

    /// Leftmost entries read from the top row down: `(a_{n,1}, a_{n-1,1}, ..., a_{1,1})`.
    pub fn left_edge(&self) -> Vec<usize> {
        self.rows.iter().rev().map(|r| r[0]).collect()
    }
}

/// The GT pattern of a straight-shape SSYT: row `i` is the shape of the entries `≤ i`.
pub fn ssyt_to_gt(t: &Tableau, n: usize) -> Result<GtPattern, Error> {
    if !t.shape().inner.is_empty() {
        return Err(Error::ShapeMismatch("GT patterns need a straight shape".into()));
    }
    if t.max_entry() as usize > n || t.shape().rows() > n {
        return Err(Error::InvalidArgument("tableau does not fit n".into()));
    }
    let rows = (1..=n)
        .map(|i| (0..i).map(|r| t.rows().get(r).map_or(0, |row| row.iter().filter(|&&v| v as usize <= i).count())).collect())
        .collect();
    Ok(GtPattern { rows })
}

/// Inverse of [`ssyt_to_gt`].
pub fn gt_to_ssyt(g: &GtPattern) -> Result<Tableau, Error> {
    if !g.is_valid() {
        return Err(Error::InvalidArgument("not a GT pattern".into()));
    }
    let top = g.top();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); top.len()];
    for (r, row) in rows.iter_mut().enumerate() {
        let mut prev = 0;
        for i in 1..=g.n() {
            let cur = g.rows[i - 1].get(r).copied().unwrap_or(0);
            row.extend(std::iter::repeat_n(i as u32, cur - prev));
            prev = cur;
        }
    }
    Tableau::new(SkewShape::straight(top), rows)
}

/// All GT patterns with top row `λ` (padded to `n` parts).
pub fn gt_patterns(lambda: &Partition, n: usize) -> Vec<GtPattern> {
    if lambda.len() > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let top = lambda.padded(n);
    let mut acc = vec![top];
    gt_rec(&mut acc, &mut out);
    out
}

fn gt_rec(acc: &mut Vec<Vec<usize>>, out: &mut Vec<GtPattern>) {
    let last = acc.last().unwrap().clone();
    if last.len() == 1 {
        let rows = acc.iter().rev().cloned().collect();
        out.push(GtPattern { rows });
        return;
    }
    let m = last.len() - 1;
    let mut row = vec![0; m];
    gt_row(&last, 0, &mut row, acc, out);
}

fn gt_row(above: &[usize], j: usize, row: &mut Vec<usize>, acc: &mut Vec<Vec<usize>>, out: &mut Vec<GtPattern>) {
    if j == row.len() {
        acc.push(row.clone());
        gt_rec(acc, out);
        acc.pop();
        return;
    }
    for v in above[j + 1]..=above[j] {
        row[j] = v;
        gt_row(above, j + 1, row, acc, out);
    }
}

/// Height of the line holding the starting points of all lattice paths.
pub const ORIGIN_Y: i64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    North,
    East,
}

/// A monotone lattice path; an east step at height `j` has weight `x_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: (i64, i64),
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut p = self.start;
        let mut out = vec![p];
        for s in &self.steps {
            match s {
                Step::North => p.1 += 1,
                Step::East => p.0 += 1,
            }
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> (i64, i64) {
        *self.vertices().last().unwrap()
    }

    /// Heights of the east steps in order.
    pub fn east_heights(&self) -> Vec<i64> {
        let mut y = self.start.1;
        let mut out = Vec::new();
        for s in &self.steps {
            match s {
                Step::North => y += 1,
                Step::East => out.push(y),
            }
        }
        out
    }

    pub fn weight(&self) -> Monomial {
        Monomial::from_pairs(self.east_heights().into_iter().map(|h| (Var::x(h as u32), 1)))
    }
}

/// A tuple of lattice paths, path `i` drawn for tableau row `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Nilp {
    pub paths: Vec<LatticePath>,
}

impl Nilp {
    pub fn is_nonintersecting(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.paths.iter().all(|p| p.vertices().into_iter().all(|v| seen.insert(v)))
    }

    pub fn weight(&self) -> Monomial {
        self.paths.iter().fold(Monomial::one(), |acc, p| acc.mul(&p.weight()))
    }
}

/// Lattice paths of a (skew, flagged) SSYT.
///
/// Path `i` starts at `(ℓ-i+1+μ_i, ORIGIN_Y)` and ends at `(ℓ-i+1+λ_i, f_i)`,
/// taking its `j`-th east step at the height of the `j`-th entry of row `i`.
pub fn ssyt_to_nilp(t: &Tableau, flags: &[i64]) -> Result<Nilp, Error> {
    let shape = t.shape();
    let l = shape.rows();
    if flags.len() < l {
        return Err(Error::InvalidArgument("one flag per row is required".into()));
    }
    let mut paths = Vec::with_capacity(l);
    for i in 1..=l {
        let start = ((l - i + 1 + shape.inner.part(i)) as i64, ORIGIN_Y);
        let mut y = ORIGIN_Y;
        let mut steps = Vec::new();
        for &v in &t.rows()[i - 1] {
            let v = v as i64;
            if v < y || v > flags[i - 1] {
                return Err(Error::InvalidArgument(format!("entry {v} in row {i} is outside the flag")));
            }
            steps.extend(std::iter::repeat_n(Step::North, (v - y) as usize));
            steps.push(Step::East);
            y = v;
        }
        steps.extend(std::iter::repeat_n(Step::North, (flags[i - 1] - y) as usize));
        paths.push(LatticePath { start, steps });
    }
    Ok(Nilp { paths })
}

/// Inverse of [`ssyt_to_nilp`]; the shape is read off the endpoints.
pub fn nilp_to_ssyt(nilp: &Nilp) -> Result<Tableau, Error> {
    if !nilp.is_nonintersecting() {
        return Err(Error::InvalidArgument("paths intersect".into()));
    }
    let l = nilp.paths.len();
    let mut outer = Vec::with_capacity(l);
    let mut inner = Vec::with_capacity(l);
    let mut rows = Vec::with_capacity(l);
    for (k, p) in nilp.paths.iter().enumerate() {
        let i = k + 1;
        let base = (l - i + 1) as i64;
        let mu = p.start.0 - base;
        let heights = p.east_heights();
        if mu < 0 || p.start.1 != ORIGIN_Y {
            return Err(Error::InvalidArgument(format!("path {i} starts off the origin line")));
        }
        inner.push(mu as usize);
        outer.push(mu as usize + heights.len());
        rows.push(heights.into_iter().map(|h| h as u32).collect());
    }
    let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
    let t = Tableau::new(shape, rows)?;
    if !t.is_ssyt() {
        return Err(Error::InvalidArgument("paths do not encode a semistandard tableau".into()));
    }
    Ok(t)
}

/// Splits a tableau over the alphabet `x_1..x_n, t_1, t_2, ...` (values `n+j` for `t_j`) into the
/// entries `≤ n` (an SSYT of some shape `μ`) and the rest shifted down by `n` (an elegant tableau
/// of shape `λ/μ` when the flags are `n + i - 1`).
pub fn split_flagged(t: &Tableau, n: u32) -> Result<(Tableau, Tableau), Error> {
    if !t.shape().inner.is_empty() {
        return Err(Error::ShapeMismatch("straight shape expected".into()));
    }
    let low: Vec<Vec<u32>> = t.rows().iter().map(|r| r.iter().copied().filter(|&v| v <= n).collect()).collect();
    let high: Vec<Vec<u32>> = t.rows().iter().map(|r| r.iter().copied().filter(|&v| v > n).map(|v| v - n).collect()).collect();
    let mu = Partition::new(low.iter().map(|r| r.len()).collect())?;
    let a = Tableau::new(SkewShape::straight(mu.clone()), low)?;
    let b = Tableau::new(SkewShape::new(t.shape().outer.clone(), mu)?, high)?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::part;

    #[test]
    fn rpp_21_weights() {
        let ts = rpp(&SkewShape::straight(part(&[2, 1])), 2);
        assert_eq!(ts.len(), 5);
        let ws: Vec<String> = ts.iter().map(|t| t.rpp_weight().to_string()).collect();
        let mut want = vec!["x1^2*t1", "x1^2*x2", "x1*x2*t1", "x1*x2^2", "x2^2*t1"];
        let mut got = ws.clone();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn small_counts() {
        assert_eq!(ssyt(&SkewShape::straight(part(&[1])), 3).len(), 3);
        let sk = SkewShape::new(part(&[2, 1]), part(&[2])).unwrap();
        let e = elegant(&sk);
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].rows()[1], vec![1]);
        assert_eq!(ssyt(&SkewShape::straight(Partition::empty()), 2).len(), 1);
    }

    #[test]
    fn svt_weight_sign() {
        let t = SetTableau::new(vec![vec![vec![1], vec![1, 2]]]).unwrap();
        assert_eq!(t.weight().to_string(), "-x1^2*x2*t1");
        assert!(SetTableau::new(vec![vec![vec![2], vec![1]]]).is_err());
    }

    #[test]
    fn gt_worked_example() {
        let t = Tableau::from_rows(&[&[1, 1, 2, 4], &[2, 3, 3], &[4]]).unwrap();
        let g = ssyt_to_gt(&t, 4).unwrap();
        assert_eq!(g.rows, vec![vec![2], vec![3, 1], vec![3, 3, 0], vec![4, 3, 1, 0]]);
        assert_eq!(gt_to_ssyt(&g).unwrap(), t);
        let single = Tableau::from_rows(&[&[2]]).unwrap();
        assert_eq!(ssyt_to_gt(&single, 2).unwrap().rows, vec![vec![0], vec![1, 0]]);
        let e = ssyt_to_gt(&Tableau::empty(), 3).unwrap();
        assert!(e.rows.iter().flatten().all(|&v| v == 0));
    }

    #[test]
    fn nilp_worked_example() {
        let t = Tableau::from_rows(&[&[1, 1, 2, 4], &[2, 3, 3], &[4]]).unwrap();
        let p = ssyt_to_nilp(&t, &[4, 4, 4]).unwrap();
        assert!(p.is_nonintersecting());
        let ws: Vec<String> = p.paths.iter().rev().map(|q| q.weight().to_string()).collect();
        assert_eq!(ws, ["x4", "x2*x3^2", "x1^2*x2*x4"]);
        assert_eq!(p.paths[2].start, (1, 1));
        assert_eq!(p.paths[2].end(), (2, 4));
        assert_eq!(p.paths[0].end(), (7, 4));
        assert_eq!(nilp_to_ssyt(&p).unwrap(), t);
    }
}
