//! Jeu de taquin: rectification of skew tableaux and the deflation /
//! inflation bijection between reverse plane partitions and pairs
//! (semistandard tableau, elegant tableau).
//!
//! Deflation empties every box whose entry equals the entry below it and
//! slides the holes out, bottom row first and right to left within a row.
//! A hole leaving from row `i` of the RPP is recorded as the label `i` of the
//! elegant tableau at the box where it exits.

use crate::error::Error;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::Tableau;

type Grid = Vec<Vec<Option<u32>>>;

fn shape_of(grid: &Grid) -> Partition {
    Partition::new(grid.iter().map(|r| r.len()).collect()).expect("slides keep a partition shape")
}

fn trim(grid: &mut Grid) {
    while grid.last().is_some_and(|r| r.is_empty()) {
        grid.pop();
    }
}

/// Forward slide of the hole at `(r, c)` (0-based) until it leaves the shape;
/// returns the vacated box.
fn slide_out(grid: &mut Grid, mut r: usize, mut c: usize) -> (usize, usize) {
    loop {
        let right = grid[r].get(c + 1).map(|v| v.expect("no pending hole right of a sliding hole"));
        let below = grid.get(r + 1).and_then(|row| row.get(c)).map(|v| v.expect("no pending hole below a sliding hole"));
        match (right, below) {
            (None, None) => {
                grid[r].pop();
                trim(grid);
                return (r, c);
            }
            (Some(a), Some(b)) if a < b => {
                grid[r][c] = Some(a);
                grid[r][c + 1] = None;
                c += 1;
            }
            (Some(a), None) => {
                grid[r][c] = Some(a);
                grid[r][c + 1] = None;
                c += 1;
            }
            (_, Some(b)) => {
                grid[r][c] = Some(b);
                grid[r + 1][c] = None;
                r += 1;
            }
        }
    }
}

/// Order in which inner corners are chosen during rectification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CornerOrder {
    /// Scan columns right to left, taking the lowest inner box of the column.
    ColumnFirst,
    /// Scan rows bottom to top, taking the rightmost inner box of the row.
    RowFirst,
}

/// Rectifies a skew semistandard tableau by forward slides.
pub fn rectify(t: &Tableau, order: CornerOrder) -> Result<Tableau, Error> {
    if !t.is_ssyt() {
        return Err(Error::InvalidArgument(format!("{t} is not semistandard")));
    }
    let shape = t.shape();
    let mut grid: Grid = (1..=shape.rows()).map(|r| (1..=shape.outer.part(r)).map(|c| t.get(r, c)).collect()).collect();
    let mut inner: Vec<usize> = (1..=shape.rows()).map(|r| shape.inner.part(r)).collect();
    loop {
        let corners: Vec<usize> = (0..inner.len()).filter(|&r| inner[r] > 0 && inner.get(r + 1).copied().unwrap_or(0) < inner[r]).collect();
        let Some(&r) = (match order {
            CornerOrder::ColumnFirst => corners.iter().min_by_key(|&&r| (std::cmp::Reverse(inner[r]), std::cmp::Reverse(r))),
            CornerOrder::RowFirst => corners.iter().max(),
        }) else {
            break;
        };
        let c = inner[r] - 1;
        inner[r] -= 1;
        slide_out(&mut grid, r, c);
    }
    let rows = grid.into_iter().map(|r| r.into_iter().map(|v| v.unwrap()).collect()).collect();
    Ok(super::rsk::straight(rows))
}

/// The two halves produced by deflation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deflation {
    /// Semistandard tableau of shape `μ`.
    pub insertion: Tableau,
    /// Elegant tableau of shape `λ/μ`.
    pub elegant: Tableau,
    /// Boxes vacated by the holes, in processing order (1-based).
    pub exits: Vec<(usize, usize)>,
}

/// Deflation of a straight-shape RPP.
pub fn deflate_traced(t: &Tableau) -> Result<Deflation, Error> {
    if !t.shape().inner.is_empty() || !t.is_rpp() {
        return Err(Error::InvalidArgument(format!("{t} is not a straight-shape reverse plane partition")));
    }
    let lambda = t.shape().outer.clone();
    let mut grid: Grid = t.rows().iter().map(|r| r.iter().map(|&v| Some(v)).collect()).collect();
    let mut holes = Vec::new();
    for (r, c) in t.shape().cells() {
        let v = t.get(r, c);
        if t.get(r + 1, c) == v {
            grid[r - 1][c - 1] = None;
            holes.push((r - 1, c - 1));
        }
    }
    holes.sort_unstable_by(|a, b| b.cmp(a));
    let mut labels = Vec::new();
    for &(r, c) in &holes {
        let exit = slide_out(&mut grid, r, c);
        labels.push((exit, r as u32 + 1));
    }
    let mu = shape_of(&grid);
    let p = super::rsk::straight(grid.into_iter().map(|r| r.into_iter().map(|v| v.unwrap()).collect()).collect());
    let mut erows: Vec<Vec<u32>> = (1..=lambda.len()).map(|r| vec![0; lambda.part(r) - mu.part(r)]).collect();
    for &((r, c), label) in &labels {
        erows[r][c - mu.part(r + 1)] = label;
    }
    let elegant = Tableau::new(SkewShape::new(lambda, mu)?, erows)?;
    Ok(Deflation { insertion: p, elegant, exits: labels.iter().map(|&((r, c), _)| (r + 1, c + 1)).collect() })
}

/// `T ↦ (P, E)` with `P` semistandard of shape `μ` and `E` elegant of shape `λ/μ`.
pub fn deflate(t: &Tableau) -> Result<(Tableau, Tableau), Error> {
    let d = deflate_traced(t)?;
    Ok((d.insertion, d.elegant))
}

/// Inverse of [`deflate`], computed as `Φ⁻¹ ∘ RSK⁻¹` applied to `(P, ψ⁻¹(E))`.
///
/// Reverse slides cannot tell where in its starting row a hole began, while
/// the matrix route is deterministic; the exhaustive tests check it against the
/// slides of [`deflate`].
pub fn inflate(p: &Tableau, e: &Tableau) -> Result<Tableau, Error> {
    let mu = &e.shape().inner;
    if !p.shape().inner.is_empty() || p.shape().outer != *mu {
        return Err(Error::ShapeMismatch(format!("insertion shape {} differs from the inner shape {mu}", p.shape().outer)));
    }
    if !p.is_ssyt() || !e.is_elegant() {
        return Err(Error::InvalidArgument("inflation takes a semistandard and an elegant tableau".into()));
    }
    let lambda = &e.shape().outer;
    if lambda.is_empty() {
        return Ok(Tableau::empty());
    }
    let l = lambda.len();
    let q = super::psi::psi_inverse(e, l)?;
    let m = super::rsk::rsk_inverse(p, &q, l, p.max_entry().max(1) as usize)?;
    super::phi::phi_inverse(&m)
}
