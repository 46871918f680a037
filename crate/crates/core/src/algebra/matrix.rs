use std::ops::Mul;

use super::poly::Polynomial;
use crate::error::Error;

/// Largest size accepted by [`PolyMatrix::det`].
pub const MAX_DET: usize = 12;

/// Dense matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        if rows.iter().any(|v| v.len() != c) {
            return Err(Error::ShapeMismatch("ragged matrix rows".into()));
        }
        Ok(PolyMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> PolyMatrix {
        PolyMatrix::from_fn(n, n, |i, j| if i == j { Polynomial::one() } else { Polynomial::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// Determinant by Laplace expansion memoized over column subsets.
    ///
    /// `dp[mask]` is the minor on the first `|mask|` rows and the columns in `mask`.
    pub fn det(&self) -> Result<Polynomial, Error> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n > MAX_DET {
            return Err(Error::TooLarge(format!("determinant of size {n} (max {MAX_DET})")));
        }
        let full = (1usize << n) - 1;
        let mut dp: Vec<Option<Polynomial>> = vec![None; 1 << n];
        dp[0] = Some(Polynomial::one());
        // Process masks in order of popcount so every sub-mask is ready.
        let mut by_count: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for mask in 1..=full {
            by_count[mask.count_ones() as usize].push(mask);
        }
        for (k, masks) in by_count.iter().enumerate().skip(1) {
            let row = k - 1;
            for &mask in masks {
                let mut acc = Polynomial::zero();
                for j in 0..n {
                    if mask & (1 << j) == 0 {
                        continue;
                    }
                    let entry = self.get(row, j);
                    if entry.is_zero() {
                        continue;
                    }
                    let sub = match &dp[mask ^ (1 << j)] {
                        Some(p) if !p.is_zero() => p,
                        _ => continue,
                    };
                    let above = (mask >> (j + 1)).count_ones();
                    let term = entry * sub;
                    if above % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                dp[mask] = Some(acc);
            }
            // Minors with fewer rows are no longer needed.
            if k >= 2 {
                for &m in &by_count[k - 1] {
                    dp[m] = None;
                }
            }
        }
        Ok(dp[full].take().unwrap_or_default())
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        PolyMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Polynomial::zero();
            for k in 0..self.cols {
                acc += &(self.get(i, k) * rhs.get(k, j));
            }
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{hk, x_atoms};

    #[test]
    fn two_by_two_cofactor() {
        let h = |k: i64| Polynomial::var(crate::algebra::Var::y(k as u32));
        let m = PolyMatrix::from_rows(vec![vec![h(2), h(3)], vec![Polynomial::one(), h(1)]]).unwrap();
        assert_eq!(m.det().unwrap(), h(1) * h(2) - h(3));
    }

    #[test]
    fn identity_and_empty() {
        assert!(PolyMatrix::identity(5).det().unwrap().is_one());
        assert!(PolyMatrix::identity(0).det().unwrap().is_one());
        let r = PolyMatrix::from_fn(2, 3, |_, _| Polynomial::one());
        assert!(matches!(r.det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn jacobi_trudi_s21() {
        let xs = x_atoms(2);
        let m = PolyMatrix::from_rows(vec![vec![hk(2, &xs), hk(3, &xs)], vec![hk(0, &xs), hk(1, &xs)]]).unwrap();
        let (x1, x2) = (Polynomial::x(1), Polynomial::x(2));
        let want = x1.pow(2) * &x2 + &x1 * x2.pow(2);
        assert_eq!(m.det().unwrap(), want);
    }
}
