use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{parse_rational, rational_string, Rational};
use crate::error::Error;
use crate::shapes::Partition;

/// The last-passage vector `(G(ℓ,n), ..., G(1,n))`, a partition.
pub type GVector = Partition;

/// A nonnegative integer matrix indexed from the bottom-left corner: entry
/// `(1, 1)` is the bottom-left one, row indices grow upwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LppMatrix {
    rows: usize,
    cols: usize,
    w: Vec<u64>,
}

impl LppMatrix {
    pub fn zeros(rows: usize, cols: usize) -> LppMatrix {
        LppMatrix { rows, cols, w: vec![0; rows * cols] }
    }

    /// From rows listed bottom row first.
    pub fn from_bottom_rows(rows: Vec<Vec<u64>>) -> Result<LppMatrix, Error> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged matrix rows".into()));
        }
        Ok(LppMatrix { rows: rows.len(), cols, w: rows.into_iter().flatten().collect() })
    }

    /// From rows as printed, top row first.
    pub fn from_display(rows: &[&[u64]]) -> Result<LppMatrix, Error> {
        LppMatrix::from_bottom_rows(rows.iter().rev().map(|r| r.to_vec()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(i, j)`, 1-based, `i` counted from the bottom.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j), "index ({i},{j}) outside {}x{}", self.rows, self.cols);
        self.w[(i - 1) * self.cols + j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.w[(i - 1) * self.cols + j - 1] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, v: u64) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    /// Rows bottom row first.
    pub fn bottom_rows(&self) -> Vec<Vec<u64>> {
        self.w.chunks(self.cols.max(1)).take(self.rows).map(|r| r.to_vec()).collect()
    }

    /// Rows as printed, top row first.
    pub fn display_rows(&self) -> Vec<Vec<u64>> {
        let mut r = self.bottom_rows();
        r.reverse();
        r
    }

    pub fn total(&self) -> u64 {
        self.w.iter().sum()
    }

    pub fn max_entry(&self) -> u64 {
        self.w.iter().copied().max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        json!({"origin": "bottom-left", "rows": self.bottom_rows()})
    }

    pub fn from_json(v: &Value) -> Result<LppMatrix, Error> {
        if v.get("origin").and_then(Value::as_str) != Some("bottom-left") {
            return Err(Error::Parse("expected \"origin\": \"bottom-left\"".into()));
        }
        let rows: Vec<Vec<u64>> = serde_json::from_value(v.get("rows").cloned().unwrap_or(Value::Null)).map_err(|e| Error::Parse(e.to_string()))?;
        LppMatrix::from_bottom_rows(rows)
    }

    /// Every matrix of the given size with entries in `0..=max`, in odometer order.
    pub fn all_bounded(rows: usize, cols: usize, max: u64) -> impl Iterator<Item = LppMatrix> {
        let len = rows * cols;
        let mut cur = Some(vec![0u64; len]);
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            let next = cur.as_mut().unwrap();
            let mut k = 0;
            loop {
                if k == len {
                    cur = None;
                    break;
                }
                if next[k] < max {
                    next[k] += 1;
                    break;
                }
                next[k] = 0;
                k += 1;
            }
            Some(LppMatrix { rows, cols, w: out })
        })
    }
}

impl fmt::Display for LppMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.display_rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Table `G(k, i)` for `0 ≤ k ≤ ℓ`, `0 ≤ i ≤ n`. The optional initial
/// condition `μ` enters as the boundary column `G(k, 0) = μ_{ℓ+1-k}`.
pub fn last_passage_table(w: &LppMatrix, mu: Option<&Partition>) -> Result<Vec<Vec<u64>>, Error> {
    let (l, n) = (w.rows(), w.cols());
    if let Some(mu) = mu {
        if mu.len() > l {
            return Err(Error::ShapeMismatch(format!("initial condition {mu} has more than {l} parts")));
        }
    }
    let mut g = vec![vec![0u64; n + 1]; l + 1];
    for k in 1..=l {
        g[k][0] = mu.map_or(0, |m| m.part(l + 1 - k) as u64);
        for i in 1..=n {
            g[k][i] = w.get(k, i) + g[k - 1][i].max(g[k][i - 1]);
        }
    }
    Ok(g)
}

/// `(G(ℓ,n), ..., G(1,n))` for the maximal up/right path sums.
pub fn last_passage(w: &LppMatrix, mu: Option<&Partition>) -> Result<GVector, Error> {
    let g = last_passage_table(w, mu)?;
    let n = w.cols();
    Partition::new((1..=w.rows()).rev().map(|k| g[k][n] as usize).collect())
}

/// Geometric parameters: `w_ij` has law `(1 - q)q^k` with `q = t_a x_j`, where
/// `t_a` weights matrix row `ℓ + 1 - a` from the bottom (row `a` as printed),
/// so that `t_a` pairs with the part `λ_a = G(ℓ+1-a, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeomParams {
    t: Vec<Rational>,
    x: Vec<Rational>,
}

impl GeomParams {
    pub fn new(t: Vec<Rational>, x: Vec<Rational>) -> Result<GeomParams, Error> {
        let zero = Rational::from_integer(0.into());
        let one = Rational::from_integer(1.into());
        for (name, vals) in [("t", &t), ("x", &x)] {
            if let Some(v) = vals.iter().find(|v| **v <= zero || **v >= one) {
                return Err(Error::OutOfRange(format!("{name} value {} not in (0,1)", rational_string(v))));
            }
        }
        if t.is_empty() || x.is_empty() {
            return Err(Error::InvalidArgument("need at least one t and one x".into()));
        }
        Ok(GeomParams { t, x })
    }

    /// From comma-separated `p/q` lists.
    pub fn parse(t: &str, x: &str) -> Result<GeomParams, Error> {
        let list = |s: &str| s.split(',').map(|p| parse_rational(p.trim())).collect::<Result<Vec<_>, _>>();
        GeomParams::new(list(t)?, list(x)?)
    }

    /// Number of matrix rows `ℓ`.
    pub fn l(&self) -> usize {
        self.t.len()
    }

    /// Number of matrix columns `n`.
    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn t(&self) -> &[Rational] {
        &self.t
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    /// `q` for matrix entry `(i, j)`, `i` counted from the bottom.
    pub fn q(&self, i: usize, j: usize) -> Rational {
        &self.t[self.l() - i] * &self.x[j - 1]
    }

    /// `∏_{i,j} (1 - t_i x_j)`.
    pub fn normalizer(&self) -> Rational {
        let one = Rational::from_integer(1.into());
        let mut acc = one.clone();
        for t in &self.t {
            for x in &self.x {
                acc *= &one - t * x;
            }
        }
        acc
    }

    /// Keeps the first `n` columns.
    pub fn truncated(&self, n: usize) -> GeomParams {
        GeomParams { t: self.t.clone(), x: self.x[..n].to_vec() }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "t": self.t.iter().map(rational_string).collect::<Vec<_>>(),
            "x": self.x.iter().map(rational_string).collect::<Vec<_>>(),
        })
    }
}
