//! Constructors for the bundled models.

use super::model::{JaggedModel, Row};
use super::tables::{fermionic, jagged, nilp};
use crate::algebra::{Polynomial, Var};
use crate::error::Error;
use crate::shapes::{BoxedPartition, Partition};

fn row(len: usize, lmatrix: usize, spectral: Polynomial, left: u8, right: u8, top: Vec<u8>) -> Row {
    Row { len, lmatrix, spectral, left, right, top, pinned_below: Vec::new() }
}

/// Labels over columns `from..to` with a single 1 at column `one`.
fn marker(from: usize, to: usize, one: usize) -> Vec<u8> {
    (from..to).map(|c| u8::from(c == one)).collect()
}

/// The model `𝔑_λ` with rows `x_1..x_n` then `t_1..t_{ℓ-1}`; its partition
/// function is `g_λ(x; t)`.
///
/// The `n` rectangular rows have `λ_1 + ℓ` vertices; jagged row `i` has
/// `λ_{i+1} + ℓ - i`. The `ℓ` paths start at the leftmost bottom columns and
/// path `i` ends at column `λ_i + ℓ - i` (0-based).
pub fn dual_g_model(lambda: &Partition, n: usize) -> Result<JaggedModel, Error> {
    let l = lambda.len();
    if l > 0 && n == 0 {
        return Err(Error::InvalidArgument("the lattice-path model needs at least one x-row".into()));
    }
    let lam = lambda.padded(l);
    let end = |i: usize| lam[i - 1] + l - i;
    let width = lambda.first() + l;
    let mut lens = vec![width; n];
    lens.extend((1..l).map(|i| lam[i] + l - i));
    let mut rows = Vec::with_capacity(lens.len());
    for (k, &len) in lens.iter().enumerate() {
        let next = lens.get(k + 1).copied().unwrap_or(0);
        let spectral = if k < n { Polynomial::x(k as u32 + 1) } else { Polynomial::t((k - n) as u32 + 1) };
        // Above the x-block, row k ends path k - n + 2; the x-block ends path 1.
        let top = if k + 1 < n || l == 0 { Vec::new() } else { marker(next, len, end(k + 2 - n)) };
        rows.push(row(len, 0, spectral, 0, 0, top));
    }
    let bottom = (0..width).map(|c| u8::from(c < l)).collect();
    Ok(JaggedModel { lmatrices: vec![nilp()], rows, bottom })
}

/// The model `𝔊_λ` with rows `x_1..x_n` then `-t_1..-t_{n-1}`; its partition
/// function is `G_λ(x; t)`.
///
/// Path `j` ends at column `c_j = λ_j + n - j`; jagged row `j` has `c_j`
/// vertices, so path `j` stops right below it and path `j + 1` ends on top.
pub fn g_model(lambda: &Partition, n: usize) -> Result<JaggedModel, Error> {
    if lambda.len() > n || n == 0 {
        return Err(Error::InvalidArgument(format!("G-model needs 1 <= ℓ(λ) <= n, got λ={lambda}, n={n}")));
    }
    let lam = lambda.padded(n);
    let c = |j: usize| lam[j - 1] + n - j;
    let width = lam[0] + n;
    let mut lens = vec![width; n];
    lens.extend((1..n).map(c));
    let mut rows = Vec::with_capacity(lens.len());
    for (k, &len) in lens.iter().enumerate() {
        let next = lens.get(k + 1).copied().unwrap_or(0);
        let (lm, spectral) = if k < n { (0, Polynomial::x(k as u32 + 1)) } else { (1, -Polynomial::t((k - n) as u32 + 1)) };
        let top = if k + 1 < n { Vec::new() } else { marker(next, len, c(k + 2 - n)) };
        rows.push(row(len, lm, spectral, 0, 0, top));
    }
    let bottom = (0..width).map(|col| u8::from(col < n)).collect();
    Ok(JaggedModel { lmatrices: vec![nilp(), jagged()], rows, bottom })
}

/// The fermionic model `𝔐_λ` on an `n × m` grid with formal `β`: left
/// boundary 1, bottom and right 0, top the 01-sequence of `λ` in the
/// `n × (m - n)` box. Its partition function is `G_λ(x; β)`, i.e. `G_λ` at
/// `t_i = -β`.
pub fn beta_model(lambda: &Partition, n: usize, m: usize) -> Result<JaggedModel, Error> {
    if m < n {
        return Err(Error::InvalidArgument(format!("need m >= n, got m={m}, n={n}")));
    }
    let boxed = BoxedPartition::new(lambda.clone(), n, m - n)?;
    let top = boxed.to_01();
    let beta = Polynomial::var(Var::beta());
    let mut rows: Vec<Row> = (0..n).map(|k| row(m, 0, Polynomial::x(k as u32 + 1), 1, 0, Vec::new())).collect();
    if let Some(last) = rows.last_mut() {
        last.top = top;
    }
    Ok(JaggedModel { lmatrices: vec![fermionic(&beta)], rows, bottom: vec![0; m] })
}

/// `⟨0^{m+n}| C(t_ℓ)..C(t_1) A(x_n)..A(x_{ℓ+1}) B(x_ℓ)..B(x_1) |0^{m+n}⟩` in
/// the fermionic model. `beta` is used on the `x`-rows; the `t`-rows use
/// `β = 0`. With `shape = Some(λ)` only states whose `t`-row `i` receives its
/// exiting path at column `λ_i + n` (1-based) are kept.
pub fn alt_fermionic(n: usize, m: usize, l: usize, beta: &Polynomial, shape: Option<&Partition>) -> Result<JaggedModel, Error> {
    if l > n {
        return Err(Error::InvalidArgument(format!("need ℓ <= n, got ℓ={l}, n={n}")));
    }
    let width = m + n;
    let mut rows = Vec::with_capacity(n + l);
    for k in 0..n {
        let left = u8::from(k < l);
        rows.push(row(width, 0, Polynomial::x(k as u32 + 1), left, 0, Vec::new()));
    }
    let pins = match shape {
        Some(lam) => {
            if lam.len() > l || lam.first() > m {
                return Err(Error::InvalidArgument(format!("λ={lam} does not fit the {l}×{m} box")));
            }
            Some(lam.padded(l))
        }
        None => None,
    };
    for i in 0..l {
        let mut r = row(width, 1, Polynomial::t(i as u32 + 1), 0, 1, Vec::new());
        if let Some(p) = &pins {
            let col = p[i] + n - 1;
            r.pinned_below.push((col, 1));
            r.pinned_below.extend((col + 1..width).map(|c| (c, 0)));
        }
        rows.push(r);
    }
    if let Some(last) = rows.last_mut() {
        last.top = vec![0; width];
    }
    Ok(JaggedModel { lmatrices: vec![fermionic(beta), fermionic(&Polynomial::zero())], rows, bottom: vec![0; width] })
}
