use crate::error::Error;
use crate::lpp::{last_passage, LppMatrix};
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::Tableau;

/// `Φ(T)` for a straight-shape RPP with entries at most `n`, as an `ℓ × n`
/// matrix with `ℓ ≥ ℓ(T)`: printed row `r` (row `ℓ + 1 - r` from the bottom)
/// counts, in column `j`, the entries `j` of row `r` of `T` that differ from
/// the box directly below.
pub fn phi(t: &Tableau, l: usize, n: usize) -> Result<LppMatrix, Error> {
    if !t.shape().inner.is_empty() || !t.is_rpp() {
        return Err(Error::InvalidArgument(format!("{t} is not a straight-shape reverse plane partition")));
    }
    let rows = t.shape().rows();
    if rows > l || t.max_entry() as usize > n {
        return Err(Error::ShapeMismatch(format!("{t} does not fit a {l}x{n} matrix")));
    }
    let mut m = LppMatrix::zeros(l, n);
    for (r, c) in t.shape().cells() {
        let v = t.get(r, c).unwrap();
        if t.get(r + 1, c) != Some(v) {
            m.add(l + 1 - r, v as usize, 1);
        }
    }
    Ok(m)
}

/// Inverse of [`phi`]: the unique RPP of shape `G(M)` with `Φ(T) = M`.
///
/// Builds `T` value by value: the cells holding entries `≤ v` form a
/// partition `ν^{(v)}`, and column `v` of `M` fixes where the columns of the
/// strip `ν^{(v)}/ν^{(v-1)}` end. Every consistent chain is followed, so a
/// second solution would be reported as an error.
pub fn phi_inverse(m: &LppMatrix) -> Result<Tableau, Error> {
    let lambda = last_passage(m, None)?;
    let mut found = Vec::new();
    let mut chain = vec![Partition::empty()];
    layer_rec(m, &lambda, &mut chain, &mut found);
    match found.len() {
        0 => Err(Error::InvalidArgument(format!("{m} is not the image of a reverse plane partition of shape {lambda}"))),
        1 => Ok(found.pop().unwrap()),
        k => Err(Error::InvalidArgument(format!("{m} has {k} preimages"))),
    }
}

/// Bottom of every column of `nu / prev` that gains cells, grouped by row.
fn strip_bottoms(nu: &Partition, prev: &Partition, rows: usize) -> Vec<u64> {
    let (a, b) = (nu.conjugate(), prev.conjugate());
    let mut out = vec![0; rows];
    for c in 1..=nu.first() {
        if a.part(c) > b.part(c) {
            out[a.part(c) - 1] += 1;
        }
    }
    out
}

fn layer_rec(m: &LppMatrix, lambda: &Partition, chain: &mut Vec<Partition>, found: &mut Vec<Tableau>) {
    let (l, n) = (m.rows(), m.cols());
    let v = chain.len();
    let prev = chain.last().unwrap().clone();
    if v > n {
        if prev == *lambda {
            found.push(chain_to_tableau(chain));
        }
        return;
    }
    let want: Vec<u64> = (1..=l).map(|r| m.get(l + 1 - r, v)).collect();
    for nu in lambda.subpartitions() {
        if !prev.contained_in(&nu) || nu.len() > l {
            continue;
        }
        if strip_bottoms(&nu, &prev, l) == want {
            chain.push(nu);
            layer_rec(m, lambda, chain, found);
            chain.pop();
        }
    }
}

fn chain_to_tableau(chain: &[Partition]) -> Tableau {
    let lambda = chain.last().unwrap().clone();
    let mut rows: Vec<Vec<u32>> = (1..=lambda.len()).map(|r| vec![0; lambda.part(r)]).collect();
    for v in 1..chain.len() {
        for r in 1..=chain[v].len() {
            rows[r - 1][chain[v - 1].part(r)..chain[v].part(r)].fill(v as u32);
        }
    }
    Tableau::new(SkewShape::straight(lambda), rows).expect("chain fills its outer shape")
}
