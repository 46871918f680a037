//! The bijection `ψ` between semistandard tableaux whose GT pattern has a
//! prescribed left edge `λ` and elegant tableaux of shape `λ/μ`.
//!
//! Reflecting the GT pattern of `Q ∈ SSYT^ℓ(μ)` vertically, the partitions
//! `ν^(k) = (λ_1, ..., λ_k, a_{ℓ-k,1}, ..., a_{ℓ-k,ℓ-k})` grow from `μ` to `λ`,
//! and the boxes of `ν^(k)/ν^(k-1)` are labelled `k`.

use crate::error::Error;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{gt_to_ssyt, ssyt_to_gt, GtPattern, Tableau};

/// Left edge of the GT pattern of `q` with `ℓ` rows, as a partition.
pub fn left_edge(q: &Tableau, l: usize) -> Result<Partition, Error> {
    Partition::new(ssyt_to_gt(q, l)?.left_edge())
}

fn chain(gt: &GtPattern, lambda: &[usize]) -> Vec<Partition> {
    let l = gt.n();
    (0..=l)
        .map(|k| {
            let mut parts = lambda[..k].to_vec();
            if k < l {
                parts.extend_from_slice(&gt.rows[l - k - 1]);
            }
            Partition::new(parts).expect("GT rows interlace")
        })
        .collect()
}

pub fn psi(q: &Tableau, lambda: &Partition, l: usize) -> Result<Tableau, Error> {
    let gt = ssyt_to_gt(q, l)?;
    let edge = Partition::new(gt.left_edge())?;
    if edge != *lambda {
        return Err(Error::InvalidArgument(format!("left edge {edge} differs from {lambda}")));
    }
    let nu = chain(&gt, &lambda.padded(l));
    let mu = q.shape().outer.clone();
    let rows = (1..=lambda.len())
        .map(|r| {
            let (lo, hi) = (mu.part(r) + 1, lambda.part(r));
            (lo..=hi).map(|c| (1..=l).find(|&k| nu[k].part(r) >= c).unwrap() as u32).collect()
        })
        .collect();
    Tableau::new(SkewShape::new(lambda.clone(), mu)?, rows)
}

/// Inverse of [`psi`] with `ℓ` GT rows.
pub fn psi_inverse(e: &Tableau, l: usize) -> Result<Tableau, Error> {
    if !e.is_elegant() {
        return Err(Error::InvalidArgument(format!("{e} is not elegant")));
    }
    let lambda = &e.shape().outer;
    if lambda.len() > l {
        return Err(Error::InvalidArgument(format!("{lambda} has more than {l} rows")));
    }
    let inner = &e.shape().inner;
    // ν^(k): μ together with the boxes labelled at most k.
    let nu = |k: u32| -> Vec<usize> { (1..=l).map(|r| inner.part(r) + e.rows().get(r - 1).map_or(0, |row| row.iter().filter(|&&v| v <= k).count())).collect() };
    let mut rows = vec![Vec::new(); l];
    for k in 0..l {
        rows[l - k - 1] = nu(k as u32)[k..].to_vec();
    }
    let gt = GtPattern { rows };
    if !gt.is_valid() || gt.left_edge() != lambda.padded(l) {
        return Err(Error::InvalidArgument(format!("{e} does not come from a GT pattern with left edge {lambda}")));
    }
    gt_to_ssyt(&gt)
}
