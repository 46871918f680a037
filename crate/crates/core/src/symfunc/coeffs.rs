//! Coefficient families `e_λ^μ`, `E_λ^μ` and `p_ν^λ`.
//!
//! All of them are 1 on an empty skew shape and 0 when the shapes are not
//! nested.

use crate::algebra::{hk, PolyMatrix, Polynomial, Var};
use crate::error::Error;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux;

/// `e_λ^μ(t) = Σ t^T` over elegant tableaux of `λ/μ`.
pub fn e_coeff(lambda: &Partition, mu: &Partition) -> Polynomial {
    let Ok(shape) = SkewShape::new(lambda.clone(), mu.clone()) else {
        return Polynomial::zero();
    };
    let mut acc = Polynomial::zero();
    for t in tableaux::elegant(&shape) {
        acc += Polynomial::monomial(t.t_weight());
    }
    acc
}

/// `E_λ^μ(t) = Σ ∏ t_{i - T_ij}` over increasing elegant tableaux of `μ/λ`.
pub fn big_e_coeff(lambda: &Partition, mu: &Partition) -> Polynomial {
    let Ok(shape) = SkewShape::new(mu.clone(), lambda.clone()) else {
        return Polynomial::zero();
    };
    let mut acc = Polynomial::zero();
    for t in tableaux::increasing_elegant(&shape) {
        acc += Polynomial::monomial(t.shifted_t_weight());
    }
    acc
}

/// `E_λ^μ(-t)`, the coefficient of `s_μ` in `G_λ`.
pub fn big_e_coeff_neg(lambda: &Partition, mu: &Partition) -> Polynomial {
    let e = big_e_coeff(lambda, mu);
    let d = mu.size() as i64 - lambda.size() as i64;
    if d % 2 == 0 {
        e
    } else {
        -e
    }
}

/// `p_ν^λ = det[h_{ν_i - λ_j - i + j}(t̃_j, ..., t̃_m)]` with `t̃ = atoms`.
pub fn p_coeff_det(nu: &Partition, lambda: &Partition, atoms: &[Polynomial]) -> Result<Polynomial, Error> {
    if !lambda.contained_in(nu) {
        return Ok(Polynomial::zero());
    }
    let l = nu.len();
    if atoms.len() + 1 < l {
        return Err(Error::InsufficientVariables(format!("p coefficient needs at least {} atoms", l.saturating_sub(1))));
    }
    let a = nu.padded(l);
    let b = lambda.padded(l);
    let m = PolyMatrix::from_fn(l, l, |i, j| {
        let k = a[i] as i64 - b[j] as i64 - i as i64 + j as i64;
        let tail = if j < atoms.len() { &atoms[j..] } else { &[][..] };
        hk(k, tail)
    });
    m.det()
}

/// `p_ν^λ` as a sum over tableaux of `ν/λ` with entries at most `m` and row `i` entries at least `i`.
pub fn p_coeff_tableau(nu: &Partition, lambda: &Partition, atoms: &[Polynomial]) -> Polynomial {
    let Ok(shape) = SkewShape::new(nu.clone(), lambda.clone()) else {
        return Polynomial::zero();
    };
    let l = shape.rows();
    let lower: Vec<u32> = (1..=l as u32).collect();
    let upper = vec![atoms.len() as u32; l];
    let mut acc = Polynomial::zero();
    for t in tableaux::flagged_ssyt(&shape, &lower, &upper) {
        acc += Polynomial::product(t.rows().iter().flatten().map(|&v| &atoms[v as usize - 1]));
    }
    acc
}

/// The default alphabet `t_1, ..., t_m` for `p_ν^λ`.
pub fn t_alphabet(m: usize) -> Vec<Polynomial> {
    (1..=m as u32).map(|i| Polynomial::var(Var::t(i))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial as p;
    use crate::shapes::part;

    #[test]
    fn trivial_and_pinned_values() {
        let l = part(&[2, 1]);
        assert!(e_coeff(&l, &l).is_one());
        assert!(big_e_coeff(&l, &l).is_one());
        assert!(e_coeff(&part(&[1]), &part(&[2])).is_zero());
        assert_eq!(big_e_coeff(&l, &part(&[2, 2])), Polynomial::t(1));
        assert_eq!(big_e_coeff_neg(&l, &part(&[2, 2])), -Polynomial::t(1));
        assert_eq!(big_e_coeff(&l, &part(&[2, 1, 1])), p("t1 + t2").unwrap());
        assert!(p_coeff_det(&l, &l, &t_alphabet(2)).unwrap().is_one());
    }

    #[test]
    fn p_forms_agree() {
        for m in 1..=3 {
            let atoms = t_alphabet(m);
            for nu in crate::shapes::partitions_in_box(3, 3) {
                if nu.len() > m + 1 {
                    continue;
                }
                for lam in nu.subpartitions() {
                    assert_eq!(p_coeff_det(&nu, &lam, &atoms).unwrap(), p_coeff_tableau(&nu, &lam, &atoms), "{nu} {lam} m={m}");
                }
            }
        }
    }
}
