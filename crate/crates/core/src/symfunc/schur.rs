//! Schur, skew Schur, flagged Schur and multi-Schur polynomials.

use crate::algebra::{gen_series_coeff, h_table, x_atoms, PolyMatrix, Polynomial};
use crate::error::Error;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchurRoute {
    Combinatorial,
    JacobiTrudi,
}

/// `s_{λ/μ}` of arbitrary atoms by the Jacobi-Trudi determinant `det[h_{λ_i - μ_j - i + j}]`.
pub fn skew_schur_atoms(shape: &SkewShape, atoms: &[Polynomial]) -> Polynomial {
    let l = shape.outer.len();
    if l == 0 {
        return Polynomial::one();
    }
    // A column longer than the alphabet forces zero.
    let conj_o = shape.outer.conjugate();
    let conj_i = shape.inner.conjugate();
    if (1..=shape.outer.first()).any(|c| conj_o.part(c) - conj_i.part(c) > atoms.len()) {
        return Polynomial::zero();
    }
    let lam = shape.outer.padded(l);
    let mu = shape.inner.padded(l);
    let kmax = lam[0] + l;
    let h = h_table(kmax, atoms);
    let m = PolyMatrix::from_fn(l, l, |i, j| {
        let k = lam[i] as i64 - mu[j] as i64 - i as i64 + j as i64;
        if k < 0 {
            Polynomial::zero()
        } else {
            h[k as usize].clone()
        }
    });
    m.det().expect("square matrix within size bound")
}

/// `s_λ` of arbitrary atoms.
pub fn schur_atoms(lambda: &Partition, atoms: &[Polynomial]) -> Polynomial {
    skew_schur_atoms(&SkewShape::straight(lambda.clone()), atoms)
}

/// `s_{λ/μ}(x_1, ..., x_n)`.
pub fn skew_schur(shape: &SkewShape, n: usize, route: SchurRoute) -> Polynomial {
    match route {
        SchurRoute::Combinatorial => {
            let mut acc = Polynomial::zero();
            for t in tableaux::ssyt(shape, n as u32) {
                acc += Polynomial::monomial(t.x_weight());
            }
            acc
        }
        SchurRoute::JacobiTrudi => skew_schur_atoms(shape, &x_atoms(n)),
    }
}

/// `s_λ(x_1, ..., x_n)`.
pub fn schur(lambda: &Partition, n: usize, route: SchurRoute) -> Polynomial {
    skew_schur(&SkewShape::straight(lambda.clone()), n, route)
}

/// Row-flagged skew Schur polynomial: row `i` entries lie in `lower[i-1]..=upper[i-1]`.
///
/// The determinant route is `det[h_{λ_i - μ_j - i + j}(x_{lower_j}, ..., x_{upper_i})]`,
/// valid when both flags are weakly increasing.
pub fn flagged_schur(shape: &SkewShape, lower: &[u32], upper: &[u32], route: SchurRoute) -> Result<Polynomial, Error> {
    let l = shape.rows();
    if lower.len() < l || upper.len() < l {
        return Err(Error::InvalidArgument(format!("need {l} flags per side")));
    }
    match route {
        SchurRoute::Combinatorial => {
            let mut acc = Polynomial::zero();
            for t in tableaux::flagged_ssyt(shape, lower, upper) {
                acc += Polynomial::monomial(t.x_weight());
            }
            Ok(acc)
        }
        SchurRoute::JacobiTrudi => {
            if lower[..l].windows(2).any(|w| w[0] > w[1]) || upper[..l].windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidArgument("determinant route needs weakly increasing flags".into()));
            }
            let lam = shape.outer.padded(l);
            let mu = shape.inner.padded(l);
            let m = PolyMatrix::from_fn(l, l, |i, j| {
                let k = lam[i] as i64 - mu[j] as i64 - i as i64 + j as i64;
                let lo = lower[j].max(1);
                let atoms: Vec<Polynomial> = (lo..=upper[i]).map(Polynomial::x).collect();
                crate::algebra::hk(k, &atoms)
            });
            m.det()
        }
    }
}

/// `det[S_{I_k + h - k}(X_k - Y_k)]_{h,k}`, where column `k` uses the `k`-th difference alphabet.
pub fn multi_schur(index: &[i64], alphabets: &[(Vec<Polynomial>, Vec<Polynomial>)]) -> Result<Polynomial, Error> {
    if index.len() != alphabets.len() {
        return Err(Error::ShapeMismatch(format!("{} indices for {} alphabets", index.len(), alphabets.len())));
    }
    let l = index.len();
    let m = PolyMatrix::from_fn(l, l, |h, k| {
        let (xs, ts) = &alphabets[k];
        gen_series_coeff(index[k] + h as i64 - k as i64, xs, ts)
    });
    m.det()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial as p;
    use crate::shapes::part;

    #[test]
    fn small_schur() {
        assert!(schur(&Partition::empty(), 3, SchurRoute::JacobiTrudi).is_one());
        assert_eq!(schur(&part(&[2, 1]), 2, SchurRoute::Combinatorial), p("x1^2*x2 + x1*x2^2").unwrap());
        assert!(schur(&part(&[1, 1, 1]), 2, SchurRoute::JacobiTrudi).is_zero());
    }

    #[test]
    fn routes_agree() {
        for lam in crate::shapes::partitions_in_box(3, 3) {
            for mu in lam.subpartitions() {
                let s = SkewShape::new(lam.clone(), mu).unwrap();
                for n in 1..=3 {
                    assert_eq!(skew_schur(&s, n, SchurRoute::Combinatorial), skew_schur(&s, n, SchurRoute::JacobiTrudi), "{s} n={n}");
                }
            }
        }
    }

    #[test]
    fn flagged_routes_agree() {
        let s: SkewShape = "3,2,2/1".parse().unwrap();
        for (lo, hi) in [([1, 1, 1], [2, 3, 4]), ([1, 2, 3], [3, 3, 4]), ([1, 1, 2], [1, 3, 3])] {
            let a = flagged_schur(&s, &lo, &hi, SchurRoute::Combinatorial).unwrap();
            let b = flagged_schur(&s, &lo, &hi, SchurRoute::JacobiTrudi).unwrap();
            assert_eq!(a, b, "{lo:?} {hi:?}");
        }
    }

    #[test]
    fn multi_schur_edge_cases() {
        assert!(multi_schur(&[], &[]).unwrap().is_one());
        let xs = x_atoms(2);
        let single = multi_schur(&[3], &[(xs.clone(), vec![])]).unwrap();
        assert_eq!(single, crate::algebra::hk(3, &xs));
    }
}
