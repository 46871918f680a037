//! Refined Grothendieck polynomials `G_λ(x; t)`.

use std::str::FromStr;

use super::coeffs::big_e_coeff_neg;
use super::expansion::SchurExpansion;
use super::schur::{multi_schur, schur, SchurRoute};
use super::SymSpec;
use crate::algebra::{divided_difference_word, ek, h_table, w0_word, x_atoms, Monomial, PolyMatrix, Polynomial, Var};
use crate::error::Error;
use crate::shapes::{partitions_in_box, Partition};
use crate::tableaux;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrothRoute {
    Svt,
    SchurExpansion,
    JacobiTrudi,
    DividedDiff,
    /// Multi-Schur form with alphabets `x - (t_1^{-1}, ..., t_{k-1}^{-1})`.
    MultiSchur,
}

impl GrothRoute {
    pub const ALL: [GrothRoute; 5] = [GrothRoute::Svt, GrothRoute::SchurExpansion, GrothRoute::JacobiTrudi, GrothRoute::DividedDiff, GrothRoute::MultiSchur];
}

impl FromStr for GrothRoute {
    type Err = Error;
    fn from_str(s: &str) -> Result<GrothRoute, Error> {
        Ok(match s {
            "svt" => GrothRoute::Svt,
            "schur_expansion" | "schur" => GrothRoute::SchurExpansion,
            "jacobi_trudi" | "jt" => GrothRoute::JacobiTrudi,
            "divided_diff" => GrothRoute::DividedDiff,
            "multischur" | "multi_schur" => GrothRoute::MultiSchur,
            _ => return Err(Error::Parse(format!("unknown G route {s:?}"))),
        })
    }
}

/// `Σ_μ E_λ^μ(-t) s_μ` over `μ ⊇ λ` with at most `n` rows; only `μ_1 = λ_1` contributes.
pub fn grothendieck_schur_expansion(lambda: &Partition, n: usize) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    if lambda.len() > n {
        return out;
    }
    for mu in partitions_in_box(n, lambda.first()) {
        if lambda.contained_in(&mu) && mu.first() == lambda.first() {
            out.add(mu.clone(), big_e_coeff_neg(lambda, &mu));
        }
    }
    out
}

/// `∏_{i<j≤n} (1 - t_i x_j)`.
fn staircase_product(n: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            acc = acc * (Polynomial::one() - Polynomial::t(i) * Polynomial::x(j));
        }
    }
    acc
}

/// `G_λ(x_1..x_n; t)` by the chosen route; zero when `ℓ(λ) > n`.
pub fn grothendieck(lambda: &Partition, spec: &SymSpec, route: GrothRoute) -> Result<Polynomial, Error> {
    let n = spec.n;
    let l = lambda.len();
    if l > n {
        return Ok(Polynomial::zero());
    }
    let need = n.saturating_sub(1);
    if matches!(route, GrothRoute::DividedDiff | GrothRoute::MultiSchur | GrothRoute::JacobiTrudi) && spec.t_count < need {
        return Err(Error::InsufficientVariables(format!("G routes in {n} variables need {need} t-variables")));
    }
    match route {
        GrothRoute::Svt => {
            let mut acc = Polynomial::zero();
            for t in tableaux::set_valued(lambda, n as u32) {
                acc += t.weight();
            }
            Ok(acc)
        }
        GrothRoute::SchurExpansion => Ok(grothendieck_schur_expansion(lambda, n).to_polynomial(n)),
        GrothRoute::JacobiTrudi => {
            let lam = lambda.padded(n);
            let kmax = lam[0] + n;
            let h = h_table(kmax, &x_atoms(n));
            let m = PolyMatrix::from_fn(n, n, |i, j| {
                let negt: Vec<Polynomial> = (1..=i as u32).map(|a| -Polynomial::t(a)).collect();
                let base = lam[i] as i64 - i as i64 + j as i64;
                let mut acc = Polynomial::zero();
                for k in base.max(0)..=base + i as i64 {
                    let e = ek(k - base, &negt);
                    if !e.is_zero() {
                        acc += e * &h[k as usize];
                    }
                }
                acc
            });
            m.det()
        }
        GrothRoute::DividedDiff => {
            let lam = lambda.padded(n);
            let mono = Monomial::from_pairs((0..n).map(|i| (Var::x(i as u32 + 1), (lam[i] + n - 1 - i) as i32)));
            let p = staircase_product(n).mul_monomial(&mono);
            divided_difference_word(&p, &w0_word(n))
        }
        GrothRoute::MultiSchur => {
            let lam = lambda.padded(n);
            let index: Vec<i64> = (0..n).map(|i| (lam[i] + i) as i64).collect();
            let xs = x_atoms(n);
            let alphabets: Vec<_> = (0..n)
                .map(|k| {
                    let inv: Vec<Polynomial> = (1..=k as u32).map(|a| Polynomial::var_pow(Var::t(a), -1)).collect();
                    (xs.clone(), inv)
                })
                .collect();
            let s = multi_schur(&index, &alphabets)?;
            let rho = Monomial::from_pairs((1..n).map(|i| (Var::t(i as u32), (n - i) as i32)));
            let sign = if (n * (n - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
            Ok(s.mul_monomial(&rho) * Polynomial::int(sign))
        }
    }
}

/// `G_λ` at `t_i = -β` for all `i`, the classical β-Grothendieck polynomial.
pub fn beta_grothendieck(lambda: &Partition, n: usize) -> Result<Polynomial, Error> {
    let g = grothendieck(lambda, &SymSpec::new(n, n), GrothRoute::Svt)?;
    let minus_beta = -Polynomial::var(Var::beta());
    let b = (1..=n as u32).map(|i| (Var::t(i), minus_beta.clone())).collect();
    g.substitute(&b)
}

/// `G_λ(x; 0) = s_λ(x)`, exposed for sanity checks.
pub fn grothendieck_at_zero(lambda: &Partition, n: usize) -> Polynomial {
    schur(lambda, n, SchurRoute::JacobiTrudi)
}
