//! Refined dual Grothendieck polynomials `g_λ(x; t)` and their skew versions.

use std::str::FromStr;

use super::coeffs::e_coeff;
use super::schur::{schur, SchurRoute};
use super::SymSpec;
use crate::algebra::{ek, hk, t_atoms, x_atoms, PolyMatrix, Polynomial, Var};
use crate::error::Error;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualRoute {
    Rpp,
    SchurDecomp,
    JtH,
    JtE,
    MultiSchur,
}

impl DualRoute {
    pub const ALL: [DualRoute; 5] = [DualRoute::Rpp, DualRoute::SchurDecomp, DualRoute::JtH, DualRoute::JtE, DualRoute::MultiSchur];
}

impl FromStr for DualRoute {
    type Err = Error;
    fn from_str(s: &str) -> Result<DualRoute, Error> {
        Ok(match s {
            "rpp" => DualRoute::Rpp,
            "schur_decomp" | "schur" => DualRoute::SchurDecomp,
            "jt_h" => DualRoute::JtH,
            "jt_e" => DualRoute::JtE,
            "multischur" | "multi_schur" => DualRoute::MultiSchur,
            _ => return Err(Error::Parse(format!("unknown g route {s:?}"))),
        })
    }
}

fn alphabet(n: usize, t_hi: usize) -> Vec<Polynomial> {
    let mut a = x_atoms(n);
    a.extend(t_atoms(1, t_hi));
    a
}

/// `g_λ(x_1..x_n; t_1..t_{ℓ-1})` by the chosen route.
pub fn dual_grothendieck(lambda: &Partition, spec: &SymSpec, route: DualRoute) -> Result<Polynomial, Error> {
    let l = lambda.len();
    if spec.t_count + 1 < l {
        return Err(Error::InsufficientVariables(format!("g_{lambda} needs {} t-variables", l - 1)));
    }
    if l == 0 {
        return Ok(Polynomial::one());
    }
    let n = spec.n;
    match route {
        DualRoute::Rpp => {
            let mut acc = Polynomial::zero();
            for t in tableaux::rpp(&SkewShape::straight(lambda.clone()), n as u32) {
                acc += Polynomial::monomial(t.rpp_weight());
            }
            Ok(acc)
        }
        DualRoute::SchurDecomp => {
            let mut acc = Polynomial::zero();
            for mu in lambda.subpartitions() {
                if mu.len() > n {
                    continue;
                }
                let c = e_coeff(lambda, &mu);
                if !c.is_zero() {
                    acc += c * schur(&mu, n, SchurRoute::JacobiTrudi);
                }
            }
            Ok(acc)
        }
        DualRoute::JtH => {
            let lam = lambda.padded(l);
            let m = PolyMatrix::from_fn(l, l, |i, j| hk(lam[i] as i64 + j as i64 - i as i64, &alphabet(n, i)));
            m.det()
        }
        DualRoute::JtE => {
            let c = lambda.conjugate();
            let k = c.len();
            let cp = c.padded(k);
            let m = PolyMatrix::from_fn(k, k, |i, j| ek(cp[i] as i64 + j as i64 - i as i64, &alphabet(n, cp[i] - 1)));
            m.det()
        }
        DualRoute::MultiSchur => {
            // s_λ(x, x + (t_1), ..., x + (t_1..t_{ℓ-1})): column k uses x ∪ t_{<k}.
            let lam = lambda.padded(l);
            let m = PolyMatrix::from_fn(l, l, |h, k| hk(lam[k] as i64 + h as i64 - k as i64, &alphabet(n, k)));
            m.det()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkewDualRoute {
    Rpp,
    /// One-variable factorized products chained over `x_1, ..., x_n`.
    Factorized,
}

/// `g_{λ/μ}(x; t)` in one variable `x` (a polynomial in `x` and `t`), from the factorized form
/// `∏_j t_j^{max(μ_j, λ_{j+1}) - μ_j} x^{λ_j - max(μ_j, λ_{j+1})}`.
pub fn skew_one_variable(lambda: &Partition, mu: &Partition, x: Var) -> Polynomial {
    if !mu.contained_in(lambda) {
        return Polynomial::zero();
    }
    let l = lambda.len();
    let mut pairs = Vec::new();
    for j in 1..=l {
        let m = mu.part(j).max(lambda.part(j + 1));
        pairs.push((Var::t(j as u32), (m - mu.part(j)) as i32));
        pairs.push((x, (lambda.part(j) - m) as i32));
    }
    Polynomial::monomial(crate::algebra::Monomial::from_pairs(pairs))
}

/// `g_{λ/μ}(x_1..x_n; t)`.
pub fn skew_dual_grothendieck(shape: &SkewShape, n: usize, route: SkewDualRoute) -> Polynomial {
    match route {
        SkewDualRoute::Rpp => {
            let mut acc = Polynomial::zero();
            for t in tableaux::rpp(shape, n as u32) {
                acc += Polynomial::monomial(t.rpp_weight());
            }
            acc
        }
        SkewDualRoute::Factorized => chain(&shape.outer, &shape.inner, n),
    }
}

/// `Σ_κ g_{κ/μ}(x_1..x_{n-1}) g_{λ/κ}(x_n)` unrolled recursively.
fn chain(lambda: &Partition, mu: &Partition, n: usize) -> Polynomial {
    if n == 0 {
        return if lambda == mu { Polynomial::one() } else { Polynomial::zero() };
    }
    if n == 1 {
        return skew_one_variable(lambda, mu, Var::x(1));
    }
    let mut acc = Polynomial::zero();
    for kappa in lambda.subpartitions() {
        if !mu.contained_in(&kappa) {
            continue;
        }
        let last = skew_one_variable(lambda, &kappa, Var::x(n as u32));
        let rest = chain(&kappa, mu, n - 1);
        if !rest.is_zero() {
            acc += rest * last;
        }
    }
    acc
}
