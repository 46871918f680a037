use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::matrix::{last_passage, GeomParams, LppMatrix};
use crate::algebra::{rational_string, Monomial, Polynomial, Rational, Var};
use crate::diffops::{lpp_cdf_det, lpp_cdf_schur};
use crate::error::Error;
use crate::shapes::{partitions_in_box, Partition, SkewShape};
use crate::symfunc::{dual_grothendieck, schur_atoms, skew_dual_grothendieck, DualRoute, SkewDualRoute, SymSpec};

/// Brute-force limits: `λ_1 ≤ 6` and `ℓ·n ≤ 8`.
pub const BRUTE_MAX_PART: usize = 6;
pub const BRUTE_MAX_CELLS: usize = 8;

fn one() -> Rational {
    Rational::from_integer(1.into())
}

fn zero() -> Rational {
    Rational::from_integer(0.into())
}

/// Bindings `x_j ↦ x_j` and `t_i ↦ t_i^{-1}` (when `invert`) or `t_i`.
fn bindings(p: &GeomParams, invert: bool) -> BTreeMap<Var, Rational> {
    let mut b = BTreeMap::new();
    for (j, x) in p.x().iter().enumerate() {
        b.insert(Var::x(j as u32 + 1), x.clone());
    }
    for (i, t) in p.t().iter().enumerate() {
        b.insert(Var::t(i as u32 + 1), if invert { one() / t } else { t.clone() });
    }
    b
}

fn t_pow(p: &GeomParams, exps: &[usize]) -> Rational {
    let mut acc = one();
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            acc *= &p.t()[i];
        }
    }
    acc
}

/// `∏(1 - t_i x_j) t^λ g_λ(x; t^{-1})` as a polynomial in `x_1..x_n`, `t_1..t_ℓ`.
pub fn prob_polynomial(lambda: &Partition, l: usize, n: usize) -> Result<Polynomial, Error> {
    if lambda.len() > l {
        return Ok(Polynomial::zero());
    }
    let g = dual_grothendieck(lambda, &SymSpec::new(n, l), DualRoute::JtH)?;
    let inv: BTreeMap<Var, Polynomial> = (1..=l as u32).map(|i| (Var::t(i), Polynomial::var_pow(Var::t(i), -1))).collect();
    let tl = Polynomial::monomial(Monomial::from_pairs(lambda.parts().iter().enumerate().map(|(i, &p)| (Var::t(i as u32 + 1), p as i32))));
    Ok(crate::diffops::geometric_normalizer(l, n) * tl * g.substitute(&inv)?)
}

/// `P(G(n) = λ) = ∏(1 - t_i x_j) t^λ g_λ(x; t^{-1})`.
pub fn exact_prob(lambda: &Partition, params: &GeomParams) -> Result<Rational, Error> {
    exact_prob_from(lambda, &Partition::empty(), params)
}

/// `P(G(n) = λ | G(0) = μ) = ∏(1 - t_i x_j) t^{λ-μ} g_{λ/μ}(x; t^{-1})`.
pub fn exact_prob_from(lambda: &Partition, mu: &Partition, params: &GeomParams) -> Result<Rational, Error> {
    let l = params.l();
    if lambda.len() > l || mu.len() > l {
        return Ok(zero());
    }
    if !mu.contained_in(lambda) {
        return Ok(zero());
    }
    let g = if mu.is_empty() {
        dual_grothendieck(lambda, &SymSpec::new(params.n(), l), DualRoute::JtH)?
    } else {
        skew_dual_grothendieck(&SkewShape::new(lambda.clone(), mu.clone())?, params.n(), SkewDualRoute::Rpp)
    };
    let diff: Vec<usize> = (1..=l).map(|i| lambda.part(i) - mu.part(i)).collect();
    Ok(params.normalizer() * t_pow(params, &diff) * g.eval(&bindings(params, true))?)
}

/// `P(w = M)` for a single matrix.
pub fn matrix_prob(m: &LppMatrix, params: &GeomParams) -> Rational {
    let mut acc = params.normalizer();
    for i in 1..=m.rows() {
        for j in 1..=m.cols() {
            let q = params.q(i, j);
            for _ in 0..m.get(i, j) {
                acc *= &q;
            }
        }
    }
    acc
}

/// Sums `P(w = M)` over every matrix with entries in `0..=λ_1` whose
/// G-vector is `λ` (larger entries force `G(ℓ, n) > λ_1`).
pub fn exact_prob_bruteforce(lambda: &Partition, params: &GeomParams) -> Result<Rational, Error> {
    exact_prob_bruteforce_from(lambda, &Partition::empty(), params)
}

/// Brute force with initial condition `μ`.
pub fn exact_prob_bruteforce_from(lambda: &Partition, mu: &Partition, params: &GeomParams) -> Result<Rational, Error> {
    let (l, n) = (params.l(), params.n());
    if lambda.first() > BRUTE_MAX_PART || l * n > BRUTE_MAX_CELLS {
        return Err(Error::TooLarge(format!("brute force needs λ_1 ≤ {BRUTE_MAX_PART} and ℓ·n ≤ {BRUTE_MAX_CELLS}")));
    }
    if lambda.len() > l || mu.len() > l {
        return Ok(zero());
    }
    let mut acc = zero();
    for m in LppMatrix::all_bounded(l, n, lambda.first() as u64) {
        if last_passage(&m, Some(mu))? == *lambda {
            acc += matrix_prob(&m, params);
        }
    }
    Ok(acc)
}

/// One column step with variable `x`:
/// `∏_j (1 - t_j x)(t_j x)^{λ_j - max(μ_j, λ_{j+1})} H(λ_j - max(μ_j, λ_{j+1}))`.
pub fn transition_step(lambda: &Partition, mu: &Partition, t: &[Rational], x: &Rational) -> Rational {
    let l = t.len();
    if lambda.len() > l || mu.len() > l {
        return zero();
    }
    let mut acc = one();
    for j in 1..=l {
        let floor = mu.part(j).max(lambda.part(j + 1));
        if lambda.part(j) < floor {
            return zero();
        }
        let q = &t[j - 1] * x;
        acc *= one() - &q;
        for _ in 0..lambda.part(j) - floor {
            acc *= &q;
        }
    }
    acc
}

/// `P(G(n) = λ | G(n-1) = μ)` using the last column variable `x_n`.
pub fn transition_prob(lambda: &Partition, mu: &Partition, params: &GeomParams) -> Rational {
    transition_step(lambda, mu, params.t(), params.x().last().expect("nonempty x"))
}

/// `P(G(n) = λ | G(0) = μ)` by chaining single steps (law of total probability).
pub fn chain_prob(lambda: &Partition, mu: &Partition, params: &GeomParams) -> Rational {
    // Column by column over the intermediate shapes κ with μ ⊆ κ ⊆ λ.
    let mut layer: BTreeMap<Partition, Rational> = BTreeMap::from([(mu.clone(), one())]);
    let candidates: Vec<Partition> = lambda.subpartitions().into_iter().filter(|k| mu.contained_in(k)).collect();
    for x in params.x() {
        let mut next: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (prev, p) in &layer {
            for k in &candidates {
                let s = transition_step(k, prev, params.t(), x);
                if s != zero() {
                    *next.entry(k.clone()).or_insert_with(zero) += p * s;
                }
            }
        }
        layer = next;
    }
    layer.remove(lambda).unwrap_or_else(zero)
}

/// `P_Schur(λ) = ∏(1 - t_i x_j) s_λ(t) s_λ(x)`.
pub fn schur_measure(lambda: &Partition, params: &GeomParams) -> Result<Rational, Error> {
    if params.l() > 4 || params.n() > 4 {
        return Err(Error::TooLarge("Schur measure limited to ℓ, n ≤ 4".into()));
    }
    let c = |v: &[Rational]| v.iter().map(|r| Polynomial::constant(r.clone())).collect::<Vec<_>>();
    let st = schur_atoms(lambda, &c(params.t()));
    let sx = schur_atoms(lambda, &c(params.x()));
    let val = (st * sx).as_constant().ok_or_else(|| Error::InvalidArgument("non-constant Schur value".into()))?;
    Ok(params.normalizer() * val)
}

/// The four values of `P(G(ℓ, n) ≤ m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdfComparison {
    pub m: usize,
    /// The difference-operator determinant.
    pub det: Rational,
    /// `∏ t_i^m ∏(1 - t_i x_j) s_{m^ℓ}(x, t^{-1})`.
    pub schur: Rational,
    /// `Σ_{λ_1 ≤ m} P_Schur(λ)`.
    pub schur_measure: Rational,
    /// `Σ_{λ ⊆ m^ℓ} P(G(n) = λ)`.
    pub exact_sum: Rational,
}

impl CdfComparison {
    pub fn agree(&self) -> bool {
        self.det == self.schur && self.schur == self.schur_measure && self.schur_measure == self.exact_sum
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "det": rational_string(&self.det),
            "schur": rational_string(&self.schur),
            "schur_measure": rational_string(&self.schur_measure),
            "exact_sum": rational_string(&self.exact_sum),
            "agree": self.agree(),
        })
    }
}

/// Computes `P(G(ℓ, n) ≤ m)` four ways at the given parameters.
pub fn cdf_comparison(m: usize, params: &GeomParams) -> Result<CdfComparison, Error> {
    let (l, n) = (params.l(), params.n());
    let b = bindings(params, false);
    let det = lpp_cdf_det(l, n, m)?.eval(&b)?;
    let schur = lpp_cdf_schur(l, n, m)?.eval(&b)?;
    let mut schur_measure_sum = zero();
    for lam in partitions_in_box(l.min(n), m) {
        schur_measure_sum += schur_measure(&lam, params)?;
    }
    let mut exact_sum = zero();
    for lam in partitions_in_box(l, m) {
        exact_sum += exact_prob(&lam, params)?;
    }
    Ok(CdfComparison { m, det, schur, schur_measure: schur_measure_sum, exact_sum })
}

/// The CDF identity `P(G(ℓ,n) ≤ m) = Σ_{λ_1 ≤ m} P_Schur(λ)` checked exactly,
/// together with the determinant and single-Schur forms.
pub fn verify_schur_measure_cdf(l: usize, n: usize, m: usize, params: &GeomParams) -> Result<bool, Error> {
    if params.l() != l || params.n() != n {
        return Err(Error::ShapeMismatch(format!("parameters are {}x{}, expected {l}x{n}", params.l(), params.n())));
    }
    Ok(cdf_comparison(m, params)?.agree())
}
