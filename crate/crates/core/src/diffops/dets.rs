//! Determinants built from difference operators: one-variable lemmas, skew
//! Jacobi-Trudi forms, transition probabilities and the `P(G ≤ m)` identities.

use std::collections::BTreeMap;

use super::seq::{eval_delta, Applied, Convolution, DeltaWord, Seq, SeqFn};
use crate::algebra::{ek, hk, x_atoms, Monomial, PolyMatrix, Polynomial, Var};
use crate::error::Error;
use crate::shapes::{partitions_in_box, Partition, SkewShape};
use crate::symfunc::{dual_grothendieck, schur_atoms, skew_schur_atoms, DualRoute, SymSpec};

pub const MAX_L: usize = 8;

fn t(i: usize) -> Polynomial {
    Polynomial::t(i as u32)
}

fn t_inv(i: usize) -> Polynomial {
    Polynomial::var_pow(Var::t(i as u32), -1)
}

fn t_signed(i: i64, neg: bool, inv: bool) -> Polynomial {
    let base = if inv { Polynomial::var_pow(Var::t(i as u32), -1) } else { Polynomial::t(i as u32) };
    if neg {
        -base
    } else {
        base
    }
}

/// `∏_{i ≤ ℓ, j ≤ n} (1 - t_i x_j)`.
pub fn geometric_normalizer(l: usize, n: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for i in 1..=l {
        for j in 1..=n {
            acc = acc * (Polynomial::one() - t(i) * Polynomial::x(j as u32));
        }
    }
    acc
}

/// `∏ t_i^{e_i}` (exponents may be negative).
pub fn t_power(exps: &[i64]) -> Polynomial {
    Polynomial::monomial(Monomial::from_pairs(exps.iter().enumerate().map(|(i, &e)| (Var::t(i as u32 + 1), e as i32))))
}

/// Substitutes `t_i -> t_i^{-1}` for `i ≤ l`.
pub fn invert_t(p: &Polynomial, l: usize) -> Result<Polynomial, Error> {
    let b: BTreeMap<Var, Polynomial> = (1..=l).map(|i| (Var::t(i as u32), t_inv(i))).collect();
    p.substitute(&b)
}

fn check_l(l: usize) -> Result<(), Error> {
    if l > MAX_L {
        return Err(Error::TooLarge(format!("determinant of size {l} (max {MAX_L})")));
    }
    Ok(())
}

/// `det[(Δ^{j-i} f)(λ_i - μ_j)]` with the `Δ` weights `w(k)`.
fn delta_det(f: &dyn Seq, lam: &[usize], mu: &[usize], w: &dyn Fn(usize) -> Polynomial) -> Result<Polynomial, Error> {
    let l = lam.len();
    check_l(l)?;
    PolyMatrix::from_fn(l, l, |i, j| {
        let word = DeltaWord::between(i + 1, j + 1, w);
        eval_delta(&word, f, lam[i] as i64 - mu[j] as i64)
    })
    .det()
}

/// `det[(Δ^{j-i} v)(λ_i - μ_j)]` with `v(ν) = x^ν H(ν)`.
pub fn one_variable_det(lambda: &Partition, mu: &Partition, l: usize, x: &Polynomial) -> Result<Polynomial, Error> {
    delta_det(&SeqFn::v(x.clone()), &lambda.padded(l), &mu.padded(l), &t)
}

/// `∏_j t_j^{max(μ_j, λ_{j+1}) - μ_j} v(λ_j - max(μ_j, λ_{j+1}))`.
pub fn one_variable_product(lambda: &Partition, mu: &Partition, l: usize, x: &Polynomial) -> Polynomial {
    let lam = lambda.padded(l + 1);
    let mu = mu.padded(l);
    let mut acc = Polynomial::one();
    for j in 0..l {
        let m = mu[j].max(lam[j + 1]);
        if lam[j] < m {
            return Polynomial::zero();
        }
        acc = acc * t(j + 1).pow((m - mu[j]) as u32) * x.pow((lam[j] - m) as u32);
    }
    acc
}

fn check_parts(ps: &[&Partition], l: usize) -> Result<(), Error> {
    if l > 5 || ps.iter().any(|p| p.len() > l || p.first() > 5) {
        return Err(Error::TooLarge("one-variable lemmas run with ℓ ≤ 5 and parts ≤ 5".into()));
    }
    Ok(())
}

/// The `h`-type one-variable lemma in `x_1`.
pub fn verify_one_variable_lemma(lambda: &Partition, mu: &Partition, l: usize) -> Result<bool, Error> {
    check_parts(&[lambda, mu], l)?;
    let x = Polynomial::x(1);
    Ok(one_variable_det(lambda, mu, l, &x)? == one_variable_product(lambda, mu, l, &x))
}

/// `det[Δ_{-t}^{λ_i - μ_j - 1} f̃(j - i + 1)]` with `f̃(ν) = x^ν E(ν)`, where
/// `Δ^{b-a}` runs over the weights `t_a .. t_{b-1}` with `a = μ_j + 1, b = λ_i`.
pub fn one_variable_e_det(lambda: &Partition, mu: &Partition, l: usize, x: &Polynomial) -> Result<Polynomial, Error> {
    check_l(l)?;
    let lam = lambda.padded(l);
    let mu = mu.padded(l);
    let f = SeqFn::e_short(x.clone());
    PolyMatrix::from_fn(l, l, |i, j| {
        let word = DeltaWord::interval(mu[j] as i64 + 1, lam[i] as i64, |k| t_signed(k, true, false));
        eval_delta(&word, &f, j as i64 - i as i64 + 1)
    })
    .det()
}

/// `∏_i (∏_{j=μ_i+1}^{λ_i-1} t_j) f̃(min(1, λ_i - μ_i))`.
pub fn one_variable_e_product(lambda: &Partition, mu: &Partition, l: usize, x: &Polynomial) -> Polynomial {
    let lam = lambda.padded(l);
    let mu = mu.padded(l);
    let mut acc = Polynomial::one();
    for i in 0..l {
        if lam[i] < mu[i] {
            return Polynomial::zero();
        }
        for j in mu[i] + 1..lam[i] {
            acc = acc * t(j);
        }
        if lam[i] > mu[i] {
            acc *= x;
        }
    }
    acc
}

/// The `e`-type one-variable lemma in `x_1`.
pub fn verify_one_variable_e(lambda: &Partition, mu: &Partition, l: usize) -> Result<bool, Error> {
    check_parts(&[lambda, mu], l)?;
    let x = Polynomial::x(1);
    Ok(one_variable_e_det(lambda, mu, l, &x)? == one_variable_e_product(lambda, mu, l, &x))
}

fn check_skew(shape: &SkewShape) -> Result<usize, Error> {
    let l = shape.outer.len();
    check_l(l)?;
    Ok(l)
}

/// `g_{λ/μ}(x_1..x_n; t) = det[(Δ^{j-i} h_ν(x))|_{ν = λ_i - μ_j}]`.
pub fn skew_delta_det(shape: &SkewShape, n: usize) -> Result<Polynomial, Error> {
    let l = check_skew(shape)?;
    if l == 0 {
        return Ok(Polynomial::one());
    }
    delta_det(&SeqFn::h_of(x_atoms(n)), &shape.outer.padded(l), &shape.inner.padded(l), &t)
}

/// `det[Σ_m α_m^{ij}(t) h_{λ_i - μ_j - i + j - m}(x)]` with
/// `α^{ij}_m = h_m(t_j..t_{i-1})` for `i ≥ j` and `e_m(-t_i..-t_{j-1})` for `i < j`.
pub fn skew_jt_h(shape: &SkewShape, n: usize) -> Result<Polynomial, Error> {
    let l = check_skew(shape)?;
    let lam = shape.outer.padded(l);
    let mu = shape.inner.padded(l);
    let xs = x_atoms(n);
    PolyMatrix::from_fn(l, l, |i, j| {
        let k = lam[i] as i64 - mu[j] as i64 - i as i64 + j as i64;
        let mut acc = Polynomial::zero();
        if i >= j {
            let ts: Vec<Polynomial> = (j + 1..=i).map(t).collect();
            for m in 0..=k.max(-1) {
                acc += hk(m, &ts) * hk(k - m, &xs);
            }
        } else {
            let ts: Vec<Polynomial> = (i + 1..=j).map(|a| -t(a)).collect();
            for m in 0..=ts.len() as i64 {
                acc += ek(m, &ts) * hk(k - m, &xs);
            }
        }
        acc
    })
    .det()
}

/// `det[Σ_m α̃_m^{ij}(t) e_{λ'_i - μ'_j - i + j - m}(x)]` over the conjugate shapes,
/// with `α̃^{ij}_m = e_m(t_{μ'_j+1}..t_{λ'_i-1})` when `μ'_j ≤ λ'_i - 1` and
/// `h_m(-t_{λ'_i}..-t_{μ'_j})` otherwise.
pub fn skew_jt_e(shape: &SkewShape, n: usize) -> Result<Polynomial, Error> {
    let lc = shape.outer.conjugate();
    let mc = shape.inner.conjugate();
    let k = lc.len();
    check_l(k)?;
    let lam = lc.padded(k);
    let mu = mc.padded(k);
    let xs = x_atoms(n);
    PolyMatrix::from_fn(k, k, |i, j| {
        let d = lam[i] as i64 - mu[j] as i64 - i as i64 + j as i64;
        let mut acc = Polynomial::zero();
        if mu[j] < lam[i] {
            let ts: Vec<Polynomial> = (mu[j] + 1..lam[i]).map(t).collect();
            for m in 0..=ts.len() as i64 {
                acc += ek(m, &ts) * ek(d - m, &xs);
            }
        } else {
            let ts: Vec<Polynomial> = (lam[i]..=mu[j]).map(|a| -t(a)).collect();
            for m in 0..=d.max(-1) {
                acc += hk(m, &ts) * ek(d - m, &xs);
            }
        }
        acc
    })
    .det()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetVersion {
    H,
    E,
}

/// `P(G(n) = λ | G(0) = μ)` for `ℓ` rows and `n` columns as a Laurent
/// polynomial in `t`, through the `h` determinant
/// `∏(1 - t_i x_j) t^{λ-μ} det[(Δ_{t^{-1}}^{j-i} h_ν(x))|_{ν=λ_i-μ_j}]` or the
/// `e` determinant over the conjugate shapes with `Δ_{-t^{-1}}`.
pub fn transition_prob_det(lambda: &Partition, mu: &Partition, l: usize, n: usize, version: DetVersion) -> Result<Polynomial, Error> {
    if lambda.len() > l || !mu.contained_in(lambda) {
        return Err(Error::InvalidArgument(format!("need μ ⊆ λ with ℓ(λ) ≤ {l}, got λ={lambda}, μ={mu}")));
    }
    let lam = lambda.padded(l);
    let mu_p = mu.padded(l);
    let shift: Vec<i64> = lam.iter().zip(&mu_p).map(|(a, b)| *a as i64 - *b as i64).collect();
    let pre = geometric_normalizer(l, n) * t_power(&shift);
    let det = match version {
        DetVersion::H => delta_det(&SeqFn::h_of(x_atoms(n)), &lam, &mu_p, &t_inv)?,
        DetVersion::E => {
            let lc = lambda.conjugate();
            let k = lc.len();
            check_l(k)?;
            let lcp = lc.padded(k);
            let mcp = mu.conjugate().padded(k);
            let f = SeqFn::e_of(x_atoms(n));
            PolyMatrix::from_fn(k, k, |i, j| {
                let word = DeltaWord::interval(mcp[j] as i64 + 1, lcp[i] as i64, |a| t_signed(a, true, true));
                eval_delta(&word, &f, j as i64 - i as i64 + 1)
            })
            .det()?
        }
    };
    Ok(pre * det)
}

/// The modified operator `Δ^{j-i-1} := Δ_{t_i^{-1}}^{-1} Δ^{j-i}` (weights `t^{-1}`).
fn shifted_word(i: usize, j: usize) -> DeltaWord {
    DeltaWord::inverse([t_inv(i)]).then(DeltaWord::between(i, j, t_inv))
}

/// `det[(Δ^{j-i-1} h_ν(x))|_{ν = m + 1 - μ_j}]` (weights `t^{-1}`).
pub fn cdf_det(l: usize, atoms: &[Polynomial], m: usize, mu: &Partition) -> Result<Polynomial, Error> {
    check_l(l)?;
    let mu = mu.padded(l);
    let f = SeqFn::h_of(atoms.to_vec());
    PolyMatrix::from_fn(l, l, |i, j| eval_delta(&shifted_word(i + 1, j + 1), &f, m as i64 + 1 - mu[j] as i64)).det()
}

fn check_cdf(l: usize, n: usize, m: usize) -> Result<(), Error> {
    if l > 4 || n > 4 || m > 4 {
        return Err(Error::TooLarge(format!("CDF identities run with ℓ, n, m ≤ 4, got {l}, {n}, {m}")));
    }
    Ok(())
}

/// `P(G(ℓ, n) ≤ m) = ∏ t_i^m ∏(1 - t_i x_j) det[Δ^{j-i-1} h_ν(x)|_{ν = m+1}]`.
pub fn lpp_cdf_det(l: usize, n: usize, m: usize) -> Result<Polynomial, Error> {
    check_cdf(l, n, m)?;
    let d = cdf_det(l, &x_atoms(n), m, &Partition::empty())?;
    Ok(t_power(&vec![m as i64; l]) * geometric_normalizer(l, n) * d)
}

/// `P(G(ℓ, n) ≤ m) = ∏ t_i^m ∏(1 - t_i x_j) s_{m^ℓ}(x_1..x_n, t_1^{-1}..t_ℓ^{-1})`.
pub fn lpp_cdf_schur(l: usize, n: usize, m: usize) -> Result<Polynomial, Error> {
    check_cdf(l, n, m)?;
    let mut atoms = x_atoms(n);
    atoms.extend((1..=l).map(t_inv));
    let s = schur_atoms(&Partition::rectangle(m, l), &atoms);
    Ok(t_power(&vec![m as i64; l]) * geometric_normalizer(l, n) * s)
}

/// `Σ_{λ ⊆ m^ℓ} P_Schur(λ) = ∏(1 - t_i x_j) Σ s_λ(x) s_λ(t)`.
pub fn lpp_cdf_schur_measure(l: usize, n: usize, m: usize) -> Result<Polynomial, Error> {
    check_cdf(l, n, m)?;
    Ok(geometric_normalizer(l, n) * cauchy_sum(l, n, m))
}

fn cauchy_sum(l: usize, n: usize, m: usize) -> Polynomial {
    let xs = x_atoms(n);
    let ts: Vec<Polynomial> = (1..=l).map(t).collect();
    let mut acc = Polynomial::zero();
    for lam in partitions_in_box(l.min(n), m) {
        acc += schur_atoms(&lam, &xs) * schur_atoms(&lam, &ts);
    }
    acc
}

fn check_small(sizes: &[usize]) -> Result<(), Error> {
    if sizes.iter().any(|&s| s > 3) {
        return Err(Error::TooLarge("generalized Cauchy and summation checks run with sizes ≤ 3".into()));
    }
    Ok(())
}

/// `Σ_{λ_1 ≤ m} s_λ(x) s_λ(t_1..t_ℓ) = ∏ t_i^m det[Δ^{j-i-1} h_ν(x)|_{ν=m+1}]`.
pub fn verify_summation_identity(l: usize, n: usize, m: usize) -> Result<bool, Error> {
    check_small(&[l, n, m])?;
    let rhs = t_power(&vec![m as i64; l]) * cdf_det(l, &x_atoms(n), m, &Partition::empty())?;
    Ok(cauchy_sum(l, n, m) == rhs)
}

/// `s_{m^ℓ}(x, y, t^{-1}) = Σ_{μ ⊆ m^ℓ} g_μ(x; t^{-1}) det[Δ^{j-i-1} h_ν(y)|_{ν=m+1-μ_j}]`
/// with `n` variables in each of `x` and `y`.
pub fn verify_generalized_cauchy_det(l: usize, n: usize, m: usize) -> Result<bool, Error> {
    check_small(&[l, n, m])?;
    let xs = x_atoms(2 * n);
    let ys: Vec<Polynomial> = xs[n..].to_vec();
    let mut atoms = xs.clone();
    atoms.extend((1..=l).map(t_inv));
    let lhs = schur_atoms(&Partition::rectangle(m, l), &atoms);
    let mut rhs = Polynomial::zero();
    for mu in partitions_in_box(l, m) {
        let g = dual_grothendieck(&mu, &SymSpec::new(n, l.max(1)), DualRoute::JtH)?;
        rhs += invert_t(&g, l)? * cdf_det(l, &ys, m, &mu)?;
    }
    Ok(lhs == rhs)
}

/// `det[z_i^{j-1} G_ij] = ∏_{i<j} (z_j - z_i) z_j / (z_j - t_i)`, both sides
/// multiplied by `∏_{i<j} (z_j - t_i) ∏_i z_i^ℓ` (row `i` by `z_i^ℓ ∏_{m<i} (z_i - t_m)`).
pub fn verify_expansion_det(l: usize) -> Result<bool, Error> {
    check_small(&[l])?;
    let z = |i: usize| Polynomial::z(i as u32);
    let one = Polynomial::one();
    let m = PolyMatrix::from_fn(l, l, |i, j| {
        let (i, j) = (i + 1, j + 1);
        let zi = z(i);
        let mut e = zi.pow((j - 1 + l) as u32);
        if j >= i {
            let zinv = Polynomial::var_pow(Var::z(i as u32), -1);
            for mm in i..j {
                e = e * (&one - t(mm) * &zinv);
            }
            for mm in 1..i {
                e = e * (&zi - t(mm));
            }
        } else {
            // ∏_{m=j}^{i-1} z_i / (z_i - t_m) against ∏_{m<i} (z_i - t_m).
            e = e * zi.pow((i - j) as u32);
            for mm in 1..j {
                e = e * (&zi - t(mm));
            }
        }
        e
    });
    let lhs = m.det()?;
    let mut rhs = Polynomial::one();
    for i in 1..=l {
        rhs = rhs * z(i).pow(l as u32);
        for j in i + 1..=l {
            rhs = rhs * (z(j) - z(i)) * z(j);
        }
    }
    Ok(lhs == rhs)
}

/// The convolution identity
/// `Σ_{ν_1 ≥ ⋯ ≥ ν_ℓ} det[Δ^{j-i} f(ν_i - μ_j)] det[Δ^{j-i} g(λ_i - ν_j)] = det[Δ^{j-i}(f*g)(λ_i - μ_j)]`
/// with weights `t`. The `ν`-window is read off the supports: row `ℓ` of the
/// first determinant vanishes for `ν_ℓ < μ_ℓ + L_f`, and the second vanishes
/// once `ν_1 > λ_1 - L_g + ℓ - 1`.
pub fn verify_convolution(f: &dyn Seq, g: &dyn Seq, lambda: &Partition, mu: &Partition, l: usize) -> Result<bool, Error> {
    if l > 3 {
        return Err(Error::TooLarge(format!("convolution check runs with ℓ ≤ 3, got {l}")));
    }
    let lam = lambda.padded(l);
    let mu_p = mu.padded(l);
    let lo = mu_p.last().copied().unwrap_or(0) as i64 + f.lower_bound();
    let hi = lam.first().copied().unwrap_or(0) as i64 - g.lower_bound() + l as i64 - 1;
    let conv = Convolution { f, g };
    let rhs = {
        let lam_i: Vec<i64> = lam.iter().map(|&a| a as i64).collect();
        let mu_i: Vec<i64> = mu_p.iter().map(|&a| a as i64).collect();
        int_delta_det(&conv, &lam_i, &mu_i)?
    };
    let mu_i: Vec<i64> = mu_p.iter().map(|&a| a as i64).collect();
    let lam_i: Vec<i64> = lam.iter().map(|&a| a as i64).collect();
    let mut lhs = Polynomial::zero();
    let mut nu = vec![lo; l];
    if l == 0 {
        return Ok(rhs.is_one());
    }
    loop {
        if nu.windows(2).all(|w| w[0] >= w[1]) {
            let a = int_delta_det(f, &nu, &mu_i)?;
            if !a.is_zero() {
                lhs += a * int_delta_det(g, &lam_i, &nu)?;
            }
        }
        // Odometer over [lo, hi]^ℓ.
        let mut k = 0;
        loop {
            if k == l {
                return Ok(lhs == rhs);
            }
            if nu[k] < hi {
                nu[k] += 1;
                break;
            }
            nu[k] = lo;
            k += 1;
        }
    }
}

fn int_delta_det(f: &dyn Seq, a: &[i64], b: &[i64]) -> Result<Polynomial, Error> {
    let l = a.len();
    PolyMatrix::from_fn(l, l, |i, j| eval_delta(&DeltaWord::between(i + 1, j + 1, t), f, a[i] - b[j])).det()
}

/// `word f` where the word is `Δ^{j-1}` with weights `t^{-1}` (a helper for
/// the determinant reductions).
fn forward_inv(j: usize) -> DeltaWord {
    DeltaWord::forward((1..j).map(t_inv))
}

/// Number of pairs `i < j` with `ν_i < ν_j`: the sign of sorting `ν` into
/// decreasing order.
pub fn ascents(nu: &[i64]) -> usize {
    (0..nu.len()).flat_map(|i| (i + 1..nu.len()).map(move |j| (i, j))).filter(|&(i, j)| nu[i] < nu[j]).count()
}

/// Sorted `ν` minus the staircase, or `None` when `ν` has a repeat or the
/// result is not a partition.
fn sorted_minus_rho(nu: &[i64]) -> Option<Partition> {
    let mut s = nu.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    if s.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let l = s.len();
    let parts: Option<Vec<usize>> = s.iter().enumerate().map(|(i, &v)| usize::try_from(v - (l - 1 - i) as i64).ok()).collect();
    Partition::new(parts?).ok()
}

/// Checks, for every `ν ∈ [0, m+ℓ-1]^ℓ`,
/// `det[Δ^{j-1} h_{ν_i-ℓ+1}(x)] = ±s_{ν̄-ρ}(x)` and
/// `det[h_{m+ℓ-ν_j-i}(t_1^{-1}..t_i^{-1})] = ±s_{m^ℓ/(ν̄-ρ)}(t^{-1})`, both zero on repeats,
/// the sign being `(-1)^{ascents(ν)}`.
pub fn verify_determinant_reductions(l: usize, n: usize, m: usize) -> Result<bool, Error> {
    check_small(&[l, n, m])?;
    let xs = x_atoms(n);
    let tinv: Vec<Polynomial> = (1..=l).map(t_inv).collect();
    let h = SeqFn::h_of(xs.clone());
    let top = (m + l) as i64;
    let mut nu = vec![0i64; l];
    loop {
        let d1 = PolyMatrix::from_fn(l, l, |i, j| eval_delta(&forward_inv(j + 1), &h, nu[i] - l as i64 + 1)).det()?;
        let d2 = PolyMatrix::from_fn(l, l, |i, j| hk((m + l) as i64 - nu[j] - i as i64 - 1, &tinv[..=i])).det()?;
        let sign = if ascents(&nu).is_multiple_of(2) { Polynomial::one() } else { Polynomial::int(-1) };
        let (w1, w2) = match sorted_minus_rho(&nu) {
            None => (Polynomial::zero(), Polynomial::zero()),
            Some(p) => {
                let s1 = schur_atoms(&p, &xs);
                let s2 = if p.contained_in(&Partition::rectangle(m, l)) {
                    skew_schur_atoms(&SkewShape::new(Partition::rectangle(m, l), p)?, &tinv)
                } else {
                    Polynomial::zero()
                };
                (&sign * s1, &sign * s2)
            }
        };
        if d1 != w1 || d2 != w2 {
            return Ok(false);
        }
        let mut k = 0;
        loop {
            if k == l {
                return Ok(true);
            }
            if nu[k] + 1 < top {
                nu[k] += 1;
                break;
            }
            nu[k] = 0;
            k += 1;
        }
    }
}

/// `Applied` re-export point for callers that want `Δ` images as sequences.
pub fn applied<'a>(word: DeltaWord, f: &'a dyn Seq) -> Applied<'a> {
    Applied { word, f }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial as p;
    use crate::shapes::part;
    use crate::symfunc::{skew_dual_grothendieck, SkewDualRoute};

    #[test]
    fn one_variable_lemma_sweep() {
        for l in 1..=3 {
            for lam in partitions_in_box(l, 3) {
                for mu in lam.subpartitions() {
                    assert!(verify_one_variable_lemma(&lam, &mu, l).unwrap(), "λ={lam} μ={mu}");
                }
            }
        }
        assert!(verify_one_variable_lemma(&part(&[3, 2, 1]), &part(&[2, 1]), 3).unwrap());
        assert!(verify_one_variable_lemma(&part(&[2, 2]), &part(&[2, 2]), 2).unwrap());
    }

    #[test]
    fn one_variable_lemma_is_the_skew_polynomial() {
        let x = Polynomial::x(1);
        for lam in partitions_in_box(3, 3) {
            for mu in lam.subpartitions() {
                let s = SkewShape::new(lam.clone(), mu.clone()).unwrap();
                assert_eq!(one_variable_det(&lam, &mu, 3, &x).unwrap(), skew_dual_grothendieck(&s, 1, SkewDualRoute::Rpp), "{s}");
            }
        }
    }

    #[test]
    fn one_variable_e_sweep() {
        for l in 1..=3 {
            for lam in partitions_in_box(l, 3) {
                if lam.len() < l {
                    continue;
                }
                for mu in lam.subpartitions() {
                    assert!(verify_one_variable_e(&lam, &mu, l).unwrap(), "λ={lam} μ={mu}");
                }
            }
        }
    }

    #[test]
    fn skew_determinants_match_rpp() {
        for lam in partitions_in_box(3, 3) {
            for mu in lam.subpartitions() {
                let s = SkewShape::new(lam.clone(), mu.clone()).unwrap();
                let want = skew_dual_grothendieck(&s, 2, SkewDualRoute::Rpp);
                assert_eq!(skew_jt_h(&s, 2).unwrap(), want, "h {s}");
                assert_eq!(skew_jt_e(&s, 2).unwrap(), want, "e {s}");
                assert_eq!(skew_delta_det(&s, 2).unwrap(), want, "Δ {s}");
            }
        }
    }

    #[test]
    fn skew_examples() {
        let s = SkewShape::straight(part(&[2, 1]));
        let g = dual_grothendieck(&part(&[2, 1]), &SymSpec::new(2, 2), DualRoute::JtH).unwrap();
        assert_eq!(skew_jt_h(&s, 2).unwrap(), g);
        let same = SkewShape::new(part(&[2, 1]), part(&[2, 1])).unwrap();
        assert!(skew_jt_h(&same, 2).unwrap().is_one());
        assert!(skew_jt_e(&same, 2).unwrap().is_one());
    }

    #[test]
    fn cdf_three_ways() {
        for (l, n, m) in [(1, 1, 2), (2, 2, 2), (2, 1, 1), (1, 2, 3), (2, 3, 1), (3, 2, 1)] {
            let oracle = lpp_cdf_schur_measure(l, n, m).unwrap();
            assert_eq!(lpp_cdf_det(l, n, m).unwrap(), oracle, "det ℓ={l} n={n} m={m}");
            assert_eq!(lpp_cdf_schur(l, n, m).unwrap(), oracle, "schur ℓ={l} n={n} m={m}");
        }
        assert_eq!(lpp_cdf_det(2, 2, 0).unwrap(), geometric_normalizer(2, 2));
    }

    #[test]
    fn cdf_single_row() {
        // ℓ = 1: Σ_k h_{m-k}(t_1) h_{m-k}(x) ∏(1 - t_1 x_j).
        let (n, m) = (2, 3);
        let mut want = Polynomial::zero();
        for k in 0..=m {
            want += hk(m - k, &[t(1)]) * hk(m - k, &x_atoms(n));
        }
        assert_eq!(lpp_cdf_det(1, n, m as usize).unwrap(), want * geometric_normalizer(1, n));
    }

    #[test]
    fn summation_and_cauchy_identities() {
        for (l, n, m) in [(1, 1, 2), (2, 2, 1), (2, 1, 2), (1, 3, 1), (3, 1, 1)] {
            assert!(verify_summation_identity(l, n, m).unwrap(), "sum ℓ={l} n={n} m={m}");
        }
        for (l, n, m) in [(1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 1, 2)] {
            assert!(verify_generalized_cauchy_det(l, n, m).unwrap(), "cauchy ℓ={l} n={n} m={m}");
        }
        let s = cauchy_sum(1, 1, 2);
        assert_eq!(s, p("1 + t1*x1 + t1^2*x1^2").unwrap());
    }

    #[test]
    fn expansion_determinant() {
        for l in 1..=3 {
            assert!(verify_expansion_det(l).unwrap(), "ℓ={l}");
        }
    }

    #[test]
    fn determinant_reductions() {
        assert!(verify_determinant_reductions(2, 2, 2).unwrap());
        assert!(verify_determinant_reductions(2, 3, 1).unwrap());
    }

    #[test]
    fn sign_of_worked_example() {
        // ν = (10, 2, 7) shifted by ℓ - 1 = 2 gives rows h_8, h_0, h_5: -s_{8,6,2}... after
        // sorting (8,5,0) + staircase; one ascent.
        assert_eq!(ascents(&[10, 2, 7]), 1);
        let nu = [10i64, 2, 7];
        let xs = x_atoms(3);
        let h = SeqFn::h_of(xs.clone());
        let d = PolyMatrix::from_fn(3, 3, |i, j| eval_delta(&forward_inv(j + 1), &h, nu[i] - 2)).det().unwrap();
        assert_eq!(d, -schur_atoms(&part(&[8, 6, 2]), &xs));
    }

    #[test]
    fn convolution_identity() {
        let f = SeqFn::v(Polynomial::x(1));
        let g = SeqFn::v(Polynomial::x(2));
        for l in 1..=2 {
            for lam in partitions_in_box(l, 2) {
                for mu in lam.subpartitions() {
                    assert!(verify_convolution(&f, &g, &lam, &mu, l).unwrap(), "λ={lam} μ={mu} ℓ={l}");
                }
            }
        }
        let h1 = SeqFn::h_of(x_atoms(1));
        let h2 = SeqFn::h_of(vec![Polynomial::x(2)]);
        assert!(verify_convolution(&h1, &h2, &part(&[2, 1]), &Partition::empty(), 2).unwrap());
    }

    #[test]
    fn chained_single_variables_give_two_variables() {
        // Σ_ν g_{ν}(x_1) g_{λ/ν}(x_2) through the one-variable determinants.
        let lam = part(&[2, 1]);
        let mut acc = Polynomial::zero();
        for nu in lam.subpartitions() {
            acc += one_variable_det(&nu, &Partition::empty(), 2, &Polynomial::x(1)).unwrap() * one_variable_det(&lam, &nu, 2, &Polynomial::x(2)).unwrap();
        }
        assert_eq!(acc, skew_delta_det(&SkewShape::straight(lam), 2).unwrap());
    }

    #[test]
    fn transition_versions_agree() {
        for (lam, mu) in [(part(&[2, 1]), Partition::empty()), (part(&[2, 2]), part(&[1])), (part(&[1]), Partition::empty())] {
            let h = transition_prob_det(&lam, &mu, 2, 2, DetVersion::H).unwrap();
            let e = transition_prob_det(&lam, &mu, 2, 2, DetVersion::E).unwrap();
            assert_eq!(h, e, "λ={lam} μ={mu}");
            let s = SkewShape::new(lam.clone(), mu.clone()).unwrap();
            let g = invert_t(&skew_dual_grothendieck(&s, 2, SkewDualRoute::Rpp), 2).unwrap();
            let shift: Vec<i64> = lam.padded(2).iter().zip(mu.padded(2)).map(|(a, b)| *a as i64 - b as i64).collect();
            assert_eq!(h, geometric_normalizer(2, 2) * t_power(&shift) * g);
        }
        let same = transition_prob_det(&part(&[1]), &part(&[1]), 1, 1, DetVersion::H).unwrap();
        assert_eq!(same, geometric_normalizer(1, 1));
    }
}
