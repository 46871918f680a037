//! Integer-indexed sequences with a lower support bound, weighted difference
//! operators `Δ_t f(ν) = f(ν+1) - t f(ν)`, their inverses
//! `Δ_t^{-1} f(ν) = Σ_{μ<ν} t^{ν-1-μ} f(μ)`, and convolution.

use crate::algebra::{ek, h_table, hk};
use crate::algebra::Polynomial;

/// A sequence `ℤ → R` vanishing below [`Seq::lower_bound`].
pub trait Seq {
    fn lower_bound(&self) -> i64;
    fn eval(&self, nu: i64) -> Polynomial;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqKind {
    /// `h_ν` of the atoms.
    HofX(Vec<Polynomial>),
    /// `x^ν H(ν)`.
    VSingle(Polynomial),
    /// `x^ν E(ν)` with `E` the indicator of `{0, 1}`.
    EShort(Polynomial),
    /// `e_ν` of the atoms.
    EofX(Vec<Polynomial>),
    /// `j_t(ν) = t^{ν-1} H(ν-1)`.
    Jump(Polynomial),
}

impl SeqKind {
    fn lower(&self) -> i64 {
        match self {
            SeqKind::Jump(_) => 1,
            _ => 0,
        }
    }

    fn at(&self, nu: i64) -> Polynomial {
        if nu < self.lower() {
            return Polynomial::zero();
        }
        match self {
            SeqKind::HofX(a) => hk(nu, a),
            SeqKind::VSingle(x) => x.pow(nu as u32),
            SeqKind::EShort(x) => {
                if nu <= 1 {
                    x.pow(nu as u32)
                } else {
                    Polynomial::zero()
                }
            }
            SeqKind::EofX(a) => ek(nu, a),
            SeqKind::Jump(t) => t.pow(nu as u32 - 1),
        }
    }
}

/// `coeff · kind(ν + shift)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqAtom {
    pub kind: SeqKind,
    pub shift: i64,
    pub coeff: Polynomial,
}

/// A finite linear combination of [`SeqAtom`]s.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeqFn {
    pub atoms: Vec<SeqAtom>,
}

impl SeqFn {
    pub fn atom(kind: SeqKind) -> SeqFn {
        SeqFn { atoms: vec![SeqAtom { kind, shift: 0, coeff: Polynomial::one() }] }
    }

    pub fn h_of(atoms: Vec<Polynomial>) -> SeqFn {
        SeqFn::atom(SeqKind::HofX(atoms))
    }

    pub fn e_of(atoms: Vec<Polynomial>) -> SeqFn {
        SeqFn::atom(SeqKind::EofX(atoms))
    }

    pub fn v(x: Polynomial) -> SeqFn {
        SeqFn::atom(SeqKind::VSingle(x))
    }

    pub fn e_short(x: Polynomial) -> SeqFn {
        SeqFn::atom(SeqKind::EShort(x))
    }

    pub fn jump(t: Polynomial) -> SeqFn {
        SeqFn::atom(SeqKind::Jump(t))
    }

    /// `ν ↦ f(ν + k)`.
    pub fn shifted(&self, k: i64) -> SeqFn {
        let atoms = self.atoms.iter().map(|a| SeqAtom { shift: a.shift + k, ..a.clone() }).collect();
        SeqFn { atoms }
    }

    pub fn scaled(&self, c: &Polynomial) -> SeqFn {
        let atoms = self.atoms.iter().map(|a| SeqAtom { coeff: &a.coeff * c, ..a.clone() }).collect();
        SeqFn { atoms }
    }

    pub fn plus(&self, other: &SeqFn) -> SeqFn {
        SeqFn { atoms: self.atoms.iter().chain(&other.atoms).cloned().collect() }
    }
}

impl Seq for SeqFn {
    fn lower_bound(&self) -> i64 {
        self.atoms.iter().map(|a| a.kind.lower() - a.shift).min().unwrap_or(0)
    }

    fn eval(&self, nu: i64) -> Polynomial {
        let mut acc = Polynomial::zero();
        for a in &self.atoms {
            let v = a.kind.at(nu + a.shift);
            if !v.is_zero() {
                acc += &a.coeff * &v;
            }
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// An ordered product of weighted difference operators, outermost first.
/// The operators commute, so the order only matters for the direct
/// evaluation route.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DeltaWord {
    pub ops: Vec<(Polynomial, Direction)>,
}

impl DeltaWord {
    pub fn identity() -> DeltaWord {
        DeltaWord::default()
    }

    pub fn forward(ws: impl IntoIterator<Item = Polynomial>) -> DeltaWord {
        DeltaWord { ops: ws.into_iter().map(|w| (w, Direction::Forward)).collect() }
    }

    pub fn inverse(ws: impl IntoIterator<Item = Polynomial>) -> DeltaWord {
        DeltaWord { ops: ws.into_iter().map(|w| (w, Direction::Inverse)).collect() }
    }

    /// The multiple operator `Δ^{j-i}` for 1-based indices: `Δ_{w_i} ⋯ Δ_{w_{j-1}}`
    /// when `j ≥ i`, else `Δ_{w_j}^{-1} ⋯ Δ_{w_{i-1}}^{-1}`. It depends on `i`
    /// and `j`, not only on the difference.
    pub fn between(i: usize, j: usize, w: impl Fn(usize) -> Polynomial) -> DeltaWord {
        if j >= i {
            DeltaWord::forward((i..j).map(&w))
        } else {
            DeltaWord::inverse((j..i).map(&w))
        }
    }

    /// `Δ^{b-a}` on an index interval: forward over `w_a .. w_{b-1}` when
    /// `b ≥ a`, else inverse over `w_b .. w_{a-1}`. `between(i, j)` is
    /// `interval(i, j)`; the shifted form is used with `a = μ_j + 1, b = λ_i`.
    pub fn interval(a: i64, b: i64, w: impl Fn(i64) -> Polynomial) -> DeltaWord {
        if b >= a {
            DeltaWord::forward((a..b).map(&w))
        } else {
            DeltaWord::inverse((b..a).map(&w))
        }
    }

    pub fn then(mut self, other: DeltaWord) -> DeltaWord {
        self.ops.extend(other.ops);
        self
    }

    fn split(&self) -> (Vec<Polynomial>, Vec<Polynomial>) {
        let mut f = Vec::new();
        let mut i = Vec::new();
        for (w, d) in &self.ops {
            match d {
                Direction::Forward => f.push(w.clone()),
                Direction::Inverse => i.push(w.clone()),
            }
        }
        (f, i)
    }

    /// Lower support bound of `word f` given that of `f`.
    pub fn lower_bound_after(&self, lower: i64) -> i64 {
        let (f, i) = self.split();
        lower - f.len() as i64 + i.len() as i64
    }
}

/// `(word f)(ν)` from the closed forms
/// `Δ_{t_1}⋯Δ_{t_k} f(ν) = Σ_a e_a(-t) f(ν+k-a)` and
/// `Δ_{t_1}^{-1}⋯Δ_{t_k}^{-1} f(ν) = Σ_b h_b(t) f(ν-k-b)`, the `h`-sum cut
/// off by the support of `f`.
pub fn eval_delta(word: &DeltaWord, f: &dyn Seq, nu: i64) -> Polynomial {
    let (fw, inv) = word.split();
    let low = f.lower_bound();
    let neg: Vec<Polynomial> = fw.iter().map(|t| -t).collect();
    let base = nu + fw.len() as i64 - inv.len() as i64;
    let bmax = base - low;
    if bmax < 0 {
        return Polynomial::zero();
    }
    let h = h_table(bmax as usize, &inv);
    let mut acc = Polynomial::zero();
    for a in 0..=fw.len() as i64 {
        let ea = ek(a, &neg);
        if ea.is_zero() {
            continue;
        }
        for b in 0..=(base - a - low) {
            let v = f.eval(base - a - b);
            if !v.is_zero() {
                acc += &ea * &h[b as usize] * v;
            }
        }
    }
    acc
}

/// `(word f)(ν)` straight from the definitions, one operator at a time.
pub fn eval_delta_direct(word: &DeltaWord, f: &dyn Seq, nu: i64) -> Polynomial {
    fn go(ops: &[(Polynomial, Direction)], f: &dyn Seq, nu: i64) -> Polynomial {
        let Some(((t, d), rest)) = ops.split_first() else {
            return f.eval(nu);
        };
        match d {
            Direction::Forward => go(rest, f, nu + 1) - t * go(rest, f, nu),
            Direction::Inverse => {
                let low = DeltaWord { ops: rest.to_vec() }.lower_bound_after(f.lower_bound());
                let mut acc = Polynomial::zero();
                for mu in low..nu {
                    let v = go(rest, f, mu);
                    if !v.is_zero() {
                        acc += t.pow((nu - 1 - mu) as u32) * v;
                    }
                }
                acc
            }
        }
    }
    go(&word.ops, f, nu)
}

/// `word f` as a sequence in its own right.
pub struct Applied<'a> {
    pub word: DeltaWord,
    pub f: &'a dyn Seq,
}

impl Seq for Applied<'_> {
    fn lower_bound(&self) -> i64 {
        self.word.lower_bound_after(self.f.lower_bound())
    }

    fn eval(&self, nu: i64) -> Polynomial {
        eval_delta(&self.word, self.f, nu)
    }
}

/// `(f * g)(ν) = Σ_ξ f(ν - ξ) g(ξ)`.
pub struct Convolution<'a> {
    pub f: &'a dyn Seq,
    pub g: &'a dyn Seq,
}

impl Seq for Convolution<'_> {
    fn lower_bound(&self) -> i64 {
        self.f.lower_bound() + self.g.lower_bound()
    }

    fn eval(&self, nu: i64) -> Polynomial {
        let mut acc = Polynomial::zero();
        for xi in self.g.lower_bound()..=nu - self.f.lower_bound() {
            let a = self.f.eval(nu - xi);
            if a.is_zero() {
                continue;
            }
            acc += a * self.g.eval(xi);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial as p;
    use crate::algebra::x_atoms;

    fn t(i: u32) -> Polynomial {
        Polynomial::t(i)
    }

    #[test]
    fn inverse_on_h_one_variable() {
        let f = SeqFn::h_of(x_atoms(1));
        let w = DeltaWord::inverse([t(1)]);
        // Σ_{μ<ν} t^{ν-1-μ} h_μ: three terms first appear at ν = 3.
        assert_eq!(eval_delta(&w, &f, 2), p("x1 + t1").unwrap());
        assert_eq!(eval_delta(&w, &f, 3), p("x1^2 + t1*x1 + t1^2").unwrap());
        assert_eq!(eval_delta_direct(&w, &f, 3), p("x1^2 + t1*x1 + t1^2").unwrap());
    }

    #[test]
    fn inverse_pairs_cancel() {
        let f = SeqFn::h_of(x_atoms(2));
        for nu in -3..=6 {
            let fi = DeltaWord::forward([t(1)]).then(DeltaWord::inverse([t(1)]));
            let if_ = DeltaWord::inverse([t(1)]).then(DeltaWord::forward([t(1)]));
            assert_eq!(eval_delta_direct(&fi, &f, nu), f.eval(nu), "ν={nu}");
            assert_eq!(eval_delta_direct(&if_, &f, nu), f.eval(nu), "ν={nu}");
            assert_eq!(eval_delta(&fi, &f, nu), f.eval(nu));
        }
    }

    #[test]
    fn operators_commute() {
        let f = SeqFn::h_of(x_atoms(2));
        for nu in -3..=6 {
            let a = DeltaWord::forward([t(1), t(2)]);
            let b = DeltaWord::forward([t(2), t(1)]);
            assert_eq!(eval_delta_direct(&a, &f, nu), eval_delta_direct(&b, &f, nu));
            let c = DeltaWord::forward([t(1)]).then(DeltaWord::inverse([t(2)]));
            let d = DeltaWord::inverse([t(2)]).then(DeltaWord::forward([t(1)]));
            assert_eq!(eval_delta_direct(&c, &f, nu), eval_delta_direct(&d, &f, nu));
        }
    }

    #[test]
    fn closed_forms_match_definitions() {
        let xs = x_atoms(2);
        let seqs = [SeqFn::h_of(xs.clone()), SeqFn::e_of(xs.clone()), SeqFn::v(Polynomial::x(1)), SeqFn::e_short(Polynomial::x(1)).shifted(-1)];
        let words = [
            DeltaWord::forward([t(1), t(2), t(3)]),
            DeltaWord::inverse([t(1), t(2)]),
            DeltaWord::forward([t(1)]).then(DeltaWord::inverse([t(2), t(3)])),
            DeltaWord::identity(),
        ];
        for f in &seqs {
            for w in &words {
                for nu in -3..=5 {
                    assert_eq!(eval_delta(w, f, nu), eval_delta_direct(w, f, nu), "{w:?} ν={nu}");
                }
            }
        }
    }

    #[test]
    fn inverse_is_convolution_with_jump() {
        let f = SeqFn::h_of(x_atoms(2));
        let j = SeqFn::jump(t(1));
        let c = Convolution { f: &j, g: &f };
        for nu in -2..=5 {
            assert_eq!(c.eval(nu), eval_delta(&DeltaWord::inverse([t(1)]), &f, nu));
        }
    }

    #[test]
    fn convolution_of_single_variables_is_h() {
        let f1 = SeqFn::v(Polynomial::x(1));
        let f2 = SeqFn::v(Polynomial::x(2));
        let c = Convolution { f: &f1, g: &f2 };
        for nu in -1..=4 {
            assert_eq!(c.eval(nu), hk(nu, &x_atoms(2)));
        }
        let e1 = SeqFn::e_short(Polynomial::x(1));
        let e2 = SeqFn::e_short(Polynomial::x(2));
        let c = Convolution { f: &e1, g: &e2 };
        for nu in -1..=3 {
            assert_eq!(c.eval(nu), ek(nu, &x_atoms(2)));
        }
    }

    #[test]
    fn inverse_on_v_closed_form() {
        // Δ_t^{-1} v(k) = t^{k-1} (1 - t^{-k} x^k) / (1 - t^{-1} x), i.e.
        // (t - x) Δ_t^{-1} v(k) = t^k - x^k for k ≥ 0.
        let x = Polynomial::x(1);
        let v = SeqFn::v(x.clone());
        for k in 0..5 {
            let lhs = (t(1) - &x) * eval_delta(&DeltaWord::inverse([t(1)]), &v, k);
            assert_eq!(lhs, t(1).pow(k as u32) - x.pow(k as u32));
        }
    }
}
