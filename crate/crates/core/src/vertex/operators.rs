//! Monodromy row operators `A(z), B(z), C(z), D(z)` on `(C^2)^{⊗m}` and the
//! commutation relations they satisfy.
//!
//! Basis vectors are bit patterns with site 1 in the lowest bit. An operator
//! maps bottom labels to top labels of one row whose auxiliary line enters
//! on the left with `0` (A, C) or `1` (B, D) and leaves on the right with
//! `0` (A, B) or `1` (C, D). Products read right to left: in `X·Y` the row
//! `Y` sits below `X`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use super::model::row_matrix_entries;
use super::tables::{nilp, LMatrix};
use crate::algebra::{Monomial, Polynomial, Var};
use crate::error::Error;
use crate::shapes::Partition;

pub const MAX_SITES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpKind {
    A,
    B,
    C,
    D,
}

impl OpKind {
    /// Auxiliary labels `(left, right)`.
    fn aux(self) -> (u8, u8) {
        match self {
            OpKind::A => (0, 0),
            OpKind::B => (1, 0),
            OpKind::C => (0, 1),
            OpKind::D => (1, 1),
        }
    }
}

impl FromStr for OpKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<OpKind, Error> {
        match s {
            "A" | "a" => Ok(OpKind::A),
            "B" | "b" => Ok(OpKind::B),
            "C" | "c" => Ok(OpKind::C),
            "D" | "d" => Ok(OpKind::D),
            _ => Err(Error::Parse(format!("unknown operator {s:?}"))),
        }
    }
}

/// A vector in the quantum space: basis pattern to coefficient.
pub type StateVector = BTreeMap<u32, Polynomial>;

/// A sparse operator on `m` sites stored column by column; zero entries and
/// empty columns are never stored, so equality is matrix equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowOperator {
    pub m: usize,
    cols: BTreeMap<u32, StateVector>,
}

impl RowOperator {
    pub fn zero(m: usize) -> RowOperator {
        RowOperator { m, cols: BTreeMap::new() }
    }

    pub fn identity(m: usize) -> RowOperator {
        let cols = (0..1u32 << m).map(|b| (b, [(b, Polynomial::one())].into_iter().collect())).collect();
        RowOperator { m, cols }
    }

    /// Matrix entry `⟨out| X |in⟩`.
    pub fn entry(&self, out: u32, inp: u32) -> Polynomial {
        self.cols.get(&inp).and_then(|c| c.get(&out)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.values().all(|c| c.is_empty())
    }

    pub fn apply(&self, v: &StateVector) -> StateVector {
        let mut out = StateVector::new();
        for (b, c) in v {
            if let Some(col) = self.cols.get(b) {
                for (o, w) in col {
                    *out.entry(*o).or_default() += c * w;
                }
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// `self · other`: `other` acts first.
    pub fn compose(&self, other: &RowOperator) -> Result<RowOperator, Error> {
        if self.m != other.m {
            return Err(Error::ShapeMismatch(format!("operators on {} and {} sites", self.m, other.m)));
        }
        let cols = other.cols.iter().map(|(i, col)| (*i, self.apply(col))).filter(|(_, c)| !c.is_empty()).collect();
        Ok(RowOperator { m: self.m, cols })
    }

    pub fn scale(&self, c: &Polynomial) -> RowOperator {
        let cols = self
            .cols
            .iter()
            .map(|(i, col)| {
                let mut v: StateVector = col.iter().map(|(o, w)| (*o, w * c)).collect();
                v.retain(|_, p| !p.is_zero());
                (*i, v)
            })
            .filter(|(_, c)| !c.is_empty())
            .collect();
        RowOperator { m: self.m, cols }
    }

    pub fn add(&self, other: &RowOperator) -> Result<RowOperator, Error> {
        if self.m != other.m {
            return Err(Error::ShapeMismatch(format!("operators on {} and {} sites", self.m, other.m)));
        }
        let mut cols = self.cols.clone();
        for (i, col) in &other.cols {
            let tgt = cols.entry(*i).or_default();
            for (o, w) in col {
                *tgt.entry(*o).or_default() += w;
            }
            tgt.retain(|_, p| !p.is_zero());
        }
        cols.retain(|_, c| !c.is_empty());
        Ok(RowOperator { m: self.m, cols })
    }

    pub fn sub(&self, other: &RowOperator) -> Result<RowOperator, Error> {
        self.add(&other.scale(&Polynomial::int(-1)))
    }

    /// Simultaneous substitution in every entry.
    pub fn substitute(&self, b: &BTreeMap<Var, Polynomial>) -> Result<RowOperator, Error> {
        let mut cols = BTreeMap::new();
        for (i, col) in &self.cols {
            let mut v = StateVector::new();
            for (o, w) in col {
                let s = w.substitute(b)?;
                if !s.is_zero() {
                    v.insert(*o, s);
                }
            }
            if !v.is_empty() {
                cols.insert(*i, v);
            }
        }
        Ok(RowOperator { m: self.m, cols })
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .cols
            .iter()
            .flat_map(|(i, col)| col.iter().map(move |(o, w)| json!({"in": bits_string(*i, self.m), "out": bits_string(*o, self.m), "weight": w.to_json()})))
            .collect();
        json!({"sites": self.m, "entries": entries})
    }
}

impl fmt::Display for RowOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, col) in &self.cols {
            for (o, w) in col {
                writeln!(f, "{} -> {}: {w}", bits_string(*i, self.m), bits_string(*o, self.m))?;
            }
        }
        Ok(())
    }
}

/// Sites left to right, e.g. `110` for sites 1 and 2 occupied.
pub fn bits_string(b: u32, m: usize) -> String {
    (0..m).map(|i| if (b >> i) & 1 == 1 { '1' } else { '0' }).collect()
}

pub fn parse_bits(s: &str) -> Result<u32, Error> {
    let mut b = 0;
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '0' => {}
            '1' => b |= 1 << i,
            _ => return Err(Error::Parse(format!("basis label {s:?} must be a 01-string"))),
        }
    }
    Ok(b)
}

/// `X(z)` on `m` sites for the lattice-path L-matrix.
pub fn row_operator(kind: OpKind, z: &Polynomial, m: usize) -> Result<RowOperator, Error> {
    row_operator_with(&nilp(), kind, z, m, m)
}

/// `X(z)` built from `l` acting on the first `k` of `m` sites and as the
/// identity on the rest (a row shorter than the grid).
pub fn row_operator_with(l: &LMatrix, kind: OpKind, z: &Polynomial, k: usize, m: usize) -> Result<RowOperator, Error> {
    if m > MAX_SITES || k > m {
        return Err(Error::TooLarge(format!("operators on {k} of {m} sites (max {MAX_SITES})")));
    }
    let (left, right) = kind.aux();
    let mask = (1u32 << k) - 1;
    let mut cols = BTreeMap::new();
    for inp in 0..1u32 << m {
        let mut col = StateVector::new();
        for (top, w) in row_matrix_entries(l, z, k, left, right, inp & mask) {
            *col.entry(top | (inp & !mask)).or_default() += w;
        }
        col.retain(|_, p| !p.is_zero());
        if !col.is_empty() {
            cols.insert(inp, col);
        }
    }
    Ok(RowOperator { m, cols })
}

/// Product `ops[0] · ops[1] · ...`; the last operator acts first.
pub fn compose(ops: &[RowOperator]) -> Result<RowOperator, Error> {
    let Some(first) = ops.first() else {
        return Err(Error::InvalidArgument("empty operator product".into()));
    };
    let mut acc = first.clone();
    for op in &ops[1..] {
        acc = acc.compose(op)?;
    }
    Ok(acc)
}

pub fn apply_to_basis(op: &RowOperator, basis: u32) -> StateVector {
    op.apply(&[(basis, Polynomial::one())].into_iter().collect())
}

/// Positions `λ_j + ℓ - j + 1` (1-based) marked by the dual vector `(e_λ)^*`.
pub fn dual_basis(lambda: &Partition) -> u32 {
    let l = lambda.len();
    (1..=l).fold(0, |acc, j| acc | 1 << (lambda.part(j) + l - j))
}

/// `(e_λ)^* A_{λ_ℓ+1}(t_{ℓ-1}) ⋯ A_{λ_2+ℓ-1}(t_1) A(x_n) ⋯ A(x_1) (e)_ℓ`, the
/// operator form of the model `𝔑_λ`.
pub fn dual_g_pairing(lambda: &Partition, n: usize) -> Result<Polynomial, Error> {
    let l = lambda.len();
    let m = lambda.first() + l;
    let l_mat = nilp();
    let mut v: StateVector = [((1u32 << l) - 1, Polynomial::one())].into_iter().collect();
    for i in 1..=n {
        v = row_operator_with(&l_mat, OpKind::A, &Polynomial::x(i as u32), m, m)?.apply(&v);
    }
    for i in 1..l {
        v = row_operator_with(&l_mat, OpKind::A, &Polynomial::t(i as u32), lambda.part(i + 1) + l - i, m)?.apply(&v);
    }
    Ok(v.remove(&dual_basis(lambda)).unwrap_or_default())
}

/// `(e_λ)^* A_{λ_ℓ+1}(t_{ℓ-1}) ⋯ A_{λ_2+ℓ-1}(t_1) A(x_n)⋯A(x_{ℓ+1}) B(x_ℓ)⋯B(x_1) (e)_0`:
/// paths enter from the left instead of the bottom.
pub fn dual_g_pairing_left(lambda: &Partition, n: usize) -> Result<Polynomial, Error> {
    let l = lambda.len();
    if l > n {
        return Err(Error::InvalidArgument(format!("left-entry form needs ℓ(λ) <= n, got λ={lambda}, n={n}")));
    }
    let m = lambda.first() + l;
    let l_mat = nilp();
    let mut v: StateVector = [(0u32, Polynomial::one())].into_iter().collect();
    for i in 1..=n {
        let kind = if i <= l { OpKind::B } else { OpKind::A };
        v = row_operator_with(&l_mat, kind, &Polynomial::x(i as u32), m, m)?.apply(&v);
    }
    for i in 1..l {
        v = row_operator_with(&l_mat, OpKind::A, &Polynomial::t(i as u32), lambda.part(i + 1) + l - i, m)?.apply(&v);
    }
    Ok(v.remove(&dual_basis(lambda)).unwrap_or_default())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationFamily {
    /// A/B exchange relations and A-A, B-B commutation.
    AB,
    /// D/B exchange relations and D-D commutation.
    BD,
    /// Symmetry of the weighted product `Ã ⋯ Ã B ⋯ B`.
    ATildeSymmetry,
}

impl FromStr for RelationFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<RelationFamily, Error> {
        match s {
            "AB" | "ab" => Ok(RelationFamily::AB),
            "BD" | "bd" => Ok(RelationFamily::BD),
            "A-tilde-symmetry" | "atilde" | "a_tilde" => Ok(RelationFamily::ATildeSymmetry),
            _ => Err(Error::Parse(format!("unknown relation family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub family: String,
    pub m: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family,
            "sites": self.m,
            "holds": self.holds(),
            "checks": self.checks.iter().map(|c| json!({"relation": c.name, "holds": c.holds})).collect::<Vec<_>>(),
        })
    }
}

struct Ops {
    a: RowOperator,
    b: RowOperator,
    d: RowOperator,
}

fn ops_at(l: &LMatrix, z: &Polynomial, m: usize) -> Result<Ops, Error> {
    Ok(Ops {
        a: row_operator_with(l, OpKind::A, z, m, m)?,
        b: row_operator_with(l, OpKind::B, z, m, m)?,
        d: row_operator_with(l, OpKind::D, z, m, m)?,
    })
}

fn check(name: &str, lhs: Result<RowOperator, Error>, rhs: Result<RowOperator, Error>) -> Result<RelationCheck, Error> {
    Ok(RelationCheck { name: name.to_string(), holds: lhs? == rhs? })
}

/// Verifies one family of relations on `m` sites, each multiplied through by
/// its denominators; `l` is the L-matrix (normally [`nilp`]).
pub fn verify_operator_relations(family: RelationFamily, l: &LMatrix, m: usize) -> Result<RelationReport, Error> {
    if m > 5 {
        return Err(Error::TooLarge(format!("relation checks run on at most 5 sites, got {m}")));
    }
    let zi = Polynomial::var(Var::z(1));
    let zj = Polynomial::var(Var::z(2));
    let oi = ops_at(l, &zi, m)?;
    let oj = ops_at(l, &zj, m)?;
    let mut checks = Vec::new();
    match family {
        RelationFamily::AB => {
            checks.push(check(
                "(z_j - z_i) A(z_i)B(z_j) = z_j B(z_j)A(z_i) - z_j B(z_i)A(z_j)",
                oi.a.compose(&oj.b).map(|p| p.scale(&(&zj - &zi))),
                oj.b.compose(&oi.a)?.sub(&oi.b.compose(&oj.a)?).map(|p| p.scale(&zj)),
            )?);
            checks.push(check("z_j A(z_j)B(z_i) = z_i A(z_i)B(z_j)", oj.a.compose(&oi.b).map(|p| p.scale(&zj)), oi.a.compose(&oj.b).map(|p| p.scale(&zi)))?);
            checks.push(check("z_j B(z_j)B(z_i) = z_i B(z_i)B(z_j)", oj.b.compose(&oi.b).map(|p| p.scale(&zj)), oi.b.compose(&oj.b).map(|p| p.scale(&zi)))?);
            checks.push(check("A(z_j)A(z_i) = A(z_i)A(z_j)", oj.a.compose(&oi.a), oi.a.compose(&oj.a))?);
        }
        RelationFamily::BD => {
            checks.push(check(
                "(z_i - z_j) D(z_i)B(z_j) = z_j B(z_j)D(z_i) - z_j B(z_i)D(z_j)",
                oi.d.compose(&oj.b).map(|p| p.scale(&(&zi - &zj))),
                oj.b.compose(&oi.d)?.sub(&oi.b.compose(&oj.d)?).map(|p| p.scale(&zj)),
            )?);
            checks.push(check("z_j D(z_j)B(z_i) = z_i D(z_i)B(z_j)", oj.d.compose(&oi.b).map(|p| p.scale(&zj)), oi.d.compose(&oj.b).map(|p| p.scale(&zi)))?);
            checks.push(check("z_j B(z_j)B(z_i) = z_i B(z_i)B(z_j)", oj.b.compose(&oi.b).map(|p| p.scale(&zj)), oi.b.compose(&oj.b).map(|p| p.scale(&zi)))?);
            checks.push(check("D(z_j)D(z_i) = D(z_i)D(z_j)", oj.d.compose(&oi.d), oi.d.compose(&oj.d))?);
        }
        RelationFamily::ATildeSymmetry => {
            for (nb, na) in [(2, 1), (1, 2), (2, 2)] {
                let total = nb + na;
                let prod = tilde_product(l, nb, na, m)?;
                for k in 1..total as u32 {
                    let swap: BTreeMap<Var, Polynomial> = [(Var::z(k), Polynomial::var(Var::z(k + 1))), (Var::z(k + 1), Polynomial::var(Var::z(k)))].into_iter().collect();
                    let name = format!("ℓ={nb}, {na} extra A: invariant under z{k} <-> z{}", k + 1);
                    checks.push(RelationCheck { name, holds: prod.substitute(&swap)? == prod });
                }
            }
        }
    }
    let family = match family {
        RelationFamily::AB => "AB",
        RelationFamily::BD => "BD",
        RelationFamily::ATildeSymmetry => "A-tilde-symmetry",
    };
    Ok(RelationReport { family: family.to_string(), m, checks })
}

/// `∏_{j>ℓ} z_j ∏_{i<ℓ} z_i^{i-ℓ} A(z_{ℓ+k}) ⋯ A(z_{ℓ+1}) B(z_ℓ) ⋯ B(z_1)`.
pub fn tilde_product(l_mat: &LMatrix, l: usize, k: usize, m: usize) -> Result<RowOperator, Error> {
    let mut ops = Vec::with_capacity(l + k);
    for j in (l + 1..=l + k).rev() {
        ops.push(row_operator_with(l_mat, OpKind::A, &Polynomial::z(j as u32), m, m)?);
    }
    for i in (1..=l).rev() {
        ops.push(row_operator_with(l_mat, OpKind::B, &Polynomial::z(i as u32), m, m)?);
    }
    let pre = Monomial::from_pairs((l + 1..=l + k).map(|j| (Var::z(j as u32), 1)).chain((1..l).map(|i| (Var::z(i as u32), i as i32 - l as i32))));
    Ok(compose(&ops)?.scale(&Polynomial::monomial(pre)))
}
