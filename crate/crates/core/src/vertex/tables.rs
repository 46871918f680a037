//! Boltzmann weight tables and a symbolic checker for the RLL relation.
//!
//! An L-vertex is keyed by its half-edge labels `[left, bottom, top, right]`;
//! for the right-moving models this is `(aux_in, q_in, q_out, aux_out)`. The
//! weights are polynomials in the formal spectral symbol `z1`.
//!
//! An R-vertex is keyed by `[in_i, in_j, out_i, out_j]`, where `i` and `j`
//! name the two auxiliary lines carrying `z_i = z1` and `z_j = z2`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{Polynomial, Var};

/// The formal spectral symbol of an L-matrix and the first one of an R-matrix.
pub const ZI: Var = Var::z(1);
/// The second spectral symbol of an R-matrix.
pub const ZJ: Var = Var::z(2);

fn zi() -> Polynomial {
    Polynomial::var(ZI)
}

fn zj() -> Polynomial {
    Polynomial::var(ZJ)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LMatrix {
    pub name: String,
    weights: BTreeMap<[u8; 4], Polynomial>,
}

impl LMatrix {
    pub fn new(name: &str, entries: impl IntoIterator<Item = ([u8; 4], Polynomial)>) -> LMatrix {
        let weights = entries.into_iter().filter(|(_, w)| !w.is_zero()).collect();
        LMatrix { name: name.to_string(), weights }
    }

    /// Weight of `[left, bottom, top, right]`, zero when absent.
    pub fn weight(&self, key: [u8; 4]) -> Polynomial {
        self.weights.get(&key).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<[u8; 4], Polynomial> {
        &self.weights
    }

    /// The table with `z1` replaced by `z`.
    pub fn at(&self, z: &Polynomial) -> LMatrix {
        let b: BTreeMap<Var, Polynomial> = [(ZI, z.clone())].into_iter().collect();
        LMatrix {
            name: self.name.clone(),
            weights: self.weights.iter().map(|(k, w)| (*k, w.substitute(&b).expect("polynomial substitution"))).collect(),
        }
    }

    /// Dense lookup table indexed by `left, bottom, top, right`.
    pub(crate) fn dense(&self, z: &Polynomial) -> [[[[Option<Polynomial>; 2]; 2]; 2]; 2] {
        let mut out: [[[[Option<Polynomial>; 2]; 2]; 2]; 2] = Default::default();
        for (k, w) in self.at(z).weights {
            out[k[0] as usize][k[1] as usize][k[2] as usize][k[3] as usize] = Some(w);
        }
        out
    }

    /// Replaces one weight, for building negative controls.
    pub fn with_weight(&self, key: [u8; 4], w: Polynomial) -> LMatrix {
        let mut out = self.clone();
        out.name = format!("{} (modified)", self.name);
        if w.is_zero() {
            out.weights.remove(&key);
        } else {
            out.weights.insert(key, w);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "weights": self.weights.iter().map(|(k, w)| json!({"left": k[0], "bottom": k[1], "top": k[2], "right": k[3], "weight": w.to_json()})).collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    pub name: String,
    weights: BTreeMap<[u8; 4], Polynomial>,
}

impl RMatrix {
    pub fn new(name: &str, entries: impl IntoIterator<Item = ([u8; 4], Polynomial)>) -> RMatrix {
        let weights = entries.into_iter().filter(|(_, w)| !w.is_zero()).collect();
        RMatrix { name: name.to_string(), weights }
    }

    /// Weight of `[in_i, in_j, out_i, out_j]`.
    pub fn weight(&self, key: [u8; 4]) -> Polynomial {
        self.weights.get(&key).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<[u8; 4], Polynomial> {
        &self.weights
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "weights": self.weights.iter().map(|(k, w)| json!({"in_i": k[0], "in_j": k[1], "out_i": k[2], "out_j": k[3], "weight": w.to_json()})).collect::<Vec<_>>(),
        })
    }
}

/// Table entries are written in the drawing order `(top, right, bottom, left)`.
fn drawn(top: u8, right: u8, bottom: u8, left: u8) -> [u8; 4] {
    [left, bottom, top, right]
}

// The three R tables are drawn with different orientations; each helper
// reads the drawn labels `(p1, p2, p3, p4)` into `[in_i, in_j, out_i, out_j]`.

fn drawn_r(p1: u8, p2: u8, p3: u8, p4: u8) -> [u8; 4] {
    [p4, p1, p2, p3]
}

fn drawn_r_mirrored(p1: u8, p2: u8, p3: u8, p4: u8) -> [u8; 4] {
    [p1, p4, p3, p2]
}

fn drawn_r_mixed(p1: u8, p2: u8, p3: u8, p4: u8) -> [u8; 4] {
    [p4, p3, p2, p1]
}

/// Modified fermionic five-vertex L-matrix with parameter `β`.
pub fn fermionic(beta: &Polynomial) -> LMatrix {
    LMatrix::new(
        "fermionic",
        [
            (drawn(0, 0, 0, 0), Polynomial::one()),
            (drawn(1, 1, 1, 1), Polynomial::one()),
            (drawn(0, 1, 0, 1), zi()),
            (drawn(1, 0, 0, 1), Polynomial::one()),
            (drawn(0, 1, 1, 0), Polynomial::one() + beta * &zi()),
        ],
    )
}

/// R-matrix intertwining two fermionic rows.
pub fn fermionic_r(beta: &Polynomial) -> RMatrix {
    let bi = Polynomial::one() + beta * &zi();
    let bj = Polynomial::one() + beta * &zj();
    RMatrix::new(
        "fermionic",
        [
            (drawn_r(0, 0, 0, 0), bi.clone()),
            (drawn_r(1, 1, 1, 1), bi.clone()),
            (drawn_r(1, 0, 1, 0), zj() - zi()),
            (drawn_r(1, 1, 0, 0), bi),
            (drawn_r(0, 0, 1, 1), bj),
        ],
    )
}

/// L-matrix of the lattice-path model: paths move up and right, east steps weigh `z`.
pub fn nilp() -> LMatrix {
    LMatrix::new(
        "nilp",
        [
            (drawn(0, 0, 0, 0), Polynomial::one()),
            (drawn(1, 0, 1, 0), Polynomial::one()),
            (drawn(0, 1, 0, 1), zi()),
            (drawn(1, 0, 0, 1), zi()),
            (drawn(0, 1, 1, 0), Polynomial::one()),
        ],
    )
}

pub fn nilp_r() -> RMatrix {
    RMatrix::new(
        "nilp",
        [
            (drawn_r(0, 0, 0, 0), zj()),
            (drawn_r(1, 0, 1, 0), zj() - zi()),
            (drawn_r(0, 0, 1, 1), zi()),
            (drawn_r(1, 1, 0, 0), zj()),
            (drawn_r(1, 1, 1, 1), zi()),
        ],
    )
}

/// Jagged-part L-matrix for `G_λ`: paths move up and left, touching at
/// corners is allowed and each flat step is weighted at its left end.
pub fn jagged() -> LMatrix {
    LMatrix::new(
        "jagged",
        [
            (drawn(0, 0, 0, 0), Polynomial::one()),
            (drawn(1, 1, 1, 1), zi()),
            (drawn(1, 0, 1, 0), Polynomial::one()),
            (drawn(0, 0, 1, 1), Polynomial::one()),
            (drawn(1, 1, 0, 0), zi()),
        ],
    )
}

pub fn jagged_r() -> RMatrix {
    RMatrix::new(
        "jagged",
        [
            (drawn_r_mirrored(0, 0, 0, 0), zj()),
            (drawn_r_mirrored(1, 1, 1, 1), zi()),
            (drawn_r_mirrored(0, 1, 0, 1), zj() - zi()),
            (drawn_r_mirrored(1, 1, 0, 0), zj()),
            (drawn_r_mirrored(0, 0, 1, 1), zi()),
        ],
    )
}

/// R-matrix for a lattice-path row (`z_i`) crossing a jagged row (`z_j`).
pub fn mixed_r() -> RMatrix {
    RMatrix::new(
        "jagged-nilp",
        [
            (drawn_r_mixed(0, 0, 0, 0), Polynomial::one()),
            (drawn_r_mixed(1, 1, 1, 1), Polynomial::int(-1)),
            (drawn_r_mixed(1, 0, 1, 0), Polynomial::one()),
            (drawn_r_mixed(0, 1, 0, 1), zi() * zj() + Polynomial::one()),
            (drawn_r_mixed(1, 1, 0, 0), zj()),
            (drawn_r_mixed(0, 0, 1, 1), zi()),
        ],
    )
}

/// Boundary labels `(a, b, c, d, e, f)` of one RLL configuration: `f` and `a`
/// enter on the left (lines `i` and `j`), `e` enters at the bottom of the
/// quantum line and `b` leaves at its top, `c` and `d` leave on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeMismatch {
    pub labels: [u8; 6],
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

impl fmt::Display for YbeMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.labels;
        write!(f, "a={a} b={b} c={c} d={d} e={e} f={g}: {} != {}", self.lhs, self.rhs)
    }
}

/// Outcome of an RLL check over all 64 boundary labelings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeReport {
    pub holds: bool,
    /// Every labeling in order, with both sides.
    pub cases: Vec<YbeMismatch>,
}

impl YbeReport {
    pub fn counterexample(&self) -> Option<&YbeMismatch> {
        self.cases.iter().find(|c| c.lhs != c.rhs)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds,
            "cases": self.cases.iter().map(|c| json!({
                "labels": {"a": c.labels[0], "b": c.labels[1], "c": c.labels[2], "d": c.labels[3], "e": c.labels[4], "f": c.labels[5]},
                "lhs": c.lhs.to_json(),
                "rhs": c.rhs.to_json(),
                "pass": c.lhs == c.rhs,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Checks the RLL relation with the same L-matrix on both lines.
pub fn check_ybe(l: &LMatrix, r: &RMatrix) -> YbeReport {
    check_ybe_mixed(l, l, r)
}

/// Checks
/// `Σ R(f,a→p,q) L_j(q,e,r,d) L_i(p,r,b,c) = Σ L_i(f,e,r,p) L_j(a,r,b,q) R(p,q→c,d)`
/// where `L_i` carries `z_i` and `L_j` carries `z_j`.
pub fn check_ybe_mixed(l_i: &LMatrix, l_j: &LMatrix, r: &RMatrix) -> YbeReport {
    let li = l_i.at(&zi());
    let lj = l_j.at(&zj());
    let bits = [0u8, 1];
    let mut cases = Vec::with_capacity(64);
    for code in 0..64u8 {
        let lab: [u8; 6] = std::array::from_fn(|k| (code >> (5 - k)) & 1);
        let [a, b, c, d, e, f] = lab;
        let mut lhs = Polynomial::zero();
        let mut rhs = Polynomial::zero();
        for &p in &bits {
            for &q in &bits {
                for &s in &bits {
                    let w = r.weight([f, a, p, q]);
                    if !w.is_zero() {
                        let t = &w * &lj.weight([q, e, s, d]) * &li.weight([p, s, b, c]);
                        lhs += t;
                    }
                    let w = r.weight([p, q, c, d]);
                    if !w.is_zero() {
                        let t = &li.weight([f, e, s, p]) * &lj.weight([a, s, b, q]) * &w;
                        rhs += t;
                    }
                }
            }
        }
        cases.push(YbeMismatch { labels: lab, lhs, rhs });
    }
    YbeReport { holds: cases.iter().all(|c| c.lhs == c.rhs), cases }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_tables_are_integrable() {
        let beta = Polynomial::var(Var::beta());
        assert!(check_ybe(&fermionic(&beta), &fermionic_r(&beta)).holds);
        assert!(check_ybe(&nilp(), &nilp_r()).holds);
        assert!(check_ybe(&jagged(), &jagged_r()).holds);
        assert!(check_ybe_mixed(&nilp(), &jagged(), &mixed_r()).holds);
    }
}
