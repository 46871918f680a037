//! Schur expansions `Σ c_μ s_μ(x)` with coefficients free of `x`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::schur::{schur, SchurRoute};
use crate::algebra::{Family, Monomial, Polynomial};
use crate::error::Error;
use crate::shapes::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, Polynomial>,
}

fn split_x(m: &Monomial, n: usize) -> Result<(Vec<i32>, Monomial), Error> {
    let mut xs = vec![0; n];
    let mut rest = Vec::new();
    for &(v, e) in m.exps() {
        if v.family == Family::X {
            let i = v.index as usize;
            if i > n || e < 0 {
                return Err(Error::InvalidArgument(format!("{v}^{e} outside x_1..x_{n}")));
            }
            xs[i - 1] = e;
        } else {
            rest.push((v, e));
        }
    }
    Ok((xs, Monomial::from_pairs(rest)))
}

impl SchurExpansion {
    pub fn new() -> SchurExpansion {
        SchurExpansion::default()
    }

    /// Adds `c · s_μ`.
    pub fn add(&mut self, mu: Partition, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mu.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mu);
        }
    }

    /// Expands a polynomial symmetric in `x_1..x_n` by repeatedly peeling off
    /// the lexicographically leading `x`-exponent.
    pub fn from_polynomial(p: &Polynomial, n: usize) -> Result<SchurExpansion, Error> {
        let mut out = SchurExpansion::new();
        let mut rem = p.clone();
        while !rem.is_zero() {
            let mut lead: Option<Vec<i32>> = None;
            for (m, _) in rem.iter() {
                let (xs, _) = split_x(m, n)?;
                if lead.as_ref().is_none_or(|l| xs > *l) {
                    lead = Some(xs);
                }
            }
            let lead = lead.unwrap();
            if lead.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidArgument("polynomial is not symmetric in x".into()));
            }
            let mut c = Polynomial::zero();
            for (m, k) in rem.iter() {
                let (xs, r) = split_x(m, n)?;
                if xs == lead {
                    c += Polynomial::term(r, k.clone());
                }
            }
            let mu = Partition::new(lead.iter().map(|&e| e as usize).collect())?;
            let s = schur(&mu, n, SchurRoute::JacobiTrudi);
            rem -= &c * &s;
            out.add(mu, c);
        }
        Ok(out)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Polynomial> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition) -> Polynomial {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Rebuilds `Σ c_μ s_μ(x_1..x_n)`.
    pub fn to_polynomial(&self, n: usize) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (mu, c) in &self.terms {
            acc += c * &schur(mu, n, SchurRoute::JacobiTrudi);
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(mu, c)| json!({"shape": mu.parts(), "coeff": c.to_json()})).collect())
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (mu, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "s[{mu}]")?;
            } else {
                write!(f, "({c})*s[{mu}]")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::part;

    #[test]
    fn round_trip() {
        let mut e = SchurExpansion::new();
        e.add(part(&[2, 1]), Polynomial::one());
        e.add(part(&[2, 2]), -Polynomial::t(1));
        e.add(part(&[1]), Polynomial::t(2));
        let p = e.to_polynomial(3);
        assert_eq!(SchurExpansion::from_polynomial(&p, 3).unwrap(), e);
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(SchurExpansion::from_polynomial(&Polynomial::x(2), 2).is_err());
    }
}
