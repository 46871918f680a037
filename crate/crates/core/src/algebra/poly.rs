use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use super::monomial::Monomial;
use super::var::{Family, Var};
use super::Rational;
use crate::error::Error;

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by graded-lex ordered monomials, so the
/// representation is canonical: equal values have equal term maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Polynomial {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn int(c: i64) -> Polynomial {
        Polynomial::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Polynomial {
        Polynomial::term(Monomial::var(v), Rational::one())
    }

    pub fn var_pow(v: Var, e: i32) -> Polynomial {
        Polynomial::term(Monomial::pow_of(v, e), Rational::one())
    }

    pub fn monomial(m: Monomial) -> Polynomial {
        Polynomial::term(m, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn x(i: u32) -> Polynomial {
        Polynomial::var(Var::x(i))
    }
    pub fn t(i: u32) -> Polynomial {
        Polynomial::var(Var::t(i))
    }
    pub fn y(i: u32) -> Polynomial {
        Polynomial::var(Var::y(i))
    }
    pub fn z(i: u32) -> Polynomial {
        Polynomial::var(Var::z(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&Monomial::one()).is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    /// Returns `Some(c)` if the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Returns the sole term if the polynomial is a single term.
    pub fn as_term(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.exps().iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power, allowing negative exponents for single-term polynomials.
    pub fn powi(&self, k: i32) -> Result<Polynomial, Error> {
        if k >= 0 {
            return Ok(self.pow(k as u32));
        }
        let inv = self.inverse()?;
        Ok(inv.pow((-k) as u32))
    }

    /// Inverse of a single nonzero term.
    pub fn inverse(&self) -> Result<Polynomial, Error> {
        match self.as_term() {
            Some((m, c)) => Ok(Polynomial::term(m.inverse(), c.recip())),
            None if self.is_zero() => Err(Error::DivisionByZero),
            None => Err(Error::NotInvertible(self.to_string())),
        }
    }

    pub fn product<'a, I: IntoIterator<Item = &'a Polynomial>>(it: I) -> Polynomial {
        let mut acc = Polynomial::one();
        for p in it {
            acc = &acc * p;
        }
        acc
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a Polynomial>>(it: I) -> Polynomial {
        let mut acc = Polynomial::zero();
        for p in it {
            acc += p;
        }
        acc
    }

    /// Simultaneous substitution of variables by polynomials.
    ///
    /// A negative exponent requires the bound value to be a single nonzero term.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Polynomial>) -> Result<Polynomial, Error> {
        let mut cache: HashMap<(Var, i32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Polynomial::constant(c.clone());
            for &(v, e) in m.exps() {
                match bindings.get(&v) {
                    None => kept.push((v, e)),
                    Some(val) => {
                        let p = match cache.get(&(v, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = val.powi(e)?;
                                cache.insert((v, e), p.clone());
                                p
                            }
                        };
                        factor = &factor * &p;
                    }
                }
            }
            out += &factor.mul_monomial(&Monomial::from_pairs(kept));
        }
        Ok(out)
    }

    /// Substitution by rational values.
    pub fn substitute_values(&self, values: &BTreeMap<Var, Rational>) -> Result<Polynomial, Error> {
        let b: BTreeMap<Var, Polynomial> = values.iter().map(|(v, r)| (*v, Polynomial::constant(r.clone()))).collect();
        self.substitute(&b)
    }

    /// Evaluates to a rational number; every variable must be bound.
    pub fn eval(&self, values: &BTreeMap<Var, Rational>) -> Result<Rational, Error> {
        let p = self.substitute_values(values)?;
        p.as_constant().ok_or_else(|| Error::Unbound(p.variables().iter().map(|v| v.to_string()).collect()))
    }

    /// Renames variables through an injective map (e.g. a transposition).
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.rename(&f), c.clone());
        }
        out
    }

    /// Swaps two variables.
    pub fn swap(&self, a: Var, b: Var) -> Polynomial {
        self.rename(|v| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        })
    }

    /// Keeps only terms satisfying the predicate.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Multiplies `a` and `b`, discarding terms whose degree in `family` exceeds `max`.
    pub fn mul_truncated(a: &Polynomial, b: &Polynomial, family: Family, max: i64) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &a.terms {
            let da = ma.family_degree(family);
            if da > max {
                continue;
            }
            for (mb, cb) in &b.terms {
                if da + mb.family_degree(family) > max {
                    continue;
                }
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Polynomial::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Rational>) -> Polynomial {
        Polynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Smallest and largest exponent of `v` over all terms (0 if absent everywhere).
    pub fn exponent_range(&self, v: Var) -> (i32, i32) {
        let mut lo = i32::MAX;
        let mut hi = i32::MIN;
        for m in self.terms.keys() {
            let e = m.exponent(v);
            lo = lo.min(e);
            hi = hi.max(e);
        }
        if self.terms.is_empty() {
            (0, 0)
        } else {
            (lo, hi)
        }
    }

    /// True when no variable appears with a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.exps().iter().all(|p| p.1 >= 0))
    }

    /// Exact division by the binomial `a - b`.
    ///
    /// Synthetic division in `a`; the result is an error if the remainder is nonzero.
    pub fn div_binomial(&self, a: Var, b: Var) -> Result<Polynomial, Error> {
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let mut by_power: BTreeMap<i32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(a);
            by_power.entry(e).or_insert_with(Polynomial::zero).add_term(rest, c.clone());
        }
        let lo = *by_power.keys().next().unwrap();
        let hi = *by_power.keys().next_back().unwrap();
        let bp = Polynomial::var(b);
        // Coefficients c_k of a^k, k = lo..=hi; quotient q_{k-1} = c_k + b q_k.
        let mut q: BTreeMap<i32, Polynomial> = BTreeMap::new();
        let mut carry = Polynomial::zero();
        for k in (lo + 1..=hi).rev() {
            let ck = by_power.get(&k).cloned().unwrap_or_default();
            let qk = &ck + &(&bp * &carry);
            q.insert(k - 1, qk.clone());
            carry = qk;
        }
        let c_lo = by_power.get(&lo).cloned().unwrap_or_default();
        let rem = &c_lo + &(&bp * &carry);
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!("({self}) / ({a} - {b})")));
        }
        let mut out = Polynomial::zero();
        for (k, qk) in q {
            out += &qk.mul_monomial(&Monomial::pow_of(a, k));
        }
        Ok(out)
    }

    /// Canonical JSON: terms in descending graded-lex order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.iter()
                .map(|(m, c)| {
                    let mut exps = Map::new();
                    for (v, e) in m.exps() {
                        exps.insert(v.to_string(), json!(e));
                    }
                    json!({ "coeff": rational_string(c), "exps": Value::Object(exps) })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Polynomial, Error> {
        let bad = |s: &str| Error::Parse(format!("polynomial JSON: {s}"));
        let arr = v.as_array().ok_or_else(|| bad("expected array"))?;
        let mut out = Polynomial::zero();
        for t in arr {
            let c = t.get("coeff").and_then(|c| c.as_str()).ok_or_else(|| bad("missing coeff"))?;
            let c = parse_rational(c)?;
            let exps = t.get("exps").and_then(|e| e.as_object()).ok_or_else(|| bad("missing exps"))?;
            let mut pairs = Vec::new();
            for (k, e) in exps {
                let v: Var = k.parse()?;
                let e = e.as_i64().ok_or_else(|| bad("exponent not an integer"))?;
                pairs.push((v, e as i32));
            }
            out.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(out)
    }
}

/// Formats a rational as `p/q`, or `p` when the denominator is 1.
pub fn rational_string(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `p/q` or `p` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&rational_string(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational_string(&a))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> AddAssign<&'a Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &'a Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<'a> SubAssign<&'a Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &'a Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl<'a> Mul<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Polynomial::from_map(acc)
    }
}

impl<'a> MulAssign<&'a Polynomial> for Polynomial {
    fn mul_assign(&mut self, rhs: &'a Polynomial) {
        *self = &*self * rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        *self += &rhs;
    }
}

impl SubAssign<Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: Polynomial) {
        *self -= &rhs;
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Polynomial {
        Polynomial::var(v)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Polynomial {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Polynomial {
        Polynomial::int(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x1() -> Polynomial {
        Polynomial::x(1)
    }
    fn t1() -> Polynomial {
        Polynomial::t(1)
    }

    #[test]
    fn difference_of_squares() {
        let p = (x1() + t1()) * (x1() - t1());
        assert_eq!(p, x1().pow(2) - t1().pow(2));
    }

    #[test]
    fn additive_identity() {
        let p = x1() * t1() + Polynomial::int(3);
        assert_eq!(&p + &Polynomial::zero(), p);
    }

    #[test]
    fn laurent_cancellation() {
        let p = x1() * t1().powi(-1).unwrap();
        assert_eq!(p * t1(), x1());
    }

    #[test]
    fn substitute_inverse_and_zero() {
        let mut b = BTreeMap::new();
        b.insert(Var::t(1), Polynomial::one());
        assert_eq!((x1().pow(2) * t1()).substitute(&b).unwrap(), x1().pow(2));

        let mut b = BTreeMap::new();
        b.insert(Var::t(1), Polynomial::var_pow(Var::t(1), -1));
        b.insert(Var::t(2), Polynomial::var_pow(Var::t(2), -1));
        let p = t1() * Polynomial::t(2);
        let want = Polynomial::monomial(Monomial::from_pairs([(Var::t(1), -1), (Var::t(2), -1)]));
        assert_eq!(p.substitute(&b).unwrap(), want);

        let mut b = BTreeMap::new();
        b.insert(Var::t(1), Polynomial::zero());
        assert!(matches!(t1().powi(-1).unwrap().substitute(&b), Err(Error::DivisionByZero)));
    }

    #[test]
    fn binomial_division() {
        let x2 = Polynomial::x(2);
        let p = x1().pow(3) - x2.pow(3);
        let q = p.div_binomial(Var::x(1), Var::x(2)).unwrap();
        assert_eq!(q, x1().pow(2) + &x1() * &x2 + x2.pow(2));
        assert!(x1().div_binomial(Var::x(1), Var::x(2)).is_err());
        let lp = (x1() - x2.clone()) * x1().powi(-2).unwrap();
        assert_eq!(lp.div_binomial(Var::x(1), Var::x(2)).unwrap(), x1().powi(-2).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let p = x1().pow(2) * t1().powi(-1).unwrap() - Polynomial::constant(Rational::new(3.into(), 2.into()));
        let j = p.to_json();
        assert_eq!(j.to_string(), r#"[{"coeff":"1","exps":{"t1":-1,"x1":2}},{"coeff":"-3/2","exps":{}}]"#);
        assert_eq!(Polynomial::from_json(&j).unwrap(), p);
    }
}
