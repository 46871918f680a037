use super::monomial::Monomial;
use super::poly::Polynomial;
use super::var::Var;
use crate::error::Error;

/// Newton divided difference `(p - s_i p) / (x_i - x_{i+1})`.
pub fn divided_difference(p: &Polynomial, i: u32) -> Result<Polynomial, Error> {
    let (a, b) = (Var::x(i), Var::x(i + 1));
    let num = p - &p.swap(a, b);
    num.div_binomial(a, b)
}

/// Applies `∂_{w_1} ∂_{w_2} ... ∂_{w_r}`; the rightmost operator acts first.
pub fn divided_difference_word(p: &Polynomial, word: &[u32]) -> Result<Polynomial, Error> {
    let mut acc = p.clone();
    for &i in word.iter().rev() {
        acc = divided_difference(&acc, i)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// A reduced word for the longest permutation of `S_n`: (1,2,1) for n = 3.
pub fn w0_word(n: usize) -> Vec<u32> {
    let mut w = Vec::new();
    for k in (1..n as u32).rev() {
        w.extend(1..=k);
    }
    w
}

/// `x^ρ = x1^{n-1} x2^{n-2} ... x_n^0`.
pub fn rho_monomial(n: usize) -> Monomial {
    Monomial::from_pairs((1..=n).map(|i| (Var::x(i as u32), (n - i) as i32)))
}

/// Isobaric symmetrizer `π_{w0} p = ∂_{w0}(x^ρ p)`.
pub fn pi_w0(p: &Polynomial, n: usize) -> Result<Polynomial, Error> {
    divided_difference_word(&p.mul_monomial(&rho_monomial(n)), &w0_word(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial as p;

    #[test]
    fn basic_values() {
        assert!(divided_difference(&Polynomial::x(1), 1).unwrap().is_one());
        assert!(divided_difference(&p("x1*x2").unwrap(), 1).unwrap().is_zero());
        assert_eq!(w0_word(3), vec![1, 2, 1]);
        assert_eq!(w0_word(4), vec![1, 2, 3, 1, 2, 1]);
    }

    #[test]
    fn pi_w0_of_one_is_one() {
        assert!(pi_w0(&Polynomial::one(), 4).unwrap().is_one());
    }
}
