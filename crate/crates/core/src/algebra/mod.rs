//! Exact Laurent-polynomial arithmetic over big rationals, polynomial
//! matrices, symmetric-polynomial generators and divided differences.

mod divided;
mod matrix;
mod monomial;
mod parse;
mod poly;
mod symmetric;
mod var;

pub use divided::{divided_difference, divided_difference_word, pi_w0, rho_monomial, w0_word};
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use poly::{parse_rational, rational_string, Polynomial};
pub use symmetric::{ek, gen_series_coeff, h_table, hk, t_atoms, x_atoms};
pub use var::{Family, Var};

pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
