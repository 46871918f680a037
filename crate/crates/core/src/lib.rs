//! Refined Grothendieck and dual Grothendieck polynomials computed through
//! combinatorial, determinantal, vertex-model, difference-operator and
//! probabilistic routes, all in exact arithmetic.

pub mod algebra;
pub mod bijections;
pub mod diffops;
pub mod error;
pub mod lpp;
pub mod parallel;
pub mod shapes;
pub mod suite;
pub mod symfunc;
pub mod tableaux;
pub mod vertex;

pub use algebra::{Monomial, PolyMatrix, Polynomial, Rational, Var};
pub use error::{Error, Result};
pub use shapes::{BoxedPartition, Partition, SkewShape};
