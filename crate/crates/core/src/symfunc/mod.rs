//! Schur-type polynomials, refined (dual) Grothendieck polynomials through
//! all their routes, the coefficient families relating them, and exact
//! verifiers for the identities they satisfy.

mod coeffs;
mod dual;
mod expansion;
mod groth;
pub mod identities;
mod schur;

pub use coeffs::{big_e_coeff, big_e_coeff_neg, e_coeff, p_coeff_det, p_coeff_tableau, t_alphabet};
pub use dual::{dual_grothendieck, skew_dual_grothendieck, skew_one_variable, DualRoute, SkewDualRoute};
pub use expansion::SchurExpansion;
pub use groth::{beta_grothendieck, grothendieck, grothendieck_at_zero, grothendieck_schur_expansion, GrothRoute};
pub use identities::{acceptance_suite, verify_identity, Identity, IdentityReport};
pub use schur::{flagged_schur, multi_schur, schur, schur_atoms, skew_schur, skew_schur_atoms, SchurRoute};

use serde::{Deserialize, Serialize};

/// Variable counts: `x_1..x_n` and `t_1..t_{t_count}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymSpec {
    pub n: usize,
    pub t_count: usize,
}

impl SymSpec {
    pub fn new(n: usize, t_count: usize) -> SymSpec {
        SymSpec { n, t_count }
    }
}

/// Schur expansion of `g_λ` in `n` variables: `Σ_{μ⊆λ} e_λ^μ(t) s_μ`.
pub fn dual_grothendieck_schur_expansion(lambda: &crate::shapes::Partition, n: usize) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for mu in lambda.subpartitions() {
        if mu.len() <= n {
            out.add(mu.clone(), e_coeff(lambda, &mu));
        }
    }
    out
}
