//! Vertex models: L/R weight tables, RLL checks, jagged-grid partition
//! functions and the monodromy row operators `A, B, C, D`.

mod builders;
mod model;
mod operators;
mod tables;

pub use builders::{alt_fermionic, beta_model, dual_g_model, g_model};
pub use model::{JaggedModel, Row, MAX_ROWS, MAX_ROW_LEN};
pub use tables::{check_ybe, check_ybe_mixed, fermionic, fermionic_r, jagged, jagged_r, mixed_r, nilp, nilp_r, LMatrix, RMatrix, YbeMismatch, YbeReport, ZI, ZJ};
pub use operators::{apply_to_basis, bits_string, compose, dual_basis, dual_g_pairing, dual_g_pairing_left, parse_bits, row_operator, row_operator_with, tilde_product, verify_operator_relations, OpKind, RelationCheck, RelationFamily, RelationReport, RowOperator, StateVector, MAX_SITES};

#[cfg(test)]
mod tests;
