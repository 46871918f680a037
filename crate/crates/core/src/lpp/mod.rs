//! Last-passage percolation with independent geometric weights: the exact law
//! of the last-passage vector, brute-force and Monte Carlo checks, transition
//! probabilities, the Schur measure and the exclusion-process picture.
//!
//! Matrices are indexed from the bottom-left corner. The parameter `t_a`
//! multiplies the weights of printed row `a` (row `ℓ + 1 - a` from the
//! bottom), the row whose last-passage time is `λ_a`.

mod exact;
mod matrix;
mod sample;
mod tasep;

pub use exact::{
    cdf_comparison, chain_prob, exact_prob, exact_prob_bruteforce, exact_prob_bruteforce_from, exact_prob_from, matrix_prob, prob_polynomial, schur_measure, transition_prob, transition_step, verify_schur_measure_cdf,
    CdfComparison, BRUTE_MAX_CELLS, BRUTE_MAX_PART,
};
pub use matrix::{last_passage, last_passage_table, GVector, GeomParams, LppMatrix};
pub use sample::{monte_carlo, monte_carlo_threads, sample, MonteCarlo, CHUNK};
pub use tasep::{blocking_schedule, simulate, tasep_check, Block, TasepReport, TasepRun};

#[cfg(test)]
mod tests;
