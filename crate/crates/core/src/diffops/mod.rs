//! Weighted difference operators on integer sequences and the determinant
//! identities they produce for skew dual Grothendieck polynomials and the
//! last-passage distribution function.

mod dets;
mod seq;

pub use dets::{
    applied, ascents, cdf_det, geometric_normalizer, invert_t, lpp_cdf_det, lpp_cdf_schur, lpp_cdf_schur_measure, one_variable_det, one_variable_e_det, one_variable_e_product, one_variable_product, skew_delta_det,
    skew_jt_e, skew_jt_h, t_power, transition_prob_det, verify_convolution, verify_determinant_reductions, verify_expansion_det, verify_generalized_cauchy_det, verify_one_variable_e, verify_one_variable_lemma,
    verify_summation_identity, DetVersion, MAX_L,
};
pub use seq::{eval_delta, eval_delta_direct, Applied, Convolution, DeltaWord, Direction, Seq, SeqAtom, SeqFn, SeqKind};
