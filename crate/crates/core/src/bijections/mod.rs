//! Bijections between matrices, reverse plane partitions, set-valued and
//! semistandard tableaux: RSK, the map `Φ` to last-passage matrices,
//! uncrowding, inflation by jeu de taquin, and `ψ` from GT patterns with a
//! fixed left edge to elegant tableaux.

mod jdt;
mod phi;
mod psi;
mod rsk;
mod uncrowd;

pub use jdt::{deflate, deflate_traced, inflate, rectify, CornerOrder, Deflation};
pub use phi::{phi, phi_inverse};
pub use psi::{left_edge, psi, psi_inverse};
pub use rsk::{rsk, rsk_inverse, BiWord};
pub use uncrowd::{crowd, uncrowd, UncrowdResult};

#[cfg(test)]
mod tests;
