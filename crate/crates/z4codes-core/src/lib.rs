//! Linear codes over the ring `Z4 = Z/4Z` under the Lee metric.
//!
//! This crate is the computational kernel of the `z4codes` workspace. It is
//! `no_std` (with `alloc`) and has no runtime dependencies; everything in it
//! is exact integer arithmetic, suitable for exhaustive verification at desk
//! scale.
//!
//! The main layers, bottom up:
//!
//! * [`z4`] — the scalar ring `Z4` and the Lee weight `0,1,2,1`.
//! * [`vector`] — bit-packed vectors over `Z4` (two bits per entry, 32
//!   entries per `u64` word) and their binary Gray images, with branch-free
//!   word-parallel add/negate/scale, Lee weight, inner products, and the
//!   Gray isometry into `F2^{2n}`.
//! * [`matrix`] — generator matrices, column multiplicity profiles, and
//!   reduction to the block standard form
//!   `(I_{k1} A B1+2B2 ; 0 2I_{k2} 2D)` that exposes the code type
//!   `4^{k1} 2^{k2}`.
//! * [`code`] — codeword enumeration in a fixed mixed-radix order (with
//!   random access for deterministic work splitting), Lee weight
//!   distributions, minimum distance, and the dual code computed from the
//!   standard-form blocks.
//! * [`analysis`] — the Plotkin-type bound `|C|/(|C|-1) * n`, projectivity
//!   (by column criterion, cross-checked against dual enumeration), the
//!   classification of Plotkin-optimal two-weight projective codes, the
//!   binary two-weight parameter match of their Gray images, and Gray-image
//!   linearity testing.
//! * [`identities`] — an exact checker for the weight-sum identities that
//!   every generator matrix over `Z4` must satisfy.
//! * [`constructions`] — one-weight codes, the recursive two-weight family
//!   `Y_k`, the generic length-quadrupling/doubling augmentations, the
//!   parametric family built from `Y_t`, and one fixed length-14 example
//!   that is two-weight and projective but not Plotkin-optimal.
//! * [`graph`] — syndrome (coset) graphs as Cayley graphs on
//!   `Z4^{k1} x (2Z4)^{k2}`, with exact strong-regularity verification,
//!   integer spectra, and complete-multipartite recognition.
//!
//! All counting is done in integer types wide enough for the configured
//! enumeration caps (`u128` for cardinalities and multiplicities), and all
//! claimed parameter identities are checked exactly; when a computed result
//! contradicts a structural identity the library reports
//! [`Error::TheoremViolation`] rather than guessing.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod analysis;
pub mod code;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod identities;
pub mod matrix;
pub mod vector;
pub mod z4;

pub use code::{Code, WeightDistribution};
pub use error::{Error, Result};
pub use graph::{family_srg_claim, syndrome_graph, verify_srg, SrgClaim, SrgParams, SrgVerdict, SyndromeGraph};
pub use matrix::{GeneratorMatrix, MultiplicityProfile, StandardForm};
pub use vector::{BinaryVector, Z4Vector};
pub use z4::Z4;
