//! Operations on hypermaps through the outer automorphism groups of the
//! triangle reflection group and its even subgroup, identified with
//! PGL2(Z) and GL2(Z).
//!
//! The crate covers five layers:
//!
//! - [`gl2`]: exact 2x2 integer matrices and conjugacy classification of
//!   periodic elements in GL2(Z) and PGL2(Z).
//! - [`genwords`]: the word calculus in the generators X, Y, T, with the
//!   unique canonical form `+-w(X,Y) T^eta`, row reduction from matrices
//!   to words, and word-level order/conjugacy tests.
//! - [`freegroup`]: the automorphism atlas of the free group on rho2,
//!   rho0 and of the reflection group on r0, r1, r2, with restriction and
//!   extension between the two.
//! - [`hypermap`]: oriented and unoriented hypermaps as transitive
//!   permutation representations, operation application, isomorphism,
//!   reflexibility and the flag double cover.
//! - [`regular`] and [`chirality`]: orientably regular hypermaps over a
//!   finite group, census of generating-pair classes, operation orbits,
//!   and generalized chirality groups with their invariant covers and
//!   quotients.
//!
//! Runnable walkthroughs for each capability live in `examples/`; the
//! `hyperops` binary exposes the same functionality as subcommands.

pub mod chirality;
pub mod cli;
pub mod freegroup;
pub mod genwords;
pub mod gl2;
pub mod hypermap;
pub mod perm;
pub mod regular;

pub use genwords::{canonical_form, eval_word, normalize, word_class, GenWord};
pub use gl2::{classify_gl, classify_pgl, mat_mul, ClassLabel, Mat2};
pub use hypermap::{AnyMap, MapInfo, OMap, UMap};
pub use perm::Perm;
pub use regular::{cayley, enumerate_classes, operation_orbits, FinGroup, GenPair};
