//! Exact arithmetic for Witt vectors over semirings.
//!
//! The library implements, at desk scale and with exact integer arithmetic:
//!
//! * partitions and bounded partition windows ([`partitions`]);
//! * symmetric functions in the monomial and Schur bases, with products,
//!   coproducts and windowed plethysm ([`monomial`], [`schur`]);
//! * partition ideals and their primality ([`ideals`]);
//! * the big and Schur Witt vectors of the Boolean semiring ([`boolwitt`]);
//! * p-typical symmetric functions and p-typical Boolean Witt vectors
//!   ([`ptypical`]);
//! * total positivity of integer rational series, root certificates and the
//!   Boolean discrete invariant ([`totalpos`]);
//! * window-bounded homomorphism counting into ℕ/(n = n+1)
//!   ([`countability`]);
//! * the acceptance battery tying all of it together ([`acceptance`]).
//!
//! Everything that quantifies over the infinite set of partitions is
//! verified on explicit finite windows; the verdicts are labeled
//! accordingly and indeterminate answers are errors, never guesses.

pub mod error;
pub mod partitions;
pub mod monomial;
pub mod schur;
pub mod ideals;
pub mod boolwitt;
pub mod ptypical;
pub mod totalpos;
pub mod countability;
pub mod acceptance;

pub use error::{Result, WittError};
