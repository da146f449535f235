//! Exact spin character theory for the double covers S̃_n and Ã_n.
//!
//! The crate computes, with exact cyclotomic arithmetic, the eigenvalue
//! spectra and minimal polynomials of every conjugacy class in every
//! irreducible spin representation, together with the closed-form
//! classification of which classes fail to have the maximal number of
//! distinct eigenvalues.
//!
//! Layering, bottom-up: [`exactnum`] (scalars) → [`partitions`] →
//! [`qtableaux`] (Schur Q-functions, shifted LR coefficients) →
//! [`covergroup`] (Clifford model of S̃_n) → [`spinchars`] (character
//! tables) → [`minpoly`] (spectra, classifiers, verification sweep).
//!
//! The crate is `no_std` + `alloc` with the default `std` feature disabled.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod covergroup;
pub mod exactnum;
pub mod minpoly;
pub mod partitions;
pub mod qtableaux;
pub mod spinchars;

pub use error::{Error, Result};
