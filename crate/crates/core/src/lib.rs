//! Computational group theory for checking π-maximality and
//! π-submaximality claims on explicit finite groups.
//!
//! The crate is organised bottom-up:
//!
//! - [`permcore`]: permutations, stabilizer chains, subgroup constructions.
//! - [`f2lin`]: GF(2) vectors and matrices, `GL₃(2)`.
//! - [`presentations`]: words, finite presentations, Todd–Coxeter.
//! - [`extensions`]: affine groups, wreath products, extensions of a module
//!   by a presented group, and automorphisms built from 1-cocycles.
//! - [`pisub`]: π-subgroups, π-maximality, maximal π-overgroup ascent and the
//!   non-submaximality pipeline for extensions of `F₂³` by `GL₃(2)`.
//! - [`scenarios`]: named verification runs and their reports.
#![forbid(unsafe_code)]

pub mod error;
pub mod extensions;
pub mod f2lin;
pub mod permcore;
pub mod pisub;
pub mod presentations;
pub mod scenarios;

pub use error::{Error, Result};
pub use permcore::{PermGroup, Permutation};
