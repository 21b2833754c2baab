//! Finite-support distributions over exact scalar semirings.
//!
//! `Dist<X, S>` is a finitely supported map from points of `X` to nonzero
//! scalars in `S`. Together with [`Dist::dirac`] and [`Dist::flatten`] it is
//! a commutative monad, and this crate exposes the structure that comes with
//! it: tensorial strengths and the two Fubini maps, the integration pairing
//! against test functions, reweighting by scalar functions, conditioning,
//! and a finite-difference calculus for distributions on the rational line.
//!
//! All arithmetic is exact. Every law in the crate is an equality of
//! canonical values, so it can be checked with `==`.
//!
//! ```
//! use fsdist_core::{line, Dist, Rational};
//!
//! let die: Dist<Rational> = Dist::uniform((1..=6).map(Rational::from_integer));
//! let two = line::convolve(&die, &die);
//! assert_eq!(two.weight(&Rational::from_integer(7)), Rational::new(1, 6));
//! ```

#![no_std]

extern crate alloc;

mod error;

pub mod dist;
pub mod line;
pub mod pairing;
pub mod probability;
pub mod quantities;
pub mod scalars;
pub mod space;
pub mod strength;

pub use dist::{Dist, Module, Tagged};
pub use error::Error;
pub use scalars::{Bool, Field, ParseRationalError, Rational, Ring, Semiring};
pub use space::{FiniteSpace, FunTable, TestFn};
