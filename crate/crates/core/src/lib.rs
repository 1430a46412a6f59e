//! Exact computation of generic initial ideals and the invariants that can be
//! read off them: axial constants, sectional regularity, generic annihilator
//! numbers, partial-degree bounds and s-reduction numbers.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: coefficients
//! live in ℚ (arbitrary precision) or in a prime field 𝔽ₚ.
//!
//! Variables are written x₁ > x₂ > … > x_d. Functions that take a variable
//! index as a mathematical parameter (`colon_by_variable`, `pure_power_degree`,
//! …) use 1-based indices; raw exponent vectors are 0-based.
#![no_std]

extern crate alloc;

pub mod asymptotics;
mod error;
mod extnat;
pub mod field;
pub mod gin;
pub mod groebner;
pub mod invariants;
pub mod monideal;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod seed;

pub use error::{Error, Result};
pub use extnat::ExtNat;
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use monideal::MonomialIdeal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{LinearChange, PolyRing, Polynomial};
