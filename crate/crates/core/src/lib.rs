//! Exact computations around Dade groups of finite groups: Burnside rings, superclass
//! functions, Borel-Smith and Artin conditions, modular representations, join
//! complexes and rational characters.
//!
//! Everything is exact. Modular arithmetic is over a prime field, lattices use
//! arbitrary-precision integers, and characters take values in cyclotomic fields.

#![no_std]
extern crate alloc;

pub mod bitset;
pub mod burnside;
pub mod cfun;
pub mod conditions;
pub mod cyclo;
pub mod dade;
pub mod error;
pub mod fp;
pub mod grp;
pub mod intmat;
pub mod modrep;
pub mod moore;
pub mod perm;
pub mod qmat;
pub mod repchar;

pub use error::{Error, Result};
