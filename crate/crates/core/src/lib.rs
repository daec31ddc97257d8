//! Exact Hoeffding decompositions of symmetric statistics of sampling
//! without replacement, and the two-row Specht modules that realise the
//! symmetric Hoeffding spaces as irreducible `S_n`-representations.
//!
//! All arithmetic is exact over the rationals.
//!
//! ```
//! use hoeffspecht::algebra::{integer, ModuleVector};
//! use hoeffspecht::hoeffding::decompose;
//!
//! // a statistic of 3 draws from [6]
//! let h = ModuleVector::from_fn(6, 3, |k| integer(k.iter().sum::<usize>() as i64)).unwrap();
//! let d = decompose(&h).unwrap();
//! assert_eq!(d.reconstruct(), h);
//! // a sum of single-draw terms lives entirely in the first Hoeffding space
//! assert!(d.component(2).is_zero() && d.component(3).is_zero());
//! ```

pub mod algebra;
pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod format;
pub mod hoeffding;
pub mod specht;
pub mod verify;

pub use error::{Error, Result};
