//! Exact computations in finite Coxeter groups and their Hecke algebras:
//! Kazhdan–Lusztig bases, cells and the a-function, the asymptotic ring J,
//! the nonabelian Fourier transform, and mirror-recursion characters for
//! modular SL2.

pub mod cells;
pub mod coxeter;
pub mod error;
pub mod fourier;
pub mod hecke;
pub mod poly;
pub mod sl2;

pub use error::{Error, Result};
