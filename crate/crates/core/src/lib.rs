//! Exact computations around the Segre variety S(1,1,1) over GF(2).
//!
//! The 27 decomposable tensors of `V2 ⊗ V2 ⊗ V2` form a point set in PG(7,2).
//! This crate builds that set and its attributes, its stabilizer and related
//! matrix groups, the orbit structure of PG(7,2) under them, the invariant
//! 85-line spread, and every invariant polynomial of degree below 8.
//! Each claimed count, order or polynomial identity can be re-derived through
//! [`verify`].
//!
//! Coordinates are always taken in the basis `e1..e8` where
//! `e1 = E000, e2 = E100, e3 = E110, e4 = E010, e5 = E101, e6 = E001,
//! e7 = E011, e8 = E111`.

pub mod anf;
pub mod error;
pub mod export;
pub mod gf2;
pub mod groups;

pub mod orbits;
pub mod report;
pub mod segre;
pub mod verify;

pub use error::{Error, Result};
pub use gf2::{Flat, GfMatrix, GfVector, PointSet};
