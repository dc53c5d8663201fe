//! Linear algebra over GF(2) in dimension 8.
//!
//! [`GfVector`] and [`GfMatrix`] are byte-packed; [`Flat`] keeps a canonical
//! echelon basis so flats compare by value. [`Bits256`] is the shared 256-bit
//! mask used for point sets, polynomial coefficients and wide linear solves.

mod bits;
mod flat;
mod matrix;
mod pointset;
mod vector;

pub use bits::{null_space, rank, Bits256};
pub use flat::{flats_of_dimension, gaussian_binomial, Flat};
pub use matrix::GfMatrix;
pub use pointset::PointSet;
pub use vector::{parse_point, GfVector};

/// Rank of a list of vectors.
pub fn rank_of(vectors: impl IntoIterator<Item = GfVector>) -> usize {
    Flat::span_vectors(vectors).rank()
}

/// Span of a list of projective points.
pub fn span(points: &[GfVector]) -> crate::Result<Flat> {
    Flat::span(points)
}
