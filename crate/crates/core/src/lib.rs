//! Local h-polynomials and local gamma-vectors of cluster subdivisions of
//! simplices, with the combinatorial models behind them: noncrossing
//! partitions of types A and B, and permutation statistics for the
//! barycentric subdivision.

pub mod error;
pub mod localh;
pub mod noncrossing;
pub mod permutations;
pub mod polynomial;
pub mod reference;
pub mod rootsystems;

pub use error::{Error, Result};
pub use localh::{LocalHResult, Source};
pub use noncrossing::{SetPartitionA, SetPartitionB};
pub use permutations::{Perm, PermStats};
pub use polynomial::{gamma_compose, gamma_decompose, GammaVector, IntPoly, TruncSeries};
pub use rootsystems::{CartanType, DynkinDiagram, ParabolicDecomposition};
