//! Chevalley–Eilenberg cochain complexes and their cohomology: direct Betti
//! numbers, invariant subcomplexes, and the `sl2` Hochschild–Serre
//! factorization of adjoint cohomology.

mod betti;
mod complex;
mod hochschild_serre;
mod invariant;
mod les;

pub use betti::{betti_numbers, betti_numbers_with, BettiRow, BettiTable, RankMethod, RankSource};
pub use complex::{ce_differential, cochain_dim, CochainSpace};
pub use hochschild_serre::{
    cross_validate_hochschild_serre, hochschild_serre_adjoint, sl2_factorization, HsComparison, Sl2Factorization,
    SL2_TRIVIAL_COHOMOLOGY,
};
pub use invariant::{invariant_cohomology, invariant_subspace, InvariantComplex, InvariantDegree, SAction};
pub use les::{les_report, LesReport, LesRow, OddSplitting};

use crate::lie::{center, derivation_dim, LieAlgebra, LieError};

/// Largest cochain space that will be materialized.
pub const COCHAIN_LIMIT: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("module does not act through this algebra")]
    ModuleMismatch,
    #[error("expected {expected}x{expected} matrices, found {rows}x{cols}")]
    DimensionMismatch { expected: usize, rows: usize, cols: usize },
    #[error("cochain space in degree {degree} has dimension {dim}, above the limit {limit}")]
    TooLarge { degree: usize, dim: usize, limit: usize },
    #[error("actions are incompatible at e_{} acting on radical basis element {}", .element + 1, .radical_basis + 1)]
    IncompatibleActions { element: usize, radical_basis: usize },
    #[error("algebra carries no Levi decomposition from its construction")]
    NotASemidirectProduct,
    #[error("the factorization is only available for an sl2 Levi factor")]
    UnsupportedLevi,
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// `dim Der(g) - dim ad(g)`, which equals `dim H^1(g, g)`.
pub fn outer_derivation_dim(g: &LieAlgebra) -> usize {
    derivation_dim(g) - (g.dim() - center(g).len())
}

#[cfg(test)]
mod tests;
