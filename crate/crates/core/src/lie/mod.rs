//! Lie algebras by structure constants, their representations, and the
//! constructions (sums, semidirect products, Heisenberg and free nilpotent
//! radicals) used to build perfect algebras.

mod algebra;
mod construct;
mod representation;

pub use algebra::{
    center, derivation_constraints, derivation_defect, derivation_dim, derived_subalgebra, is_nilpotent, is_perfect,
    lower_central_series, nilpotency_class, LeviSplit, LieAlgebra, ValidationReport, Violation,
};
pub use construct::{
    direct_sum, free_nilpotent, heisenberg_from_symplectic, radical_sum, semidirect_by_derivations, semidirect_product,
};
pub use representation::Representation;

/// Errors from building algebras and representations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("invalid Lie algebra: {0}")]
    Validation(ValidationReport),
    #[error("expected {expected} action matrices, found {found}")]
    ActionCount { expected: usize, found: usize },
    #[error("action matrix {index} is not {dim}x{dim}")]
    ActionShape { index: usize, dim: usize },
    #[error("action is not a homomorphism on the pair (e_{}, e_{})", .i + 1, .j + 1)]
    RepresentationMismatch { i: usize, j: usize },
    #[error("representations act through different algebras")]
    AlgebraMismatch,
    #[error("action of e_{} is not a derivation: fails on (e_{}, e_{})", .element + 1, .pair.0 + 1, .pair.1 + 1)]
    NotADerivation { element: usize, pair: (usize, usize) },
    #[error("bilinear form is not invariant under e_{}", .element + 1)]
    NotInvariant { element: usize },
    #[error("bilinear form is not antisymmetric")]
    NotAntisymmetric,
    #[error("bilinear form is not {dim}x{dim}")]
    FormShape { dim: usize },
    #[error("free nilpotent algebras of class {0} are not supported (use 2 or 3)")]
    UnsupportedClass(usize),
    #[error("class 3 free nilpotent algebra needs 2 generators, got {0}")]
    UnsupportedRank(usize),
}

impl From<ValidationReport> for LieError {
    fn from(r: ValidationReport) -> Self {
        LieError::Validation(r)
    }
}
