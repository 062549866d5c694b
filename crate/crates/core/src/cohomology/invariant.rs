use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::betti::{assemble, BettiTable, RankSource};
use super::complex::{cochain_action, differential};
use super::CohomologyError;
use crate::lie::{derivation_defect, LieAlgebra, Representation};
use crate::linalg::{self, kernel_basis, SparseMatrix, Subspace};

/// Joint kernel of square matrices of size `dim`. Kernels are intersected one
/// matrix at a time, sparsest first, each restricted to the previous kernel.
pub fn invariant_subspace(dim: usize, actions: &[SparseMatrix]) -> Result<Subspace, CohomologyError> {
    if let Some(a) = actions.iter().find(|a| a.rows() != dim || a.cols() != dim) {
        return Err(CohomologyError::DimensionMismatch { expected: dim, rows: a.rows(), cols: a.cols() });
    }
    let mut order: Vec<&SparseMatrix> = actions.iter().collect();
    order.sort_by_key(|a| a.nnz());
    // columns of `basis` span the current joint kernel; `None` means everything
    let mut basis: Option<SparseMatrix> = None;
    for a in order {
        let restricted = match &basis {
            None => a.clone(),
            Some(b) => a.mul(b),
        };
        let kernel = kernel_basis(&restricted);
        let coords = SparseMatrix::from_columns(restricted.cols(), &kernel);
        basis = Some(match basis {
            None => coords,
            Some(b) => b.mul(&coords),
        });
        if kernel.is_empty() {
            break;
        }
    }
    match basis {
        None => Ok(Subspace::full(dim)),
        Some(b) => {
            let vectors: Vec<_> = (0..b.cols()).map(|c| b.column(c)).collect();
            Ok(Subspace::span(dim, &vectors))
        }
    }
}

/// The action of a semisimple algebra `s` on a radical `n` (by derivations)
/// and on a coefficient module `W` of `n`.
#[derive(Debug, Clone)]
pub struct SAction {
    pub on_radical: Representation,
    pub on_module: Representation,
}

impl SAction {
    /// Checks that `s` acts on `n` by derivations and that `W` is an
    /// `s ⋉ n`-module: `[σ(x), ρ(y)] = ρ(D_x y)`.
    pub fn check(&self, n: &LieAlgebra, module: &Representation) -> Result<(), CohomologyError> {
        if self.on_radical.algebra() != self.on_module.algebra()
            || self.on_radical.dim() != n.dim()
            || self.on_module.dim() != module.dim()
            || module.algebra() != n
        {
            return Err(CohomologyError::ModuleMismatch);
        }
        for (x, d) in self.on_radical.actions().iter().enumerate() {
            if let Some((y, _)) = derivation_defect(n, d) {
                return Err(CohomologyError::IncompatibleActions { element: x, radical_basis: y });
            }
            let sigma = self.on_module.action(x);
            for y in 0..n.dim() {
                let lhs = sigma.commutator(module.action(y));
                let rhs = module.action_of(&d.column(y));
                if lhs != rhs {
                    return Err(CohomologyError::IncompatibleActions { element: x, radical_basis: y });
                }
            }
        }
        Ok(())
    }
}

/// One degree of an invariant subcomplex.
#[derive(Debug, Clone)]
pub struct InvariantDegree {
    pub degree: usize,
    /// Dimension of the full cochain space.
    pub cochain_dim: usize,
    pub invariants: Subspace,
    /// The differential to the next degree in the invariant bases, or `None`
    /// for the last stored degree.
    pub differential: Option<SparseMatrix>,
}

/// `C^k(n; W)^s` for `k = 0..=top`.
#[derive(Debug, Clone)]
pub struct InvariantComplex {
    pub degrees: Vec<InvariantDegree>,
    radical_dim: usize,
}

impl InvariantComplex {
    /// Builds degrees `0..=top` (capped at `dim n`).
    pub fn build(
        n: &LieAlgebra,
        module: &Representation,
        s: &SAction,
        top: usize,
    ) -> Result<InvariantComplex, CohomologyError> {
        s.check(n, module)?;
        let top = top.min(n.dim());
        let mut spaces = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let actions = s
                .on_radical
                .actions()
                .iter()
                .zip(s.on_module.actions())
                .map(|(d, sigma)| cochain_action(d, sigma, k))
                .collect::<Result<Vec<_>, _>>()?;
            let dim = super::complex::cochain_dim(n.dim(), module.dim(), k);
            spaces.push((dim, invariant_subspace(dim, &actions)?));
        }
        let mut degrees = Vec::with_capacity(spaces.len());
        for k in 0..=top {
            let restricted = if k < top {
                let d = differential(n, module.actions(), module.dim(), k)?;
                let image = d.mul(&spaces[k].1.basis_matrix());
                Some(image.submatrix(spaces[k + 1].1.pivots(), &(0..image.cols()).collect::<Vec<_>>()))
            } else {
                None
            };
            degrees.push(InvariantDegree {
                degree: k,
                cochain_dim: spaces[k].0,
                invariants: spaces[k].1.clone(),
                differential: restricted,
            });
        }
        Ok(InvariantComplex { degrees, radical_dim: n.dim() })
    }

    /// `dim H^k(n; W)^s` for `k` in `range`. Degrees above `dim n` are zero;
    /// degrees at or above the stored top need the complex to reach `dim n`.
    pub fn betti(&self, range: RangeInclusive<usize>) -> BettiTable {
        let top = self.degrees.len() - 1;
        let complete = top == self.radical_dim;
        let ranks: Vec<usize> = self.degrees[..top]
            .iter()
            .map(|d| linalg::rank(d.differential.as_ref().expect("inner degree has a differential")))
            .collect();
        let rank = |k: usize| -> usize {
            if k < top {
                ranks[k]
            } else {
                assert!(complete || k > self.radical_dim, "degree {k} needs the complex beyond degree {top}");
                0
            }
        };
        let dims = |k: usize| self.degrees.get(k).map_or(0, |d| d.invariants.dim());
        assemble("", "", range, dims, rank, self.radical_dim, RankSource::Exact)
            .expect("invariant complex ranks are consistent")
    }
}

/// `dim H^k(n; W)^s` for `k` in `degrees`.
pub fn invariant_cohomology(
    n: &LieAlgebra,
    module: &Representation,
    s: &SAction,
    degrees: RangeInclusive<usize>,
) -> Result<BettiTable, CohomologyError> {
    let complex = InvariantComplex::build(n, module, s, degrees.end() + 1)?;
    let mut table = complex.betti(degrees);
    table.algebra = n.name().into();
    table.module = alloc::format!("invariants of module({})", module.dim());
    Ok(table)
}
