use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::betti::{betti_numbers, BettiRow, BettiTable, RankSource};
use super::complex::cochain_dim;
use super::invariant::{InvariantComplex, SAction};
use super::CohomologyError;
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::SparseMatrix;
use crate::sl2::sl2;

/// `dim H^i(sl2, C)` for `i = 0..=3`.
pub const SL2_TRIVIAL_COHOMOLOGY: [usize; 4] = [1, 0, 0, 1];

/// The radical `n`, `g` as an `n`-module, and the `sl2`-actions on both, for
/// an algebra built as `sl2 ⋉ n`.
#[derive(Debug, Clone)]
pub struct Sl2Factorization {
    pub radical: LieAlgebra,
    pub module: Representation,
    pub action: SAction,
}

pub fn sl2_factorization(g: &LieAlgebra) -> Result<Sl2Factorization, CohomologyError> {
    let split = g.levi_split().ok_or(CohomologyError::NotASemidirectProduct)?;
    match g.coordinate_subalgebra(&split.levi) {
        Some(s) if s == sl2() => {}
        _ => return Err(CohomologyError::UnsupportedLevi),
    }
    let radical = g.coordinate_subalgebra(&split.radical).ok_or(CohomologyError::NotASemidirectProduct)?;
    let all: Vec<usize> = (0..g.dim()).collect();
    let ad: Vec<SparseMatrix> = all.iter().map(|&i| g.ad_matrix(i)).collect();
    let mut on_radical = Vec::new();
    for &x in &split.levi {
        // the radical must be an ideal
        let into = ad[x].submatrix(&all, &split.radical);
        let kept = ad[x].submatrix(&split.radical, &split.radical);
        if into.nnz() != kept.nnz() {
            return Err(CohomologyError::NotASemidirectProduct);
        }
        on_radical.push(kept);
    }
    let module = Representation::new(radical.clone(), g.dim(), split.radical.iter().map(|&r| ad[r].clone()).collect())
        .map_err(|_| CohomologyError::NotASemidirectProduct)?;
    let on_module = split.levi.iter().map(|&x| ad[x].clone()).collect();
    let action = SAction {
        on_radical: Representation::new(sl2(), radical.dim(), on_radical)
            .map_err(|_| CohomologyError::NotASemidirectProduct)?,
        on_module: Representation::new(sl2(), g.dim(), on_module)
            .map_err(|_| CohomologyError::NotASemidirectProduct)?,
    };
    Ok(Sl2Factorization { radical, module, action })
}

/// `H^k(g, g) = ⊕_i H^i(sl2, C) ⊗ H^{k-i}(n, g)^sl2` for `g = sl2 ⋉ n`.
pub fn hochschild_serre_adjoint(g: &LieAlgebra, degrees: RangeInclusive<usize>) -> Result<BettiTable, CohomologyError> {
    let f = sl2_factorization(g)?;
    let complex = InvariantComplex::build(&f.radical, &f.module, &f.action, f.radical.dim())?;
    let inv = complex.betti(0..=f.radical.dim());
    let rows = degrees
        .map(|k| {
            let dim = SL2_TRIVIAL_COHOMOLOGY
                .iter()
                .enumerate()
                .filter(|&(i, _)| i <= k)
                .map(|(i, c)| c * inv.dim(k - i).unwrap_or(0))
                .sum();
            BettiRow { degree: k, cochain_dim: cochain_dim(g.dim(), g.dim(), k), rank: None, dim }
        })
        .collect();
    Ok(BettiTable {
        algebra: g.name().into(),
        module: "adjoint".into(),
        rows,
        source: RankSource::Assembled,
        top_degree: g.dim(),
    })
}

/// The factorized and the direct adjoint tables side by side.
#[derive(Debug, Clone)]
pub struct HsComparison {
    pub factorized: BettiTable,
    pub direct: BettiTable,
    /// Degrees where the two differ.
    pub disagreements: Vec<usize>,
}

impl HsComparison {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Computes both tables on `degrees` and records every disagreement.
pub fn cross_validate_hochschild_serre(
    g: &LieAlgebra,
    degrees: RangeInclusive<usize>,
) -> Result<HsComparison, CohomologyError> {
    let factorized = hochschild_serre_adjoint(g, degrees.clone())?;
    let direct = betti_numbers(g, &Representation::adjoint(g), degrees)?;
    let disagreements =
        factorized.rows.iter().zip(&direct.rows).filter(|(a, b)| a.dim != b.dim).map(|(a, _)| a.degree).collect();
    Ok(HsComparison { factorized, direct, disagreements })
}
