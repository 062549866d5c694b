use alloc::vec::Vec;

use super::{CohomologyError, COCHAIN_LIMIT};
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::SparseMatrix;
use crate::rational::Rational;
use crate::subsets::{self, binomial, SubsetIndex};

/// `C^k(g; M)`: basis `e^S ⊗ m_c` for lexicographic k-subsets `S`, stored at
/// index `rank(S) * dim M + c`.
#[derive(Debug, Clone)]
pub struct CochainSpace {
    module_dim: usize,
    subsets: SubsetIndex,
}

impl CochainSpace {
    pub fn new(algebra_dim: usize, module_dim: usize, degree: usize) -> Result<CochainSpace, CohomologyError> {
        let dim = cochain_dim(algebra_dim, module_dim, degree);
        if dim > COCHAIN_LIMIT {
            return Err(CohomologyError::TooLarge { degree, dim, limit: COCHAIN_LIMIT });
        }
        Ok(CochainSpace { module_dim, subsets: SubsetIndex::new(algebra_dim, degree) })
    }

    pub fn degree(&self) -> usize {
        self.subsets.size()
    }

    pub fn algebra_dim(&self) -> usize {
        self.subsets.ground()
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn dim(&self) -> usize {
        self.subsets.len() * self.module_dim
    }

    pub fn subsets(&self) -> &SubsetIndex {
        &self.subsets
    }

    /// Index of the basis cochain `e^S ⊗ m_coord`.
    pub fn index(&self, subset: u64, coord: usize) -> usize {
        self.subsets.rank(subset) * self.module_dim + coord
    }
}

/// `binomial(n, k) * m`, saturating.
pub fn cochain_dim(algebra_dim: usize, module_dim: usize, degree: usize) -> usize {
    binomial(algebra_dim, degree).saturating_mul(module_dim)
}

fn columns(m: &SparseMatrix) -> Vec<Vec<(usize, Rational)>> {
    m.transpose().row_lists()
}

fn sign(parity: u32) -> Rational {
    Rational::from_integer(subsets::parity_sign(parity).into())
}

/// `d: C^k(n; W) → C^{k+1}(n; W)` where `actions[t]` is the action of the
/// basis element `t` of `n` on `W`.
pub(crate) fn differential(
    n: &LieAlgebra,
    actions: &[SparseMatrix],
    w: usize,
    k: usize,
) -> Result<SparseMatrix, CohomologyError> {
    let source = CochainSpace::new(n.dim(), w, k)?;
    let target = CochainSpace::new(n.dim(), w, k + 1)?;
    let mut d = SparseMatrix::zeros(target.dim(), source.dim());
    if target.dim() == 0 || source.dim() == 0 {
        return Ok(d);
    }
    let by_target = n.brackets_by_target();
    let action_columns: Vec<Vec<Vec<(usize, Rational)>>> = actions.iter().map(columns).collect();
    for (s_rank, &s) in source.subsets().masks().iter().enumerate() {
        // x_i · ω(..., x̂_i, ...) for the new slot t
        for t in (0..n.dim()).filter(|&t| s & (1 << t) == 0) {
            let big = s | (1 << t);
            let row_base = target.subsets().rank(big) * w;
            let sg = sign(subsets::count_below(s, t));
            for (c, column) in action_columns[t].iter().enumerate() {
                for (r, v) in column {
                    d.add_to(row_base + r, s_rank * w + c, &sg * v);
                }
            }
        }
        // ω([x_i, x_j], ...): the bracket lands on some l in S
        for l in subsets::elements(s) {
            let rest = s & !(1 << l);
            let sign_l = subsets::count_below(s, l);
            for (a, b, coeff) in &by_target[l] {
                if rest & ((1 << a) | (1 << b)) != 0 {
                    continue;
                }
                let big = rest | (1 << a) | (1 << b);
                let parity = subsets::count_below(big, *a) + subsets::count_below(big, *b) + sign_l;
                let value = sign(parity) * coeff;
                let row_base = target.subsets().rank(big) * w;
                for c in 0..w {
                    d.add_to(row_base + c, s_rank * w + c, value.clone());
                }
            }
        }
    }
    Ok(d)
}

/// The action on `C^k(n; W)` of an element acting on `n` by the derivation
/// `der` and on `W` by `sigma`:
/// `(x·ω)(y_1, ..) = σ(x) ω(y_1, ..) - Σ_i ω(.., [x, y_i], ..)`.
pub(crate) fn cochain_action(
    der: &SparseMatrix,
    sigma: &SparseMatrix,
    k: usize,
) -> Result<SparseMatrix, CohomologyError> {
    let space = CochainSpace::new(der.rows(), sigma.rows(), k)?;
    let w = sigma.rows();
    let mut out = SparseMatrix::zeros(space.dim(), space.dim());
    let sigma_columns = columns(sigma);
    let der_rows = der.row_lists();
    for (s_rank, &s) in space.subsets().masks().iter().enumerate() {
        for (c, column) in sigma_columns.iter().enumerate() {
            let col = s_rank * w + c;
            for (r, v) in column {
                out.add_to(s_rank * w + r, col, v.clone());
            }
        }
        for l in subsets::elements(s) {
            for (t, delta) in &der_rows[l] {
                let Some((big, sg)) = subsets::replace(s, l, *t) else { continue };
                let value = -(delta * Rational::from_integer(sg.into()));
                let row_base = space.subsets().rank(big) * w;
                for c in 0..w {
                    out.add_to(row_base + c, s_rank * w + c, value.clone());
                }
            }
        }
    }
    Ok(out)
}

/// The Chevalley–Eilenberg differential `C^k(g; M) → C^{k+1}(g; M)` in the
/// bases of [`CochainSpace`].
pub fn ce_differential(g: &LieAlgebra, module: &Representation, k: usize) -> Result<SparseMatrix, CohomologyError> {
    if module.algebra() != g {
        return Err(CohomologyError::ModuleMismatch);
    }
    differential(g, module.actions(), module.dim(), k)
}
