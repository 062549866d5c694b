use alloc::vec::Vec;

use num_traits::Zero;

use super::{LieAlgebra, LieError};
use crate::linalg::SparseMatrix;
use crate::rational::Rational;
use crate::subsets::{self, SubsetIndex};

/// A finite-dimensional representation: one square matrix per basis element
/// of the acting algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    dim: usize,
    actions: Vec<SparseMatrix>,
}

impl Representation {
    /// Checks shapes and the homomorphism law
    /// `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` on every basis pair.
    pub fn new(algebra: LieAlgebra, dim: usize, actions: Vec<SparseMatrix>) -> Result<Representation, LieError> {
        if actions.len() != algebra.dim() {
            return Err(LieError::ActionCount { expected: algebra.dim(), found: actions.len() });
        }
        if let Some(i) = actions.iter().position(|a| a.rows() != dim || a.cols() != dim) {
            return Err(LieError::ActionShape { index: i, dim });
        }
        let rep = Representation { algebra, dim, actions };
        match rep.homomorphism_defect() {
            Some((i, j)) => Err(LieError::RepresentationMismatch { i, j }),
            None => Ok(rep),
        }
    }

    /// The zero action on a `dim`-dimensional space.
    pub fn trivial(algebra: &LieAlgebra, dim: usize) -> Representation {
        let actions = (0..algebra.dim()).map(|_| SparseMatrix::zeros(dim, dim)).collect();
        Representation { algebra: algebra.clone(), dim, actions }
    }

    /// `ad: g → gl(g)`.
    pub fn adjoint(g: &LieAlgebra) -> Representation {
        let actions = (0..g.dim()).map(|i| g.ad_matrix(i)).collect();
        Representation { algebra: g.clone(), dim: g.dim(), actions }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[SparseMatrix] {
        &self.actions
    }

    pub fn action(&self, i: usize) -> &SparseMatrix {
        &self.actions[i]
    }

    /// Image of an arbitrary algebra element given by coordinates.
    pub fn action_of(&self, x: &[Rational]) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.actions) {
            if !c.is_zero() {
                out = out.add(&a.scale(c));
            }
        }
        out
    }

    /// First basis pair `(i, j)` violating the homomorphism law.
    pub fn homomorphism_defect(&self) -> Option<(usize, usize)> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.action_of(&self.algebra.bracket_dense(i, j));
                if lhs != self.actions[i].commutator(&self.actions[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, LieError> {
        if self.algebra != other.algebra {
            return Err(LieError::AlgebraMismatch);
        }
        let actions = self.actions.iter().zip(&other.actions).map(|(a, b)| a.block_diag(b)).collect();
        Ok(Representation { algebra: self.algebra.clone(), dim: self.dim + other.dim, actions })
    }

    /// `self ⊗ other`, basis `u_a ⊗ w_b` at index `a * other.dim + b`.
    pub fn tensor(&self, other: &Representation) -> Result<Representation, LieError> {
        if self.algebra != other.algebra {
            return Err(LieError::AlgebraMismatch);
        }
        let (p, q) = (self.dim, other.dim);
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| {
                let mut m = SparseMatrix::zeros(p * q, p * q);
                for (r, c, v) in a.iter() {
                    for k in 0..q {
                        m.add_to(r * q + k, c * q + k, v.clone());
                    }
                }
                for (r, c, v) in b.iter() {
                    for k in 0..p {
                        m.add_to(k * q + r, k * q + c, v.clone());
                    }
                }
                m
            })
            .collect();
        Ok(Representation { algebra: self.algebra.clone(), dim: p * q, actions })
    }

    /// `Λ^k` of this representation on the lexicographic k-subset basis.
    pub fn exterior_power(&self, k: usize) -> Representation {
        let idx = SubsetIndex::new(self.dim, k);
        let actions = self.actions.iter().map(|a| exterior_action(a, &idx)).collect();
        Representation { algebra: self.algebra.clone(), dim: idx.len(), actions }
    }
}

/// Derivation-style extension of a linear map to `Λ^k`, basis `idx`.
fn exterior_action(a: &SparseMatrix, idx: &SubsetIndex) -> SparseMatrix {
    let by_source: Vec<Vec<(usize, Rational)>> = a.transpose().row_lists();
    let mut m = SparseMatrix::zeros(idx.len(), idx.len());
    for (col, &mask) in idx.masks().iter().enumerate() {
        for t in subsets::elements(mask) {
            for (l, v) in &by_source[t] {
                if let Some((target, sign)) = subsets::replace(mask, t, *l) {
                    m.add_to(idx.rank(target), col, v * Rational::from_integer(sign.into()));
                }
            }
        }
    }
    m
}
