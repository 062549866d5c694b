//! Exact sparse linear algebra over the rationals.
//!
//! Ranks and kernels are computed by fraction-free sparse elimination; the
//! [`modular`] submodule offers a two-prime rank that callers may opt into.

mod eliminate;
pub mod modular;
mod sparse;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

pub use sparse::SparseMatrix;

use crate::rational::Rational;
use eliminate::{eliminate_exact, Reduction};

/// Exact rank of `m` over the rationals.
pub fn rank(m: &SparseMatrix) -> usize {
    if m.is_zero() {
        return 0;
    }
    eliminate_exact(m.row_lists(), m.cols(), Reduction::Rank).pivots.len()
}

/// A basis of the right null space of `m`, one vector per non-pivot column.
///
/// Each returned vector has a `1` at its own free column and `0` at every
/// other free column.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    let cols = m.cols();
    let echelon = eliminate_exact(m.row_lists(), cols, Reduction::Reduced);
    let mut is_pivot = vec![false; cols];
    for (c, _) in &echelon.pivots {
        is_pivot[*c] = true;
    }
    let mut slot = vec![usize::MAX; cols];
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        slot[f] = basis.len();
        let mut v = vec![Rational::zero(); cols];
        v[f] = crate::rational::one();
        basis.push(v);
    }
    for (pc, row) in &echelon.pivots {
        let pivot_value = &row.iter().find(|(c, _)| c == pc).expect("pivot present").1;
        for (c, value) in row {
            if c != pc {
                basis[slot[*c]][*pc] = Rational::new(-value.clone(), pivot_value.clone());
            }
        }
    }
    basis
}

/// A subspace of `Q^n` stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    /// The span of `vectors`, each of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Subspace {
        let rows: Vec<Vec<(usize, Rational)>> = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.len(), ambient, "vector length differs from ambient dimension");
                v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
            })
            .collect();
        let echelon = eliminate_exact(rows, ambient, Reduction::Reduced);
        let mut rows: Vec<(usize, Vec<(usize, BigInt)>)> = echelon.pivots;
        rows.sort_by_key(|(c, _)| *c);
        let mut pivots = Vec::with_capacity(rows.len());
        let mut basis = Vec::with_capacity(rows.len());
        for (pc, row) in rows {
            let lead = row.iter().find(|(c, _)| *c == pc).expect("pivot present").1.clone();
            let mut v = vec![Rational::zero(); ambient];
            for (c, x) in row {
                v[c] = Rational::new(x, lead.clone());
            }
            pivots.push(pc);
            basis.push(v);
        }
        Subspace { ambient, pivots, basis }
    }

    /// The null space of `m` as a subspace of `Q^cols`.
    pub fn kernel_of(m: &SparseMatrix) -> Subspace {
        Subspace::span(m.cols(), &kernel_basis(m))
    }

    pub fn full(ambient: usize) -> Subspace {
        let basis: Vec<Vec<Rational>> = (0..ambient)
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = crate::rational::one();
                v
            })
            .collect();
        Subspace { ambient, pivots: (0..ambient).collect(), basis }
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, pivots: Vec::new(), basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.ambient, &self.basis)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r -= c * x;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        SparseMatrix::from_dense(cols, &data)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseMatrix::zeros(5, 7)), 0);
        assert_eq!(rank(&SparseMatrix::identity(3)), 3);
        assert_eq!(rank(&dense(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&SparseMatrix::zeros(0, 4)), 0);
        assert_eq!(rank(&SparseMatrix::zeros(4, 0)), 0);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&SparseMatrix::identity(3)).is_empty());

        let k = kernel_basis(&dense(&[&[1, -1]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], k[0][1]);
        assert!(!k[0][0].is_zero());

        let k = kernel_basis(&dense(&[&[1, 2], &[2, 4]]));
        assert_eq!(k.len(), 1);
        // proportional to (2, -1)
        assert_eq!(&k[0][0] * int(-1), &k[0][1] * int(2));
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn kernel_of_empty_shapes() {
        assert_eq!(kernel_basis(&SparseMatrix::zeros(0, 3)).len(), 3);
        assert!(kernel_basis(&SparseMatrix::zeros(3, 0)).is_empty());
    }

    #[test]
    fn subspace_coordinates() {
        let s = Subspace::span(
            3,
            &[vec![int(1), int(1), int(0)], vec![int(2), int(2), int(0)], vec![int(0), int(1), int(1)]],
        );
        assert_eq!(s.dim(), 2);
        let v = vec![int(3), int(5), int(2)];
        let coords = s.coordinates(&v).unwrap();
        let rebuilt: Vec<Rational> =
            (0..3).map(|i| coords.iter().zip(s.basis()).map(|(c, b)| c * &b[i]).sum()).collect();
        assert_eq!(rebuilt, v);
        assert!(!s.contains(&[int(1), int(0), int(0)]));
    }

    #[test]
    fn large_entries_fall_back_to_big_integers() {
        let big = int(1 << 50);
        let m = SparseMatrix::from_dense(2, &[vec![big.clone(), int(3)], vec![int(7), big.clone() * &big]]);
        assert_eq!(rank(&m), 2);
        let singular = SparseMatrix::from_dense(2, &[vec![big.clone(), int(3)], vec![&big * int(5), int(15)]]);
        assert_eq!(rank(&singular), 1);
    }
}
