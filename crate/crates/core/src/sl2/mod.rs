//! The algebra `sl2`, its irreducible modules `V_m`, weight bookkeeping, and
//! the partition counts that give multiplicities in exterior powers.

mod forms;
mod partitions;
mod weights;

use alloc::vec::Vec;

pub use forms::{invariant_bilinear_forms, FormParity};
pub use partitions::{
    c_coefficients, gaussian_binomial, lambda3_self_multiplicity, lambda4_multiplicity, multiplicity_n,
    partition_count, IntPolynomial, PartitionTable,
};
pub use weights::{
    clebsch_gordan, decompose, exterior_power_decomposition, hom_dim, weight_multiplicities, ExteriorMethod,
    Sl2Decomposition, WeightMultiset, BRUTE_FORCE_LIMIT,
};

use crate::lie::{LeviSplit, LieAlgebra, Representation};
use crate::linalg::SparseMatrix;
use crate::rational::{int, Rational};

/// Errors from weight and decomposition computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Sl2Error {
    #[error("representation is not a representation of sl2")]
    NotSl2,
    #[error("e_3 is not diagonalizable with integer weights: weight spaces span {found} of {dim} dimensions")]
    NotWeightDiagonalizable { found: usize, dim: usize },
    #[error("weights do not come from an sl2-module (fails at weight {weight})")]
    NotAModule { weight: i64 },
    #[error("brute force would enumerate {subsets} subsets (limit {limit})")]
    TooLarge { subsets: usize, limit: usize },
}

/// `sl2` on `e1, e2, e3` with `[e1,e2] = e3`, `[e1,e3] = -2e1`, `[e2,e3] = 2e2`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::new(
        "sl2",
        3,
        [
            ((0, 1), alloc::vec![int(0), int(0), int(1)]),
            ((0, 2), alloc::vec![int(-2), int(0), int(0)]),
            ((1, 2), alloc::vec![int(0), int(2), int(0)]),
        ],
    )
    .expect("sl2 constants satisfy Jacobi")
    .with_levi(Some(LeviSplit { levi: alloc::vec![0, 1, 2], radical: Vec::new() }))
}

/// `V_m` on `v_0..v_m`: `e1 v_i = i v_{i-1}`, `e2 v_i = (m-i) v_{i+1}`,
/// `e3 v_i = (m-2i) v_i`.
pub fn irrep(m: usize) -> Representation {
    let d = m + 1;
    let mut e1 = SparseMatrix::zeros(d, d);
    let mut e2 = SparseMatrix::zeros(d, d);
    let mut e3 = SparseMatrix::zeros(d, d);
    for i in 0..d {
        if i > 0 {
            e1.set(i - 1, i, Rational::from_integer((i as i64).into()));
        }
        if i < m {
            e2.set(i + 1, i, Rational::from_integer(((m - i) as i64).into()));
        }
        e3.set(i, i, Rational::from_integer((m as i64 - 2 * i as i64).into()));
    }
    Representation::new(sl2(), d, alloc::vec![e1, e2, e3]).expect("irrep satisfies the homomorphism law")
}

fn ensure_sl2(rho: &Representation) -> Result<(), Sl2Error> {
    if *rho.algebra() == sl2() {
        Ok(())
    } else {
        Err(Sl2Error::NotSl2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{is_perfect, semidirect_product};

    #[test]
    fn sl2_brackets() {
        let s = sl2();
        assert_eq!(s.bracket_dense(0, 1), alloc::vec![int(0), int(0), int(1)]);
        assert!(s.check_jacobi().is_ok());
        assert!(is_perfect(&s));
    }

    #[test]
    fn adjoint_is_v2() {
        let w = weight_multiplicities(&Representation::adjoint(&sl2())).unwrap();
        assert_eq!(decompose(&w).unwrap().to_string(), "V_2");
    }

    #[test]
    fn trivial_irrep() {
        let v0 = irrep(0);
        assert_eq!(v0.dim(), 1);
        assert!(v0.actions().iter().all(|a| a.is_zero()));
    }

    #[test]
    fn semidirect_with_v1_matches_bracket_table() {
        let g = semidirect_product(&sl2(), &irrep(1)).unwrap();
        assert_eq!(g.dim(), 5);
        let e = |k: usize, c: i64| {
            let mut v = alloc::vec![int(0); 5];
            v[k] = int(c);
            v
        };
        assert_eq!(g.bracket_dense(0, 4), e(3, 1));
        assert_eq!(g.bracket_dense(1, 3), e(4, 1));
        assert_eq!(g.bracket_dense(2, 3), e(3, 1));
        assert_eq!(g.bracket_dense(2, 4), e(4, -1));
        assert_eq!(g.bracket_dense(0, 3), alloc::vec![int(0); 5]);
        assert_eq!(g.bracket_dense(1, 4), alloc::vec![int(0); 5]);
        assert_eq!(g.bracket_dense(3, 4), alloc::vec![int(0); 5]);
    }

    #[test]
    fn v2_is_adjoint() {
        let a = decompose(&weight_multiplicities(&irrep(2)).unwrap()).unwrap();
        let b = decompose(&weight_multiplicities(&Representation::adjoint(&sl2())).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(hom_dim(&a, &b), 1);
    }

    #[test]
    fn non_sl2_rejected() {
        let rho = Representation::trivial(&LieAlgebra::abelian(3), 2);
        assert_eq!(weight_multiplicities(&rho), Err(Sl2Error::NotSl2));
    }
}
