use alloc::vec::Vec;

use num_traits::Zero;

use crate::lie::Representation;
use crate::linalg::{kernel_basis, SparseMatrix};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormParity {
    Symmetric,
    Antisymmetric,
}

/// A basis of the bilinear forms `B` of the given parity with
/// `B(ρ(x)u, v) + B(u, ρ(x)v) = 0` for every basis element `x`.
pub fn invariant_bilinear_forms(rho: &Representation, parity: FormParity) -> Vec<SparseMatrix> {
    let d = rho.dim();
    let mut candidates: Vec<SparseMatrix> = Vec::new();
    for a in 0..d {
        let start = if parity == FormParity::Symmetric { a } else { a + 1 };
        for b in start..d {
            let mut f = SparseMatrix::zeros(d, d);
            f.add_to(a, b, int(1));
            let other = if parity == FormParity::Symmetric { int(1) } else { int(-1) };
            f.add_to(b, a, other);
            candidates.push(f);
        }
    }
    // one column per candidate form, stacked invariance conditions per action
    let blocks = rho.actions().len();
    let mut constraints = SparseMatrix::zeros(blocks * d * d, candidates.len());
    for (t, f) in candidates.iter().enumerate() {
        for (x, a) in rho.actions().iter().enumerate() {
            let defect = a.transpose().mul(f).add(&f.mul(a));
            for (r, c, v) in defect.iter() {
                constraints.set(x * d * d + r * d + c, t, v.clone());
            }
        }
    }
    kernel_basis(&constraints)
        .into_iter()
        .map(|coeffs| {
            let mut form = SparseMatrix::zeros(d, d);
            for (c, f) in coeffs.iter().zip(&candidates) {
                if !c.is_zero() {
                    form = form.add(&f.scale(c));
                }
            }
            normalize(form)
        })
        .collect()
}

/// Scales so the first nonzero entry in row-major order is 1.
fn normalize(f: SparseMatrix) -> SparseMatrix {
    let lead = f.iter().next().map(|(_, _, v)| v.clone());
    match lead {
        Some(lead) => f.scale(&(Rational::from_integer(1.into()) / lead)),
        None => f,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::irrep;

    #[test]
    fn symplectic_and_orthogonal_irreducibles() {
        let anti = |m| invariant_bilinear_forms(&irrep(m), FormParity::Antisymmetric).len();
        let sym = |m| invariant_bilinear_forms(&irrep(m), FormParity::Symmetric).len();
        assert_eq!(anti(1), 1);
        assert_eq!(anti(2), 0);
        assert_eq!(anti(3), 1);
        assert_eq!(sym(2), 1);
        assert_eq!(sym(1), 0);
    }

    #[test]
    fn v1_form_is_standard() {
        let forms = invariant_bilinear_forms(&irrep(1), FormParity::Antisymmetric);
        assert_eq!(forms[0].at(0, 1), int(1));
        assert_eq!(forms[0].at(1, 0), int(-1));
    }

    #[test]
    fn two_copies_of_v1() {
        let v = irrep(1).direct_sum(&irrep(1)).unwrap();
        assert_eq!(invariant_bilinear_forms(&v, FormParity::Antisymmetric).len(), 3);
        assert_eq!(invariant_bilinear_forms(&v, FormParity::Symmetric).len(), 1);
    }
}
