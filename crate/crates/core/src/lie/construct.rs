use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::algebra::derivation_defect;
use super::{LeviSplit, LieAlgebra, LieError, Representation};
use crate::linalg::SparseMatrix;
use crate::rational::Rational;

type Table = BTreeMap<(usize, usize), Vec<(usize, Rational)>>;

fn shifted(g: &LieAlgebra, offset: usize, table: &mut Table) {
    for ((i, j), coeffs) in g.nonzero_brackets() {
        table.insert((i + offset, j + offset), coeffs.iter().map(|(k, c)| (k + offset, c.clone())).collect());
    }
}

/// `g ⊕ h` with basis `(g-basis, h-basis)` and zero cross brackets.
pub fn direct_sum(g: &LieAlgebra, h: &LieAlgebra) -> LieAlgebra {
    let mut table = Table::new();
    shifted(g, 0, &mut table);
    shifted(h, g.dim(), &mut table);
    let levi = match (g.levi_split(), h.levi_split()) {
        (Some(a), Some(b)) => Some(LeviSplit {
            levi: a.levi.iter().copied().chain(b.levi.iter().map(|i| i + g.dim())).collect(),
            radical: a.radical.iter().copied().chain(b.radical.iter().map(|i| i + g.dim())).collect(),
        }),
        _ => None,
    };
    LieAlgebra::from_parts_unchecked(format!("{} + {}", g.name(), h.name()), g.dim() + h.dim(), table).with_levi(levi)
}

/// `s ⋉ V` for a module `V` viewed as an abelian algebra:
/// `[X, v] = ρ(X) v`, `[u, v] = 0`, basis `(s-basis, V-basis)`.
pub fn semidirect_product(s: &LieAlgebra, rho: &Representation) -> Result<LieAlgebra, LieError> {
    semidirect_by_derivations(s, &LieAlgebra::abelian(rho.dim()), rho)
}

/// `s ⋉ N` where `s` acts on the underlying space of `N` by derivations.
pub fn semidirect_by_derivations(
    s: &LieAlgebra,
    n: &LieAlgebra,
    action: &Representation,
) -> Result<LieAlgebra, LieError> {
    if action.algebra() != s {
        return Err(LieError::AlgebraMismatch);
    }
    if action.dim() != n.dim() {
        return Err(LieError::ActionShape { index: 0, dim: n.dim() });
    }
    if let Some((i, j)) = action.homomorphism_defect() {
        return Err(LieError::RepresentationMismatch { i, j });
    }
    for (element, d) in action.actions().iter().enumerate() {
        if let Some(pair) = derivation_defect(n, d) {
            return Err(LieError::NotADerivation { element, pair });
        }
    }
    let off = s.dim();
    let mut table = Table::new();
    shifted(s, 0, &mut table);
    shifted(n, off, &mut table);
    for (i, d) in action.actions().iter().enumerate() {
        let columns = d.transpose().row_lists();
        for (a, col) in columns.into_iter().enumerate() {
            if !col.is_empty() {
                table.insert((i, off + a), col.into_iter().map(|(r, c)| (off + r, c)).collect());
            }
        }
    }
    let levi = s
        .levi_split()
        .filter(|l| l.radical.is_empty())
        .map(|l| LeviSplit { levi: l.levi.clone(), radical: (off..off + n.dim()).collect() });
    let g = LieAlgebra::from_parts_unchecked(format!("{} x| {}", s.name(), n.name()), off + n.dim(), table);
    g.check_jacobi()?;
    Ok(g.with_levi(levi))
}

/// Direct sum of two radicals carrying actions of the same algebra.
pub fn radical_sum(
    (n1, a1): (&LieAlgebra, &Representation),
    (n2, a2): (&LieAlgebra, &Representation),
) -> Result<(LieAlgebra, Representation), LieError> {
    let action = a1.direct_sum(a2)?;
    Ok((direct_sum(n1, n2), action))
}

/// `V ⊕ ℂz` with `[u, v] = ω(u, v) z` and the action of `ρ` extended by zero
/// on `z`. `ω` must be antisymmetric and invariant; it may be degenerate.
pub fn heisenberg_from_symplectic(
    rho: &Representation,
    omega: &SparseMatrix,
) -> Result<(LieAlgebra, Representation), LieError> {
    let d = rho.dim();
    if omega.rows() != d || omega.cols() != d {
        return Err(LieError::FormShape { dim: d });
    }
    if !omega.add(&omega.transpose()).is_zero() {
        return Err(LieError::NotAntisymmetric);
    }
    for (element, a) in rho.actions().iter().enumerate() {
        if !a.transpose().mul(omega).add(&omega.mul(a)).is_zero() {
            return Err(LieError::NotInvariant { element });
        }
    }
    let mut table = Table::new();
    for (i, j, w) in omega.iter() {
        if i < j {
            table.insert((i, j), vec![(d, w.clone())]);
        }
    }
    let n = LieAlgebra::from_parts_unchecked(format!("heis({})", d + 1), d + 1, table);
    let actions = rho.actions().iter().map(|a| a.block_diag(&SparseMatrix::zeros(1, 1))).collect();
    let action = Representation::new(rho.algebra().clone(), d + 1, actions)?;
    for (element, m) in action.actions().iter().enumerate() {
        if let Some(pair) = derivation_defect(&n, m) {
            return Err(LieError::NotADerivation { element, pair });
        }
    }
    Ok((n, action))
}

/// Free nilpotent algebra on the generator module, with the induced action.
///
/// Class 2 on `r` generators: basis `u_1..u_r` then `u_i ∧ u_j` (`i < j`,
/// lexicographic), `[u_i, u_j] = u_i ∧ u_j`. Class 3 on two generators:
/// Hall basis `x, y, z = [x,y], [x,z], [y,z]`.
pub fn free_nilpotent(generators: &Representation, class: usize) -> Result<(LieAlgebra, Representation), LieError> {
    let r = generators.dim();
    // each non-generator basis element is the bracket of two earlier ones
    let mut definitions: Vec<(usize, usize)> = Vec::new();
    let mut table = Table::new();
    let dim = match class {
        2 => {
            let mut next = r;
            for i in 0..r {
                for j in i + 1..r {
                    table.insert((i, j), vec![(next, crate::rational::one())]);
                    definitions.push((i, j));
                    next += 1;
                }
            }
            next
        }
        3 => {
            if r != 2 {
                return Err(LieError::UnsupportedRank(r));
            }
            let one = crate::rational::one;
            table.insert((0, 1), vec![(2, one())]);
            table.insert((0, 2), vec![(3, one())]);
            table.insert((1, 2), vec![(4, one())]);
            definitions.extend([(0, 1), (0, 2), (1, 2)]);
            5
        }
        other => return Err(LieError::UnsupportedClass(other)),
    };
    let f = LieAlgebra::from_parts_unchecked(format!("f({r},{class})"), dim, table);

    let mut actions = Vec::with_capacity(generators.actions().len());
    for a in generators.actions() {
        let mut columns: Vec<Vec<Rational>> = vec![vec![Rational::zero(); dim]; dim];
        for (row, col, v) in a.iter() {
            columns[col][row] = v.clone();
        }
        for (offset, &(left, right)) in definitions.iter().enumerate() {
            let target = r + offset;
            let mut el = vec![Rational::zero(); dim];
            el[left] = crate::rational::one();
            let mut er = vec![Rational::zero(); dim];
            er[right] = crate::rational::one();
            let x = f.bracket(&columns[left], &er);
            let y = f.bracket(&el, &columns[right]);
            columns[target] = x.into_iter().zip(y).map(|(p, q)| p + q).collect();
        }
        actions.push(SparseMatrix::from_columns(dim, &columns));
    }
    let action = Representation::new(generators.algebra().clone(), dim, actions)?;
    for (element, m) in action.actions().iter().enumerate() {
        if let Some(pair) = derivation_defect(&f, m) {
            return Err(LieError::NotADerivation { element, pair });
        }
    }
    Ok((f, action))
}
