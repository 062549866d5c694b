use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::linalg::{self, SparseMatrix, Subspace};
use crate::rational::Rational;

/// One reason a candidate bracket table is not a Lie algebra. Basis indices
/// are zero-based; `Display` prints them as `e_1, e_2, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DimensionMismatch {
        i: usize,
        j: usize,
        len: usize,
        dim: usize,
    },
    IndexOutOfRange {
        i: usize,
        j: usize,
        dim: usize,
    },
    NotOrdered {
        i: usize,
        j: usize,
    },
    Duplicate {
        i: usize,
        j: usize,
    },
    /// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]` is the nonzero `defect`.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        defect: Vec<Rational>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DimensionMismatch { i, j, len, dim } => {
                write!(f, "[e_{},e_{}] has {len} coefficients, expected {dim}", i + 1, j + 1)
            }
            Violation::IndexOutOfRange { i, j, dim } => {
                write!(f, "[e_{},e_{}] is out of range for dimension {dim}", i + 1, j + 1)
            }
            Violation::NotOrdered { i, j } => write!(f, "[e_{},e_{}] must be listed with i < j", i + 1, j + 1),
            Violation::Duplicate { i, j } => write!(f, "[e_{},e_{}] is given twice", i + 1, j + 1),
            Violation::Jacobi { i, j, k, .. } => {
                write!(f, "Jacobi identity fails for (e_{}, e_{}, e_{})", i + 1, j + 1, k + 1)
            }
        }
    }
}

/// All problems found while validating a bracket table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// Zero-based triples whose Jacobi identity fails.
    pub fn jacobi_triples(&self) -> Vec<(usize, usize, usize)> {
        self.violations
            .iter()
            .filter_map(|v| match v {
                Violation::Jacobi { i, j, k, .. } => Some((*i, *j, *k)),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, v) in self.violations.iter().enumerate() {
            if n > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// How a constructed algebra splits as `levi ⋉ radical`, by basis index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviSplit {
    pub levi: Vec<usize>,
    pub radical: Vec<usize>,
}

/// A finite-dimensional Lie algebra given by structure constants in a fixed
/// basis `e_0, .., e_{dim-1}`.
///
/// Only `[e_i, e_j]` with `i < j` is stored; antisymmetry is structural.
/// Equality compares dimension and structure constants, not names.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    levi: Option<LeviSplit>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.brackets == other.brackets
    }
}

impl Eq for LieAlgebra {}

fn sparse(coeffs: &[Rational]) -> Vec<(usize, Rational)> {
    coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

impl LieAlgebra {
    /// Validates a candidate bracket table: `[e_i, e_j] = coeffs` for `i < j`,
    /// with dense coefficient vectors of length `dim`. Omitted pairs bracket
    /// to zero. Every malformed entry and every failing Jacobi triple is
    /// reported.
    pub fn new<I>(name: impl Into<String>, dim: usize, brackets: I) -> Result<LieAlgebra, ValidationReport>
    where
        I: IntoIterator<Item = ((usize, usize), Vec<Rational>)>,
    {
        let mut violations = Vec::new();
        let mut table = BTreeMap::new();
        for ((i, j), coeffs) in brackets {
            if i >= dim || j >= dim {
                violations.push(Violation::IndexOutOfRange { i, j, dim });
            } else if i >= j {
                violations.push(Violation::NotOrdered { i, j });
            } else if coeffs.len() != dim {
                violations.push(Violation::DimensionMismatch { i, j, len: coeffs.len(), dim });
            } else if let Entry::Vacant(slot) = table.entry((i, j)) {
                slot.insert(sparse(&coeffs));
            } else {
                violations.push(Violation::Duplicate { i, j });
            }
        }
        if !violations.is_empty() {
            return Err(ValidationReport { violations });
        }
        table.retain(|_, v: &mut Vec<(usize, Rational)>| !v.is_empty());
        let algebra = LieAlgebra { name: name.into(), dim, brackets: table, levi: None };
        let jacobi = algebra.jacobi_violations();
        if jacobi.is_empty() {
            Ok(algebra)
        } else {
            Err(ValidationReport { violations: jacobi })
        }
    }

    /// The abelian algebra of dimension `dim`.
    pub fn abelian(dim: usize) -> LieAlgebra {
        LieAlgebra { name: alloc::format!("C^{dim}"), dim, brackets: BTreeMap::new(), levi: None }
    }

    pub(crate) fn from_parts_unchecked(
        name: String,
        dim: usize,
        brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    ) -> LieAlgebra {
        let brackets = brackets.into_iter().filter(|(_, v)| !v.is_empty()).collect();
        LieAlgebra { name, dim, brackets, levi: None }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> LieAlgebra {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn levi_split(&self) -> Option<&LeviSplit> {
        self.levi.as_ref()
    }

    pub(crate) fn with_levi(mut self, levi: Option<LeviSplit>) -> LieAlgebra {
        self.levi = levi;
        self
    }

    /// Nonzero brackets `[e_i, e_j]`, `i < j`, as sparse coefficient lists.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = ((usize, usize), &[(usize, Rational)])> + '_ {
        self.brackets.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    /// `[e_i, e_j]` as a sparse coefficient list (any order of `i`, `j`).
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, Rational)> {
        use core::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Vec::new(),
            Ordering::Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            Ordering::Greater => {
                self.brackets.get(&(j, i)).map(|v| v.iter().map(|(k, c)| (*k, -c)).collect()).unwrap_or_default()
            }
        }
    }

    /// `[e_i, e_j]` as a dense vector.
    pub fn bracket_dense(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (k, c) in self.bracket_basis(i, j) {
            out[k] = c;
        }
        out
    }

    /// Structure constant `c^k_{ij}` with `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket_basis(i, j).into_iter().find(|(l, _)| *l == k).map(|(_, c)| c).unwrap_or_else(Rational::zero)
    }

    /// Bracket of two elements given by coordinates.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (&(i, j), coeffs) in &self.brackets {
            let w = &x[i] * &y[j] - &x[j] * &y[i];
            if w.is_zero() {
                continue;
            }
            for (k, c) in coeffs {
                out[*k] += &w * c;
            }
        }
        out
    }

    /// For each basis index `k`, the pairs `(i, j)`, `i < j`, with `c^k_{ij} != 0`.
    pub fn brackets_by_target(&self) -> Vec<Vec<(usize, usize, Rational)>> {
        let mut out = vec![Vec::new(); self.dim];
        for (&(i, j), coeffs) in &self.brackets {
            for (k, c) in coeffs {
                out[*k].push((i, j, c.clone()));
            }
        }
        out
    }

    /// Matrix of `ad(e_i)`.
    pub fn ad_matrix(&self, i: usize) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.bracket_basis(i, j) {
                m.set(k, j, c);
            }
        }
        m
    }

    fn jacobi_violations(&self) -> Vec<Violation> {
        // [e_a, Σ c_l e_l] accumulated into `acc`
        let add_bracket = |acc: &mut Vec<Rational>, a: usize, v: &[(usize, Rational)], sign: i64| {
            for (l, c) in v {
                for (k, d) in self.bracket_basis(a, *l) {
                    acc[k] += c * &d * Rational::from_integer(sign.into());
                }
            }
        };
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let mut defect = vec![Rational::zero(); self.dim];
                    add_bracket(&mut defect, i, &self.bracket_basis(j, k), 1);
                    add_bracket(&mut defect, j, &self.bracket_basis(k, i), 1);
                    add_bracket(&mut defect, k, &self.bracket_basis(i, j), 1);
                    if defect.iter().any(|x| !x.is_zero()) {
                        out.push(Violation::Jacobi { i, j, k, defect });
                    }
                }
            }
        }
        out
    }

    /// Re-checks the Jacobi identity on every basis triple.
    pub fn check_jacobi(&self) -> Result<(), ValidationReport> {
        let violations = self.jacobi_violations();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(ValidationReport { violations })
        }
    }

    /// The algebra spanned by the basis vectors `indices`, if that span is
    /// closed under the bracket. The new basis follows the order of `indices`.
    pub fn coordinate_subalgebra(&self, indices: &[usize]) -> Option<LieAlgebra> {
        let mut pos = vec![usize::MAX; self.dim];
        for (p, &i) in indices.iter().enumerate() {
            pos[i] = p;
        }
        let mut table = BTreeMap::new();
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate().skip(a + 1) {
                let mut coeffs = Vec::new();
                for (k, c) in self.bracket_basis(i, j) {
                    if pos[k] == usize::MAX {
                        return None;
                    }
                    coeffs.push((pos[k], c));
                }
                coeffs.sort_by_key(|(k, _)| *k);
                table.insert((a, b), coeffs);
            }
        }
        Some(LieAlgebra::from_parts_unchecked(self.name.clone(), indices.len(), table))
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.dim)
    }
}

/// Basis of the center `{x : [x, e_i] = 0 for all i}`.
pub fn center(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    if g.dim() == 0 {
        return Vec::new();
    }
    let ads: Vec<SparseMatrix> = (0..g.dim()).map(|i| g.ad_matrix(i)).collect();
    let refs: Vec<&SparseMatrix> = ads.iter().collect();
    linalg::kernel_basis(&SparseMatrix::vstack(&refs))
}

/// Basis (reduced echelon) of `[g, g]`.
pub fn derived_subalgebra(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    let vectors: Vec<Vec<Rational>> = g
        .nonzero_brackets()
        .map(|(_, coeffs)| {
            let mut v = vec![Rational::zero(); g.dim()];
            for (k, c) in coeffs {
                v[*k] = c.clone();
            }
            v
        })
        .collect();
    Subspace::span(g.dim(), &vectors).basis().to_vec()
}

pub fn is_perfect(g: &LieAlgebra) -> bool {
    derived_subalgebra(g).len() == g.dim()
}

/// Dimensions of the lower central series `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...`,
/// ending at the first repeated dimension.
pub fn lower_central_series(g: &LieAlgebra) -> Vec<usize> {
    let n = g.dim();
    let mut current = Subspace::full(n);
    let mut dims = vec![n];
    for _ in 0..=n {
        let mut generators = Vec::new();
        for i in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[i] = crate::rational::one();
            for v in current.basis() {
                generators.push(g.bracket(&e, v));
            }
        }
        let next = Subspace::span(n, &generators);
        if next.dim() == current.dim() {
            break;
        }
        dims.push(next.dim());
        current = next;
        if current.dim() == 0 {
            break;
        }
    }
    dims
}

/// Nilpotency class (`Some(0)` for the zero algebra, `Some(1)` for nonzero
/// abelian), or `None` if the lower central series stabilizes above zero.
pub fn nilpotency_class(g: &LieAlgebra) -> Option<usize> {
    let series = lower_central_series(g);
    (*series.last().expect("series is nonempty") == 0).then(|| series.len() - 1)
}

pub fn is_nilpotent(g: &LieAlgebra) -> bool {
    nilpotency_class(g).is_some()
}

/// The linear system whose kernel is `Der(g)`. Unknown `r * dim + c` is the
/// coefficient of `e_r` in `D(e_c)`.
pub fn derivation_constraints(g: &LieAlgebra) -> SparseMatrix {
    let n = g.dim();
    let mut m = SparseMatrix::zeros(n * n * n * n.saturating_sub(1) / 2, n * n);
    let mut row = 0;
    for a in 0..n {
        for b in a + 1..n {
            let ab = g.bracket_basis(a, b);
            for r in 0..n {
                // D[e_a, e_b] - [D e_a, e_b] - [e_a, D e_b], component r
                for (l, c) in &ab {
                    m.add_to(row, r * n + l, c.clone());
                }
                for t in 0..n {
                    let tb = g.structure_constant(t, b, r);
                    if !tb.is_zero() {
                        m.add_to(row, t * n + a, -tb);
                    }
                    let at = g.structure_constant(a, t, r);
                    if !at.is_zero() {
                        m.add_to(row, t * n + b, -at);
                    }
                }
                row += 1;
            }
        }
    }
    m
}

/// Dimension of the derivation algebra `Der(g)`.
pub fn derivation_dim(g: &LieAlgebra) -> usize {
    let n = g.dim();
    n * n - linalg::rank(&derivation_constraints(g))
}

/// Whether the matrix `d` (acting on coordinates) is a derivation of `g`.
/// Returns the first failing pair otherwise.
pub fn derivation_defect(g: &LieAlgebra, d: &SparseMatrix) -> Option<(usize, usize)> {
    let n = g.dim();
    let columns: Vec<Vec<Rational>> = (0..n).map(|c| d.column(c)).collect();
    for a in 0..n {
        for b in a + 1..n {
            let lhs = d.mul_vec(&g.bracket_dense(a, b));
            let mut ea = vec![Rational::zero(); n];
            ea[a] = crate::rational::one();
            let mut eb = vec![Rational::zero(); n];
            eb[b] = crate::rational::one();
            let r1 = g.bracket(&columns[a], &eb);
            let r2 = g.bracket(&ea, &columns[b]);
            if lhs.iter().zip(r1.iter().zip(&r2)).any(|(l, (x, y))| l != &(x + y)) {
                return Some((a, b));
            }
        }
    }
    None
}
