use alloc::vec::Vec;

use super::invariant::{invariant_cohomology, SAction};
use super::CohomologyError;
use crate::lie::{semidirect_product, LieAlgebra, Representation};
use crate::sl2::{irrep, sl2};

/// `dim H^k(V, V)^s`, `dim H^k(V, g)^s`, `dim H^k(V, g/V)^s` for
/// `g = sl2 ⋉ V_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LesRow {
    pub degree: usize,
    pub radical: usize,
    pub adjoint: usize,
    pub quotient: usize,
}

/// Checks specific to odd `m`, where the sequence breaks into four-term
/// pieces starting at each even degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSplitting {
    /// `H^k(V,V)^s = 0` and `H^{k+1}(V,g/V)^s = 0` for every even `k`.
    pub vanishing: bool,
    /// For each even `k`, the alternating sum of the four middle terms.
    pub four_term: Vec<(usize, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LesReport {
    pub m: usize,
    /// Degrees `0..=max(max_degree, m+1)`.
    pub rows: Vec<LesRow>,
    pub max_degree: usize,
    /// Alternating sum of all dimensions along the whole sequence.
    pub alternating_sum: i64,
    pub odd: Option<OddSplitting>,
}

impl LesReport {
    pub fn holds(&self) -> bool {
        self.alternating_sum == 0
            && self.odd.as_ref().is_none_or(|o| o.vanishing && o.four_term.iter().all(|&(_, s)| s == 0))
    }

    /// Rows up to the requested degree.
    pub fn shown(&self) -> &[LesRow] {
        &self.rows[..=self.max_degree.min(self.rows.len() - 1)]
    }
}

/// The three columns of the long exact sequence for `0 → V → g → g/V → 0`,
/// with the consistency verdicts.
pub fn les_report(m: usize, max_degree: usize) -> Result<LesReport, CohomologyError> {
    let v = irrep(m);
    let g = semidirect_product(&sl2(), &v)?;
    let n = LieAlgebra::abelian(m + 1);
    let top = max_degree.max(m + 1);
    let column = |module: Representation, s_on_w: Representation| -> Result<Vec<usize>, CohomologyError> {
        let s = SAction { on_radical: v.clone(), on_module: s_on_w };
        Ok(invariant_cohomology(&n, &module, &s, 0..=top)?.dims())
    };
    let ad = |range: core::ops::Range<usize>| range.map(|i| g.ad_matrix(i)).collect::<Vec<_>>();
    let radical = column(Representation::trivial(&n, m + 1), v.clone())?;
    let adjoint = column(
        Representation::new(n.clone(), g.dim(), ad(3..g.dim()))?,
        Representation::new(sl2(), g.dim(), ad(0..3))?,
    )?;
    let quotient = column(Representation::trivial(&n, 3), Representation::adjoint(&sl2()))?;
    let rows: Vec<LesRow> = (0..=top)
        .map(|k| LesRow { degree: k, radical: radical[k], adjoint: adjoint[k], quotient: quotient[k] })
        .collect();
    let alternating_sum = rows
        .iter()
        .map(|r| {
            let s = r.radical as i64 - r.adjoint as i64 + r.quotient as i64;
            if r.degree % 2 == 0 {
                s
            } else {
                -s
            }
        })
        .sum();
    let odd = (m % 2 == 1).then(|| {
        let even: Vec<usize> = (0..top).step_by(2).collect();
        let vanishing = even.iter().all(|&k| rows[k].radical == 0 && rows[k + 1].quotient == 0);
        let four_term = even
            .iter()
            .map(|&k| {
                let (a, b) = (&rows[k], &rows[k + 1]);
                (k, a.adjoint as i64 - a.quotient as i64 + b.radical as i64 - b.adjoint as i64)
            })
            .collect();
        OddSplitting { vanishing, four_term }
    });
    Ok(LesReport { m, rows, max_degree, alternating_sum, odd })
}
