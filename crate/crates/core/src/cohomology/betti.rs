use alloc::string::String;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use rand_core::RngCore;

use super::complex::{cochain_dim, differential};
use super::CohomologyError;
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::{self, modular, SparseMatrix};

/// One degree of a Betti table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiRow {
    pub degree: usize,
    pub cochain_dim: usize,
    /// Rank of the outgoing differential, when it was computed.
    pub rank: Option<usize>,
    pub dim: usize,
}

/// Which rank computation produced a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankSource {
    Exact,
    /// Two primes agreed on every rank and the table passed its
    /// consistency checks.
    Modular,
    /// Assembled from other tables rather than from ranks.
    Assembled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub algebra: String,
    pub module: String,
    pub rows: Vec<BettiRow>,
    pub source: RankSource,
    /// Cochains vanish above this degree, so rows up to it cover the whole
    /// complex.
    pub top_degree: usize,
}

impl BettiTable {
    /// Cohomology dimensions in row order.
    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.dim).collect()
    }

    /// `dim H^k`, or `None` if degree `k` was not computed.
    pub fn dim(&self, k: usize) -> Option<usize> {
        self.rows.iter().find(|r| r.degree == k).map(|r| r.dim)
    }

    /// Whether rows `0..=top_degree` are all present.
    pub fn is_complete(&self) -> bool {
        (0..=self.top_degree).all(|k| self.rows.iter().any(|r| r.degree == k))
    }

    /// `Σ (-1)^k dim H^k - Σ (-1)^k dim C^k`, over the computed rows.
    pub fn euler_defect(&self) -> i128 {
        self.rows
            .iter()
            .map(|r| {
                let s = if r.degree % 2 == 0 { 1 } else { -1 };
                s * (r.dim as i128 - r.cochain_dim as i128)
            })
            .sum()
    }

    /// `Σ (-1)^k dim H^k`.
    pub fn euler_characteristic(&self) -> i128 {
        self.rows.iter().map(|r| if r.degree % 2 == 0 { r.dim as i128 } else { -(r.dim as i128) }).sum()
    }
}

/// How differential ranks are computed.
pub enum RankMethod<'a> {
    Exact,
    /// Rank modulo two random primes, falling back to the exact path for any
    /// matrix on which they disagree or if the table fails its checks.
    Modular(&'a mut dyn RngCore),
}

/// Ranks `ranks[k - lo]` of `d_k` for `k` in `lo..=hi`, plus whether all were
/// exact.
pub(crate) fn ranks_with<F>(
    lo: usize,
    hi: usize,
    method: &mut RankMethod<'_>,
    mut matrix: F,
) -> Result<(Vec<usize>, bool), CohomologyError>
where
    F: FnMut(usize) -> Result<SparseMatrix, CohomologyError>,
{
    let mut out = Vec::with_capacity(hi + 1 - lo);
    let mut exact = true;
    for k in lo..=hi {
        let m = matrix(k)?;
        let r = match method {
            RankMethod::Exact => linalg::rank(&m),
            RankMethod::Modular(rng) => {
                let result = modular::two_prime_rank(&m, *rng);
                if result.agreed {
                    exact = false;
                    result.rank
                } else {
                    linalg::rank(&m)
                }
            }
        };
        out.push(r);
    }
    Ok((out, exact))
}

/// Table from cochain dimensions `dims[k]` and ranks `ranks[k]` of `d_k`
/// (with `d_{-1} = 0`), for degrees `degrees`. Returns `None` if some
/// cohomology dimension would be negative.
pub(crate) fn assemble(
    algebra: &str,
    module: &str,
    degrees: RangeInclusive<usize>,
    dims: impl Fn(usize) -> usize,
    rank: impl Fn(usize) -> usize,
    top_degree: usize,
    source: RankSource,
) -> Option<BettiTable> {
    let mut rows = Vec::new();
    for k in degrees {
        let c = dims(k);
        let incoming = if k == 0 { 0 } else { rank(k - 1) };
        let outgoing = rank(k);
        let h = c.checked_sub(outgoing)?.checked_sub(incoming)?;
        rows.push(BettiRow { degree: k, cochain_dim: c, rank: Some(outgoing), dim: h });
    }
    Some(BettiTable { algebra: algebra.into(), module: module.into(), rows, source, top_degree })
}

/// Exact `dim H^k(g, M)` for `k` in `degrees`.
pub fn betti_numbers(
    g: &LieAlgebra,
    module: &Representation,
    degrees: RangeInclusive<usize>,
) -> Result<BettiTable, CohomologyError> {
    betti_numbers_with(g, module, degrees, &mut RankMethod::Exact)
}

pub fn betti_numbers_with(
    g: &LieAlgebra,
    module: &Representation,
    degrees: RangeInclusive<usize>,
    method: &mut RankMethod<'_>,
) -> Result<BettiTable, CohomologyError> {
    if module.algebra() != g {
        return Err(CohomologyError::ModuleMismatch);
    }
    let (n, w) = (g.dim(), module.dim());
    let (lo, hi) = (*degrees.start(), *degrees.end());
    if lo > hi {
        let label = module_label(g, module);
        return Ok(BettiTable {
            algebra: g.name().into(),
            module: label,
            rows: Vec::new(),
            source: RankSource::Exact,
            top_degree: n,
        });
    }
    let first = lo.saturating_sub(1);
    let compute = |method: &mut RankMethod<'_>| {
        ranks_with(first, hi, method, |k| {
            if k > n {
                Ok(SparseMatrix::zeros(0, 0))
            } else {
                differential(g, module.actions(), w, k)
            }
        })
    };
    let build = |ranks: &[usize], source| {
        assemble(
            g.name(),
            &module_label(g, module),
            lo..=hi,
            |k| cochain_dim(n, w, k),
            |k| if k < first { 0 } else { ranks[k - first] },
            n,
            source,
        )
    };
    let (ranks, exact) = compute(method)?;
    if exact {
        return Ok(build(&ranks, RankSource::Exact).expect("exact ranks give nonnegative dimensions"));
    }
    if let Some(table) = build(&ranks, RankSource::Modular) {
        if !table.is_complete() || table.euler_defect() == 0 {
            return Ok(table);
        }
    }
    let (ranks, _) = compute(&mut RankMethod::Exact)?;
    Ok(build(&ranks, RankSource::Exact).expect("exact ranks give nonnegative dimensions"))
}

fn module_label(g: &LieAlgebra, module: &Representation) -> String {
    if module.actions().iter().all(SparseMatrix::is_zero) {
        alloc::format!("trivial({})", module.dim())
    } else if module.dim() == g.dim() && *module == Representation::adjoint(g) {
        "adjoint".into()
    } else {
        alloc::format!("module({})", module.dim())
    }
}
