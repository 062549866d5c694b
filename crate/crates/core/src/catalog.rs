//! Perfect non-semisimple Lie algebras of dimension at most 9, with recipes
//! that build them and their expected `(dim H^0, dim H^1, dim H^2)` adjoint
//! cohomology.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cohomology::{betti_numbers_with, CohomologyError, RankMethod};
use crate::lie::{
    direct_sum, free_nilpotent, heisenberg_from_symplectic, is_nilpotent, is_perfect, radical_sum,
    semidirect_by_derivations, LieAlgebra, LieError, Representation,
};
use crate::linalg::SparseMatrix;
use crate::rational::int;
use crate::sl2::{invariant_bilinear_forms, irrep, sl2, FormParity};

/// One summand of a radical carrying an `sl2`-action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    /// The abelian module `V_m`.
    Module(usize),
    /// `⊕ V_{m_i} ⊕ Cz` with `[u, v] = ω(u, v) z`, `ω = ⊕ ε_i ω_{m_i}` where
    /// `ω_m` is the invariant form on `V_m` with top-corner entry 1.
    Heisenberg { modules: &'static [usize], eps: &'static [i64] },
    /// The free nilpotent algebra on `V_generators` of the given class.
    Free { generators: usize, class: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recipe {
    /// `sl2 ⋉ (parts)`, optionally preceded by a further `sl2` direct summand.
    Semidirect { parts: &'static [Part], sl2_summand: bool },
    /// Structure constants must come from a file.
    External,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub label: &'static str,
    pub latex_name: &'static str,
    pub latex_label: &'static str,
    /// ASCII lookup keys; the first is canonical.
    pub keys: &'static [&'static str],
    pub dim: usize,
    pub recipe: Recipe,
    pub expected: Expected,
    /// Whether the entry is a row of the classification table.
    pub in_table: bool,
}

impl CatalogEntry {
    pub fn key(&self) -> &'static str {
        self.keys[0]
    }

    pub fn is_external(&self) -> bool {
        self.recipe == Recipe::External
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog label {0:?}")]
    UnknownLabel(String),
    #[error("{0} needs structure constants from a file")]
    ExternalDataRequired(&'static str),
    #[error(transparent)]
    Lie(#[from] LieError),
}

const N3: Part = Part::Heisenberg { modules: &[1], eps: &[1] };

macro_rules! entry {
    ($name:expr, $label:expr, $lname:expr, $llabel:expr, $keys:expr, $dim:expr, $recipe:expr, ($h0:expr, $h1:expr, $h2:expr)) => {
        CatalogEntry {
            name: $name,
            label: $label,
            latex_name: $lname,
            latex_label: $llabel,
            keys: $keys,
            dim: $dim,
            recipe: $recipe,
            expected: Expected { h0: $h0, h1: $h1, h2: $h2 },
            in_table: true,
        }
    };
}

const fn semi(parts: &'static [Part]) -> Recipe {
    Recipe::Semidirect { parts, sl2_summand: false }
}

const fn with_sl2(parts: &'static [Part]) -> Recipe {
    Recipe::Semidirect { parts, sl2_summand: true }
}

use Part::{Free, Module};

static ENTRIES: [CatalogEntry; 23] = [
    entry!(
        "sl2⋉V_1",
        "L_{5,1}",
        r"\mathfrak{sl}_2\ltimes V_1",
        "L_{5,1}",
        &["L_{5,1}"],
        5,
        semi(&[Module(1)]),
        (0, 1, 0)
    ),
    entry!(
        "sl2⋉V_2",
        "L_{6,4}≅L_{6,1}",
        r"\mathfrak{sl}_2\ltimes V_2",
        r"L_{6,4}\cong L_{6,1}",
        &["L_{6,4}", "L_{6,1}"],
        6,
        semi(&[Module(2)]),
        (0, 1, 1)
    ),
    entry!(
        "sl2⋉n_3",
        "L_{6,2}",
        r"\mathfrak{sl}_2\ltimes \mathfrak{n}_3",
        "L_{6,2}",
        &["L_{6,2}"],
        6,
        semi(&[N3]),
        (1, 1, 0)
    ),
    entry!(
        "sl2⋉V_3",
        "L_{7,6}",
        r"\mathfrak{sl}_2\ltimes V_3",
        "L_{7,6}",
        &["L_{7,6}"],
        7,
        semi(&[Module(3)]),
        (0, 1, 0)
    ),
    entry!(
        "sl2⋉(V_1⊕V_1)",
        "L_{7,7}",
        r"\mathfrak{sl}_2\ltimes (V_1\oplus V_1)",
        "L_{7,7}",
        &["L_{7,7}"],
        7,
        semi(&[Module(1), Module(1)]),
        (0, 4, 0)
    ),
    entry!(
        "sl2⊕(sl2⋉V_1)",
        "sl2⊕L_{5,1}",
        r"\mathfrak{sl}_2\oplus (\mathfrak{sl}_2\ltimes V_1)",
        r"\mathfrak{sl}_2\oplus L_{5,1}",
        &["sl2+L_{5,1}"],
        8,
        with_sl2(&[Module(1)]),
        (0, 1, 0)
    ),
    entry!(
        "sl2⋉V_4",
        "L_{8,21}",
        r"\mathfrak{sl}_2\ltimes V_4",
        "L_{8,21}",
        &["L_{8,21}"],
        8,
        semi(&[Module(4)]),
        (0, 1, 1)
    ),
    entry!(
        "sl2⋉(V_1⊕V_2)",
        "L_{8,22}",
        r"\mathfrak{sl}_2\ltimes (V_1\oplus V_2)",
        "L_{8,22}",
        &["L_{8,22}"],
        8,
        semi(&[Module(1), Module(2)]),
        (0, 2, 1)
    ),
    entry!(
        "sl2⋉(V_1⊕n_3)",
        "L_{8,13}^{ε=0}",
        r"\mathfrak{sl}_2\ltimes (V_1\oplus \mathfrak{n}_3)",
        r"L_{8,13}^{\varepsilon=0}",
        &["L_{8,13}^{eps=0}", "L_{8,13}^0"],
        8,
        semi(&[Part::Heisenberg { modules: &[1, 1], eps: &[1, 0] }]),
        (1, 3, 0)
    ),
    entry!(
        "sl2⋉f_{2,3}",
        "L_{8,15}",
        r"\mathfrak{sl}_2\ltimes \mathfrak{f}_{2,3}",
        "L_{8,15}",
        &["L_{8,15}"],
        8,
        semi(&[Free { generators: 1, class: 3 }]),
        (0, 1, 1)
    ),
    entry!(
        "sl2⋉_φ n_5",
        "L_{8,13}^1≅L_{8,13}^{-1}",
        r"\mathfrak{sl}_2\ltimes_{\phi} \mathfrak{n}_5",
        r"L_{8,13}^1\cong L_{8,13}^{-1}",
        &["L_{8,13}^1", "L_{8,13}^{eps=1}"],
        8,
        semi(&[Part::Heisenberg { modules: &[1, 1], eps: &[1, 1] }]),
        (1, 2, 1)
    ),
    entry!(
        "sl2⋉_ψ n_5",
        "L_{8,19}",
        r"\mathfrak{sl}_2\ltimes_{\psi} \mathfrak{n}_5",
        "L_{8,19}",
        &["L_{8,19}"],
        8,
        semi(&[Part::Heisenberg { modules: &[3], eps: &[1] }]),
        (1, 1, 0)
    ),
    entry!(
        "sl2⊕(sl2⋉V_2)",
        "sl2⊕L_{6,1}",
        r"\mathfrak{sl}_2\oplus (\mathfrak{sl}_2\ltimes V_2)",
        r"\mathfrak{sl}_2\oplus L_{6,1}",
        &["sl2+L_{6,1}"],
        9,
        with_sl2(&[Module(2)]),
        (0, 1, 1)
    ),
    entry!(
        "sl2⊕(sl2⋉n_3)",
        "sl2⊕L_{6,2}",
        r"\mathfrak{sl}_2\oplus (\mathfrak{sl}_2\ltimes \mathfrak{n}_3)",
        r"\mathfrak{sl}_2\oplus L_{6,2}",
        &["sl2+L_{6,2}"],
        9,
        with_sl2(&[N3]),
        (1, 1, 0)
    ),
    entry!(
        "sl2⋉V_5",
        "L_{9,59}",
        r"\mathfrak{sl}_2\ltimes V_5",
        "L_{9,59}",
        &["L_{9,59}"],
        9,
        semi(&[Module(5)]),
        (0, 1, 0)
    ),
    entry!(
        "sl2⋉(V_1⊕V_3)",
        "L_{9,60}",
        r"\mathfrak{sl}_2\ltimes (V_1\oplus V_3)",
        "L_{9,60}",
        &["L_{9,60}"],
        9,
        semi(&[Module(1), Module(3)]),
        (0, 2, 0)
    ),
    entry!(
        "sl2⋉(V_2⊕V_2)",
        "L_{9,61}",
        r"\mathfrak{sl}_2\ltimes (V_2\oplus V_2)",
        "L_{9,61}",
        &["L_{9,61}"],
        9,
        semi(&[Module(2), Module(2)]),
        (0, 4, 4)
    ),
    entry!(
        "sl2⋉(V_1⊕V_1⊕V_1)",
        "L_{9,63}",
        r"\mathfrak{sl}_2\ltimes (V_1\oplus V_1\oplus V_1)",
        "L_{9,63}",
        &["L_{9,63}"],
        9,
        semi(&[Module(1), Module(1), Module(1)]),
        (0, 9, 0)
    ),
    entry!(
        "sl2⋉(V_2⊕n_3)",
        "L_{9,58}",
        r"\mathfrak{sl}_2\ltimes (V_2\oplus \mathfrak{n}_3)",
        "L_{9,58}",
        &["L_{9,58}"],
        9,
        semi(&[Module(2), N3]),
        (1, 2, 0)
    ),
    entry!(
        "sl2⋉(n_3⊕n_3)",
        "L_{9,37}≅L_{9,42}",
        r"\mathfrak{sl}_2\ltimes (\mathfrak{n}_3\oplus \mathfrak{n}_3)",
        r"L_{9,37}\cong L_{9,42}",
        &["L_{9,37}", "L_{9,42}"],
        9,
        semi(&[N3, N3]),
        (2, 2, 0)
    ),
    entry!(
        "sl2⋉f_{3,2}",
        "L_{9,62}",
        r"\mathfrak{sl}_2\ltimes \mathfrak{f}_{3,2}",
        "L_{9,62}",
        &["L_{9,62}"],
        9,
        semi(&[Free { generators: 2, class: 2 }]),
        (0, 2, 2)
    ),
    entry!(
        "sl2⋉A_{6,4}",
        "L_{9,41}",
        r"\mathfrak{sl}_2\ltimes \mathcal{A}_{6,4}",
        "L_{9,41}",
        &["L_{9,41}"],
        9,
        Recipe::External,
        (2, 3, 1)
    ),
    CatalogEntry {
        name: "sl2⋉_φ n_5 (ε=-1)",
        label: "L_{8,13}^{-1}",
        latex_name: r"\mathfrak{sl}_2\ltimes_{\phi} \mathfrak{n}_5",
        latex_label: "L_{8,13}^{-1}",
        keys: &["L_{8,13}^{-1}", "L_{8,13}^{eps=-1}"],
        dim: 8,
        recipe: Recipe::Semidirect {
            parts: &[Part::Heisenberg { modules: &[1, 1], eps: &[1, -1] }],
            sl2_summand: false,
        },
        expected: Expected { h0: 1, h1: 2, h2: 1 },
        in_table: false,
    },
];

/// Every entry: the table rows in order, then extra entries.
pub fn entries() -> &'static [CatalogEntry] {
    &ENTRIES
}

/// The rows of the classification table, in order.
pub fn table_entries() -> impl Iterator<Item = &'static CatalogEntry> {
    ENTRIES.iter().filter(|e| e.in_table)
}

fn normalize(label: &str) -> String {
    label
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '⊕' => String::from("+"),
            'ε' => String::from("eps"),
            '−' => String::from("-"),
            c => String::from(c),
        })
        .collect()
}

/// Looks up an entry by any of its keys or its display label.
pub fn lookup(label: &str) -> Result<&'static CatalogEntry, CatalogError> {
    let wanted = normalize(label);
    ENTRIES
        .iter()
        .find(|e| e.keys.iter().any(|k| *k == wanted) || normalize(e.label) == wanted)
        .ok_or_else(|| CatalogError::UnknownLabel(label.into()))
}

pub fn build(label: &str) -> Result<LieAlgebra, CatalogError> {
    build_entry(lookup(label)?)
}

pub fn build_entry(entry: &CatalogEntry) -> Result<LieAlgebra, CatalogError> {
    match entry.recipe {
        Recipe::External => Err(CatalogError::ExternalDataRequired(entry.label)),
        Recipe::Semidirect { parts, sl2_summand } => {
            let (n, action) = radical(parts)?;
            let g = semidirect_by_derivations(&sl2(), &n, &action)?;
            let g = if sl2_summand { direct_sum(&sl2(), &g) } else { g };
            Ok(g.with_name(entry.name))
        }
    }
}

/// The radical of a recipe and the `sl2`-action on it.
pub fn radical(parts: &[Part]) -> Result<(LieAlgebra, Representation), CatalogError> {
    let mut acc: Option<(LieAlgebra, Representation)> = None;
    for part in parts {
        let next = part_radical(part)?;
        acc = Some(match acc {
            None => next,
            Some((n, a)) => radical_sum((&n, &a), (&next.0, &next.1))?,
        });
    }
    Ok(acc.unwrap_or_else(|| (LieAlgebra::abelian(0), Representation::trivial(&sl2(), 0))))
}

fn part_radical(part: &Part) -> Result<(LieAlgebra, Representation), CatalogError> {
    match *part {
        Part::Module(m) => Ok((LieAlgebra::abelian(m + 1), irrep(m))),
        Part::Free { generators, class } => Ok(free_nilpotent(&irrep(generators), class)?),
        Part::Heisenberg { modules, eps } => {
            let mut rho = Representation::trivial(&sl2(), 0);
            let mut omega = SparseMatrix::zeros(0, 0);
            for (&m, &e) in modules.iter().zip(eps) {
                rho = rho.direct_sum(&irrep(m))?;
                omega = omega.block_diag(&symplectic_form(m).scale(&int(e)));
            }
            Ok(heisenberg_from_symplectic(&rho, &omega)?)
        }
    }
}

/// The invariant antisymmetric form on `V_m` (odd `m`) with `ω(v_0, v_m) = 1`.
pub fn symplectic_form(m: usize) -> SparseMatrix {
    invariant_bilinear_forms(&irrep(m), FormParity::Antisymmetric)
        .into_iter()
        .next()
        .unwrap_or_else(|| SparseMatrix::zeros(m + 1, m + 1))
}

/// `sl2 ⋉ (V_{m_1} ⊕ ... ⊕ V_{m_r})`.
pub fn sl2_with_modules(modules: &[usize]) -> Result<LieAlgebra, CatalogError> {
    let mut rho = Representation::trivial(&sl2(), 0);
    for &m in modules {
        rho = rho.direct_sum(&irrep(m))?;
    }
    let label: Vec<String> = modules.iter().map(|m| format!("V_{m}")).collect();
    let name =
        if modules.len() == 1 { format!("sl2⋉{}", label[0]) } else { format!("sl2⋉({})", label.join("⊕")) };
    Ok(crate::lie::semidirect_product(&sl2(), &rho)?.with_name(name))
}

/// Outcome of checking one catalog row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowOutcome {
    Computed {
        h0: usize,
        h1: usize,
        h2: usize,
        perfect: bool,
        dim: usize,
    },
    /// External row with no algebra supplied.
    Skipped,
    Error(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReport {
    pub entry: &'static CatalogEntry,
    pub outcome: RowOutcome,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        match self.outcome {
            RowOutcome::Computed { h0, h1, h2, perfect, dim } => {
                perfect && dim == self.entry.dim && Expected { h0, h1, h2 } == self.entry.expected
            }
            _ => false,
        }
    }

    pub fn skipped(&self) -> bool {
        self.outcome == RowOutcome::Skipped
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub rows: Vec<RowReport>,
}

impl TableReport {
    /// Every row either passed or was skipped.
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed() || r.skipped())
    }

    pub fn passed_count(&self) -> usize {
        self.rows.iter().filter(|r| r.passed()).count()
    }
}

/// Builds (or takes from `external`) the algebra of one entry and computes
/// its first three adjoint cohomology dimensions.
pub fn verify_entry(
    entry: &'static CatalogEntry,
    external: Option<&LieAlgebra>,
    method: &mut RankMethod<'_>,
) -> RowReport {
    let algebra = match (entry.recipe, external) {
        (_, Some(g)) => Ok(g.clone()),
        (Recipe::External, None) => return RowReport { entry, outcome: RowOutcome::Skipped },
        _ => build_entry(entry).map_err(|e| format!("{e}")),
    };
    let outcome = algebra.and_then(|g| {
        let table = betti_numbers_with(&g, &Representation::adjoint(&g), 0..=2, method)
            .map_err(|e: CohomologyError| format!("{e}"))?;
        let h = |k| table.dim(k).unwrap_or(0);
        Ok(RowOutcome::Computed { h0: h(0), h1: h(1), h2: h(2), perfect: is_perfect(&g), dim: g.dim() })
    });
    RowReport { entry, outcome: outcome.unwrap_or_else(RowOutcome::Error) }
}

/// Checks every table row, using `external` algebras keyed by entry key
/// for rows without a recipe.
pub fn verify_table(external: &BTreeMap<String, LieAlgebra>, method: &mut RankMethod<'_>) -> TableReport {
    let rows = table_entries().map(|e| verify_entry(e, external.get(e.key()), method)).collect();
    TableReport { rows }
}

/// The radical of a built entry is nilpotent.
pub fn radical_is_nilpotent(entry: &CatalogEntry) -> Result<bool, CatalogError> {
    match entry.recipe {
        Recipe::External => Err(CatalogError::ExternalDataRequired(entry.label)),
        Recipe::Semidirect { parts, .. } => Ok(is_nilpotent(&radical(parts)?.0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::center;

    #[test]
    fn table_shape() {
        assert_eq!(table_entries().count(), 22);
        assert_eq!(entries().len(), 23);
        let mut keys: Vec<&str> = entries().iter().flat_map(|e| e.keys.iter().copied()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), entries().iter().map(|e| e.keys.len()).sum::<usize>());
    }

    #[test]
    fn builds_match_stated_dimensions() {
        for e in entries().iter().filter(|e| !e.is_external()) {
            let g = build_entry(e).unwrap();
            assert_eq!(g.dim(), e.dim, "{}", e.label);
            assert!(is_perfect(&g), "{}", e.label);
            assert!(radical_is_nilpotent(e).unwrap(), "{}", e.label);
        }
    }

    #[test]
    fn lookup_examples() {
        assert_eq!(build("L_{5,1}").unwrap().dim(), 5);
        let g = build("L_{6,2}").unwrap();
        assert_eq!((g.dim(), center(&g).len()), (6, 1));
        assert_eq!(build("L_{9,61}").unwrap().dim(), 9);
        assert_eq!(lookup("L_{8,13}^{ε=0}").unwrap().key(), "L_{8,13}^{eps=0}");
        assert_eq!(lookup("sl2 ⊕ L_{5,1}").unwrap().dim, 8);
        assert_eq!(lookup("L_{6,1}").unwrap().key(), "L_{6,4}");
        assert_eq!(build("L_{9,41}"), Err(CatalogError::ExternalDataRequired("L_{9,41}")));
        assert!(matches!(build("L_{4,1}"), Err(CatalogError::UnknownLabel(_))));
    }

    #[test]
    fn symplectic_forms_are_normalized() {
        let w = symplectic_form(3);
        assert_eq!(w.at(0, 3), int(1));
        assert_eq!(w.at(3, 0), int(-1));
    }

    #[test]
    fn module_shorthand() {
        let g = sl2_with_modules(&[1, 1]).unwrap();
        assert_eq!(g, build("L_{7,7}").unwrap());
        assert_eq!(g.name(), "sl2⋉(V_1⊕V_1)");
    }
}
