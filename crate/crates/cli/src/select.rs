//! Turning `--algebra` / `--file` arguments into algebras.

use std::path::{Path, PathBuf};

use liecoh_core::catalog::{self, CatalogError};
use liecoh_core::lie::LieAlgebra;

use crate::file::{self, FileError};

/// Where an algebra comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    /// A catalog key or display label.
    Label(String),
    /// `sl2 ⋉ (V_{m_1} ⊕ ...)`, written `sl2xVm` or `sl2xV{a,b,...}`.
    Modules(Vec<usize>),
    File(PathBuf),
}

#[derive(Debug, thiserror::Error)]
pub enum SelectError {
    #[error("malformed module list in {0:?}; expected sl2xVm or sl2xV{{a,b,...}}")]
    Malformed(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    File(#[from] FileError),
}

impl Selector {
    /// Reads an `--algebra` argument.
    pub fn parse(text: &str) -> Result<Selector, SelectError> {
        let Some(rest) = text.strip_prefix("sl2xV") else {
            return Ok(Selector::Label(text.to_string()));
        };
        let list = match rest.strip_prefix('{') {
            Some(inner) => inner.strip_suffix('}').ok_or_else(|| SelectError::Malformed(text.into()))?,
            None => rest,
        };
        let modules: Result<Vec<usize>, _> = list.split(',').map(|m| m.trim().parse::<usize>()).collect();
        match modules {
            Ok(m) if !m.is_empty() => Ok(Selector::Modules(m)),
            _ => Err(SelectError::Malformed(text.into())),
        }
    }

    pub fn from_file(path: &Path) -> Selector {
        Selector::File(path.to_path_buf())
    }

    pub fn build(&self) -> Result<LieAlgebra, SelectError> {
        match self {
            Selector::Label(label) => Ok(catalog::build(label)?),
            Selector::Modules(m) => Ok(catalog::sl2_with_modules(m)?),
            Selector::File(path) => Ok(file::load(path)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand() {
        assert_eq!(Selector::parse("sl2xV2").unwrap(), Selector::Modules(vec![2]));
        assert_eq!(Selector::parse("sl2xV{1, 2}").unwrap(), Selector::Modules(vec![1, 2]));
        assert_eq!(Selector::parse("L_{5,1}").unwrap(), Selector::Label("L_{5,1}".into()));
        assert!(Selector::parse("sl2xV{1,2").is_err());
        assert!(Selector::parse("sl2xVx").is_err());
    }

    #[test]
    fn builds() {
        assert_eq!(Selector::parse("sl2xV{1,1}").unwrap().build().unwrap().dim(), 7);
        assert_eq!(Selector::parse("L_{6,2}").unwrap().build().unwrap().dim(), 6);
        assert!(matches!(
            Selector::parse("L_{9,41}").unwrap().build(),
            Err(SelectError::Catalog(CatalogError::ExternalDataRequired(_)))
        ));
    }
}
