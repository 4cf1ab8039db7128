use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unknown catalog id: {0}")]
    CatalogMiss(String),
    #[error("unknown tiling id: {0}")]
    RegistryMiss(String),
    #[error("closed-form branch failure: {0}")]
    FormulaBranch(String),
    #[error("inconsistent AVC: {0}")]
    InconsistentAvc(String),
    #[error("site is not a flippable module: {0}")]
    SiteNotFlippable(String),
    #[error("realization closure failure: max defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    ClosureFailure { defect: f64, tol: f64 },
    #[error("invalid tiling data: {0}")]
    BadTiling(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
