//! Library half of the `evenzeta` command: identity documents, renderers,
//! verification suites and the bundled reference examples.

pub mod document;
pub mod examples;
pub mod render;
pub mod suites;

use thiserror::Error;

pub use document::{build_identity, IdentityDocument, IdentityKindArg, IdentityRequest, WeightInput};

/// Errors surfaced by the command line. Every variant is a usage error
/// (exit code 2) except [`CliError::Io`].
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] evenzeta::Error),
    #[error("invalid identity document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Tool version recorded in every generated document.
pub const PROVENANCE: &str = concat!("evenzeta ", env!("CARGO_PKG_VERSION"));
