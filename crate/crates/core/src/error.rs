use thiserror::Error;

/// Errors raised by the library. Every operation is pure, so an error always
/// describes something wrong with the inputs (or an exhausted budget).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed scalar, vector or document text.
    #[error("parse error: {0}")]
    Parse(String),

    /// Dimensions of the operands do not agree.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// An operation was called outside its domain (bottom entries where
    /// finite ones are required, a half-space with `I ∪ J ≠ {1..n}`, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The object is degenerate for the requested operation, e.g.
    /// dehomogenizing a cone that has no point with a finite last coordinate.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// An enumeration would exceed its candidate budget.
    #[error("budget exceeded: at least {required} candidates needed, budget is {budget}")]
    Resource { required: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape_check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Shape(what()))
    }
}
