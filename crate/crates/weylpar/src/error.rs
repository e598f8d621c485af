//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by construction, enumeration, and verification routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid Cartan type `{input}`: {reason}")]
    InvalidType { input: String, reason: String },

    #[error("invalid node subset: {0}")]
    InvalidSubset(String),

    /// The requested construction is only defined when the parabolic type
    /// carries at least one cuspidal label.
    #[error("cuspidality violation: parabolic type {levi} has an empty cuspidal set")]
    CuspidalityViolation { levi: String },

    /// A generator that must square to the identity failed to do so. This
    /// indicates a bug or a call outside the supported hypothesis.
    #[error("involution check failed for sigma_{h} over J = {subset}")]
    InvolutionFailure { h: usize, subset: String },

    #[error("degenerate order formula (zero denominator) for J = {subset}, h = {h}, h' = {hp}")]
    DegenerateFormula { subset: String, h: usize, hp: usize },

    /// The closed-form bond order disagrees with the order computed from the
    /// generator permutations.
    #[error("Coxeter matrix mismatch at ({h},{hp}): permutation order {direct}, formula value {formula}")]
    MatrixMismatch {
        h: usize,
        hp: usize,
        direct: u64,
        formula: String,
    },

    #[error("unrecognized Coxeter diagram: {0}")]
    UnknownDiagram(String),

    #[error("bound exceeded: computation needs {needed} elements, configured bound is {bound}")]
    BoundExceeded { needed: u128, bound: u128 },

    #[error("label {label} is not cuspidal for type {ty}")]
    LabelNotCuspidal { label: String, ty: String },

    #[error("invalid group specification: {0}")]
    InvalidGroup(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("unsupported option: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
