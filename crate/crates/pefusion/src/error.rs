//! Crate-wide error type.

use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// A window or vector had a different length than the operation requires.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// A series is too short for the requested embedding.
    #[error(
        "series of length {actual} too short for d={d}, tau={tau}: need at least {required} samples"
    )]
    InsufficientLength {
        required: usize,
        actual: usize,
        d: usize,
        tau: usize,
    },

    /// A configuration value violates its invariant.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// An image (or matrix) does not fit the configuration or operation.
    #[error("geometry mismatch: {0}")]
    Geometry(String),

    /// A pixel query fell outside the valid domain of an operator.
    #[error("position ({x}, {y}) is within {margin} pixels of the border")]
    OutOfDomain { x: usize, y: usize, margin: usize },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// An IDX file began with an unexpected magic number.
    #[error("bad IDX magic: expected {expected:#010x}, found {found:#010x}")]
    BadMagic { expected: u32, found: u32 },

    /// A file ended before its header-declared payload.
    #[error("truncated file: {0}")]
    Truncated(String),

    /// Image and label files disagree on the item count.
    #[error("count mismatch: {images} images vs {labels} labels")]
    CountMismatch { images: usize, labels: usize },

    /// Generic malformed-content error for binary and JSON formats.
    #[error("malformed data: {0}")]
    Format(String),

    /// A label exceeds the declared class count.
    #[error("label {label} out of range for {class_count} classes")]
    LabelOutOfRange { label: u32, class_count: u32 },

    /// A class has fewer members than an operation needs.
    #[error("class {class} has {available} samples, {requested} required")]
    InsufficientClass {
        class: u32,
        available: usize,
        requested: usize,
    },

    /// Binary SVM training received only one label value.
    #[error("training set contains a single class; binary SVM needs both labels")]
    SingleClass,

    /// A model was applied to features built with a different pipeline config.
    #[error("fingerprint mismatch: features built with different pipeline config")]
    FingerprintMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
