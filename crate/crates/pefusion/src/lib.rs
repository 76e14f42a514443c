//! Handcrafted-feature image classification: multiscale permutation-entropy
//! features fused with adjacent-line correlations, HOG and LBP descriptors,
//! classified by an RBF-kernel SVM trained with SMO.
//!
//! The crate is organised along the pipeline:
//!
//! - [`ordinal`] — Bandt–Pompe ordinal patterns and permutation entropy for
//!   1D sequences, including the bidirectional (geometric-mean) variant.
//! - [`imagefeat`] — entropy and correlation features over 2D images
//!   (rows, columns, diagonals, anti-diagonals, patches, adjacent-line
//!   Pearson correlations).
//! - [`descriptors`] — HOG and LBP computed from scratch.
//! - [`fusion`] — per-image feature assembly with a named-segment manifest,
//!   batch extraction and train-set standardization.
//! - [`datasets`] — IDX (MNIST-family) and CIFAR-10 binary ingestion plus
//!   deterministic class-balanced subsampling.
//! - [`svm`] — SMO-trained binary RBF SVMs, one-vs-one multiclass,
//!   stratified k-fold cross-validation and (C, gamma) grid search.
//! - [`io`] — the PEFM feature-matrix and PESV model file formats.

pub mod datasets;
pub mod descriptors;
pub mod error;
pub mod fusion;
pub mod imagefeat;
pub mod io;
pub mod ordinal;
pub mod svm;

pub use error::{Error, Result};
