//! Syntax-guided diverse paraphrase generation.
//!
//! The library implements a two-stage pipeline. A reordering engine
//! ([`engine`]) walks a constituency parse top-down, abstracts pairs of
//! constituents, and uses a phrase-level transducer (the SOW model) to
//! propose diverse reorderings of the input sentence. A rearrangement-aware
//! seq2seq model (the REAP model, [`nn`]) then generates one paraphrase per
//! proposed reordering, conditioned on it through an extra set of position
//! embeddings added to the encoder output.
//!
//! Supporting subsystems:
//!
//! - [`syntax`] — parse-tree ingestion (PTB bracketings, dependency files)
//!   and permutation algebra.
//! - [`nn`] — a small transformer encoder-decoder with hand-rolled
//!   reverse-mode autodiff, BPE, coverage loss, training and decoding.
//! - [`align`] — training-data construction: corpus filtering, idf-weighted
//!   phrase alignment, tuple extraction, pseudo-ground-truth reorderings.
//! - [`metrics`] — BLEU/ROUGE/WER, pairwise diversity, rejection filtering,
//!   Kendall's tau compliance curves, oracle perplexity, paired bootstrap.
//! - [`pipeline`] — the end-to-end `build-data` / `train` / `generate` /
//!   `evaluate` / `reorder` workflows used by the CLI.
//!
//! Numeric kernels are generic over the [`Scalar`] type; concrete aliases
//! for the common instantiations live at the crate root.

pub mod align;
pub mod config;
pub mod engine;
pub mod metrics;
pub mod nn;
pub mod pipeline;
pub mod rng;
pub mod scalar;
pub mod synthetic;
pub mod syntax;

pub use scalar::Scalar;

/// Default training precision for model parameters and checkpoints.
pub type F = f32;

/// Autograd graph over the default training precision.
pub type Graph32 = nn::tensor::Graph<f32>;
/// Autograd graph in double precision (finite-difference oracles).
pub type Graph64 = nn::tensor::Graph<f64>;
/// Transformer in the default training precision.
pub type Transformer32 = nn::model::Transformer<f32>;
/// Transformer in double precision.
pub type Transformer64 = nn::model::Transformer<f64>;
