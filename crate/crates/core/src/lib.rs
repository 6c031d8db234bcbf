//! Class-conditional generative modeling of continuous latent sequences via
//! iterative mask-based parallel decoding with a lightweight MLP diffusion head.
//!
//! The crate covers the full desk-scale pipeline:
//!
//! - [`synthdata`]: procedural class-conditioned latent grids plus a frozen
//!   feature oracle standing in for pretrained embedding networks,
//! - [`latent`]: patching between grids and latent sequences,
//! - [`masking`]: training masks, the cosine mask schedule and random
//!   position selection with the subset property,
//! - [`network`]: the two-stage transformer latent encoder and the diffusion
//!   head, with hand-written reverse-mode gradients,
//! - [`diffusion`]: noise schedules, forward corruption, the masked diffusion
//!   loss, reverse sampling and classifier-free guidance,
//! - [`trainer`]: unconditional pre-training and conditional training,
//! - [`decoder`]: the iterative parallel decoding loop and its single-pass
//!   baseline,
//! - [`evalmetrics`]: Frechet distance, class KL, inception score, alignment,
//! - [`bench`]: the latency/throughput measurement harness,
//! - [`checkpoint`]: text-manifest + raw-f32-tensor persistence.
//!
//! Everything is deterministic under a single seed: every random draw comes
//! from a [`rng`] substream keyed by (seed, purpose, indices), never from
//! shared mutable RNG state.
//!
//! With the default `parallel` feature, batch items and per-position sampling
//! chains run on rayon; builds with `--no-default-features` run the same code
//! sequentially. Both paths produce bitwise-identical results because every
//! matrix product uses the row-independent kernels in [`linalg`].

pub mod bench;
pub mod checkpoint;
pub mod config;
pub mod decoder;
pub mod diffusion;
pub mod error;
pub mod evalmetrics;
pub mod latent;
pub mod linalg;
pub mod masking;
pub mod network;
pub mod rng;
pub mod synthdata;
pub mod trainer;

mod par;

pub use error::{Error, Result};
