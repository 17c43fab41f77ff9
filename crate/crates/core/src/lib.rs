//! # lexlab-core
//!
//! A numerical laboratory for the information-theoretic emergence of
//! signal-object languages and its rank-frequency consequences:
//!
//! - [`infotheory`] — entropy, mutual information, and the least-effort
//!   energy `omega(lambda) = lambda*I(S,R) - (1-lambda)*H(S)` over binary
//!   signal-object matrices.
//! - [`emergence`] — exhaustive and genetic-algorithm search for
//!   energy-maximizing lexicons, and lambda sweeps that expose the phase
//!   transition in lexicon size and mutual information.
//! - [`slavi`] — the Slavi integral transform
//!   `S[N](r) = integral_0^1 N(lambda) e^(-lambda r) dlambda` mapping bias
//!   functions to rank-frequency functions, with closed forms, adaptive
//!   quadrature, scaling-bound checks, and Zipf-exponent fitting.
//! - [`neuralnet`] — a minimal dense-layer substrate with manual
//!   log-probability backpropagation for REINFORCE-style updates.
//! - [`refgame`] — a speaker-listener referential game trained with
//!   bias-scaled REINFORCE, plus vocabulary-size and bias sweeps.
//!
//! Everything is deterministic: all randomness flows through [`rng::RngStream`],
//! a fixed, documented 64-bit generator, so identical seeds reproduce
//! bit-identical experiments. With the `parallel` feature (default), bulk
//! loops run on the rayon thread pool; outputs do not depend on thread count.

pub mod emergence;
pub mod exec;
pub mod infotheory;
pub mod neuralnet;
pub mod refgame;
pub mod rng;
pub mod slavi;
pub mod stats;

pub use infotheory::{Bias, InfoMeasures, LexicalMatrix};
pub use rng::RngStream;
