//! Forecasting with sparse-but-informative variables (SIVs).
//!
//! An SIV is an auxiliary input channel that is zero at almost every
//! timepoint but has a known directional effect on the target signal when
//! nonzero (carbohydrates raise blood glucose, insulin boluses lower it).
//! This crate implements a linked encoder/decoder forecaster that isolates
//! SIV effects in a dedicated decoder and restricts their sign, together
//! with everything needed to study it end to end:
//!
//! - [`autodiff`]: a reverse-mode tape over dense `f64` arrays
//! - [`nn`]: LSTM cells, stacked encoders, linear maps, Adam
//! - [`model`]: the linked architecture, baselines, and ablations
//! - [`transform`]: scaling, sum-total SIV representation, windowing, splits
//! - [`datagen`]: toy and minimal-physiology glucose generators, corruption
//! - [`training`]: training loops, early stopping, resampling baselines
//! - [`evaluation`]: metrics, bootstrap CIs, SIV usage, experiment presets

pub mod autodiff;
pub mod config;
pub mod datagen;
pub mod evaluation;
pub mod model;
pub mod nn;
pub mod rng;
pub mod training;
pub mod transform;
